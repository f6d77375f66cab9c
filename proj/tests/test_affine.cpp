#include "doctest.h"
#include "momap/affine.hpp"
#include "momap/errors.hpp"
#include "momap/exterior.hpp"
#include "test_utils.hpp"

using namespace momap;
using namespace momap::testutil;

TEST_SUITE("affine") {

TEST_CASE("point arithmetic identities") {
  std::mt19937_64 rng(21);
  const Event zero{};
  CHECK(max_abs(point_diff(point_plus(zero, FourVector{1, 2, 3, 4}),
                           Event{1, 2, 3, 4})) == 0.0);
  for (int rep = 0; rep < 100; ++rep) {
    const Event p = random_event(rng, 5.0);
    const Event q = random_event(rng, 5.0);
    const Event o = random_event(rng, 5.0);
    const FourVector v = random_vector(rng, 5.0);
    const FourVector w = random_vector(rng, 5.0);

    CHECK(max_abs(point_diff(point_plus(p, FourVector{}), p)) == 0.0);
    CHECK(max_abs(point_diff(point_plus(p, v), p) - v) < 1e-12);
    CHECK(max_abs(point_diff(p, p)) == 0.0);
    // associativity of the action
    CHECK(max_abs(point_diff(point_plus(point_plus(p, v), w), point_plus(p, v + w))) < 1e-12);
    // both difference-map identities
    CHECK(max_abs(point_diff(p, o) + point_diff(o, q) - point_diff(p, q)) < 1e-12);
    CHECK(max_abs(point_diff(point_plus(p, point_diff(q, o)), point_plus(q, point_diff(p, o)))) <
          1e-12);
  }
}

TEST_CASE("global frame is the identity chart") {
  const AffineFrame f = AffineFrame::global();
  CHECK(f.is_orthonormal());
  const Event p{1.5, -2.0, 0.25, 3.0};
  const auto r = f.coords(p);
  for (int a = 0; a < 4; ++a) CHECK(r[static_cast<std::size_t>(a)] == p[a]);
}

TEST_CASE("frame round trip and affine transition") {
  std::mt19937_64 rng(22);
  for (int rep = 0; rep < 30; ++rep) {
    std::array<FourVector, 4> basis;
    for (auto& e : basis) e = random_vector(rng, 1.0);
    basis[0][0] += 3.0;  // keep it comfortably invertible
    basis[1][1] += 3.0;
    basis[2][2] += 3.0;
    basis[3][3] += 3.0;
    const AffineFrame f(random_event(rng), basis);

    std::array<FourVector, 4> basis2;
    for (auto& e : basis2) e = random_vector(rng, 1.0);
    basis2[0][0] += 3.0;
    basis2[1][1] += 3.0;
    basis2[2][2] += 3.0;
    basis2[3][3] += 3.0;
    const AffineFrame f2(random_event(rng), basis2);

    const Event p = random_event(rng, 4.0);
    const auto r = f.coords(p);
    CHECK(max_abs(point_diff(f.point(r), p)) < 1e-10);

    // transition r -> coords(f2, point(f, r)) must be affine: second
    // differences vanish
    auto transition = [&](const std::array<double, 4>& rr) { return f2.coords(f.point(rr)); };
    std::array<double, 4> r0{};
    std::array<double, 4> d1{};
    std::array<double, 4> d2{};
    for (int a = 0; a < 4; ++a) {
      r0[static_cast<std::size_t>(a)] = uniform(rng, -2, 2);
      d1[static_cast<std::size_t>(a)] = uniform(rng, -2, 2);
      d2[static_cast<std::size_t>(a)] = uniform(rng, -2, 2);
    }
    auto plus = [](std::array<double, 4> x, const std::array<double, 4>& y) {
      for (std::size_t i = 0; i < 4; ++i) x[i] += y[i];
      return x;
    };
    const auto t0 = transition(r0);
    const auto t1 = transition(plus(r0, d1));
    const auto t2 = transition(plus(r0, d2));
    const auto t12 = transition(plus(plus(r0, d1), d2));
    for (std::size_t a = 0; a < 4; ++a)
      CHECK(std::abs(t12[a] - t1[a] - t2[a] + t0[a]) < 1e-10);

    // the transition matches theta'(o - o') + theta'(e_b) r^b
    const auto direct = transition(r0);
    std::array<double, 4> assembled = f2.coords(f.point({0, 0, 0, 0}));
    for (int b = 0; b < 4; ++b) {
      // theta'(e_b) is the coordinate image of the b-th basis direction
      const auto eb = f2.coords(point_plus(f2.origin(), f.basis()[static_cast<std::size_t>(b)]));
      for (std::size_t a = 0; a < 4; ++a)
        assembled[a] += eb[a] * r0[static_cast<std::size_t>(b)];
    }
    for (std::size_t a = 0; a < 4; ++a) CHECK(direct[a] == doctest::Approx(assembled[a]).epsilon(1e-9));
  }
}

TEST_CASE("the orthonormal flag tracks the metric") {
  const std::array<FourVector, 4> scaled = {FourVector{2, 0, 0, 0}, FourVector{0, 1, 0, 0},
                                            FourVector{0, 0, 1, 0}, FourVector{0, 0, 0, 1}};
  CHECK_FALSE(AffineFrame(Event{}, scaled).is_orthonormal());
  const double r = 1.0 / std::sqrt(2.0);
  const std::array<FourVector, 4> rotated = {FourVector{1, 0, 0, 0}, FourVector{0, r, r, 0},
                                             FourVector{0, -r, r, 0}, FourVector{0, 0, 0, 1}};
  CHECK(AffineFrame(Event{}, rotated).is_orthonormal());
}

TEST_CASE("singular frame is rejected") {
  std::array<FourVector, 4> basis = {FourVector{1, 0, 0, 0}, FourVector{1, 0, 0, 0},
                                     FourVector{0, 0, 1, 0}, FourVector{0, 0, 0, 1}};
  CHECK_THROWS_AS(AffineFrame(Event{}, basis), InvariantViolation);
}

TEST_CASE("hyperplane validation") {
  CHECK_THROWS_AS(Hyperplane(FourVector{0.5, 0, 0, 0}, Event{}, 0.0), InvariantViolation);
  CHECK_THROWS_AS(Hyperplane(FourVector{-1, 0, 0, 0}, Event{}, 0.0), InvariantViolation);
  const Hyperplane s(FourVector{1, 0, 0, 0}, Event{0, 1, 2, 3}, 2.5);
  CHECK(s.base_point()[0] == 2.5);
  CHECK(s.base_point()[1] == 1.0);
}

TEST_CASE("rest frame triad is the spatial basis") {
  const Hyperplane s(FourVector{1, 0, 0, 0}, Event{}, 0.0);
  const auto f = hyperplane_triad(s);
  CHECK(max_abs(f[0] - FourVector{0, 1, 0, 0}) == 0.0);
  CHECK(max_abs(f[1] - FourVector{0, 0, 1, 0}) == 0.0);
  CHECK(max_abs(f[2] - FourVector{0, 0, 0, 1}) == 0.0);
}

TEST_CASE("boosted triads are orthonormal, orthogonal to u, and oriented") {
  std::mt19937_64 rng(23);
  const Metric g = Metric::minkowski(4);
  for (int orientation : {+1, -1}) {
    const PForm eps = volume_form(g, orientation);
    for (int rep = 0; rep < 50; ++rep) {
      const FourVector u = random_observer(rng);
      const Hyperplane s(u, random_event(rng), uniform(rng));
      const auto f = hyperplane_triad(s, orientation);
      for (int i = 0; i < 3; ++i) {
        CHECK(std::abs(mink_dot(u, f[static_cast<std::size_t>(i)])) < 1e-12);
        for (int j = 0; j < 3; ++j) {
          const double target = (i == j) ? -1.0 : 0.0;
          CHECK(std::abs(mink_dot(f[static_cast<std::size_t>(i)], f[static_cast<std::size_t>(j)]) -
                         target) < 1e-12);
        }
      }
      // positively oriented tetrad, so the induced measure evaluates to +1
      const std::vector<std::vector<double>> tetrad = {to_vec(u), to_vec(f[0]), to_vec(f[1]),
                                                       to_vec(f[2])};
      CHECK(evaluate(eps, tetrad) == doctest::Approx(1.0).epsilon(1e-12));
      const PForm dmu = hodge(one_form(lower_index(u)), g, eps);
      CHECK(evaluate3(dmu, f[0], f[1], f[2]) == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

}  // TEST_SUITE
