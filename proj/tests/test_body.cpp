#include <cmath>

#include "doctest.h"
#include "momap/body.hpp"
#include "momap/errors.hpp"
#include "test_utils.hpp"

using namespace momap;
using namespace momap::testutil;

namespace {

FourVector boosted_u(double vx, double vy = 0, double vz = 0) {
  const double b2 = vx * vx + vy * vy + vz * vz;
  const double gamma = 1.0 / std::sqrt(1.0 - b2);
  return {gamma, gamma * vx, gamma * vy, gamma * vz};
}

SampledField time_modulated_field(double amplitude, double omega) {
  // deliberately non-conserved: an oscillating energy density at rest
  const DustBlob carrier(FourVector{1, 0, 0, 0}, Event{}, 1.0, 1.0);
  auto eval = [carrier, amplitude, omega](const Event& x) {
    Matrix4 t = carrier.stress_at(x);
    return t * (1.0 + amplitude * std::sin(omega * x[0]));
  };
  return SampledField{eval, carrier.tube()};
}

}  // namespace

TEST_SUITE("body") {

TEST_CASE("blob validation") {
  CHECK_THROWS_AS(DustBlob(FourVector{1, 0.5, 0, 0}, Event{}, 1.0, 1.0), InvariantViolation);
  CHECK_THROWS_AS(DustBlob(FourVector{1, 0, 0, 0}, Event{}, -1.0, 1.0), InvariantViolation);
  CHECK_THROWS_AS(DustBlob(FourVector{1, 0, 0, 0}, Event{}, 1.0, -0.5), InvariantViolation);
}

TEST_CASE("rest blob density and support") {
  const DustBlob blob(FourVector{1, 0, 0, 0}, Event{}, 2.0, 3.0);
  const Body b = Body::from_blob(blob);

  const Matrix4 at_center = eval_T(b, Event{});
  CHECK(at_center(0, 0) == 3.0);
  for (int i = 1; i < 4; ++i) CHECK(at_center(i, i) == 0.0);
  CHECK(at_center(0, 1) == 0.0);

  // zero outside the support, at any time
  CHECK(max_abs(eval_T(b, Event{5.0, 2.5, 0, 0})) == 0.0);
  CHECK(max_abs(eval_T(b, Event{-3.0, 0, 0, 2.1})) == 0.0);
  // constant along its own worldline
  CHECK(eval_T(b, Event{7.0, 0.3, 0.4, 0.5})(0, 0) ==
        eval_T(b, Event{-2.0, 0.3, 0.4, 0.5})(0, 0));
}

TEST_CASE("superposition is additive and order-preserving") {
  const DustBlob b1(FourVector{1, 0, 0, 0}, Event{0, 0.4, 0, 0}, 1.0, 1.0);
  const DustBlob b2(boosted_u(0.5), Event{0, -0.3, 0.2, 0}, 0.8, 2.0);
  Body sum = Body::from_blob(b1);
  sum.add(b2);
  std::mt19937_64 rng(61);
  for (int rep = 0; rep < 30; ++rep) {
    const Event x = random_event(rng, 1.2);
    const Matrix4 lhs = eval_T(sum, x);
    const Matrix4 rhs = b1.stress_at(x) + b2.stress_at(x);
    CHECK(max_abs(lhs - rhs) == 0.0);
  }
}

TEST_CASE("swarm bodies reject pointwise evaluation and superposition") {
  ParticleSwarm s;
  s.particles.emplace_back(1.0, FourVector{1, 0, 0, 0}, Event{});
  Body b = Body::from_swarm(s);
  CHECK(b.is_swarm());
  CHECK_THROWS_AS(eval_T(b, Event{}), InvariantViolation);
  CHECK_THROWS_AS(b.add(DustBlob(FourVector{1, 0, 0, 0}, Event{}, 1, 1)), InvariantViolation);
}

TEST_CASE("finite-difference divergence vanishes for dust and converges at second order") {
  // a moving blob exercises every term of d_a T^{ab}
  const DustBlob blob(boosted_u(0.3, 0.1, 0.0), Event{}, 1.5, 1.0);
  const Body b = Body::from_blob(blob);

  std::mt19937_64 rng(62);
  for (int rep = 0; rep < 20; ++rep) {
    // random interior point in the rest disc through the origin
    const Event x{0.0, uniform(rng, -0.45, 0.45), uniform(rng, -0.45, 0.45),
                  uniform(rng, -0.45, 0.45)};
    CHECK(max_abs(divergence_fd(b, x, 1e-3)) < 1e-6);
  }

  // O(h^2): error ratio between h and h/2 close to 4
  const Event probe{0.0, 0.31, 0.2, 0.11};
  const double e1 = max_abs(divergence_fd(b, probe, 2e-2));
  const double e2 = max_abs(divergence_fd(b, probe, 1e-2));
  CHECK(e1 / e2 > 3.5);
  CHECK(e1 / e2 < 4.5);

  // same for the cubic profile
  const Body bc = Body::from_blob(
      DustBlob(boosted_u(0.3, 0.1, 0.0), Event{}, 1.5, 1.0, BumpProfile::cubic));
  const double c1 = max_abs(divergence_fd(bc, probe, 2e-2));
  const double c2 = max_abs(divergence_fd(bc, probe, 1e-2));
  CHECK(c1 / c2 > 3.5);
  CHECK(c1 / c2 < 4.5);

  const Body empty;
  CHECK(max_abs(divergence_fd(empty, probe, 1e-3)) == 0.0);

  // negative control: a time-modulated field is not conserved
  const Body bad = Body::from_field(time_modulated_field(0.5, 2.0));
  CHECK(max_abs(divergence_fd(bad, Event{0.2, 0.1, 0.2, 0.1}, 1e-3)) > 1e-3);
}

TEST_CASE("charge 3-form of a rest blob") {
  const DustBlob blob(FourVector{1, 0, 0, 0}, Event{}, 1.0, 2.0);
  const Body b = Body::from_blob(blob);
  const Event o{};

  // X = 0 gives the zero form; outside the support everything vanishes
  CHECK(three_form(b, AlgebraElement::zero(), o, Event{0, 0.1, 0, 0}).max_abs() == 0.0);
  const AlgebraElement time_translation(FourVector{1, 0, 0, 0}, Bivector{});
  CHECK(three_form(b, time_translation, o, Event{0, 3, 0, 0}).max_abs() == 0.0);

  // at an interior point, T_X = rho star(theta^0): component {123} equals rho
  const Event x{0, 0.2, 0.1, -0.3};
  const double rho = blob.density_at(x);
  CHECK(rho > 0.0);
  const PForm form = three_form(b, time_translation, o, x);
  const std::array<int, 3> i123 = {1, 2, 3};
  CHECK(form.component(i123) == doctest::Approx(rho).epsilon(1e-14));
}

TEST_CASE("closedness of the charge 3-form") {
  const Body b = Body::from_blob(DustBlob(boosted_u(0.4, 0, 0.3), Event{}, 1.0, 1.0));
  std::mt19937_64 rng(63);
  for (int rep = 0; rep < 10; ++rep) {
    const AlgebraElement x_alg = random_algebra(rng);
    const Event x{0.0, uniform(rng, -0.3, 0.3), uniform(rng, -0.3, 0.3),
                  uniform(rng, -0.3, 0.3)};
    const auto residual = closedness_fd(b, x_alg, Event{}, x, 1e-3);
    REQUIRE(residual.has_value());
    CHECK(*residual < 1e-5);
  }

  const Body empty;
  CHECK(*closedness_fd(empty, random_algebra(rng), Event{}, Event{}, 1e-3) == 0.0);

  ParticleSwarm s;
  s.particles.emplace_back(1.0, FourVector{1, 0, 0, 0}, Event{});
  CHECK_FALSE(closedness_fd(Body::from_swarm(s), random_algebra(rng), Event{}, Event{}, 1e-3)
                  .has_value());

  // negative control: the modulated field has a non-closed 3-form for X = e_0
  const Body bad = Body::from_field(time_modulated_field(0.5, 2.0));
  const AlgebraElement time_translation(FourVector{1, 0, 0, 0}, Bivector{});
  CHECK(*closedness_fd(bad, time_translation, Event{}, Event{0.2, 0.1, 0.2, 0.1}, 1e-3) > 1e-3);
}

TEST_CASE("push-forward transforms the field two ways consistently") {
  std::mt19937_64 rng(64);
  const Event o{};
  const Body b = Body::from_blob(DustBlob(FourVector{1, 0, 0, 0}, Event{0, 0.2, 0, 0}, 1.0, 1.5));

  // identity and pure translation
  const Body same = pushforward_body(b, PoincareElement::identity(), o);
  CHECK(max_abs(point_diff(same.blobs()[0].center, b.blobs()[0].center)) == 0.0);
  const PoincareElement shift{FourVector{1, 2, 3, 4}, LorentzMatrix::identity()};
  CHECK(max_abs(point_diff(pushforward_body(b, shift, o).blobs()[0].center,
                           Event{1, 2.2, 3, 4})) == 0.0);

  for (int rep = 0; rep < 20; ++rep) {
    const PoincareElement g = random_poincare(rng);
    const Body pushed = pushforward_body(b, g, o);
    const Event x = random_event(rng, 1.0);
    const Matrix4 lhs = eval_T(pushed, act_on_point(g, x, o));
    const Matrix4 rhs = g.L.m * eval_T(b, x) * g.L.m.transpose();
    CHECK(max_abs(lhs - rhs) < 1e-10 * std::max(1.0, max_abs(rhs)));
  }

  // push-forward is a left action on bodies
  for (int rep = 0; rep < 10; ++rep) {
    const PoincareElement g1 = random_poincare(rng);
    const PoincareElement g2 = random_poincare(rng);
    const Body two = pushforward_body(pushforward_body(b, g1, o), g2, o);
    const Body one = pushforward_body(b, compose(g2, g1), o);
    const Event x = random_event(rng, 2.0);
    CHECK(max_abs(eval_T(two, x) - eval_T(one, x)) < 1e-10);
  }

  // sampled fields transform through their evaluator
  const Body bf = Body::from_field(time_modulated_field(0.3, 1.0));
  const PoincareElement g = random_poincare(rng);
  const Body pf = pushforward_body(bf, g, o);
  const Event x = random_event(rng, 0.6);
  const Matrix4 lhs = eval_T(pf, act_on_point(g, x, o));
  const Matrix4 rhs = g.L.m * eval_T(bf, x) * g.L.m.transpose();
  CHECK(max_abs(lhs - rhs) < 1e-10 * std::max(1.0, max_abs(rhs)));
}

TEST_CASE("weak energy condition") {
  std::mt19937_64 rng(65);
  const Body dust = Body::from_blob(DustBlob(boosted_u(0.7), Event{}, 1.0, 2.0));
  std::vector<std::pair<Event, FourVector>> samples;
  for (int i = 0; i < 50; ++i) samples.emplace_back(random_event(rng, 1.2), random_observer(rng));
  CHECK(weak_energy_check(dust, samples));
  CHECK(weak_energy_check(Body{}, samples));

  // constructed violation: negative energy density
  const DustBlob carrier(FourVector{1, 0, 0, 0}, Event{}, 1.0, 1.0);
  auto eval = [carrier](const Event& x) { return carrier.stress_at(x) * -1.0; };
  const Body bad = Body::from_field(SampledField{eval, carrier.tube()});
  CHECK_FALSE(weak_energy_check(bad, samples));
}

}  // TEST_SUITE
