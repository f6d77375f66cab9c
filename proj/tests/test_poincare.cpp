#include <cmath>

#include "doctest.h"
#include "momap/errors.hpp"
#include "momap/poincare.hpp"
#include "test_utils.hpp"

using namespace momap;
using namespace momap::testutil;

namespace {

AlgebraElement basis_translation(int a) {
  FourVector v;
  v[a] = 1.0;
  return AlgebraElement(v, Bivector{});
}

AlgebraElement basis_rotation(int a, int b) {
  Bivector m;
  m(a, b) = 1.0;
  m(b, a) = -1.0;
  return AlgebraElement(FourVector{}, m);
}

double algebra_diff(const AlgebraElement& x, const AlgebraElement& y) {
  return std::max(max_abs(x.v - y.v), max_abs(x.M - y.M));
}

double gl5_diff(const Matrix5& a, const Matrix5& b) {
  double m = 0.0;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

}  // namespace

TEST_SUITE("poincare") {

TEST_CASE("lorentz validation accepts improper matrices but rejects others") {
  Matrix4 parity = Matrix4::identity();
  parity(1, 1) = parity(2, 2) = parity(3, 3) = -1.0;
  CHECK_NOTHROW(LorentzMatrix{parity});

  Matrix4 bad = Matrix4::identity();
  bad(1, 1) = 1.5;
  CHECK_THROWS_AS(LorentzMatrix{bad}, InvariantViolation);
}

TEST_CASE("translations are abelian and inverses compose to the identity") {
  std::mt19937_64 rng(31);
  for (int rep = 0; rep < 50; ++rep) {
    const PoincareElement t1{random_vector(rng), LorentzMatrix::identity()};
    const PoincareElement t2{random_vector(rng), LorentzMatrix::identity()};
    CHECK(max_abs(compose(t1, t2).a - (t1.a + t2.a)) == 0.0);
    CHECK(max_abs(compose(t1, t2).a - compose(t2, t1).a) == 0.0);

    const PoincareElement g = random_poincare(rng);
    const PoincareElement gg = compose(g, inverse(g));
    CHECK(max_abs(gg.a) < 1e-12);
    CHECK(max_abs(gg.L.m - Matrix4::identity()) < 1e-12);
  }
}

TEST_CASE("embedding into GL(5) is a homomorphism; inverse matches the matrix inverse") {
  std::mt19937_64 rng(32);
  CHECK(gl5_diff(embed_gl5(PoincareElement::identity()), Matrix5::identity()) == 0.0);
  for (int rep = 0; rep < 100; ++rep) {
    const PoincareElement g1 = random_poincare(rng);
    const PoincareElement g2 = random_poincare(rng);
    CHECK(gl5_diff(embed_gl5(compose(g2, g1)), embed_gl5(g2) * embed_gl5(g1)) < 1e-12);
    CHECK(gl5_diff(embed_gl5(inverse(g1)), inverse(embed_gl5(g1))) < 1e-12);
  }
  // boost then translation, against the block-matrix product
  const PoincareElement boost{FourVector{}, LorentzMatrix::boost(0.7, 1)};
  const PoincareElement shift{FourVector{1, 2, 3, 4}, LorentzMatrix::identity()};
  CHECK(gl5_diff(embed_gl5(compose(boost, shift)), embed_gl5(boost) * embed_gl5(shift)) < 1e-14);
}

TEST_CASE("algebra bracket matches the GL(5) commutator") {
  std::mt19937_64 rng(33);
  for (int rep = 0; rep < 100; ++rep) {
    const AlgebraElement x = random_algebra(rng);
    const AlgebraElement y = random_algebra(rng);
    const Matrix5 ex = embed_gl5_alg(x);
    const Matrix5 ey = embed_gl5_alg(y);
    const Matrix5 comm = ex * ey + (ey * ex) * -1.0;
    CHECK(gl5_diff(embed_gl5_alg(bracket(x, y)), comm) < 1e-12);
  }
}

TEST_CASE("basis brackets") {
  // [e_a, e_b] = 0
  CHECK(algebra_diff(bracket(basis_translation(0), basis_translation(1)),
                     AlgebraElement::zero()) == 0.0);
  // [e_0, m_01] = eta_00 e_1 - eta_01 e_0 = e_1
  CHECK(algebra_diff(bracket(basis_translation(0), basis_rotation(0, 1)),
                     basis_translation(1)) == 0.0);
  // [m_01, m_12] = eta_11 m_02 = -m_02
  const AlgebraElement lhs = bracket(basis_rotation(0, 1), basis_rotation(1, 2));
  AlgebraElement rhs = basis_rotation(0, 2);
  rhs.M = rhs.M * -1.0;
  CHECK(algebra_diff(lhs, rhs) == 0.0);

  // the full table: [e_a, m_bc] = eta_ab e_c - eta_ac e_b
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = b + 1; c < 4; ++c) {
        const AlgebraElement got = bracket(basis_translation(a), basis_rotation(b, c));
        FourVector expect;
        if (a == b) expect = expect + basis_translation(c).v * kEta[static_cast<std::size_t>(a)];
        if (a == c) expect = expect - basis_translation(b).v * kEta[static_cast<std::size_t>(a)];
        CHECK(max_abs(got.v - expect) == 0.0);
        CHECK(max_abs(got.M) == 0.0);
      }

  // [m_ab, m_cd] = eta_ad m_bc + eta_bc m_ad - eta_ac m_bd - eta_bd m_ac
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = c + 1; d < 4; ++d) {
          const AlgebraElement got = bracket(basis_rotation(a, b), basis_rotation(c, d));
          Bivector expect;
          auto add = [&](int i, int j, double coeff) {
            if (coeff == 0.0) return;
            expect(i, j) += coeff;
            expect(j, i) -= coeff;
          };
          if (a == d) add(b, c, kEta[static_cast<std::size_t>(a)]);
          if (b == c) add(a, d, kEta[static_cast<std::size_t>(b)]);
          if (a == c) add(b, d, -kEta[static_cast<std::size_t>(a)]);
          if (b == d) add(a, c, -kEta[static_cast<std::size_t>(b)]);
          CHECK(max_abs(got.M - expect) == 0.0);
          CHECK(max_abs(got.v) == 0.0);
        }
}

TEST_CASE("jacobi identity on random triples") {
  std::mt19937_64 rng(34);
  for (int rep = 0; rep < 500; ++rep) {
    const AlgebraElement x = random_algebra(rng);
    const AlgebraElement y = random_algebra(rng);
    const AlgebraElement z = random_algebra(rng);
    AlgebraElement sum = bracket(x, bracket(y, z));
    const AlgebraElement t2 = bracket(y, bracket(z, x));
    const AlgebraElement t3 = bracket(z, bracket(x, y));
    sum.v = sum.v + t2.v + t3.v;
    sum.M = sum.M + t2.M + t3.M;
    CHECK(std::max(max_abs(sum.v), max_abs(sum.M)) < 1e-11);
  }
}

TEST_CASE("group action on events") {
  std::mt19937_64 rng(35);
  const Event o = random_event(rng);
  const Event x = random_event(rng, 2.0);
  CHECK(max_abs(point_diff(act_on_point(PoincareElement::identity(), x, o), x)) == 0.0);

  const PoincareElement shift{FourVector{1, -2, 0.5, 3}, LorentzMatrix::identity()};
  CHECK(max_abs(point_diff(act_on_point(shift, x, o), point_plus(x, shift.a))) == 0.0);

  for (int rep = 0; rep < 100; ++rep) {
    const PoincareElement g1 = random_poincare(rng);
    const PoincareElement g2 = random_poincare(rng);
    const Event y = random_event(rng, 3.0);
    const Event two_step = act_on_point(g2, act_on_point(g1, y, o), o);
    const Event one_step = act_on_point(compose(g2, g1), y, o);
    CHECK(max_abs(point_diff(two_step, one_step)) < 1e-12);
  }
}

TEST_CASE("rebasing the origin leaves the abstract map unchanged") {
  std::mt19937_64 rng(36);
  for (int rep = 0; rep < 50; ++rep) {
    const PoincareElement g = random_poincare(rng);
    const Event o = random_event(rng);
    const FourVector delta = random_vector(rng, 2.0);
    const PoincareElement h = rebase_origin(g, delta);
    const Event x = random_event(rng, 3.0);
    CHECK(max_abs(point_diff(act_on_point(g, x, o), act_on_point(h, x, point_plus(o, delta)))) <
          1e-12);

    // rebasing is conjugation by the translation between the origins
    const PoincareElement shift{delta, LorentzMatrix::identity()};
    const PoincareElement conj = compose(inverse(shift), compose(g, shift));
    CHECK(max_abs(conj.a - h.a) < 1e-13);
    CHECK(max_abs(conj.L.m - h.L.m) == 0.0);
  }
}

TEST_CASE("adjoint representation against GL(5) conjugation") {
  std::mt19937_64 rng(37);
  for (int rep = 0; rep < 100; ++rep) {
    const PoincareElement g = random_poincare(rng);
    const AlgebraElement x = random_algebra(rng);
    const Matrix5 expect = embed_gl5(g) * embed_gl5_alg(x) * inverse(embed_gl5(g));
    CHECK(gl5_diff(embed_gl5_alg(Ad(g, x)), expect) < 1e-11);
  }
  // Ad of the identity and of a pure translation
  std::mt19937_64 rng2(38);
  const AlgebraElement x = random_algebra(rng2);
  CHECK(algebra_diff(Ad(PoincareElement::identity(), x), x) == 0.0);
  const FourVector a = random_vector(rng2);
  const PoincareElement shift{a, LorentzMatrix::identity()};
  const AlgebraElement got = Ad(shift, x);
  CHECK(max_abs(got.M - x.M) == 0.0);
  CHECK(max_abs(got.v - (x.v - contract_right(x.M, a))) < 1e-14);
}

TEST_CASE("adjoint is a homomorphism") {
  std::mt19937_64 rng(39);
  for (int rep = 0; rep < 100; ++rep) {
    const PoincareElement g1 = random_poincare(rng);
    const PoincareElement g2 = random_poincare(rng);
    const AlgebraElement x = random_algebra(rng);
    CHECK(algebra_diff(Ad(compose(g1, g2), x), Ad(g1, Ad(g2, x))) < 1e-11);
  }
}

TEST_CASE("pairing basics") {
  const DualElement d0(FourVector{1, 0, 0, 0}, Bivector{});
  CHECK(pairing(d0, basis_translation(0)) == 1.0);

  // the 1/2 convention: each independent bivector component counts once
  const DualElement d01(FourVector{}, basis_rotation(0, 1).M);
  CHECK(pairing(d01, basis_rotation(0, 1)) == -1.0);  // eta_00 eta_11 = -1
  const DualElement d12(FourVector{}, basis_rotation(1, 2).M);
  CHECK(pairing(d12, basis_rotation(1, 2)) == 1.0);  // eta_11 eta_22 = +1

  std::mt19937_64 rng(40);
  for (int rep = 0; rep < 50; ++rep) {
    const DualElement d = random_dual(rng);
    const AlgebraElement x = random_algebra(rng);
    const AlgebraElement y = random_algebra(rng);
    const double s = uniform(rng, -2, 2);
    AlgebraElement xs(x.v * s + y.v, x.M * s + y.M);
    CHECK(pairing(d, xs) ==
          doctest::Approx(s * pairing(d, x) + pairing(d, y)).epsilon(1e-12));
  }
}

TEST_CASE("co-adjoint: translations, identity, invariance of the pairing") {
  std::mt19937_64 rng(41);
  const DualElement d = random_dual(rng);
  CHECK(max_abs(coAd(PoincareElement::identity(), d).p - d.p) == 0.0);

  // pure translation sends (p, J) to (p, J - a /\ p^sharp)
  const FourVector a = random_vector(rng);
  const PoincareElement shift{a, LorentzMatrix::identity()};
  const DualElement got = coAd(shift, d);
  CHECK(max_abs(got.p - d.p) == 0.0);
  CHECK(max_abs(got.J - (d.J - wedge(a, raise_index(d.p)))) < 1e-14);

  for (int rep = 0; rep < 100; ++rep) {
    const PoincareElement g = random_poincare(rng);
    const DualElement dr = random_dual(rng);
    const AlgebraElement x = random_algebra(rng);
    CHECK(pairing(coAd(g, dr), Ad(g, x)) == doctest::Approx(pairing(dr, x)).epsilon(1e-12));
  }
}

TEST_CASE("co-adjoint is a left representation") {
  std::mt19937_64 rng(42);
  for (int rep = 0; rep < 100; ++rep) {
    const PoincareElement g1 = random_poincare(rng);
    const PoincareElement g2 = random_poincare(rng);
    const DualElement d = random_dual(rng);
    const DualElement lhs = coAd(compose(g1, g2), d);
    const DualElement rhs = coAd(g1, coAd(g2, d));
    CHECK(std::max(max_abs(lhs.p - rhs.p), max_abs(lhs.J - rhs.J)) < 1e-11);
  }
}

TEST_CASE("eta projectors split endomorphisms") {
  std::mt19937_64 rng(43);
  for (int rep = 0; rep < 50; ++rep) {
    Matrix4 e;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) e(i, j) = uniform(rng);
    const auto [sym, asym] = project_PS_PA(e);
    CHECK(max_abs(sym + asym - e) < 1e-14);
    const auto [sym2, asym2] = project_PS_PA(sym);
    CHECK(max_abs(sym2 - sym) < 1e-13);
    CHECK(max_abs(asym2) < 1e-13);
    // the antisymmetric part satisfies A = -eta^ A^T eta_
    Matrix4 conj;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        conj(a, b) = kEta[static_cast<std::size_t>(a)] * asym(b, a) *
                     kEta[static_cast<std::size_t>(b)];
    CHECK(max_abs(asym + conj) < 1e-13);
  }
  // lowered boost generator lies in the kernel of P_S
  const Matrix4 mhat = lower_second(basis_rotation(0, 1).M);
  const auto [sym, asym] = project_PS_PA(mhat);
  CHECK(max_abs(sym) == 0.0);
  CHECK(max_abs(asym - mhat) == 0.0);
}

TEST_CASE("exponential map") {
  std::mt19937_64 rng(44);
  // pure translation
  const FourVector v{0.3, -1.0, 2.0, 0.1};
  const PoincareElement et = exp_algebra(AlgebraElement(v, Bivector{}), 2.0);
  CHECK(max_abs(et.a - v * 2.0) < 1e-13);
  CHECK(max_abs(et.L.m - Matrix4::identity()) < 1e-13);

  // rotation generator closes after 2 pi
  const PoincareElement full_turn =
      exp_algebra(basis_rotation(1, 2), 2.0 * 3.14159265358979323846);
  CHECK(max_abs(full_turn.a) < 1e-10);
  CHECK(max_abs(full_turn.L.m - Matrix4::identity()) < 1e-10);

  // rotation matches the closed form at a generic angle
  const double th = 0.83;
  const PoincareElement rot = exp_algebra(basis_rotation(1, 2), th);
  // generator moves e_1 toward e_2, matching rotation(th, 1, 2)
  CHECK(max_abs(rot.L.m - LorentzMatrix::rotation(th, 1, 2).m) < 1e-13);
  // m_01 with the second slot lowered generates the boost of rapidity -th
  const PoincareElement bst = exp_algebra(basis_rotation(0, 1), th);
  CHECK(max_abs(bst.L.m - LorentzMatrix::boost(-th, 1).m) < 1e-13);

  // one-parameter subgroup law
  for (int rep = 0; rep < 50; ++rep) {
    const AlgebraElement x = random_algebra(rng);
    const double s = uniform(rng, -2, 2);
    const double t = uniform(rng, -2, 2);
    const PoincareElement lhs = exp_algebra(x, s + t);
    const PoincareElement rhs = compose(exp_algebra(x, s), exp_algebra(x, t));
    CHECK(max_abs(lhs.a - rhs.a) < 1e-10);
    CHECK(max_abs(lhs.L.m - rhs.L.m) < 1e-10);
  }

  // accuracy holds out to generator norms around 10 (the 1e-10 matrix
  // invariant itself caps usable rapidities near 7): halving and squaring
  // agree to a relative 1e-12
  for (int rep = 0; rep < 10; ++rep) {
    const AlgebraElement x = random_algebra(rng, 1.6);
    const PoincareElement whole = exp_algebra(x, 2.0);
    const PoincareElement halves = compose(exp_algebra(x, 1.0), exp_algebra(x, 1.0));
    const double scale = std::max(1.0, max_abs(whole.L.m));
    CHECK(max_abs(whole.L.m - halves.L.m) / scale < 1e-12);
    CHECK(max_abs(whole.a - halves.a) / std::max(1.0, max_abs(whole.a)) < 1e-12);
  }
}

TEST_CASE("flow property of the fundamental field") {
  std::mt19937_64 rng(45);
  const Event o = random_event(rng);
  for (int rep = 0; rep < 50; ++rep) {
    const AlgebraElement x = random_algebra(rng);
    const double s = uniform(rng, -1.5, 1.5);
    const double t = uniform(rng, -1.5, 1.5);
    const Event m = random_event(rng, 2.0);
    const Event lhs = act_on_point(exp_algebra(x, s), act_on_point(exp_algebra(x, t), m, o), o);
    const Event rhs = act_on_point(exp_algebra(x, s + t), m, o);
    CHECK(max_abs(point_diff(lhs, rhs)) < 1e-10);
  }
}

TEST_CASE("fundamental field values and the flow derivative") {
  std::mt19937_64 rng(46);
  const Event o = random_event(rng);

  // constant field for pure translations
  const AlgebraElement tr(FourVector{1, 2, 3, 4}, Bivector{});
  CHECK(max_abs(fundamental_field(tr, o, random_event(rng, 5.0)) - tr.v) == 0.0);

  // rotation generator m_12 moves e_1 toward e_2
  const AlgebraElement rot = basis_rotation(1, 2);
  const Event x12 = point_plus(o, FourVector{0, 1, 0, 0});
  CHECK(max_abs(fundamental_field(rot, o, x12) - FourVector{0, 0, 1, 0}) == 0.0);

  // V(o) = v regardless of M
  for (int rep = 0; rep < 20; ++rep) {
    const AlgebraElement x = random_algebra(rng);
    CHECK(max_abs(fundamental_field(x, o, o) - x.v) == 0.0);
  }

  // central finite difference of the flow
  const double h = 1e-5;
  for (int rep = 0; rep < 50; ++rep) {
    const AlgebraElement x = random_algebra(rng);
    const Event m = random_event(rng, 2.0);
    const Event plus = act_on_point(exp_algebra(x, h), m, o);
    const Event minus = act_on_point(exp_algebra(x, -h), m, o);
    const FourVector fd = point_diff(plus, minus) / (2.0 * h);
    CHECK(max_abs(fd - fundamental_field(x, o, m)) < 1e-9);
  }
}

TEST_CASE("killing property") {
  std::mt19937_64 rng(47);
  for (int rep = 0; rep < 50; ++rep) CHECK(killing_check(random_algebra(rng)));

  // negative control: a symmetric generator injected through the raw path
  Matrix4 sym;
  sym(0, 1) = sym(1, 0) = 1.0;
  sym(2, 2) = 0.5;
  CHECK_FALSE(killing_check(AlgebraElement::unchecked(FourVector{}, sym)));
  CHECK_THROWS_AS(AlgebraElement(FourVector{}, sym), InvariantViolation);

  // numeric cross-check: symmetrised finite-difference gradient of the field
  const Event o{};
  for (int rep = 0; rep < 20; ++rep) {
    const AlgebraElement x = random_algebra(rng);
    const Event m = random_event(rng, 2.0);
    const double h = 1e-5;
    double residual = 0.0;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        Event pa = m;
        Event ma = m;
        pa[a] += h;
        ma[a] -= h;
        Event pb = m;
        Event mb = m;
        pb[b] += h;
        mb[b] -= h;
        const double da_vb = (lower_index(fundamental_field(x, o, pa))[b] -
                              lower_index(fundamental_field(x, o, ma))[b]) /
                             (2 * h);
        const double db_va = (lower_index(fundamental_field(x, o, pb))[a] -
                              lower_index(fundamental_field(x, o, mb))[a]) /
                             (2 * h);
        residual = std::max(residual, std::abs(da_vb + db_va) * 0.5);
      }
    CHECK(residual < 1e-8);
  }
}

TEST_CASE("vector fields anti-represent the algebra") {
  std::mt19937_64 rng(48);
  const Event o = random_event(rng);

  // translations commute
  CHECK(field_commutator_check(basis_translation(0), basis_translation(2), o,
                               random_event(rng)) == 0.0);

  // [V^{e_0}, V^{m_01}] = -V^{[e_0, m_01]} = -V^{e_1}
  const Event sample = random_event(rng, 2.0);
  CHECK(field_commutator_check(basis_translation(0), basis_rotation(0, 1), o, sample) < 1e-15);

  for (int rep = 0; rep < 100; ++rep)
    CHECK(field_commutator_check(random_algebra(rng), random_algebra(rng), o,
                                 random_event(rng, 3.0)) < 1e-10);
}

TEST_CASE("push-forward equivariance of fundamental fields") {
  std::mt19937_64 rng(49);
  const Event o = random_event(rng);
  const AlgebraElement x = random_algebra(rng);
  CHECK(pushforward_equivariance_check(PoincareElement::identity(), x, o, random_event(rng)) ==
        0.0);

  // pure translation against a rotational generator
  const PoincareElement shift{random_vector(rng), LorentzMatrix::identity()};
  CHECK(pushforward_equivariance_check(shift, basis_rotation(1, 2), o, random_event(rng, 2.0)) <
        1e-14);

  for (int rep = 0; rep < 100; ++rep)
    CHECK(pushforward_equivariance_check(random_poincare(rng), random_algebra(rng), o,
                                         random_event(rng, 3.0)) < 1e-10);
}

TEST_CASE("ad equals the bracket: derivative of Ad along the flow") {
  std::mt19937_64 rng(50);
  const double h = 1e-4;
  for (int rep = 0; rep < 50; ++rep) {
    const AlgebraElement x = random_algebra(rng);
    const AlgebraElement y = random_algebra(rng);
    const AlgebraElement plus = Ad(exp_algebra(x, h), y);
    const AlgebraElement minus = Ad(exp_algebra(x, -h), y);
    const FourVector dv = (plus.v - minus.v) / (2 * h);
    const Matrix4 dm = (plus.M - minus.M) * (1.0 / (2 * h));
    const AlgebraElement expect = bracket(x, y);
    CHECK(max_abs(dv - expect.v) < 1e-6);
    CHECK(max_abs(dm - expect.M) < 1e-6);
  }
}

}  // TEST_SUITE
