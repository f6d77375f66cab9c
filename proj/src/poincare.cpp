#include "momap/poincare.hpp"

#include <cmath>

#include "momap/errors.hpp"

namespace momap {

namespace {

Matrix4 eta_matrix() {
  Matrix4 e;
  for (int i = 0; i < 4; ++i) e(i, i) = kEta[static_cast<std::size_t>(i)];
  return e;
}

}  // namespace

double lorentz_residual(const Matrix4& m) {
  const Matrix4 r = m.transpose() * eta_matrix() * m - eta_matrix();
  return max_abs(r);
}

LorentzMatrix::LorentzMatrix(const Matrix4& matrix) : m(matrix) {
  if (lorentz_residual(matrix) > 1e-10)
    throw InvariantViolation("matrix does not preserve the Minkowski metric");
}

LorentzMatrix LorentzMatrix::identity() { return LorentzMatrix(Matrix4::identity()); }

LorentzMatrix LorentzMatrix::boost(double rho, int axis) {
  if (axis < 1 || axis > 3) throw InvariantViolation("boost axis must be 1..3");
  Matrix4 b = Matrix4::identity();
  b(0, 0) = std::cosh(rho);
  b(axis, axis) = std::cosh(rho);
  b(0, axis) = std::sinh(rho);
  b(axis, 0) = std::sinh(rho);
  return LorentzMatrix(b);
}

LorentzMatrix LorentzMatrix::rotation(double angle, int i, int j) {
  if (i < 1 || j < 1 || i > 3 || j > 3 || i == j)
    throw InvariantViolation("rotation plane must use two distinct spatial axes");
  Matrix4 r = Matrix4::identity();
  r(i, i) = std::cos(angle);
  r(j, j) = std::cos(angle);
  r(i, j) = -std::sin(angle);
  r(j, i) = std::sin(angle);
  return LorentzMatrix(r);
}

PoincareElement PoincareElement::identity() {
  return PoincareElement{FourVector{}, LorentzMatrix::identity()};
}

PoincareElement compose(const PoincareElement& g2, const PoincareElement& g1) {
  return PoincareElement{g2.a + g2.L * g1.a, LorentzMatrix(g2.L.m * g1.L.m)};
}

PoincareElement inverse(const PoincareElement& g) {
  const Matrix4 li = inverse(g.L.m);
  return PoincareElement{-(li * g.a), LorentzMatrix(li)};
}

PoincareElement rebase_origin(const PoincareElement& g, const FourVector& delta) {
  // o + a + L(x - o) written around o' = o + delta
  return PoincareElement{g.a + g.L.m * delta - delta, g.L};
}

Matrix5 embed_gl5(const PoincareElement& g) {
  Matrix5 r;
  r(0, 0) = 1.0;
  for (int i = 0; i < 4; ++i) {
    r(i + 1, 0) = g.a[i];
    for (int j = 0; j < 4; ++j) r(i + 1, j + 1) = g.L.m(i, j);
  }
  return r;
}

Event act_on_point(const PoincareElement& g, const Event& x, const Event& o) {
  return point_plus(o, g.a + g.L * point_diff(x, o));
}

AlgebraElement::AlgebraElement(const FourVector& translation, const Bivector& generator)
    : v(translation), M(generator) {
  if (!is_antisymmetric(generator))
    throw InvariantViolation("algebra generator must be exactly antisymmetric");
}

AlgebraElement AlgebraElement::unchecked(const FourVector& translation, const Matrix4& generator) {
  AlgebraElement x = zero();
  x.v = translation;
  x.M = generator;
  return x;
}

Matrix5 embed_gl5_alg(const AlgebraElement& x) {
  const Matrix4 mhat = lower_second(x.M);
  Matrix5 r;
  for (int i = 0; i < 4; ++i) {
    r(i + 1, 0) = x.v[i];
    for (int j = 0; j < 4; ++j) r(i + 1, j + 1) = mhat(i, j);
  }
  return r;
}

AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) {
  const Matrix4 mh = lower_second(x.M);
  const Matrix4 nh = lower_second(y.M);
  const FourVector v = mh * y.v - nh * x.v;
  // bivector of [Mhat, Nhat] as K - K^T with K^{ab} = M^{ae} eta_e N^{eb};
  // the explicit difference keeps it antisymmetric to the last bit
  Matrix4 k;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      double s = 0.0;
      for (int e = 0; e < 4; ++e) s += x.M(a, e) * kEta[static_cast<std::size_t>(e)] * y.M(e, b);
      k(a, b) = s;
    }
  Bivector comm;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) comm(a, b) = k(a, b) - k(b, a);
  return AlgebraElement(v, comm);
}

AlgebraElement Ad(const PoincareElement& g, const AlgebraElement& x) {
  const Bivector m2 = congruence(g.L.m, x.M);
  const FourVector v2 = g.L * x.v - contract_right(m2, g.a);
  return AlgebraElement(v2, m2);
}

DualElement::DualElement(const FourVector& covector, const Bivector& angular)
    : p(covector), J(angular) {
  if (!is_antisymmetric(angular))
    throw InvariantViolation("dual angular part must be exactly antisymmetric");
}

double pairing(const DualElement& d, const AlgebraElement& x) {
  double s = 0.0;
  for (int a = 0; a < 4; ++a) s += d.p[a] * x.v[a];
  return s + bivector_inner_norm(d.J, x.M);
}

DualElement coAd(const PoincareElement& g, const DualElement& d) {
  const FourVector p_up = g.L * raise_index(d.p);
  const Bivector j2 = congruence(g.L.m, d.J) - wedge(g.a, p_up);
  return DualElement(lower_index(p_up), j2);
}

std::pair<Matrix4, Matrix4> project_PS_PA(const Matrix4& e) {
  // eta^ E^T eta_ has entries eta_aa E_ba eta_bb... written out directly
  Matrix4 conj;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      conj(a, b) = kEta[static_cast<std::size_t>(a)] * e(b, a) * kEta[static_cast<std::size_t>(b)];
  const Matrix4 sym = (e + conj) * 0.5;
  const Matrix4 asym = (e - conj) * 0.5;
  return {sym, asym};
}

PoincareElement exp_algebra(const AlgebraElement& x, double t) {
  const Matrix5 e = expm(embed_gl5_alg(x) * t);
  FourVector a;
  Matrix4 l;
  for (int i = 0; i < 4; ++i) {
    a[i] = e(i + 1, 0);
    for (int j = 0; j < 4; ++j) l(i, j) = e(i + 1, j + 1);
  }
  return PoincareElement{a, LorentzMatrix(l)};
}

FourVector fundamental_field(const AlgebraElement& x, const Event& o, const Event& sample) {
  return x.v + contract_right(x.M, point_diff(sample, o));
}

double killing_residual(const Matrix4& generator) {
  // field V^b = G^{bc} eta_cd (x-o)^d has constant gradient d_a V^b = Ghat^b_a;
  // the lowered symmetrised gradient is the eta-symmetric part of G lowered.
  Matrix4 lowered;  // G_{ab} = eta_ac G^{cd} eta_db
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      lowered(a, b) = kEta[static_cast<std::size_t>(a)] * generator(a, b) * kEta[static_cast<std::size_t>(b)];
  double r = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) r = std::max(r, std::abs(0.5 * (lowered(a, b) + lowered(b, a))));
  return r;
}

bool killing_check(const AlgebraElement& x) { return killing_residual(x.M) == 0.0; }

double field_commutator_check(const AlgebraElement& x, const AlgebraElement& y, const Event& o,
                              const Event& sample) {
  const Matrix4 mh = lower_second(x.M);
  const Matrix4 nh = lower_second(y.M);
  // [V^X, V^Y] = DV^Y V^X - DV^X V^Y with constant Jacobians
  const FourVector comm = nh * fundamental_field(x, o, sample) - mh * fundamental_field(y, o, sample);
  const FourVector target = fundamental_field(bracket(x, y), o, sample);
  return max_abs(comm + target);
}

double pushforward_equivariance_check(const PoincareElement& g, const AlgebraElement& x,
                                      const Event& o, const Event& sample) {
  const FourVector lhs = g.L * fundamental_field(x, o, sample);
  const FourVector rhs = fundamental_field(Ad(g, x), o, act_on_point(g, sample, o));
  return max_abs(lhs - rhs);
}

}  // namespace momap
