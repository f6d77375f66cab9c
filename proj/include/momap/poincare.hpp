#ifndef MOMAP_POINCARE_HPP
#define MOMAP_POINCARE_HPP

#include <utility>

#include "momap/affine.hpp"
#include "momap/linalg.hpp"

namespace momap {

/// Matrix L^a_b with eta_ab L^a_c L^b_d = eta_cd (checked to 1e-10).
/// Improper and non-orthochronous matrices are accepted; only the quadratic
/// condition is required.
struct LorentzMatrix {
  Matrix4 m;

  explicit LorentzMatrix(const Matrix4& matrix);
  static LorentzMatrix identity();
  /// Boost with rapidity rho along spatial axis 1..3.
  static LorentzMatrix boost(double rho, int axis);
  /// Rotation by angle in the spatial (i, j) plane, 1 <= i < j <= 3.
  static LorentzMatrix rotation(double angle, int i, int j);

  FourVector operator*(const FourVector& v) const { return m * v; }
};

double lorentz_residual(const Matrix4& m);  // max |L^T eta L - eta|

/// Group element (a, L) relative to the chosen origin o: x -> o + a + L(x - o).
struct PoincareElement {
  FourVector a;
  LorentzMatrix L;

  static PoincareElement identity();
};

/// (a2, L2) . (a1, L1) = (a2 + L2 a1, L2 L1).
PoincareElement compose(const PoincareElement& g2, const PoincareElement& g1);
PoincareElement inverse(const PoincareElement& g);

/// Same abstract map expressed relative to the origin o' = o + delta.
PoincareElement rebase_origin(const PoincareElement& g, const FourVector& delta);

/// Block embedding [[1, 0], [a, L]] into GL(5).
Matrix5 embed_gl5(const PoincareElement& g);

Event act_on_point(const PoincareElement& g, const Event& x, const Event& o);

/// Lie algebra element (v, M): v a vector, M a bivector M^{ab} = -M^{ba}
/// (exact).  The endomorphism action lowers the second slot:
/// (M . w)^a = M^{ab} eta_bc w^c.
struct AlgebraElement {
  FourVector v;
  Bivector M;

  AlgebraElement(const FourVector& translation, const Bivector& generator);
  /// Skips the antisymmetry check (negative-control fixtures only).
  static AlgebraElement unchecked(const FourVector& translation, const Matrix4& generator);
  static AlgebraElement zero() { return AlgebraElement(FourVector{}, Bivector{}); }
};

/// Block embedding [[0, 0], [v, M-hat]] into End(R^5).
Matrix5 embed_gl5_alg(const AlgebraElement& x);

/// [(v,M), (w,N)] = (M.w - N.v, [M,N]).
AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y);

/// Adjoint action: conjugation in GL(5); equals
/// (L v - (L(x)L M).a, L(x)L M) on the (vector, bivector) pair.
AlgebraElement Ad(const PoincareElement& g, const AlgebraElement& x);

/// Element of the dual: momentum covector components p_a plus angular
/// bivector J^{ab}.
struct DualElement {
  FourVector p;  // covariant components p_a
  Bivector J;

  DualElement(const FourVector& covector, const Bivector& angular);
};

/// <(p,J), (v,M)> = p_a v^a + (1/2) eta_ac eta_bd J^{ab} M^{cd}.
double pairing(const DualElement& d, const AlgebraElement& x);

/// Co-adjoint action, the inverse transpose of Ad:
/// pairing(coAd_g d, Ad_g x) = pairing(d, x) for all x.
DualElement coAd(const PoincareElement& g, const DualElement& d);

/// Split E into its eta-symmetric and eta-antisymmetric parts,
/// P_S(E) = (E + eta^ E^T eta_)/2 and P_A(E) = (E - eta^ E^T eta_)/2.
std::pair<Matrix4, Matrix4> project_PS_PA(const Matrix4& e);

/// One-parameter subgroup exp(t X) through the GL(5) embedding.
PoincareElement exp_algebra(const AlgebraElement& x, double t);

/// V^X(x) = v + M.(x - o); the derivative at t = 0 of the flow
/// t -> act_on_point(exp_algebra(X, t), x, o).
FourVector fundamental_field(const AlgebraElement& x, const Event& o, const Event& sample);

/// Max-abs of the symmetrised gradient of the lowered field; zero exactly
/// when the generator is a bivector.
double killing_residual(const Matrix4& generator);
/// True iff the symmetrised gradient d_(a V_b) vanishes.
bool killing_check(const AlgebraElement& x);

/// || [V^X, V^Y](sample) + V^{[X,Y]}(sample) ||_maxabs with analytic
/// Jacobians; the fields are affine, so this is exact up to roundoff.
double field_commutator_check(const AlgebraElement& x, const AlgebraElement& y, const Event& o,
                              const Event& sample);

/// || L V^X(sample) - V^{Ad_g X}(g . sample) ||_maxabs.
double pushforward_equivariance_check(const PoincareElement& g, const AlgebraElement& x,
                                      const Event& o, const Event& sample);

}  // namespace momap

#endif
