#ifndef MOMAP_CHARGES_HPP
#define MOMAP_CHARGES_HPP

#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "momap/affine.hpp"
#include "momap/body.hpp"
#include "momap/poincare.hpp"

namespace momap {

enum class QuadratureRule { gauss_legendre, midpoint };

struct QuadratureSpec {
  int points_per_axis = 48;
  QuadratureRule rule = QuadratureRule::gauss_legendre;
  double support_padding = 0.02;  // relative padding of each support box

  QuadratureSpec() = default;
  QuadratureSpec(int n, QuadratureRule r = QuadratureRule::gauss_legendre, double pad = 0.02);
};

/// Nodes and weights on [-1, 1].
void quadrature_nodes(int n, QuadratureRule rule, std::vector<double>& nodes,
                      std::vector<double>& weights);

/// Tensor-product quadrature of a k-component integrand over the body's
/// support on the hyperplane, with the induced measure star(u^flat).  Each
/// continuous piece is integrated over its own support bounding box in triad
/// coordinates.  Accumulation is fixed-order and compensated, so results are
/// bit-stable for a given spec.  Swarm bodies are rejected.
std::vector<double> integrate_on_hyperplane(
    const Body& b, const Hyperplane& sigma, const QuadratureSpec& q, int k,
    const std::function<void(const Event&, const Matrix4&, std::span<double>)>& integrand,
    int orientation = +1);

/// Conserved charges: index-raised momentum P^a and angular bivector
/// J^{ab}[z_ref].  quad_error is the max-abs refinement disagreement over
/// all components, divided by the overall charge scale (0 for swarms).
struct ChargeSet {
  FourVector P;
  Bivector J;
  Event z_ref;
  double quad_error = 0.0;

  ChargeSet(FourVector p, Bivector j, Event z, double err = 0.0);
};

/// P^a = int T^a_b u^b dmu and J^{ab}[z] = int [(x-z)^a T^b_c - (x-z)^b T^a_c] u^c dmu
/// over the hyperplane, dmu = star(u^flat).  Continuous pieces are integrated
/// by tensor-product quadrature over their own support boxes; swarms are
/// summed in closed form.  Throws QuadratureError when the refinement
/// disagreement exceeds convergence_tol.
ChargeSet integrate_charges(const Body& b, const Hyperplane& sigma, const Event& z,
                            const QuadratureSpec& q,
                            double convergence_tol = std::numeric_limits<double>::infinity());

/// The momentum functional evaluated on X: the direct integral of the charge
/// 3-form over the hyperplane.
double momentum_map(const Body& b, const AlgebraElement& x, const Event& o,
                    const Hyperplane& sigma, const QuadratureSpec& q, int orientation = +1);

/// The same number from an already-integrated ChargeSet (z_ref must be o).
double momentum_from_charges(const ChargeSet& c, const AlgebraElement& x);

/// Move the reference point: z -> z + a, J -> J - a /\ P, P unchanged.
ChargeSet rebase(const ChargeSet& c, const FourVector& a);

/// The charges as an element of the dual of the Lie algebra.  The angular
/// slot of the dual carries the opposite sign of the moment integral J: the
/// flow convention for fundamental fields fixes the pairing that way.
DualElement to_dual(const ChargeSet& c);
ChargeSet from_dual(const DualElement& d, const Event& z_ref, double quad_error = 0.0);

/// Max relative deviation of (P, J) between the slices Sigma(u, sigma1) and
/// Sigma(u, sigma2) through z.
double slice_independence_check(const Body& b, const FourVector& u, double sigma1, double sigma2,
                                const Event& z, const QuadratureSpec& q);

/// Both routes around the equivariance square: charges of the pushed-forward
/// body on the pushed slice versus the co-adjoint action on the original
/// charges.  Returns the max deviation relative to the charge scale.
double equivariance_check(const Body& b, const PoincareElement& g, const Event& o,
                          const Hyperplane& sigma, const QuadratureSpec& q);

}  // namespace momap

#endif
