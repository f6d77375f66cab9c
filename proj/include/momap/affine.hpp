#ifndef MOMAP_AFFINE_HPP
#define MOMAP_AFFINE_HPP

#include <array>

#include "momap/linalg.hpp"

namespace momap {

/// Spacetime point, coordinates in the fixed global orthonormal affine frame.
struct Event {
  std::array<double, 4> x{};

  Event() = default;
  Event(double x0, double x1, double x2, double x3) : x{x0, x1, x2, x3} {}

  double operator[](int i) const { return x[static_cast<std::size_t>(i)]; }
  double& operator[](int i) { return x[static_cast<std::size_t>(i)]; }
};

/// p + v, the simply transitive translation action.
Event point_plus(const Event& p, const FourVector& v);

/// The difference map: the unique v with p = q + v.
FourVector point_diff(const Event& p, const Event& q);

/// Affine frame (o, e_0..e_3).  The basis need not be orthonormal, only
/// invertible.
class AffineFrame {
 public:
  AffineFrame(Event origin, std::array<FourVector, 4> basis);  // throws on singular basis

  static AffineFrame global();

  const Event& origin() const { return origin_; }
  const std::array<FourVector, 4>& basis() const { return basis_; }
  bool is_orthonormal() const { return orthonormal_; }

  /// r^a = theta^a(p - o).
  std::array<double, 4> coords(const Event& p) const;
  /// o + r^a e_a.
  Event point(const std::array<double, 4>& r) const;

 private:
  Event origin_;
  std::array<FourVector, 4> basis_;
  Matrix4 inverse_basis_;  // rows are the dual basis theta^a
  bool orthonormal_;
};

/// Spacelike hyperplane of simultaneity {x : (x - anchor) . u = offset}
/// with u unit timelike and future pointing.
struct Hyperplane {
  FourVector normal;  // u
  Event anchor;       // z
  double offset = 0;  // sigma

  Hyperplane(FourVector u, Event z, double sigma);  // validates u

  /// z + sigma u, a point on the plane.
  Event base_point() const;
};

/// Three spacelike vectors f_1, f_2, f_3 with eta(f_i, f_j) = -delta_ij,
/// eta(u, f_i) = 0, and (u, f_1, f_2, f_3) positively oriented with respect
/// to the volume form of the given orientation.  Deterministic: canonical
/// seeds projected and orthonormalised in index order, f_3 flipped if needed.
std::array<FourVector, 3> hyperplane_triad(const Hyperplane& sigma, int orientation = +1);

}  // namespace momap

#endif
