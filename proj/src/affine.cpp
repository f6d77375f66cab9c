#include "momap/affine.hpp"

#include <cmath>

#include "momap/errors.hpp"
#include "momap/exterior.hpp"

namespace momap {

Event point_plus(const Event& p, const FourVector& v) {
  Event r;
  for (int i = 0; i < 4; ++i) r[i] = p[i] + v[i];
  return r;
}

FourVector point_diff(const Event& p, const Event& q) {
  FourVector v;
  for (int i = 0; i < 4; ++i) v[i] = p[i] - q[i];
  return v;
}

AffineFrame::AffineFrame(Event origin, std::array<FourVector, 4> basis)
    : origin_(origin), basis_(basis) {
  Matrix4 b;  // columns are the basis vectors
  for (int i = 0; i < 4; ++i)
    for (int a = 0; a < 4; ++a) b(i, a) = basis_[static_cast<std::size_t>(a)][i];
  if (std::abs(determinant(b)) <= 1e-12) throw InvariantViolation("frame basis is singular");
  inverse_basis_ = inverse(b);
  orthonormal_ = true;
  for (int a = 0; a < 4 && orthonormal_; ++a)
    for (int c = 0; c < 4; ++c) {
      const double target = (a == c) ? kEta[static_cast<std::size_t>(a)] : 0.0;
      if (std::abs(mink_dot(basis_[static_cast<std::size_t>(a)], basis_[static_cast<std::size_t>(c)]) - target) > 1e-12) {
        orthonormal_ = false;
        break;
      }
    }
}

AffineFrame AffineFrame::global() {
  return AffineFrame(Event{}, {FourVector{1, 0, 0, 0}, FourVector{0, 1, 0, 0},
                               FourVector{0, 0, 1, 0}, FourVector{0, 0, 0, 1}});
}

std::array<double, 4> AffineFrame::coords(const Event& p) const {
  const FourVector d = point_diff(p, origin_);
  const FourVector r = inverse_basis_ * d;
  return {r[0], r[1], r[2], r[3]};
}

Event AffineFrame::point(const std::array<double, 4>& r) const {
  FourVector v;
  for (int a = 0; a < 4; ++a) v = v + basis_[static_cast<std::size_t>(a)] * r[static_cast<std::size_t>(a)];
  return point_plus(origin_, v);
}

Hyperplane::Hyperplane(FourVector u, Event z, double sigma)
    : normal(u), anchor(z), offset(sigma) {
  if (std::abs(mink_dot(u, u) - 1.0) > 1e-12)
    throw InvariantViolation("hyperplane normal must be unit timelike");
  if (u[0] <= 0.0) throw InvariantViolation("hyperplane normal must be future pointing");
}

Event Hyperplane::base_point() const { return point_plus(anchor, normal * offset); }

std::array<FourVector, 3> hyperplane_triad(const Hyperplane& sigma, int orientation) {
  const FourVector& u = sigma.normal;
  std::array<FourVector, 3> f{};
  int produced = 0;
  // canonical seeds e_1, e_2, e_3, e_0; a seed can only degenerate numerically
  const std::array<FourVector, 4> seeds = {FourVector{0, 1, 0, 0}, FourVector{0, 0, 1, 0},
                                           FourVector{0, 0, 0, 1}, FourVector{1, 0, 0, 0}};
  for (const FourVector& seed : seeds) {
    if (produced == 3) break;
    // project orthogonal to u (eta(u,u) = +1), then to the accepted triad vectors
    FourVector w = seed - u * mink_dot(u, seed);
    for (int k = 0; k < produced; ++k)
      w = w + f[static_cast<std::size_t>(k)] * mink_dot(f[static_cast<std::size_t>(k)], w);
    const double ns = -mink_dot(w, w);  // spacelike: positive
    if (ns < 1e-18) continue;           // tie-break: substitute the next canonical vector
    f[static_cast<std::size_t>(produced++)] = w / std::sqrt(ns);
  }
  if (produced != 3) throw InvariantViolation("triad construction failed");

  // orient (u, f1, f2, f3) positively with respect to the chosen volume form
  const Metric g = Metric::minkowski(4);
  const PForm eps = volume_form(g, orientation);
  const std::vector<std::vector<double>> tetrad = {to_vec(u), to_vec(f[0]), to_vec(f[1]),
                                                   to_vec(f[2])};
  if (evaluate(eps, tetrad) < 0.0) f[2] = -f[2];
  return f;
}

}  // namespace momap
