#include "momap/centers.hpp"

#include <cmath>

#include "momap/errors.hpp"
#include "momap/exterior.hpp"

namespace momap {

namespace {

// Levi-Civita symbol in 4D, eps_{0123} = +1.
int eps4(int a, int b, int c, int d) {
  const int idx[4] = {a, b, c, d};
  int sign = 1;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      if (idx[i] == idx[j]) return 0;
      if (idx[i] > idx[j]) sign = -sign;
    }
  return sign;
}

double require_pu(const FourVector& p, const FourVector& u) {
  const double pu = mink_dot(p, u);
  if (std::abs(pu) < 1e-300) throw InvariantViolation("P.u vanishes; projector is degenerate");
  return pu;
}

}  // namespace

SpinData::SpinData(const Bivector& spin_tensor, const FourVector& observer)
    : S(spin_tensor), u(observer) {
  const FourVector su = contract_right(S, u);
  const double scale = std::max(1.0, max_abs(S));
  if (max_abs(su) > 1e-12 * scale)
    throw InvariantViolation("spin tensor must annihilate its observer");
}

Matrix4 projector(const FourVector& p, const FourVector& u) {
  const double pu = require_pu(p, u);
  const FourVector ul = lower_index(u);
  Matrix4 pi = Matrix4::identity();
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) pi(a, b) -= p[a] * ul[b] / pu;
  return pi;
}

WorldLine mass_center_line(const ChargeSet& c, const FourVector& u) {
  if (mink_dot(c.P, c.P) <= 0.0)
    throw NonTimelikeMomentum("mass centre requires timelike momentum");
  const double pu = require_pu(c.P, u);
  const FourVector shift = contract_right(c.J, u) / pu;
  return WorldLine{point_plus(c.z_ref, shift), c.P};
}

double point_line_distance(const Event& q, const WorldLine& line) {
  const FourVector dir = line.direction / mink_norm(line.direction);
  const FourVector w = point_diff(q, line.point);
  const FourVector perp = w - dir * mink_dot(w, dir);  // spacelike or zero
  return std::sqrt(std::max(0.0, -mink_dot(perp, perp)));
}

Event line_point_at(const WorldLine& line, double lambda) {
  return point_plus(line.point, line.direction * lambda);
}

double line_parameter_for_slice_time(const ChargeSet& c, const FourVector& u, double sigma) {
  return sigma / require_pu(c.P, u);
}

SpinData spin(const ChargeSet& c, const FourVector& u) {
  const double pu = require_pu(c.P, u);
  const FourVector a = contract_right(c.J, u) / pu;
  const Bivector route1 = c.J - wedge(a, c.P);
  const Bivector route2 = congruence(projector(c.P, u), c.J);
  const double scale = std::max(1.0, max_abs(c.J));
  if (max_abs(route1 - route2) > 1e-12 * scale)
    throw InvariantViolation("spin formulas disagree beyond tolerance");
  return SpinData(route1, u);
}

Bivector orbital(const ChargeSet& c, const FourVector& u) {
  const double pu = require_pu(c.P, u);
  const FourVector a = contract_right(c.J, u) / pu;
  return wedge(a, c.P);
}

RestFrame rest_frame(const ChargeSet& c) {
  const double p2 = mink_dot(c.P, c.P);
  if (p2 <= 0.0)
    throw NonTimelikeMomentum("momentum is not timelike; energy dominance violated");
  const double norm = std::sqrt(p2);
  return RestFrame{c.P / norm, norm};
}

FourVector spin_vector(const SpinData& s, int orientation) {
  FourVector out;
  for (int n = 0; n < 4; ++n) {
    double acc = 0.0;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int c = 0; c < 4; ++c) {
          const int e = eps4(a, b, c, n);
          if (e == 0) continue;
          acc += e * s.S(a, b) * s.u[c];
        }
    out[n] = -0.5 * orientation * kEta[static_cast<std::size_t>(n)] * acc;
  }
  return out;
}

Bivector spin_from_vector(const FourVector& svec, const FourVector& u, int orientation) {
  Bivector s;
  for (int m = 0; m < 4; ++m)
    for (int n = m + 1; n < 4; ++n) {
      double acc = 0.0;
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
          const int e = eps4(a, b, m, n);
          if (e == 0) continue;
          acc += e * svec[a] * u[b];
        }
      const double val = -orientation * kEta[static_cast<std::size_t>(m)] *
                         kEta[static_cast<std::size_t>(n)] * acc;
      s(m, n) = val;
      s(n, m) = -val;
    }
  return s;
}

double moller_radius(const ChargeSet& c) {
  const RestFrame rest = rest_frame(c);
  const SpinData s = spin(c, rest.u_star);
  return bivector_norm(s.S) / rest.m0;
}

std::vector<DiscSample> moller_disc_sample(const ChargeSet& c, std::span<const double> rapidities,
                                           std::span<const FourVector> directions,
                                           int orientation) {
  (void)orientation;  // the sample set itself carries no orientation dependence
  const RestFrame rest = rest_frame(c);
  const SpinData s_star = spin(c, rest.u_star);
  const Event centroid = mass_center_line(c, rest.u_star).point;
  // degenerate spin: the disc collapses to the centroid
  const bool degenerate = bivector_norm(s_star.S) <= 1e-12 * rest.m0;

  std::vector<DiscSample> samples;
  samples.reserve(rapidities.size() * directions.size());
  for (const FourVector& raw : directions) {
    // project onto u*-perp and normalise spatially
    FourVector n = raw - rest.u_star * mink_dot(rest.u_star, raw);
    const double ns = -mink_dot(n, n);
    if (ns < 1e-24) throw InvariantViolation("disc direction is parallel to u*");
    n = n / std::sqrt(ns);
    for (double rho : rapidities) {
      DiscSample sample;
      sample.rapidity = rho;
      if (degenerate) {
        sample.point = centroid;
        sample.distance = 0.0;
      } else {
        const FourVector u = rest.u_star * std::cosh(rho) + n * std::sinh(rho);
        const FourVector offset = contract_right(s_star.S, u) / mink_dot(c.P, u);
        sample.point = point_plus(centroid, offset);
        sample.distance = std::sqrt(std::max(0.0, -mink_dot(offset, offset)));
      }
      samples.push_back(sample);
    }
  }
  return samples;
}

std::vector<FourVector> default_disc_directions(const ChargeSet& c, int count, int orientation) {
  const RestFrame rest = rest_frame(c);
  const SpinData s_star = spin(c, rest.u_star);

  FourVector axis{0, 0, 0, 1};
  if (bivector_norm(s_star.S) > 1e-12 * rest.m0) {
    const FourVector sv = spin_vector(s_star, orientation);
    axis = sv / std::sqrt(-mink_dot(sv, sv));
  }
  // orthonormal pair spanning the plane perpendicular to u* and the axis
  std::array<FourVector, 2> plane{};
  int produced = 0;
  const std::array<FourVector, 4> seeds = {FourVector{0, 1, 0, 0}, FourVector{0, 0, 1, 0},
                                           FourVector{0, 0, 0, 1}, FourVector{1, 0, 0, 0}};
  for (const FourVector& seed : seeds) {
    if (produced == 2) break;
    FourVector w = seed - rest.u_star * mink_dot(rest.u_star, seed);
    w = w + axis * mink_dot(axis, w);
    for (int k = 0; k < produced; ++k)
      w = w + plane[static_cast<std::size_t>(k)] * mink_dot(plane[static_cast<std::size_t>(k)], w);
    const double ns = -mink_dot(w, w);
    if (ns < 1e-18) continue;
    plane[static_cast<std::size_t>(produced++)] = w / std::sqrt(ns);
  }
  if (produced != 2) throw InvariantViolation("failed to span the disc plane");

  std::vector<FourVector> directions;
  directions.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    const double phi = 2.0 * 3.14159265358979323846 * k / count;
    directions.push_back(plane[0] * std::cos(phi) + plane[1] * std::sin(phi));
  }
  return directions;
}

Event first_moment_center(const Body& b, const Hyperplane& sigma, const Event& z,
                          const QuadratureSpec& q) {
  if (b.is_swarm()) {
    // energy-weighted mean of the worldline intersections with the slice
    double energy = 0.0;
    FourVector moment;
    const FourVector u = sigma.normal;
    for (const Particle& p : b.swarm().particles) {
      const double tau =
          (sigma.offset - mink_dot(point_diff(p.x0, sigma.anchor), u)) / mink_dot(p.u, u);
      const Event hit = point_plus(p.x0, p.u * tau);
      const double e = p.mass * mink_dot(p.u, u);
      energy += e;
      moment = moment + point_diff(hit, z) * e;
    }
    if (energy <= 0.0) throw InvariantViolation("total energy on the slice vanishes");
    return point_plus(z, moment / energy);
  }

  const FourVector u_low = lower_index(sigma.normal);
  const auto vals = integrate_on_hyperplane(
      b, sigma, q, 5,
      [&](const Event& x, const Matrix4& t, std::span<double> out) {
        double density = 0.0;  // T(u,u) = T^{ab} u_a u_b
        for (int a = 0; a < 4; ++a)
          for (int c = 0; c < 4; ++c) density += t(a, c) * u_low[a] * u_low[c];
        out[0] = density;
        const FourVector r = point_diff(x, z);
        for (int a = 0; a < 4; ++a) out[static_cast<std::size_t>(a + 1)] = r[a] * density;
      });
  if (vals[0] <= 0.0) throw InvariantViolation("total energy on the slice vanishes");
  const FourVector moment{vals[1], vals[2], vals[3], vals[4]};
  return point_plus(z, moment / vals[0]);
}

}  // namespace momap
