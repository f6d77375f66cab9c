#ifndef MOMAP_CENTERS_HPP
#define MOMAP_CENTERS_HPP

#include <span>
#include <vector>

#include "momap/charges.hpp"

namespace momap {

/// Straight timelike line through `point` with direction proportional to P.
struct WorldLine {
  Event point;
  FourVector direction;
};

/// Spin bivector S(u) together with the observer it refers to;
/// S(u) . u = 0 within 1e-12.
struct SpinData {
  Bivector S;
  FourVector u;

  SpinData(const Bivector& spin, const FourVector& observer);
};

/// Pi = id - P (x) u^flat / (P.u): projects onto u-perp parallel to P.
/// Throws for P.u = 0.
Matrix4 projector(const FourVector& p, const FourVector& u);

/// Centre-of-mass worldline relative to the inertial observer u:
/// point = z_ref + (J.u)/(P.u), direction = P.
WorldLine mass_center_line(const ChargeSet& c, const FourVector& u);

/// Minkowski distance from a point to a line with timelike direction
/// (the spatial norm of the component orthogonal to the direction).
double point_line_distance(const Event& q, const WorldLine& line);

/// point + lambda * direction.
Event line_point_at(const WorldLine& line, double lambda);

/// Parameter at which the line crosses the u-slice at time sigma:
/// lambda = sigma / (P.u).
double line_parameter_for_slice_time(const ChargeSet& c, const FourVector& u, double sigma);

/// S(u) = J[z] - a(z,u) /\ P = (Pi (x) Pi)(J); the two routes agree to 1e-12
/// and the result is independent of z_ref.
SpinData spin(const ChargeSet& c, const FourVector& u);

/// Orbital part L(z_ref, u) = a(z_ref, u) /\ P, so that J = S + L exactly.
Bivector orbital(const ChargeSet& c, const FourVector& u);

struct RestFrame {
  FourVector u_star;
  double m0 = 0;
};

/// u* = P/||P||, M0 = u*.P.  Throws NonTimelikeMomentum unless eta(P,P) > 0.
RestFrame rest_frame(const ChargeSet& c);

/// Axial vector of a spin tensor: S^n = -(1/2) eps_{abcd} eta^{dn} S^{ab} u^c.
/// Requires S.u = 0.
FourVector spin_vector(const SpinData& s, int orientation = +1);

/// Inverse relation: S^{mn} = -eps_{abcd} eta^{cm} eta^{dn} Svec^a u^b.
Bivector spin_from_vector(const FourVector& svec, const FourVector& u, int orientation = +1);

/// R_M = ||S*||_norm / ||P||; zero for spinless bodies.
double moller_radius(const ChargeSet& c);

struct DiscSample {
  Event point;
  double rapidity = 0;
  double distance = 0;  // spatial distance from the centroid
};

/// Intersections of the boosted-observer mass-centre lines with the
/// rest-frame plane through the centroid: for u = cosh(rho) u* + sinh(rho) n
/// the sample is centroid + (S*.u)/(P.u).  One sample per (direction,
/// rapidity) pair.  With vanishing spin every sample degenerates to the
/// centroid.
std::vector<DiscSample> moller_disc_sample(const ChargeSet& c, std::span<const double> rapidities,
                                           std::span<const FourVector> directions,
                                           int orientation = +1);

/// `count` unit directions on the great circle of u*-perp perpendicular to
/// the rotation axis (the circle of largest centre disagreement).  Falls back
/// to arbitrary spatial directions when the spin is degenerate.
std::vector<FourVector> default_disc_directions(const ChargeSet& c, int count,
                                                int orientation = +1);

/// Energy centroid on the slice: z + first moment of T(u,u) star(u^flat).
/// Throws InvariantViolation when the total energy on the slice vanishes.
Event first_moment_center(const Body& b, const Hyperplane& sigma, const Event& z,
                          const QuadratureSpec& q);

}  // namespace momap

#endif
