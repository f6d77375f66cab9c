#include "momap/charges.hpp"

#include <algorithm>
#include <cmath>

#include "momap/errors.hpp"
#include "momap/exterior.hpp"

namespace momap {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Kahan {
  double sum = 0.0;
  double carry = 0.0;
  void add(double v) {
    const double y = v - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

// Newton iteration on the Legendre recurrence.
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(static_cast<std::size_t>(n), 0.0);
  w.assign(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double t = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = t;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (t * p1 - p0) / (t * t - 1.0);
      const double dt = p1 / dp;
      t -= dt;
      if (std::abs(dt) < 1e-15) break;
    }
    x[static_cast<std::size_t>(i)] = -t;
    x[static_cast<std::size_t>(n - 1 - i)] = t;
    const double wi = 2.0 / ((1.0 - t * t) * dp * dp);
    w[static_cast<std::size_t>(i)] = wi;
    w[static_cast<std::size_t>(n - 1 - i)] = wi;
  }
}

void midpoint(int n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(static_cast<std::size_t>(n), 0.0);
  w.assign(static_cast<std::size_t>(n), 2.0 / n);
  for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = -1.0 + (2.0 * i + 1.0) / n;
}

struct AxisRange {
  double lo = 0.0;
  double hi = 0.0;
};

// Bounding box, in triad coordinates, of the tube's intersection with the
// hyperplane.  The constraint ||Pi_u(x(t) - c)||^2 <= R^2 is the ellipsoid
// t^T Q t + 2 l.t + c0 <= R^2 with Q = I + a a^T, inverted by
// Sherman-Morrison.
std::array<AxisRange, 3> support_box(const SupportTube& tube, const Event& base,
                                     const std::array<FourVector, 3>& triad, double padding) {
  const FourVector w0 = point_diff(base, tube.center);
  const double a0 = mink_dot(tube.u, w0);
  std::array<double, 3> a{};
  std::array<double, 3> bw{};
  for (std::size_t i = 0; i < 3; ++i) {
    a[i] = mink_dot(tube.u, triad[i]);
    bw[i] = mink_dot(w0, triad[i]);
  }
  const double c0 = a0 * a0 - mink_dot(w0, w0);
  std::array<double, 3> l{};
  for (std::size_t i = 0; i < 3; ++i) l[i] = a0 * a[i] - bw[i];
  const double a2 = a[0] * a[0] + a[1] * a[1] + a[2] * a[2];
  std::array<double, 3> center{};
  for (std::size_t i = 0; i < 3; ++i) {
    double qinv_l = l[i];
    for (std::size_t j = 0; j < 3; ++j) qinv_l -= a[i] * a[j] * l[j] / (1.0 + a2);
    center[i] = -qinv_l;
  }
  double qmin = c0;
  for (std::size_t i = 0; i < 3; ++i) qmin += l[i] * center[i];
  const double level = std::max(tube.radius * tube.radius - qmin, 0.0);
  std::array<AxisRange, 3> box{};
  for (std::size_t i = 0; i < 3; ++i) {
    const double qinv_ii = 1.0 - a[i] * a[i] / (1.0 + a2);
    const double half = std::sqrt(level * qinv_ii) * (1.0 + padding);
    box[i] = {center[i] - half, center[i] + half};
  }
  return box;
}

// Induced measure scale (star u^flat)(f1, f2, f3); +1 for a triad oriented
// consistently with the chosen volume form.
double measure_scale(const Hyperplane& sigma, const std::array<FourVector, 3>& triad,
                     int orientation) {
  const Metric g = Metric::minkowski(4);
  const PForm dmu = hodge(one_form(lower_index(sigma.normal)), g, volume_form(g, orientation));
  return evaluate3(dmu, triad[0], triad[1], triad[2]);
}

ChargeSet swarm_charges(const ParticleSwarm& s, const Hyperplane& sigma, const Event& z) {
  FourVector p;
  Bivector j;
  for (const Particle& part : s.particles) {
    const FourVector momentum = part.u * part.mass;
    // worldline x0 + tau u meets the plane at tau = (sigma - (x0 - anchor).u) / (u_i.u)
    const double tau = (sigma.offset - mink_dot(point_diff(part.x0, sigma.anchor), sigma.normal)) /
                       mink_dot(part.u, sigma.normal);
    const Event hit = point_plus(part.x0, part.u * tau);
    p = p + momentum;
    j = j + wedge(point_diff(hit, z), momentum);
  }
  return ChargeSet(p, j, z, 0.0);
}

double charge_scale(const ChargeSet& a, const ChargeSet& b) {
  return std::max({max_abs(a.P), max_abs(b.P), max_abs(a.J), max_abs(b.J), 1e-300});
}

double charge_deviation(const ChargeSet& a, const ChargeSet& b) {
  const double d = std::max(max_abs(a.P - b.P), max_abs(a.J - b.J));
  return d / charge_scale(a, b);
}

ChargeSet charges_at_resolution(const Body& b, const Hyperplane& sigma, const Event& z,
                                const QuadratureSpec& q) {
  const FourVector u_low = lower_index(sigma.normal);
  const auto vals = integrate_on_hyperplane(
      b, sigma, q, 10,
      [&](const Event& x, const Matrix4& t, std::span<double> out) {
        FourVector flux;  // T^{ab} u_b
        for (int a = 0; a < 4; ++a) {
          double s = 0.0;
          for (int c = 0; c < 4; ++c) s += t(a, c) * u_low[c];
          flux[a] = s;
        }
        const FourVector r = point_diff(x, z);
        for (int a = 0; a < 4; ++a) out[static_cast<std::size_t>(a)] = flux[a];
        std::size_t slot = 4;
        for (int a = 0; a < 4; ++a)
          for (int c = a + 1; c < 4; ++c) out[slot++] = r[a] * flux[c] - r[c] * flux[a];
      });

  FourVector p;
  Bivector j;
  for (int a = 0; a < 4; ++a) p[a] = vals[static_cast<std::size_t>(a)];
  std::size_t slot = 4;
  for (int a = 0; a < 4; ++a)
    for (int c = a + 1; c < 4; ++c) {
      j(a, c) = vals[slot];
      j(c, a) = -vals[slot];
      ++slot;
    }
  return ChargeSet(p, j, z);
}

}  // namespace

QuadratureSpec::QuadratureSpec(int n, QuadratureRule r, double pad)
    : points_per_axis(n), rule(r), support_padding(pad) {
  if (n < 2) throw InvariantViolation("points_per_axis must be at least 2");
}

void quadrature_nodes(int n, QuadratureRule rule, std::vector<double>& nodes,
                      std::vector<double>& weights) {
  if (n < 2) throw InvariantViolation("points_per_axis must be at least 2");
  if (rule == QuadratureRule::gauss_legendre)
    gauss_legendre(n, nodes, weights);
  else
    midpoint(n, nodes, weights);
}

std::vector<double> integrate_on_hyperplane(
    const Body& b, const Hyperplane& sigma, const QuadratureSpec& q, int k,
    const std::function<void(const Event&, const Matrix4&, std::span<double>)>& integrand,
    int orientation) {
  if (b.is_swarm())
    throw InvariantViolation("swarm bodies are handled by closed-form summation");
  if (q.points_per_axis < 2) throw InvariantViolation("points_per_axis must be at least 2");

  const auto triad = hyperplane_triad(sigma, orientation);
  const double mu = measure_scale(sigma, triad, orientation);
  const Event base = sigma.base_point();

  std::vector<double> nodes;
  std::vector<double> weights;
  quadrature_nodes(q.points_per_axis, q.rule, nodes, weights);
  const std::size_t n = nodes.size();

  std::vector<Kahan> acc(static_cast<std::size_t>(k));
  std::vector<double> vals(static_cast<std::size_t>(k));
  for (const Body::Piece& piece : b.pieces()) {
    const auto box = support_box(piece.tube, base, triad, q.support_padding);
    std::array<std::vector<double>, 3> t;
    double cell = 1.0;
    for (std::size_t i = 0; i < 3; ++i) {
      const double mid = 0.5 * (box[i].hi + box[i].lo);
      const double half = 0.5 * (box[i].hi - box[i].lo);
      cell *= half;
      t[i].resize(n);
      for (std::size_t m = 0; m < n; ++m) t[i][m] = mid + half * nodes[m];
    }
    std::vector<Kahan> piece_acc(static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t m = 0; m < n; ++m) {
          const double w = weights[i] * weights[j] * weights[m];
          Event x = base;
          for (int c = 0; c < 4; ++c)
            x[c] += t[0][i] * triad[0][c] + t[1][j] * triad[1][c] + t[2][m] * triad[2][c];
          std::fill(vals.begin(), vals.end(), 0.0);
          integrand(x, piece.eval(x), vals);
          for (std::size_t c = 0; c < vals.size(); ++c) piece_acc[c].add(vals[c] * w);
        }
    for (std::size_t c = 0; c < acc.size(); ++c) acc[c].add(piece_acc[c].sum * cell * mu);
  }

  std::vector<double> out(static_cast<std::size_t>(k));
  for (std::size_t c = 0; c < out.size(); ++c) out[c] = acc[c].sum;
  return out;
}

ChargeSet::ChargeSet(FourVector p, Bivector j, Event z, double err)
    : P(p), J(j), z_ref(z), quad_error(err) {
  if (!is_antisymmetric(J)) throw InvariantViolation("charge bivector must be antisymmetric");
}

ChargeSet integrate_charges(const Body& b, const Hyperplane& sigma, const Event& z,
                            const QuadratureSpec& q, double convergence_tol) {
  if (b.is_swarm()) return swarm_charges(b.swarm(), sigma, z);

  ChargeSet result = charges_at_resolution(b, sigma, z, q);
  QuadratureSpec fine = q;
  fine.points_per_axis = q.points_per_axis + std::max(2, q.points_per_axis / 3);
  const ChargeSet refined = charges_at_resolution(b, sigma, z, fine);
  result.quad_error = charge_deviation(result, refined);
  if (result.quad_error > convergence_tol)
    throw QuadratureError("quadrature refinement disagreement " +
                          std::to_string(result.quad_error) + " exceeds tolerance");
  return result;
}

double momentum_map(const Body& b, const AlgebraElement& x_alg, const Event& o,
                    const Hyperplane& sigma, const QuadratureSpec& q, int orientation) {
  if (b.is_swarm()) return momentum_from_charges(integrate_charges(b, sigma, o, q), x_alg);

  const auto triad = hyperplane_triad(sigma, orientation);
  const Metric g = Metric::minkowski(4);
  const PForm eps = volume_form(g, orientation);

  // pull the charge 3-form back onto the triad chart and integrate
  const auto vals = integrate_on_hyperplane(
      b, sigma, q, 1,
      [&](const Event& x, const Matrix4& t, std::span<double> out) {
        const FourVector v_low = lower_index(fundamental_field(x_alg, o, x));
        FourVector s;
        for (int d = 0; d < 4; ++d) {
          double acc = 0.0;
          for (int c = 0; c < 4; ++c) acc += t(d, c) * v_low[c];
          s[d] = acc;
        }
        const PForm form = hodge(one_form(lower_index(s)), g, eps);
        out[0] = evaluate3(form, triad[0], triad[1], triad[2]);
      },
      orientation);
  return vals[0];
}

double momentum_from_charges(const ChargeSet& c, const AlgebraElement& x) {
  return pairing(to_dual(c), x);
}

ChargeSet rebase(const ChargeSet& c, const FourVector& a) {
  return ChargeSet(c.P, c.J - wedge(a, c.P), point_plus(c.z_ref, a), c.quad_error);
}

DualElement to_dual(const ChargeSet& c) {
  return DualElement(lower_index(c.P), c.J * -1.0);
}

ChargeSet from_dual(const DualElement& d, const Event& z_ref, double quad_error) {
  return ChargeSet(raise_index(d.p), d.J * -1.0, z_ref, quad_error);
}

double slice_independence_check(const Body& b, const FourVector& u, double sigma1, double sigma2,
                                const Event& z, const QuadratureSpec& q) {
  const ChargeSet c1 = integrate_charges(b, Hyperplane(u, z, sigma1), z, q);
  const ChargeSet c2 = integrate_charges(b, Hyperplane(u, z, sigma2), z, q);
  return charge_deviation(c1, c2);
}

double equivariance_check(const Body& b, const PoincareElement& g, const Event& o,
                          const Hyperplane& sigma, const QuadratureSpec& q) {
  const ChargeSet base = integrate_charges(b, sigma, o, q);
  const Body pushed = pushforward_body(b, g, o);
  const Hyperplane pushed_plane(g.L * sigma.normal, act_on_point(g, sigma.anchor, o),
                                sigma.offset);
  const ChargeSet direct = integrate_charges(pushed, pushed_plane, o, q);
  const ChargeSet via_dual = from_dual(coAd(g, to_dual(base)), o);
  return charge_deviation(direct, via_dual);
}

}  // namespace momap
