#include "momap/body.hpp"

#include <cmath>

#include "momap/errors.hpp"

namespace momap {

namespace {

void require_unit_future(const FourVector& u, const char* what) {
  if (std::abs(mink_dot(u, u) - 1.0) > 1e-12 || u[0] <= 0.0)
    throw InvariantViolation(std::string(what) + " must be unit timelike and future pointing");
}

double bump(double s2, BumpProfile profile) {
  // s2 = (r/R)^2 < 1
  const double base = 1.0 - s2;
  const double b3 = base * base * base;
  return profile == BumpProfile::cubic ? b3 : b3 * base;
}

}  // namespace

DustBlob::DustBlob(FourVector velocity, Event center_event, double support_radius,
                   double central_density, BumpProfile bump_profile)
    : u(velocity), center(center_event), radius(support_radius), rho0(central_density),
      profile(bump_profile) {
  require_unit_future(u, "blob velocity");
  if (radius <= 0.0) throw InvariantViolation("blob radius must be positive");
  if (rho0 < 0.0) throw InvariantViolation("blob density must be non-negative");
}

double DustBlob::density_at(const Event& x) const {
  const FourVector w = point_diff(x, center);
  const double uw = mink_dot(u, w);
  const double r2 = uw * uw - mink_dot(w, w);  // ||Pi_u w||^2, non-negative
  const double s2 = r2 / (radius * radius);
  if (s2 >= 1.0) return 0.0;
  return rho0 * bump(s2, profile);
}

Matrix4 DustBlob::stress_at(const Event& x) const {
  const double rho = density_at(x);
  Matrix4 t;
  if (rho == 0.0) return t;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) t(a, b) = rho * u[a] * u[b];
  return t;
}

Particle::Particle(double m, FourVector velocity, Event position)
    : mass(m), u(velocity), x0(position) {
  if (mass <= 0.0) throw InvariantViolation("particle mass must be positive");
  require_unit_future(u, "particle velocity");
}

Body Body::from_blob(DustBlob b) {
  Body body;
  body.blobs_.push_back(std::move(b));
  return body;
}

Body Body::from_swarm(ParticleSwarm s) {
  Body body;
  body.swarm_ = std::move(s);
  return body;
}

Body Body::from_field(SampledField f) {
  Body body;
  body.fields_.push_back(std::move(f));
  return body;
}

Body& Body::add(DustBlob b) {
  if (swarm_) throw InvariantViolation("cannot superpose continuous pieces onto a swarm");
  blobs_.push_back(std::move(b));
  return *this;
}

Body& Body::add(SampledField f) {
  if (swarm_) throw InvariantViolation("cannot superpose continuous pieces onto a swarm");
  fields_.push_back(std::move(f));
  return *this;
}

const ParticleSwarm& Body::swarm() const {
  if (!swarm_) throw InvariantViolation("body is not a swarm");
  return *swarm_;
}

std::vector<Body::Piece> Body::pieces() const {
  std::vector<Piece> out;
  for (const DustBlob& b : blobs_)
    out.push_back({[b](const Event& x) { return b.stress_at(x); }, b.tube()});
  for (const SampledField& f : fields_) out.push_back({f.evaluator, f.support});
  return out;
}

Matrix4 eval_T(const Body& b, const Event& x) {
  if (b.is_swarm())
    throw InvariantViolation("swarm bodies have no pointwise energy-momentum density");
  Matrix4 t;
  for (const DustBlob& blob : b.blobs()) t = t + blob.stress_at(x);
  for (const SampledField& f : b.fields()) t = t + f.evaluator(x);
  return t;
}

FourVector divergence_fd(const Body& b, const Event& x, double h) {
  FourVector div;
  for (int a = 0; a < 4; ++a) {
    Event xp = x;
    Event xm = x;
    xp[a] += h;
    xm[a] -= h;
    const Matrix4 tp = eval_T(b, xp);
    const Matrix4 tm = eval_T(b, xm);
    for (int c = 0; c < 4; ++c) div[c] += (tp(a, c) - tm(a, c)) / (2.0 * h);
  }
  return div;
}

PForm three_form(const Body& b, const AlgebraElement& x_alg, const Event& o, const Event& x,
                 int orientation) {
  const Matrix4 t = eval_T(b, x);
  const FourVector v_low = lower_index(fundamental_field(x_alg, o, x));
  // (i_V T)_b = V^a T_ab = eta_bd T^{dc} (V lowered)_c: contract, then lower.
  FourVector s;
  for (int d = 0; d < 4; ++d) {
    double acc = 0.0;
    for (int c = 0; c < 4; ++c) acc += t(d, c) * v_low[c];
    s[d] = acc;
  }
  const Metric g = Metric::minkowski(4);
  return hodge(one_form(lower_index(s)), g, volume_form(g, orientation));
}

std::optional<double> closedness_fd(const Body& b, const AlgebraElement& x_alg, const Event& o,
                                    const Event& x, double h, int orientation) {
  if (b.is_swarm()) return std::nullopt;  // distributional source, derivative undefined
  // single independent component of the exterior derivative of a 3-form:
  // (dT)_{0123} = d_0 T_{123} - d_1 T_{023} + d_2 T_{013} - d_3 T_{012}
  const std::array<std::array<int, 3>, 4> rest = {
      std::array<int, 3>{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}};
  double total = 0.0;
  for (int a = 0; a < 4; ++a) {
    Event xp = x;
    Event xm = x;
    xp[a] += h;
    xm[a] -= h;
    const PForm fp = three_form(b, x_alg, o, xp, orientation);
    const PForm fm = three_form(b, x_alg, o, xm, orientation);
    const double deriv =
        (fp.component(rest[static_cast<std::size_t>(a)]) -
         fm.component(rest[static_cast<std::size_t>(a)])) /
        (2.0 * h);
    total += (a % 2 == 0 ? 1.0 : -1.0) * deriv;
  }
  return std::abs(total);
}

Body pushforward_body(const Body& b, const PoincareElement& g, const Event& o) {
  if (b.is_swarm()) {
    ParticleSwarm s;
    for (const Particle& p : b.swarm().particles)
      s.particles.emplace_back(p.mass, g.L * p.u, act_on_point(g, p.x0, o));
    return Body::from_swarm(std::move(s));
  }
  Body out;
  for (const DustBlob& blob : b.blobs())
    out.add(DustBlob(g.L * blob.u, act_on_point(g, blob.center, o), blob.radius, blob.rho0,
                     blob.profile));
  const PoincareElement ginv = inverse(g);
  for (const SampledField& f : b.fields()) {
    const Matrix4 l = g.L.m;
    auto old_eval = f.evaluator;
    auto eval = [l, ginv, o, old_eval](const Event& y) {
      const Matrix4 t = old_eval(act_on_point(ginv, y, o));
      Matrix4 r = l * t * l.transpose();
      // keep the contract symmetric against roundoff
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
          const double m = 0.5 * (r(i, j) + r(j, i));
          r(i, j) = m;
          r(j, i) = m;
        }
      return r;
    };
    out.add(SampledField{eval,
                         {g.L * f.support.u, act_on_point(g, f.support.center, o),
                          f.support.radius}});
  }
  return out;
}

bool weak_energy_check(const Body& b,
                       std::span<const std::pair<Event, FourVector>> samples) {
  for (const auto& [x, u] : samples) {
    require_unit_future(u, "weak-energy sample velocity");
    if (b.is_swarm()) continue;  // positive masses, trivially satisfied
    const Matrix4 t = eval_T(b, x);
    const FourVector ul = lower_index(u);
    double s = 0.0;
    for (int a = 0; a < 4; ++a)
      for (int c = 0; c < 4; ++c) s += t(a, c) * ul[a] * ul[c];
    if (s < -1e-12) return false;
  }
  return true;
}

}  // namespace momap
