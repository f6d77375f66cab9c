#include "momap/scene.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "momap/errors.hpp"

namespace momap {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<double> parse_numbers(const std::string& value, std::size_t expected,
                                  const std::string& key) {
  std::istringstream in(value);
  std::vector<double> out;
  double x;
  while (in >> x) out.push_back(x);
  std::string rest;
  if (in.clear(), in >> rest)
    throw ParseError("key '" + key + "': trailing junk '" + rest + "'");
  if (out.size() != expected)
    throw ParseError("key '" + key + "': expected " + std::to_string(expected) +
                     " numbers, got " + std::to_string(out.size()));
  return out;
}

double parse_number(const std::string& value, const std::string& key) {
  return parse_numbers(value, 1, key)[0];
}

FourVector velocity_from_3(const std::vector<double>& v) {
  const double b2 = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
  if (b2 >= 1.0) throw InvariantViolation("three-velocity must be below light speed");
  const double gamma = 1.0 / std::sqrt(1.0 - b2);
  return {gamma, gamma * v[0], gamma * v[1], gamma * v[2]};
}

using Section = std::vector<std::pair<std::string, std::string>>;

// typed key lookup over one parsed section
class Keys {
 public:
  Keys(const Section& entries, std::string section) : section_(std::move(section)) {
    for (const auto& [k, v] : entries) {
      if (seen_.count(k)) throw ParseError("[" + section_ + "]: duplicate key '" + k + "'");
      seen_.emplace(k, v);
    }
  }

  bool has(const std::string& key) const { return seen_.count(key) > 0; }

  std::string take(const std::string& key) {
    auto it = seen_.find(key);
    if (it == seen_.end()) throw ParseError("[" + section_ + "]: missing key '" + key + "'");
    used_.insert(key);
    return it->second;
  }

  std::string take_or(const std::string& key, const std::string& fallback) {
    auto it = seen_.find(key);
    if (it == seen_.end()) return fallback;
    used_.insert(key);
    return it->second;
  }

  // a four-velocity, either `velocity3 = vx vy vz` or raw `u = u0 u1 u2 u3`
  FourVector take_velocity() {
    if (has("velocity3") && has("u"))
      throw ParseError("[" + section_ + "]: give either velocity3 or u, not both");
    if (has("velocity3")) return velocity_from_3(parse_numbers(take("velocity3"), 3, "velocity3"));
    if (has("u")) {
      const auto raw = parse_numbers(take("u"), 4, "u");
      const FourVector u{raw[0], raw[1], raw[2], raw[3]};
      if (std::abs(mink_dot(u, u) - 1.0) > 1e-12 || u[0] <= 0.0)
        throw InvariantViolation("[" + section_ + "]: u must be unit timelike, future pointing");
      return u;
    }
    throw ParseError("[" + section_ + "]: missing velocity3 or u");
  }

  void finish() const {
    for (const auto& [k, v] : seen_) {
      (void)v;
      if (!used_.count(k)) throw ParseError("[" + section_ + "]: unknown key '" + k + "'");
    }
  }

 private:
  std::string section_;
  std::map<std::string, std::string> seen_;
  std::set<std::string> used_;
};

Event event_from(const std::vector<double>& v) { return {v[0], v[1], v[2], v[3]}; }

SampledField build_field(const Scene::FieldSpec& f) {
  const DustBlob carrier(f.u, f.center, f.radius, f.rho0);
  if (f.kind == "dust_like") {
    auto eval = [carrier](const Event& x) { return carrier.stress_at(x); };
    return SampledField{eval, carrier.tube()};
  }
  if (f.kind == "time_modulated") {
    const double amplitude = f.amplitude;
    const double omega = f.omega;
    auto eval = [carrier, amplitude, omega](const Event& x) {
      return carrier.stress_at(x) * (1.0 + amplitude * std::sin(omega * x[0]));
    };
    return SampledField{eval, carrier.tube()};
  }
  throw ParseError("[field]: unknown kind '" + f.kind + "'");
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt4(const std::array<double, 4>& v) {
  return fmt(v[0]) + " " + fmt(v[1]) + " " + fmt(v[2]) + " " + fmt(v[3]);
}

}  // namespace

Scene parse_scene(std::istream& in) {
  std::vector<std::pair<std::string, Section>> sections;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line.substr(0, line.find('#')));
    if (t.empty()) continue;
    if (t.front() == '[') {
      if (t.back() != ']')
        throw ParseError("line " + std::to_string(lineno) + ": unterminated section header");
      sections.emplace_back(trim(t.substr(1, t.size() - 2)), Section{});
      continue;
    }
    const auto eq = t.find('=');
    if (eq == std::string::npos)
      throw ParseError("line " + std::to_string(lineno) + ": expected key = value");
    if (sections.empty())
      throw ParseError("line " + std::to_string(lineno) + ": key outside any section");
    sections.back().second.emplace_back(trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
  }

  Scene s;
  bool saw_scene = false;
  for (const auto& [name, entries] : sections) {
    Keys keys(entries, name);
    if (name == "scene") {
      if (saw_scene) throw ParseError("duplicate [scene] section");
      saw_scene = true;
      s.origin = event_from(parse_numbers(keys.take_or("origin", "0 0 0 0"), 4, "origin"));
      const double orient = parse_number(keys.take_or("orientation", "1"), "orientation");
      if (orient != 1.0 && orient != -1.0)
        throw InvariantViolation("[scene]: orientation must be +1 or -1");
      s.orientation = static_cast<int>(orient);
      const double n = parse_number(keys.take_or("points_per_axis", "48"), "points_per_axis");
      if (n != std::floor(n) || n < 2)
        throw InvariantViolation("[scene]: points_per_axis must be an integer >= 2");
      const std::string rule = keys.take_or("rule", "gauss-legendre");
      QuadratureRule qr;
      if (rule == "gauss-legendre")
        qr = QuadratureRule::gauss_legendre;
      else if (rule == "midpoint")
        qr = QuadratureRule::midpoint;
      else
        throw ParseError("[scene]: unknown rule '" + rule + "'");
      const double pad = parse_number(keys.take_or("support_padding", "0.02"), "support_padding");
      if (pad < 0.0) throw InvariantViolation("[scene]: support_padding must be non-negative");
      s.quadrature = QuadratureSpec(static_cast<int>(n), qr, pad);
    } else if (name == "blob") {
      Scene::BlobSpec b;
      b.center = event_from(parse_numbers(keys.take_or("center", "0 0 0 0"), 4, "center"));
      b.u = keys.take_velocity();
      b.radius = parse_number(keys.take_or("radius", "1"), "radius");
      b.rho0 = parse_number(keys.take_or("rho0", "1"), "rho0");
      const std::string profile = keys.take_or("profile", "quartic");
      if (profile == "quartic")
        b.profile = BumpProfile::quartic;
      else if (profile == "cubic")
        b.profile = BumpProfile::cubic;
      else
        throw ParseError("[blob]: unknown profile '" + profile + "'");
      s.blob_specs.push_back(b);
    } else if (name == "particle") {
      Scene::ParticleSpec p;
      p.mass = parse_number(keys.take("mass"), "mass");
      p.u = keys.take_velocity();
      p.position = event_from(parse_numbers(keys.take_or("position", "0 0 0 0"), 4, "position"));
      s.particle_specs.push_back(p);
    } else if (name == "field") {
      Scene::FieldSpec f;
      f.kind = keys.take("kind");
      f.center = event_from(parse_numbers(keys.take_or("center", "0 0 0 0"), 4, "center"));
      f.u = keys.take_velocity();
      f.radius = parse_number(keys.take_or("radius", "1"), "radius");
      f.rho0 = parse_number(keys.take_or("rho0", "1"), "rho0");
      f.amplitude = parse_number(keys.take_or("amplitude", "0"), "amplitude");
      f.omega = parse_number(keys.take_or("omega", "0"), "omega");
      s.field_specs.push_back(f);
    } else if (name == "observer") {
      s.observers.push_back(keys.take_velocity());
    } else {
      throw ParseError("unknown section [" + name + "]");
    }
    keys.finish();
  }

  // assemble the matter content
  if (!s.particle_specs.empty() && (!s.blob_specs.empty() || !s.field_specs.empty()))
    throw InvariantViolation("a scene mixes a particle swarm with continuous matter");
  if (!s.particle_specs.empty()) {
    ParticleSwarm swarm;
    for (const auto& p : s.particle_specs) swarm.particles.emplace_back(p.mass, p.u, p.position);
    s.body = Body::from_swarm(std::move(swarm));
  } else {
    for (const auto& b : s.blob_specs)
      s.body.add(DustBlob(b.u, b.center, b.radius, b.rho0, b.profile));
    for (const auto& f : s.field_specs) s.body.add(build_field(f));
  }
  return s;
}

Scene load_scene(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open scene file '" + path + "'");
  return parse_scene(in);
}

std::string serialize_scene(const Scene& s) {
  std::ostringstream out;
  out << "[scene]\n";
  out << "origin = " << fmt4(s.origin.x) << "\n";
  out << "orientation = " << s.orientation << "\n";
  out << "points_per_axis = " << s.quadrature.points_per_axis << "\n";
  out << "rule = "
      << (s.quadrature.rule == QuadratureRule::gauss_legendre ? "gauss-legendre" : "midpoint")
      << "\n";
  out << "support_padding = " << fmt(s.quadrature.support_padding) << "\n";
  for (const auto& b : s.blob_specs) {
    out << "\n[blob]\n";
    out << "center = " << fmt4(b.center.x) << "\n";
    out << "u = " << fmt4(b.u.c) << "\n";
    out << "radius = " << fmt(b.radius) << "\n";
    out << "rho0 = " << fmt(b.rho0) << "\n";
    out << "profile = " << (b.profile == BumpProfile::quartic ? "quartic" : "cubic") << "\n";
  }
  for (const auto& f : s.field_specs) {
    out << "\n[field]\n";
    out << "kind = " << f.kind << "\n";
    out << "center = " << fmt4(f.center.x) << "\n";
    out << "u = " << fmt4(f.u.c) << "\n";
    out << "radius = " << fmt(f.radius) << "\n";
    out << "rho0 = " << fmt(f.rho0) << "\n";
    out << "amplitude = " << fmt(f.amplitude) << "\n";
    out << "omega = " << fmt(f.omega) << "\n";
  }
  for (const auto& p : s.particle_specs) {
    out << "\n[particle]\n";
    out << "mass = " << fmt(p.mass) << "\n";
    out << "u = " << fmt4(p.u.c) << "\n";
    out << "position = " << fmt4(p.position.x) << "\n";
  }
  for (const auto& u : s.observers) {
    out << "\n[observer]\n";
    out << "u = " << fmt4(u.c) << "\n";
  }
  return out.str();
}

void PhysicalConstants::validate() const {
  for (double v : {c, hbar, alpha_inv, proton_mass, proton_charge_radius, earth_mass,
                   earth_radius, earth_omega, moon_mass, moon_radius, moon_omega, pulsar_radius,
                   pulsar_freq_hz})
    if (!(v > 0.0)) throw InvariantViolation("physical constants must be positive");
}

PhysicalConstants parse_constants(std::istream& in) {
  PhysicalConstants k;
  const std::map<std::string, double*> slots = {
      {"c", &k.c},
      {"hbar", &k.hbar},
      {"alpha_inv", &k.alpha_inv},
      {"proton_mass", &k.proton_mass},
      {"proton_charge_radius", &k.proton_charge_radius},
      {"earth_mass", &k.earth_mass},
      {"earth_radius", &k.earth_radius},
      {"earth_omega", &k.earth_omega},
      {"moon_mass", &k.moon_mass},
      {"moon_radius", &k.moon_radius},
      {"moon_omega", &k.moon_omega},
      {"pulsar_radius", &k.pulsar_radius},
      {"pulsar_freq_hz", &k.pulsar_freq_hz},
  };
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line.substr(0, line.find('#')));
    if (t.empty()) continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos)
      throw ParseError("constants line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(t.substr(0, eq));
    const auto it = slots.find(key);
    if (it == slots.end())
      throw ParseError("constants line " + std::to_string(lineno) + ": unknown key '" + key +
                       "'");
    *it->second = parse_number(trim(t.substr(eq + 1)), key);
  }
  k.validate();
  return k;
}

PhysicalConstants load_constants(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open constants file '" + path + "'");
  return parse_constants(in);
}

}  // namespace momap
