#include "momap/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "momap/centers.hpp"
#include "momap/charges.hpp"
#include "momap/errors.hpp"
#include "momap/radii.hpp"
#include "momap/scene.hpp"
#include "momap/verify.hpp"

namespace momap::cli {

namespace {

using nlohmann::json;

std::string fmt(double v, int precision) {
  if (v == 0.0) v = 0.0;  // normalise negative zero
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, v);
  return buf;
}

double rounded(double v, int precision) {
  return std::strtod(fmt(v, precision).c_str(), nullptr);
}

int run_guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const QuadratureError& e) {
    err << "quadrature error: " << e.what() << "\n";
    return kExitQuadratureError;
  } catch (const NonTimelikeMomentum& e) {
    err << "non-timelike momentum: " << e.what() << "\n";
    return kExitNonTimelike;
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << "\n";
    return kExitInvariantViolation;
  }
}

Scene load_with_overrides(const std::string& path, const CommonOptions& opt) {
  Scene s = load_scene(path);
  if (opt.points_per_axis) {
    if (*opt.points_per_axis < 2)
      throw InvariantViolation("points-per-axis must be at least 2");
    s.quadrature.points_per_axis = *opt.points_per_axis;
  }
  if (opt.orientation) {
    if (*opt.orientation != 1 && *opt.orientation != -1)
      throw InvariantViolation("orientation must be +1 or -1");
    s.orientation = *opt.orientation;
  }
  return s;
}

FourVector parse_unit_timelike(const std::vector<double>& raw, const char* what) {
  if (raw.size() != 4) throw ParseError(std::string(what) + " needs four components");
  const FourVector u{raw[0], raw[1], raw[2], raw[3]};
  if (std::abs(mink_dot(u, u) - 1.0) > 1e-12 || u[0] <= 0.0)
    throw InvariantViolation(std::string(what) + " must be unit timelike and future pointing");
  return u;
}

// ordered name -> value records rendered as table, csv or json
struct Record {
  std::vector<std::pair<std::string, std::vector<double>>> rows;

  void add(const std::string& name, std::initializer_list<double> values) {
    rows.emplace_back(name, std::vector<double>(values));
  }
  void add(const std::string& name, const FourVector& v) {
    rows.emplace_back(name, std::vector<double>{v[0], v[1], v[2], v[3]});
  }
  void add_bivector(const std::string& name, const Bivector& b) {
    // six independent components, index pairs 01 02 03 12 13 23
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        rows.emplace_back(name + std::to_string(i) + std::to_string(j),
                          std::vector<double>{b(i, j)});
  }

  void print(std::ostream& out, const CommonOptions& opt) const {
    if (opt.format == "json") {
      json doc;
      for (const auto& [name, values] : rows) {
        if (values.size() == 1)
          doc[name] = rounded(values[0], opt.precision);
        else {
          json arr = json::array();
          for (double v : values) arr.push_back(rounded(v, opt.precision));
          doc[name] = arr;
        }
      }
      out << doc.dump(2) << "\n";
      return;
    }
    if (opt.format == "csv") {
      out << "quantity,value\n";
      for (const auto& [name, values] : rows) {
        if (values.size() == 1) {
          out << name << "," << fmt(values[0], opt.precision) << "\n";
        } else {
          for (std::size_t i = 0; i < values.size(); ++i)
            out << name << i << "," << fmt(values[i], opt.precision) << "\n";
        }
      }
      return;
    }
    if (opt.format != "table") throw ParseError("unknown format '" + opt.format + "'");
    for (const auto& [name, values] : rows) {
      out << name << " =";
      for (double v : values) out << " " << fmt(v, opt.precision);
      out << "\n";
    }
  }
};

}  // namespace

int cmd_charges(const std::string& scene_path, const std::optional<std::vector<double>>& slice,
                const std::optional<std::vector<double>>& z, const CommonOptions& opt,
                std::ostream& out, std::ostream& err) {
  return run_guarded(err, [&]() {
    const Scene s = load_with_overrides(scene_path, opt);

    FourVector u{1, 0, 0, 0};
    double sigma = 0.0;
    if (slice) {
      if (slice->size() != 5) throw ParseError("--slice needs u0 u1 u2 u3 sigma");
      u = parse_unit_timelike({slice->begin(), slice->begin() + 4}, "slice normal");
      sigma = (*slice)[4];
    }
    Event zref = s.origin;
    if (z) {
      if (z->size() != 4) throw ParseError("--z needs four coordinates");
      zref = Event{(*z)[0], (*z)[1], (*z)[2], (*z)[3]};
    }

    const Hyperplane plane(u, s.origin, sigma);
    const ChargeSet c = integrate_charges(s.body, plane, zref, s.quadrature, opt.tolerance);

    Record rec;
    rec.add("P", c.P);
    rec.add_bivector("J", c.J);
    rec.add("z", {zref[0], zref[1], zref[2], zref[3]});
    rec.add("quad_error", {c.quad_error});
    if (mink_dot(c.P, c.P) > 0.0) {
      const RestFrame rest = rest_frame(c);
      rec.add("m0", {rest.m0});
      rec.add("u_star", rest.u_star);
    }
    rec.print(out, opt);
    return kExitOk;
  });
}

int cmd_centers(const std::string& scene_path, const std::optional<std::vector<double>>& observer,
                const CommonOptions& opt, std::ostream& out, std::ostream& err) {
  return run_guarded(err, [&]() {
    const Scene s = load_with_overrides(scene_path, opt);
    const Hyperplane plane(FourVector{1, 0, 0, 0}, s.origin, 0.0);
    const ChargeSet c = integrate_charges(s.body, plane, s.origin, s.quadrature, opt.tolerance);

    const RestFrame rest = rest_frame(c);  // throws NonTimelikeMomentum
    const FourVector u =
        observer ? parse_unit_timelike(*observer, "observer") : rest.u_star;

    const WorldLine line = mass_center_line(c, u);
    const SpinData s_u = spin(c, u);
    const Bivector l = orbital(c, u);
    const FourVector svec = spin_vector(s_u, s.orientation);

    Record rec;
    rec.add("observer", u);
    rec.add("line_point", {line.point[0], line.point[1], line.point[2], line.point[3]});
    rec.add("line_direction", line.direction);
    rec.add_bivector("S", s_u.S);
    rec.add_bivector("L", l);
    rec.add("spin_vector", svec);
    rec.add("spin_transversality_residual", {max_abs(contract_right(s_u.S, u))});
    rec.add("m0", {rest.m0});
    rec.add("u_star", rest.u_star);
    rec.add("moller_radius", {moller_radius(c)});
    rec.add("quad_error", {c.quad_error});
    rec.print(out, opt);
    return kExitOk;
  });
}

int cmd_disc(const std::string& scene_path, int samples, const CommonOptions& opt,
             std::ostream& out, std::ostream& err) {
  return run_guarded(err, [&]() {
    if (samples < 1) throw ParseError("--samples must be positive");
    const Scene s = load_with_overrides(scene_path, opt);
    const Hyperplane plane(FourVector{1, 0, 0, 0}, s.origin, 0.0);
    const ChargeSet c = integrate_charges(s.body, plane, s.origin, s.quadrature, opt.tolerance);
    rest_frame(c);  // throws NonTimelikeMomentum early

    std::vector<double> rapidities;
    for (double t : {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.99})
      rapidities.push_back(std::atanh(t));

    out << "t,x,y,z,rho,dist\n";
    const SpinData s_star = spin(c, rest_frame(c).u_star);
    if (bivector_norm(s_star.S) <= 1e-12 * rest_frame(c).m0) {
      // degenerate disc: a single point, the centroid
      const Event p = mass_center_line(c, rest_frame(c).u_star).point;
      out << fmt(p[0], opt.precision) << "," << fmt(p[1], opt.precision) << ","
          << fmt(p[2], opt.precision) << "," << fmt(p[3], opt.precision) << ",0,0\n";
      return kExitOk;
    }
    const auto dirs = default_disc_directions(c, samples, s.orientation);
    for (const DiscSample& d : moller_disc_sample(c, rapidities, dirs, s.orientation)) {
      out << fmt(d.point[0], opt.precision) << "," << fmt(d.point[1], opt.precision) << ","
          << fmt(d.point[2], opt.precision) << "," << fmt(d.point[3], opt.precision) << ","
          << fmt(d.rapidity, opt.precision) << "," << fmt(d.distance, opt.precision) << "\n";
    }
    return kExitOk;
  });
}

int cmd_radii_table(const std::string& constants_path, const CommonOptions& opt,
                    std::ostream& out, std::ostream& err) {
  return run_guarded(err, [&]() {
    PhysicalConstants k;
    std::string path = constants_path;
    if (path.empty()) {
      if (const char* env = std::getenv("MOMAP_CONSTANTS")) path = env;
    }
    if (!path.empty()) k = load_constants(path);

    const auto rows = radii_table(k);
    if (opt.format == "json") {
      json doc;
      for (const auto& r : rows)
        doc[r.name] = {{"value", rounded(r.value, opt.precision)}, {"unit", r.unit}};
      out << doc.dump(2) << "\n";
    } else if (opt.format == "csv") {
      out << "quantity,value,unit\n";
      for (const auto& r : rows)
        out << r.name << "," << fmt(r.value, opt.precision) << "," << r.unit << "\n";
    } else if (opt.format == "table") {
      for (const auto& r : rows) {
        std::ostringstream line;
        line << r.name;
        while (line.str().size() < 40) line << ' ';
        out << line.str() << fmt(r.value, opt.precision) << " " << r.unit << "\n";
      }
    } else {
      throw ParseError("unknown format '" + opt.format + "'");
    }
    return kExitOk;
  });
}

int cmd_verify(const std::string& suite, std::uint64_t seed, bool negative,
               const CommonOptions& opt, std::ostream& out, std::ostream& err) {
  return run_guarded(err, [&]() {
    (void)opt;
    if (negative) {
      bool all_detected = true;
      for (const CheckResult& c : negative_controls()) {
        const bool detected = !c.pass;
        all_detected = all_detected && detected;
        out << (detected ? "[DETECTED] " : "[MISSED]   ") << c.suite << "/" << c.name
            << "  residual=" << fmt(c.residual, 3) << " tol=" << fmt(c.tolerance, 3)
            << "  law: " << c.law << "\n";
      }
      out << (all_detected ? "all injected faults detected\n"
                           : "an injected fault went unnoticed\n");
      return all_detected ? kExitOk : kExitFailure;
    }

    const auto results = run_verification(suite, seed);
    int failures = 0;
    for (const CheckResult& c : results) {
      if (!c.pass) ++failures;
      out << (c.pass ? "[PASS] " : "[FAIL] ") << c.suite << "/" << c.name
          << "  residual=" << fmt(c.residual, 3) << " tol=" << fmt(c.tolerance, 3)
          << "  law: " << c.law << "\n";
    }
    out << results.size() - failures << "/" << results.size() << " checks passed (seed "
        << seed << ")\n";
    return failures == 0 ? kExitOk : kExitFailure;
  });
}

}  // namespace momap::cli
