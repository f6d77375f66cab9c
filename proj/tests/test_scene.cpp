#include <fstream>
#include <sstream>

#include "doctest.h"
#include "momap/errors.hpp"
#include "momap/radii.hpp"
#include "momap/scene.hpp"

using namespace momap;

namespace {

Scene parse_str(const std::string& text) {
  std::istringstream in(text);
  return parse_scene(in);
}

const char* kFixtureDir = MOMAP_FIXTURE_DIR;

}  // namespace

TEST_SUITE("scene") {

TEST_CASE("canonical fixtures parse and round-trip") {
  for (const char* name : {"rest_blob.scene", "boosted_blob.scene", "two_particle_spin.scene",
                           "three_blob_spinning.scene"}) {
    const Scene s = load_scene(std::string(kFixtureDir) + "/" + name);
    const std::string once = serialize_scene(s);
    const Scene reparsed = parse_str(once);
    CHECK(serialize_scene(reparsed) == once);
    CHECK(reparsed.quadrature.points_per_axis == s.quadrature.points_per_axis);
    CHECK(reparsed.orientation == s.orientation);
    CHECK(reparsed.blob_specs.size() == s.blob_specs.size());
    CHECK(reparsed.particle_specs.size() == s.particle_specs.size());
  }
}

TEST_CASE("three-velocity shorthand produces a unit four-velocity") {
  const Scene s = parse_str("[blob]\nvelocity3 = 0.6 0 0\n");
  REQUIRE(s.blob_specs.size() == 1);
  const FourVector u = s.blob_specs[0].u;
  CHECK(std::abs(mink_dot(u, u) - 1.0) < 1e-12);
  CHECK(u[0] == doctest::Approx(1.25).epsilon(1e-15));
  CHECK(u[1] == doctest::Approx(0.75).epsilon(1e-15));
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_str("key = 1\n"), ParseError);                     // outside a section
  CHECK_THROWS_AS(parse_str("[nonsense]\n"), ParseError);                  // unknown section
  CHECK_THROWS_AS(parse_str("[blob]\nvelocity3 = 0 0\n"), ParseError);     // arity
  CHECK_THROWS_AS(parse_str("[blob]\nvelocity3 = 0 0 zebra\n"), ParseError);
  CHECK_THROWS_AS(parse_str("[particle]\nmass = 1\n"), ParseError);        // missing velocity
  CHECK_THROWS_AS(parse_str("[blob]\nvelocity3 = 0 0 0\nwhat = 3\n"), ParseError);
  CHECK_THROWS_AS(parse_str("[scene]\nrule = simpson\n"), ParseError);
  CHECK_THROWS_AS(parse_str("[scene]\norigin = 0 0 0 0\n[scene]\norigin = 0 0 0 0\n"),
                  ParseError);  // duplicate scene
  CHECK_THROWS_AS(load_scene("/nonexistent/file.scene"), ParseError);
}

TEST_CASE("invariant violations") {
  CHECK_THROWS_AS(parse_str("[blob]\nu = 1 0.5 0 0\n"), InvariantViolation);
  CHECK_THROWS_AS(parse_str("[blob]\nvelocity3 = 1.2 0 0\n"), InvariantViolation);
  CHECK_THROWS_AS(parse_str("[blob]\nvelocity3 = 0 0 0\nradius = -1\n"), InvariantViolation);
  CHECK_THROWS_AS(parse_str("[scene]\norientation = 2\n"), InvariantViolation);
  CHECK_THROWS_AS(parse_str("[scene]\npoints_per_axis = 1\n"), InvariantViolation);
  // swarm mixed with continuous matter
  CHECK_THROWS_AS(
      parse_str("[particle]\nmass = 1\nvelocity3 = 0 0 0\n[blob]\nvelocity3 = 0 0 0\n"),
      InvariantViolation);
}

TEST_CASE("sampled-field sections") {
  const Scene s = parse_str(
      "[field]\nkind = time_modulated\nvelocity3 = 0 0 0\nradius = 1\nrho0 = 1\n"
      "amplitude = 0.5\nomega = 2\n");
  REQUIRE(s.field_specs.size() == 1);
  CHECK(s.body.fields().size() == 1);
  // the evaluator really is time dependent
  const Matrix4 t0 = eval_T(s.body, Event{0, 0.1, 0, 0});
  const Matrix4 t1 = eval_T(s.body, Event{0.5, 0.1, 0, 0});
  CHECK(max_abs(t0 - t1) > 1e-6);

  CHECK_THROWS_AS(parse_str("[field]\nkind = wavelet\nvelocity3 = 0 0 0\n"), ParseError);
}

TEST_CASE("constants parsing and defaults") {
  const PhysicalConstants def{};
  std::istringstream empty("");
  const PhysicalConstants parsed = parse_constants(empty);
  CHECK(parsed.c == def.c);

  std::istringstream tweak("pulsar_freq_hz = 500\n# comment\nmoon_mass = 7e22\n");
  const PhysicalConstants t = parse_constants(tweak);
  CHECK(t.pulsar_freq_hz == 500.0);
  CHECK(t.moon_mass == 7e22);
  CHECK(t.c == def.c);

  std::istringstream bad("warp_factor = 9\n");
  CHECK_THROWS_AS(parse_constants(bad), ParseError);
  std::istringstream negative("c = -1\n");
  CHECK_THROWS_AS(parse_constants(negative), InvariantViolation);
}

TEST_CASE("radii table values") {
  const auto rows = radii_table(PhysicalConstants{});
  auto value = [&](const std::string& name) {
    for (const auto& r : rows)
      if (r.name == name) return r.value;
    FAIL("missing row ", name);
    return 0.0;
  };
  CHECK(value("proton_compton_wavelength") == doctest::Approx(1.32e-15).epsilon(0.005));
  CHECK(value("proton_moller_radius") == doctest::Approx(1.05e-16).epsilon(0.005));
  // the ratio to the measured charge radius is about 1/8
  CHECK(value("proton_moller_to_charge_radius") == doctest::Approx(0.125).epsilon(0.05));
  CHECK(value("charged_particle_moller_to_classical") == doctest::Approx(137.0).epsilon(0.001));
  CHECK(value("earth_moller_radius") == doctest::Approx(4.0).epsilon(0.05));
  CHECK(value("moon_moller_radius") == doctest::Approx(0.011).epsilon(0.10));
  CHECK(value("pulsar_surface_speed_ratio") == doctest::Approx(0.24).epsilon(0.05));
  CHECK(value("pulsar_moller_to_geometric_radius") == doctest::Approx(0.1).epsilon(0.15));
}

}  // TEST_SUITE
