#ifndef MOMAP_SCENE_HPP
#define MOMAP_SCENE_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "momap/body.hpp"
#include "momap/charges.hpp"

namespace momap {

/// A matter configuration plus the evaluation defaults: the typed-section
/// scene file maps 1:1 onto this.  Particles form a swarm; blobs and fields
/// superpose into one continuous body; mixing the two kinds is rejected.
struct Scene {
  Event origin;
  int orientation = +1;
  QuadratureSpec quadrature;
  Body body;
  std::vector<FourVector> observers;

  // per-section source data, kept so serialisation is lossless
  struct BlobSpec {
    Event center;
    FourVector u;
    double radius = 1.0;
    double rho0 = 1.0;
    BumpProfile profile = BumpProfile::quartic;
  };
  struct ParticleSpec {
    double mass = 1.0;
    FourVector u;
    Event position;
  };
  struct FieldSpec {
    std::string kind;  // "dust_like" or "time_modulated"
    Event center;
    FourVector u;
    double radius = 1.0;
    double rho0 = 1.0;
    double amplitude = 0.0;
    double omega = 0.0;
  };
  std::vector<BlobSpec> blob_specs;
  std::vector<ParticleSpec> particle_specs;
  std::vector<FieldSpec> field_specs;
};

/// Parses the flat key/value scene format.  Throws ParseError on malformed
/// input and InvariantViolation when a well-formed value breaks a structural
/// invariant (non-unit velocity, negative radius, swarm mixed with blobs...).
Scene parse_scene(std::istream& in);
Scene load_scene(const std::string& path);

/// Canonical serialisation; parse(serialize(s)) == s field by field.
std::string serialize_scene(const Scene& s);

/// SI inputs for the physical-radius table.
struct PhysicalConstants {
  double c = 2.99792458e8;          // m/s
  double hbar = 1.054571817e-34;    // J s
  double alpha_inv = 137.036;
  double proton_mass = 1.67262e-27;          // kg
  double proton_charge_radius = 0.87e-15;    // m
  double earth_mass = 5.972e24;              // kg
  double earth_radius = 6.371e6;             // m
  double earth_omega = 7.2921e-5;            // rad/s
  double moon_mass = 7.342e22;               // kg
  double moon_radius = 1.7374e6;             // m
  double moon_omega = 2.6617e-6;             // rad/s
  double pulsar_radius = 1.6e4;              // m
  double pulsar_freq_hz = 716.0;             // Hz

  void validate() const;  // all entries positive
};

/// key = value lines; unknown keys are rejected, missing keys keep defaults.
PhysicalConstants parse_constants(std::istream& in);
PhysicalConstants load_constants(const std::string& path);

}  // namespace momap

#endif
