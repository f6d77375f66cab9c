#include "momap/radii.hpp"

namespace momap {

std::vector<RadiusRow> radii_table(const PhysicalConstants& k) {
  k.validate();
  constexpr double two_pi = 2.0 * 3.14159265358979323846;

  std::vector<RadiusRow> rows;
  const double lambda_c = two_pi * k.hbar / (k.proton_mass * k.c);
  const double proton_rm = k.hbar / (2.0 * k.proton_mass * k.c);
  rows.push_back({"proton_compton_wavelength", lambda_c, "m"});
  rows.push_back({"proton_moller_radius", proton_rm, "m"});
  rows.push_back({"proton_moller_to_charge_radius", proton_rm / k.proton_charge_radius, "-"});

  // e^2/(8 pi eps0 R_cl) = M c^2 makes the ratio exactly 1/alpha
  rows.push_back({"charged_particle_moller_to_classical", k.alpha_inv, "-"});

  auto rigid_ratio = [&](double radius, double omega) {
    return 0.4 * radius * omega / k.c;  // (2/5) R w / c
  };
  rows.push_back({"earth_moller_radius", k.earth_radius * rigid_ratio(k.earth_radius, k.earth_omega), "m"});
  rows.push_back({"moon_moller_radius", k.moon_radius * rigid_ratio(k.moon_radius, k.moon_omega), "m"});

  const double pulsar_omega = two_pi * k.pulsar_freq_hz;
  rows.push_back({"pulsar_surface_speed_ratio", k.pulsar_radius * pulsar_omega / k.c, "-"});
  rows.push_back(
      {"pulsar_moller_to_geometric_radius", rigid_ratio(k.pulsar_radius, pulsar_omega), "-"});
  return rows;
}

}  // namespace momap
