#ifndef MOMAP_RADII_HPP
#define MOMAP_RADII_HPP

#include <string>
#include <vector>

#include "momap/scene.hpp"

namespace momap {

struct RadiusRow {
  std::string name;
  double value = 0;
  std::string unit;  // "m" or "-" for dimensionless ratios
};

/// SI-unit summary of centre-of-mass ambiguity radii:
///   spin-1/2 particle         R_M = hbar/(2 M c) = lambda_C / (4 pi)
///   charged particle          R_M / R_classical = 1/alpha
///   rigid ball, frequency w   R_M / R = (2/5) (R w / c)
/// applied to the proton, Earth, Moon, and the 716 Hz pulsar.
std::vector<RadiusRow> radii_table(const PhysicalConstants& k);

}  // namespace momap

#endif
