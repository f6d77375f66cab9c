#ifndef MOMAP_CLI_HPP
#define MOMAP_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace momap::cli {

// exit codes shared by every subcommand
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;         // verification found a violation
inline constexpr int kExitParseError = 2;
inline constexpr int kExitInvariantViolation = 3;
inline constexpr int kExitQuadratureError = 4;
inline constexpr int kExitNonTimelike = 5;

struct CommonOptions {
  std::string format = "table";  // table | csv | json
  int precision = 6;             // significant digits
  std::optional<int> points_per_axis;
  std::optional<int> orientation;
  double tolerance = 1e-6;  // quadrature convergence gate
};

/// charges <scene> [--slice u0 u1 u2 u3 sigma] [--z t x y z]
int cmd_charges(const std::string& scene_path, const std::optional<std::vector<double>>& slice,
                const std::optional<std::vector<double>>& z, const CommonOptions& opt,
                std::ostream& out, std::ostream& err);

/// centers <scene> [--observer u0 u1 u2 u3 | --rest]
int cmd_centers(const std::string& scene_path, const std::optional<std::vector<double>>& observer,
                const CommonOptions& opt, std::ostream& out, std::ostream& err);

/// disc <scene> [--samples N]: CSV rows t,x,y,z,rho,dist
int cmd_disc(const std::string& scene_path, int samples, const CommonOptions& opt,
             std::ostream& out, std::ostream& err);

/// radii-table [constants-file]; falls back to $MOMAP_CONSTANTS, then defaults
int cmd_radii_table(const std::string& constants_path, const CommonOptions& opt,
                    std::ostream& out, std::ostream& err);

/// verify [--suite s] [--seed n] [--negative-controls]
int cmd_verify(const std::string& suite, std::uint64_t seed, bool negative,
               const CommonOptions& opt, std::ostream& out, std::ostream& err);

}  // namespace momap::cli

#endif
