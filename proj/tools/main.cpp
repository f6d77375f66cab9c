#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "momap/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "momap: conserved charges, mass centres and centre-of-mass discs of\n"
      "compact special-relativistic bodies (c = 1 internally; SI only in\n"
      "the radii table)"};
  app.require_subcommand(1);

  momap::cli::CommonOptions opt;
  int points = 0;
  int orientation = 0;
  app.add_option("--format", opt.format, "output format: table, csv or json")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  app.add_option("--precision", opt.precision, "significant digits (default 6)")
      ->check(CLI::Range(1, 17));
  app.add_option("--points-per-axis", points, "override the scene quadrature resolution");
  app.add_option("--orientation", orientation, "override the volume-form orientation (+1/-1)");
  app.add_option("--tolerance", opt.tolerance,
                 "quadrature convergence gate (refinement disagreement)");

  std::string scene_path;
  std::string constants_path;
  std::vector<double> slice_values;
  std::vector<double> z_values;
  std::vector<double> observer_values;
  bool rest = false;
  int samples = 24;
  std::string suite = "all";
  std::uint64_t seed = 20240815;
  bool negative = false;

  auto* charges = app.add_subcommand("charges", "momentum P and angular charge J[z] of a scene");
  charges->add_option("scene", scene_path, "scene file")->required();
  charges->add_option("--slice", slice_values,
                      "hyperplane u0 u1 u2 u3 sigma (default rest slice through the origin)")
      ->expected(5);
  charges->add_option("--z", z_values, "reference point t x y z (default scene origin)")
      ->expected(4);

  auto* centers = app.add_subcommand(
      "centers", "mass-centre line, spin/orbital split, spin vector, Moller radius");
  centers->add_option("scene", scene_path, "scene file")->required();
  auto* obs_opt = centers->add_option("--observer", observer_values,
                                      "observer four-velocity u0 u1 u2 u3")
                      ->expected(4);
  centers->add_flag("--rest", rest, "use the body's own rest frame (default)")
      ->excludes(obs_opt);

  auto* disc = app.add_subcommand("disc",
                                  "sample the disc swept by all observer mass centres (CSV)");
  disc->add_option("scene", scene_path, "scene file")->required();
  disc->add_option("--samples", samples, "directions around the axis (default 24)");

  auto* radii = app.add_subcommand("radii-table",
                                   "centre-of-mass ambiguity radii for catalog bodies (SI)");
  radii->add_option("constants", constants_path,
                    "constants file (default $MOMAP_CONSTANTS, then built-ins)");

  auto* verify = app.add_subcommand("verify", "run the algebraic/geometric property checks");
  verify->add_option("--suite", suite, "all, exterior, poincare, charges or centers")
      ->check(CLI::IsMember({"all", "exterior", "poincare", "charges", "centers"}));
  verify->add_option("--seed", seed, "seed for the randomised checks");
  verify->add_flag("--negative-controls", negative,
                   "run the deliberately broken fixtures and confirm they are caught");

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  if (points > 0) opt.points_per_axis = points;
  if (orientation != 0) opt.orientation = orientation;

  if (charges->parsed()) {
    std::optional<std::vector<double>> slice;
    std::optional<std::vector<double>> z;
    if (!slice_values.empty()) slice = slice_values;
    if (!z_values.empty()) z = z_values;
    return momap::cli::cmd_charges(scene_path, slice, z, opt, std::cout, std::cerr);
  }
  if (centers->parsed()) {
    std::optional<std::vector<double>> observer;
    if (!observer_values.empty()) observer = observer_values;
    return momap::cli::cmd_centers(scene_path, observer, opt, std::cout, std::cerr);
  }
  if (disc->parsed()) return momap::cli::cmd_disc(scene_path, samples, opt, std::cout, std::cerr);
  if (radii->parsed())
    return momap::cli::cmd_radii_table(constants_path, opt, std::cout, std::cerr);
  if (verify->parsed())
    return momap::cli::cmd_verify(suite, seed, negative, opt, std::cout, std::cerr);
  return 1;
}
