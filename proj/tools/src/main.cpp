#include <iostream>

#include <CLI11.hpp>

#include "lab.hpp"

using namespace mackey::lab;

int main(int argc, char** argv) {
  CLI::App app{"mackey-lab: contraction experiments for SL(2, R) and SL(n, R)"};
  app.require_subcommand(1);

  DecomposeOptions dec;
  auto* decompose = app.add_subcommand("decompose", "Iwasawa and Cartan factors of a unimodular matrix");
  decompose->add_option("--matrix", dec.matrix, "row-major entries, e.g. 1,0,1,1")->required();
  decompose->add_flag("--json", dec.json, "print JSON instead of text");

  WavesOptions wav;
  std::string lambda_arg = "30", t_arg = "1", box_arg = "-1.5,1.5", step_arg = "1/32", b_arg = "0";
  auto* waves = app.add_subcommand("waves", "sample contracted waves on a grid of p");
  waves->add_option("--lambda", lambda_arg, "frequency ell, lambda = ell h / 8");
  waves->add_option("--t-list", t_arg, "comma-separated deformation parameters");
  waves->add_option("--box", box_arg, "min,max of the square box");
  waves->add_option("--step", step_arg, "grid step");
  waves->add_option("--b", b_arg, "boundary angle");
  waves->add_flag("--svg", wav.svg, "also write a heatmap of the real part");
  waves->add_option("--out", wav.out, "output directory");

  OrbitsOptions orb;
  std::string orbit_t_arg = "1,0.5,0.25";
  auto* orbits = app.add_subcommand("orbits", "transport the adjoint orbit of W to g_t");
  orbits->add_option("--t-list", orbit_t_arg, "comma-separated deformation parameters");
  orbits->add_option("--samples", orb.samples, "samples per direction")->check(CLI::Range(2, 1000));
  orbits->add_option("--out", orb.out, "output directory");

  VerifyOptions ver;
  auto* verify = app.add_subcommand("verify", "run a seeded verification suite and write a JSON report");
  verify->add_option("--suite", ver.suite, "deformation, principal, discrete, findim or all");
  verify->add_option("--seed", ver.seed, "generator seed");
  verify->add_option("--out", ver.out, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*decompose) return cmd_decompose(dec, std::cout, std::cerr);
    if (*waves) {
      wav.lambda = parse_number(lambda_arg);
      wav.t_list = parse_list(t_arg);
      const auto box = parse_list(box_arg);
      if (box.size() != 2) throw UsageError("--box needs two values");
      wav.box_min = box[0];
      wav.box_max = box[1];
      wav.step = parse_number(step_arg);
      wav.b = parse_number(b_arg);
      return cmd_waves(wav, std::cout, std::cerr);
    }
    if (*orbits) {
      orb.t_list = parse_list(orbit_t_arg);
      return cmd_orbits(orb, std::cout, std::cerr);
    }
    if (*verify) return cmd_verify(ver, std::cout, std::cerr);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitUsage;
}
