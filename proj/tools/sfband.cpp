// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: reconstruction and spectrum experiments, the
// built-in selftest, and shortcuts that regenerate the two study figures.
// Exit codes: 0 success, 1 configuration error, 2 numerical failure,
// 3 selftest failure.

#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "sfband/experiment.hpp"
#include "sfband/selftest.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitSelftest = 3;

struct CommonArgs {
  std::string config_path;
  std::string out_dir = "out";
  std::optional<std::uint64_t> seed;
  std::optional<int> seeds;
};

void add_common(CLI::App* cmd, CommonArgs* args, bool with_config = true) {
  if (with_config)
    cmd->add_option("--config", args->config_path, "JSON experiment config");
  cmd->add_option("--out", args->out_dir, "output directory")
      ->capture_default_str();
  cmd->add_option("--seed", args->seed, "base seed override");
  cmd->add_option("--seeds", args->seeds, "number of consecutive seeds");
}

sfband::ExperimentConfig make_config(const CommonArgs& args) {
  sfband::ExperimentConfig config;
  if (!args.config_path.empty())
    config = sfband::ExperimentConfig::load(args.config_path);
  if (args.seed) config.seed = *args.seed;
  if (args.seeds) config.seeds = *args.seeds;
  config.validate();
  return config;
}

int run_reconstruct(const CommonArgs& args) {
  const sfband::ExperimentConfig config = make_config(args);
  const sfband::ReconstructionReport report =
      sfband::run_reconstruction_experiment(config);
  sfband::write_reconstruction_outputs(report, args.out_dir);
  std::printf("kernel    mean NE %.2f dB (std %.2f, %d seed%s)\n",
              report.mean_kernel_db, report.std_kernel_db, config.seeds,
              config.seeds == 1 ? "" : "s");
  std::printf("baseline  mean NE %.2f dB (std %.2f)\n", report.mean_baseline_db,
              report.std_baseline_db);
  std::printf("outputs written to %s\n", args.out_dir.c_str());
  return kExitOk;
}

int run_spectrum(const CommonArgs& args) {
  const sfband::ExperimentConfig config = make_config(args);
  const sfband::SpectrumReport report =
      sfband::run_spectrum_experiment(config, config.n_directions);
  sfband::write_spectrum_outputs(report, args.out_dir);
  std::printf("spectrum peak at %.1f deg, value %.4f%+.4fi\n",
              report.peak_angle_deg, report.peak_value.real(),
              report.peak_value.imag());
  std::printf("off-peak RMS %.3e, imaginary RMS %.3e\n", report.offpeak_rms,
              report.imag_rms);
  std::printf("outputs written to %s\n", args.out_dir.c_str());
  return kExitOk;
}

int run_selftest_cmd(const std::string& out_dir) {
  // Hidden negative-control hook: a nonzero perturbation here must make the
  // selftest fail.
  double perturbation = 0.0;
  if (const char* env = std::getenv("SFBAND_SELFTEST_PERTURB"))
    perturbation = std::atof(env);
  const sfband::SelftestReport report = sfband::run_selftest(perturbation);
  for (const sfband::SelftestCheck& check : report.checks)
    std::printf("%-26s %s  (worst %.3e, tolerance %.3e)\n", check.name.c_str(),
                check.passed ? "pass" : "FAIL", check.worst, check.tolerance);
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    std::ofstream out(std::filesystem::path(out_dir) / "selftest.json");
    out << report.to_json().dump(2) << '\n';
  }
  return report.all_passed() ? kExitOk : kExitSelftest;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"band-limited sound-field reconstruction experiments"};
  app.require_subcommand(1);

  CommonArgs reconstruct_args, spectrum_args;
  CommonArgs fig3_args, fig4_args;
  fig3_args.out_dir = "out/fig3";
  fig4_args.out_dir = "out/fig4";
  std::string selftest_out;

  CLI::App* reconstruct =
      app.add_subcommand("reconstruct", "fit the interpolants and write field CSVs");
  add_common(reconstruct, &reconstruct_args);

  CLI::App* spectrum =
      app.add_subcommand("spectrum", "estimate the directional spectrum");
  add_common(spectrum, &spectrum_args);

  CLI::App* selftest =
      app.add_subcommand("selftest", "run the built-in numerical checks");
  selftest->add_option("--out", selftest_out, "directory for selftest.json");

  CLI::App* fig3 = app.add_subcommand(
      "reproduce-fig3", "reconstruction comparison at the default operating point");
  add_common(fig3, &fig3_args, false);

  CLI::App* fig4 = app.add_subcommand(
      "reproduce-fig4", "directional spectrum at the default operating point");
  add_common(fig4, &fig4_args, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (reconstruct->parsed()) return run_reconstruct(reconstruct_args);
    if (spectrum->parsed()) return run_spectrum(spectrum_args);
    if (selftest->parsed()) return run_selftest_cmd(selftest_out);
    if (fig3->parsed()) return run_reconstruct(fig3_args);
    if (fig4->parsed()) return run_spectrum(fig4_args);
  } catch (const sfband::config_error& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitConfig;
  } catch (const sfband::ill_posed_error& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return kExitNumerical;
  } catch (const sfband::numerical_error& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitNumerical;
  }
  return kExitOk;
}
