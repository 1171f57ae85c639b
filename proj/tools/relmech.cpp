// relmech: configuration-driven runner for the relativistic mechanics library.
//
//   relmech run <config> [--out DIR] [--seed N]   run a scenario, write artifacts
//   relmech check <config>                        validate a config without running
//   relmech precession --GM V --a V --e V [...]   perihelion-advance pipeline
//   relmech --help-config                         document every config key
//
// Exit codes: 0 all checks pass, 2 a check failed, 1 configuration or runtime
// error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "relmech/csv.hpp"
#include "relmech/errors.hpp"
#include "relmech/scenario.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw relmech::Error("cannot open config file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string resolve_out_dir(const std::string& flag_value, const std::string& cfg_value) {
  if (const char* env = std::getenv("RELMECH_OUT"); env && *env) return env;
  if (!flag_value.empty()) return flag_value;
  return cfg_value;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"relativistic particle, fluid and plasma mechanics toolkit"};
  app.require_subcommand(0, 1);

  bool help_config = false;
  app.add_flag("--help-config", help_config, "print the scenario config key reference");

  std::string run_config, run_out;
  unsigned long long run_seed = 0;
  bool run_seed_set = false;
  auto* run_cmd = app.add_subcommand("run", "run a scenario config");
  run_cmd->add_option("config", run_config, "path to the scenario config")->required();
  run_cmd->add_option("--out", run_out, "output directory (RELMECH_OUT overrides)");
  run_cmd->add_option("--seed", run_seed, "override the RNG seed")
      ->each([&run_seed_set](const std::string&) { run_seed_set = true; });

  std::string check_config;
  auto* check_cmd = app.add_subcommand("check", "parse and validate a scenario config");
  check_cmd->add_option("config", check_config, "path to the scenario config")->required();

  double p_gm = 0.0, p_a = 0.0, p_e = 0.0, p_c = relmech::kSpeedOfLight;
  double p_scale = 1.0, p_rtol = 0.05;
  int p_revs = 0, p_steps = 4000;
  auto* prec_cmd = app.add_subcommand("precession", "perihelion advance per revolution");
  prec_cmd->add_option("--GM", p_gm, "central mass strength, m^3/s^2")->required();
  prec_cmd->add_option("--a", p_a, "semi-major axis, m")->required();
  prec_cmd->add_option("--e", p_e, "eccentricity")->required();
  prec_cmd->add_option("--c", p_c, "speed of light, m/s");
  prec_cmd->add_option("--revs", p_revs, "simulate this many revolutions and compare");
  prec_cmd->add_option("--gm-scale", p_scale, "GM inflation factor for the simulation");
  prec_cmd->add_option("--steps-per-rev", p_steps, "integrator steps per revolution");
  prec_cmd->add_option("--rtol", p_rtol, "pass bound on |measured/closed - 1|");

  CLI11_PARSE(app, argc, argv);

  if (help_config) {
    std::cout << relmech::cli::help_config();
    return 0;
  }

  try {
    if (*check_cmd) {
      const auto cfg = relmech::cli::parse_config(read_file(check_config));
      std::cout << "config ok\n";
      return 0;
    }
    if (*run_cmd) {
      auto cfg = relmech::cli::parse_config(read_file(run_config));
      cfg.out_dir = resolve_out_dir(run_out, cfg.out_dir);
      if (run_seed_set) cfg.seed = run_seed;
      const auto report = relmech::cli::run(cfg);
      std::cout << relmech::cli::emit_report(report, relmech::cli::ReportFormat::Text);
      std::cerr << "wall_seconds " << report.wall_seconds << "\n";
      return report.all_pass() ? 0 : 2;
    }
    if (*prec_cmd) {
      const auto result = relmech::cli::precession_pipeline(p_gm, p_a, p_e, p_c, p_revs,
                                                            p_scale, p_steps, true);
      std::cout << relmech::cli::precession_text(result);
      if (p_revs > 0 && !(result.relative_deviation <= p_rtol)) return 2;
      return 0;
    }
  } catch (const relmech::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  std::cout << app.help();
  return 0;
}
