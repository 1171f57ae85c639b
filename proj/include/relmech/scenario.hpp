#pragma once

// Configuration-driven front end: flat key = value scenario files, run
// orchestration with CSV artifacts, and deterministic pass/fail reports.
// Identical config and binary produce byte-identical outputs; wall time is
// tracked but never serialized.

#include <string>
#include <utility>
#include <vector>

#include "relmech/vec.hpp"
#include "relmech/worldline.hpp"

namespace relmech::cli {

enum class ScenarioKind {
  Orbit,
  LorentzTrajectory,
  ChargedDust,
  FluidStreamline,
  ResidualSweep,
  IdentitySuite,
};

struct ScenarioConfig {
  ScenarioKind kind = ScenarioKind::IdentitySuite;
  bool kind_set = false;

  double c = kSpeedOfLight;
  double big_g = 6.67430e-11;

  StepMethod method = StepMethod::RK4;
  double step = 0.0;  // 0 = derived by the scenario
  int steps = 1000;
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  bool projection = true;
  double fd_step = 1e-4;

  std::string potential_kind = "zero";  // zero | point_mass | uniform
  double potential_gm = 0.0;
  Vec3 potential_g{};

  std::string em_kind = "none";  // none | uniform | coulomb
  Vec3 em_e{};
  Vec3 em_b{};
  double em_q = 0.0;

  double particle_mass = 1.0;
  double particle_charge = 0.0;
  Vec3 particle_x{};
  double particle_t0 = 0.0;
  Vec3 particle_v{};

  double orbit_gm = 0.0;
  double orbit_a = 0.0;
  double orbit_e = 0.0;
  int orbit_revolutions = 3;
  int orbit_steps_per_rev = 4000;
  double orbit_gm_scale = 1.0;
  double orbit_precession_rtol = 0.05;

  double fluid_rho0 = 1.0;
  double fluid_p0 = 0.0;
  Vec3 fluid_dp{};
  double fluid_sigma0 = 0.0;
  double fluid_eta = 0.0;
  double fluid_zeta = 0.0;

  std::string sweep_equation = "dust_continuity";
  int sweep_n = 10;
  double sweep_h = 1e-3;
  double sweep_extent = 0.5;
  Vec4 sweep_center{0.0, 0.0, 0.0, 0.0};
  double sweep_tol = 1e-6;

  int suite_samples = 200;
  std::string chart = "spherical";  // chart for the curvilinear identity checks
  unsigned long long seed = 12345;
  std::string out_dir = ".";
};

struct CheckRow {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct RunReport {
  std::string scenario_id;
  double wall_seconds = 0.0;  // never serialized
  std::vector<std::pair<std::string, std::string>> info;
  std::vector<CheckRow> checks;
  std::vector<std::string> artifacts;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

//! Parses the flat `key = value` format with # comments and dotted section
//! prefixes. Unknown keys and out-of-range values are errors.
ScenarioConfig parse_config(const std::string& text);

//! One line per key: name, type and description, used by --help-config.
std::string help_config();

enum class ReportFormat { Text, Csv };

//! Dispatches to the owning module and writes artifacts into cfg.out_dir.
RunReport run(const ScenarioConfig& cfg);

//! Aligned key/value text or one CSV row per check; byte-stable.
std::string emit_report(const RunReport& report, ReportFormat format);

//! Closed-form (and optionally simulated) perihelion-advance pipeline shared
//! by the CLI and the bindings. revolutions == 0 skips the simulation.
struct PrecessionRun {
  double gm = 0.0;            // after scaling
  double semi_major = 0.0;
  double eccentricity = 0.0;
  double angular_momentum = 0.0;
  double period_s = 0.0;
  double closed_form_rad_per_rev = 0.0;
  double closed_form_arcsec_per_century = 0.0;
  double revolutions_per_century = 0.0;
  // simulation block (revolutions > 0)
  int revolutions = 0;
  int perihelion_count = 0;
  double measured_rad_per_rev = 0.0;
  double relative_deviation = 0.0;
  double energy_drift_rel = 0.0;
  double angmom_drift_rel = 0.0;
  double max_norm_residual = 0.0;  // in units of c^2
};

PrecessionRun precession_pipeline(double gm, double semi_major, double eccentricity,
                                  double c, int revolutions, double gm_scale,
                                  int steps_per_rev, bool projection);

//! Flat key = value block for the precession report.
std::string precession_text(const PrecessionRun& r);

}  // namespace relmech::cli
