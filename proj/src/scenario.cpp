#include "relmech/scenario.hpp"

#include <sstream>
#include <vector>

#include "relmech/csv.hpp"
#include "relmech/errors.hpp"

namespace relmech::cli {

namespace {

struct KeyDoc {
  const char* key;
  const char* type;
  const char* doc;
};

const std::vector<KeyDoc>& key_docs() {
  static const std::vector<KeyDoc> docs = {
      {"scenario", "enum",
       "orbit | lorentz_trajectory | charged_dust | fluid_streamline | residual_sweep | "
       "identity_suite (required)"},
      {"constants.c", "real > 0", "speed of light in m/s (default 299792458)"},
      {"constants.G", "real > 0", "Newtonian gravitational constant (informational)"},
      {"integrator.method", "enum", "rk4 | rkf45 (default rk4)"},
      {"integrator.step", "real > 0", "proper-time step ds; orbit derives it when 0"},
      {"integrator.steps", "int > 0", "number of steps (default 1000)"},
      {"integrator.abs_tol", "real > 0", "adaptive absolute tolerance (default 1e-10)"},
      {"integrator.rel_tol", "real > 0", "adaptive relative tolerance (default 1e-10)"},
      {"integrator.projection", "bool", "rescale U onto the mass shell each step (default true)"},
      {"integrator.fd_step", "real > 0", "finite-difference step for metric derivatives"},
      {"potential.kind", "enum", "zero | point_mass | uniform (default zero)"},
      {"potential.GM", "real > 0", "point-mass strength, m^3/s^2"},
      {"potential.g1", "real", "uniform field vector, component 1"},
      {"potential.g2", "real", "uniform field vector, component 2"},
      {"potential.g3", "real", "uniform field vector, component 3"},
      {"em.kind", "enum", "none | uniform | coulomb (default none)"},
      {"em.E1", "real", "uniform electric field, component 1"},
      {"em.E2", "real", "uniform electric field, component 2"},
      {"em.E3", "real", "uniform electric field, component 3"},
      {"em.B1", "real", "uniform magnetic field, component 1"},
      {"em.B2", "real", "uniform magnetic field, component 2"},
      {"em.B3", "real", "uniform magnetic field, component 3"},
      {"em.q", "real", "point charge for the coulomb field"},
      {"particle.mass", "real > 0", "rest mass (default 1)"},
      {"particle.charge", "real", "charge (default 0)"},
      {"particle.x1", "real", "initial position, component 1"},
      {"particle.x2", "real", "initial position, component 2"},
      {"particle.x3", "real", "initial position, component 3"},
      {"particle.t0", "real", "initial coordinate time (default 0)"},
      {"particle.v1", "real", "initial coordinate velocity, component 1"},
      {"particle.v2", "real", "initial coordinate velocity, component 2"},
      {"particle.v3", "real", "initial coordinate velocity, component 3"},
      {"orbit.GM", "real > 0", "central point-mass strength"},
      {"orbit.a", "real > 0", "semi-major axis, m"},
      {"orbit.e", "real in [0,1)", "eccentricity"},
      {"orbit.revolutions", "int >= 1", "revolutions to integrate (default 3)"},
      {"orbit.steps_per_rev", "int >= 8", "integrator steps per revolution (default 4000)"},
      {"orbit.gm_scale", "real > 0", "GM inflation factor to amplify the signal (default 1)"},
      {"orbit.precession_rtol", "real > 0", "pass tolerance, measured vs closed form (default 0.05)"},
      {"fluid.rho0", "real > 0", "proper mass density (default 1)"},
      {"fluid.p0", "real", "base pressure (default 0)"},
      {"fluid.dp1", "real", "pressure gradient component 1 (shear slope for the navier_stokes sweep)"},
      {"fluid.dp2", "real", "pressure gradient component 2"},
      {"fluid.dp3", "real", "pressure gradient component 3"},
      {"fluid.sigma0", "real", "proper charge density (default 0)"},
      {"fluid.eta", "real >= 0", "shear viscosity (default 0)"},
      {"fluid.zeta", "real >= 0", "bulk viscosity (default 0)"},
      {"sweep.equation", "enum",
       "dust_continuity | perfect_euler | plasma_euler | navier_stokes | "
       "maxwell_inhomogeneous | em_divergence"},
      {"sweep.n", "int >= 1", "grid points per spatial axis (n^3 rows)"},
      {"sweep.h", "real > 0", "stencil step (default 1e-3)"},
      {"sweep.extent", "real > 0", "half width of the sampled cube (default 0.5)"},
      {"sweep.x1", "real", "cube center, component 1"},
      {"sweep.x2", "real", "cube center, component 2"},
      {"sweep.x3", "real", "cube center, component 3"},
      {"sweep.x4", "real", "cube center, time leg x4 = c t"},
      {"sweep.tol", "real > 0", "pass bound on the max |residual| (default 1e-6)"},
      {"suite.samples", "int >= 10", "sample count for randomized identity checks (default 200)"},
      {"chart", "enum", "spherical | cylindrical | cartesian, chart for the curvilinear checks"},
      {"seed", "uint", "RNG seed for randomized checks (default 12345)"},
      {"output.dir", "string", "output directory (default .; --out and RELMECH_OUT override)"},
  };
  return docs;
}

bool known_key(const std::string& k) {
  for (const auto& d : key_docs())
    if (k == d.key) return true;
  return false;
}

double parse_real(int line, const std::string& v) {
  try {
    std::size_t pos = 0;
    const double x = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ParseError(line, "expected a number, got '" + v + "'");
  }
}

int parse_int(int line, const std::string& v) {
  try {
    std::size_t pos = 0;
    const int x = std::stoi(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ParseError(line, "expected an integer, got '" + v + "'");
  }
}

bool parse_bool(int line, const std::string& v) {
  if (v == "true" || v == "1" || v == "on") return true;
  if (v == "false" || v == "0" || v == "off") return false;
  throw ParseError(line, "expected a boolean, got '" + v + "'");
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

void require_positive(const std::string& key, double v) {
  if (!(v > 0.0)) throw RangeError(key + " must be > 0, got " + format_double(v));
}

}  // namespace

ScenarioConfig parse_config(const std::string& text) {
  ScenarioConfig cfg;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(line_no, "expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (key.empty()) throw ParseError(line_no, "empty key");
    if (val.empty()) throw ParseError(line_no, "empty value for key " + key);
    if (!known_key(key)) throw UnknownKey(key);

    if (key == "scenario") {
      if (val == "orbit") cfg.kind = ScenarioKind::Orbit;
      else if (val == "lorentz_trajectory") cfg.kind = ScenarioKind::LorentzTrajectory;
      else if (val == "charged_dust") cfg.kind = ScenarioKind::ChargedDust;
      else if (val == "fluid_streamline") cfg.kind = ScenarioKind::FluidStreamline;
      else if (val == "residual_sweep") cfg.kind = ScenarioKind::ResidualSweep;
      else if (val == "identity_suite") cfg.kind = ScenarioKind::IdentitySuite;
      else throw RangeError("unknown scenario kind '" + val + "'");
      cfg.kind_set = true;
    } else if (key == "constants.c") {
      cfg.c = parse_real(line_no, val);
      require_positive(key, cfg.c);
    } else if (key == "constants.G") {
      cfg.big_g = parse_real(line_no, val);
      require_positive(key, cfg.big_g);
    } else if (key == "integrator.method") {
      if (val == "rk4") cfg.method = StepMethod::RK4;
      else if (val == "rkf45") cfg.method = StepMethod::RKF45;
      else throw RangeError("unknown integrator.method '" + val + "'");
    } else if (key == "integrator.step") {
      cfg.step = parse_real(line_no, val);
      if (cfg.step < 0.0) throw RangeError("integrator.step must be >= 0");
    } else if (key == "integrator.steps") {
      cfg.steps = parse_int(line_no, val);
      if (cfg.steps < 1) throw RangeError("integrator.steps must be >= 1");
    } else if (key == "integrator.abs_tol") {
      cfg.abs_tol = parse_real(line_no, val);
      require_positive(key, cfg.abs_tol);
    } else if (key == "integrator.rel_tol") {
      cfg.rel_tol = parse_real(line_no, val);
      require_positive(key, cfg.rel_tol);
    } else if (key == "integrator.projection") {
      cfg.projection = parse_bool(line_no, val);
    } else if (key == "integrator.fd_step") {
      cfg.fd_step = parse_real(line_no, val);
      require_positive(key, cfg.fd_step);
    } else if (key == "potential.kind") {
      if (val != "zero" && val != "point_mass" && val != "uniform")
        throw RangeError("unknown potential.kind '" + val + "'");
      cfg.potential_kind = val;
    } else if (key == "potential.GM") {
      cfg.potential_gm = parse_real(line_no, val);
      require_positive(key, cfg.potential_gm);
    } else if (key == "potential.g1") {
      cfg.potential_g[0] = parse_real(line_no, val);
    } else if (key == "potential.g2") {
      cfg.potential_g[1] = parse_real(line_no, val);
    } else if (key == "potential.g3") {
      cfg.potential_g[2] = parse_real(line_no, val);
    } else if (key == "em.kind") {
      if (val != "none" && val != "uniform" && val != "coulomb")
        throw RangeError("unknown em.kind '" + val + "'");
      cfg.em_kind = val;
    } else if (key == "em.E1") {
      cfg.em_e[0] = parse_real(line_no, val);
    } else if (key == "em.E2") {
      cfg.em_e[1] = parse_real(line_no, val);
    } else if (key == "em.E3") {
      cfg.em_e[2] = parse_real(line_no, val);
    } else if (key == "em.B1") {
      cfg.em_b[0] = parse_real(line_no, val);
    } else if (key == "em.B2") {
      cfg.em_b[1] = parse_real(line_no, val);
    } else if (key == "em.B3") {
      cfg.em_b[2] = parse_real(line_no, val);
    } else if (key == "em.q") {
      cfg.em_q = parse_real(line_no, val);
    } else if (key == "particle.mass") {
      cfg.particle_mass = parse_real(line_no, val);
      require_positive(key, cfg.particle_mass);
    } else if (key == "particle.charge") {
      cfg.particle_charge = parse_real(line_no, val);
    } else if (key == "particle.x1") {
      cfg.particle_x[0] = parse_real(line_no, val);
    } else if (key == "particle.x2") {
      cfg.particle_x[1] = parse_real(line_no, val);
    } else if (key == "particle.x3") {
      cfg.particle_x[2] = parse_real(line_no, val);
    } else if (key == "particle.t0") {
      cfg.particle_t0 = parse_real(line_no, val);
    } else if (key == "particle.v1") {
      cfg.particle_v[0] = parse_real(line_no, val);
    } else if (key == "particle.v2") {
      cfg.particle_v[1] = parse_real(line_no, val);
    } else if (key == "particle.v3") {
      cfg.particle_v[2] = parse_real(line_no, val);
    } else if (key == "orbit.GM") {
      cfg.orbit_gm = parse_real(line_no, val);
      require_positive(key, cfg.orbit_gm);
    } else if (key == "orbit.a") {
      cfg.orbit_a = parse_real(line_no, val);
      require_positive(key, cfg.orbit_a);
    } else if (key == "orbit.e") {
      cfg.orbit_e = parse_real(line_no, val);
      if (cfg.orbit_e < 0.0 || cfg.orbit_e >= 1.0)
        throw RangeError("orbit.e must lie in [0,1)");
    } else if (key == "orbit.revolutions") {
      cfg.orbit_revolutions = parse_int(line_no, val);
      if (cfg.orbit_revolutions < 1) throw RangeError("orbit.revolutions must be >= 1");
    } else if (key == "orbit.steps_per_rev") {
      cfg.orbit_steps_per_rev = parse_int(line_no, val);
      if (cfg.orbit_steps_per_rev < 8) throw RangeError("orbit.steps_per_rev must be >= 8");
    } else if (key == "orbit.gm_scale") {
      cfg.orbit_gm_scale = parse_real(line_no, val);
      require_positive(key, cfg.orbit_gm_scale);
    } else if (key == "orbit.precession_rtol") {
      cfg.orbit_precession_rtol = parse_real(line_no, val);
      require_positive(key, cfg.orbit_precession_rtol);
    } else if (key == "fluid.rho0") {
      cfg.fluid_rho0 = parse_real(line_no, val);
      require_positive(key, cfg.fluid_rho0);
    } else if (key == "fluid.p0") {
      cfg.fluid_p0 = parse_real(line_no, val);
    } else if (key == "fluid.dp1") {
      cfg.fluid_dp[0] = parse_real(line_no, val);
    } else if (key == "fluid.dp2") {
      cfg.fluid_dp[1] = parse_real(line_no, val);
    } else if (key == "fluid.dp3") {
      cfg.fluid_dp[2] = parse_real(line_no, val);
    } else if (key == "fluid.sigma0") {
      cfg.fluid_sigma0 = parse_real(line_no, val);
    } else if (key == "fluid.eta") {
      cfg.fluid_eta = parse_real(line_no, val);
      if (cfg.fluid_eta < 0.0) throw RangeError("fluid.eta must be >= 0");
    } else if (key == "fluid.zeta") {
      cfg.fluid_zeta = parse_real(line_no, val);
      if (cfg.fluid_zeta < 0.0) throw RangeError("fluid.zeta must be >= 0");
    } else if (key == "sweep.equation") {
      static const char* kinds[] = {"dust_continuity",       "perfect_euler",
                                    "plasma_euler",          "navier_stokes",
                                    "maxwell_inhomogeneous", "em_divergence"};
      bool ok = false;
      for (const char* k : kinds) ok = ok || val == k;
      if (!ok) throw RangeError("unknown sweep.equation '" + val + "'");
      cfg.sweep_equation = val;
    } else if (key == "sweep.n") {
      cfg.sweep_n = parse_int(line_no, val);
      if (cfg.sweep_n < 1) throw RangeError("sweep.n must be >= 1");
    } else if (key == "sweep.h") {
      cfg.sweep_h = parse_real(line_no, val);
      require_positive(key, cfg.sweep_h);
    } else if (key == "sweep.extent") {
      cfg.sweep_extent = parse_real(line_no, val);
      require_positive(key, cfg.sweep_extent);
    } else if (key == "sweep.x1") {
      cfg.sweep_center[0] = parse_real(line_no, val);
    } else if (key == "sweep.x2") {
      cfg.sweep_center[1] = parse_real(line_no, val);
    } else if (key == "sweep.x3") {
      cfg.sweep_center[2] = parse_real(line_no, val);
    } else if (key == "sweep.x4") {
      cfg.sweep_center[3] = parse_real(line_no, val);
    } else if (key == "sweep.tol") {
      cfg.sweep_tol = parse_real(line_no, val);
      require_positive(key, cfg.sweep_tol);
    } else if (key == "suite.samples") {
      cfg.suite_samples = parse_int(line_no, val);
      if (cfg.suite_samples < 10) throw RangeError("suite.samples must be >= 10");
    } else if (key == "chart") {
      if (val != "spherical" && val != "cylindrical" && val != "cartesian")
        throw RangeError("unknown chart '" + val + "'");
      cfg.chart = val;
    } else if (key == "seed") {
      try {
        std::size_t pos = 0;
        cfg.seed = std::stoull(val, &pos);
        if (pos != val.size()) throw std::invalid_argument(val);
      } catch (const std::exception&) {
        throw ParseError(line_no, "expected an unsigned integer, got '" + val + "'");
      }
    } else if (key == "output.dir") {
      cfg.out_dir = val;
    }
  }
  if (!cfg.kind_set) throw ParseError(0, "missing required key: scenario");
  return cfg;
}

std::string help_config() {
  std::string out = "scenario config keys (flat `key = value`, `#` comments):\n";
  for (const auto& d : key_docs()) {
    std::string line = "  ";
    line += d.key;
    while (line.size() < 28) line += ' ';
    line += d.type;
    while (line.size() < 44) line += ' ';
    line += d.doc;
    out += line + "\n";
  }
  return out;
}

std::string emit_report(const RunReport& report, ReportFormat format) {
  if (format == ReportFormat::Csv) {
    std::string out = "name,value,tolerance,pass\n";
    for (const auto& c : report.checks) {
      out += c.name + "," + format_double(c.value) + "," + format_double(c.tolerance) +
             "," + (c.pass ? "true" : "false") + "\n";
    }
    return out;
  }
  auto pad = [](const std::string& s, std::size_t w) {
    std::string r = s;
    while (r.size() < w) r += ' ';
    return r;
  };
  std::string out;
  out += pad("scenario", 34) + report.scenario_id + "\n";
  for (const auto& [k, v] : report.info) out += pad(k, 34) + v + "\n";
  out += "[checks]\n";
  for (const auto& c : report.checks) {
    out += pad(c.name, 34) + "value=" + format_double(c.value) +
           " tol=" + format_double(c.tolerance) + " pass=" + (c.pass ? "true" : "false") +
           "\n";
  }
  out += "[artifacts]\n";
  for (const auto& a : report.artifacts) out += a + "\n";
  return out;
}

}  // namespace relmech::cli
