// Acceptance suite: one line per criterion, PASS/FAIL with the measured
// numbers, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "relmech/csv.hpp"
#include "relmech/curvilinear.hpp"
#include "relmech/electromagnetism.hpp"
#include "relmech/fluids.hpp"
#include "relmech/geodesic.hpp"
#include "relmech/linear_gravity.hpp"
#include "relmech/minkowski.hpp"
#include "relmech/scenario.hpp"
#include "relmech/worldline.hpp"

using namespace relmech;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::mt19937_64 rng(20250808);
double uniform(double lo, double hi) {
  return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}

LorentzTransform random_boost(double beta_max) {
  const double u = uniform(-1, 1);
  const double phi = uniform(0, 2 * std::numbers::pi);
  const double s = std::sqrt(1 - u * u);
  const double b = beta_max * uniform(0, 1);
  return LorentzTransform::boost({b * s * std::cos(phi), b * s * std::sin(phi), b * u},
                                 1.0);
}

LorentzTransform random_rotation() {
  const double u = uniform(-1, 1);
  const double phi = uniform(0, 2 * std::numbers::pi);
  const double s = std::sqrt(1 - u * u);
  const Vec3 axis{s * std::cos(phi), s * std::sin(phi), u};
  const double ang = uniform(0, 2 * std::numbers::pi);
  const double ca = std::cos(ang), sa = std::sin(ang);
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double v = ca * (i == j ? 1.0 : 0.0) + (1 - ca) * axis[i] * axis[j];
      for (int k = 0; k < 3; ++k) v -= sa * epsilon3(i, j, k) * axis[k];
      r(i, j) = v;
    }
  return LorentzTransform::spatial_rotation(r);
}

// ---- criterion 1: closed-form perihelion shift ------------------------------

Outcome closed_form_perihelion() {
  const auto r = cli::precession_pipeline(1.32712440018e20, 5.7909e10, 0.20563,
                                          kSpeedOfLight, 0, 1.0, 4000, true);
  const double dev_arcsec = std::abs(r.closed_form_arcsec_per_century / 57.3 - 1.0);
  const bool rad_ok = std::abs(r.closed_form_rad_per_rev / 6.6916e-7 - 1.0) < 0.01;
  return {dev_arcsec <= 0.01 && rad_ok,
          format_double(r.closed_form_rad_per_rev) + " rad/rev, " +
              format_double(r.closed_form_arcsec_per_century) + " arcsec/century"};
}

// ---- criterion 2: simulated perihelion shift --------------------------------

Outcome simulated_perihelion() {
  const auto r = cli::precession_pipeline(1.32712440018e20, 5.7909e10, 0.20563,
                                          kSpeedOfLight, 55, 1.0e4, 3000, true);
  return {r.relative_deviation <= 0.05,
          "measured " + format_double(r.measured_rad_per_rev) + " vs closed " +
              format_double(r.closed_form_rad_per_rev) + ", dev " +
              format_double(r.relative_deviation)};
}

// ---- criterion 3: geodesic first integrals ----------------------------------

Outcome first_integral_drift() {
  const auto r = cli::precession_pipeline(1.32712440018e20, 5.7909e10, 0.20563,
                                          kSpeedOfLight, 50, 1.0, 4000, true);
  const bool ok = r.energy_drift_rel <= 1e-8 && r.angmom_drift_rel <= 1e-8 &&
                  r.max_norm_residual <= 1e-9;
  return {ok, "eps drift " + format_double(r.energy_drift_rel) + ", h drift " +
                  format_double(r.angmom_drift_rel) + ", norm " +
                  format_double(r.max_norm_residual) + " c^2"};
}

// ---- criterion 4: EM divergence identity convergence ------------------------

Outcome em_divergence_order() {
  // oblique propagation so the stencil legs do not cancel identically
  auto wave = [](const Vec4& x) {
    const double s = std::sin(0.6 * x[0] + 0.8 * x[1] - x[3]);
    return em::FaradayTensor({0.0, 0.0, s}, {0.8 * s, -0.6 * s, 0.0});
  };
  auto coulomb = [](const Vec4& x) {
    const Vec3 xs = x.spatial();
    const double r = norm(xs);
    return em::FaradayTensor(xs * (1.3 / (r * r * r)), {});
  };
  auto vacuum = [](const Vec4&) { return Vec4{}; };

  double worst_dev = 0.0;
  std::string detail;
  const struct {
    em::FaradayField field;
    Vec4 x;
    double h0;
    const char* name;
  } cases[] = {{wave, {0.37, 0.1, -0.2, 0.11}, 2e-2, "wave"},
               {coulomb, {1.0, 0.5, -0.3, 0.0}, 4e-3, "coulomb"}};
  for (const auto& cse : cases) {
    double prev = euclid(em::divergence_identity_residual(cse.field, vacuum, cse.x,
                                                          cse.h0, 1.0));
    for (int level = 1; level <= 2; ++level) {
      const double cur = euclid(em::divergence_identity_residual(
          cse.field, vacuum, cse.x, cse.h0 / std::pow(2.0, level), 1.0));
      const double order = std::log2(prev / cur);
      worst_dev = std::max(worst_dev, std::abs(order - 2.0));
      detail += std::string(cse.name) + " order " + format_double(order) + " ";
      prev = cur;
    }
  }
  return {worst_dev <= 0.2, detail};
}

// ---- criterion 5: gauge invariance ------------------------------------------

Outcome gauge_invariance() {
  auto a_pot = [](const Vec4& x) -> CoVec4 {
    return {0.2 * x[1] * x[3], -0.1 * x[0] * x[0], 0.3 * x[2] * x[1],
            0.4 * x[0] - 0.2 * x[3] * x[3]};
  };
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    std::array<double, 10> k{};
    for (auto& v : k) v = uniform(-1, 1);
    auto lambda = [k](const Vec4& x) {
      return k[0] * x[0] * x[1] + k[1] * x[2] * x[3] + k[2] * x[0] * x[0] * x[0] +
             k[3] * x[1] * x[1] * x[3] + k[4] * x[2] + k[5] * x[3] * x[3] +
             k[6] * x[0] * x[2] * x[3] + k[7] * x[1] + k[8] * x[3] + k[9];
    };
    const auto shifted = em::gauge_transform(a_pot, lambda, 1e-2);
    const Vec4 x{uniform(-1, 1), uniform(-1, 1), uniform(-1, 1), uniform(-1, 1)};
    const auto f1 = em::faraday_from_potential(a_pot, x, 1e-2);
    const auto f2 = em::faraday_from_potential(shifted, x, 1e-2);
    double scale = 1.0, diff = 0.0;
    for (int m = 0; m < 4; ++m)
      for (int n = 0; n < 4; ++n) {
        scale = std::max(scale, std::abs(f1.dd(m, n)));
        diff = std::max(diff, std::abs(f1.dd(m, n) - f2.dd(m, n)));
      }
    worst = std::max(worst, diff / scale);
  }
  return {worst <= 1e-10, "max relative field change " + format_double(worst)};
}

// ---- criterion 6: Lorentz group suite ---------------------------------------

Outcome lorentz_suite() {
  double worst_verify = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const auto l = (i % 2 == 0) ? compose(random_boost(0.95), random_rotation())
                                : compose(random_rotation(), random_boost(0.95));
    worst_verify = std::max(worst_verify, l.verify());
  }
  double worst_inner = 0.0;
  int misclassified = 0;
  for (int i = 0; i < 10000; ++i) {
    const Vec4 v{uniform(-1, 1), uniform(-1, 1), uniform(-1, 1), uniform(-1, 1)};
    const Vec4 w{uniform(-1, 1), uniform(-1, 1), uniform(-1, 1), uniform(-1, 1)};
    const auto l = random_boost(0.99);
    const double before = inner4(v, w);
    const double after = inner4(l.apply_vector(v), l.apply_vector(w));
    worst_inner =
        std::max(worst_inner, std::abs(after - before) / std::max(1.0, std::abs(before)));
    if (std::abs(inner4(v, v)) > 1e-11 && classify(l.apply_vector(v)) != classify(v))
      ++misclassified;
  }
  const double b1 = 0.5, b2 = 0.5;
  const auto l = compose(LorentzTransform::boost({b1, 0, 0}, 1.0),
                         LorentzTransform::boost({b2, 0, 0}, 1.0));
  const double beta = -l.matrix()(0, 3) / l.matrix()(0, 0);
  const double add_dev = std::abs(beta - (b1 + b2) / (1 + b1 * b2));

  const bool ok = worst_verify <= 1e-12 && worst_inner <= 1e-10 && misclassified == 0 &&
                  add_dev <= 1e-12;
  return {ok, "verify " + format_double(worst_verify) + ", inner " +
                  format_double(worst_inner) + ", misclassified " +
                  std::to_string(misclassified) + ", addition " + format_double(add_dev)};
}

// ---- criterion 7: energy expansion ------------------------------------------

Outcome energy_expansion() {
  const double m = 1.0, c = 1.0;
  double lo = 1e300, hi = 0.0;
  for (double beta : {0.2, 0.1, 0.05, 0.025}) {
    const double rem = energy(m, {beta, 0, 0}, c) - m * c * c - 0.5 * m * beta * beta;
    const double ratio = rem / (m * c * c * beta * beta * beta * beta);
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
  const bool band_ok = (hi - lo) / lo <= 0.10;
  const bool rest_exact = energy(m, {0, 0, 0}, c) == m * c * c;
  const double joules = energy(1.0, {0, 0, 0}, kSpeedOfLight);
  const bool kg_ok = joules == 8.9875517873681764e16;
  return {band_ok && rest_exact && kg_ok,
          "remainder ratio in [" + format_double(lo) + ", " + format_double(hi) +
              "], 1 kg = " + format_double(joules) + " J"};
}

// ---- criterion 8: newtonian-limit c-scaling ---------------------------------

Outcome c_scaling() {
  // streamline: defect of the Newtonian momentum law drops ~4x when c doubles
  auto newton_defect = [](double c) {
    const auto w = gravity::NewtonianPotential::uniform({-0.03, 0, 0});
    fluid::FluidFieldSet f;
    f.metric = gravity::EffectiveMetric::from_static_w(w, c);
    f.rho = [](const Vec4&) { return 1.0; };
    f.pressure = [](const Vec4& x) { return 0.5 - 0.06 * x[0] + 0.02 * x[1]; };
    const Vec4 x0{0.2, -0.1, 0, 0};
    const Vec4 u0 = gravity::g_normalized_four_velocity(f.metric, x0, {0.12, 0.05, 0}, c);
    IntegratorOptions opts;
    opts.c = c;
    const Worldline tr = fluid::perfect_fluid_streamline(x0, u0, f, 5e-3, 400, opts);
    double worst = 0.0;
    for (std::size_t i = 1; i + 1 < tr.samples.size(); i += 16) {
      const auto& sm = tr.samples[i - 1];
      const auto& s0 = tr.samples[i];
      const auto& sp = tr.samples[i + 1];
      const double dt = sp.t - sm.t;
      const Vec3 grad_w = w.gradient(s0.x.spatial());
      const Vec3 grad_p{-0.06, 0.02, 0.0};
      for (int k = 0; k < 3; ++k) {
        const double dv_dt = (c * sp.u[k] / sp.u[3] - c * sm.u[k] / sm.u[3]) / dt;
        worst = std::max(worst, std::abs(dv_dt + grad_w[k] + grad_p[k]));
      }
    }
    return worst;
  };
  const double euler_ratio = newton_defect(5.0) / newton_defect(10.0);

  // pointwise: the gap between the exact and expanded static continuity
  // residuals drops ~16x when c doubles
  auto gap = [](double c) {
    fluid::FluidFieldSet f;
    f.metric = gravity::EffectiveMetric::from_static_w(
        gravity::NewtonianPotential::uniform({0.02, -0.01, 0}), c);
    f.rho = [](const Vec4& x) { return 1.0 + 0.1 * std::sin(x[0] + 0.2 * x[3]); };
    f.pressure = [](const Vec4& x) { return 0.2 + 0.05 * std::cos(x[1]); };
    f.u = fluid::four_velocity_field(
        [](const Vec4& x) {
          return Vec3{0.3 * std::sin(x[1]), 0.2 * std::cos(x[0]), 0.1};
        },
        f.metric, c);
    const auto res =
        fluid::static_continuity_expansion_residual(f, {0.4, -0.3, 0.2, 0.5}, 1e-4, c);
    return std::abs(res.exact - res.expanded);
  };
  const double gap_ratio = gap(5.0) / gap(10.0);

  const bool ok = std::abs(euler_ratio - 4.0) <= 0.6 && std::abs(gap_ratio - 16.0) <= 3.2;
  return {ok, "euler-defect ratio " + format_double(euler_ratio) +
                  " (want 4 +-15%), expansion-gap ratio " + format_double(gap_ratio) +
                  " (want 16 +-20%)"};
}

// ---- criterion 9: degeneration chain ----------------------------------------

Outcome degeneration_chain() {
  const double c = 10.0, h = 1e-3;
  fluid::FluidFieldSet f;
  f.metric = gravity::EffectiveMetric::from_static_w(
      gravity::NewtonianPotential::uniform({0.01, -0.02, 0.005}), c);
  f.rho = [](const Vec4& x) { return 1.0 + 0.1 * std::sin(x[0] + 0.3 * x[3]); };
  f.pressure = [](const Vec4& x) { return 0.2 + 0.05 * std::cos(x[1]); };
  f.u = fluid::four_velocity_field(
      [](const Vec4& x) {
        return Vec3{0.3 * std::sin(x[1]), 0.2 * std::cos(x[0]), 0.1};
      },
      f.metric, c);
  f.sigma0 = [](const Vec4& x) { return 0.1 + 0.02 * std::sin(x[2]); };
  f.faraday = [](const Vec4& x) {
    return em::FaradayTensor({0.1 * x[1], 0.0, 0.05}, {0.0, 0.2, 0.1 * x[0]});
  };

  fluid::FluidFieldSet inviscid = f;
  inviscid.shear_viscosity = [](const Vec4&) { return 0.0; };
  inviscid.bulk_viscosity = [](const Vec4&) { return 0.0; };
  fluid::FluidFieldSet neutral = inviscid;
  neutral.sigma0 = [](const Vec4&) { return 0.0; };
  fluid::FluidFieldSet pressureless = neutral;
  pressureless.pressure = [](const Vec4&) { return 0.0; };

  bool exact = true;
  for (double x1 : {0.4, -0.6}) {
    const Vec4 x{x1, -0.3, 0.2, 0.5};
    const Vec4 ns = fluid::navier_stokes_residual(inviscid, x, h, c).r;
    const Vec4 pl = fluid::plasma_euler_residual(inviscid, x, h, c).r;
    const Vec4 pe = fluid::plasma_euler_residual(neutral, x, h, c).r;
    const Vec4 ep = fluid::euler_residual_perfect_fluid(neutral, x, h, c).r;
    for (int i = 0; i < 4; ++i)
      exact = exact && ns[i] == pl[i] && pe[i] == ep[i];
    exact = exact &&
            fluid::viscous_continuity_residual(inviscid, x, h, c) ==
                fluid::plasma_continuity_residual(inviscid, x, h, c) &&
            fluid::plasma_continuity_residual(neutral, x, h, c) ==
                fluid::continuity_residual_perfect_fluid(neutral, x, h, c) &&
            fluid::continuity_residual_perfect_fluid(pressureless, x, h, c) ==
                fluid::continuity_residual_dust(pressureless, x, h);
  }
  return {exact, exact ? "all three degenerations agree exactly"
                       : "a degenerate pair differs"};
}

// ---- criterion 10: curvilinear operators ------------------------------------

Outcome curvilinear_operators() {
  struct ScalarCase {
    std::function<double(const Vec3&)> f;
    std::function<Vec3(const Vec3&)> grad;
    std::function<double(const Vec3&)> lap;
  };
  const std::vector<ScalarCase> cases = {
      // three polynomial fields
      {[](const Vec3& x) { return x[0] * x[0] * x[1] - 2 * x[2] + x[1] * x[2] * x[2]; },
       [](const Vec3& x) {
         return Vec3{2 * x[0] * x[1], x[0] * x[0] + x[2] * x[2], -2 + 2 * x[1] * x[2]};
       },
       [](const Vec3& x) { return 2 * x[1] + 2 * x[1]; }},
      {[](const Vec3& x) { return x[0] + x[0] * x[1] * x[2]; },
       [](const Vec3& x) {
         return Vec3{1 + x[1] * x[2], x[0] * x[2], x[0] * x[1]};
       },
       [](const Vec3&) { return 0.0; }},
      {[](const Vec3& x) { return dot(x, x); },
       [](const Vec3& x) { return x * 2.0; }, [](const Vec3&) { return 6.0; }},
      // two harmonic fields: 1/r and the dipole z/r^3
      {[](const Vec3& x) { return 1.0 / norm(x); },
       [](const Vec3& x) {
         const double r = norm(x);
         return x * (-1.0 / (r * r * r));
       },
       [](const Vec3&) { return 0.0; }},
      {[](const Vec3& x) {
         const double r = norm(x);
         return x[2] / (r * r * r);
       },
       [](const Vec3& x) {
         const double r = norm(x);
         const double r5 = std::pow(r, 5.0);
         return Vec3{-3 * x[0] * x[2] / r5, -3 * x[1] * x[2] / r5,
                     1.0 / (r * r * r) - 3 * x[2] * x[2] / r5};
       },
       [](const Vec3&) { return 0.0; }},
  };

  const auto sph = frames::Chart::spherical();
  const auto cyl = frames::Chart::cylindrical();
  const auto sph_ops = frames::orthogonal_operators(frames::ScaleFactors::spherical());
  const auto cyl_ops = frames::orthogonal_operators(frames::ScaleFactors::cylindrical());
  const std::vector<Vec3> points = {{0.9, 0.6, 1.2}, {-0.7, 1.1, 0.4}, {1.3, -0.5, -0.8}};

  double worst = 0.0;
  double worst_harmonic = 0.0;
  for (const auto& cse : cases) {
    for (const Vec3& xc : points) {
      const Vec3 gc = cse.grad(xc);
      // spherical
      {
        const Vec3 q = sph.to_curvilinear(xc);
        auto f_hat = [&](const Vec3& qq) { return cse.f(sph.to_cartesian(qq)); };
        const Vec3 g = sph_ops.grad_phys(f_hat, q, 1e-5);
        const double r = norm(xc);
        const Vec3 er = xc * (1.0 / r);
        const double rho = std::hypot(xc[0], xc[1]);
        const Vec3 eph{-xc[1] / rho, xc[0] / rho, 0.0};
        const Vec3 eth = cross(eph, er);
        const Vec3 want{dot(gc, er), dot(gc, eth), dot(gc, eph)};
        worst = std::max(worst, norm(g - want) / std::max(1.0, norm(want)));
        const double lap = sph_ops.laplacian(f_hat, q, 1e-4);
        const double want_lap = cse.lap(xc);
        if (want_lap == 0.0)
          worst_harmonic = std::max(worst_harmonic, std::abs(lap));
        else
          worst = std::max(worst, std::abs(lap - want_lap) / std::abs(want_lap));
      }
      // cylindrical
      {
        const Vec3 q = cyl.to_curvilinear(xc);
        auto f_hat = [&](const Vec3& qq) { return cse.f(cyl.to_cartesian(qq)); };
        const Vec3 g = cyl_ops.grad_phys(f_hat, q, 1e-6);
        const double rho = std::hypot(xc[0], xc[1]);
        const Vec3 erho{xc[0] / rho, xc[1] / rho, 0.0};
        const Vec3 ephi{-xc[1] / rho, xc[0] / rho, 0.0};
        const Vec3 want{dot(gc, erho), dot(gc, ephi), gc[2]};
        worst = std::max(worst, norm(g - want) / std::max(1.0, norm(want)));
      }
    }
  }

  // divergence and curl equivalence on a polynomial vector field
  auto vec_c = [](const Vec3& x) {
    return Vec3{x[1] * x[2], -x[0] * x[0], x[0] + x[2] * x[2]};
  };
  auto div_c = [](const Vec3& x) { return 2.0 * x[2]; };
  auto curl_c = [](const Vec3& x) { return Vec3{0.0, x[1] - 1.0, -2.0 * x[0] - x[2]}; };
  for (const Vec3& xc : points) {
    const Vec3 q = sph.to_curvilinear(xc);
    const double r = norm(xc);
    const Vec3 er = xc * (1.0 / r);
    const double rho = std::hypot(xc[0], xc[1]);
    const Vec3 eph{-xc[1] / rho, xc[0] / rho, 0.0};
    const Vec3 eth = cross(eph, er);
    auto v_hat = [&](const Vec3& qq) {
      const Vec3 x = sph.to_cartesian(qq);
      const double rr = norm(x);
      const Vec3 er2 = x * (1.0 / rr);
      const double rho2 = std::hypot(x[0], x[1]);
      const Vec3 eph2{-x[1] / rho2, x[0] / rho2, 0.0};
      const Vec3 eth2 = cross(eph2, er2);
      const Vec3 v = vec_c(x);
      return Vec3{dot(v, er2), dot(v, eth2), dot(v, eph2)};
    };
    const double div = sph_ops.divergence(v_hat, q, 1e-5);
    worst = std::max(worst, std::abs(div - div_c(xc)) / std::max(1.0, std::abs(div_c(xc))));
    const Vec3 curl = sph_ops.curl_phys(v_hat, q, 1e-5);
    const Vec3 cc = curl_c(xc);
    const Vec3 want{dot(cc, er), dot(cc, eth), dot(cc, eph)};
    worst = std::max(worst, norm(curl - want) / std::max(1.0, norm(want)));
  }

  const bool ok = worst <= 1e-6 && worst_harmonic <= 1e-6;
  return {ok, "max relative deviation " + format_double(worst) + ", harmonic residual " +
                  format_double(worst_harmonic)};
}

// ---- criterion 11: cross-module consistency ---------------------------------

Outcome cross_module() {
  const int n = 10000;
  // charged dust in flat space against the Lorentz integrator
  const auto flat = gravity::EffectiveMetric::flat(1.0);
  const em::FaradayField field = [](const Vec4&) {
    return em::FaradayTensor({0.1, 0.0, 0.05}, {0.0, 0.0, 0.8});
  };
  fluid::FluidParcel parcel;
  parcel.x = {0, 0, 0, 0};
  parcel.u = four_velocity_from_coordinate_velocity({0.3, 0.1, 0}, 1.0);
  parcel.rho = 2.0;
  parcel.sigma0 = 0.5;
  IntegratorOptions opts;
  opts.c = 1.0;
  const Worldline a = fluid::charged_dust_streamline(parcel, field, flat, 1e-3, n, opts);
  ParticleState ps{parcel.x, parcel.u, 2.0, 0.5};
  const Worldline b = em::integrate_lorentz(ps, field, 1e-3, n, opts);
  double lorentz_dev = 0.0;
  for (std::size_t i = 0; i < a.samples.size(); ++i)
    for (int k = 0; k < 4; ++k)
      lorentz_dev = std::max(lorentz_dev, std::abs(a.samples[i].x[k] - b.samples[i].x[k]) /
                                              std::max(1.0, std::abs(b.samples[i].x[k])));

  // uncharged dust in a static field against the geodesic integrator
  const double c = 10.0;
  const auto w = gravity::NewtonianPotential::point_mass(1.0);
  const auto g = gravity::EffectiveMetric::from_static_w(w, c);
  fluid::FluidParcel dust;
  dust.x = {2.0, 0, 0, 0};
  dust.u = gravity::g_normalized_four_velocity(g, dust.x, {0, 0.7, 0}, c);
  dust.rho = 1.0;
  dust.sigma0 = 0.0;
  IntegratorOptions opts2;
  opts2.c = c;
  const Worldline d1 = fluid::charged_dust_streamline(dust, nullptr, g, 1e-2, n, opts2);
  const Worldline d2 =
      orbit::integrate_geodesic(g, {dust.x, dust.u, 1.0, 0.0}, 1e-2, n, opts2);
  double geo_dev = 0.0;
  for (std::size_t i = 0; i < d1.samples.size(); ++i)
    for (int k = 0; k < 4; ++k)
      geo_dev = std::max(geo_dev, std::abs(d1.samples[i].x[k] - d2.samples[i].x[k]) /
                                      std::max(1.0, std::abs(d2.samples[i].x[k])));

  const bool ok = lorentz_dev <= 1e-10 && geo_dev <= 1e-12;
  return {ok, "lorentz dev " + format_double(lorentz_dev) + ", geodesic dev " +
                  format_double(geo_dev)};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"perihelion-shift-closed-form", closed_form_perihelion},
      {"perihelion-shift-simulated", simulated_perihelion},
      {"geodesic-first-integrals", first_integral_drift},
      {"em-divergence-identity-order", em_divergence_order},
      {"gauge-invariance", gauge_invariance},
      {"lorentz-group-suite", lorentz_suite},
      {"energy-expansion", energy_expansion},
      {"newtonian-limit-c-scaling", c_scaling},
      {"degeneration-chain", degeneration_chain},
      {"curvilinear-operators", curvilinear_operators},
      {"cross-module-consistency", cross_module},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria[i].run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %2zu %-32s %s (%.2f s)\n", out.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].name, out.detail.c_str(), secs);
    if (!out.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
