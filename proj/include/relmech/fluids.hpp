#pragma once

// Relativistic continuum dynamics as pointwise residual evaluators over
// analytic field oracles, plus parcel streamline integrators. The residual
// family shares one code path so the degeneration chain
//   viscous -> plasma (eta = zeta = 0) -> perfect fluid (sigma0 = 0)
//   -> dust (p = 0)
// holds exactly, not just to rounding. Null oracles mean "identically zero";
// the interaction tensor Theta is never represented as data, only the
// divergence it is required to have (theta_divergence_required).

#include <functional>
#include <string>

#include "relmech/electromagnetism.hpp"
#include "relmech/linear_gravity.hpp"
#include "relmech/worldline.hpp"

namespace relmech::fluid {

//! Pointwise state of the medium, mostly a documentation aid for bindings.
struct FluidState {
  double rho = 0.0;     // proper mass density, >= 0
  double pressure = 0.0;
  Vec4 u;               // g-normalized four-velocity
  double sigma0 = 0.0;  // proper charge density, Gaussian
  double eta = 0.0;     // shear viscosity
  double zeta = 0.0;    // bulk viscosity
};

//! Effect-free oracles describing the medium. Unset entries are zero fields.
struct FluidFieldSet {
  std::function<double(const Vec4&)> rho;
  std::function<double(const Vec4&)> pressure;
  std::function<Vec4(const Vec4&)> u;
  std::function<double(const Vec4&)> sigma0;
  em::FaradayField faraday;
  std::function<double(const Vec4&)> shear_viscosity;
  std::function<double(const Vec4&)> bulk_viscosity;
  gravity::EffectiveMetric metric = gravity::EffectiveMetric::flat();
};

struct ResidualVector {
  std::string tag;
  Vec4 r;
  double h = 0.0;
  Vec4 x;
};

//! Builds the g-normalized four-velocity oracle of a coordinate-velocity
//! field, the form every test flow is specified in.
std::function<Vec4(const Vec4&)> four_velocity_field(
    std::function<Vec3(const Vec4&)> v, const gravity::EffectiveMetric& g, double c);

//! Projector removing the component along u: P^a_g = delta^a_g + ubar_g u^a / c^2.
Mat4 projector(const gravity::EffectiveMetric& g, const Vec4& x, const Vec4& u, double c);

// --- continuity family ------------------------------------------------------

//! d_nu (rho u^nu) by central differences.
double continuity_residual_dust(const FluidFieldSet& f, const Vec4& x, double h);

//! The same conservation law written in coordinate time and 3-velocity,
//! exposed for comparison against the covariant form.
double continuity_residual_dust_coordinate(const FluidFieldSet& f, const Vec4& x,
                                           double h, double c);

//! d_b [(rho + p/c^2) u^b] - (1/c^2) ubar_a d_b (p g^{ab}).
double continuity_residual_perfect_fluid(const FluidFieldSet& f, const Vec4& x,
                                         double h, double c);

//! Adds the charge-current coupling with J^b = sigma0 u^b.
double plasma_continuity_residual(const FluidFieldSet& f, const Vec4& x, double h,
                                  double c);

//! Adds the viscous-stress divergence.
double viscous_continuity_residual(const FluidFieldSet& f, const Vec4& x, double h,
                                   double c);

// --- momentum family --------------------------------------------------------

ResidualVector euler_residual_perfect_fluid(const FluidFieldSet& f, const Vec4& x,
                                            double h, double c);

ResidualVector plasma_euler_residual(const FluidFieldSet& f, const Vec4& x, double h,
                                     double c);

ResidualVector navier_stokes_residual(const FluidFieldSet& f, const Vec4& x, double h,
                                      double c);

//! Viscous correction to the total stress-energy: the shear term contracted
//! with (g^{a s} + u^a u^s / c^2) on both slots plus the bulk trace part.
Mat4 viscous_stress_energy(const FluidFieldSet& f, const Vec4& x, double h, double c);

//! Divergence the interaction tensor must carry to conserve the total:
//! (rho + p/c^2) Gamma^a_bg u^b u^g.
Vec4 theta_divergence_required(const FluidFieldSet& f, const Vec4& x, double h, double c);

// --- streamlines -------------------------------------------------------------

struct FluidParcel {
  Vec4 x;
  Vec4 u;               // g-normalized
  double rho = 1.0;     // > 0
  double sigma0 = 0.0;
};

//! Charged-dust equations of motion: geodesic terms of the external metric
//! plus the projected Lorentz force scaled by sigma0/rho.
Worldline charged_dust_streamline(const FluidParcel& parcel, const em::FaradayField& f,
                                  const gravity::EffectiveMetric& g, double ds, int n,
                                  const IntegratorOptions& opts = {});

//! Perfect-fluid streamline with pressure-gradient forcing under the
//! projector; rho and p are taken from the field oracles along the path.
Worldline perfect_fluid_streamline(const Vec4& x0, const Vec4& u0,
                                   const FluidFieldSet& fields, double ds, int n,
                                   const IntegratorOptions& opts = {});

// --- static-field expansion checks -------------------------------------------

struct ExpansionResiduals {
  double exact;     // full static continuity residual
  double expanded;  // first order in 1/c^2; the gap to exact scales as c^-4
};

//! Requires a FromStaticW metric; evaluates the exact static continuity
//! residual and its 1/c^2-truncated expansion at the same event.
ExpansionResiduals static_continuity_expansion_residual(const FluidFieldSet& f,
                                                        const Vec4& x, double h,
                                                        double c);

}  // namespace relmech::fluid
