#pragma once

// Geodesic integration in effective metrics, conserved first integrals for
// static fields, the orbit first-order form, and the perihelion-shift
// prediction and measurement.

#include <vector>

#include "relmech/linear_gravity.hpp"
#include "relmech/worldline.hpp"

namespace relmech::orbit {

//! -Gamma^a_bc u^b u^c. The static provenance evaluates directly from the
//! analytic potential gradient; other metrics contract assembled symbols
//! built with central differences of step fd_step. Streamline integrators
//! share this evaluation.
Vec4 geodesic_acceleration(const gravity::EffectiveMetric& g, const Vec4& x,
                           const Vec4& u, double fd_step);

//! Integrates d2X/ds2 + Gamma^a_bc u^b u^c = 0 from a g-normalized state.
//! The per-sample norm_residual column records g_{mu nu} U^mu U^nu + c^2.
Worldline integrate_geodesic(const gravity::EffectiveMetric& g,
                             const ParticleState& initial, double ds, int n,
                             const IntegratorOptions& opts = {});

struct FirstIntegrals {
  double energy;            // conserved energy per unit mass, (m/s)^2 scale
  double angular_momentum;  // h, m^2/s
};

//! Conserved quantities of equatorial motion in a static potential:
//! energy from the cyclic time coordinate and h from the cyclic azimuth.
//! Throws NotEquatorial when the state leaves the equatorial plane by more
//! than 1e-9 relative.
FirstIntegrals static_first_integrals(const ParticleState& state,
                                      const gravity::NewtonianPotential& w, double c);

//! Per-unit-mass Lagrangian of static-field motion,
//! L = (1/2)(1+2|W|/c^2) |u_spatial|^2 - (1/2)(1-2|W|/c^2) (u^4)^2.
double lagrangian(const Vec4& x, const Vec4& u, const gravity::NewtonianPotential& w,
                  double c);

struct OrbitEquationParams {
  double gm;
  double h;
  double energy;
  double c;
};

//! First-order radial orbit equation in y = 1/r; zero along exact orbits.
double orbit_equation_residual(double y, double yprime, const OrbitEquationParams& p);

//! Closed-form secular perihelion advance per revolution, 8 pi (GM / (c h))^2.
double perihelion_shift_closed_form(double gm, double h, double c);

struct PrecessionReport {
  std::vector<double> perihelion_angles;  // omega_k, one per radial minimum
  double delta_per_rev = 0.0;             // least-squares fitted shift
  double fit_rms = 0.0;                   // scatter of the linear fit
  double closed_form = 0.0;               // filled by the orbit pipeline
  double relative_deviation = 0.0;        // |measured/closed_form - 1|
  int revolutions = 0;
};

//! Locates perihelia as interpolated local minima of r(s) on an equatorial
//! worldline and fits the per-revolution angular advance. Needs at least 3
//! passages, otherwise throws InsufficientOrbits.
PrecessionReport measure_precession(const Worldline& w);

//! ds/dt factor of a moving state in a static field. Throws NotTimelike when
//! the radicand is non-positive.
double time_dilation_factor(const ParticleState& state,
                            const gravity::NewtonianPotential& w, double c);

}  // namespace relmech::orbit
