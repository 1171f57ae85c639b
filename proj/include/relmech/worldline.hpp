#pragma once

// Proper-time machinery and relativistic point-particle dynamics in flat
// spacetime. The integrators advance m d2X/ds2 = F in the proper-time
// parameterization and keep the four-velocity on the mass shell
// d_{ab} U^a U^b = -c^2.

#include <functional>
#include <string>
#include <vector>

#include "relmech/errors.hpp"
#include "relmech/minkowski.hpp"
#include "relmech/vec.hpp"

namespace relmech {

//! Relative band accepted on the four-velocity normalization, in units of c^2.
inline constexpr double kNormTol = 1e-9;

struct ParticleState {
  Vec4 x;            // event, x[3] = c t
  Vec4 u;            // four-velocity dX/ds
  double mass = 1.0;    // rest mass, constant along the motion curve
  double charge = 0.0;  // Gaussian charge
};

struct WorldlineSample {
  double s;              // proper time
  double t;              // coordinate time x4/c
  Vec4 x;
  Vec4 u;
  double norm_residual;  // signed <u,u> + c^2 under the governing metric
};

struct Worldline {
  std::vector<WorldlineSample> samples;
  double step = 0.0;
  std::string method;
};

//! Relativistic force evaluator F(x; u). Must be effect-free and satisfy the
//! orthogonality constraint d_{ab} F^a u^b = 0 wherever queried.
using ForceOracle = std::function<Vec4(const Vec4& x, const Vec4& u)>;

enum class StepMethod { RK4, RKF45 };

struct IntegratorOptions {
  StepMethod method = StepMethod::RK4;
  //! Rescale the four-velocity onto the mass shell after every step.
  bool renormalize = true;
  double abs_tol = 1e-10;  // adaptive mode
  double rel_tol = 1e-10;  // adaptive mode
  double c = kSpeedOfLight;
  //! Adaptive mode rejects outright once the controller asks for a step
  //! below this fraction of the requested span.
  double min_step_fraction = 1e-12;
  //! Step used when a metric has to be differentiated numerically.
  double fd_step = 1e-4;
};

struct ProperTimeTable {
  std::vector<double> u;  // parameter nodes
  std::vector<double> s;  // proper time, s.front() == 0, strictly increasing
};

using PathOracle = std::function<Vec4(double)>;

//! Composite Simpson quadrature of the proper-time integral over [u1, u2]
//! with n subintervals (midpoint rule per interval, error O(n^-4)).
//! The path must be timelike at every quadrature node; the first violation
//! raises NotTimelike carrying the offending parameter value.
//! If no derivative oracle is supplied it is formed by central differences.
ProperTimeTable proper_time_table(const PathOracle& position, double u1, double u2,
                                  int n, double c,
                                  const PathOracle& derivative = nullptr);

//! U^i = gamma v^i, U^4 = gamma c. Throws SpeedNotSubluminal.
Vec4 four_velocity_from_coordinate_velocity(const Vec3& v, double c);

//! Exact algebraic inverse, v^i = c U^i / U^4.
Vec3 coordinate_velocity_from_four_velocity(const Vec4& u, double c);

//! Advances m d2X/ds2 = F(x;u) from a normalized state for n steps of ds.
//! The force is checked for orthogonality once per step; a violation beyond
//! 1e-6 |F| |u| raises OrthogonalityViolated (a malformed oracle).
Worldline integrate_relativistic(const ParticleState& initial, const ForceOracle& force,
                                 double ds, int n, const IntegratorOptions& opts = {});

//! Newtonian force components mapped to the relativistic four-force at
//! coordinate velocity v: F^i = gamma f^i, F^4 = delta_ij F^i v^j / c.
Vec4 newtonian_force_to_relativistic(const Vec3& f, const Vec3& v, double c);

//! Inverse map, f^i = sqrt(1 - |v|^2/c^2) F^i.
Vec3 relativistic_force_to_newtonian(const Vec4& big_f, const Vec3& v, double c);

//! Instantaneous energy E = m c^2 / sqrt(1 - |v|^2/c^2).
double energy(double m, const Vec3& v, double c);

namespace detail {

//! Shared phase-space stepper: dx/ds = u, du/ds = accel(x, u), with the
//! mass-shell quadratic form supplied by the caller (flat or effective
//! metric). Used by the flat, Lorentz-force, geodesic and streamline
//! integrators so they share step control and renormalization behavior.
using AccelOracle = std::function<Vec4(const Vec4&, const Vec4&)>;
using NormForm = std::function<double(const Vec4& x, const Vec4& u)>;
using StepCheck = std::function<void(const Vec4& x, const Vec4& u)>;

Worldline integrate_phase(const Vec4& x0, const Vec4& u0, const AccelOracle& accel,
                          const NormForm& uu, double ds, int n,
                          const IntegratorOptions& opts,
                          const StepCheck& per_step_check = nullptr);

}  // namespace detail

}  // namespace relmech
