#pragma once

// Linearized gravitational potentials, the trace-reversed effective metric,
// Christoffel symbols (numeric and closed-form static), the Newtonian
// identification and orthonormal-projected physical components.
//
// The theory is valid only in the weak-field regime; every evaluation is
// gated on max|phi| < 0.5 respectively 2|W|/c^2 < 1 and raises
// WeakFieldViolated outside it.

#include <array>
#include <functional>
#include <memory>

#include "relmech/errors.hpp"
#include "relmech/vec.hpp"

namespace relmech::gravity {

//! Connection coefficients at one event, symmetric in the lower pair.
struct Christoffel {
  std::array<double, 64> v{};

  double& operator()(int a, int b, int c) {
    return v[static_cast<std::size_t>(16 * a + 4 * b + c)];
  }
  double operator()(int a, int b, int c) const {
    return v[static_cast<std::size_t>(16 * a + 4 * b + c)];
  }
};

//! Symmetric dimensionless potential oracle phi_{mu nu}(x).
struct GravPotential {
  std::function<Mat4(const Vec4&)> phi;
  double gate = 0.5;  // weak-field bound on max |phi_{mu nu}|
};

//! Static scalar potential W(x) <= 0 with an analytic gradient.
class NewtonianPotential {
 public:
  NewtonianPotential();
  NewtonianPotential(std::function<double(const Vec3&)> w,
                     std::function<Vec3(const Vec3&)> grad);

  double operator()(const Vec3& x) const { return w_(x); }
  Vec3 gradient(const Vec3& x) const { return grad_(x); }

  // Catalogue entries addressable from scenario configs.
  static NewtonianPotential point_mass(double gm);
  static NewtonianPotential uniform(const Vec3& gravity);  // W = -g . x
  static NewtonianPotential zero();

 private:
  std::function<double(const Vec3&)> w_;
  std::function<Vec3(const Vec3&)> grad_;
};

//! phi - (1/2) d tr(phi); applying it twice returns phi.
Mat4 trace_reverse(const Mat4& phi);

//! Effective metric g(x) with inverse, either flat, built pointwise from a
//! potential oracle, or the closed static form of a Newtonian potential.
class EffectiveMetric {
 public:
  enum class Provenance { Flat, FromPhi, FromStaticW };

  static EffectiveMetric flat(double c = kSpeedOfLight);
  static EffectiveMetric from_phi(GravPotential phi, double c = kSpeedOfLight);
  static EffectiveMetric from_static_w(NewtonianPotential w, double c = kSpeedOfLight);

  Mat4 metric(const Vec4& x) const;
  Mat4 inverse(const Vec4& x) const;

  //! Closed-form symbols for the static provenance, numeric assembly from
  //! metric derivatives otherwise.
  Christoffel christoffel(const Vec4& x, double h) const;

  Provenance provenance() const { return provenance_; }
  double light_speed() const { return c_; }
  //! Only meaningful for the FromStaticW provenance.
  const NewtonianPotential& potential() const { return w_; }

 private:
  EffectiveMetric() = default;
  Provenance provenance_ = Provenance::Flat;
  double c_ = kSpeedOfLight;
  GravPotential phi_;
  NewtonianPotential w_;
};

//! g_{mu nu} = d_{mu nu} + phi_{mu nu} - (1/2) d_{mu nu} tr(phi), inverse by
//! 4x4 solve. Throws WeakFieldViolated / SingularMetric.
inline EffectiveMetric metric_from_phi(GravPotential phi, double c = kSpeedOfLight) {
  return EffectiveMetric::from_phi(std::move(phi), c);
}

//! Static block metric g_ij = (1 - 2W/c^2) delta_ij, g_44 = -(1 + 2W/c^2),
//! with the closed-form inverse.
inline EffectiveMetric static_metric_from_w(NewtonianPotential w,
                                            double c = kSpeedOfLight) {
  return EffectiveMetric::from_static_w(std::move(w), c);
}

//! Central-difference assembly of the symbols from metric first derivatives.
Christoffel christoffel_numeric(const EffectiveMetric& g, const Vec4& x, double h);

//! The three nonvanishing static families: spatial {i;jk}, mixed
//! {4;i4} = c^-2 dW/dx^i and {i;44}; every other component is zero.
Christoffel christoffel_static_closed_form(const NewtonianPotential& w, const Vec3& x,
                                           double c);

//! Orthonormal-frame projection for the static metric:
//! Tbar^i = sqrt(1 + 2|W|/c^2) T^i, Tbar^4 = sqrt(1 - 2|W|/c^2) T^4.
Vec4 physical_components(const Vec4& t, const NewtonianPotential& w, const Vec3& x,
                         double c);

//! Central-difference Laplacian of W; zero in vacuum for harmonic potentials.
double laplace_residual(const NewtonianPotential& w, const Vec3& x, double h);

//! Four-velocity with spatial coordinate velocity v, scaled so that
//! g_{mu nu} U^mu U^nu = -c^2. Throws NotTimelike for superluminal data.
Vec4 g_normalized_four_velocity(const EffectiveMetric& g, const Vec4& x, const Vec3& v,
                                double c);

}  // namespace relmech::gravity
