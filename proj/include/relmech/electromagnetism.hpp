#pragma once

// Faraday-tensor machinery in Gaussian units: Maxwell residual evaluation,
// the electromagnetic stress-energy tensor with its divergence identity,
// Lorentz-force trajectories and four-potential/gauge operations. Field
// indices are raised and lowered with the flat metric throughout.

#include <array>
#include <functional>
#include <utility>

#include "relmech/minkowski.hpp"
#include "relmech/vec.hpp"
#include "relmech/worldline.hpp"

namespace relmech::em {

//! Antisymmetric field tensor stored as its six independent entries.
//! Block layout: F_12 = B3, F_13 = -B2, F_23 = B1, F_i4 = E_i.
class FaradayTensor {
 public:
  FaradayTensor() = default;
  FaradayTensor(const Vec3& e, const Vec3& b) : e_(e), b_(b) {}

  const Vec3& electric() const { return e_; }
  const Vec3& magnetic() const { return b_; }

  //! F_{mu nu}
  double dd(int mu, int nu) const;
  //! F^{mu nu}
  double uu(int mu, int nu) const { return sign(mu) * sign(nu) * dd(mu, nu); }
  //! F^mu_nu
  double ud(int mu, int nu) const { return sign(mu) * dd(mu, nu); }
  //! F_mu^nu
  double du(int mu, int nu) const { return sign(nu) * dd(mu, nu); }

  //! F_{mu nu} F^{mu nu} = 2(|B|^2 - |E|^2).
  double invariant() const;

  FaradayTensor operator+(const FaradayTensor& o) const {
    return {e_ + o.e_, b_ + o.b_};
  }
  FaradayTensor operator*(double a) const { return {e_ * a, b_ * a}; }

 private:
  static double sign(int mu) { return mu == 3 ? -1.0 : 1.0; }
  Vec3 e_{};
  Vec3 b_{};
};

inline FaradayTensor assemble_faraday(const Vec3& e, const Vec3& b) { return {e, b}; }
inline std::pair<Vec3, Vec3> disassemble_faraday(const FaradayTensor& f) {
  return {f.electric(), f.magnetic()};
}

//! J^i = current density, J^4 = c * charge density.
struct ChargeCurrent {
  Vec4 j;
};

using FaradayField = std::function<FaradayTensor(const Vec4&)>;
using CurrentField = std::function<Vec4(const Vec4&)>;

struct MaxwellResiduals {
  Vec4 inhomogeneous;              // dF^{mu nu}/dx^nu - (4 pi / c) J^mu
  std::array<double, 4> cyclic;    // one entry per independent index triple
  double charge_conservation;      // dJ^mu/dx^mu
};

//! Central-difference residuals of the covariant Maxwell system for a pair
//! of field/current oracles.
MaxwellResiduals maxwell_residuals(const FaradayField& f, const CurrentField& j,
                                   const Vec4& x, double h, double c);

//! Symmetric stress-energy tensor of the electromagnetic field with the
//! block accessors: energy density u = M^44, momentum-density row M^i4 and
//! spatial stress -M^ij.
class EMStressEnergy {
 public:
  explicit EMStressEnergy(const Mat4& m) : m_(m) {}

  const Mat4& tensor() const { return m_; }
  double energy_density() const { return m_(3, 3); }
  Vec3 poynting() const { return {m_(0, 3), m_(1, 3), m_(2, 3)}; }
  double maxwell_stress(int i, int j) const { return -m_(i, j); }
  //! d_{ab} M^{ab}; identically zero for any field up to rounding.
  double trace() const;

 private:
  Mat4 m_;
};

EMStressEnergy em_stress_energy(const FaradayTensor& f);

//! dM_alpha^beta / dx^beta - (1/c) F^lambda_alpha J_lambda, by central
//! differences of the field oracle. Vanishes at O(h^2) for oracles that
//! satisfy the Maxwell system. The homogeneous cyclic residual is evaluated
//! alongside; pass cyclic_check to retrieve it.
Vec4 divergence_identity_residual(const FaradayField& f, const CurrentField& j,
                                  const Vec4& x, double h, double c,
                                  double* cyclic_check = nullptr);

//! Lorentz-force trajectory m d2X/ds2 = (e/c) F^a_l dX^l/ds. The force is
//! orthogonal to u by antisymmetry, so normalization drift is integrator-only.
Worldline integrate_lorentz(const ParticleState& initial, const FaradayField& f,
                            double ds, int n, const IntegratorOptions& opts = {});

//! Covariant four-potential oracle A_mu(x), class C^3 assumed.
using FourPotential = std::function<CoVec4(const Vec4&)>;
using GaugeFunction = std::function<double(const Vec4&)>;

//! F_{mu nu} = d A_nu / dx^mu - d A_mu / dx^nu by central differences.
FaradayTensor faraday_from_potential(const FourPotential& a, const Vec4& x, double h);

//! A'_mu = A_mu - d Lambda / dx^mu, the gradient taken by central
//! differences with step h. Leaves the field tensor unchanged.
FourPotential gauge_transform(const FourPotential& a, const GaugeFunction& lambda,
                              double h);

//! dA^mu/dx^mu; zero in the Lorenz gauge.
double lorenz_gauge_residual(const FourPotential& a, const Vec4& x, double h);

}  // namespace relmech::em
