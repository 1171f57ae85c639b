#pragma once

// Spatial curvilinear charts with induced metrics, Christoffel symbols,
// covariant derivatives, orthonormal triads with Ricci rotation coefficients,
// and the orthogonal-coordinate differential operators. Charts bend only the
// spatial legs; the time leg is carried through untouched, so every symbol
// with a time index vanishes and the time covariant derivative reduces to a
// plain partial.

#include <array>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include "relmech/errors.hpp"
#include "relmech/vec.hpp"

namespace relmech::frames {

//! Invertible spatial coordinate chart with Jacobians of the inverse map
//! (analytic for the built-ins, central differences for user charts).
class Chart {
 public:
  using Map = std::function<Vec3(const Vec3&)>;
  using Jacobian = std::function<Mat3(const Vec3&)>;  // d X^k / d xhat^i in (k,i)

  static Chart cartesian();
  static Chart spherical();    // (r, theta, phi)
  static Chart cylindrical();  // (rho, phi, z)
  static Chart user(Map to_curvilinear, Map to_cartesian, Jacobian jac = nullptr,
                    double fd_step = 1e-6);

  Vec3 to_curvilinear(const Vec3& cartesian) const { return fwd_(cartesian); }
  Vec3 to_cartesian(const Vec3& curvilinear) const { return inv_(curvilinear); }

  //! Columns are d X / d xhat^i; throws SingularJacobian on a degenerate point.
  Mat3 jacobian(const Vec3& curvilinear) const;

 private:
  Map fwd_, inv_;
  Jacobian jac_;
  double fd_step_ = 1e-6;
};

//! ghat_ij = delta_kl dX^k/dxhat^i dX^l/dxhat^j; the time block stays
//! (0, -1) and is not stored.
Mat3 induced_metric(const Chart& chart, const Vec3& xhat);

//! Spatial connection coefficients, 27 entries symmetric in the lower pair.
struct Christoffel3 {
  std::array<double, 27> v{};
  double& operator()(int a, int b, int c) {
    return v[static_cast<std::size_t>(9 * a + 3 * b + c)];
  }
  double operator()(int a, int b, int c) const {
    return v[static_cast<std::size_t>(9 * a + 3 * b + c)];
  }
};

//! Symbols of the induced metric from central differences of step h. All
//! components with a time index are identically zero and not represented.
Christoffel3 curvilinear_christoffel(const Chart& chart, const Vec3& xhat, double h);

//! Dense spatial tensor of contravariant order r and covariant order s.
class Tensor3 {
 public:
  Tensor3(int contra_order, int cov_order);

  int contra_order() const { return r_; }
  int cov_order() const { return s_; }
  int order() const { return r_ + s_; }

  double& at(std::span<const int> idx);
  double at(std::span<const int> idx) const;
  double& at(std::initializer_list<int> idx) { return at(std::span<const int>(idx)); }
  double at(std::initializer_list<int> idx) const { return at(std::span<const int>(idx)); }

  std::span<double> components() { return comp_; }
  std::span<const double> components() const { return comp_; }

 private:
  int r_, s_;
  std::vector<double> comp_;
};

using TensorField3 = std::function<Tensor3(const Vec3&)>;

//! One extra covariant slot (the derivative index comes last): one +Gamma
//! term per contravariant slot, one -Gamma per covariant slot.
Tensor3 covariant_derivative(const Chart& chart, const TensorField3& t, const Vec3& xhat,
                             double h);

//! Orthonormal frame legs lambda^i_A with inverse mu^A_i. The orthonormality
//! condition ghat_ij lambda^i_A lambda^j_B = delta_AB is checked where used.
struct Triad {
  std::function<Mat3(const Vec3&)> legs;  // (i, A) -> lambda^i_A
};

//! gamma_ABC = ghat_jl (nabla_k lambda^l_A) lambda^j_B lambda^k_C,
//! antisymmetric in the first pair. Throws TriadNotOrthonormal when the
//! triad fails its defining condition at xhat.
std::array<double, 27> ricci_rotation(const Chart& chart, const Triad& triad,
                                      const Vec3& xhat, double h);

//! h1, h2, h3 oracles of an orthogonal chart (ghat = diag(h1^2, h2^2, h3^2)).
struct ScaleFactors {
  std::function<double(const Vec3&)> h1, h2, h3;

  static ScaleFactors spherical();
  static ScaleFactors cylindrical();
  static ScaleFactors cartesian();

  double at(int i, const Vec3& xhat) const;
  //! Triad aligned with the coordinate lines, lambda^i_A = delta^i_A / h_i.
  Triad triad() const;
};

using ScalarField3C = std::function<double(const Vec3&)>;
using VectorField3C = std::function<Vec3(const Vec3&)>;

//! The four orthogonal-coordinate closed forms. Vector arguments and results
//! are PHYSICAL (orthonormal-frame) components; the coordinate components
//! differ by scale factors and are converted internally.
class OrthogonalOperators {
 public:
  explicit OrthogonalOperators(ScaleFactors scale) : s_(std::move(scale)) {}

  //! (1/h_A) d phi / d xhat^A per leg.
  Vec3 grad_phys(const ScalarField3C& phi, const Vec3& xhat, double h) const;
  //! (h1 h2 h3)^-1 d_i [ h1 h2 h3 v^i ] with v^i = vphys_i / h_i.
  double divergence(const VectorField3C& v_phys, const Vec3& xhat, double h) const;
  //! Physical curl components from the coordinate form
  //! eps^ijk d_j A_k / (h1 h2 h3), A_k = h_k Aphys_k.
  Vec3 curl_phys(const VectorField3C& v_phys, const Vec3& xhat, double h) const;
  //! (h1 h2 h3)^-1 d_a [ (h1 h2 h3 / h_a^2) d_a phi ].
  double laplacian(const ScalarField3C& phi, const Vec3& xhat, double h) const;

 private:
  double factor(int i, const Vec3& xhat) const;
  ScaleFactors s_;
};

inline OrthogonalOperators orthogonal_operators(ScaleFactors scale) {
  return OrthogonalOperators(std::move(scale));
}

}  // namespace relmech::frames
