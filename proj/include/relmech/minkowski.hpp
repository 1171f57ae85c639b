#pragma once

// Flat-spacetime tensor algebra: the metric diag(+1,+1,+1,-1), index
// gymnastics, Lorentz transformations, the general tensor transformation law
// and the wave operator. Everything here is a pure function over immutable
// values; oracles passed in must be effect-free and re-entrant.

#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include "relmech/errors.hpp"
#include "relmech/vec.hpp"

namespace relmech {

//! Tolerance on |L^T D L - D| accepted for a Lorentz matrix.
inline constexpr double kLorentzTol = 1e-12;

//! Flat metric component d_{mu nu} = d^{mu nu} = diag(+1,+1,+1,-1).
inline constexpr double minkowski(int mu, int nu) {
  if (mu != nu) return 0.0;
  return mu == 3 ? -1.0 : 1.0;
}

inline Mat4 minkowski_matrix() {
  Mat4 d;
  d(0, 0) = d(1, 1) = d(2, 2) = 1.0;
  d(3, 3) = -1.0;
  return d;
}

//! Index lowering: u_i = u^i, u_4 = -u^4.
CoVec4 lower(const Vec4& v);
//! Index raising, the exact inverse of lower().
Vec4 raise(const CoVec4& v);

//! Minkowski inner product of two contravariant vectors.
double inner4(const Vec4& a, const Vec4& b);

enum class CausalClass { Timelike, Spacelike, Null };

//! Sign classification of inner4(v,v) with a scale-relative zero band.
//! The default band is 1e-12 * max(1, |v|^2) with |v| the Euclidean magnitude.
CausalClass classify(const Vec4& v, double tau_null = -1.0);

const char* to_string(CausalClass c);

//! An element of the inhomogeneous Lorentz group: x -> offset + L x.
class LorentzTransform {
 public:
  LorentzTransform() : l_(Mat4::identity()) {}

  static LorentzTransform identity() { return LorentzTransform(); }

  //! Boost for a general subluminal velocity. The axis-aligned matrix is
  //! conjugated with the spatial rotation taking the velocity to axis 1.
  //! Throws SpeedNotSubluminal for |v| >= c.
  static LorentzTransform boost(const Vec3& velocity, double c);

  //! Embeds a spatial rotation (time leg untouched).
  static LorentzTransform spatial_rotation(const Mat3& r);

  //! Accepts a raw matrix only if it satisfies the group condition within
  //! kLorentzTol; throws NotLorentz otherwise.
  static LorentzTransform from_matrix(const Mat4& l, const Vec4& offset = Vec4{});

  const Mat4& matrix() const { return l_; }
  const Vec4& offset() const { return offset_; }

  //! max |L^T D L - D| over all components.
  double verify() const;

  //! Transforms an event (affine: offset applies).
  Vec4 apply(const Vec4& x) const { return offset_ + l_ * x; }
  //! Transforms a vector (linear part only).
  Vec4 apply_vector(const Vec4& v) const { return l_ * v; }

  LorentzTransform inverse() const;

  friend LorentzTransform compose(const LorentzTransform& first_applied_last,
                                  const LorentzTransform& applied_first);

 private:
  Mat4 l_;
  Vec4 offset_{};
};

//! Composition: (compose(L1,L2))(x) = L1(L2(x)).
LorentzTransform compose(const LorentzTransform& l1, const LorentzTransform& l2);

//! Dense tensor of contravariant order r and covariant order s, r+s <= 4.
class GeneralTensor {
 public:
  GeneralTensor(int contra_order, int cov_order);

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
  int r_;
  int s_;
  std::vector<double> comp_;
};

//! Transformation law: one factor of L per contravariant slot and one factor
//! of L^{-1} per covariant slot (a sum of 4^(r+s) terms per component).
GeneralTensor transform_tensor(const GeneralTensor& t, const LorentzTransform& l);

using ScalarField4 = std::function<double(const Vec4&)>;
using Vector3Field = std::function<Vec3(const Vec3&)>;

//! Cross product written through the oriented epsilon symbol.
Vec3 epsilon_cross(const Vec3& v, const Vec3& w);

//! Conventional curl of a 3-vector oracle from central differences. The
//! oriented-symbol contraction eps_ijk dB^j/dx^k equals MINUS this value;
//! callers that need that contraction can negate.
Vec3 epsilon_curl(const Vector3Field& b, const Vec3& x, double h);

//! Wave operator d^{ab} d2 W / dx^a dx^b = laplacian - d2/d(x4)^2, with
//! x4 = c t so no explicit light-speed factor appears.
double dalembertian(const ScalarField4& w, const Vec4& x, double h);

}  // namespace relmech
