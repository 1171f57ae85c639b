#include "relmech/minkowski.hpp"

#include <cmath>
#include <cstddef>

#include "relmech/fd.hpp"

namespace relmech {

CoVec4 lower(const Vec4& v) { return {v[0], v[1], v[2], -v[3]}; }

Vec4 raise(const CoVec4& v) { return {v[0], v[1], v[2], -v[3]}; }

double inner4(const Vec4& a, const Vec4& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] - a[3] * b[3];
}

CausalClass classify(const Vec4& v, double tau_null) {
  const double q = inner4(v, v);
  if (tau_null < 0.0) {
    const double scale = euclid(v);
    tau_null = 1e-12 * std::max(1.0, scale * scale);
  }
  if (std::abs(q) <= tau_null) return CausalClass::Null;
  return q < 0.0 ? CausalClass::Timelike : CausalClass::Spacelike;
}

const char* to_string(CausalClass c) {
  switch (c) {
    case CausalClass::Timelike: return "timelike";
    case CausalClass::Spacelike: return "spacelike";
    default: return "null";
  }
}

namespace {

// Axis-1 boost matrix for speed ratio beta.
Mat4 axis_boost(double beta) {
  const double gamma = 1.0 / std::sqrt(1.0 - beta * beta);
  Mat4 b = Mat4::identity();
  b(0, 0) = gamma;
  b(0, 3) = -gamma * beta;
  b(3, 0) = -gamma * beta;
  b(3, 3) = gamma;
  return b;
}

// Orthonormal right-handed basis whose first leg is n (|n| = 1).
Mat3 rotation_to_axis1(const Vec3& n) {
  // helper axis least aligned with n keeps the cross products well conditioned
  Vec3 helper{1.0, 0.0, 0.0};
  if (std::abs(n[1]) < std::abs(n[0])) helper = {0.0, 1.0, 0.0};
  if (std::abs(n[2]) < std::abs(n[0]) && std::abs(n[2]) < std::abs(n[1]))
    helper = {0.0, 0.0, 1.0};
  Vec3 e2 = cross(n, helper);
  e2 = e2 * (1.0 / norm(e2));
  Vec3 e3 = cross(n, e2);
  Mat3 r;
  for (int j = 0; j < 3; ++j) {
    r(0, j) = n[j];
    r(1, j) = e2[j];
    r(2, j) = e3[j];
  }
  return r;
}

Mat4 embed_rotation(const Mat3& r) {
  Mat4 out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out(i, j) = r(i, j);
  out(3, 3) = 1.0;
  return out;
}

}  // namespace

LorentzTransform LorentzTransform::boost(const Vec3& velocity, double c) {
  const double speed = norm(velocity);
  if (!(speed < c))
    throw SpeedNotSubluminal("boost speed " + std::to_string(speed) +
                             " must be strictly less than c");
  LorentzTransform out;
  if (speed == 0.0) return out;
  const Mat4 b = axis_boost(speed / c);
  const Mat4 r = embed_rotation(rotation_to_axis1(velocity * (1.0 / speed)));
  out.l_ = r.transpose() * b * r;
  return out;
}

LorentzTransform LorentzTransform::spatial_rotation(const Mat3& r) {
  LorentzTransform out;
  out.l_ = embed_rotation(r);
  return out;
}

LorentzTransform LorentzTransform::from_matrix(const Mat4& l, const Vec4& offset) {
  LorentzTransform out;
  out.l_ = l;
  out.offset_ = offset;
  const double residual = out.verify();
  if (residual > kLorentzTol)
    throw NotLorentz("matrix violates L^T D L = D by " + std::to_string(residual));
  return out;
}

double LorentzTransform::verify() const {
  const Mat4 d = minkowski_matrix();
  return (l_.transpose() * d * l_ - d).max_abs();
}

LorentzTransform LorentzTransform::inverse() const {
  // For group members, L^{-1} = D L^T D exactly.
  const Mat4 d = minkowski_matrix();
  LorentzTransform out;
  out.l_ = d * l_.transpose() * d;
  out.offset_ = -(out.l_ * offset_);
  return out;
}

LorentzTransform compose(const LorentzTransform& l1, const LorentzTransform& l2) {
  LorentzTransform out;
  out.l_ = l1.l_ * l2.l_;
  out.offset_ = l1.offset_ + l1.l_ * l2.offset_;
  return out;
}

GeneralTensor::GeneralTensor(int contra_order, int cov_order)
    : r_(contra_order), s_(cov_order) {
  if (r_ < 0 || s_ < 0 || r_ + s_ > 4)
    throw Error("tensor order out of range: contra+cov must be in [0,4]");
  std::size_t n = 1;
  for (int i = 0; i < r_ + s_; ++i) n *= 4;
  comp_.assign(n, 0.0);
}

namespace {
std::size_t flat_index(std::span<const int> idx) {
  std::size_t k = 0;
  for (int i : idx) k = 4 * k + static_cast<std::size_t>(i);
  return k;
}
}  // namespace

double& GeneralTensor::at(std::span<const int> idx) {
  return comp_[flat_index(idx)];
}

double GeneralTensor::at(std::span<const int> idx) const {
  return comp_[flat_index(idx)];
}

GeneralTensor transform_tensor(const GeneralTensor& t, const LorentzTransform& lt) {
  const int n = t.order();
  GeneralTensor out(t.contra_order(), t.cov_order());
  if (n == 0) {
    out.components()[0] = t.components()[0];
    return out;
  }
  const Mat4& l = lt.matrix();
  const Mat4 a = lt.inverse().matrix();
  const std::size_t total = t.components().size();
  std::array<int, 4> oi{}, si{};
  for (std::size_t io = 0; io < total; ++io) {
    std::size_t rem = io;
    for (int k = n - 1; k >= 0; --k) {
      oi[static_cast<std::size_t>(k)] = static_cast<int>(rem % 4);
      rem /= 4;
    }
    double sum = 0.0;
    for (std::size_t is = 0; is < total; ++is) {
      rem = is;
      for (int k = n - 1; k >= 0; --k) {
        si[static_cast<std::size_t>(k)] = static_cast<int>(rem % 4);
        rem /= 4;
      }
      double factor = 1.0;
      for (int k = 0; k < t.contra_order(); ++k)
        factor *= l(oi[static_cast<std::size_t>(k)], si[static_cast<std::size_t>(k)]);
      for (int k = t.contra_order(); k < n; ++k)
        factor *= a(si[static_cast<std::size_t>(k)], oi[static_cast<std::size_t>(k)]);
      if (factor != 0.0) sum += factor * t.components()[is];
    }
    out.components()[io] = sum;
  }
  return out;
}

Vec3 epsilon_cross(const Vec3& v, const Vec3& w) { return cross(v, w); }

Vec3 epsilon_curl(const Vector3Field& b, const Vec3& x, double h) {
  // eps_ijk dB^j/dx^k carries the opposite sign; this returns the curl proper.
  Vec3 r;
  for (int i = 0; i < 3; ++i) {
    double s = 0.0;
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        const int e = epsilon3(i, j, k);
        if (e == 0) continue;
        auto component = [&b, j](const Vec3& p) { return b(p)[j]; };
        s -= e * deriv1(component, x, k, h);
      }
    r[i] = s;
  }
  return r;
}

double dalembertian(const ScalarField4& w, const Vec4& x, double h) {
  double s = 0.0;
  for (int i = 0; i < 3; ++i) s += deriv2(w, x, i, h);
  s -= deriv2(w, x, 3, h);
  return s;
}

}  // namespace relmech
