#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace relmech {

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s

//! Spatial 3-vector over a Cartesian basis.
struct Vec3 {
  std::array<double, 3> c{};

  Vec3() = default;
  Vec3(double x, double y, double z) : c{x, y, z} {}

  double& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
  double operator[](int i) const { return c[static_cast<std::size_t>(i)]; }

  Vec3 operator+(const Vec3& o) const { return {c[0] + o.c[0], c[1] + o.c[1], c[2] + o.c[2]}; }
  Vec3 operator-(const Vec3& o) const { return {c[0] - o.c[0], c[1] - o.c[1], c[2] - o.c[2]}; }
  Vec3 operator-() const { return {-c[0], -c[1], -c[2]}; }
  Vec3 operator*(double a) const { return {a * c[0], a * c[1], a * c[2]}; }
  friend Vec3 operator*(double a, const Vec3& v) { return v * a; }
};

inline double dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

//! Contravariant spacetime vector; component 3 is the time leg x4 = c*t.
struct Vec4 {
  std::array<double, 4> c{};

  Vec4() = default;
  Vec4(double x1, double x2, double x3, double x4) : c{x1, x2, x3, x4} {}
  Vec4(const Vec3& spatial, double time) : c{spatial[0], spatial[1], spatial[2], time} {}

  double& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
  double operator[](int i) const { return c[static_cast<std::size_t>(i)]; }

  Vec3 spatial() const { return {c[0], c[1], c[2]}; }

  Vec4 operator+(const Vec4& o) const {
    return {c[0] + o.c[0], c[1] + o.c[1], c[2] + o.c[2], c[3] + o.c[3]};
  }
  Vec4 operator-(const Vec4& o) const {
    return {c[0] - o.c[0], c[1] - o.c[1], c[2] - o.c[2], c[3] - o.c[3]};
  }
  Vec4 operator-() const { return {-c[0], -c[1], -c[2], -c[3]}; }
  Vec4 operator*(double a) const { return {a * c[0], a * c[1], a * c[2], a * c[3]}; }
  friend Vec4 operator*(double a, const Vec4& v) { return v * a; }
};

//! Covariant spacetime vector (index lowered with the flat metric).
struct CoVec4 {
  std::array<double, 4> c{};

  CoVec4() = default;
  CoVec4(double x1, double x2, double x3, double x4) : c{x1, x2, x3, x4} {}

  double& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
  double operator[](int i) const { return c[static_cast<std::size_t>(i)]; }
};

//! Euclidean magnitude of the components, used for scale-relative tolerances.
inline double euclid(const Vec4& v) {
  return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + v[3] * v[3]);
}

struct Mat3 {
  std::array<double, 9> m{};

  double& operator()(int i, int j) { return m[static_cast<std::size_t>(3 * i + j)]; }
  double operator()(int i, int j) const { return m[static_cast<std::size_t>(3 * i + j)]; }

  static Mat3 identity() {
    Mat3 r;
    r(0, 0) = r(1, 1) = r(2, 2) = 1.0;
    return r;
  }

  Vec3 operator*(const Vec3& v) const {
    Vec3 r;
    for (int i = 0; i < 3; ++i)
      r[i] = (*this)(i, 0) * v[0] + (*this)(i, 1) * v[1] + (*this)(i, 2) * v[2];
    return r;
  }

  Mat3 operator*(const Mat3& o) const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        double s = 0.0;
        for (int k = 0; k < 3; ++k) s += (*this)(i, k) * o(k, j);
        r(i, j) = s;
      }
    return r;
  }

  double det() const {
    return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
           m[2] * (m[3] * m[7] - m[4] * m[6]);
  }
};

struct Mat4 {
  std::array<double, 16> m{};

  double& operator()(int i, int j) { return m[static_cast<std::size_t>(4 * i + j)]; }
  double operator()(int i, int j) const { return m[static_cast<std::size_t>(4 * i + j)]; }

  static Mat4 identity() {
    Mat4 r;
    r(0, 0) = r(1, 1) = r(2, 2) = r(3, 3) = 1.0;
    return r;
  }

  Mat4 transpose() const {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) r(i, j) = (*this)(j, i);
    return r;
  }

  Mat4 operator*(const Mat4& o) const {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        double s = 0.0;
        for (int k = 0; k < 4; ++k) s += (*this)(i, k) * o(k, j);
        r(i, j) = s;
      }
    return r;
  }

  Vec4 operator*(const Vec4& v) const {
    Vec4 r;
    for (int i = 0; i < 4; ++i) {
      double s = 0.0;
      for (int k = 0; k < 4; ++k) s += (*this)(i, k) * v[k];
      r[i] = s;
    }
    return r;
  }

  Mat4 operator+(const Mat4& o) const {
    Mat4 r;
    for (std::size_t i = 0; i < 16; ++i) r.m[i] = m[i] + o.m[i];
    return r;
  }

  Mat4 operator-(const Mat4& o) const {
    Mat4 r;
    for (std::size_t i = 0; i < 16; ++i) r.m[i] = m[i] - o.m[i];
    return r;
  }

  Mat4 operator*(double a) const {
    Mat4 r;
    for (std::size_t i = 0; i < 16; ++i) r.m[i] = a * m[i];
    return r;
  }

  double max_abs() const {
    double r = 0.0;
    for (double x : m) r = std::max(r, std::abs(x));
    return r;
  }
};

//! Gauss-Jordan inverse with partial pivoting. Returns false on a singular pivot.
bool invert(const Mat4& a, Mat4& out, double* det = nullptr);

double det4(const Mat4& a);

//! Totally antisymmetric oriented symbol on three indices, eps(0,1,2) = +1.
inline int epsilon3(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  // even permutations of (0,1,2)
  if ((i == 0 && j == 1 && k == 2) || (i == 1 && j == 2 && k == 0) ||
      (i == 2 && j == 0 && k == 1))
    return 1;
  return -1;
}

inline Vec3 cross(const Vec3& v, const Vec3& w) {
  Vec3 r;
  for (int i = 0; i < 3; ++i) {
    double s = 0.0;
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) s += epsilon3(i, j, k) * v[j] * w[k];
    r[i] = s;
  }
  return r;
}

}  // namespace relmech
