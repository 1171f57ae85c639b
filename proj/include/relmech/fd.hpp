#pragma once

// Second-order central differences over effect-free field oracles. Every
// derivative of an oracle in this library goes through these helpers so the
// truncation order is uniform.

#include "relmech/vec.hpp"

namespace relmech {

namespace detail {
inline Vec4 shifted(const Vec4& x, int axis, double d) {
  Vec4 y = x;
  y[axis] += d;
  return y;
}
inline Vec3 shifted(const Vec3& x, int axis, double d) {
  Vec3 y = x;
  y[axis] += d;
  return y;
}
}  // namespace detail

//! d f / d x^axis at x.
template <class F, class Point>
double deriv1(const F& f, const Point& x, int axis, double h) {
  return (f(detail::shifted(x, axis, h)) - f(detail::shifted(x, axis, -h))) / (2.0 * h);
}

//! d^2 f / d(x^axis)^2 at x.
template <class F, class Point>
double deriv2(const F& f, const Point& x, int axis, double h) {
  return (f(detail::shifted(x, axis, h)) - 2.0 * f(x) + f(detail::shifted(x, axis, -h))) /
         (h * h);
}

//! Spatial Laplacian of a scalar oracle.
template <class F>
double laplacian3(const F& f, const Vec3& x, double h) {
  return deriv2(f, x, 0, h) + deriv2(f, x, 1, h) + deriv2(f, x, 2, h);
}

//! Gradient of a scalar oracle on R^3.
template <class F>
Vec3 gradient3(const F& f, const Vec3& x, double h) {
  return {deriv1(f, x, 0, h), deriv1(f, x, 1, h), deriv1(f, x, 2, h)};
}

}  // namespace relmech
