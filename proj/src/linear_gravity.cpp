#include "relmech/linear_gravity.hpp"

#include <cmath>

#include "relmech/fd.hpp"
#include "relmech/minkowski.hpp"

namespace relmech::gravity {

NewtonianPotential::NewtonianPotential()
    : w_([](const Vec3&) { return 0.0; }), grad_([](const Vec3&) { return Vec3{}; }) {}

NewtonianPotential::NewtonianPotential(std::function<double(const Vec3&)> w,
                                       std::function<Vec3(const Vec3&)> grad)
    : w_(std::move(w)), grad_(std::move(grad)) {}

NewtonianPotential NewtonianPotential::point_mass(double gm) {
  return NewtonianPotential(
      [gm](const Vec3& x) { return -gm / norm(x); },
      [gm](const Vec3& x) {
        const double r = norm(x);
        return x * (gm / (r * r * r));
      });
}

NewtonianPotential NewtonianPotential::uniform(const Vec3& gravity) {
  return NewtonianPotential([gravity](const Vec3& x) { return -dot(gravity, x); },
                            [gravity](const Vec3&) { return -gravity; });
}

NewtonianPotential NewtonianPotential::zero() { return NewtonianPotential(); }

Mat4 trace_reverse(const Mat4& phi) {
  double tr = 0.0;
  for (int mu = 0; mu < 4; ++mu) tr += minkowski(mu, mu) * phi(mu, mu);
  Mat4 out = phi;
  for (int mu = 0; mu < 4; ++mu) out(mu, mu) -= 0.5 * minkowski(mu, mu) * tr;
  return out;
}

EffectiveMetric EffectiveMetric::flat(double c) {
  EffectiveMetric g;
  g.provenance_ = Provenance::Flat;
  g.c_ = c;
  return g;
}

EffectiveMetric EffectiveMetric::from_phi(GravPotential phi, double c) {
  EffectiveMetric g;
  g.provenance_ = Provenance::FromPhi;
  g.c_ = c;
  g.phi_ = std::move(phi);
  return g;
}

EffectiveMetric EffectiveMetric::from_static_w(NewtonianPotential w, double c) {
  EffectiveMetric g;
  g.provenance_ = Provenance::FromStaticW;
  g.c_ = c;
  g.w_ = std::move(w);
  return g;
}

namespace {

void check_static_gate(double w, double c) {
  if (!(2.0 * std::abs(w) / (c * c) < 1.0))
    throw WeakFieldViolated("2|W|/c^2 = " + std::to_string(2.0 * std::abs(w) / (c * c)) +
                            " leaves the weak-field domain");
}

}  // namespace

Mat4 EffectiveMetric::metric(const Vec4& x) const {
  switch (provenance_) {
    case Provenance::Flat:
      return minkowski_matrix();
    case Provenance::FromStaticW: {
      const double w = w_(x.spatial());
      check_static_gate(w, c_);
      const double a = 1.0 - 2.0 * w / (c_ * c_);
      Mat4 g;
      g(0, 0) = g(1, 1) = g(2, 2) = a;
      g(3, 3) = -(1.0 + 2.0 * w / (c_ * c_));
      return g;
    }
    case Provenance::FromPhi:
    default: {
      const Mat4 p = phi_.phi(x);
      if (p.max_abs() >= phi_.gate)
        throw WeakFieldViolated("max|phi| = " + std::to_string(p.max_abs()) +
                                " exceeds the weak-field gate " +
                                std::to_string(phi_.gate));
      return minkowski_matrix() + trace_reverse(p);
    }
  }
}

Mat4 EffectiveMetric::inverse(const Vec4& x) const {
  switch (provenance_) {
    case Provenance::Flat:
      return minkowski_matrix();
    case Provenance::FromStaticW: {
      const double w = w_(x.spatial());
      check_static_gate(w, c_);
      const double a = 1.0 - 2.0 * w / (c_ * c_);
      Mat4 gi;
      gi(0, 0) = gi(1, 1) = gi(2, 2) = 1.0 / a;
      gi(3, 3) = -1.0 / (1.0 + 2.0 * w / (c_ * c_));
      return gi;
    }
    case Provenance::FromPhi:
    default: {
      const Mat4 g = metric(x);
      Mat4 gi;
      double det = 0.0;
      if (!invert(g, gi, &det) || std::abs(det) < 1e-12)
        throw SingularMetric("effective metric is singular (det = " +
                             std::to_string(det) + ")");
      if (det >= 0.0)
        throw SingularMetric("effective metric lost its Lorentzian signature");
      return gi;
    }
  }
}

Christoffel EffectiveMetric::christoffel(const Vec4& x, double h) const {
  if (provenance_ == Provenance::FromStaticW)
    return christoffel_static_closed_form(w_, x.spatial(), c_);
  if (provenance_ == Provenance::Flat) return Christoffel{};
  return christoffel_numeric(*this, x, h);
}

Christoffel christoffel_numeric(const EffectiveMetric& g, const Vec4& x, double h) {
  // dg[l](m,n) = d g_{mn} / dx^l
  std::array<Mat4, 4> dg;
  for (int l = 0; l < 4; ++l) {
    Vec4 xp = x, xm = x;
    xp[l] += h;
    xm[l] -= h;
    dg[static_cast<std::size_t>(l)] = (g.metric(xp) - g.metric(xm)) * (1.0 / (2.0 * h));
  }
  const Mat4 gi = g.inverse(x);
  Christoffel out;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = b; c < 4; ++c) {
        double s = 0.0;
        for (int l = 0; l < 4; ++l)
          s += gi(a, l) * (dg[static_cast<std::size_t>(b)](c, l) +
                           dg[static_cast<std::size_t>(c)](l, b) -
                           dg[static_cast<std::size_t>(l)](b, c));
        out(a, b, c) = 0.5 * s;
        out(a, c, b) = out(a, b, c);
      }
  return out;
}

Christoffel christoffel_static_closed_form(const NewtonianPotential& w, const Vec3& x,
                                           double c) {
  const double wx = w(x);
  check_static_gate(wx, c);
  const double inv_c2 = 1.0 / (c * c);
  const double f = 1.0 / (1.0 - 2.0 * wx * inv_c2);
  const Vec3 gw = w.gradient(x);

  Christoffel out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        const double v = (j == k ? gw[i] : 0.0) - (i == k ? gw[j] : 0.0) -
                         (i == j ? gw[k] : 0.0);
        out(i, j, k) = inv_c2 * f * v;
      }
  // the mixed family of the exact block metric carries 1/(1 + 2W/c^2);
  // dropping it (the linearized reading) breaks first-integral conservation
  // at O(c^-4) along integrated geodesics
  const double ft = 1.0 / (1.0 + 2.0 * wx * inv_c2);
  for (int i = 0; i < 3; ++i) {
    out(3, i, 3) = inv_c2 * ft * gw[i];
    out(3, 3, i) = out(3, i, 3);
    out(i, 3, 3) = inv_c2 * f * gw[i];
  }
  return out;
}

Vec4 physical_components(const Vec4& t, const NewtonianPotential& w, const Vec3& x,
                         double c) {
  const double absw = std::abs(w(x));
  check_static_gate(-absw, c);
  const double fs = std::sqrt(1.0 + 2.0 * absw / (c * c));
  const double ft = std::sqrt(1.0 - 2.0 * absw / (c * c));
  return {fs * t[0], fs * t[1], fs * t[2], ft * t[3]};
}

double laplace_residual(const NewtonianPotential& w, const Vec3& x, double h) {
  auto f = [&w](const Vec3& p) { return w(p); };
  return laplacian3(f, x, h);
}

Vec4 g_normalized_four_velocity(const EffectiveMetric& g, const Vec4& x, const Vec3& v,
                                double c) {
  const Mat4 gx = g.metric(x);
  const Vec4 dir{v[0], v[1], v[2], c};
  double q = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) q += gx(a, b) * dir[a] * dir[b];
  if (!(q < 0.0))
    throw NotTimelike("coordinate velocity is not within the local light cone");
  return dir * (c / std::sqrt(-q));
}

}  // namespace relmech::gravity
