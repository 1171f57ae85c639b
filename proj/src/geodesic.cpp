#include "relmech/geodesic.hpp"

#include <cmath>
#include <numbers>

namespace relmech::orbit {

namespace {

double quadratic_form(const Mat4& g, const Vec4& u) {
  double q = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) q += g(a, b) * u[a] * u[b];
  return q;
}

}  // namespace

Vec4 geodesic_acceleration(const gravity::EffectiveMetric& g, const Vec4& x,
                           const Vec4& u, double fd_step) {
  if (g.provenance() == gravity::EffectiveMetric::Provenance::FromStaticW) {
    const double c = g.light_speed();
    const double inv_c2 = 1.0 / (c * c);
    const gravity::NewtonianPotential& w = g.potential();
    const Vec3 xs = x.spatial();
    const double wx = w(xs);
    const double f = 1.0 / (1.0 - 2.0 * wx * inv_c2);
    const double ft = 1.0 / (1.0 + 2.0 * wx * inv_c2);
    const Vec3 gw = w.gradient(xs);
    const Vec3 us = u.spatial();
    const double gu = dot(gw, us);
    const double spatial2 = dot(us, us);
    const double time2 = u[3] * u[3];
    Vec4 a;
    for (int i = 0; i < 3; ++i)
      a[i] = -inv_c2 * f * (gw[i] * (spatial2 + time2) - 2.0 * us[i] * gu);
    a[3] = -2.0 * inv_c2 * ft * gu * u[3];
    return a;
  }
  const gravity::Christoffel gamma = g.christoffel(x, fd_step);
  Vec4 a;
  for (int al = 0; al < 4; ++al) {
    double s = 0.0;
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) s += gamma(al, b, c) * u[b] * u[c];
    a[al] = -s;
  }
  return a;
}

Worldline integrate_geodesic(const gravity::EffectiveMetric& g,
                             const ParticleState& initial, double ds, int n,
                             const IntegratorOptions& opts) {
  const double c = opts.c;
  const double norm0 = quadratic_form(g.metric(initial.x), initial.u) + c * c;
  if (std::abs(norm0) > kNormTol * c * c)
    throw NotNormalized("initial state violates g_{mu nu} U^mu U^nu = -c^2 by " +
                        std::to_string(norm0));
  auto accel = [&g, fd = opts.fd_step](const Vec4& x, const Vec4& u) {
    return geodesic_acceleration(g, x, u, fd);
  };
  auto uu = [&g](const Vec4& x, const Vec4& u) { return quadratic_form(g.metric(x), u); };
  return detail::integrate_phase(initial.x, initial.u, accel, uu, ds, n, opts);
}

FirstIntegrals static_first_integrals(const ParticleState& state,
                                      const gravity::NewtonianPotential& w, double c) {
  const Vec3 xs = state.x.spatial();
  const Vec3 us = state.u.spatial();
  const double r = norm(xs);
  if (std::abs(xs[2]) > 1e-9 * r || std::abs(us[2]) > 1e-9 * norm(us))
    throw NotEquatorial("state is outside the equatorial plane");
  const double wx = w(xs);
  FirstIntegrals out;
  out.energy = c * (1.0 + 2.0 * wx / (c * c)) * state.u[3];
  // u^phi = (x1 u2 - x2 u1) / r^2; h = r^2 (1 - 2W/c^2) u^phi
  out.angular_momentum = (1.0 - 2.0 * wx / (c * c)) * (xs[0] * us[1] - xs[1] * us[0]);
  return out;
}

double lagrangian(const Vec4& x, const Vec4& u, const gravity::NewtonianPotential& w,
                  double c) {
  const double absw = std::abs(w(x.spatial()));
  if (!(2.0 * absw / (c * c) < 1.0))
    throw WeakFieldViolated("2|W|/c^2 >= 1 in lagrangian");
  const Vec3 us = u.spatial();
  return 0.5 * (1.0 + 2.0 * absw / (c * c)) * dot(us, us) -
         0.5 * (1.0 - 2.0 * absw / (c * c)) * u[3] * u[3];
}

double orbit_equation_residual(double y, double yprime, const OrbitEquationParams& p) {
  const double a = 2.0 * p.gm / (p.c * p.c);
  const double lhs = ((1.0 - a * y) / (1.0 + a * y)) * (yprime * yprime + y * y) +
                     (p.c * p.c / (p.h * p.h)) * (1.0 - a * y);
  const double rhs = p.energy * p.energy / (p.h * p.h * p.c * p.c);
  return lhs - rhs;
}

double perihelion_shift_closed_form(double gm, double h, double c) {
  const double q = gm / (c * h);
  return 8.0 * std::numbers::pi * q * q;
}

PrecessionReport measure_precession(const Worldline& w) {
  const auto& smp = w.samples;
  if (smp.size() < 3) throw InsufficientOrbits("worldline too short to locate perihelia");

  // radius and continuously unwrapped azimuth per sample
  std::vector<double> r(smp.size()), phi(smp.size()), s(smp.size());
  double prev_raw = std::atan2(smp[0].x[1], smp[0].x[0]);
  double offset = 0.0;
  for (std::size_t i = 0; i < smp.size(); ++i) {
    r[i] = std::hypot(smp[i].x[0], smp[i].x[1]);
    s[i] = smp[i].s;
    const double raw = std::atan2(smp[i].x[1], smp[i].x[0]);
    double d = raw - prev_raw;
    if (d > std::numbers::pi) offset -= 2.0 * std::numbers::pi;
    if (d < -std::numbers::pi) offset += 2.0 * std::numbers::pi;
    phi[i] = raw + offset;
    prev_raw = raw;
  }

  // interior minima of r(s), refined by a 3-point parabola; dips at rounding
  // depth (e.g. on a circular orbit) do not count as perihelia
  std::vector<double> peri_phi;
  for (std::size_t i = 1; i + 1 < smp.size(); ++i) {
    if (!(r[i] < r[i - 1] && r[i] <= r[i + 1])) continue;
    if ((r[i - 1] - r[i]) + (r[i + 1] - r[i]) <= 64.0 * 2.220446049250313e-16 * r[i])
      continue;
    const double s0 = s[i - 1], s1 = s[i], s2 = s[i + 1];
    const double r0 = r[i - 1], r1 = r[i], r2 = r[i + 1];
    // vertex of the parabola through the three radius samples
    const double d01 = (r1 - r0) / (s1 - s0);
    const double d12 = (r2 - r1) / (s2 - s1);
    const double curv = (d12 - d01) / (s2 - s0);
    double s_star = s1;
    if (curv > 0.0) s_star = 0.5 * (s0 + s1) - 0.5 * d01 / curv;
    // clamp into the bracket; degenerate flat minima keep the middle node
    s_star = std::min(std::max(s_star, s0), s2);
    // azimuth at s_star from the quadratic through the same nodes
    const double l0 = (s_star - s1) * (s_star - s2) / ((s0 - s1) * (s0 - s2));
    const double l1 = (s_star - s0) * (s_star - s2) / ((s1 - s0) * (s1 - s2));
    const double l2 = (s_star - s0) * (s_star - s1) / ((s2 - s0) * (s2 - s1));
    peri_phi.push_back(l0 * phi[i - 1] + l1 * phi[i] + l2 * phi[i + 1]);
  }
  if (peri_phi.size() < 3)
    throw InsufficientOrbits("need at least 3 perihelion passages, found " +
                             std::to_string(peri_phi.size()));

  // successive perihelia are separated by 2 pi plus the secular advance, so
  // the least-squares slope of phi_k against k measures it without wrapping
  const std::size_t m = peri_phi.size();
  double kbar = 0.0, pbar = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    kbar += static_cast<double>(k);
    pbar += peri_phi[k];
  }
  kbar /= static_cast<double>(m);
  pbar /= static_cast<double>(m);
  double num = 0.0, den = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    const double dk = static_cast<double>(k) - kbar;
    num += dk * (peri_phi[k] - pbar);
    den += dk * dk;
  }
  const double slope = num / den;

  PrecessionReport out;
  out.revolutions = static_cast<int>(m);
  out.delta_per_rev = slope - 2.0 * std::numbers::pi;
  out.perihelion_angles.resize(m);
  double rms = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    out.perihelion_angles[k] =
        peri_phi[k] - 2.0 * std::numbers::pi * static_cast<double>(k + 1);
    const double resid = peri_phi[k] - (pbar + slope * (static_cast<double>(k) - kbar));
    rms += resid * resid;
  }
  out.fit_rms = std::sqrt(rms / static_cast<double>(m));
  return out;
}

double time_dilation_factor(const ParticleState& state,
                            const gravity::NewtonianPotential& w, double c) {
  const double absw = std::abs(w(state.x.spatial()));
  if (!(2.0 * absw / (c * c) < 1.0))
    throw WeakFieldViolated("2|W|/c^2 >= 1 in time_dilation_factor");
  const Vec3 v = coordinate_velocity_from_four_velocity(state.u, c);
  const double beta2 = dot(v, v) / (c * c);
  const double radicand =
      1.0 - 2.0 * absw / (c * c) - (1.0 + 2.0 * absw / (c * c)) * beta2;
  if (!(radicand > 0.0)) throw NotTimelike("time dilation radicand non-positive");
  return std::sqrt(radicand);
}

}  // namespace relmech::orbit
