#include "relmech/worldline.hpp"

#include <cmath>

namespace relmech {

namespace {

double gamma_factor(const Vec3& v, double c) {
  const double beta2 = dot(v, v) / (c * c);
  if (!(beta2 < 1.0))
    throw SpeedNotSubluminal("speed " + std::to_string(std::sqrt(dot(v, v))) +
                             " must be strictly less than c");
  return 1.0 / std::sqrt(1.0 - beta2);
}

}  // namespace

ProperTimeTable proper_time_table(const PathOracle& position, double u1, double u2,
                                  int n, double c, const PathOracle& derivative) {
  if (n < 1) throw Error("proper_time_table: need at least one subinterval");
  // near-optimal central-difference step for first derivatives in double
  const double du = (u2 - u1) * 6e-6;
  auto velocity = [&](double u) -> Vec4 {
    if (derivative) return derivative(u);
    return (position(u + du) - position(u - du)) * (1.0 / (2.0 * du));
  };
  auto integrand = [&](double u) -> double {
    const Vec4 xd = velocity(u);
    const double q = -inner4(xd, xd);
    if (!(q > 0.0))
      throw NotTimelike("path is not timelike at parameter u = " + std::to_string(u));
    return std::sqrt(q) / c;
  };

  ProperTimeTable table;
  table.u.reserve(static_cast<std::size_t>(n) + 1);
  table.s.reserve(static_cast<std::size_t>(n) + 1);
  table.u.push_back(u1);
  table.s.push_back(0.0);
  const double step = (u2 - u1) / n;
  double f_left = integrand(u1);
  double s = 0.0;
  for (int k = 0; k < n; ++k) {
    const double a = u1 + k * step;
    const double b = a + step;
    const double f_mid = integrand(a + 0.5 * step);
    const double f_right = integrand(b);
    s += (step / 6.0) * (f_left + 4.0 * f_mid + f_right);
    table.u.push_back(b);
    table.s.push_back(s);
    f_left = f_right;
  }
  return table;
}

Vec4 four_velocity_from_coordinate_velocity(const Vec3& v, double c) {
  const double g = gamma_factor(v, c);
  return {g * v[0], g * v[1], g * v[2], g * c};
}

Vec3 coordinate_velocity_from_four_velocity(const Vec4& u, double c) {
  if (!(u[3] > 0.0)) throw Error("four-velocity must be future-directed (U^4 > 0)");
  const double f = c / u[3];
  return {f * u[0], f * u[1], f * u[2]};
}

Vec4 newtonian_force_to_relativistic(const Vec3& f, const Vec3& v, double c) {
  const double g = gamma_factor(v, c);
  const Vec3 fi = f * g;
  return {fi[0], fi[1], fi[2], dot(fi, v) / c};
}

Vec3 relativistic_force_to_newtonian(const Vec4& big_f, const Vec3& v, double c) {
  const double g = gamma_factor(v, c);
  return big_f.spatial() * (1.0 / g);
}

double energy(double m, const Vec3& v, double c) {
  return gamma_factor(v, c) * m * c * c;
}

namespace detail {

namespace {

struct Phase {
  Vec4 x;
  Vec4 u;
};

struct PhaseDeriv {
  Vec4 dx;
  Vec4 du;
};

Phase axpy(const Phase& y, const PhaseDeriv& d, double a) {
  return {y.x + d.dx * a, y.u + d.du * a};
}

PhaseDeriv eval(const AccelOracle& accel, const Phase& y) {
  return {y.u, accel(y.x, y.u)};
}

void renormalize(Phase& y, const NormForm& uu, double c) {
  const double q = uu(y.x, y.u);
  if (!(q < 0.0)) throw NotTimelike("four-velocity left the timelike mass shell");
  y.u = y.u * std::sqrt(c * c / -q);
}

Phase rk4_step(const AccelOracle& accel, const Phase& y, double ds) {
  const PhaseDeriv k1 = eval(accel, y);
  const PhaseDeriv k2 = eval(accel, axpy(y, k1, 0.5 * ds));
  const PhaseDeriv k3 = eval(accel, axpy(y, k2, 0.5 * ds));
  const PhaseDeriv k4 = eval(accel, axpy(y, k3, ds));
  Phase out = y;
  for (int i = 0; i < 4; ++i) {
    out.x[i] += (ds / 6.0) * (k1.dx[i] + 2.0 * k2.dx[i] + 2.0 * k3.dx[i] + k4.dx[i]);
    out.u[i] += (ds / 6.0) * (k1.du[i] + 2.0 * k2.du[i] + 2.0 * k3.du[i] + k4.du[i]);
  }
  return out;
}

// Fehlberg 4(5) tableau.
constexpr double kB21 = 1.0 / 4.0;
constexpr double kB31 = 3.0 / 32.0, kB32 = 9.0 / 32.0;
constexpr double kB41 = 1932.0 / 2197.0, kB42 = -7200.0 / 2197.0, kB43 = 7296.0 / 2197.0;
constexpr double kB51 = 439.0 / 216.0, kB52 = -8.0, kB53 = 3680.0 / 513.0,
                 kB54 = -845.0 / 4104.0;
constexpr double kB61 = -8.0 / 27.0, kB62 = 2.0, kB63 = -3544.0 / 2565.0,
                 kB64 = 1859.0 / 4104.0, kB65 = -11.0 / 40.0;
constexpr double kC1 = 25.0 / 216.0, kC3 = 1408.0 / 2565.0, kC4 = 2197.0 / 4104.0,
                 kC5 = -1.0 / 5.0;
constexpr double kD1 = 16.0 / 135.0, kD3 = 6656.0 / 12825.0, kD4 = 28561.0 / 56430.0,
                 kD5 = -9.0 / 50.0, kD6 = 2.0 / 55.0;

Phase rkf45_step(const AccelOracle& accel, const Phase& y, double h, double& err_ratio,
                 double abs_tol, double rel_tol) {
  const PhaseDeriv k1 = eval(accel, y);
  const PhaseDeriv k2 = eval(accel, {y.x + k1.dx * (h * kB21), y.u + k1.du * (h * kB21)});
  const PhaseDeriv k3 = eval(accel, {y.x + k1.dx * (h * kB31) + k2.dx * (h * kB32),
                                     y.u + k1.du * (h * kB31) + k2.du * (h * kB32)});
  const PhaseDeriv k4 =
      eval(accel, {y.x + k1.dx * (h * kB41) + k2.dx * (h * kB42) + k3.dx * (h * kB43),
                   y.u + k1.du * (h * kB41) + k2.du * (h * kB42) + k3.du * (h * kB43)});
  const PhaseDeriv k5 = eval(accel, {y.x + k1.dx * (h * kB51) + k2.dx * (h * kB52) +
                                         k3.dx * (h * kB53) + k4.dx * (h * kB54),
                                     y.u + k1.du * (h * kB51) + k2.du * (h * kB52) +
                                         k3.du * (h * kB53) + k4.du * (h * kB54)});
  const PhaseDeriv k6 =
      eval(accel, {y.x + k1.dx * (h * kB61) + k2.dx * (h * kB62) + k3.dx * (h * kB63) +
                       k4.dx * (h * kB64) + k5.dx * (h * kB65),
                   y.u + k1.du * (h * kB61) + k2.du * (h * kB62) + k3.du * (h * kB63) +
                       k4.du * (h * kB64) + k5.du * (h * kB65)});

  Phase y4{y.x + (k1.dx * kC1 + k3.dx * kC3 + k4.dx * kC4 + k5.dx * kC5) * h,
           y.u + (k1.du * kC1 + k3.du * kC3 + k4.du * kC4 + k5.du * kC5) * h};
  Phase y5{y.x + (k1.dx * kD1 + k3.dx * kD3 + k4.dx * kD4 + k5.dx * kD5 + k6.dx * kD6) * h,
           y.u + (k1.du * kD1 + k3.du * kD3 + k4.du * kD4 + k5.du * kD5 + k6.du * kD6) * h};

  err_ratio = 0.0;
  for (int i = 0; i < 4; ++i) {
    const double ex = std::abs(y5.x[i] - y4.x[i]);
    const double eu = std::abs(y5.u[i] - y4.u[i]);
    err_ratio = std::max(err_ratio, ex / (abs_tol + rel_tol * std::abs(y5.x[i])));
    err_ratio = std::max(err_ratio, eu / (abs_tol + rel_tol * std::abs(y5.u[i])));
  }
  return y5;
}

}  // namespace

Worldline integrate_phase(const Vec4& x0, const Vec4& u0, const AccelOracle& accel,
                          const NormForm& uu, double ds, int n,
                          const IntegratorOptions& opts, const StepCheck& per_step_check) {
  if (!(ds > 0.0)) throw Error("integration step must be positive");
  const double c = opts.c;
  Worldline out;
  out.step = ds;
  out.method = opts.method == StepMethod::RK4 ? "rk4" : "rkf45";
  out.samples.reserve(static_cast<std::size_t>(n) + 1);

  Phase y{x0, u0};
  auto record = [&](double s) {
    out.samples.push_back({s, y.x[3] / c, y.x, y.u, uu(y.x, y.u) + c * c});
  };
  record(0.0);

  if (opts.method == StepMethod::RK4) {
    double s = 0.0;
    for (int k = 0; k < n; ++k) {
      if (per_step_check) per_step_check(y.x, y.u);
      y = rk4_step(accel, y, ds);
      s += ds;
      if (opts.renormalize) renormalize(y, uu, c);
      record(s);
    }
    return out;
  }

  // Adaptive mode: cover [0, n*ds] with error-controlled steps, recording
  // each accepted one.
  const double s_end = ds * n;
  const double h_min = opts.min_step_fraction * s_end;
  double s = 0.0;
  double h = ds;
  while (s < s_end) {
    h = std::min(h, s_end - s);
    if (per_step_check) per_step_check(y.x, y.u);
    double err_ratio = 0.0;
    const Phase trial = rkf45_step(accel, y, h, err_ratio, opts.abs_tol, opts.rel_tol);
    if (err_ratio <= 1.0) {
      y = trial;
      s += h;
      if (opts.renormalize) renormalize(y, uu, c);
      record(s);
      const double grow = err_ratio > 0.0 ? 0.9 * std::pow(err_ratio, -0.2) : 5.0;
      h *= std::min(5.0, std::max(1.0, grow));
    } else {
      h *= std::max(0.2, 0.9 * std::pow(err_ratio, -0.2));
      if (h < h_min)
        throw StepRejected("adaptive step fell below " + std::to_string(h_min) +
                           " at s = " + std::to_string(s));
    }
  }
  return out;
}

}  // namespace detail

Worldline integrate_relativistic(const ParticleState& initial, const ForceOracle& force,
                                 double ds, int n, const IntegratorOptions& opts) {
  const double c = opts.c;
  const double norm0 = inner4(initial.u, initial.u) + c * c;
  if (std::abs(norm0) > kNormTol * c * c)
    throw NotNormalized("initial four-velocity violates d_ab U^a U^b = -c^2 by " +
                        std::to_string(norm0));
  const double mass = initial.mass;
  auto accel = [&force, mass](const Vec4& x, const Vec4& u) {
    return force(x, u) * (1.0 / mass);
  };
  auto flat_uu = [](const Vec4&, const Vec4& u) { return inner4(u, u); };
  auto check = [&force](const Vec4& x, const Vec4& u) {
    const Vec4 f = force(x, u);
    const double viol = std::abs(inner4(f, u));
    if (viol > 1e-6 * euclid(f) * euclid(u))
      throw OrthogonalityViolated("force oracle is not Minkowski-orthogonal to u (|<F,u>| = " +
                                  std::to_string(viol) + ")");
  };
  return detail::integrate_phase(initial.x, initial.u, accel, flat_uu, ds, n, opts, check);
}

}  // namespace relmech
