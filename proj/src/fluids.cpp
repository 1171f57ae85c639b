#include "relmech/fluids.hpp"

#include <cmath>

#include "relmech/fd.hpp"
#include "relmech/geodesic.hpp"
#include "relmech/minkowski.hpp"

namespace relmech::fluid {

namespace {

double zero_scalar(const Vec4&) { return 0.0; }
em::FaradayTensor zero_faraday(const Vec4&) { return {}; }

// Field set with every null oracle replaced by the zero field, so the whole
// residual family can run one code path.
struct Resolved {
  std::function<double(const Vec4&)> rho, p, sigma0, eta, zeta;
  std::function<Vec4(const Vec4&)> u;
  em::FaradayField faraday;
  const gravity::EffectiveMetric* g;
};

Resolved resolve(const FluidFieldSet& f) {
  Resolved r;
  r.rho = f.rho ? f.rho : zero_scalar;
  r.p = f.pressure ? f.pressure : zero_scalar;
  r.sigma0 = f.sigma0 ? f.sigma0 : zero_scalar;
  r.eta = f.shear_viscosity ? f.shear_viscosity : zero_scalar;
  r.zeta = f.bulk_viscosity ? f.bulk_viscosity : zero_scalar;
  r.u = f.u;
  r.faraday = f.faraday ? f.faraday : zero_faraday;
  r.g = &f.metric;
  return r;
}

CoVec4 lower_with(const Mat4& g, const Vec4& u) {
  CoVec4 out;
  for (int a = 0; a < 4; ++a) {
    double s = 0.0;
    for (int b = 0; b < 4; ++b) s += g(a, b) * u[b];
    out[a] = s;
  }
  return out;
}

// Viscous correction tensor at one event:
//   C^{ab} = -eta [ P2^{as} d_s u^b + P2^{bs} d_s u^a ]
//            + (2/3 eta - zeta) P2^{ab} d_s u^s
// with P2^{as} = g^{as} + u^a u^s / c^2.
Mat4 viscous_correction(const Resolved& f, const Vec4& x, double h, double c) {
  const double eta = f.eta(x);
  const double zeta = f.zeta(x);
  const Vec4 u = f.u(x);
  const Mat4 gi = f.g->inverse(x);

  double du[4][4];  // du[s][a] = d u^a / dx^s
  for (int s = 0; s < 4; ++s)
    for (int a = 0; a < 4; ++a) {
      auto comp = [&f, a](const Vec4& p) { return f.u(p)[a]; };
      du[s][a] = deriv1(comp, x, s, h);
    }
  double theta = du[0][0] + du[1][1] + du[2][2] + du[3][3];

  Mat4 p2;
  for (int a = 0; a < 4; ++a)
    for (int s = 0; s < 4; ++s) p2(a, s) = gi(a, s) + u[a] * u[s] / (c * c);

  Mat4 out;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      double shear = 0.0;
      for (int s = 0; s < 4; ++s) shear += p2(a, s) * du[s][b] + p2(b, s) * du[s][a];
      out(a, b) = -eta * shear + (2.0 / 3.0 * eta - zeta) * p2(a, b) * theta;
    }
  return out;
}

// bracket^g = d_b (p g^{gb}) + (J^b / c) F_b^g + d_b C^{gb} with C the
// viscous correction; every term a degenerate medium switches off evaluates
// to an exact zero. Momentum and continuity share this bracket.
Vec4 bracket(const Resolved& f, const Vec4& x, double h, double c) {
  Vec4 out;
  const em::FaradayTensor fx = f.faraday(x);
  const Vec4 ux = f.u(x);
  const double sig = f.sigma0(x);
  for (int g = 0; g < 4; ++g) {
    double pressure_div = 0.0;
    for (int b = 0; b < 4; ++b) {
      auto comp = [&f, g, b](const Vec4& p) { return f.p(p) * f.g->inverse(p)(g, b); };
      pressure_div += deriv1(comp, x, b, h);
    }
    double em_term = 0.0;
    for (int b = 0; b < 4; ++b) em_term += (sig * ux[b] / c) * fx.du(b, g);
    double viscous_div = 0.0;
    for (int b = 0; b < 4; ++b) {
      auto comp = [&f, g, b, h, c](const Vec4& p) {
        return viscous_correction(f, p, h, c)(g, b);
      };
      viscous_div += deriv1(comp, x, b, h);
    }
    out[g] = pressure_div + em_term + viscous_div;
  }
  return out;
}

double continuity_master(const Resolved& f, const Vec4& x, double h, double c) {
  double flux_div = 0.0;
  for (int b = 0; b < 4; ++b) {
    auto comp = [&f, b, c](const Vec4& p) {
      return (f.rho(p) + f.p(p) / (c * c)) * f.u(p)[b];
    };
    flux_div += deriv1(comp, x, b, h);
  }
  const CoVec4 ubar = lower_with(f.g->metric(x), f.u(x));
  const Vec4 br = bracket(f, x, h, c);
  double coupling = 0.0;
  for (int a = 0; a < 4; ++a) coupling += ubar[a] * br[a];
  return flux_div - coupling / (c * c);
}

Vec4 momentum_master(const Resolved& f, const Vec4& x, double h, double c) {
  const Vec4 u = f.u(x);
  const double inertia = f.rho(x) + f.p(x) / (c * c);
  const gravity::Christoffel gamma = f.g->christoffel(x, h);

  // convective term (rho + p/c^2) u^b nabla_b u^a
  Vec4 conv;
  for (int a = 0; a < 4; ++a) {
    auto comp = [&f, a](const Vec4& p) { return f.u(p)[a]; };
    double s = 0.0;
    for (int b = 0; b < 4; ++b) {
      double nabla = deriv1(comp, x, b, h);
      for (int l = 0; l < 4; ++l) nabla += gamma(a, b, l) * u[l];
      s += u[b] * nabla;
    }
    conv[a] = inertia * s;
  }

  const CoVec4 ubar = lower_with(f.g->metric(x), u);
  const Vec4 br = bracket(f, x, h, c);
  Vec4 out;
  for (int a = 0; a < 4; ++a) {
    double projected = br[a];  // delta part of the projector
    for (int g = 0; g < 4; ++g) projected += ubar[g] * u[a] / (c * c) * br[g];
    out[a] = conv[a] + projected;
  }
  return out;
}

ResidualVector make_residual(std::string tag, const Vec4& r, double h, const Vec4& x) {
  return {std::move(tag), r, h, x};
}

}  // namespace

std::function<Vec4(const Vec4&)> four_velocity_field(
    std::function<Vec3(const Vec4&)> v, const gravity::EffectiveMetric& g, double c) {
  // the metric is captured by value so the oracle owns everything it needs
  return [v = std::move(v), g, c](const Vec4& x) {
    return gravity::g_normalized_four_velocity(g, x, v(x), c);
  };
}

Mat4 projector(const gravity::EffectiveMetric& g, const Vec4& x, const Vec4& u,
               double c) {
  const CoVec4 ubar = lower_with(g.metric(x), u);
  Mat4 p;
  for (int a = 0; a < 4; ++a)
    for (int gi = 0; gi < 4; ++gi)
      p(a, gi) = (a == gi ? 1.0 : 0.0) + ubar[gi] * u[a] / (c * c);
  return p;
}

double continuity_residual_dust(const FluidFieldSet& f, const Vec4& x, double h) {
  FluidFieldSet dust = f;
  dust.pressure = nullptr;
  dust.sigma0 = nullptr;
  dust.shear_viscosity = nullptr;
  dust.bulk_viscosity = nullptr;
  // with p = 0 the residual carries no explicit light-speed factor
  return continuity_master(resolve(dust), x, h, 1.0);
}

double continuity_residual_dust_coordinate(const FluidFieldSet& f, const Vec4& x,
                                           double h, double c) {
  const Resolved r = resolve(f);
  auto dens = [&r, c](const Vec4& p) { return r.rho(p) * r.u(p)[3] / c; };
  double out = c * deriv1(dens, x, 3, h);
  for (int i = 0; i < 3; ++i) {
    auto flux = [&r, i](const Vec4& p) { return r.rho(p) * r.u(p)[i]; };
    out += deriv1(flux, x, i, h);
  }
  return out;
}

double continuity_residual_perfect_fluid(const FluidFieldSet& f, const Vec4& x,
                                         double h, double c) {
  FluidFieldSet perfect = f;
  perfect.sigma0 = nullptr;
  perfect.shear_viscosity = nullptr;
  perfect.bulk_viscosity = nullptr;
  return continuity_master(resolve(perfect), x, h, c);
}

double plasma_continuity_residual(const FluidFieldSet& f, const Vec4& x, double h,
                                  double c) {
  FluidFieldSet plasma = f;
  plasma.shear_viscosity = nullptr;
  plasma.bulk_viscosity = nullptr;
  return continuity_master(resolve(plasma), x, h, c);
}

double viscous_continuity_residual(const FluidFieldSet& f, const Vec4& x, double h,
                                   double c) {
  return continuity_master(resolve(f), x, h, c);
}

ResidualVector euler_residual_perfect_fluid(const FluidFieldSet& f, const Vec4& x,
                                            double h, double c) {
  FluidFieldSet perfect = f;
  perfect.sigma0 = nullptr;
  perfect.shear_viscosity = nullptr;
  perfect.bulk_viscosity = nullptr;
  return make_residual("euler_perfect", momentum_master(resolve(perfect), x, h, c), h, x);
}

ResidualVector plasma_euler_residual(const FluidFieldSet& f, const Vec4& x, double h,
                                     double c) {
  FluidFieldSet plasma = f;
  plasma.shear_viscosity = nullptr;
  plasma.bulk_viscosity = nullptr;
  return make_residual("euler_plasma", momentum_master(resolve(plasma), x, h, c), h, x);
}

ResidualVector navier_stokes_residual(const FluidFieldSet& f, const Vec4& x, double h,
                                      double c) {
  return make_residual("navier_stokes", momentum_master(resolve(f), x, h, c), h, x);
}

Mat4 viscous_stress_energy(const FluidFieldSet& f, const Vec4& x, double h, double c) {
  return viscous_correction(resolve(f), x, h, c);
}

Vec4 theta_divergence_required(const FluidFieldSet& f, const Vec4& x, double h,
                               double c) {
  const Resolved r = resolve(f);
  const Vec4 u = r.u(x);
  const double inertia = r.rho(x) + r.p(x) / (c * c);
  const gravity::Christoffel gamma = r.g->christoffel(x, h);
  Vec4 out;
  for (int a = 0; a < 4; ++a) {
    double s = 0.0;
    for (int b = 0; b < 4; ++b)
      for (int g = 0; g < 4; ++g) s += gamma(a, b, g) * u[b] * u[g];
    out[a] = inertia * s;
  }
  return out;
}

Worldline charged_dust_streamline(const FluidParcel& parcel, const em::FaradayField& f,
                                  const gravity::EffectiveMetric& g, double ds, int n,
                                  const IntegratorOptions& opts) {
  if (!(parcel.rho > 0.0)) throw ZeroDensity("parcel proper mass density must be > 0");
  const double c = opts.c;
  const double charge_to_mass = parcel.sigma0 / parcel.rho;
  const em::FaradayField field = f ? f : zero_faraday;

  auto accel = [&g, &field, charge_to_mass, c, fd = opts.fd_step](const Vec4& x,
                                                                  const Vec4& u) {
    Vec4 a = orbit::geodesic_acceleration(g, x, u, fd);
    const em::FaradayTensor fx = field(x);
    const CoVec4 ubar = lower_with(g.metric(x), u);
    // force per unit mass: -(sigma0 / (rho c)) F_b^g P^a_g u^b
    for (int al = 0; al < 4; ++al) {
      double s = 0.0;
      for (int b = 0; b < 4; ++b)
        for (int ga = 0; ga < 4; ++ga) {
          const double proj = (al == ga ? 1.0 : 0.0) + ubar[ga] * u[al] / (c * c);
          s += fx.du(b, ga) * proj * u[b];
        }
      a[al] -= (charge_to_mass / c) * s;
    }
    return a;
  };
  auto uu = [&g](const Vec4& x, const Vec4& u) {
    double q = 0.0;
    const Mat4 gx = g.metric(x);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) q += gx(a, b) * u[a] * u[b];
    return q;
  };
  return detail::integrate_phase(parcel.x, parcel.u, accel, uu, ds, n, opts);
}

Worldline perfect_fluid_streamline(const Vec4& x0, const Vec4& u0,
                                   const FluidFieldSet& fields, double ds, int n,
                                   const IntegratorOptions& opts) {
  const Resolved f = resolve(fields);
  const double c = opts.c;
  auto accel = [f, c, fd = opts.fd_step](const Vec4& x, const Vec4& u) {
    const double inertia = f.rho(x) + f.p(x) / (c * c);
    if (!(inertia > 0.0))
      throw ZeroInertia("rho + p/c^2 = " + std::to_string(inertia) +
                        " must stay positive along the streamline");
    Vec4 a = orbit::geodesic_acceleration(*f.g, x, u, fd);
    Vec4 pressure_div;
    for (int g = 0; g < 4; ++g) {
      double s = 0.0;
      for (int b = 0; b < 4; ++b) {
        auto comp = [&f, g, b](const Vec4& p) { return f.p(p) * f.g->inverse(p)(g, b); };
        s += deriv1(comp, x, b, fd);
      }
      pressure_div[g] = s;
    }
    const CoVec4 ubar = lower_with(f.g->metric(x), u);
    for (int al = 0; al < 4; ++al) {
      double projected = pressure_div[al];
      for (int g = 0; g < 4; ++g)
        projected += ubar[g] * u[al] / (c * c) * pressure_div[g];
      a[al] -= projected / inertia;
    }
    return a;
  };
  auto uu = [f](const Vec4& x, const Vec4& u) {
    double q = 0.0;
    const Mat4 gx = f.g->metric(x);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) q += gx(a, b) * u[a] * u[b];
    return q;
  };
  return detail::integrate_phase(x0, u0, accel, uu, ds, n, opts);
}

ExpansionResiduals static_continuity_expansion_residual(const FluidFieldSet& fields,
                                                        const Vec4& x, double h,
                                                        double c) {
  if (fields.metric.provenance() != gravity::EffectiveMetric::Provenance::FromStaticW)
    throw Error("static continuity expansion needs a static-potential metric");
  const Resolved f = resolve(fields);
  const gravity::NewtonianPotential& w = fields.metric.potential();
  const double c2 = c * c;

  auto vel = [&f, c](const Vec4& p, int i) { return c * f.u(p)[i] / f.u(p)[3]; };
  auto root = [&f, &w, c2, &vel](const Vec4& p) {
    const double wx = w(p.spatial());
    double v2 = 0.0;
    for (int i = 0; i < 3; ++i) {
      const double vi = vel(p, i);
      v2 += vi * vi;
    }
    return std::sqrt(1.0 + 2.0 * wx / c2 - (1.0 - 2.0 * wx / c2) * v2 / c2);
  };
  auto inertia = [&f, c2](const Vec4& p) { return f.rho(p) + f.p(p) / c2; };

  ExpansionResiduals out{};

  // exact static form
  {
    double lhs = 0.0;
    for (int b = 0; b < 3; ++b) {
      auto flux = [&](const Vec4& p) { return inertia(p) * vel(p, b) / root(p); };
      lhs += deriv1(flux, x, b, h);
    }
    auto dens = [&](const Vec4& p) { return inertia(p) / root(p); };
    lhs += c * deriv1(dens, x, 3, h);  // d/dt = c d/dx4

    double rhs = 0.0;
    const double wx = w(x.spatial());
    const double front = (1.0 - 2.0 * wx / c2) / c2;
    for (int b = 0; b < 3; ++b) {
      auto scaled_p = [&](const Vec4& p) {
        return f.p(p) / (1.0 - 2.0 * w(p.spatial()) / c2);
      };
      rhs += front * (vel(x, b) / root(x)) * deriv1(scaled_p, x, b, h);
    }
    out.exact = lhs - rhs;
  }

  // expansion to first order in 1/c^2
  {
    auto correction = [&](const Vec4& p) {
      double v2 = 0.0;
      for (int i = 0; i < 3; ++i) {
        const double vi = vel(p, i);
        v2 += vi * vi;
      }
      return f.rho(p) * (w(p.spatial()) - 0.5 * v2);
    };
    double newtonian = 0.0;
    for (int b = 0; b < 3; ++b) {
      auto flux = [&](const Vec4& p) { return f.rho(p) * vel(p, b); };
      newtonian += deriv1(flux, x, b, h);
    }
    newtonian += c * deriv1(f.rho, x, 3, h);

    double div_v = 0.0;
    for (int b = 0; b < 3; ++b) {
      auto vb = [&vel, b](const Vec4& p) { return vel(p, b); };
      div_v += deriv1(vb, x, b, h);
    }
    double corr_flux = 0.0;
    for (int b = 0; b < 3; ++b) {
      auto flux = [&](const Vec4& p) { return correction(p) * vel(p, b); };
      corr_flux += deriv1(flux, x, b, h);
    }
    const double dp_dt = c * deriv1(f.p, x, 3, h);
    const double dcorr_dt = c * deriv1(correction, x, 3, h);
    out.expanded =
        newtonian - (-f.p(x) * div_v + corr_flux - dp_dt + dcorr_dt) / c2;
  }
  return out;
}

}  // namespace relmech::fluid
