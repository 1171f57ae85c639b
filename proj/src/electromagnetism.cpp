#include "relmech/electromagnetism.hpp"

#include <cmath>
#include <numbers>

#include "relmech/fd.hpp"

namespace relmech::em {

double FaradayTensor::dd(int mu, int nu) const {
  if (mu == nu) return 0.0;
  if (nu == 3) return e_[mu];
  if (mu == 3) return -e_[nu];
  // spatial block: F_jk = eps_jkl B^l
  for (int l = 0; l < 3; ++l) {
    const int e = epsilon3(mu, nu, l);
    if (e != 0) return e * b_[l];
  }
  return 0.0;
}

double FaradayTensor::invariant() const {
  return 2.0 * (dot(b_, b_) - dot(e_, e_));
}

MaxwellResiduals maxwell_residuals(const FaradayField& f, const CurrentField& j,
                                   const Vec4& x, double h, double c) {
  MaxwellResiduals out;
  for (int mu = 0; mu < 4; ++mu) {
    double div = 0.0;
    for (int nu = 0; nu < 4; ++nu) {
      auto comp = [&f, mu, nu](const Vec4& p) { return f(p).uu(mu, nu); };
      div += deriv1(comp, x, nu, h);
    }
    out.inhomogeneous[mu] = div - (4.0 * std::numbers::pi / c) * j(x)[mu];
  }

  // the homogeneous cyclic identity closes with covariant components; the
  // all-contravariant printing does not cancel because the derivative slot
  // is not raised along with the field slots
  static constexpr int kTriples[4][3] = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  for (int t = 0; t < 4; ++t) {
    const int mu = kTriples[t][0], nu = kTriples[t][1], la = kTriples[t][2];
    auto fmn = [&f, mu, nu](const Vec4& p) { return f(p).dd(mu, nu); };
    auto fnl = [&f, nu, la](const Vec4& p) { return f(p).dd(nu, la); };
    auto flm = [&f, la, mu](const Vec4& p) { return f(p).dd(la, mu); };
    out.cyclic[static_cast<std::size_t>(t)] =
        deriv1(fmn, x, la, h) + deriv1(fnl, x, mu, h) + deriv1(flm, x, nu, h);
  }

  double cons = 0.0;
  for (int mu = 0; mu < 4; ++mu) {
    auto comp = [&j, mu](const Vec4& p) { return j(p)[mu]; };
    cons += deriv1(comp, x, mu, h);
  }
  out.charge_conservation = cons;
  return out;
}

EMStressEnergy em_stress_energy(const FaradayTensor& f) {
  const double inv = f.invariant();
  Mat4 m;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      double s = 0.0;
      for (int l = 0; l < 4; ++l) s += f.uu(l, a) * f.du(l, b);
      m(a, b) = (s - 0.25 * minkowski(a, b) * inv) / (4.0 * std::numbers::pi);
    }
  return EMStressEnergy(m);
}

double EMStressEnergy::trace() const {
  return m_(0, 0) + m_(1, 1) + m_(2, 2) - m_(3, 3);
}

Vec4 divergence_identity_residual(const FaradayField& f, const CurrentField& j,
                                  const Vec4& x, double h, double c,
                                  double* cyclic_check) {
  if (cyclic_check) {
    static constexpr int kTriples[4][3] = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    double worst = 0.0;
    for (auto& tr : kTriples) {
      const int mu = tr[0], nu = tr[1], la = tr[2];
      auto fmn = [&f, mu, nu](const Vec4& p) { return f(p).dd(mu, nu); };
      auto fnl = [&f, nu, la](const Vec4& p) { return f(p).dd(nu, la); };
      auto flm = [&f, la, mu](const Vec4& p) { return f(p).dd(la, mu); };
      worst = std::max(worst, std::abs(deriv1(fmn, x, la, h) + deriv1(fnl, x, mu, h) +
                                       deriv1(flm, x, nu, h)));
    }
    *cyclic_check = worst;
  }

  Vec4 out;
  const Vec4 jx = j(x);
  const FaradayTensor fx = f(x);
  for (int al = 0; al < 4; ++al) {
    double div = 0.0;
    for (int be = 0; be < 4; ++be) {
      auto comp = [&, al, be](const Vec4& p) {
        // M_alpha^beta = d_{alpha mu} M^{mu beta}; d is diagonal
        const double sgn = al == 3 ? -1.0 : 1.0;
        return sgn * em_stress_energy(f(p)).tensor()(al, be);
      };
      div += deriv1(comp, x, be, h);
    }
    double source = 0.0;
    for (int l = 0; l < 4; ++l) {
      const double j_low = (l == 3 ? -1.0 : 1.0) * jx[l];
      source += fx.ud(l, al) * j_low;
    }
    out[al] = div - source / c;
  }
  return out;
}

Worldline integrate_lorentz(const ParticleState& initial, const FaradayField& f,
                            double ds, int n, const IntegratorOptions& opts) {
  const double e_over_mc = initial.charge / (initial.mass * opts.c);
  auto force = [&f, e_over_mc, m = initial.mass](const Vec4& x, const Vec4& u) {
    const FaradayTensor fx = f(x);
    Vec4 out;
    for (int a = 0; a < 4; ++a) {
      double s = 0.0;
      for (int l = 0; l < 4; ++l) s += fx.ud(a, l) * u[l];
      out[a] = m * e_over_mc * s;
    }
    return out;
  };
  return integrate_relativistic(initial, force, ds, n, opts);
}

FaradayTensor faraday_from_potential(const FourPotential& a, const Vec4& x, double h) {
  auto f_dd = [&](int mu, int nu) {
    auto a_nu = [&a, nu](const Vec4& p) { return a(p)[nu]; };
    auto a_mu = [&a, mu](const Vec4& p) { return a(p)[mu]; };
    return deriv1(a_nu, x, mu, h) - deriv1(a_mu, x, nu, h);
  };
  const Vec3 e{f_dd(0, 3), f_dd(1, 3), f_dd(2, 3)};
  const Vec3 b{f_dd(1, 2), -f_dd(0, 2), f_dd(0, 1)};
  return {e, b};
}

FourPotential gauge_transform(const FourPotential& a, const GaugeFunction& lambda,
                              double h) {
  return [a, lambda, h](const Vec4& x) -> CoVec4 {
    CoVec4 out = a(x);
    for (int mu = 0; mu < 4; ++mu) out[mu] -= deriv1(lambda, x, mu, h);
    return out;
  };
}

double lorenz_gauge_residual(const FourPotential& a, const Vec4& x, double h) {
  double s = 0.0;
  for (int mu = 0; mu < 4; ++mu) {
    auto upper = [&a, mu](const Vec4& p) {
      return (mu == 3 ? -1.0 : 1.0) * a(p)[mu];
    };
    s += deriv1(upper, x, mu, h);
  }
  return s;
}

}  // namespace relmech::em
