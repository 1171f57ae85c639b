#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "relmech/electromagnetism.hpp"

using namespace relmech;
using namespace relmech::em;

namespace {

std::mt19937_64 rng(77031);
double uniform(double lo, double hi) {
  return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}

Vec3 random_vec3(double s = 2.0) {
  return {uniform(-s, s), uniform(-s, s), uniform(-s, s)};
}

// vacuum plane wave along axis 1, E along 2, B along 3
FaradayTensor plane_wave(const Vec4& x) {
  const double s = std::sin(x[0] - x[3]);
  return {{0.0, s, 0.0}, {0.0, 0.0, s}};
}

// vacuum wave along an oblique direction (0.6, 0.8, 0)
FaradayTensor oblique_wave(const Vec4& x) {
  const double s = std::sin(0.6 * x[0] + 0.8 * x[1] - x[3]);
  return {{0.0, 0.0, s}, {0.8 * s, -0.6 * s, 0.0}};
}

Vec4 vacuum(const Vec4&) { return {}; }

// static point charge q at the origin
FaradayField coulomb_field(double q) {
  return [q](const Vec4& x) {
    const Vec3 xs = x.spatial();
    const double r = norm(xs);
    return FaradayTensor(xs * (q / (r * r * r)), {});
  };
}

}  // namespace

TEST_CASE("faraday block layout") {
  const FaradayTensor zero;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) CHECK(zero.dd(a, b) == 0.0);

  const FaradayTensor f({1, 0, 0}, {0, 0, 0});
  CHECK(f.dd(0, 3) == 1.0);
  CHECK(f.dd(3, 0) == -1.0);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      if (!((a == 0 && b == 3) || (a == 3 && b == 0))) CHECK(f.dd(a, b) == 0.0);

  const Vec3 e{0.3, -0.7, 1.1}, b{0.2, 0.5, -0.9};
  const FaradayTensor g(e, b);
  CHECK(g.dd(0, 1) == b[2]);
  CHECK(g.dd(0, 2) == -b[1]);
  CHECK(g.dd(1, 2) == b[0]);
  for (int i = 0; i < 3; ++i) CHECK(g.dd(i, 3) == e[i]);
  // antisymmetry is structural
  for (int a = 0; a < 4; ++a)
    for (int bb = 0; bb < 4; ++bb) CHECK(g.dd(a, bb) == -g.dd(bb, a));
}

TEST_CASE("assemble/disassemble is a bijection") {
  for (int i = 0; i < 50; ++i) {
    const Vec3 e = random_vec3(), b = random_vec3();
    const auto [e2, b2] = disassemble_faraday(assemble_faraday(e, b));
    for (int k = 0; k < 3; ++k) {
      CHECK(e2[k] == e[k]);
      CHECK(b2[k] == b[k]);
    }
  }
}

TEST_CASE("maxwell residuals vanish for constant fields") {
  const FaradayTensor f(random_vec3(), random_vec3());
  auto field = [f](const Vec4&) { return f; };
  const auto res = maxwell_residuals(field, vacuum, {0.3, 0.1, -0.7, 0.2}, 1e-3, 1.0);
  for (int i = 0; i < 4; ++i) CHECK(res.inhomogeneous[i] == 0.0);
  for (double v : res.cyclic) CHECK(v == 0.0);
  CHECK(res.charge_conservation == 0.0);
}

TEST_CASE("maxwell residuals on a vacuum plane wave are stencil noise") {
  const Vec4 x{0.37, 0.2, -0.4, 0.11};
  const auto res = maxwell_residuals(plane_wave, vacuum, x, 1e-3, 1.0);
  for (int i = 0; i < 4; ++i) CHECK(std::abs(res.inhomogeneous[i]) <= 2e-7);
  for (double v : res.cyclic) CHECK(std::abs(v) <= 2e-7);
  CHECK(std::abs(res.charge_conservation) == 0.0);
}

TEST_CASE("coulomb field satisfies the source-free equations off the origin") {
  const auto field = coulomb_field(2.5);
  const Vec4 x{1.0, 0.5, -0.3, 0.0};
  const auto res = maxwell_residuals(field, vacuum, x, 1e-4, 1.0);
  for (int i = 0; i < 4; ++i) CHECK(std::abs(res.inhomogeneous[i]) <= 1e-7);
  for (double v : res.cyclic) CHECK(std::abs(v) <= 1e-7);
}

TEST_CASE("stress energy blocks") {
  CHECK(em_stress_energy(FaradayTensor{}).tensor().max_abs() == 0.0);

  // pure electric field: u = E0^2 / 8 pi
  const double e0 = 1.7;
  const auto m = em_stress_energy({{e0, 0, 0}, {0, 0, 0}});
  CHECK(m.energy_density() ==
        doctest::Approx(e0 * e0 / (8 * std::numbers::pi)).epsilon(1e-14));

  // crossed unit fields: S = (E x B)/4pi = (0,0,1/4pi)
  const auto m2 = em_stress_energy({{1, 0, 0}, {0, 1, 0}});
  const Vec3 s = m2.poynting();
  CHECK(s[0] == doctest::Approx(0.0));
  CHECK(s[1] == doctest::Approx(0.0));
  CHECK(s[2] == doctest::Approx(1.0 / (4 * std::numbers::pi)).epsilon(1e-14));
}

TEST_CASE("stress energy is symmetric traceless with nonnegative density") {
  for (int i = 0; i < 50; ++i) {
    const auto m = em_stress_energy({random_vec3(), random_vec3()});
    const Mat4& t = m.tensor();
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) CHECK(t(a, b) == t(b, a));
    CHECK(std::abs(m.trace()) <= 1e-12 * std::max(1.0, t.max_abs()));
    CHECK(m.energy_density() >= 0.0);
  }
}

TEST_CASE("poynting accessor equals the cross-product oracle") {
  for (int i = 0; i < 20; ++i) {
    const Vec3 e = random_vec3(), b = random_vec3();
    const Vec3 s = em_stress_energy({e, b}).poynting();
    const Vec3 oracle = cross(e, b) * (1.0 / (4 * std::numbers::pi));
    for (int k = 0; k < 3; ++k)
      CHECK(s[k] == doctest::Approx(oracle[k]).epsilon(1e-12));
  }
}

TEST_CASE("divergence identity residual on analytic solutions") {
  const Vec4 x{0.37, 0.2, -0.4, 0.11};
  SUBCASE("constant field") {
    const FaradayTensor f(random_vec3(), random_vec3());
    auto field = [f](const Vec4&) { return f; };
    const Vec4 r = divergence_identity_residual(field, vacuum, x, 1e-3, 1.0);
    for (int i = 0; i < 4; ++i) CHECK(r[i] == 0.0);
  }
  SUBCASE("axis-aligned wave cancels exactly in the stencil") {
    const Vec4 r = divergence_identity_residual(plane_wave, vacuum, x, 1e-2, 1.0);
    for (int i = 0; i < 4; ++i) CHECK(r[i] == 0.0);
  }
  SUBCASE("oblique wave converges at second order") {
    // the oblique direction keeps the two stencil legs from cancelling
    const double r1 = euclid(divergence_identity_residual(oblique_wave, vacuum, x, 2e-2, 1.0));
    const double r2 = euclid(divergence_identity_residual(oblique_wave, vacuum, x, 1e-2, 1.0));
    const double r3 = euclid(divergence_identity_residual(oblique_wave, vacuum, x, 5e-3, 1.0));
    CHECK(std::log2(r1 / r2) == doctest::Approx(2.0).epsilon(0.1));
    CHECK(std::log2(r2 / r3) == doctest::Approx(2.0).epsilon(0.1));
  }
  SUBCASE("oblique wave satisfies the maxwell system") {
    const auto res = maxwell_residuals(oblique_wave, vacuum, x, 1e-3, 1.0);
    for (int i = 0; i < 4; ++i) CHECK(std::abs(res.inhomogeneous[i]) <= 2e-7);
    for (double v : res.cyclic) CHECK(std::abs(v) <= 2e-7);
  }
  SUBCASE("coulomb field off the origin") {
    const auto field = coulomb_field(1.3);
    const Vec4 xc{1.0, 0.4, -0.2, 0.0};
    const double r1 = euclid(divergence_identity_residual(field, vacuum, xc, 2e-3, 1.0));
    const double r2 = euclid(divergence_identity_residual(field, vacuum, xc, 1e-3, 1.0));
    CHECK(r1 / r2 == doctest::Approx(4.0).epsilon(0.15));
  }
}

TEST_CASE("divergence identity surfaces a homogeneous-system violation") {
  // a field that breaks the cyclic identity: B = (0, 0, x1 * x4)
  auto broken = [](const Vec4& x) {
    return FaradayTensor({0, 0, 0}, {0, 0, x[0] * x[3]});
  };
  double cyclic = 0.0;
  divergence_identity_residual(broken, vacuum, {0.3, 0.2, 0.1, 0.5}, 1e-3, 1.0, &cyclic);
  CHECK(cyclic > 0.1);
  // and a proper vacuum solution keeps it at the stencil floor
  divergence_identity_residual(plane_wave, vacuum, {0.3, 0.2, 0.1, 0.5}, 1e-3, 1.0,
                               &cyclic);
  CHECK(cyclic <= 1e-7);
}

TEST_CASE("free lorentz motion") {
  ParticleState s0;
  s0.x = {0, 0, 0, 0};
  s0.u = four_velocity_from_coordinate_velocity({0.2, 0.1, 0}, 1.0);
  s0.charge = 1.0;
  IntegratorOptions opts;
  opts.c = 1.0;
  auto none = [](const Vec4&) { return FaradayTensor{}; };
  const Worldline w = integrate_lorentz(s0, none, 1e-2, 100, opts);
  for (int i = 0; i < 4; ++i)
    CHECK(w.samples.back().u[i] == doctest::Approx(s0.u[i]).epsilon(1e-13));
}

TEST_CASE("uniform magnetic field produces the relativistic gyroradius") {
  // closed form: r = gamma m v c / (e B0)
  const double c = 1.0, b0 = 0.8, v = 0.6;
  ParticleState s0;
  s0.x = {0, 0, 0, 0};
  s0.u = four_velocity_from_coordinate_velocity({v, 0, 0}, c);
  s0.mass = 1.0;
  s0.charge = 1.0;
  auto field = [b0](const Vec4&) { return FaradayTensor({0, 0, 0}, {0, 0, b0}); };
  IntegratorOptions opts;
  opts.c = c;
  const double gamma = 1.0 / std::sqrt(1.0 - v * v);
  const double radius = gamma * s0.mass * v * c / (s0.charge * b0);
  // one full gyration in proper time: period 2 pi m c / (e B0)
  const double period = 2 * std::numbers::pi * s0.mass * c / (s0.charge * b0);
  const int n = 4000;
  const Worldline w = integrate_lorentz(s0, field, period / n, n, opts);
  double rmax = 0.0;
  for (const auto& smp : w.samples) {
    // orbit circles through the origin with the center at (0, -r) or (0, r)
    rmax = std::max(rmax, std::hypot(smp.x[0], smp.x[1] + radius));
  }
  CHECK(rmax == doctest::Approx(radius).epsilon(1e-6));
  // u4 (energy) untouched by a magnetic field
  CHECK(w.samples.back().u[3] == doctest::Approx(s0.u[3]).epsilon(1e-9));
}

TEST_CASE("uniform electric field along the motion is hyperbolic") {
  const double e0 = 0.7;
  ParticleState s0;
  s0.x = {0, 0, 0, 0};
  s0.u = {0, 0, 0, 1};
  s0.charge = 1.0;
  auto field = [e0](const Vec4&) { return FaradayTensor({e0, 0, 0}, {0, 0, 0}); };
  IntegratorOptions opts;
  opts.c = 1.0;
  opts.renormalize = false;
  const Worldline w = integrate_lorentz(s0, field, 1e-3, 1000, opts);
  const double a = e0;  // e E / (m c) in these units
  CHECK(w.samples.back().x[0] ==
        doctest::Approx((std::cosh(a) - 1.0) / a).epsilon(1e-8));
}

TEST_CASE("work rate matches e E . v and magnetic fields do no work") {
  const Vec3 e{0.2, -0.1, 0.3}, b{0.5, 0.4, -0.2};
  ParticleState s0;
  s0.x = {0, 0, 0, 0};
  s0.u = four_velocity_from_coordinate_velocity({0.3, 0.1, -0.2}, 1.0);
  s0.charge = 0.7;
  auto field = [e, b](const Vec4&) { return FaradayTensor(e, b); };
  IntegratorOptions opts;
  opts.c = 1.0;
  const Worldline w = integrate_lorentz(s0, field, 1e-3, 500, opts);
  for (std::size_t i = 1; i + 1 < w.samples.size(); i += 50) {
    const auto& sm = w.samples[i];
    const Vec3 v = coordinate_velocity_from_four_velocity(sm.u, 1.0);
    // dE/dt per unit mass from the recorded gamma; E = m c^2 u4/c
    const double de_dt = (w.samples[i + 1].u[3] - w.samples[i - 1].u[3]) /
                         (w.samples[i + 1].t - w.samples[i - 1].t);
    CHECK(de_dt == doctest::Approx(s0.charge * dot(e, v)).epsilon(1e-5));
  }
}

TEST_CASE("potential machinery") {
  SUBCASE("constant potential gives zero field") {
    auto a = [](const Vec4&) { return CoVec4{0.3, -0.2, 0.5, 1.0}; };
    const auto f = faraday_from_potential(a, {0.2, 0.4, -0.1, 0.3}, 1e-3);
    for (int m = 0; m < 4; ++m)
      for (int n2 = 0; n2 < 4; ++n2) CHECK(f.dd(m, n2) == 0.0);
  }
  SUBCASE("coulomb potential reproduces the coulomb field") {
    const double q = 1.7;
    auto a = [q](const Vec4& x) {
      return CoVec4{0, 0, 0, -q / norm(x.spatial())};
    };
    const Vec4 x{0.8, -0.5, 0.4, 0.0};
    const auto f = faraday_from_potential(a, x, 1e-5);
    const Vec3 oracle = x.spatial() * (q / std::pow(norm(x.spatial()), 3.0));
    for (int k = 0; k < 3; ++k)
      CHECK(f.electric()[k] == doctest::Approx(oracle[k]).epsilon(1e-7));
    CHECK(norm(f.magnetic()) <= 1e-12);
  }
  SUBCASE("gauge transformation leaves the field invariant") {
    auto a = [](const Vec4& x) {
      return CoVec4{0.2 * x[1] * x[3], -0.1 * x[0] * x[0], 0.3 * x[2] * x[1],
                    0.4 * x[0] - 0.2 * x[3] * x[3]};
    };
    for (int i = 0; i < 25; ++i) {
      std::array<double, 6> k{};
      for (auto& v : k) v = uniform(-1, 1);
      auto lambda = [k](const Vec4& x) {
        return k[0] * x[0] * x[1] * x[3] + k[1] * x[2] * x[2] + k[2] * x[3] * x[3] * x[1] +
               k[3] * x[0] + k[4] * x[1] * x[2] + k[5];
      };
      const auto shifted = gauge_transform(a, lambda, 1e-2);
      const Vec4 x{uniform(-1, 1), uniform(-1, 1), uniform(-1, 1), uniform(-1, 1)};
      const auto f1 = faraday_from_potential(a, x, 1e-2);
      const auto f2 = faraday_from_potential(shifted, x, 1e-2);
      double scale = 1.0, diff = 0.0;
      for (int m = 0; m < 4; ++m)
        for (int n2 = 0; n2 < 4; ++n2) {
          scale = std::max(scale, std::abs(f1.dd(m, n2)));
          diff = std::max(diff, std::abs(f1.dd(m, n2) - f2.dd(m, n2)));
        }
      CHECK(diff / scale <= 1e-10);
    }
  }
  SUBCASE("lorenz gauge residual") {
    // A = (x2, 0, 0, x4): dA^mu/dx^mu = d(x2)/dx1 + ... - d(-x4)/dx4 ... = -(-1) = ... 0 + 1
    auto a = [](const Vec4& x) { return CoVec4{x[1], 0, 0, x[3]}; };
    const double r = lorenz_gauge_residual(a, {0.3, 0.2, 0.1, 0.5}, 1e-3);
    CHECK(r == doctest::Approx(-1.0).epsilon(1e-10));
    auto b = [](const Vec4& x) { return CoVec4{x[0], 0, 0, 0}; };
    CHECK(lorenz_gauge_residual(b, {0.3, 0.2, 0.1, 0.5}, 1e-3) ==
          doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("charge-current conservation residual on a conserved current") {
  // rigidly advected charge bunch: sigma(x,t) = f(x1 - v t), j = sigma v
  const double v = 0.4;
  auto j = [v](const Vec4& x) {
    const double sigma = std::exp(-0.5 * (x[0] - v * x[3]) * (x[0] - v * x[3]));
    return Vec4{sigma * v, 0.0, 0.0, sigma};  // c = 1
  };
  auto f = [](const Vec4&) { return FaradayTensor{}; };
  const auto res = maxwell_residuals(f, j, {0.3, 0, 0, 0.2}, 1e-4, 1.0);
  CHECK(std::abs(res.charge_conservation) <= 1e-8);
}
