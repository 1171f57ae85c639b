#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "relmech/minkowski.hpp"

using namespace relmech;

namespace {

std::mt19937_64 rng(20250811);
double uniform(double lo, double hi) {
  return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}

Vec4 random_vec4(double scale = 1.0) {
  return {uniform(-scale, scale), uniform(-scale, scale), uniform(-scale, scale),
          uniform(-scale, scale)};
}

LorentzTransform random_boost(double beta_max) {
  const double u = uniform(-1, 1);
  const double phi = uniform(0, 2 * std::numbers::pi);
  const double s = std::sqrt(1 - u * u);
  const double b = beta_max * uniform(0, 1);
  return LorentzTransform::boost({b * s * std::cos(phi), b * s * std::sin(phi), b * u},
                                 1.0);
}

}  // namespace

TEST_CASE("index lowering flips the time leg") {
  const CoVec4 low = lower({1, 2, 3, 4});
  CHECK(low[0] == 1.0);
  CHECK(low[1] == 2.0);
  CHECK(low[2] == 3.0);
  CHECK(low[3] == -4.0);

  const CoVec4 z = lower({0, 0, 0, 0});
  for (int i = 0; i < 4; ++i) CHECK(z[i] == 0.0);

  const Vec4 v{0.3, -1.7, 2.2, 5.0};
  const Vec4 back = raise(lower(v));
  for (int i = 0; i < 4; ++i) CHECK(back[i] == v[i]);
}

TEST_CASE("inner product and causal classification") {
  CHECK(inner4({1, 0, 0, 0}, {1, 0, 0, 0}) == 1.0);
  CHECK(classify({1, 0, 0, 0}) == CausalClass::Spacelike);

  CHECK(inner4({0, 0, 0, 1}, {0, 0, 0, 1}) == -1.0);
  CHECK(classify({0, 0, 0, 1}) == CausalClass::Timelike);

  CHECK(inner4({1, 0, 0, 1}, {1, 0, 0, 1}) == 0.0);
  CHECK(classify({1, 0, 0, 1}) == CausalClass::Null);
}

TEST_CASE("metric inverse identity is exact") {
  const Mat4 d = minkowski_matrix();
  const Mat4 prod = d * d;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(prod(i, j) == (i == j ? 1.0 : 0.0));
}

TEST_CASE("boost matrix entries at beta = 0.6") {
  // gamma and the axis-1 entries evaluated directly from the closed form
  const double c = 1.0;
  const auto l = LorentzTransform::boost({0.6, 0, 0}, c);
  const double gamma = 1.0 / std::sqrt(1.0 - 0.36);
  CHECK(l.matrix()(0, 0) == doctest::Approx(gamma).epsilon(1e-14));
  CHECK(l.matrix()(3, 3) == doctest::Approx(gamma).epsilon(1e-14));
  CHECK(l.matrix()(0, 3) == doctest::Approx(-gamma * 0.6).epsilon(1e-14));
  CHECK(l.matrix()(3, 0) == doctest::Approx(-gamma * 0.6).epsilon(1e-14));
  CHECK(l.verify() <= 1e-12);
}

TEST_CASE("zero velocity boost is the identity") {
  const auto l = LorentzTransform::boost({0, 0, 0}, 1.0);
  CHECK((l.matrix() - Mat4::identity()).max_abs() == 0.0);
}

TEST_CASE("boost rejects superluminal speed") {
  CHECK_THROWS_AS(LorentzTransform::boost({1.0, 0, 0}, 1.0), SpeedNotSubluminal);
  CHECK_THROWS_AS(LorentzTransform::boost({2.0, 0, 0}, 1.0), SpeedNotSubluminal);
}

TEST_CASE("boost composed with its inverse is the identity") {
  const Vec3 v{0.3, -0.44, 0.2};
  const auto fwd = LorentzTransform::boost(v, 1.0);
  const auto bwd = LorentzTransform::boost(-v, 1.0);
  CHECK((compose(fwd, bwd).matrix() - Mat4::identity()).max_abs() <= 1e-12);
}

TEST_CASE("collinear boost composition matches velocity addition") {
  // oracle: (b1 + b2) / (1 + b1 b2)
  const double b1 = 0.5, b2 = 0.5;
  const auto l = compose(LorentzTransform::boost({b1, 0, 0}, 1.0),
                         LorentzTransform::boost({b2, 0, 0}, 1.0));
  const double beta = -l.matrix()(0, 3) / l.matrix()(0, 0);
  CHECK(beta == doctest::Approx((b1 + b2) / (1 + b1 * b2)).epsilon(1e-14));
  CHECK(l.verify() <= 1e-12);
}

TEST_CASE("from_matrix rejects a non-Lorentz matrix") {
  Mat4 bad = Mat4::identity();
  bad(0, 0) = 1.5;
  CHECK_THROWS_AS(LorentzTransform::from_matrix(bad), NotLorentz);
  CHECK(LorentzTransform::identity().verify() == 0.0);
}

TEST_CASE("group property over random composites") {
  for (int i = 0; i < 200; ++i) {
    const auto l = compose(random_boost(0.9), random_boost(0.9));
    CHECK(l.verify() <= 10 * kLorentzTol);
  }
}

TEST_CASE("inner product and classification are invariant") {
  for (int i = 0; i < 500; ++i) {
    const Vec4 v = random_vec4();
    const Vec4 w = random_vec4();
    const auto l = random_boost(0.99);
    const double before = inner4(v, w);
    const double after = inner4(l.apply_vector(v), l.apply_vector(w));
    CHECK(std::abs(after - before) <= 1e-10 * std::max(1.0, std::abs(before)));
    if (std::abs(inner4(v, v)) > 1e-11)
      CHECK(classify(l.apply_vector(v)) == classify(v));
  }
}

TEST_CASE("flat metric components survive any transformation") {
  GeneralTensor d(0, 2);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) d.at({a, b}) = minkowski(a, b);
  for (int i = 0; i < 20; ++i) {
    const auto out = transform_tensor(d, random_boost(0.95));
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        CHECK(out.at({a, b}) == doctest::Approx(minkowski(a, b)).epsilon(1e-12));
  }
}

TEST_CASE("identity transform leaves a random tensor unchanged") {
  GeneralTensor t(1, 2);
  for (auto& v : t.components()) v = uniform(-2, 2);
  const auto out = transform_tensor(t, LorentzTransform::identity());
  for (std::size_t i = 0; i < t.components().size(); ++i)
    CHECK(out.components()[i] == t.components()[i]);
}

TEST_CASE("scalars are invariant") {
  GeneralTensor s(0, 0);
  s.components()[0] = 3.25;
  const auto out = transform_tensor(s, random_boost(0.9));
  CHECK(out.components()[0] == 3.25);
}

TEST_CASE("rank-1 transform agrees with direct matrix application") {
  const auto l = random_boost(0.8);
  const Vec4 v = random_vec4();
  GeneralTensor t(1, 0);
  for (int a = 0; a < 4; ++a) t.at({a}) = v[a];
  const auto out = transform_tensor(t, l);
  const Vec4 direct = l.apply_vector(v);
  for (int a = 0; a < 4; ++a)
    CHECK(out.at({a}) == doctest::Approx(direct[a]).epsilon(1e-13));
}

TEST_CASE("tensor order is capped at four") {
  CHECK_THROWS_AS(GeneralTensor(3, 2), Error);
  CHECK_NOTHROW(GeneralTensor(2, 2));
}

TEST_CASE("epsilon cross product") {
  const Vec3 e1{1, 0, 0}, e2{0, 1, 0};
  const Vec3 r = epsilon_cross(e1, e2);
  CHECK(r[0] == 0.0);
  CHECK(r[1] == 0.0);
  CHECK(r[2] == 1.0);

  const Vec3 v{0.3, -0.7, 1.1};
  const Vec3 z = epsilon_cross(v, v);
  CHECK(norm(z) == 0.0);
}

TEST_CASE("curl of a rotational field at the origin") {
  // analytic oracle: curl of (-y, x, 0) is (0, 0, 2)
  auto b = [](const Vec3& x) { return Vec3{-x[1], x[0], 0.0}; };
  const Vec3 r = epsilon_curl(b, {0, 0, 0}, 1e-4);
  CHECK(r[0] == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(r[1] == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(r[2] == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("wave operator") {
  auto constant = [](const Vec4&) { return 4.2; };
  CHECK(dalembertian(constant, {0.1, 0.2, 0.3, 0.4}, 1e-3) == 0.0);

  // null plane wave is annihilated
  const Vec3 k{0.3, -0.4, 1.2};
  const double omega = norm(k);
  auto wave = [k, omega](const Vec4& x) {
    return std::sin(dot(k, x.spatial()) - omega * x[3]);
  };
  CHECK(std::abs(dalembertian(wave, {0.3, 0.1, -0.2, 0.7}, 1e-4)) <= 1e-7);

  auto quad = [](const Vec4& x) { return x[0] * x[0]; };
  CHECK(dalembertian(quad, {0.5, 0, 0, 0}, 1e-4) == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("wave operator is boost invariant via the chain rule") {
  auto w = [](const Vec4& x) {
    return std::sin(0.7 * x[0] + 0.2 * x[1] - 0.3 * x[2] - 0.9 * x[3]) +
           0.3 * std::cos(0.5 * x[2] + 0.4 * x[3]);
  };
  const auto l = LorentzTransform::boost({0.5, 0.2, -0.1}, 1.0);
  const auto inv = l.inverse();
  auto w_hat = [&w, &inv](const Vec4& xh) { return w(inv.apply(xh)); };
  const Vec4 x0{0.3, -0.2, 0.5, 0.1};
  CHECK(dalembertian(w, x0, 1e-4) ==
        doctest::Approx(dalembertian(w_hat, l.apply(x0), 1e-4)).epsilon(1e-5));
}

TEST_CASE("classification zero band scales with the vector") {
  // borderline vector stays null after scaling because the band is relative
  const Vec4 almost_null{1.0, 0.0, 0.0, 1.0 + 1e-14};
  CHECK(classify(almost_null) == CausalClass::Null);
  const Vec4 scaled = almost_null * 1e6;
  CHECK(classify(scaled) == CausalClass::Null);
}
