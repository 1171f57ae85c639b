#include "relmech/curvilinear.hpp"

#include <cmath>

#include "relmech/fd.hpp"

namespace relmech::frames {

Chart Chart::cartesian() {
  Chart c;
  c.fwd_ = [](const Vec3& x) { return x; };
  c.inv_ = [](const Vec3& x) { return x; };
  c.jac_ = [](const Vec3&) { return Mat3::identity(); };
  return c;
}

Chart Chart::spherical() {
  Chart c;
  c.fwd_ = [](const Vec3& x) -> Vec3 {
    const double r = norm(x);
    return {r, std::acos(x[2] / r), std::atan2(x[1], x[0])};
  };
  c.inv_ = [](const Vec3& q) -> Vec3 {
    const double r = q[0], th = q[1], ph = q[2];
    return {r * std::sin(th) * std::cos(ph), r * std::sin(th) * std::sin(ph),
            r * std::cos(th)};
  };
  c.jac_ = [](const Vec3& q) -> Mat3 {
    const double r = q[0], th = q[1], ph = q[2];
    const double st = std::sin(th), ct = std::cos(th);
    const double sp = std::sin(ph), cp = std::cos(ph);
    Mat3 j;
    j(0, 0) = st * cp;
    j(0, 1) = r * ct * cp;
    j(0, 2) = -r * st * sp;
    j(1, 0) = st * sp;
    j(1, 1) = r * ct * sp;
    j(1, 2) = r * st * cp;
    j(2, 0) = ct;
    j(2, 1) = -r * st;
    j(2, 2) = 0.0;
    return j;
  };
  return c;
}

Chart Chart::cylindrical() {
  Chart c;
  c.fwd_ = [](const Vec3& x) -> Vec3 {
    return {std::hypot(x[0], x[1]), std::atan2(x[1], x[0]), x[2]};
  };
  c.inv_ = [](const Vec3& q) -> Vec3 {
    return {q[0] * std::cos(q[1]), q[0] * std::sin(q[1]), q[2]};
  };
  c.jac_ = [](const Vec3& q) -> Mat3 {
    const double rho = q[0], ph = q[1];
    Mat3 j;
    j(0, 0) = std::cos(ph);
    j(0, 1) = -rho * std::sin(ph);
    j(1, 0) = std::sin(ph);
    j(1, 1) = rho * std::cos(ph);
    j(2, 2) = 1.0;
    return j;
  };
  return c;
}

Chart Chart::user(Map to_curvilinear, Map to_cartesian, Jacobian jac, double fd_step) {
  Chart c;
  c.fwd_ = std::move(to_curvilinear);
  c.inv_ = std::move(to_cartesian);
  c.jac_ = std::move(jac);
  c.fd_step_ = fd_step;
  return c;
}

Mat3 Chart::jacobian(const Vec3& q) const {
  Mat3 j;
  if (jac_) {
    j = jac_(q);
  } else {
    for (int i = 0; i < 3; ++i) {
      Vec3 qp = q, qm = q;
      qp[i] += fd_step_;
      qm[i] -= fd_step_;
      const Vec3 xp = inv_(qp), xm = inv_(qm);
      for (int k = 0; k < 3; ++k) j(k, i) = (xp[k] - xm[k]) / (2.0 * fd_step_);
    }
  }
  if (std::abs(j.det()) < 1e-14)
    throw SingularJacobian("chart Jacobian is degenerate at this point");
  return j;
}

Mat3 induced_metric(const Chart& chart, const Vec3& xhat) {
  const Mat3 j = chart.jacobian(xhat);
  Mat3 g;
  for (int i = 0; i < 3; ++i)
    for (int jj = 0; jj < 3; ++jj) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k) s += j(k, i) * j(k, jj);
      g(i, jj) = s;
    }
  return g;
}

namespace {

Mat3 invert3(const Mat3& a) {
  const double d = a.det();
  if (std::abs(d) < 1e-14) throw SingularJacobian("induced metric is singular");
  Mat3 inv;
  inv(0, 0) = (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) / d;
  inv(0, 1) = (a(0, 2) * a(2, 1) - a(0, 1) * a(2, 2)) / d;
  inv(0, 2) = (a(0, 1) * a(1, 2) - a(0, 2) * a(1, 1)) / d;
  inv(1, 0) = (a(1, 2) * a(2, 0) - a(1, 0) * a(2, 2)) / d;
  inv(1, 1) = (a(0, 0) * a(2, 2) - a(0, 2) * a(2, 0)) / d;
  inv(1, 2) = (a(0, 2) * a(1, 0) - a(0, 0) * a(1, 2)) / d;
  inv(2, 0) = (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0)) / d;
  inv(2, 1) = (a(0, 1) * a(2, 0) - a(0, 0) * a(2, 1)) / d;
  inv(2, 2) = (a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0)) / d;
  return inv;
}

}  // namespace

Christoffel3 curvilinear_christoffel(const Chart& chart, const Vec3& xhat, double h) {
  std::array<Mat3, 3> dg;
  for (int l = 0; l < 3; ++l) {
    Vec3 qp = xhat, qm = xhat;
    qp[l] += h;
    qm[l] -= h;
    const Mat3 gp = induced_metric(chart, qp), gm = induced_metric(chart, qm);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        dg[static_cast<std::size_t>(l)](i, j) = (gp(i, j) - gm(i, j)) / (2.0 * h);
  }
  const Mat3 gi = invert3(induced_metric(chart, xhat));
  Christoffel3 out;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = b; c < 3; ++c) {
        double s = 0.0;
        for (int l = 0; l < 3; ++l)
          s += gi(a, l) * (dg[static_cast<std::size_t>(b)](c, l) +
                           dg[static_cast<std::size_t>(c)](l, b) -
                           dg[static_cast<std::size_t>(l)](b, c));
        out(a, b, c) = 0.5 * s;
        out(a, c, b) = out(a, b, c);
      }
  return out;
}

Tensor3::Tensor3(int contra_order, int cov_order) : r_(contra_order), s_(cov_order) {
  if (r_ < 0 || s_ < 0 || r_ + s_ > 4) throw Error("tensor order out of range");
  std::size_t n = 1;
  for (int i = 0; i < r_ + s_; ++i) n *= 3;
  comp_.assign(n, 0.0);
}

namespace {
std::size_t flat3(std::span<const int> idx) {
  std::size_t k = 0;
  for (int i : idx) k = 3 * k + static_cast<std::size_t>(i);
  return k;
}
}  // namespace

double& Tensor3::at(std::span<const int> idx) { return comp_[flat3(idx)]; }
double Tensor3::at(std::span<const int> idx) const { return comp_[flat3(idx)]; }

Tensor3 covariant_derivative(const Chart& chart, const TensorField3& t, const Vec3& xhat,
                             double h) {
  const Tensor3 t0 = t(xhat);
  const int n = t0.order();
  const Christoffel3 gamma = curvilinear_christoffel(chart, xhat, h);

  Tensor3 out(t0.contra_order(), t0.cov_order() + 1);
  std::vector<int> oi(static_cast<std::size_t>(n) + 1);
  std::vector<int> ti(static_cast<std::size_t>(n));
  const std::size_t total = out.components().size();
  for (std::size_t io = 0; io < total; ++io) {
    std::size_t rem = io;
    for (int k = n; k >= 0; --k) {
      oi[static_cast<std::size_t>(k)] = static_cast<int>(rem % 3);
      rem /= 3;
    }
    const int deriv_axis = oi[static_cast<std::size_t>(n)];
    for (int k = 0; k < n; ++k) ti[static_cast<std::size_t>(k)] = oi[static_cast<std::size_t>(k)];

    auto component = [&t, &ti](const Vec3& q) { return t(q).at(std::span<const int>(ti)); };
    double val = deriv1(component, xhat, deriv_axis, h);

    // one +Gamma per contravariant slot, one -Gamma per covariant slot
    for (int slot = 0; slot < n; ++slot) {
      const int held = ti[static_cast<std::size_t>(slot)];
      for (int m = 0; m < 3; ++m) {
        ti[static_cast<std::size_t>(slot)] = m;
        const double tc = t0.at(std::span<const int>(ti));
        if (slot < t0.contra_order())
          val += gamma(held, deriv_axis, m) * tc;
        else
          val -= gamma(m, deriv_axis, held) * tc;
      }
      ti[static_cast<std::size_t>(slot)] = held;
    }
    out.components()[io] = val;
  }
  return out;
}

std::array<double, 27> ricci_rotation(const Chart& chart, const Triad& triad,
                                      const Vec3& xhat, double h) {
  const Mat3 g = induced_metric(chart, xhat);
  const Mat3 legs = triad.legs(xhat);

  // orthonormality gate
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      double s = 0.0;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s += g(i, j) * legs(i, a) * legs(j, b);
      if (std::abs(s - (a == b ? 1.0 : 0.0)) > 1e-10)
        throw TriadNotOrthonormal("triad legs fail g_ij l^i_A l^j_B = delta_AB");
    }

  const Christoffel3 gamma = curvilinear_christoffel(chart, xhat, h);
  // nabla_k lambda^l_A = d_k lambda^l_A + {l;km} lambda^m_A
  double grad[3][3][3];  // [k][l][A]
  for (int k = 0; k < 3; ++k) {
    Vec3 qp = xhat, qm = xhat;
    qp[k] += h;
    qm[k] -= h;
    const Mat3 lp = triad.legs(qp), lm = triad.legs(qm);
    for (int l = 0; l < 3; ++l)
      for (int a = 0; a < 3; ++a) {
        double v = (lp(l, a) - lm(l, a)) / (2.0 * h);
        for (int m = 0; m < 3; ++m) v += gamma(l, k, m) * legs(m, a);
        grad[k][l][a] = v;
      }
  }

  std::array<double, 27> out{};
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) {
        double s = 0.0;
        for (int j = 0; j < 3; ++j)
          for (int l = 0; l < 3; ++l)
            for (int k = 0; k < 3; ++k)
              s += g(j, l) * grad[k][l][a] * legs(j, b) * legs(k, c);
        out[static_cast<std::size_t>(9 * a + 3 * b + c)] = s;
      }
  return out;
}

ScaleFactors ScaleFactors::spherical() {
  return {[](const Vec3&) { return 1.0; },
          [](const Vec3& q) { return q[0]; },
          [](const Vec3& q) { return q[0] * std::sin(q[1]); }};
}

ScaleFactors ScaleFactors::cylindrical() {
  return {[](const Vec3&) { return 1.0; },
          [](const Vec3& q) { return q[0]; },
          [](const Vec3&) { return 1.0; }};
}

ScaleFactors ScaleFactors::cartesian() {
  auto one = [](const Vec3&) { return 1.0; };
  return {one, one, one};
}

double ScaleFactors::at(int i, const Vec3& xhat) const {
  const double v = i == 0 ? h1(xhat) : (i == 1 ? h2(xhat) : h3(xhat));
  if (!(v > 0.0))
    throw DegenerateScaleFactor("scale factor h" + std::to_string(i + 1) +
                                " is not positive here");
  return v;
}

Triad ScaleFactors::triad() const {
  ScaleFactors s = *this;
  return Triad{[s](const Vec3& q) {
    Mat3 legs;
    for (int i = 0; i < 3; ++i) legs(i, i) = 1.0 / s.at(i, q);
    return legs;
  }};
}

double OrthogonalOperators::factor(int i, const Vec3& xhat) const {
  return s_.at(i, xhat);
}

Vec3 OrthogonalOperators::grad_phys(const ScalarField3C& phi, const Vec3& xhat,
                                    double h) const {
  Vec3 out;
  for (int a = 0; a < 3; ++a) out[a] = deriv1(phi, xhat, a, h) / factor(a, xhat);
  return out;
}

double OrthogonalOperators::divergence(const VectorField3C& v_phys, const Vec3& xhat,
                                       double h) const {
  double out = 0.0;
  for (int i = 0; i < 3; ++i) {
    auto weighted = [this, &v_phys, i](const Vec3& q) {
      const double prod = s_.at(0, q) * s_.at(1, q) * s_.at(2, q);
      return prod * v_phys(q)[i] / s_.at(i, q);
    };
    out += deriv1(weighted, xhat, i, h);
  }
  return out / (factor(0, xhat) * factor(1, xhat) * factor(2, xhat));
}

Vec3 OrthogonalOperators::curl_phys(const VectorField3C& v_phys, const Vec3& xhat,
                                    double h) const {
  // coordinate curl eps^ijk d_j A_k / (h1 h2 h3) with the covariant
  // components A_k = h_k Aphys_k, then projected back to physical legs
  const double prod = factor(0, xhat) * factor(1, xhat) * factor(2, xhat);
  Vec3 out;
  for (int i = 0; i < 3; ++i) {
    double s = 0.0;
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        const int e = epsilon3(i, j, k);
        if (e == 0) continue;
        auto covariant = [this, &v_phys, k](const Vec3& q) {
          return s_.at(k, q) * v_phys(q)[k];
        };
        s += e * deriv1(covariant, xhat, j, h);
      }
    out[i] = factor(i, xhat) * s / prod;
  }
  return out;
}

double OrthogonalOperators::laplacian(const ScalarField3C& phi, const Vec3& xhat,
                                      double h) const {
  double out = 0.0;
  for (int a = 0; a < 3; ++a) {
    auto flux = [this, &phi, a, h](const Vec3& q) {
      const double prod = s_.at(0, q) * s_.at(1, q) * s_.at(2, q);
      const double ha = s_.at(a, q);
      return (prod / (ha * ha)) * deriv1(phi, q, a, h);
    };
    out += deriv1(flux, xhat, a, h);
  }
  return out / (factor(0, xhat) * factor(1, xhat) * factor(2, xhat));
}

}  // namespace relmech::frames
