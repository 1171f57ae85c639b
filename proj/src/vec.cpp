#include "relmech/vec.hpp"

#include <cmath>

namespace relmech {

bool invert(const Mat4& a, Mat4& out, double* det) {
  // Gauss-Jordan with partial pivoting on an augmented [A | I] system.
  double aug[4][8];
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) aug[i][j] = a(i, j);
    for (int j = 0; j < 4; ++j) aug[i][4 + j] = (i == j) ? 1.0 : 0.0;
  }
  double d = 1.0;
  for (int col = 0; col < 4; ++col) {
    int piv = col;
    for (int r = col + 1; r < 4; ++r)
      if (std::abs(aug[r][col]) > std::abs(aug[piv][col])) piv = r;
    if (aug[piv][col] == 0.0) {
      if (det) *det = 0.0;
      return false;
    }
    if (piv != col) {
      for (int j = 0; j < 8; ++j) std::swap(aug[piv][j], aug[col][j]);
      d = -d;
    }
    d *= aug[col][col];
    const double inv_p = 1.0 / aug[col][col];
    for (int j = 0; j < 8; ++j) aug[col][j] *= inv_p;
    for (int r = 0; r < 4; ++r) {
      if (r == col) continue;
      const double f = aug[r][col];
      if (f == 0.0) continue;
      for (int j = 0; j < 8; ++j) aug[r][j] -= f * aug[col][j];
    }
  }
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out(i, j) = aug[i][4 + j];
  if (det) *det = d;
  return true;
}

double det4(const Mat4& a) {
  // LU with partial pivoting, product of pivots.
  double m[4][4];
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m[i][j] = a(i, j);
  double d = 1.0;
  for (int col = 0; col < 4; ++col) {
    int piv = col;
    for (int r = col + 1; r < 4; ++r)
      if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
    if (m[piv][col] == 0.0) return 0.0;
    if (piv != col) {
      for (int j = 0; j < 4; ++j) std::swap(m[piv][j], m[col][j]);
      d = -d;
    }
    d *= m[col][col];
    for (int r = col + 1; r < 4; ++r) {
      const double f = m[r][col] / m[col][col];
      for (int j = col; j < 4; ++j) m[r][j] -= f * m[col][j];
    }
  }
  return d;
}

}  // namespace relmech
