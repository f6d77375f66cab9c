#include "momap/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "momap/errors.hpp"

namespace momap {

Matrix4 Matrix4::identity() {
  Matrix4 r;
  for (int i = 0; i < 4; ++i) r(i, i) = 1.0;
  return r;
}

Matrix4 Matrix4::operator+(const Matrix4& o) const {
  Matrix4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r(i, j) = (*this)(i, j) + o(i, j);
  return r;
}

Matrix4 Matrix4::operator-(const Matrix4& o) const {
  Matrix4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r(i, j) = (*this)(i, j) - o(i, j);
  return r;
}

Matrix4 Matrix4::operator*(double s) const {
  Matrix4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r(i, j) = (*this)(i, j) * s;
  return r;
}

Matrix4 Matrix4::operator*(const Matrix4& o) const {
  Matrix4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      double s = 0.0;
      for (int k = 0; k < 4; ++k) s += (*this)(i, k) * o(k, j);
      r(i, j) = s;
    }
  return r;
}

FourVector Matrix4::operator*(const FourVector& v) const {
  FourVector r;
  for (int i = 0; i < 4; ++i) {
    double s = 0.0;
    for (int k = 0; k < 4; ++k) s += (*this)(i, k) * v[k];
    r[i] = s;
  }
  return r;
}

Matrix4 Matrix4::transpose() const {
  Matrix4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r(i, j) = (*this)(j, i);
  return r;
}

double max_abs(const Matrix4& a) {
  double m = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m = std::max(m, std::abs(a(i, j)));
  return m;
}

namespace {

// Gauss-Jordan with partial pivoting, shared by the 4x4 and 5x5 inverses.
template <typename M, int N>
M gauss_jordan_inverse(const M& a) {
  M w = a;
  M inv{};
  for (int i = 0; i < N; ++i) inv(i, i) = 1.0;
  for (int col = 0; col < N; ++col) {
    int piv = col;
    for (int r = col + 1; r < N; ++r)
      if (std::abs(w(r, col)) > std::abs(w(piv, col))) piv = r;
    if (std::abs(w(piv, col)) < 1e-300) throw InvariantViolation("singular matrix");
    if (piv != col) {
      std::swap(w.m[static_cast<std::size_t>(piv)], w.m[static_cast<std::size_t>(col)]);
      std::swap(inv.m[static_cast<std::size_t>(piv)], inv.m[static_cast<std::size_t>(col)]);
    }
    const double d = w(col, col);
    for (int j = 0; j < N; ++j) {
      w(col, j) /= d;
      inv(col, j) /= d;
    }
    for (int r = 0; r < N; ++r) {
      if (r == col) continue;
      const double f = w(r, col);
      if (f == 0.0) continue;
      for (int j = 0; j < N; ++j) {
        w(r, j) -= f * w(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

}  // namespace

Matrix4 inverse(const Matrix4& a) { return gauss_jordan_inverse<Matrix4, 4>(a); }

double determinant(const Matrix4& a) {
  // LU with partial pivoting
  Matrix4 w = a;
  double det = 1.0;
  for (int col = 0; col < 4; ++col) {
    int piv = col;
    for (int r = col + 1; r < 4; ++r)
      if (std::abs(w(r, col)) > std::abs(w(piv, col))) piv = r;
    if (piv != col) {
      std::swap(w.m[static_cast<std::size_t>(piv)], w.m[static_cast<std::size_t>(col)]);
      det = -det;
    }
    if (w(col, col) == 0.0) return 0.0;
    det *= w(col, col);
    for (int r = col + 1; r < 4; ++r) {
      const double f = w(r, col) / w(col, col);
      for (int j = col; j < 4; ++j) w(r, j) -= f * w(col, j);
    }
  }
  return det;
}

bool is_antisymmetric(const Matrix4& a, double tol) {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (std::abs(a(i, j) + a(j, i)) > tol) return false;
  return true;
}

Bivector wedge(const FourVector& u, const FourVector& v) {
  Bivector r;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) r(a, b) = u[a] * v[b] - u[b] * v[a];
  return r;
}

FourVector contract_right(const Bivector& b, const FourVector& v) {
  const FourVector vl = lower_index(v);
  FourVector r;
  for (int a = 0; a < 4; ++a) {
    double s = 0.0;
    for (int c = 0; c < 4; ++c) s += b(a, c) * vl[c];
    r[a] = s;
  }
  return r;
}

Matrix4 lower_second(const Bivector& b) {
  Matrix4 r;
  for (int a = 0; a < 4; ++a)
    for (int c = 0; c < 4; ++c) r(a, c) = b(a, c) * kEta[static_cast<std::size_t>(c)];
  return r;
}

double bivector_inner_norm(const Bivector& a, const Bivector& b) {
  double s = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      s += a(i, j) * b(i, j) * kEta[static_cast<std::size_t>(i)] * kEta[static_cast<std::size_t>(j)];
  return 0.5 * s;
}

double bivector_norm(const Bivector& b) { return std::sqrt(std::abs(bivector_inner_norm(b, b))); }

Bivector congruence(const Matrix4& l, const Bivector& b) {
  // pairwise expansion keeps the result antisymmetric to the last bit
  Bivector r;
  for (int a = 0; a < 4; ++a)
    for (int c = a + 1; c < 4; ++c) {
      double s = 0.0;
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
          s += b(i, j) * (l(a, i) * l(c, j) - l(a, j) * l(c, i));
      r(a, c) = s;
      r(c, a) = -s;
    }
  return r;
}

Matrix5 Matrix5::identity() {
  Matrix5 r;
  for (int i = 0; i < 5; ++i) r(i, i) = 1.0;
  return r;
}

Matrix5 Matrix5::operator*(const Matrix5& o) const {
  Matrix5 r;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      double s = 0.0;
      for (int k = 0; k < 5; ++k) s += (*this)(i, k) * o(k, j);
      r(i, j) = s;
    }
  return r;
}

Matrix5 Matrix5::operator+(const Matrix5& o) const {
  Matrix5 r;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) r(i, j) = (*this)(i, j) + o(i, j);
  return r;
}

Matrix5 Matrix5::operator*(double s) const {
  Matrix5 r;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) r(i, j) = (*this)(i, j) * s;
  return r;
}

double max_abs(const Matrix5& a) {
  double m = 0.0;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) m = std::max(m, std::abs(a(i, j)));
  return m;
}

Matrix5 inverse(const Matrix5& a) { return gauss_jordan_inverse<Matrix5, 5>(a); }

Matrix5 expm(const Matrix5& a) {
  // scale so the scaled norm is below 1/4, Taylor to order 20, square back
  double norm = 0.0;
  for (int i = 0; i < 5; ++i) {
    double row = 0.0;
    for (int j = 0; j < 5; ++j) row += std::abs(a(i, j));
    norm = std::max(norm, row);
  }
  int s = 0;
  while (norm > 0.25 && s < 60) {
    norm *= 0.5;
    ++s;
  }
  Matrix5 scaled = a * std::ldexp(1.0, -s);
  Matrix5 result = Matrix5::identity();
  Matrix5 term = Matrix5::identity();
  for (int k = 1; k <= 20; ++k) {
    term = term * scaled;
    term = term * (1.0 / k);
    result = result + term;
  }
  for (int i = 0; i < s; ++i) result = result * result;
  return result;
}

}  // namespace momap
