#ifndef MOMAP_LINALG_HPP
#define MOMAP_LINALG_HPP

#include <array>
#include <cmath>
#include <cstddef>

namespace momap {

/// Diagonal Minkowski metric, signature (+,-,-,-), c = 1 throughout.
inline constexpr std::array<double, 4> kEta = {1.0, -1.0, -1.0, -1.0};

/// Contravariant vector in the fixed global orthonormal frame.
struct FourVector {
  std::array<double, 4> c{};

  FourVector() = default;
  FourVector(double x0, double x1, double x2, double x3) : c{x0, x1, x2, x3} {}

  double operator[](int i) const { return c[static_cast<std::size_t>(i)]; }
  double& operator[](int i) { return c[static_cast<std::size_t>(i)]; }

  FourVector operator+(const FourVector& o) const {
    return {c[0] + o.c[0], c[1] + o.c[1], c[2] + o.c[2], c[3] + o.c[3]};
  }
  FourVector operator-(const FourVector& o) const {
    return {c[0] - o.c[0], c[1] - o.c[1], c[2] - o.c[2], c[3] - o.c[3]};
  }
  FourVector operator-() const { return {-c[0], -c[1], -c[2], -c[3]}; }
  FourVector operator*(double s) const { return {c[0] * s, c[1] * s, c[2] * s, c[3] * s}; }
  FourVector operator/(double s) const { return {c[0] / s, c[1] / s, c[2] / s, c[3] / s}; }
};

inline FourVector operator*(double s, const FourVector& v) { return v * s; }

/// eta(a, b) = a^0 b^0 - a^1 b^1 - a^2 b^2 - a^3 b^3.
inline double mink_dot(const FourVector& a, const FourVector& b) {
  return a.c[0] * b.c[0] - a.c[1] * b.c[1] - a.c[2] * b.c[2] - a.c[3] * b.c[3];
}

/// Covariant components v_a = eta_ab v^b.
inline FourVector lower_index(const FourVector& v) {
  return {v.c[0], -v.c[1], -v.c[2], -v.c[3]};
}

/// Contravariant components from covariant ones (eta is an involution).
inline FourVector raise_index(const FourVector& p) { return lower_index(p); }

/// sqrt(|eta(v,v)|).
inline double mink_norm(const FourVector& v) { return std::sqrt(std::abs(mink_dot(v, v))); }

inline double max_abs(const FourVector& v) {
  double m = 0.0;
  for (double x : v.c) m = std::max(m, std::abs(x));
  return m;
}

struct Matrix4 {
  // row-major entries m[i][j]
  std::array<std::array<double, 4>, 4> m{};

  double operator()(int i, int j) const {
    return m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  double& operator()(int i, int j) {
    return m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }

  static Matrix4 identity();
  static Matrix4 zero() { return {}; }

  Matrix4 operator+(const Matrix4& o) const;
  Matrix4 operator-(const Matrix4& o) const;
  Matrix4 operator*(double s) const;
  Matrix4 operator*(const Matrix4& o) const;
  FourVector operator*(const FourVector& v) const;

  Matrix4 transpose() const;
};

inline Matrix4 operator*(double s, const Matrix4& a) { return a * s; }

double max_abs(const Matrix4& a);
Matrix4 inverse(const Matrix4& a);  // throws InvariantViolation when singular
double determinant(const Matrix4& a);

/// Bivectors B^{ab} are stored as antisymmetric Matrix4 values.
using Bivector = Matrix4;

bool is_antisymmetric(const Matrix4& a, double tol = 0.0);

/// u wedge v, components u^a v^b - u^b v^a.
Bivector wedge(const FourVector& u, const FourVector& v);

/// (B . v)^a = B^{ab} eta_bc v^c  (contraction on the second slot).
FourVector contract_right(const Bivector& b, const FourVector& v);

/// Endomorphism Bhat^a_b = B^{ac} eta_cb of a bivector.
Matrix4 lower_second(const Bivector& b);

/// <A,B>_norm = (1/2) A^{ab} B^{cd} eta_ac eta_bd.
double bivector_inner_norm(const Bivector& a, const Bivector& b);

/// sqrt(|<B,B>_norm|).
double bivector_norm(const Bivector& b);

/// (L (x) L) B, components L^a_c L^b_d B^{cd}.
Bivector congruence(const Matrix4& l, const Bivector& b);

struct Matrix5 {
  std::array<std::array<double, 5>, 5> m{};

  double operator()(int i, int j) const {
    return m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  double& operator()(int i, int j) {
    return m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }

  static Matrix5 identity();
  Matrix5 operator*(const Matrix5& o) const;
  Matrix5 operator+(const Matrix5& o) const;
  Matrix5 operator*(double s) const;
};

double max_abs(const Matrix5& a);
Matrix5 inverse(const Matrix5& a);

/// exp(A) by scaling and squaring with a fixed-order Taylor kernel;
/// backward error below 1e-13 for norms up to ~20.
Matrix5 expm(const Matrix5& a);

}  // namespace momap

#endif
