#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>

namespace klts {

/// Fixed-size column vector of ambient or parametric components.
template <std::size_t N>
struct Vec {
  std::array<double, N> c{};

  constexpr double& operator[](std::size_t i) { return c[i]; }
  constexpr const double& operator[](std::size_t i) const { return c[i]; }

  static constexpr Vec unit(std::size_t i) {
    Vec v;
    v.c[i] = 1.0;
    return v;
  }
};

/// Row-major N×N matrix. `m(i, j)` is row i, column j.
template <std::size_t N>
struct Mat {
  std::array<double, N * N> c{};

  constexpr double& operator()(std::size_t i, std::size_t j) { return c[i * N + j]; }
  constexpr const double& operator()(std::size_t i, std::size_t j) const { return c[i * N + j]; }

  static constexpr Mat identity() {
    Mat m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }
  static constexpr Mat diagonal(const Vec<N>& d) {
    Mat m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = d[i];
    return m;
  }
  /// Matrix whose columns are the given vectors.
  static constexpr Mat from_columns(const std::array<Vec<N>, N>& cols) {
    Mat m;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) m(i, j) = cols[j][i];
    return m;
  }
  Vec<N> column(std::size_t j) const {
    Vec<N> v;
    for (std::size_t i = 0; i < N; ++i) v[i] = (*this)(i, j);
    return v;
  }
  Vec<N> row(std::size_t i) const {
    Vec<N> v;
    for (std::size_t j = 0; j < N; ++j) v[j] = (*this)(i, j);
    return v;
  }
};

using Vec2 = Vec<2>;
using Vec3 = Vec<3>;
using Mat2 = Mat<2>;
using Mat3 = Mat<3>;

// ---- vector arithmetic -----------------------------------------------------

template <std::size_t N>
constexpr Vec<N> operator+(Vec<N> a, const Vec<N>& b) {
  for (std::size_t i = 0; i < N; ++i) a[i] += b[i];
  return a;
}
template <std::size_t N>
constexpr Vec<N> operator-(Vec<N> a, const Vec<N>& b) {
  for (std::size_t i = 0; i < N; ++i) a[i] -= b[i];
  return a;
}
template <std::size_t N>
constexpr Vec<N> operator-(Vec<N> a) {
  for (auto& x : a.c) x = -x;
  return a;
}
template <std::size_t N>
constexpr Vec<N> operator*(double s, Vec<N> a) {
  for (auto& x : a.c) x *= s;
  return a;
}
template <std::size_t N>
constexpr Vec<N> operator*(Vec<N> a, double s) {
  return s * a;
}
template <std::size_t N>
constexpr Vec<N> operator/(Vec<N> a, double s) {
  for (auto& x : a.c) x /= s;
  return a;
}
template <std::size_t N>
constexpr Vec<N>& operator+=(Vec<N>& a, const Vec<N>& b) {
  for (std::size_t i = 0; i < N; ++i) a[i] += b[i];
  return a;
}
template <std::size_t N>
constexpr Vec<N>& operator-=(Vec<N>& a, const Vec<N>& b) {
  for (std::size_t i = 0; i < N; ++i) a[i] -= b[i];
  return a;
}

template <std::size_t N>
constexpr double dot(const Vec<N>& a, const Vec<N>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < N; ++i) s += a[i] * b[i];
  return s;
}
template <std::size_t N>
double norm(const Vec<N>& a) {
  return std::sqrt(dot(a, a));
}
template <std::size_t N>
double max_abs(const Vec<N>& a) {
  double m = 0.0;
  for (double x : a.c) m = std::fmax(m, std::fabs(x));
  return m;
}
template <std::size_t N>
Vec<N> normalized(const Vec<N>& a) {
  return a / norm(a);
}

constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
  return Vec3{{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]}};
}

// ---- matrix arithmetic -----------------------------------------------------

template <std::size_t N>
constexpr Mat<N> operator+(Mat<N> a, const Mat<N>& b) {
  for (std::size_t i = 0; i < N * N; ++i) a.c[i] += b.c[i];
  return a;
}
template <std::size_t N>
constexpr Mat<N> operator-(Mat<N> a, const Mat<N>& b) {
  for (std::size_t i = 0; i < N * N; ++i) a.c[i] -= b.c[i];
  return a;
}
template <std::size_t N>
constexpr Mat<N> operator-(Mat<N> a) {
  for (auto& x : a.c) x = -x;
  return a;
}
template <std::size_t N>
constexpr Mat<N> operator*(double s, Mat<N> a) {
  for (auto& x : a.c) x *= s;
  return a;
}
template <std::size_t N>
constexpr Mat<N> operator*(Mat<N> a, double s) {
  return s * a;
}
template <std::size_t N>
constexpr Mat<N> operator/(Mat<N> a, double s) {
  for (auto& x : a.c) x /= s;
  return a;
}
template <std::size_t N>
constexpr Mat<N>& operator+=(Mat<N>& a, const Mat<N>& b) {
  for (std::size_t i = 0; i < N * N; ++i) a.c[i] += b.c[i];
  return a;
}
template <std::size_t N>
constexpr Mat<N>& operator-=(Mat<N>& a, const Mat<N>& b) {
  for (std::size_t i = 0; i < N * N; ++i) a.c[i] -= b.c[i];
  return a;
}
template <std::size_t N>
constexpr Mat<N> operator*(const Mat<N>& a, const Mat<N>& b) {
  Mat<N> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t k = 0; k < N; ++k) {
      const double aik = a(i, k);
      for (std::size_t j = 0; j < N; ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}
template <std::size_t N>
constexpr Vec<N> operator*(const Mat<N>& a, const Vec<N>& v) {
  Vec<N> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) r[i] += a(i, j) * v[j];
  return r;
}

template <std::size_t N>
constexpr Mat<N> transpose(const Mat<N>& a) {
  Mat<N> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) r(j, i) = a(i, j);
  return r;
}
template <std::size_t N>
constexpr double trace(const Mat<N>& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < N; ++i) s += a(i, i);
  return s;
}
/// Double contraction A:B = A_ij B_ij.
template <std::size_t N>
constexpr double ddot(const Mat<N>& a, const Mat<N>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < N * N; ++i) s += a.c[i] * b.c[i];
  return s;
}
template <std::size_t N>
constexpr Mat<N> outer(const Vec<N>& a, const Vec<N>& b) {
  Mat<N> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) r(i, j) = a[i] * b[j];
  return r;
}
template <std::size_t N>
constexpr Mat<N> sym(const Mat<N>& a) {
  return 0.5 * (a + transpose(a));
}
template <std::size_t N>
constexpr Mat<N> skew(const Mat<N>& a) {
  return 0.5 * (a - transpose(a));
}
/// Frobenius norm.
template <std::size_t N>
double norm(const Mat<N>& a) {
  return std::sqrt(ddot(a, a));
}
template <std::size_t N>
double max_abs(const Mat<N>& a) {
  double m = 0.0;
  for (double x : a.c) m = std::fmax(m, std::fabs(x));
  return m;
}
template <std::size_t N>
double max_row_norm(const Mat<N>& a) {
  double m = 0.0;
  for (std::size_t i = 0; i < N; ++i) m = std::fmax(m, norm(a.row(i)));
  return m;
}
template <std::size_t N>
bool all_finite(const Mat<N>& a) {
  for (double x : a.c)
    if (!std::isfinite(x)) return false;
  return true;
}
template <std::size_t N>
bool all_finite(const Vec<N>& a) {
  for (double x : a.c)
    if (!std::isfinite(x)) return false;
  return true;
}

double det(const Mat2& a);
double det(const Mat3& a);
/// Plain inverse; callers are responsible for singularity checks.
Mat2 inverse(const Mat2& a);
Mat3 inverse(const Mat3& a);

/// Integer matrix power; negative exponents use the inverse.
template <std::size_t N>
Mat<N> power(const Mat<N>& a, int k) {
  Mat<N> base = k < 0 ? inverse(a) : a;
  Mat<N> r = Mat<N>::identity();
  for (int i = 0; i < std::abs(k); ++i) r = r * base;
  return r;
}

/// Symmetric eigendecomposition; `vectors` holds eigenvectors as columns.
template <std::size_t N>
struct SymmetricEigen {
  Vec<N> values;
  Mat<N> vectors;
  int sweeps = 0;
};

/// Cyclic Jacobi. Stops once the off-diagonal Frobenius norm drops below
/// `off_tol` times the matrix norm or after `max_sweeps`. Values are sorted
/// descending, ties keep first-index order.
SymmetricEigen<2> jacobi_eigen(const Mat2& a, double off_tol = 1e-14, int max_sweeps = 30);
SymmetricEigen<3> jacobi_eigen(const Mat3& a, double off_tol = 1e-14, int max_sweeps = 30);

/// f applied to the spectrum of a symmetric matrix.
template <std::size_t N>
Mat<N> spectral_function(const Mat<N>& a, const std::function<double(double)>& f) {
  const auto e = jacobi_eigen(a);
  Mat<N> r;
  for (std::size_t k = 0; k < N; ++k) {
    const Vec<N> v = e.vectors.column(k);
    r += f(e.values[k]) * outer(v, v);
  }
  return r;
}

/// exp of a symmetric matrix through its spectrum.
Mat3 sym_exp(const Mat3& a);

}  // namespace klts
