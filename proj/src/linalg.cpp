#include "klts/linalg.hpp"

#include <algorithm>
#include <numeric>

#include "klts/error.hpp"

namespace klts {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SingularMetric: return "SingularMetric";
    case ErrorKind::SingularMap: return "SingularMap";
    case ErrorKind::ConfigurationMismatch: return "ConfigurationMismatch";
    case ErrorKind::VarianceMismatch: return "VarianceMismatch";
    case ErrorKind::NotSkew: return "NotSkew";
    case ErrorKind::DegenerateProbes: return "DegenerateProbes";
    case ErrorKind::NegativeJacobian: return "NegativeJacobian";
    case ErrorKind::NotSPD: return "NotSPD";
    case ErrorKind::DegenerateTangents: return "DegenerateTangents";
    case ErrorKind::MalformedThermalMap: return "MalformedThermalMap";
    case ErrorKind::NonpositiveTemperature: return "NonpositiveTemperature";
    case ErrorKind::SingularCurvature: return "SingularCurvature";
    case ErrorKind::QuadratureDomainMismatch: return "QuadratureDomainMismatch";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ConfigInvalid: return "ConfigInvalid";
    case ErrorKind::UnknownScenario: return "UnknownScenario";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

double det(const Mat2& a) { return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0); }

double det(const Mat3& a) {
  return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
         a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
         a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

Mat2 inverse(const Mat2& a) {
  const double d = det(a);
  Mat2 r;
  r(0, 0) = a(1, 1) / d;
  r(0, 1) = -a(0, 1) / d;
  r(1, 0) = -a(1, 0) / d;
  r(1, 1) = a(0, 0) / d;
  return r;
}

Mat3 inverse(const Mat3& a) {
  const double d = det(a);
  Mat3 r;
  r(0, 0) = (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) / d;
  r(0, 1) = (a(0, 2) * a(2, 1) - a(0, 1) * a(2, 2)) / d;
  r(0, 2) = (a(0, 1) * a(1, 2) - a(0, 2) * a(1, 1)) / d;
  r(1, 0) = (a(1, 2) * a(2, 0) - a(1, 0) * a(2, 2)) / d;
  r(1, 1) = (a(0, 0) * a(2, 2) - a(0, 2) * a(2, 0)) / d;
  r(1, 2) = (a(0, 2) * a(1, 0) - a(0, 0) * a(1, 2)) / d;
  r(2, 0) = (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0)) / d;
  r(2, 1) = (a(0, 1) * a(2, 0) - a(0, 0) * a(2, 1)) / d;
  r(2, 2) = (a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0)) / d;
  return r;
}

namespace {

template <std::size_t N>
double off_diagonal_norm(const Mat<N>& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

template <std::size_t N>
SymmetricEigen<N> jacobi_impl(const Mat<N>& input, double off_tol, int max_sweeps) {
  Mat<N> a = sym(input);
  Mat<N> v = Mat<N>::identity();
  const double scale = norm(a);
  int sweep = 0;
  for (; sweep < max_sweeps; ++sweep) {
    if (off_diagonal_norm(a) <= off_tol * scale) break;
    for (std::size_t p = 0; p + 1 < N; ++p) {
      for (std::size_t q = p + 1; q < N; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // A <- Jᵀ A J with the rotation acting on rows/columns p, q.
        for (std::size_t k = 0; k < N; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < N; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (std::size_t k = 0; k < N; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
  std::array<std::size_t, N> order;
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i) > a(j, j); });
  SymmetricEigen<N> out;
  out.sweeps = sweep;
  for (std::size_t k = 0; k < N; ++k) {
    out.values[k] = a(order[k], order[k]);
    for (std::size_t i = 0; i < N; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

}  // namespace

SymmetricEigen<2> jacobi_eigen(const Mat2& a, double off_tol, int max_sweeps) {
  return jacobi_impl<2>(a, off_tol, max_sweeps);
}

SymmetricEigen<3> jacobi_eigen(const Mat3& a, double off_tol, int max_sweeps) {
  return jacobi_impl<3>(a, off_tol, max_sweeps);
}

Mat3 sym_exp(const Mat3& a) {
  return spectral_function<3>(a, [](double x) { return std::exp(x); });
}

}  // namespace klts
