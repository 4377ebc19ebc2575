#include "klts/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "klts/error.hpp"

namespace klts {

LineRule gauss_legendre(int order, double lo, double hi) {
  if (order < 1 || order > 64) fail(ErrorKind::InvalidArgument, "quadrature order must lie in [1, 64]");
  if (!(hi > lo)) fail(ErrorKind::InvalidArgument, "empty quadrature interval");
  const auto n = static_cast<std::size_t>(order);
  LineRule r;
  r.order = order;
  r.points.resize(n);
  r.weights.resize(n);
  const double half = 0.5 * (hi - lo);
  const double mid = 0.5 * (hi + lo);
  // Newton on P_n from the Chebyshev-like initial guess; nodes are symmetric.
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        const double kk = static_cast<double>(k);
        const double p2 = ((2.0 * kk - 1.0) * x * p1 - (kk - 1.0) * p0) / kk;
        p0 = p1;
        p1 = p2;
      }
      dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    r.points[i] = mid - half * x;
    r.points[n - 1 - i] = mid + half * x;
    r.weights[i] = r.weights[n - 1 - i] = half * w;
  }
  return r;
}

RectRule tensor_rule(const Rect2& domain, int order) {
  const LineRule u = gauss_legendre(order, domain.lo[0], domain.hi[0]);
  const LineRule v = gauss_legendre(order, domain.lo[1], domain.hi[1]);
  RectRule r;
  r.domain = domain;
  r.order = order;
  for (std::size_t i = 0; i < u.points.size(); ++i)
    for (std::size_t j = 0; j < v.points.size(); ++j)
      r.points.push_back({Vec2{{u.points[i], v.points[j]}}, u.weights[i] * v.weights[j]});
  return r;
}

BoxRule tensor_rule(const Box3& domain, int order) {
  std::array<LineRule, 3> l;
  for (std::size_t d = 0; d < 3; ++d) l[d] = gauss_legendre(order, domain.lo[d], domain.hi[d]);
  BoxRule r;
  r.domain = domain;
  r.order = order;
  for (std::size_t i = 0; i < l[0].points.size(); ++i)
    for (std::size_t j = 0; j < l[1].points.size(); ++j)
      for (std::size_t k = 0; k < l[2].points.size(); ++k)
        r.points.push_back({Vec3{{l[0].points[i], l[1].points[j], l[2].points[k]}},
                            l[0].weights[i] * l[1].weights[j] * l[2].weights[k]});
  return r;
}

namespace {

double pairwise(const double* x, std::size_t n) {
  if (n <= 8) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i];
    return s;
  }
  const std::size_t h = n / 2;
  return pairwise(x, h) + pairwise(x + h, n - h);
}

}  // namespace

double pairwise_sum(const std::vector<double>& terms) { return pairwise(terms.data(), terms.size()); }

}  // namespace klts
