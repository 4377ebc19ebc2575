#pragma once

#include <vector>

#include "klts/charts.hpp"

namespace klts {

/// Gauss-Legendre nodes and weights on [lo, hi]; exact for degree ≤ 2·order − 1.
struct LineRule {
  std::vector<double> points;
  std::vector<double> weights;
  int order = 0;
};
LineRule gauss_legendre(int order, double lo = -1.0, double hi = 1.0);

struct RectPoint {
  Vec2 xi;
  double w;
};
struct RectRule {
  std::vector<RectPoint> points;
  Rect2 domain;
  int order = 0;
};
RectRule tensor_rule(const Rect2& domain, int order);

struct BoxPoint {
  Vec3 xi;
  double w;
};
struct BoxRule {
  std::vector<BoxPoint> points;
  Box3 domain;
  int order = 0;
};
BoxRule tensor_rule(const Box3& domain, int order);

/// Pairwise (cascade) summation in input order; bit-reproducible for a fixed order.
double pairwise_sum(const std::vector<double>& terms);

}  // namespace klts
