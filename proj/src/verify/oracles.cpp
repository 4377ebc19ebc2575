#include "klts/verify/oracles.hpp"

#include <cmath>

namespace klts {

double central_difference(const std::function<double(double)>& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

double five_point(const std::function<double(double)>& f, double x, double h) {
  return (-f(x + 2.0 * h) + 8.0 * f(x + h) - 8.0 * f(x - h) + f(x - 2.0 * h)) / (12.0 * h);
}

double relative_error(double a, double b, double floor) { return std::fabs(a - b) / std::fmax(std::fabs(b), floor); }

double max_abs_diff(const Tensor4<2>& a, const Tensor4<2>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.c.size(); ++i) m = std::fmax(m, std::fabs(a.c[i] - b.c[i]));
  return m;
}

Vec3 random_vec3(SplitMix64& rng, double scale) {
  Vec3 v;
  for (auto& x : v.c) x = scale * rng.normal();
  return v;
}

Vec3 random_unit(SplitMix64& rng) {
  for (;;) {
    const Vec3 v = random_vec3(rng);
    const double n = norm(v);
    if (n > 1e-3) return v / n;
  }
}

Mat3 random_mat3(SplitMix64& rng, double scale) {
  Mat3 m;
  for (auto& x : m.c) x = scale * rng.normal();
  return m;
}

Mat3 random_sym3(SplitMix64& rng, double scale) { return sym(random_mat3(rng, scale)); }

Mat2 random_sym2(SplitMix64& rng, double scale) {
  Mat2 m;
  m(0, 0) = scale * rng.normal();
  m(1, 1) = scale * rng.normal();
  m(0, 1) = m(1, 0) = scale * rng.normal();
  return m;
}

Mat3 random_deformation(SplitMix64& rng, double scale) {
  for (;;) {
    const Mat3 f = Mat3::identity() + random_mat3(rng, scale);
    if (det(f) > 0.2) return f;
  }
}

Mat3 random_rotation(SplitMix64& rng) {
  // Gram-Schmidt on Gaussian columns, then fix the orientation.
  const Vec3 a = random_unit(rng);
  Vec3 b = random_vec3(rng);
  b = normalized(b - dot(a, b) * a);
  return Mat3::from_columns({a, b, cross(a, b)});
}

Mat3 random_spd3(SplitMix64& rng, double scale) {
  const Mat3 q = random_rotation(rng);
  const Vec3 d{{std::exp(scale * rng.normal()), std::exp(scale * rng.normal()), std::exp(scale * rng.normal())}};
  return sym(q * Mat3::diagonal(d) * transpose(q));
}

Mat2 random_spd2(SplitMix64& rng, double scale) {
  const double th = rng.uniform(0.0, 6.283185307179586);
  const double c = std::cos(th), s = std::sin(th);
  const double d0 = std::exp(scale * rng.normal()), d1 = std::exp(scale * rng.normal());
  Mat2 m;
  m(0, 0) = c * c * d0 + s * s * d1;
  m(1, 1) = s * s * d0 + c * c * d1;
  m(0, 1) = m(1, 0) = c * s * (d0 - d1);
  return m;
}

Mat3 random_psd3(SplitMix64& rng, int rank) {
  Mat3 k;
  for (int r = 0; r < rank; ++r) {
    const Vec3 v = random_vec3(rng);
    k += outer(v, v);
  }
  return k;
}

VolumeChartPtr random_volume_chart(SplitMix64& rng, double scale) {
  const auto& mono = volume_monomials();
  std::vector<Vec3> coeffs(mono.size());
  for (std::size_t m = 0; m < mono.size(); ++m) {
    const int deg = mono[m][0] + mono[m][1] + mono[m][2];
    if (deg == 1) {
      for (std::size_t i = 0; i < 3; ++i) coeffs[m][i] = mono[m][i] == 1 ? 1.0 : 0.0;
      coeffs[m] += random_vec3(rng, scale);
    } else {
      coeffs[m] = random_vec3(rng, scale);
    }
  }
  return polynomial_volume_chart(coeffs, Box3{Vec3{{-0.5, -0.5, -0.5}}, Vec3{{0.5, 0.5, 0.5}}});
}

SurfaceChartPtr random_surface_chart(SplitMix64& rng, double scale) {
  const auto& mono = surface_monomials();
  std::vector<Vec3> coeffs(mono.size());
  for (std::size_t m = 0; m < mono.size(); ++m) {
    coeffs[m] = random_vec3(rng, scale);
    if (mono[m][0] == 1 && mono[m][1] == 0) coeffs[m][0] += 1.0;
    if (mono[m][0] == 0 && mono[m][1] == 1) coeffs[m][1] += 1.0;
  }
  return polynomial_surface_chart(coeffs, Rect2{Vec2{{-0.5, -0.5}}, Vec2{{0.5, 0.5}}});
}

SurfaceChartPtr random_surface_field(SplitMix64& rng, const Rect2& domain, double scale) {
  std::vector<Vec3> coeffs(surface_monomials().size());
  for (auto& c : coeffs) c = random_vec3(rng, scale);
  return polynomial_surface_chart(coeffs, domain);
}

VolumeChartPtr random_volume_field(SplitMix64& rng, const Box3& domain, double scale) {
  std::vector<Vec3> coeffs(volume_monomials().size());
  for (auto& c : coeffs) c = random_vec3(rng, scale);
  return polynomial_volume_chart(coeffs, domain);
}

Vec2 random_point(SplitMix64& rng, const Rect2& r, double margin) {
  Vec2 p;
  for (std::size_t i = 0; i < 2; ++i) p[i] = rng.uniform(r.lo[i] + margin, r.hi[i] - margin);
  return p;
}

Vec3 random_point(SplitMix64& rng, const Box3& b, double margin) {
  Vec3 p;
  for (std::size_t i = 0; i < 3; ++i) p[i] = rng.uniform(b.lo[i] + margin, b.hi[i] - margin);
  return p;
}

SurfaceJet fd_surface_jet(const SurfaceChart& c, const Vec2& xi, double h) {
  auto fd5 = [h](const auto& f) { return (-1.0 * f(2.0 * h) + 8.0 * f(h) - 8.0 * f(-h) + f(-2.0 * h)) / (12.0 * h); };
  auto d_at = [&](const Vec2& p, std::size_t al) {
    return fd5([&](double s) { return c.eval(p + s * Vec2::unit(al)).x; });
  };
  SurfaceJet j;
  j.x = c.eval(xi).x;
  for (std::size_t al = 0; al < 2; ++al) j.d[al] = d_at(xi, al);
  for (std::size_t al = 0; al < 2; ++al)
    for (std::size_t be = 0; be < 2; ++be)
      j.dd[al][be] = fd5([&](double s) { return d_at(xi + s * Vec2::unit(be), al); });
  for (std::size_t al = 0; al < 2; ++al)
    for (std::size_t be = 0; be < al; ++be) j.dd[al][be] = j.dd[be][al] = 0.5 * (j.dd[al][be] + j.dd[be][al]);
  return j;
}

}  // namespace klts
