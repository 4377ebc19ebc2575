#pragma once

#include <array>
#include <memory>
#include <vector>

#include "klts/linalg.hpp"

namespace klts {

struct Box3 {
  Vec3 lo;
  Vec3 hi;
};
struct Rect2 {
  Vec2 lo;
  Vec2 hi;
};

bool contains(const Box3& outer, const Box3& inner);
bool contains(const Rect2& outer, const Rect2& inner);

/// Value, first and second parametric derivatives of a map ξ ∈ ℝ³ → ℝ³.
struct VolumeJet {
  Vec3 x;
  std::array<Vec3, 3> d;                  // x,_i
  std::array<std::array<Vec3, 3>, 3> dd;  // x,_ij
};

/// Value, first and second parametric derivatives of a map ξ ∈ ℝ² → ℝ³.
struct SurfaceJet {
  Vec3 x;
  std::array<Vec3, 2> d;                  // x,_α
  std::array<std::array<Vec3, 2>, 2> dd;  // x,_αβ
};

/// Parametric map into ambient space with closed-form derivatives. Used for
/// placements (X, x, X_T) and for vector fields (δx, v) alike.
class VolumeChart {
public:
  virtual ~VolumeChart() = default;
  virtual VolumeJet eval(const Vec3& xi) const = 0;
  virtual Box3 domain() const = 0;
};

class SurfaceChart {
public:
  virtual ~SurfaceChart() = default;
  virtual SurfaceJet eval(const Vec2& xi) const = 0;
  virtual Rect2 domain() const = 0;
};

using VolumeChartPtr = std::shared_ptr<const VolumeChart>;
using SurfaceChartPtr = std::shared_ptr<const SurfaceChart>;

// ---- volume catalog --------------------------------------------------------

/// x = A ξ + c.
VolumeChartPtr affine_volume_chart(const Mat3& a, const Vec3& c, const Box3& domain);
/// (r, θ, z) ↦ (r cos θ, r sin θ, z).
VolumeChartPtr cylindrical_chart(const Box3& domain);
/// Polynomial map of total degree ≤ 3; `coeffs[m]` multiplies monomial m in
/// `volume_monomials()` order.
VolumeChartPtr polynomial_volume_chart(const std::vector<Vec3>& coeffs, const Box3& domain);
/// Exponent triples of the 20 monomials of degree ≤ 3 in ξ¹, ξ², ξ³.
const std::vector<std::array<int, 3>>& volume_monomials();
/// x = M·base(ξ) + c.
VolumeChartPtr transformed_volume_chart(VolumeChartPtr base, const Mat3& m, const Vec3& c = {});
/// a(ξ) + s·b(ξ) on the intersection of domains.
VolumeChartPtr sum_volume_chart(VolumeChartPtr a, VolumeChartPtr b, double s);

// ---- surface catalog -------------------------------------------------------

/// x = o + ξ¹ u + ξ² v.
SurfaceChartPtr plane_chart(const Vec3& origin, const Vec3& u, const Vec3& v, const Rect2& domain);
/// (θ, z) ↦ (R cos θ, R sin θ, z); normal points outward.
SurfaceChartPtr cylinder_chart(double radius, const Rect2& domain);
/// (θ, φ) ↦ R (sin θ cos φ, sin θ sin φ, cos θ); normal points outward.
SurfaceChartPtr sphere_chart(double radius, const Rect2& domain);
/// (u, v) ↦ ((R + r cos v) cos u, (R + r cos v) sin u, r sin v).
SurfaceChartPtr torus_chart(double major, double minor, const Rect2& domain);
/// Height field z = Σ c_pq (ξ¹)^p (ξ²)^q over the (x, y) plane.
struct MongeTerm {
  int p;
  int q;
  double c;
};
SurfaceChartPtr monge_chart(const std::vector<MongeTerm>& terms, const Rect2& domain);
/// Vector polynomial of total degree ≤ 3; `coeffs[m]` multiplies monomial m in
/// `surface_monomials()` order.
SurfaceChartPtr polynomial_surface_chart(const std::vector<Vec3>& coeffs, const Rect2& domain);
const std::vector<std::array<int, 2>>& surface_monomials();
/// x = M·base(ξ) + c.
SurfaceChartPtr transformed_surface_chart(SurfaceChartPtr base, const Mat3& m, const Vec3& c = {});
/// a(ξ) + s·b(ξ).
SurfaceChartPtr sum_surface_chart(SurfaceChartPtr a, SurfaceChartPtr b, double s);
/// Constant vector field, all derivatives zero.
SurfaceChartPtr constant_surface_field(const Vec3& value, const Rect2& domain);

}  // namespace klts
