#include "klts/charts.hpp"

#include <algorithm>
#include <cmath>

#include "klts/error.hpp"

namespace klts {

bool contains(const Box3& outer, const Box3& inner) {
  for (std::size_t i = 0; i < 3; ++i)
    if (inner.lo[i] < outer.lo[i] || inner.hi[i] > outer.hi[i]) return false;
  return true;
}

bool contains(const Rect2& outer, const Rect2& inner) {
  for (std::size_t i = 0; i < 2; ++i)
    if (inner.lo[i] < outer.lo[i] || inner.hi[i] > outer.hi[i]) return false;
  return true;
}

namespace {

/// d^k/dt^k of t^p.
double mono_deriv(double t, int p, int k) {
  if (k > p) return 0.0;
  double coef = 1.0;
  for (int i = 0; i < k; ++i) coef *= static_cast<double>(p - i);
  return coef * std::pow(t, p - k);
}

Box3 intersect(const Box3& a, const Box3& b) {
  Box3 r;
  for (std::size_t i = 0; i < 3; ++i) {
    r.lo[i] = std::max(a.lo[i], b.lo[i]);
    r.hi[i] = std::min(a.hi[i], b.hi[i]);
  }
  return r;
}

Rect2 intersect(const Rect2& a, const Rect2& b) {
  Rect2 r;
  for (std::size_t i = 0; i < 2; ++i) {
    r.lo[i] = std::max(a.lo[i], b.lo[i]);
    r.hi[i] = std::min(a.hi[i], b.hi[i]);
  }
  return r;
}

// ---- volume ----------------------------------------------------------------

class AffineVolume final : public VolumeChart {
public:
  AffineVolume(const Mat3& a, const Vec3& c, const Box3& dom) : a_(a), c_(c), dom_(dom) {}
  VolumeJet eval(const Vec3& xi) const override {
    VolumeJet j{};
    j.x = a_ * xi + c_;
    for (std::size_t i = 0; i < 3; ++i) j.d[i] = a_.column(i);
    return j;
  }
  Box3 domain() const override { return dom_; }

private:
  Mat3 a_;
  Vec3 c_;
  Box3 dom_;
};

class Cylindrical final : public VolumeChart {
public:
  explicit Cylindrical(const Box3& dom) : dom_(dom) {}
  VolumeJet eval(const Vec3& xi) const override {
    const double r = xi[0], c = std::cos(xi[1]), s = std::sin(xi[1]);
    VolumeJet j{};
    j.x = Vec3{{r * c, r * s, xi[2]}};
    j.d[0] = Vec3{{c, s, 0.0}};
    j.d[1] = Vec3{{-r * s, r * c, 0.0}};
    j.d[2] = Vec3{{0.0, 0.0, 1.0}};
    j.dd[0][1] = j.dd[1][0] = Vec3{{-s, c, 0.0}};
    j.dd[1][1] = Vec3{{-r * c, -r * s, 0.0}};
    return j;
  }
  Box3 domain() const override { return dom_; }

private:
  Box3 dom_;
};

class PolynomialVolume final : public VolumeChart {
public:
  PolynomialVolume(std::vector<Vec3> coeffs, const Box3& dom) : coeffs_(std::move(coeffs)), dom_(dom) {
    if (coeffs_.size() != volume_monomials().size())
      fail(ErrorKind::InvalidArgument, "polynomial volume chart needs 20 coefficient vectors");
  }
  VolumeJet eval(const Vec3& xi) const override {
    VolumeJet j{};
    const auto& monos = volume_monomials();
    for (std::size_t m = 0; m < monos.size(); ++m) {
      const auto& e = monos[m];
      const Vec3& a = coeffs_[m];
      auto term = [&](std::array<int, 3> k) {
        return mono_deriv(xi[0], e[0], k[0]) * mono_deriv(xi[1], e[1], k[1]) * mono_deriv(xi[2], e[2], k[2]);
      };
      j.x += term({0, 0, 0}) * a;
      for (std::size_t i = 0; i < 3; ++i) {
        std::array<int, 3> ki{0, 0, 0};
        ++ki[i];
        j.d[i] += term(ki) * a;
        for (std::size_t l = 0; l < 3; ++l) {
          std::array<int, 3> kil = ki;
          ++kil[l];
          j.dd[i][l] += term(kil) * a;
        }
      }
    }
    return j;
  }
  Box3 domain() const override { return dom_; }

private:
  std::vector<Vec3> coeffs_;
  Box3 dom_;
};

class TransformedVolume final : public VolumeChart {
public:
  TransformedVolume(VolumeChartPtr base, const Mat3& m, const Vec3& c) : base_(std::move(base)), m_(m), c_(c) {}
  VolumeJet eval(const Vec3& xi) const override {
    VolumeJet j = base_->eval(xi);
    j.x = m_ * j.x + c_;
    for (std::size_t i = 0; i < 3; ++i) {
      j.d[i] = m_ * j.d[i];
      for (std::size_t l = 0; l < 3; ++l) j.dd[i][l] = m_ * j.dd[i][l];
    }
    return j;
  }
  Box3 domain() const override { return base_->domain(); }

private:
  VolumeChartPtr base_;
  Mat3 m_;
  Vec3 c_;
};

class SumVolume final : public VolumeChart {
public:
  SumVolume(VolumeChartPtr a, VolumeChartPtr b, double s) : a_(std::move(a)), b_(std::move(b)), s_(s) {}
  VolumeJet eval(const Vec3& xi) const override {
    VolumeJet ja = a_->eval(xi);
    const VolumeJet jb = b_->eval(xi);
    ja.x += s_ * jb.x;
    for (std::size_t i = 0; i < 3; ++i) {
      ja.d[i] += s_ * jb.d[i];
      for (std::size_t l = 0; l < 3; ++l) ja.dd[i][l] += s_ * jb.dd[i][l];
    }
    return ja;
  }
  Box3 domain() const override { return intersect(a_->domain(), b_->domain()); }

private:
  VolumeChartPtr a_, b_;
  double s_;
};

// ---- surface ---------------------------------------------------------------

class Plane final : public SurfaceChart {
public:
  Plane(const Vec3& o, const Vec3& u, const Vec3& v, const Rect2& dom) : o_(o), u_(u), v_(v), dom_(dom) {}
  SurfaceJet eval(const Vec2& xi) const override {
    SurfaceJet j{};
    j.x = o_ + xi[0] * u_ + xi[1] * v_;
    j.d = {u_, v_};
    return j;
  }
  Rect2 domain() const override { return dom_; }

private:
  Vec3 o_, u_, v_;
  Rect2 dom_;
};

class Cylinder final : public SurfaceChart {
public:
  Cylinder(double r, const Rect2& dom) : r_(r), dom_(dom) {}
  SurfaceJet eval(const Vec2& xi) const override {
    const double c = std::cos(xi[0]), s = std::sin(xi[0]);
    SurfaceJet j{};
    j.x = Vec3{{r_ * c, r_ * s, xi[1]}};
    j.d[0] = Vec3{{-r_ * s, r_ * c, 0.0}};
    j.d[1] = Vec3{{0.0, 0.0, 1.0}};
    j.dd[0][0] = Vec3{{-r_ * c, -r_ * s, 0.0}};
    return j;
  }
  Rect2 domain() const override { return dom_; }

private:
  double r_;
  Rect2 dom_;
};

class Sphere final : public SurfaceChart {
public:
  Sphere(double r, const Rect2& dom) : r_(r), dom_(dom) {}
  SurfaceJet eval(const Vec2& xi) const override {
    const double st = std::sin(xi[0]), ct = std::cos(xi[0]);
    const double sp = std::sin(xi[1]), cp = std::cos(xi[1]);
    SurfaceJet j{};
    j.x = r_ * Vec3{{st * cp, st * sp, ct}};
    j.d[0] = r_ * Vec3{{ct * cp, ct * sp, -st}};
    j.d[1] = r_ * Vec3{{-st * sp, st * cp, 0.0}};
    j.dd[0][0] = -1.0 * j.x;
    j.dd[0][1] = j.dd[1][0] = r_ * Vec3{{-ct * sp, ct * cp, 0.0}};
    j.dd[1][1] = r_ * Vec3{{-st * cp, -st * sp, 0.0}};
    return j;
  }
  Rect2 domain() const override { return dom_; }

private:
  double r_;
  Rect2 dom_;
};

class Torus final : public SurfaceChart {
public:
  Torus(double big, double small, const Rect2& dom) : big_(big), small_(small), dom_(dom) {}
  SurfaceJet eval(const Vec2& xi) const override {
    const double cu = std::cos(xi[0]), su = std::sin(xi[0]);
    const double cv = std::cos(xi[1]), sv = std::sin(xi[1]);
    const double w = big_ + small_ * cv;
    SurfaceJet j{};
    j.x = Vec3{{w * cu, w * su, small_ * sv}};
    j.d[0] = Vec3{{-w * su, w * cu, 0.0}};
    j.d[1] = Vec3{{-small_ * sv * cu, -small_ * sv * su, small_ * cv}};
    j.dd[0][0] = Vec3{{-w * cu, -w * su, 0.0}};
    j.dd[0][1] = j.dd[1][0] = Vec3{{small_ * sv * su, -small_ * sv * cu, 0.0}};
    j.dd[1][1] = Vec3{{-small_ * cv * cu, -small_ * cv * su, -small_ * sv}};
    return j;
  }
  Rect2 domain() const override { return dom_; }

private:
  double big_, small_;
  Rect2 dom_;
};

class Monge final : public SurfaceChart {
public:
  Monge(std::vector<MongeTerm> terms, const Rect2& dom) : terms_(std::move(terms)), dom_(dom) {}
  SurfaceJet eval(const Vec2& xi) const override {
    double z = 0.0, z1 = 0.0, z2 = 0.0, z11 = 0.0, z12 = 0.0, z22 = 0.0;
    for (const auto& t : terms_) {
      auto m = [&](int k1, int k2) { return t.c * mono_deriv(xi[0], t.p, k1) * mono_deriv(xi[1], t.q, k2); };
      z += m(0, 0);
      z1 += m(1, 0);
      z2 += m(0, 1);
      z11 += m(2, 0);
      z12 += m(1, 1);
      z22 += m(0, 2);
    }
    SurfaceJet j{};
    j.x = Vec3{{xi[0], xi[1], z}};
    j.d[0] = Vec3{{1.0, 0.0, z1}};
    j.d[1] = Vec3{{0.0, 1.0, z2}};
    j.dd[0][0] = Vec3{{0.0, 0.0, z11}};
    j.dd[0][1] = j.dd[1][0] = Vec3{{0.0, 0.0, z12}};
    j.dd[1][1] = Vec3{{0.0, 0.0, z22}};
    return j;
  }
  Rect2 domain() const override { return dom_; }

private:
  std::vector<MongeTerm> terms_;
  Rect2 dom_;
};

class PolynomialSurface final : public SurfaceChart {
public:
  PolynomialSurface(std::vector<Vec3> coeffs, const Rect2& dom) : coeffs_(std::move(coeffs)), dom_(dom) {
    if (coeffs_.size() != surface_monomials().size())
      fail(ErrorKind::InvalidArgument, "polynomial surface chart needs 10 coefficient vectors");
  }
  SurfaceJet eval(const Vec2& xi) const override {
    SurfaceJet j{};
    const auto& monos = surface_monomials();
    for (std::size_t m = 0; m < monos.size(); ++m) {
      const auto& e = monos[m];
      const Vec3& a = coeffs_[m];
      auto term = [&](int k1, int k2) { return mono_deriv(xi[0], e[0], k1) * mono_deriv(xi[1], e[1], k2); };
      j.x += term(0, 0) * a;
      j.d[0] += term(1, 0) * a;
      j.d[1] += term(0, 1) * a;
      j.dd[0][0] += term(2, 0) * a;
      j.dd[0][1] += term(1, 1) * a;
      j.dd[1][1] += term(0, 2) * a;
    }
    j.dd[1][0] = j.dd[0][1];
    return j;
  }
  Rect2 domain() const override { return dom_; }

private:
  std::vector<Vec3> coeffs_;
  Rect2 dom_;
};

class TransformedSurface final : public SurfaceChart {
public:
  TransformedSurface(SurfaceChartPtr base, const Mat3& m, const Vec3& c) : base_(std::move(base)), m_(m), c_(c) {}
  SurfaceJet eval(const Vec2& xi) const override {
    SurfaceJet j = base_->eval(xi);
    j.x = m_ * j.x + c_;
    for (std::size_t a = 0; a < 2; ++a) {
      j.d[a] = m_ * j.d[a];
      for (std::size_t b = 0; b < 2; ++b) j.dd[a][b] = m_ * j.dd[a][b];
    }
    return j;
  }
  Rect2 domain() const override { return base_->domain(); }

private:
  SurfaceChartPtr base_;
  Mat3 m_;
  Vec3 c_;
};

class SumSurface final : public SurfaceChart {
public:
  SumSurface(SurfaceChartPtr a, SurfaceChartPtr b, double s) : a_(std::move(a)), b_(std::move(b)), s_(s) {}
  SurfaceJet eval(const Vec2& xi) const override {
    SurfaceJet ja = a_->eval(xi);
    const SurfaceJet jb = b_->eval(xi);
    ja.x += s_ * jb.x;
    for (std::size_t a = 0; a < 2; ++a) {
      ja.d[a] += s_ * jb.d[a];
      for (std::size_t b = 0; b < 2; ++b) ja.dd[a][b] += s_ * jb.dd[a][b];
    }
    return ja;
  }
  Rect2 domain() const override { return intersect(a_->domain(), b_->domain()); }

private:
  SurfaceChartPtr a_, b_;
  double s_;
};

class ConstantSurface final : public SurfaceChart {
public:
  ConstantSurface(const Vec3& v, const Rect2& dom) : v_(v), dom_(dom) {}
  SurfaceJet eval(const Vec2&) const override {
    SurfaceJet j{};
    j.x = v_;
    return j;
  }
  Rect2 domain() const override { return dom_; }

private:
  Vec3 v_;
  Rect2 dom_;
};

}  // namespace

const std::vector<std::array<int, 3>>& volume_monomials() {
  static const std::vector<std::array<int, 3>> monos = [] {
    std::vector<std::array<int, 3>> m;
    for (int deg = 0; deg <= 3; ++deg)
      for (int p = deg; p >= 0; --p)
        for (int q = deg - p; q >= 0; --q) m.push_back({p, q, deg - p - q});
    return m;
  }();
  return monos;
}

const std::vector<std::array<int, 2>>& surface_monomials() {
  static const std::vector<std::array<int, 2>> monos = [] {
    std::vector<std::array<int, 2>> m;
    for (int deg = 0; deg <= 3; ++deg)
      for (int p = deg; p >= 0; --p) m.push_back({p, deg - p});
    return m;
  }();
  return monos;
}

VolumeChartPtr affine_volume_chart(const Mat3& a, const Vec3& c, const Box3& domain) {
  return std::make_shared<AffineVolume>(a, c, domain);
}
VolumeChartPtr cylindrical_chart(const Box3& domain) { return std::make_shared<Cylindrical>(domain); }
VolumeChartPtr polynomial_volume_chart(const std::vector<Vec3>& coeffs, const Box3& domain) {
  return std::make_shared<PolynomialVolume>(coeffs, domain);
}
VolumeChartPtr transformed_volume_chart(VolumeChartPtr base, const Mat3& m, const Vec3& c) {
  return std::make_shared<TransformedVolume>(std::move(base), m, c);
}
VolumeChartPtr sum_volume_chart(VolumeChartPtr a, VolumeChartPtr b, double s) {
  return std::make_shared<SumVolume>(std::move(a), std::move(b), s);
}

SurfaceChartPtr plane_chart(const Vec3& origin, const Vec3& u, const Vec3& v, const Rect2& domain) {
  return std::make_shared<Plane>(origin, u, v, domain);
}
SurfaceChartPtr cylinder_chart(double radius, const Rect2& domain) {
  return std::make_shared<Cylinder>(radius, domain);
}
SurfaceChartPtr sphere_chart(double radius, const Rect2& domain) { return std::make_shared<Sphere>(radius, domain); }
SurfaceChartPtr torus_chart(double major, double minor, const Rect2& domain) {
  return std::make_shared<Torus>(major, minor, domain);
}
SurfaceChartPtr monge_chart(const std::vector<MongeTerm>& terms, const Rect2& domain) {
  return std::make_shared<Monge>(terms, domain);
}
SurfaceChartPtr polynomial_surface_chart(const std::vector<Vec3>& coeffs, const Rect2& domain) {
  return std::make_shared<PolynomialSurface>(coeffs, domain);
}
SurfaceChartPtr transformed_surface_chart(SurfaceChartPtr base, const Mat3& m, const Vec3& c) {
  return std::make_shared<TransformedSurface>(std::move(base), m, c);
}
SurfaceChartPtr sum_surface_chart(SurfaceChartPtr a, SurfaceChartPtr b, double s) {
  return std::make_shared<SumSurface>(std::move(a), std::move(b), s);
}
SurfaceChartPtr constant_surface_field(const Vec3& value, const Rect2& domain) {
  return std::make_shared<ConstantSurface>(value, domain);
}

}  // namespace klts
