#include <gtest/gtest.h>

#include "klts/error.hpp"
#include "klts/tensor_core.hpp"

namespace klts {
namespace {

Mat3 sample_matrix() {
  Mat3 m;
  const double v[9] = {1.2, 0.3, -0.1, 0.2, 0.9, 0.4, -0.3, 0.1, 1.5};
  for (std::size_t i = 0; i < 9; ++i) m.c[i] = v[i];
  return m;
}

BasisTriad skew_basis() {
  return build_basis({Vec3{{1.0, 0.2, 0.0}}, Vec3{{0.1, 1.3, 0.2}}, Vec3{{0.0, -0.3, 0.8}}});
}

TEST(TensorCore, DualBasisIsBiorthogonal) {
  const BasisTriad b = skew_basis();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      EXPECT_NEAR(dot(b.covariant(i), b.contravariant(j)), i == j ? 1.0 : 0.0, 1e-14);
  EXPECT_NEAR(max_abs(b.metric_co() * b.metric_contra() - Mat3::identity()), 0.0, 1e-14);
}

TEST(TensorCore, CoplanarTangentsAreRejected) {
  try {
    build_basis({Vec3{{1.0, 0.0, 0.0}}, Vec3{{0.0, 1.0, 0.0}}, Vec3{{1.0, 1.0, 0.0}}});
    FAIL() << "expected SingularMetric";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SingularMetric);
  }
}

TEST(TensorCore, VarianceRoundTripThroughCartesian) {
  const BasisTriad b = skew_basis();
  const Mat3 cart = sample_matrix();
  for (Variance v : {Variance::Contra, Variance::Co, Variance::MixedUpDown, Variance::MixedDownUp}) {
    const Mat3 comps = extract_components(cart, v, b);
    EXPECT_NEAR(max_abs(assemble_cartesian(comps, v, b) - cart), 0.0, 1e-13) << to_string(v);
  }
}

TEST(TensorCore, AdditionRequiresMatchingTags) {
  const Tensor2 a(sample_matrix(), Variance::Co, Config::Reference);
  const Tensor2 b(sample_matrix(), Variance::Contra, Config::Reference);
  const Tensor2 c(sample_matrix(), Variance::Co, Config::Current);
  try {
    (void)(a + b);
    FAIL() << "expected VarianceMismatch";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::VarianceMismatch);
  }
  try {
    (void)(a + c);
    FAIL() << "expected ConfigurationMismatch";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ConfigurationMismatch);
  }
}

TEST(TensorCore, PushForwardThenPullBackIsIdentity) {
  const TwoPointMap f(sample_matrix(), Config::Reference, Config::Current);
  const Mat3 t = sample_matrix() * transpose(sample_matrix());
  for (Variance v : {Variance::Contra, Variance::Co, Variance::MixedUpDown, Variance::MixedDownUp}) {
    const Tensor2 pushed = push_forward(Tensor2(t, v, Config::Reference), f);
    EXPECT_EQ(pushed.config(), Config::Current);
    const Tensor2 back = pull_back(pushed, f);
    EXPECT_EQ(back.config(), Config::Reference);
    EXPECT_NEAR(max_abs(back.components() - t), 0.0, 1e-13);
  }
}

TEST(TensorCore, PushForwardChecksConfiguration) {
  const TwoPointMap f(sample_matrix(), Config::Reference, Config::Current);
  try {
    (void)push_forward(Tensor2(Mat3::identity(), Variance::Co, Config::Current), f);
    FAIL() << "expected ConfigurationMismatch";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ConfigurationMismatch);
  }
}

TEST(TensorCore, ComposeRequiresChainedConfigurations) {
  const TwoPointMap ft(sample_matrix(), Config::Reference, Config::Intermediate);
  const TwoPointMap fe(transpose(sample_matrix()), Config::Intermediate, Config::Current);
  const TwoPointMap f = compose(fe, ft);
  EXPECT_EQ(f.domain(), Config::Reference);
  EXPECT_EQ(f.codomain(), Config::Current);
  EXPECT_NEAR(f.det(), ft.det() * fe.det(), 1e-13);
  EXPECT_THROW((void)compose(ft, fe), Error);
}

TEST(TensorCore, RearrangementsAreMutualInverses) {
  const Mat3 a = sample_matrix();
  const Mat3 b = transpose(sample_matrix()) * 0.5;
  for (Product p : {Product::Dyadic, Product::Plus, Product::Box}) {
    const Tensor4<3> x = tensor_product(a, b, p);
    EXPECT_EQ(max_abs(rearrange(rearrange(x, Rearrangement::R), Rearrangement::L) + (-1.0) * x), 0.0);
    EXPECT_EQ(max_abs(rearrange(rearrange(x, Rearrangement::L), Rearrangement::R) + (-1.0) * x), 0.0);
  }
}

TEST(TensorCore, ProductsActOnSecondOrderTensors) {
  const Mat3 a = sample_matrix();
  const Mat3 b = transpose(sample_matrix()) + Mat3::identity();
  const Mat3 x = sample_matrix() * sample_matrix();
  // (A ⊗ B) : X = (B : X) A, (A ⊕ B) : X = A Xᵀ Bᵀ, (A ⊠ B) : X = A X Bᵀ.
  EXPECT_NEAR(max_abs(ddot(tensor_product(a, b, Product::Dyadic), x) - ddot(b, x) * a), 0.0, 1e-12);
  EXPECT_NEAR(max_abs(ddot(tensor_product(a, b, Product::Plus), x) - a * transpose(x) * transpose(b)), 0.0, 1e-12);
  EXPECT_NEAR(max_abs(ddot(tensor_product(a, b, Product::Box), x) - a * x * transpose(b)), 0.0, 1e-12);
}

TEST(TensorCore, AxialVectorInvertsSpin) {
  const Vec3 w{{0.3, -1.1, 0.7}};
  const Mat3 s = spin_matrix(w);
  const Vec3 r{{0.2, 0.5, -0.4}};
  EXPECT_NEAR(max_abs(s * r - cross(w, r)), 0.0, 1e-15);
  EXPECT_NEAR(max_abs(axial_vector(s) - w), 0.0, 1e-15);
}

TEST(TensorCore, AxialVectorRejectsNonSkew) {
  try {
    (void)axial_vector(Mat3::identity());
    FAIL() << "expected NotSkew";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotSkew);
  }
}

TEST(TensorCore, PermutationSymbol) {
  EXPECT_EQ(permutation(0, 1, 2), 1);
  EXPECT_EQ(permutation(1, 2, 0), 1);
  EXPECT_EQ(permutation(1, 0, 2), -1);
  EXPECT_EQ(permutation(0, 0, 2), 0);
}

TEST(TensorCore, SurfaceProjectorRemovesNormal) {
  const Vec3 n = normalized(Vec3{{1.0, 2.0, -2.0}});
  const Mat3 p = surface_projector(n);
  EXPECT_NEAR(norm(p * n), 0.0, 1e-15);
  EXPECT_NEAR(max_abs(p * p - p), 0.0, 1e-15);
  EXPECT_NEAR(trace(p), 2.0, 1e-15);
}

}  // namespace
}  // namespace klts
