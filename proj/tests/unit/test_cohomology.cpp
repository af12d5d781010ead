#include <gtest/gtest.h>

#include "hopfkit/catalog.hpp"
#include "hopfkit/cohomology.hpp"

using namespace hopfkit;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::prime(2);
const FieldSpec F3 = FieldSpec::prime(3);

using Dims = std::vector<std::size_t>;

// Klein cocycle on Z2^2 x Z3, trivial on the Z3 factor.
CocycleSlice klein_alpha_with_z3(FieldSpec f) {
  auto l = cyclic_product({2, 2, 3});
  auto v = cyclic_product({2, 2});
  return extend_cocycle_trivially(cocycle_from_projective_rep(v, klein_projective_rep(*v, f)), l, {0, 1});
}

}  // namespace

TEST(Cohomology, CyclicOfOrderTwo) {
  auto z2 = cyclic_product({2});
  EXPECT_EQ(group_cohomology_dims(trivial_module(group_algebra(z2, F2)), 3).dims, (Dims{1, 1, 1, 1}));
  EXPECT_EQ(group_cohomology_dims(trivial_module(group_algebra(z2, Q)), 3).dims, (Dims{1, 0, 0, 0}));
  // free modules are acyclic
  EXPECT_EQ(group_cohomology_dims(regular_module(group_algebra(z2, F2)), 2).dims, (Dims{1, 0, 0}));
  EXPECT_EQ(hochschild_dims(group_algebra(z2, Q), 2).dims, (Dims{2, 0, 0}));
  EXPECT_EQ(hochschild_dims(group_algebra(z2, F2), 2).dims, (Dims{2, 2, 2}));
}

TEST(Cohomology, KleinFourTrivialCoefficients) {
  auto v = cyclic_product({2, 2});
  auto c = group_cohomology_dims(trivial_module(group_algebra(v, F2)), 3);
  // Kunneth: dim H^n = n + 1
  EXPECT_EQ(c.dims, (Dims{1, 2, 3, 4}));
  EXPECT_TRUE(c.d_squared_zero);
  EXPECT_EQ(c.cochain_dims, (Dims{1, 3, 9, 27, 81}));
  EXPECT_EQ(group_cohomology_dims(trivial_module(group_algebra(cyclic_product({3}), F3)), 2).dims, (Dims{1, 1, 1}));
}

TEST(Cohomology, HochschildDegreeZeroIsCenter) {
  std::vector<AlgebraPtr> algebras{taft_algebra(2, Q), group_algebra(std::make_shared<const FiniteGroup>(make_symmetric_group(3)), Q),
                                   dual_group_algebra(cyclic_product({3}), Q), truncated_polynomial_algebra(3, Q),
                                   twisted_group_algebra(klein_alpha_with_z3(F3))};
  for (const auto& a : algebras) EXPECT_EQ(hochschild_dims(a, 0).dims[0], center(*a).cols()) << a->name();
  // k^G is separable: no higher cohomology even though its unit is not a basis element
  EXPECT_EQ(hochschild_dims(dual_group_algebra(cyclic_product({3}), Q), 2).dims, (Dims{3, 0, 0}));
  // k[t]/(t^3) over Q: the periodic resolution leaves A, ker 3t^2, A / (3t^2)
  EXPECT_EQ(hochschild_dims(truncated_polynomial_algebra(3, Q), 2).dims, (Dims{3, 2, 2}));
}

TEST(Cohomology, AdjointModule) {
  auto v = cyclic_product({2, 2});
  auto alpha = cocycle_from_projective_rep(v, klein_projective_rep(*v, Q));
  auto ad = adjoint_module(alpha);
  const std::size_t a = v->index_of("a"), b = v->index_of("b");
  auto img = ad.module.action[a].col(b);
  for (std::size_t i = 0; i < img.size(); ++i) EXPECT_EQ(img[i], Scalar::from_int(Q, i == b ? -1 : 0));
  EXPECT_EQ(ad.summands.size(), 4u);
  for (std::size_t g = 0; g < 4; ++g) EXPECT_TRUE(ad.summands[0].action[g].is_identity());
  // trivial cocycle on an abelian group: trivial action everywhere
  auto triv = adjoint_module(CocycleSlice::trivial(v, F2));
  for (const auto& m : triv.module.action) EXPECT_TRUE(m.is_identity());
  EXPECT_THROW(adjoint_module(CocycleSlice(v, Q, std::vector<Scalar>(16, Scalar::from_int(Q, 2)))), InvalidCocycle);
}

TEST(Cohomology, IsoAd) {
  auto z2 = verify_iso_ad(CocycleSlice::trivial(cyclic_product({2}), F2), 2);
  EXPECT_TRUE(z2.report.ok) << z2.report.witness;
  EXPECT_EQ(z2.group, (Dims{2, 2, 2}));
  auto v = verify_iso_ad(CocycleSlice::trivial(cyclic_product({2, 2}), F2), 2);
  EXPECT_TRUE(v.report.ok) << v.report.witness;
  EXPECT_EQ(v.hochschild, (Dims{4, 8, 12}));
  // k^alpha (Z2^2 x Z3) = M_2(k) (x) kZ3 in characteristic 3; HH is Morita invariant
  auto k = verify_iso_ad(klein_alpha_with_z3(F3), 2);
  EXPECT_TRUE(k.report.ok) << k.report.witness;
  EXPECT_EQ(k.hochschild, (Dims{3, 3, 3}));
}

TEST(Cohomology, TrivialSummandEmbedding) {
  auto v = verify_h_embedding(CocycleSlice::trivial(cyclic_product({2, 2}), F2), 2);
  EXPECT_TRUE(v.report.ok);
  EXPECT_EQ(v.summand, (Dims{1, 2, 3}));
  auto q = verify_h_embedding(CocycleSlice::trivial(cyclic_product({2, 2}), Q), 2);
  EXPECT_EQ(q.summand, (Dims{1, 0, 0}));
  auto k = verify_h_embedding(klein_alpha_with_z3(F3), 2);
  EXPECT_TRUE(k.report.ok);
  EXPECT_EQ(k.trivial, (Dims{1, 1, 1}));
}

TEST(Cohomology, ResourceGuard) {
  CohomologyOptions opts;
  opts.max_cochain_dim = 100;
  EXPECT_THROW(hochschild_dims(group_algebra(cyclic_product({2, 3}), Q), 2, opts), ResourceGuard);
  EXPECT_THROW(group_cohomology_dims(regular_module(twisted_group_algebra(klein_alpha_with_z3(F3))), 1), Error);
}

TEST(Hochschild, KleinBlocksCenterViaBarComplex) {
  auto d = klein_crossed_data(FieldSpec::prime(3));
  auto k = crossed_coproduct(d.sigma, d.tau);
  const auto& info = coproduct_info(*k);
  // HH^0 = center, computed without center(): 36 from kL, 9 from k^alpha L
  EXPECT_EQ(hochschild_dims(info.blocks[d.g->identity()], 0).dims[0], 36u);
  EXPECT_EQ(hochschild_dims(info.blocks[d.g->index_of("h")], 0).dims[0], 9u);
}
