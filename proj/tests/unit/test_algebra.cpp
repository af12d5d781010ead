#include <chrono>

#include <gtest/gtest.h>

#include "hopfkit/catalog.hpp"

using namespace hopfkit;

namespace {

const FieldSpec Q = FieldSpec::rationals();

std::size_t center_dim(const BasisAlgebra& a) { return center(a).cols(); }

}  // namespace

TEST(Algebra, GroupAndDualGroupAxioms) {
  auto s3 = std::make_shared<const FiniteGroup>(make_symmetric_group(3));
  auto kg = group_algebra(s3, Q);
  auto kg_dual = dual_group_algebra(s3, Q);
  EXPECT_EQ(kg->dim(), 6u);
  EXPECT_TRUE(check_hopf_axioms(*kg));
  EXPECT_TRUE(check_hopf_axioms(*kg_dual));
  // Z(kG) has dimension = number of conjugacy classes; k^G is commutative.
  EXPECT_EQ(center_dim(*kg), conjugacy_classes(*s3).size());
  EXPECT_EQ(center_dim(*kg_dual), 6u);
  auto l = cyclic_product({2, 3});
  EXPECT_EQ(center_dim(*group_algebra(l, FieldSpec::prime(5))), 6u);
}

TEST(Algebra, TaftAlgebras) {
  auto h4 = taft_algebra(2, Q);
  EXPECT_EQ(h4->dim(), 4u);
  EXPECT_EQ(h4->labels(), (std::vector<std::string>{"1", "x", "g", "gx"}));
  const auto x = SparseVec::single(h4->index_of("x"), Scalar::one(Q));
  const auto g = SparseVec::single(h4->index_of("g"), Scalar::one(Q));
  // xg = -gx, x^2 = 0, g^2 = 1
  EXPECT_EQ(h4->element_to_string(h4->multiply(x, g)), h4->element_to_string(scaled(h4->multiply(g, x), Scalar::from_int(Q, -1))));
  EXPECT_TRUE(h4->multiply(x, x).empty());
  EXPECT_EQ(h4->multiply(g, g).terms, h4->unit().terms);
  EXPECT_EQ(center_dim(*h4), 1u);
  auto t3 = taft_algebra(3, FieldSpec::cyclotomic(3));
  EXPECT_EQ(t3->dim(), 9u);
  EXPECT_EQ(center_dim(*t3), 1u);
  auto t3p = taft_algebra(3, FieldSpec::prime(7));
  EXPECT_TRUE(check_hopf_axioms(*t3p));
  EXPECT_THROW(taft_algebra(3, Q), UnsupportedRoot);
  EXPECT_THROW(taft_algebra(3, FieldSpec::prime(3)), UnsupportedRoot);
}

TEST(Algebra, QuantumElementaryAbelian) {
  auto a = quantum_elem_abelian(2, 2, Q);
  EXPECT_EQ(a->dim(), 16u);
  const auto* info = std::get_if<QeaInfo>(&a->info());
  ASSERT_NE(info, nullptr);
  EXPECT_EQ(info->m, 2u);
  EXPECT_EQ(a->label(a->dim() - 1), "g1x1g2x2");
  // tau(lambda)^2 = 0 and the map from k[t]/(t^2) is an injective algebra map
  auto te = qea_tau_element(a, {Scalar::one(Q), Scalar::one(Q)});
  EXPECT_TRUE(a->multiply(te.element, te.element).empty());
  EXPECT_EQ(te.element.terms.size(), 2u);
  EXPECT_THROW(qea_tau_element(a, {Scalar::zero(Q), Scalar::zero(Q)}), Error);
  EXPECT_THROW(qea_tau_element(a, {Scalar::one(Q)}), DimensionMismatch);
  auto emb = qea_nilpotent_embedding(a);
  EXPECT_EQ(emb.source->dim(), 4u);
  auto b = quantum_elem_abelian(3, 2, FieldSpec::cyclotomic(3));
  EXPECT_EQ(b->dim(), 81u);
  auto tb = qea_tau_element(b, {Scalar::one(b->field()), Scalar::from_int(b->field(), 2)});
  EXPECT_TRUE(b->multiply(b->multiply(tb.element, tb.element), tb.element).empty());
}

TEST(Algebra, TensorOfMixedFactors) {
  auto t = tensor_algebra(taft_algebra(2, Q), group_algebra(cyclic_product({3}), Q));
  EXPECT_EQ(t->dim(), 12u);
  EXPECT_TRUE(check_hopf_axioms(*t));
  EXPECT_EQ(center_dim(*t), 3u);
  EXPECT_THROW(tensor_algebra(taft_algebra(2, Q), taft_algebra(2, FieldSpec::prime(3))), FieldMismatch);
}

TEST(Algebra, SweedlerSwapSmash) {
  auto s = shift_smash(2);
  EXPECT_EQ(s.k->dim(), 32u);
  EXPECT_TRUE(check_hopf_axioms(*s.k));
  // blocks K p_1 and K p_h are both copies of T_2 (x) T_2 as algebras
  EXPECT_EQ(center_dim(*s.k), 2u);
  // a map that is not a Hopf automorphism is rejected
  auto base = s.base;
  auto g = s.g;
  Matrix bad = Matrix::identity(Q, 16);
  bad(1, 1) = Scalar::from_int(Q, 2);
  bad(1, 2) = Scalar::one(Q);
  EXPECT_THROW(smash_coproduct(base, g, {Matrix::identity(Q, 16), bad}), AxiomFailure);
}

TEST(Algebra, ShiftSmashThreeFactors) {
  const auto t0 = std::chrono::steady_clock::now();
  auto s = shift_smash(3);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  EXPECT_EQ(s.k->dim(), 192u);
  EXPECT_LT(secs, 60.0);
}

TEST(Algebra, TwistedGroupAlgebras) {
  auto v = cyclic_product({2, 2}, {"a", "b"});
  auto alpha = cocycle_from_projective_rep(v, klein_projective_rep(*v, Q));
  auto tw = twisted_group_algebra(alpha);
  // k^alpha V is 2x2 matrices: one-dimensional center
  EXPECT_EQ(center_dim(*tw), 1u);
  auto vals = alpha.values();
  vals[1 * 4 + 2] = Scalar::from_int(Q, 3);
  EXPECT_THROW(twisted_group_algebra(CocycleSlice(v, Q, vals)), InvalidCocycle);
  auto raw = twisted_group_algebra(CocycleSlice(v, Q, vals), false);
  EXPECT_FALSE(check_associativity(*raw));
}

TEST(Algebra, KleinCrossedCoproduct) {
  auto d = klein_crossed_data();
  auto k = crossed_coproduct(d.sigma, d.tau);
  EXPECT_EQ(k->dim(), 72u);
  EXPECT_TRUE(check_hopf_axioms(*k));
  // Block p_1 is kL (commutative, 36). Block p_h is k^alpha<a,b> (x) k<c,d>,
  // i.e. M_2(k) (x) k[Z3^2], whose center is the 9-dimensional k[Z3^2].
  EXPECT_EQ(center_dim(*k), 45u);
  const auto c = d.l->index_of("c");
  const auto h = d.g->index_of("h");
  const auto ch = SparseVec::single(c * 2 + h, Scalar::one(d.field));
  for (std::size_t i = 0; i < k->dim(); ++i) {
    const auto e = SparseVec::single(i, Scalar::one(d.field));
    EXPECT_EQ(k->element_to_string(k->multiply(ch, e)), k->element_to_string(k->multiply(e, ch)));
  }
  auto info = std::get<CoproductInfo>(k->info());
  EXPECT_EQ(info.blocks.size(), 2u);
  EXPECT_EQ(center_dim(*info.blocks[1]), 9u);
  auto emb = block_embedding(k, h);
  EXPECT_TRUE(check_algebra_map(emb, false, true));
}

TEST(Algebra, CrossedWithTrivialDataMatchesSmash) {
  auto g = cyclic_product({2}, {"h"});
  auto l = cyclic_product({3, 3}, {"c", "d"});
  auto act = GroupAction::from_generators(g, l, {{1, coordinate_permutation(*l, {1, 0})}});
  auto crossed = crossed_coproduct(SigmaCocycle::trivial(act, Q), TauCocycle::trivial(act, Q));
  std::vector<Matrix> mats;
  for (std::size_t x = 0; x < 2; ++x) {
    Matrix m(Q, 9, 9);
    for (std::size_t a = 0; a < 9; ++a) m(act.act(x, a), a) = Scalar::one(Q);
    mats.push_back(m);
  }
  auto smash = smash_coproduct(group_algebra(l, Q), g, mats);
  ASSERT_EQ(crossed->dim(), smash->dim());
  for (std::size_t i = 0; i < crossed->dim(); ++i) {
    EXPECT_EQ(crossed->hopf()->comul[i].terms, smash->hopf()->comul[i].terms);
    EXPECT_EQ(crossed->hopf()->antipode[i].terms, smash->hopf()->antipode[i].terms);
    for (std::size_t j = 0; j < crossed->dim(); ++j) EXPECT_EQ(crossed->product(i, j).terms, smash->product(i, j).terms);
  }
}

TEST(Algebra, IncompatibleDataRejected) {
  auto d = klein_crossed_data();
  auto tau = d.tau;
  tau.at(1, 1, d.l->index_of("a")) = Scalar::from_int(d.field, 2);
  EXPECT_THROW(crossed_coproduct(d.sigma, tau), CompatibilityError);
}

TEST(Algebra, DeltaEmbedding) {
  auto d = klein_crossed_data(FieldSpec::prime(3));
  auto v = d.v;
  auto alpha = cocycle_from_projective_rep(v, klein_projective_rep(*v, d.field));
  auto delta = delta_embedding(alpha);
  EXPECT_EQ(delta.target->dim(), 16u);
  EXPECT_TRUE(check_algebra_map(delta));
  EXPECT_TRUE(check_associativity(*delta.target));
}

TEST(Algebra, SubgroupEmbedding) {
  auto d = klein_crossed_data();
  auto tw = twisted_group_algebra(d.alpha);
  auto sub = coordinate_subgroup(*d.l, {0, 1, 2});
  auto emb = subgroup_embedding(tw, sub);
  EXPECT_EQ(emb.source->dim(), 12u);
  EXPECT_TRUE(check_algebra_map(emb));
}
