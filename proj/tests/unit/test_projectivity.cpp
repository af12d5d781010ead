#include <gtest/gtest.h>

#include "hopfkit/catalog.hpp"
#include "hopfkit/projectivity.hpp"

using namespace hopfkit;

namespace {

const FieldSpec Q = FieldSpec::rationals();

bool proj(const AlgModule& m) { return is_projective(m).projective; }

Vector lam(std::int64_t a, std::int64_t b) { return {Scalar::from_int(Q, a), Scalar::from_int(Q, b)}; }

}  // namespace

TEST(Projectivity, SplitBasics) {
  auto h4 = taft_algebra(2, Q);
  EXPECT_TRUE(is_projective_split(regular_module(h4)).projective);
  EXPECT_FALSE(is_projective_split(trivial_module(h4)).projective);
  EXPECT_TRUE(is_projective_split(zero_module(h4)).projective);
  // semisimple: every module splits
  auto kg = group_algebra(cyclic_product({3}), Q);
  EXPECT_TRUE(is_projective_split(trivial_module(kg)).projective);
  // modular: the trivial module of kZ3 in characteristic 3 does not
  auto kg3 = group_algebra(cyclic_product({3}), FieldSpec::prime(3));
  EXPECT_FALSE(is_projective_split(trivial_module(kg3)).projective);
}

TEST(Projectivity, JordanBlocks) {
  EXPECT_TRUE(is_free_over_nilpotent_line(Matrix::from_rows(Q, {{0, 1}, {0, 0}}), 2).projective);
  EXPECT_FALSE(is_free_over_nilpotent_line(Matrix(Q, 2, 2), 2).projective);
  EXPECT_THROW(is_free_over_nilpotent_line(Matrix::identity(Q, 2), 2), Error);
  // two blocks of size 3 against one of size 3 plus 2 + 1
  Matrix n(Q, 6, 6);
  n(0, 1) = n(1, 2) = n(3, 4) = n(4, 5) = Scalar::one(Q);
  EXPECT_TRUE(is_free_over_nilpotent_line(n, 3).projective);
  n(4, 5) = Scalar::zero(Q);
  EXPECT_FALSE(is_free_over_nilpotent_line(n, 3).projective);
}

TEST(Projectivity, LocalTest) {
  const auto f3 = FieldSpec::prime(3);
  auto p = cyclic_product({3, 3});
  auto kp = group_algebra(p, f3);
  auto rad = local_radical(*kp);
  ASSERT_TRUE(rad.has_value());
  EXPECT_EQ(rad->size(), 8u);
  EXPECT_TRUE(is_projective_local(regular_module(kp), *rad).projective);
  EXPECT_FALSE(is_projective_local(trivial_module(kp), *rad).projective);
  EXPECT_FALSE(local_radical(*group_algebra(cyclic_product({6}), f3)).has_value());
  EXPECT_THROW(is_projective_local(trivial_module(kp), {}), Error);
}

TEST(Projectivity, StrategiesAgreeOnSmallModules) {
  auto h4 = taft_algebra(2, Q);
  for (const auto& m : {regular_module(h4), trivial_module(h4), tensor_module(regular_module(h4), trivial_module(h4))}) {
    const bool s = is_projective_split(m).projective;
    EXPECT_EQ(is_projective(m).projective, s);
  }
  const auto f2 = FieldSpec::prime(2);
  auto kv = group_algebra(cyclic_product({2, 2}), f2);
  auto triv = trivial_module(kv);
  EXPECT_FALSE(is_projective(triv).projective);
  EXPECT_TRUE(is_projective(regular_module(kv)).projective);
  // projective (x) anything is projective
  EXPECT_TRUE(is_projective(tensor_module(regular_module(kv), triv)).projective);
  EXPECT_TRUE(is_projective(tensor_module(triv, regular_module(kv))).projective);
}

TEST(Projectivity, SweedlerSwapExample) {
  auto s = shift_smash(2);
  auto u = shift_module_u(s);
  const auto h = s.g->index_of("h"), one = s.g->identity();
  auto m = place_in_component(u, s.k, h);
  auto n = place_in_component(u, s.k, one);
  EXPECT_FALSE(proj(m));
  EXPECT_TRUE(proj(tensor_module(m, m)));
  EXPECT_TRUE(proj(tensor_module(m, n)));
  EXPECT_FALSE(proj(tensor_module(n, m)));
  EXPECT_FALSE(proj(n));
}

TEST(Projectivity, RankVarieties) {
  auto s = shift_smash(2);
  auto u = shift_module_u(s);
  auto rep = rank_variety_membership(u, {lam(1, 0), lam(0, 1), lam(1, 1), lam(2, -3)});
  ASSERT_EQ(rep.points.size(), 4u);
  EXPECT_FALSE(rep.points[0].in_variety);
  EXPECT_TRUE(rep.points[1].in_variety);
  EXPECT_FALSE(rep.points[2].in_variety);
  EXPECT_FALSE(rep.points[3].in_variety);
  auto hu = conjugate_module(u, s.k, s.g->index_of("h"));
  auto rh = rank_variety_membership(hu, {lam(1, 0), lam(0, 1)});
  EXPECT_TRUE(rh.points[0].in_variety);
  EXPECT_FALSE(rh.points[1].in_variety);
  auto reg = rank_variety_membership(regular_module(s.base), default_lambdas(Q, 2));
  for (const auto& pt : reg.points) EXPECT_FALSE(pt.in_variety);
  EXPECT_THROW(rank_variety_membership(u, {lam(0, 0)}), Error);
  EXPECT_EQ(default_lambdas(FieldSpec::prime(3), 2, true).size(), 4u);
}

TEST(Projectivity, KleinCrossedExample) {
  auto d = klein_crossed_data();
  auto k = crossed_coproduct(d.sigma, d.tau);
  auto u = klein_module_u(d, k);
  EXPECT_FALSE(proj(u));
  auto m = place_in_component(u, k, d.g->index_of("h"));
  EXPECT_FALSE(proj(m));
  EXPECT_TRUE(proj(tensor_module(m, m)));
}

TEST(Projectivity, TrivialTimesRegularOverSwap) {
  auto s = shift_smash(2);
  auto u = external_tensor(trivial_module(s.taft), regular_module(s.taft), s.base);
  const auto h = s.g->index_of("h"), one = s.g->identity();
  auto m = place_in_component(u, s.k, h);
  auto n = place_in_component(u, s.k, one);
  EXPECT_FALSE(proj(m));
  EXPECT_TRUE(proj(tensor_module(m, m)));
  EXPECT_TRUE(proj(tensor_module(m, n)));
  EXPECT_FALSE(proj(tensor_module(n, m)));
}

TEST(Projectivity, ThreeFoldShift) {
  auto s = shift_smash(3);
  auto u = shift_module_u(s);
  EXPECT_EQ(u.dim(), 4u);
  auto m = place_in_component(u, s.k, 1);
  auto m2 = tensor_module(m, m);
  EXPECT_FALSE(proj(m2));
  auto v = is_projective(tensor_module(m2, m));
  EXPECT_TRUE(v.projective) << v.witness;
}
