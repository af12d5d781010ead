#include <gtest/gtest.h>

#include "hopfkit/group.hpp"

using namespace hopfkit;

TEST(FiniteGroup, ProductsOfCyclics) {
  auto z2 = make_product_of_cyclics({2});
  EXPECT_EQ(z2.order(), 2u);
  auto v = make_product_of_cyclics({2, 2});
  EXPECT_EQ(v.order(), 4u);
  for (std::size_t a = 0; a < 4; ++a)
    if (a != v.identity()) EXPECT_EQ(v.element_order(a), 2u);
  auto l = make_product_of_cyclics({2, 2, 3, 3});
  EXPECT_EQ(l.order(), 36u);
  EXPECT_EQ(l.exponent(), 6u);
  EXPECT_TRUE(l.is_abelian());
  EXPECT_EQ(l.label(l.identity()), "1");
  EXPECT_EQ(l.index_of("ac^2d"), l.from_coordinates({1, 0, 2, 1}));
  EXPECT_EQ(l.generators().size(), 4u);
}

TEST(FiniteGroup, RejectsBadTables) {
  EXPECT_THROW(FiniteGroup({"1", "a"}, {{0, 1}, {1, 1}}), Error);
  // not associative: a loop of order 5 that is not a group
  std::vector<std::vector<std::size_t>> t = {
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  EXPECT_THROW(FiniteGroup({"1", "a", "b", "c", "d"}, t), Error);
}

TEST(FiniteGroup, NonabelianGroups) {
  auto s3 = make_symmetric_group(3);
  EXPECT_EQ(s3.order(), 6u);
  EXPECT_FALSE(s3.is_abelian());
  EXPECT_EQ(conjugacy_classes(s3).size(), 3u);
  auto d4 = make_dihedral_group(4);
  EXPECT_EQ(d4.order(), 8u);
  EXPECT_FALSE(d4.is_abelian());
  EXPECT_EQ(conjugacy_classes(d4).size(), 5u);
  EXPECT_EQ(make_symmetric_group(4).order(), 24u);
}

TEST(Subgroups, SylowAndCoordinates) {
  auto l = make_product_of_cyclics({2, 2, 3, 3}, {"a", "b", "c", "d"});
  auto syl = sylow_subgroup(l, 3);
  EXPECT_EQ(syl.group->order(), 9u);
  for (auto e : syl.embedding) EXPECT_EQ(l.power(e, 3), l.identity());
  auto cd = coordinate_subgroup(l, {2, 3});
  EXPECT_EQ(cd.group->order(), 9u);
  EXPECT_EQ(cd.group->label(cd.group->from_coordinates({1, 0})), "c");
  // embedding is a homomorphism
  const auto& h = *cd.group;
  for (std::size_t a = 0; a < h.order(); ++a)
    for (std::size_t b = 0; b < h.order(); ++b)
      EXPECT_EQ(cd.embedding[h.mul(a, b)], l.mul(cd.embedding[a], cd.embedding[b]));
  auto s4 = make_symmetric_group(4);
  EXPECT_EQ(sylow_subgroup(s4, 2).group->order(), 8u);
  EXPECT_EQ(sylow_subgroup(s4, 3).group->order(), 3u);
}

TEST(GroupAction, SwapOfFactors) {
  auto g = std::make_shared<const FiniteGroup>(make_product_of_cyclics({2}, {"h"}));
  auto l = std::make_shared<const FiniteGroup>(make_product_of_cyclics({2, 2, 3, 3}));
  auto swap = coordinate_permutation(*l, {0, 1, 3, 2});
  auto act = GroupAction::from_generators(g, l, {{g->index_of("h"), swap}});
  EXPECT_EQ(act.act(1, l->index_of("c")), l->index_of("d"));
  EXPECT_EQ(act.act(1, l->index_of("ac^2")), l->index_of("ad^2"));
  EXPECT_EQ(act.act(0, l->index_of("c")), l->index_of("c"));
  // not an automorphism
  std::vector<std::size_t> bad(l->order());
  for (std::size_t i = 0; i < bad.size(); ++i) bad[i] = i;
  std::swap(bad[1], bad[2]);
  EXPECT_THROW(GroupAction(g, l, {swap, bad}), Error);
  // not a homomorphism: h must act by an involution
  auto z3 = std::make_shared<const FiniteGroup>(make_product_of_cyclics({3}));
  auto c3 = std::make_shared<const FiniteGroup>(make_product_of_cyclics({3}));
  std::vector<std::size_t> inv3 = {0, 2, 1};
  EXPECT_THROW(GroupAction::from_generators(z3, c3, {{1, inv3}}), Error);
}
