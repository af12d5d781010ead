#include <gtest/gtest.h>

#include "hopfkit/catalog.hpp"
#include "hopfkit/projectivity.hpp"

using namespace hopfkit;

namespace {

const FieldSpec Q = FieldSpec::rationals();

SparseVec e(const AlgebraPtr& a, const std::string& label) { return SparseVec::single(a->index_of(label), Scalar::one(a->field())); }

bool isomorphic(const AlgModule& m, const AlgModule& n) {
  return is_isomorphic(m, n, 20, 7).kind == IsoVerdict::Kind::Isomorphic;
}

// Sweedler data shared across tests.
struct Sweedler {
  ShiftSmash s = shift_smash(2);
  AlgModule u = shift_module_u(s);
  std::size_t h = s.g->index_of("h");
  std::size_t one = s.g->identity();
};

}  // namespace

TEST(Modules, RegularAndTrivial) {
  auto z2 = cyclic_product({2});
  auto kz2 = group_algebra(z2, Q);
  auto reg = regular_module(kz2);
  EXPECT_EQ(reg.action[1], Matrix::from_rows(Q, {{0, 1}, {1, 0}}));
  EXPECT_TRUE(check_module_axioms(reg));
  auto h4 = taft_algebra(2, Q);
  EXPECT_TRUE(check_module_axioms(trivial_module(h4)));
  EXPECT_TRUE(check_module_axioms(regular_module(h4)));
  EXPECT_THROW(trivial_module(truncated_polynomial_algebra(2, Q)), Error);
  // a bad action is caught
  auto bad = reg.action;
  bad[1] = Matrix::from_rows(Q, {{1, 1}, {0, 1}});
  EXPECT_THROW(make_module(kz2, bad), AxiomFailure);
}

TEST(Modules, QuotientsByLeftIdeals) {
  Sweedler sw;
  EXPECT_EQ(sw.u.dim(), 4u);
  // U is T_2 (x) k: the external tensor of the regular and trivial T_2-modules
  auto expected = external_tensor(regular_module(sw.s.taft), trivial_module(sw.s.taft), sw.s.base);
  EXPECT_TRUE(isomorphic(sw.u, expected));
  auto a = sw.s.base;
  EXPECT_EQ(quotient_by_left_ideal(a, {a->unit()}).dim(), 0u);
  auto full = quotient_by_left_ideal(a, {});
  EXPECT_EQ(full.dim(), a->dim());
  EXPECT_EQ(full.action, regular_module(a).action);
}

TEST(Modules, TensorAndDual) {
  Sweedler sw;
  auto a = sw.s.base;
  auto triv = trivial_module(a);
  auto ut = tensor_module(sw.u, triv);
  EXPECT_EQ(ut.action, sw.u.action);  // basis u_i (x) 1 at index i
  auto tu = tensor_module(triv, sw.u);
  EXPECT_EQ(tu.action, sw.u.action);
  EXPECT_EQ(tensor_module(sw.u, sw.u).dim(), 16u);
  auto dt = dual_module(triv);
  EXPECT_EQ(dt.action, triv.action);
  EXPECT_EQ(dual_module(sw.u).dim(), 4u);
  // tensor is associative up to reindexing, which is the identity for our left-major layout
  auto p = trivial_module(a);
  EXPECT_EQ(tensor_module(tensor_module(sw.u, sw.u), p).action, tensor_module(sw.u, tensor_module(sw.u, p)).action);
  // grading is multiplicative
  auto m = place_in_component(sw.u, sw.s.k, sw.h);
  auto n = place_in_component(sw.u, sw.s.k, sw.one);
  auto mn = tensor_module(m, n);
  EXPECT_EQ(component_dims(mn)[sw.h], 16u);
  EXPECT_EQ(component_dims(mn)[sw.one], 0u);
  EXPECT_EQ(component_dims(tensor_module(m, m))[sw.one], 16u);
}

TEST(Modules, ConjugatesAndComponents) {
  Sweedler sw;
  auto k = sw.s.k;
  auto hu = conjugate_module(sw.u, k, sw.h);
  EXPECT_EQ(conjugate_module(sw.u, k, sw.one).action, sw.u.action);
  EXPECT_EQ(conjugate_module(hu, k, sw.h).action, sw.u.action);
  // hU is trivial on x_1 and free on x_2 g_1
  auto a = sw.s.base;
  EXPECT_TRUE(hu.act(e(a, "x1")).is_zero());
  auto m = place_in_component(sw.u, k, sw.h);
  EXPECT_EQ(component(m, sw.h).action, sw.u.action);
  EXPECT_EQ(component(m, sw.one).dim(), 0u);
  // the regular K-module has each component isomorphic to the regular block module
  auto reg = regular_module(k);
  auto dims = component_dims(reg);
  EXPECT_EQ(dims[0] + dims[1], 32u);
  EXPECT_TRUE(isomorphic(component(reg, sw.h), regular_module(a)));
  // duals flip the component for Z2 and for M = U (x) kp_h
  EXPECT_EQ(component_dims(dual_module(m))[sw.h], 4u);
}

TEST(Modules, RestrictionsToTauLines) {
  Sweedler sw;
  auto a = sw.s.base;
  auto line = [&](std::int64_t l1, std::int64_t l2) {
    return qea_tau_element(a, {Scalar::from_int(Q, l1), Scalar::from_int(Q, l2)}).embedding;
  };
  auto r10 = restrict_module(sw.u, line(1, 0));
  auto poly = r10.algebra;
  EXPECT_TRUE(isomorphic(r10, direct_sum(regular_module(poly), regular_module(poly))));
  auto r01 = restrict_module(sw.u, line(0, 1));
  EXPECT_TRUE(r01.action[1].is_zero());
  EXPECT_EQ(restrict_module(sw.u, AlgebraMap{a, a, Matrix::identity(Q, a->dim())}).action, sw.u.action);
}

TEST(Modules, InductionAndTwistedOperations) {
  auto d = klein_crossed_data();
  auto k = crossed_coproduct(d.sigma, d.tau);
  auto u = klein_module_u(d, k);
  EXPECT_EQ(u.dim(), 6u);
  const std::size_t h = d.g->index_of("h");
  // induce along the identity is the identity
  auto blk = coproduct_info(*k).blocks[h];
  EXPECT_TRUE(isomorphic(induce(AlgebraMap{blk, blk, Matrix::identity(d.field, blk->dim())}, u), u));
  // twisted tensor with the twisted dual lands over the untwisted kV
  auto v = d.v;
  auto alpha_v = cocycle_from_projective_rep(v, klein_projective_rep(*v, d.field));
  auto tw = twisted_group_algebra(alpha_v);
  auto u_rho = make_module(tw, klein_projective_rep(*v, d.field));
  auto ud = twisted_tensor(u_rho, twisted_dual(u_rho));
  EXPECT_EQ(ud.dim(), 4u);
  EXPECT_TRUE(std::get<GroupAlgebraInfo>(ud.algebra->info()).alpha.is_trivial());
  // U (x) hU over kL
  auto hu = conjugate_module(u, k, h);
  auto uhu = twisted_tensor(u, hu);
  EXPECT_EQ(uhu.dim(), 36u);
  EXPECT_TRUE(std::get<GroupAlgebraInfo>(uhu.algebra->info()).alpha.is_trivial());
}

TEST(Modules, ComponentDecompositionSmash) {
  Sweedler sw;
  auto m = place_in_component(sw.u, sw.s.k, sw.h);
  auto n = place_in_component(sw.u, sw.s.k, sw.one);
  EXPECT_TRUE(verify_component_decomposition(m, n));
  EXPECT_TRUE(verify_component_decomposition(n, m));
  EXPECT_TRUE(verify_component_decomposition(m, m));
  auto reg = regular_module(sw.s.k);
  auto triv = trivial_module(sw.s.k);
  EXPECT_TRUE(verify_component_decomposition(triv, m));
  EXPECT_TRUE(verify_component_decomposition(direct_sum(m, n), triv));
}

TEST(Modules, ComponentDecompositionCrossed) {
  auto d = klein_crossed_data();
  auto k = crossed_coproduct(d.sigma, d.tau);
  auto u = klein_module_u(d, k);
  const std::size_t h = d.g->index_of("h");
  auto m = place_in_component(u, k, h);
  auto r = verify_component_decomposition(m, m);
  EXPECT_TRUE(r) << r.witness;
  // (M (x) M)_1 is U (x) hU
  auto mm = tensor_module(m, m);
  auto c1 = component(mm, d.g->identity());
  auto uhu = twisted_tensor(u, conjugate_module(u, k, h));
  EXPECT_EQ(c1.dim(), 36u);
  EXPECT_TRUE(same_algebra(*c1.algebra, *uhu.algebra));
}

TEST(Modules, HomAndIsomorphism) {
  Sweedler sw;
  auto m = place_in_component(sw.u, sw.s.k, sw.h);
  auto n = place_in_component(sw.u, sw.s.k, sw.one);
  auto v = is_isomorphic(m, m);
  ASSERT_EQ(v.kind, IsoVerdict::Kind::Isomorphic);
  EXPECT_TRUE(is_intertwiner(m, m, *v.certificate));
  EXPECT_EQ(is_isomorphic(m, n).kind, IsoVerdict::Kind::NotIsomorphic);
  auto md = dual_module(m);
  auto a = tensor_module(m, md), b = tensor_module(md, m);
  EXPECT_EQ(is_isomorphic(a, b).kind, IsoVerdict::Kind::NotIsomorphic);
  // hom space of the regular module is the algebra (right multiplications)
  auto h4 = taft_algebra(2, Q);
  EXPECT_EQ(hom_space(regular_module(h4), regular_module(h4)).size(), 4u);
  EXPECT_EQ(hom_space(trivial_module(h4), regular_module(h4)).size(), 1u);  // the integral
}

TEST(Modules, Rigidity) {
  Sweedler sw;
  EXPECT_TRUE(rigidity_check(trivial_module(sw.s.k)));
  EXPECT_TRUE(rigidity_check(regular_module(taft_algebra(2, Q))));
  EXPECT_TRUE(rigidity_check(place_in_component(sw.u, sw.s.k, sw.h)));
  auto d = klein_crossed_data();
  auto k = crossed_coproduct(d.sigma, d.tau);
  EXPECT_TRUE(rigidity_check(place_in_component(klein_module_u(d, k), k, 1)));
}
