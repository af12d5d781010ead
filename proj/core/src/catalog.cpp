#include "hopfkit/catalog.hpp"

namespace hopfkit {

GroupPtr cyclic_product(const std::vector<std::uint32_t>& orders, const std::vector<std::string>& names) {
  return std::make_shared<const FiniteGroup>(make_product_of_cyclics(orders, names));
}

std::vector<Matrix> klein_projective_rep(const FiniteGroup& v, FieldSpec f) {
  if (v.factor_orders() != std::vector<std::uint32_t>{2, 2}) throw Error("expected Z2 x Z2");
  std::vector<Matrix> rho(4, Matrix::identity(f, 2));
  rho[v.from_coordinates({1, 0})] = Matrix::from_rows(f, {{0, -1}, {1, 0}});
  rho[v.from_coordinates({0, 1})] = Matrix::from_rows(f, {{1, 0}, {0, -1}});
  rho[v.from_coordinates({1, 1})] = Matrix::from_rows(f, {{0, 1}, {1, 0}});
  return rho;
}

KleinCrossedData klein_crossed_data(FieldSpec f) {
  auto g = cyclic_product({2}, {"h"});
  auto l = cyclic_product({2, 2, 3, 3}, {"a", "b", "c", "d"});
  auto v = cyclic_product({2, 2}, {"a", "b"});
  auto act = GroupAction::from_generators(g, l, {{1, coordinate_permutation(*l, {0, 1, 3, 2})}});
  auto alpha = extend_cocycle_trivially(cocycle_from_projective_rep(v, klein_projective_rep(*v, f)), l, {0, 1});
  SigmaCocycle sigma{act, {CocycleSlice::trivial(l, f), alpha}};
  auto tau = TauCocycle::trivial(act, f);
  return {f, g, l, v, act, alpha, sigma, tau};
}

ShiftSmash shift_smash(std::uint32_t m, FieldSpec f, BuildOptions opts) {
  if (m < 2) throw Error("shift smash needs m >= 2");
  auto taft = taft_algebra(2, f, opts);
  AlgebraPtr base = taft;
  for (std::uint32_t k = 1; k < m; ++k) base = tensor_algebra(base, taft, BuildOptions{false});
  auto g = cyclic_product({m}, {"h"});
  std::vector<std::size_t> perm(m);
  for (std::uint32_t k = 0; k < m; ++k) perm[k] = (k + 1) % m;
  Matrix shift = tensor_factor_permutation(f, taft->dim(), m, perm);
  auto action = extend_group_matrices(*g, f, base->dim(), {{g->generators().at(0), shift}});
  auto k = smash_coproduct(base, g, std::move(action), opts);
  return {base, taft, g, k};
}

AlgModule klein_module_u(const KleinCrossedData& d, const AlgebraPtr& k) {
  const auto& info = coproduct_info(*k);
  const std::size_t h = d.g->index_of("h");
  const FieldSpec f = d.field;
  // k^alpha<a,b,c> and k^alpha<a,b> inside it
  const Subgroup w = coordinate_subgroup(*d.l, {0, 1, 2});
  std::vector<Scalar> wv;
  for (std::size_t x = 0; x < w.group->order(); ++x)
    for (std::size_t y = 0; y < w.group->order(); ++y) wv.push_back(d.alpha(w.embedding[x], w.embedding[y]));
  auto tw_w = twisted_group_algebra(CocycleSlice(w.group, f, std::move(wv)));
  auto emb_v = subgroup_embedding(tw_w, coordinate_subgroup(*w.group, {0, 1}));
  const auto& vgrp = *std::get<GroupAlgebraInfo>(emb_v.source->info()).group;
  const auto rho_v = klein_projective_rep(vgrp, f);
  auto u_rho = make_module(emb_v.source, rho_v, "U_rho");
  auto induced = induce(emb_v, u_rho);
  // inflation k^alpha L -> k^alpha<a,b,c>, dropping the d coordinate
  const auto& blk = info.blocks.at(h);
  Matrix infl(f, tw_w->dim(), blk->dim());
  for (std::size_t l = 0; l < d.l->order(); ++l) {
    auto c = d.l->coordinates(l);
    infl(w.group->from_coordinates({c[0], c[1], c[2]}), l) = Scalar::one(f);
  }
  auto u = restrict_module(induced, AlgebraMap{blk, tw_w, std::move(infl)});
  u.name = "U";
  return u;
}

AlgModule shift_module_u(const ShiftSmash& s) {
  const auto& a = s.base;
  const auto* info = std::get_if<QeaInfo>(&a->info());
  if (!info) throw Error("shift_module_u expects a quantum elementary abelian base");
  const FieldSpec f = a->field();
  std::vector<SparseVec> gens;
  for (std::uint32_t k = 2; k <= info->m; ++k) {
    const std::string sfx = std::to_string(k);
    gens.push_back(SparseVec::single(a->index_of("x" + sfx), Scalar::one(f)));
    gens.push_back(difference(SparseVec::single(a->index_of("g" + sfx), Scalar::one(f)), a->unit()));
  }
  auto u = quotient_by_left_ideal(a, gens);
  u.name = "U";
  return u;
}

}  // namespace hopfkit
