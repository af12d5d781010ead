#include "hopfkit/representations.hpp"

#include <random>

namespace hopfkit {

namespace {

Matrix zero_matrix(FieldSpec f, std::size_t n) { return Matrix(f, n, n); }

SparseVec lift_to_component(const SparseVec& v, std::size_t ng, std::size_t x) {
  SparseVec out;
  for (const auto& [b, c] : v.terms) out.terms.emplace_back(b * ng + x, c);
  return out;
}

const GroupAlgebraInfo& group_info(const BasisAlgebra& a, const char* what) {
  const auto* info = std::get_if<GroupAlgebraInfo>(&a.info());
  if (!info) throw Error(std::string(what) + " needs a module over a (twisted) group algebra");
  return *info;
}

void require_same_algebra(const AlgModule& m, const AlgModule& n, const char* what) {
  if (m.algebra != n.algebra && !same_algebra(*m.algebra, *n.algebra))
    throw Error(std::string(what) + ": modules over different algebras");
}

void require_hopf(const AlgModule& m, const char* what) {
  if (!m.algebra->hopf()) throw Error(std::string(what) + " needs Hopf data on the algebra");
}

// Columns of `basis` spanning the subspace, with a left inverse and the check
// that every action matrix preserves the span.
struct Subspace {
  Matrix basis;
  Matrix left_inv;
};

Subspace invariant_subspace(const AlgModule& m, const Matrix& basis) {
  if (basis.rows() != m.dim()) throw DimensionMismatch("subspace basis has the wrong number of rows");
  if (rank(basis) != basis.cols()) throw Error("subspace basis columns are dependent");
  return {basis, basis.cols() ? left_inverse(basis) : Matrix(m.field(), 0, m.dim())};
}

Matrix restrict_action(const Subspace& s, const Matrix& a) {
  Matrix ab = a * s.basis;
  Matrix r = s.left_inv * ab;
  if (!(s.basis * r == ab)) throw AxiomFailure("subspace is not invariant under the action");
  return r;
}

}  // namespace

Matrix AlgModule::act(const SparseVec& a) const {
  Matrix out = zero_matrix(field(), dim());
  for (const auto& [i, c] : a.terms) out.add_scaled(c, action.at(i));
  return out;
}

bool same_algebra(const BasisAlgebra& a, const BasisAlgebra& b) {
  if (&a == &b) return true;
  if (a.field() != b.field() || a.dim() != b.dim()) return false;
  if (!(a.unit().terms == b.unit().terms)) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (!(a.product(i, j).terms == b.product(i, j).terms)) return false;
  return true;
}

Report check_module_axioms(const AlgModule& m) {
  const auto& a = *m.algebra;
  const std::size_t d = m.dim();
  if (m.action.size() != a.dim()) return Report::fail("expected one action matrix per basis element");
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const auto& mat = m.action[i];
    if (mat.rows() != d || mat.cols() != d) return Report::fail("action of " + a.label(i) + " is not " + std::to_string(d) + "x" + std::to_string(d));
    if (d && mat.field() != a.field()) return Report::fail("action of " + a.label(i) + " is over the wrong field");
  }
  if (!m.act(a.unit()).is_identity() && d) return Report::fail("the unit does not act as the identity");
  for (const auto& g : a.generators()) {
    const Matrix mg = m.act(g);
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const SparseVec ej = SparseVec::single(j, Scalar::one(a.field()));
      if (!(mg * m.action[j] == m.act(a.multiply(g, ej))))
        return Report::fail("(" + a.element_to_string(g) + ") acting after " + a.label(j) + " differs from their product");
    }
  }
  return Report::pass();
}

AlgModule make_module(AlgebraPtr a, std::vector<Matrix> action, std::string name, bool verify) {
  AlgModule m{std::move(a), std::move(action), std::move(name)};
  if (verify) {
    auto r = check_module_axioms(m);
    if (!r) throw AxiomFailure("module axiom: " + r.witness);
  }
  return m;
}

AlgModule regular_module(const AlgebraPtr& a) {
  std::vector<Matrix> act;
  for (std::size_t i = 0; i < a->dim(); ++i) act.push_back(a->left_multiplication(SparseVec::single(i, Scalar::one(a->field()))));
  return make_module(a, std::move(act), "regular", false);
}

AlgModule trivial_module(const AlgebraPtr& a) {
  if (!a->hopf()) throw Error("trivial module needs a counit");
  std::vector<Matrix> act;
  for (std::size_t i = 0; i < a->dim(); ++i) {
    Matrix m(a->field(), 1, 1);
    m(0, 0) = a->hopf()->counit[i];
    act.push_back(std::move(m));
  }
  return make_module(a, std::move(act), "trivial");
}

AlgModule zero_module(const AlgebraPtr& a) {
  return make_module(a, std::vector<Matrix>(a->dim(), Matrix(a->field(), 0, 0)), "zero", false);
}

AlgModule quotient_module(const AlgModule& m, const Matrix& basis) {
  const FieldSpec f = m.field();
  const std::size_t d = m.dim();
  if (basis.rows() != d) throw DimensionMismatch("submodule basis has the wrong number of rows");
  const std::size_t s = rank(basis);
  if (s != basis.cols()) throw Error("submodule basis columns are dependent");
  // coordinates outside the pivots of the row space complement the span
  std::vector<bool> is_pivot(d, false);
  if (s) {
    auto ech = row_reduce(basis.transpose());
    for (auto p : ech.pivots) is_pivot[p] = true;
  }
  std::vector<Vector> comp;
  for (std::size_t i = 0; i < d; ++i)
    if (!is_pivot[i]) {
      Vector e = zero_vector(f, d);
      e[i] = Scalar::one(f);
      comp.push_back(std::move(e));
    }
  Matrix e = Matrix::from_columns(f, d, comp);
  Matrix c = s ? hstack({basis, e}) : e;
  auto cinv = inverse(c);
  if (!cinv) throw Error("internal: complement is not a complement");
  const std::size_t q = d - s;
  Matrix proj = cinv->block(s, 0, q, d);
  std::vector<Matrix> act;
  for (std::size_t i = 0; i < m.action.size(); ++i) {
    if (s && !(proj * (m.action[i] * basis)).is_zero())
      throw AxiomFailure("quotient by a non-invariant subspace (" + m.algebra->label(i) + ")");
    act.push_back(proj * m.action[i] * e);
  }
  return make_module(m.algebra, std::move(act), m.name.empty() ? std::string() : m.name + "/sub");
}

AlgModule quotient_by_left_ideal(const AlgebraPtr& a, const std::vector<SparseVec>& gens) {
  const FieldSpec f = a->field();
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < a->dim(); ++i)
    for (const auto& g : gens) {
      auto v = a->multiply(SparseVec::single(i, Scalar::one(f)), g);
      if (!v.empty()) cols.push_back(v.to_dense(f, a->dim()));
    }
  Matrix ideal = cols.empty() ? Matrix(f, a->dim(), 0) : column_space(Matrix::from_columns(f, a->dim(), cols));
  auto q = quotient_module(regular_module(a), ideal);
  q.name = "A/I";
  return q;
}

AlgModule submodule(const AlgModule& m, const Matrix& basis) {
  auto s = invariant_subspace(m, basis);
  std::vector<Matrix> act;
  for (const auto& a : m.action) act.push_back(restrict_action(s, a));
  return make_module(m.algebra, std::move(act), m.name.empty() ? std::string() : "sub(" + m.name + ")");
}

AlgModule direct_sum(const AlgModule& m, const AlgModule& n) {
  require_same_algebra(m, n, "direct_sum");
  std::vector<Matrix> act;
  for (std::size_t i = 0; i < m.action.size(); ++i) act.push_back(hopfkit::direct_sum(m.action[i], n.action[i]));
  return make_module(m.algebra, std::move(act), m.name + " + " + n.name, false);
}

AlgModule tensor_module(const AlgModule& m, const AlgModule& n) {
  require_same_algebra(m, n, "tensor_module");
  require_hopf(m, "tensor_module");
  const auto& a = *m.algebra;
  const std::size_t na = a.dim(), d = m.dim() * n.dim();
  std::vector<Matrix> act;
  act.reserve(na);
  for (std::size_t b = 0; b < na; ++b) {
    Matrix t = zero_matrix(a.field(), d);
    for (const auto& [idx, c] : a.hopf()->comul[b].terms) {
      const auto& mb = m.action[idx / na];
      const auto& nb = n.action[idx % na];
      if (mb.is_zero() || nb.is_zero()) continue;
      t.add_scaled(c, kronecker(mb, nb));
    }
    act.push_back(std::move(t));
  }
  return make_module(m.algebra, std::move(act), "(" + m.name + ")(x)(" + n.name + ")");
}

AlgModule dual_module(const AlgModule& m) {
  require_hopf(m, "dual_module");
  std::vector<Matrix> act;
  for (const auto& s : m.algebra->hopf()->antipode) act.push_back(m.act(s).transpose());
  return make_module(m.algebra, std::move(act), "(" + m.name + ")*");
}

AlgModule external_tensor(const AlgModule& m, const AlgModule& n, const AlgebraPtr& ab) {
  const std::size_t da = m.algebra->dim(), db = n.algebra->dim();
  if (ab->dim() != da * db) throw DimensionMismatch("external_tensor: algebra is not A (x) B");
  std::vector<Matrix> act;
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < db; ++j) act.push_back(kronecker(m.action[i], n.action[j]));
  return make_module(ab, std::move(act), "(" + m.name + ")#(" + n.name + ")");
}

AlgModule restrict_module(const AlgModule& m, const AlgebraMap& f, bool verify) {
  if (f.target != m.algebra && !same_algebra(*f.target, *m.algebra))
    throw Error("restrict_module: map target is not the module's algebra");
  std::vector<Matrix> act;
  for (std::size_t i = 0; i < f.source->dim(); ++i) act.push_back(m.act(f.image(i)));
  return make_module(f.source, std::move(act), m.name + "|", verify);
}

AlgModule induce(const AlgebraMap& f, const AlgModule& m) {
  const auto& a = *f.source;
  const auto& b = *f.target;
  if (m.algebra != f.source && !same_algebra(*m.algebra, a)) throw Error("induce: module is not over the map's source");
  const FieldSpec fld = b.field();
  const std::size_t da = a.dim(), db = b.dim();
  if (db % da) throw Error("induce: dim B is not a multiple of dim A, so B is not free over A");
  const std::size_t r = db / da;
  std::vector<SparseVec> fa;
  for (std::size_t k = 0; k < da; ++k) fa.push_back(f.image(k));
  // greedy free basis of B as a right A-module among the basis elements of B
  std::vector<std::size_t> chosen;
  SparseRowReducer span(fld);
  for (std::size_t j = 0; j < db && chosen.size() < r; ++j) {
    SparseRowReducer trial = span;
    const SparseVec bj = SparseVec::single(j, Scalar::one(fld));
    std::size_t gained = 0;
    for (const auto& x : fa) gained += trial.insert(b.multiply(bj, x)) ? 1 : 0;
    if (gained == da) {
      span = std::move(trial);
      chosen.push_back(j);
    }
  }
  if (chosen.size() != r) throw Error("induce: could not find a free basis of B over A");
  std::vector<Vector> cols;
  for (auto j : chosen)
    for (const auto& x : fa) cols.push_back(b.multiply(SparseVec::single(j, Scalar::one(fld)), x).to_dense(fld, db));
  auto tinv = inverse(Matrix::from_columns(fld, db, cols));
  if (!tinv) throw Error("induce: free basis is singular");
  const std::size_t dm = m.dim();
  std::vector<Matrix> act;
  for (std::size_t e = 0; e < db; ++e) {
    Matrix out(fld, r * dm, r * dm);
    for (std::size_t i = 0; i < r; ++i) {
      const auto prod = b.multiply(SparseVec::single(e, Scalar::one(fld)), SparseVec::single(chosen[i], Scalar::one(fld)));
      const Vector c = *tinv * prod.to_dense(fld, db);
      for (std::size_t j = 0; j < r; ++j) {
        Matrix blk = zero_matrix(fld, dm);
        for (std::size_t k = 0; k < da; ++k)
          if (!c[j * da + k].is_zero()) blk.add_scaled(c[j * da + k], m.action[k]);
        out.set_block(j * dm, i * dm, blk);
      }
    }
    act.push_back(std::move(out));
  }
  return make_module(f.target, std::move(act), "ind(" + m.name + ")");
}

const CoproductInfo& coproduct_info(const BasisAlgebra& k) {
  const auto* info = std::get_if<CoproductInfo>(&k.info());
  if (!info) throw Error("expected a smash or crossed coproduct");
  return *info;
}

Matrix component_basis(const AlgModule& m, std::size_t x) {
  const auto& info = coproduct_info(*m.algebra);
  const std::size_t ng = info.g->order();
  if (x >= ng) throw Error("component index out of range");
  const Matrix p = m.act(lift_to_component(info.base->unit(), ng, x));
  if (!(p * p == p)) throw AxiomFailure("p_x does not act idempotently");
  return column_space(p);
}

std::vector<std::size_t> component_dims(const AlgModule& m) {
  const auto& info = coproduct_info(*m.algebra);
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < info.g->order(); ++x)
    out.push_back(rank(m.act(lift_to_component(info.base->unit(), info.g->order(), x))));
  return out;
}

AlgModule component(const AlgModule& m, std::size_t x) {
  const auto& info = coproduct_info(*m.algebra);
  const std::size_t ng = info.g->order();
  auto s = invariant_subspace(m, component_basis(m, x));
  const auto& block = info.blocks.at(x);
  std::vector<Matrix> act;
  for (std::size_t b = 0; b < block->dim(); ++b) act.push_back(restrict_action(s, m.action[b * ng + x]));
  return make_module(block, std::move(act), m.name + "_" + info.g->label(x));
}

AlgModule place_in_component(const AlgModule& u, const AlgebraPtr& k, std::size_t x) {
  const auto& info = coproduct_info(*k);
  const std::size_t ng = info.g->order();
  if (x >= ng) throw Error("component index out of range");
  if (u.algebra != info.blocks[x] && !same_algebra(*u.algebra, *info.blocks[x]))
    throw Error("place_in_component: module is not over the block algebra K p_x");
  std::vector<Matrix> act(k->dim(), zero_matrix(k->field(), u.dim()));
  for (std::size_t b = 0; b < u.algebra->dim(); ++b) act[b * ng + x] = u.action[b];
  return make_module(k, std::move(act), "(" + u.name + ")(x)kp_" + info.g->label(x));
}

AlgebraPtr twisted_algebra_for(const CocycleSlice& alpha, const AlgebraPtr& k) {
  if (k) {
    if (const auto* info = std::get_if<CoproductInfo>(&k->info()))
      for (const auto& blk : info->blocks)
        if (const auto* gi = std::get_if<GroupAlgebraInfo>(&blk->info()); gi && gi->alpha == alpha) return blk;
  }
  return twisted_group_algebra(alpha);
}

AlgModule conjugate_module(const AlgModule& u, const AlgebraPtr& k, std::size_t y) {
  const auto& info = coproduct_info(*k);
  const auto& g = *info.g;
  const std::size_t yi = g.inv(y);
  const std::string name = g.label(y) + "(" + u.name + ")";
  if (info.kind == CoproductInfo::Kind::Smash) {
    if (u.algebra != info.base && !same_algebra(*u.algebra, *info.base))
      throw Error("conjugate_module: module is not over the base algebra");
    const Matrix& t = info.action[yi];
    std::vector<Matrix> act;
    for (std::size_t b = 0; b < u.algebra->dim(); ++b) {
      Matrix out = zero_matrix(u.field(), u.dim());
      for (std::size_t c = 0; c < t.rows(); ++c)
        if (!t(c, b).is_zero()) out.add_scaled(t(c, b), u.action[c]);
      act.push_back(std::move(out));
    }
    return make_module(info.base, std::move(act), name);
  }
  const auto& gi = group_info(*u.algebra, "conjugate_module");
  const auto& action = info.sigma->action;
  if (!same_group(gi.group, action.target())) throw Error("conjugate_module: module is over a different group");
  auto alg = twisted_algebra_for(conjugate_cocycle(gi.alpha, action, y), k);
  std::vector<Matrix> act;
  for (std::size_t l = 0; l < gi.group->order(); ++l) act.push_back(u.action[action.act(yi, l)]);
  return make_module(alg, std::move(act), name);
}

AlgModule twisted_tensor(const AlgModule& m, const AlgModule& n) {
  const auto& a = group_info(*m.algebra, "twisted_tensor");
  const auto& b = group_info(*n.algebra, "twisted_tensor");
  if (!same_group(a.group, b.group)) throw Error("twisted_tensor: modules over different groups");
  if (m.field() != n.field()) throw FieldMismatch("twisted_tensor: different fields");
  auto alg = twisted_group_algebra(cocycle_product(a.alpha, b.alpha));
  std::vector<Matrix> act;
  for (std::size_t l = 0; l < a.group->order(); ++l) act.push_back(kronecker(m.action[l], n.action[l]));
  return make_module(alg, std::move(act), "(" + m.name + ")(x)(" + n.name + ")");
}

AlgModule twisted_dual(const AlgModule& m) {
  const auto& a = group_info(*m.algebra, "twisted_dual");
  const auto& l = *a.group;
  auto alg = twisted_group_algebra(cocycle_inverse(a.alpha));
  std::vector<Matrix> act;
  for (std::size_t x = 0; x < l.order(); ++x) {
    const std::size_t xi = l.inv(x);
    // (x-bar)^-1 = alpha(x^-1, x)^-1 (x^-1)-bar
    act.push_back((a.alpha(xi, x).inverse() * m.action[xi]).transpose());
  }
  return make_module(alg, std::move(act), "(" + m.name + ")*");
}

namespace {

// Block-algebra module W with the given action, compared against the K-module T
// on the span of `basis` inside component x.
Report compare_on_component(const AlgModule& t, const Matrix& basis, std::size_t x, const std::vector<Matrix>& w,
                            const std::string& what) {
  const auto& info = coproduct_info(*t.algebra);
  const std::size_t ng = info.g->order();
  const auto& block = *info.blocks[x];
  for (std::size_t b = 0; b < block.dim(); ++b)
    if (!(t.action[b * ng + x] * basis == basis * w[b]))
      return Report::fail(what + ": canonical map fails to intertwine " + block.label(b) + "#p_" + info.g->label(x));
  return Report::pass();
}

}  // namespace

Report verify_component_decomposition(const AlgModule& m, const AlgModule& n) {
  require_same_algebra(m, n, "verify_component_decomposition");
  const auto& k = m.algebra;
  const auto& info = coproduct_info(*k);
  const auto& g = *info.g;
  const std::size_t ng = g.order();
  const FieldSpec f = m.field();
  const bool crossed = info.kind == CoproductInfo::Kind::Crossed;

  std::vector<Matrix> bm, bn;
  std::vector<AlgModule> cm, cn;
  for (std::size_t x = 0; x < ng; ++x) {
    bm.push_back(component_basis(m, x));
    bn.push_back(component_basis(n, x));
    cm.push_back(component(m, x));
    cn.push_back(component(n, x));
  }
  std::size_t total = 0;
  for (const auto& b : bm) total += b.cols();
  if (total != m.dim()) return Report::fail("components of M do not add up to M");

  const AlgModule t = tensor_module(m, n);
  for (std::size_t x = 0; x < ng; ++x) {
    std::vector<Matrix> cols;
    std::vector<std::vector<Matrix>> parts;  // per (y, z) summand, action of each block basis element
    for (std::size_t y = 0; y < ng; ++y) {
      const std::size_t z = g.mul(g.inv(y), x);
      if (bm[y].cols() == 0 || bn[z].cols() == 0) continue;
      cols.push_back(kronecker(bm[y], bn[z]));
      const AlgModule conj = conjugate_module(cn[z], k, y);
      std::vector<Matrix> w;
      if (!crossed) {
        const AlgModule tt = tensor_module(cm[y], conj);
        w = tt.action;
      } else {
        const AlgModule tt = twisted_tensor(cm[y], conj);
        // k^{sigma_x}L -> k^{sigma_y y(sigma_z)}L, l -> tau_{y,z}(l) l
        const auto& blk = info.blocks[x];
        Matrix phi(f, blk->dim(), blk->dim());
        for (std::size_t l = 0; l < blk->dim(); ++l) phi(l, l) = (*info.tau)(y, z, l);
        auto rep = check_algebra_map(AlgebraMap{blk, tt.algebra, phi});
        if (!rep)
          return Report::fail("l -> tau_{" + g.label(y) + "," + g.label(z) + "}(l) l is not an algebra map: " + rep.witness);
        for (std::size_t l = 0; l < blk->dim(); ++l) w.push_back((*info.tau)(y, z, l) * tt.action[l]);
      }
      parts.push_back(std::move(w));
    }
    const std::size_t dx = rank(t.act(lift_to_component(info.base->unit(), ng, x)));
    if (cols.empty()) {
      if (dx != 0) return Report::fail("(M(x)N)_" + g.label(x) + " is nonzero but no summand predicts it");
      continue;
    }
    const Matrix basis = hstack(cols);
    if (basis.cols() != dx)
      return Report::fail("(M(x)N)_" + g.label(x) + " has dimension " + std::to_string(dx) + ", summands give " +
                          std::to_string(basis.cols()));
    std::vector<Matrix> w;
    for (std::size_t b = 0; b < info.blocks[x]->dim(); ++b) {
      Matrix acc = parts[0][b];
      for (std::size_t p = 1; p < parts.size(); ++p) acc = hopfkit::direct_sum(acc, parts[p][b]);
      w.push_back(std::move(acc));
    }
    auto rep = compare_on_component(t, basis, x, w, "tensor, x=" + g.label(x));
    if (!rep) return rep;
  }

  // duals
  const AlgModule dual = dual_module(m);
  std::vector<Matrix> all;
  std::vector<std::size_t> offset(ng + 1, 0);
  for (std::size_t x = 0; x < ng; ++x) {
    if (bm[x].cols()) all.push_back(bm[x]);
    offset[x + 1] = offset[x] + bm[x].cols();
  }
  if (all.empty()) return Report::pass();
  auto cinv = inverse(hstack(all));
  if (!cinv) return Report::fail("component bases of M do not form a basis");
  for (std::size_t x = 0; x < ng; ++x) {
    const std::size_t y = g.inv(x);
    const std::size_t dy = bm[y].cols();
    const std::size_t dx = rank(dual.act(lift_to_component(info.base->unit(), ng, x)));
    if (dx != dy)
      return Report::fail("dim (M*)_" + g.label(x) + " = " + std::to_string(dx) + " but dim M_" + g.label(y) + " = " +
                          std::to_string(dy));
    if (dy == 0) continue;
    const Matrix basis = cinv->block(offset[y], 0, dy, m.dim()).transpose();
    std::vector<Matrix> w;
    if (!crossed) {
      w = conjugate_module(dual_module(cm[y]), k, x).action;
    } else {
      const AlgModule cd = conjugate_module(twisted_dual(cm[y]), k, x);
      const auto& blk = info.blocks[x];
      // k^{sigma_x}L -> k^{x(sigma_y^-1)}L, l -> tau_{x,y}(l)^-1 l
      Matrix phi(f, blk->dim(), blk->dim());
      for (std::size_t l = 0; l < blk->dim(); ++l) phi(l, l) = (*info.tau)(x, y, l).inverse();
      auto rep = check_algebra_map(AlgebraMap{blk, cd.algebra, phi});
      if (!rep)
        return Report::fail("l -> tau_{" + g.label(x) + "," + g.label(y) + "}(l)^-1 l is not an algebra map: " + rep.witness);
      for (std::size_t l = 0; l < blk->dim(); ++l) w.push_back((*info.tau)(x, y, l).inverse() * cd.action[l]);
    }
    auto rep = compare_on_component(dual, basis, x, w, "dual, x=" + g.label(x));
    if (!rep) return rep;
  }
  return Report::pass();
}

std::vector<Matrix> hom_space(const AlgModule& m, const AlgModule& n) {
  require_same_algebra(m, n, "hom_space");
  const FieldSpec f = m.field();
  const std::size_t dm = m.dim(), dn = n.dim();
  std::vector<Matrix> out;
  if (dm == 0 || dn == 0) return out;
  if (dm * dn > kMaxHomUnknowns)
    throw ResourceGuard("hom_space: " + std::to_string(dm) + " x " + std::to_string(dn) + " exceeds " +
                        std::to_string(kMaxHomUnknowns) + " unknowns");
  std::vector<SparseVec> rows;
  for (const auto& g : m.algebra->generators()) {
    const Matrix am = m.act(g), an = n.act(g);
    // column nonzeros of am, row nonzeros of an
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> am_col(dm), an_row(dn);
    for (std::size_t i = 0; i < dm; ++i)
      for (std::size_t j = 0; j < dm; ++j)
        if (!am(i, j).is_zero()) am_col[j].emplace_back(i, am(i, j));
    for (std::size_t i = 0; i < dn; ++i)
      for (std::size_t j = 0; j < dn; ++j)
        if (!an(i, j).is_zero()) an_row[i].emplace_back(j, an(i, j));
    // (F am - an F)_{ij} = sum_k F_ik am_kj - sum_k an_ik F_kj
    for (std::size_t i = 0; i < dn; ++i)
      for (std::size_t j = 0; j < dm; ++j) {
        SparseVec r;
        for (const auto& [k, c] : am_col[j]) r.terms.emplace_back(i * dm + k, c);
        for (const auto& [k, c] : an_row[i]) r.terms.emplace_back(k * dm + j, -c);
        r.normalize();
        if (!r.empty()) rows.push_back(std::move(r));
      }
  }
  for (const auto& v : sparse_kernel(std::move(rows), dm * dn, f)) {
    Matrix h(f, dn, dm);
    for (const auto& [idx, c] : v.terms) h(idx / dm, idx % dm) = c;
    out.push_back(std::move(h));
  }
  return out;
}

bool is_intertwiner(const AlgModule& m, const AlgModule& n, const Matrix& f) {
  if (f.rows() != n.dim() || f.cols() != m.dim()) return false;
  for (const auto& g : m.algebra->generators())
    if (!(f * m.act(g) == n.act(g) * f)) return false;
  return true;
}

std::string to_string(IsoVerdict::Kind k) {
  switch (k) {
    case IsoVerdict::Kind::Isomorphic: return "Isomorphic";
    case IsoVerdict::Kind::NotIsomorphic: return "NotIsomorphic";
    case IsoVerdict::Kind::Inconclusive: return "Inconclusive";
  }
  return "?";
}

IsoVerdict is_isomorphic(const AlgModule& m, const AlgModule& n, std::size_t trials, std::uint64_t seed) {
  require_same_algebra(m, n, "is_isomorphic");
  using K = IsoVerdict::Kind;
  const FieldSpec f = m.field();
  if (m.dim() != n.dim()) return {K::NotIsomorphic, std::nullopt, "dimensions differ"};
  if (m.dim() == 0) return {K::Isomorphic, Matrix(f, 0, 0), "both zero"};
  if (std::holds_alternative<CoproductInfo>(m.algebra->info())) {
    auto a = component_dims(m), b = component_dims(n);
    if (a != b) return {K::NotIsomorphic, std::nullopt, "component dimensions differ"};
  }
  const bool all_basis = m.algebra->dim() * m.dim() <= 2048;
  const std::size_t probes = all_basis ? m.algebra->dim() : m.algebra->generators().size();
  for (std::size_t i = 0; i < probes; ++i) {
    const Matrix am = all_basis ? m.action[i] : m.act(m.algebra->generators()[i]);
    const Matrix an = all_basis ? n.action[i] : n.act(n.algebra->generators()[i]);
    if (rank(am) != rank(an))
      return {K::NotIsomorphic, std::nullopt,
              "rank of the action of " + (all_basis ? m.algebra->label(i) : "generator " + std::to_string(i)) + " differs"};
  }
  const auto h = hom_space(m, n);
  if (h.empty()) return {K::NotIsomorphic, std::nullopt, "Hom(M, N) = 0"};
  const auto em = hom_space(m, m).size(), en = hom_space(n, n).size();
  if (em != en || em != h.size())
    return {K::NotIsomorphic, std::nullopt,
            "hom dimensions (End M, End N, Hom(M,N)) = (" + std::to_string(em) + "," + std::to_string(en) + "," +
                std::to_string(h.size()) + ")"};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> coef(-7, 7);
  for (std::size_t t = 0; t < std::max<std::size_t>(trials, 1); ++t) {
    Matrix c(f, n.dim(), m.dim());
    for (const auto& b : h) c.add_scaled(Scalar::from_int(f, coef(rng)), b);
    if (rank(c) == m.dim() && is_intertwiner(m, n, c)) return {K::Isomorphic, c, "invertible intertwiner found"};
  }
  return {K::Inconclusive, std::nullopt, "no invertible intertwiner among " + std::to_string(trials) + " samples"};
}

Report rigidity_check(const AlgModule& m) {
  require_hopf(m, "rigidity_check");
  const auto& a = *m.algebra;
  const auto& h = *a.hopf();
  const FieldSpec f = m.field();
  const std::size_t d = m.dim(), na = a.dim();
  const AlgModule dual = dual_module(m);
  const Matrix id = Matrix::identity(f, d);
  for (const auto& g : a.generators()) {
    Scalar eps = Scalar::zero(f);
    for (const auto& [i, c] : g.terms) eps += c * h.counit[i];
    SparseVec dg;
    for (const auto& [i, c] : g.terms) dg = sum(dg, scaled(h.comul[i], c));
    // ev o (g on M* (x) M) reshapes to sum X^T Y, and (g on M (x) M*) o coev to sum Y X^T
    Matrix ev_side(f, d, d), coev_side(f, d, d);
    for (const auto& [idx, c] : dg.terms) {
      const std::size_t i = idx / na, j = idx % na;
      ev_side.add_scaled(c, dual.action[i].transpose() * m.action[j]);
      coev_side.add_scaled(c, m.action[i] * dual.action[j].transpose());
    }
    Matrix expect = id;
    expect.scale(eps);
    if (!(ev_side == expect)) return Report::fail("ev is not a module map at " + a.element_to_string(g));
    if (!(coev_side == expect)) return Report::fail("coev is not a module map at " + a.element_to_string(g));
  }
  // coev(1) = sum_i m_i (x) f_i in M (x) M*, ev(f_b (x) m_c) = f_b(m_c); as d x d arrays
  // the composite (id (x) ev)(coev (x) id) is their matrix product
  Matrix coev(f, d, d), ev(f, d, d);
  for (std::size_t i = 0; i < d; ++i) {
    coev(i, i) = Scalar::one(f);
    ev(i, i) = Scalar::one(f);
  }
  const Matrix comp = coev * ev;
  if (!comp.is_identity() && d) return Report::fail("(id (x) ev)(coev (x) id) is not the identity");
  return Report::pass();
}

}  // namespace hopfkit
