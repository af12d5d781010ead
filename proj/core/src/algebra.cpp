#include "hopfkit/algebra.hpp"

#include <map>

namespace hopfkit {

namespace {

void push_scaled(std::vector<std::pair<std::size_t, Scalar>>& out, const SparseVec& v, const Scalar& c) {
  for (const auto& [i, x] : v.terms) {
    if (c.is_one())
      out.emplace_back(i, x);
    else
      out.emplace_back(i, x * c);
  }
}

SparseVec finish(std::vector<std::pair<std::size_t, Scalar>> terms) {
  SparseVec v;
  v.terms = std::move(terms);
  v.normalize();
  return v;
}

}  // namespace

SparseVec scaled(const SparseVec& v, const Scalar& s) {
  SparseVec out;
  if (s.is_zero()) return out;
  out.terms.reserve(v.terms.size());
  for (const auto& [i, x] : v.terms) out.terms.emplace_back(i, x * s);
  return out;
}

SparseVec sum(const SparseVec& a, const SparseVec& b) {
  std::vector<std::pair<std::size_t, Scalar>> t = a.terms;
  t.insert(t.end(), b.terms.begin(), b.terms.end());
  return finish(std::move(t));
}

SparseVec difference(const SparseVec& a, const SparseVec& b) {
  std::vector<std::pair<std::size_t, Scalar>> t = a.terms;
  for (const auto& [i, x] : b.terms) t.emplace_back(i, -x);
  return finish(std::move(t));
}

SparseVec tensor(const SparseVec& a, const SparseVec& b, std::size_t right_dim) {
  SparseVec out;
  out.terms.reserve(a.terms.size() * b.terms.size());
  for (const auto& [i, x] : a.terms)
    for (const auto& [j, y] : b.terms) out.terms.emplace_back(i * right_dim + j, x * y);
  return out;  // already sorted and nonzero
}

SparseVec tensor_multiply(const BasisAlgebra& a, const BasisAlgebra& b, const SparseVec& x, const SparseVec& y) {
  const std::size_t db = b.dim();
  std::vector<std::pair<std::size_t, Scalar>> out;
  for (const auto& [i, c] : x.terms)
    for (const auto& [j, d] : y.terms) {
      const Scalar cd = c * d;
      const auto& pa = a.product(i / db, j / db);
      const auto& pb = b.product(i % db, j % db);
      for (const auto& [k, u] : pa.terms)
        for (const auto& [l, w] : pb.terms) out.emplace_back(k * db + l, cd * u * w);
    }
  return finish(std::move(out));
}

SparseVec apply_basis_map(const std::vector<SparseVec>& images, const SparseVec& v) {
  std::vector<std::pair<std::size_t, Scalar>> out;
  for (const auto& [i, c] : v.terms) push_scaled(out, images.at(i), c);
  return finish(std::move(out));
}

SparseVec apply_matrix(const Matrix& m, const SparseVec& v) {
  std::vector<std::pair<std::size_t, Scalar>> out;
  for (const auto& [j, c] : v.terms)
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (!m(i, j).is_zero()) out.emplace_back(i, m(i, j) * c);
  return finish(std::move(out));
}

BasisAlgebra::BasisAlgebra(FieldSpec field, std::vector<std::string> labels, std::vector<SparseVec> products,
                           SparseVec unit, std::vector<SparseVec> generators)
    : field_(field),
      labels_(std::move(labels)),
      products_(std::move(products)),
      unit_(std::move(unit)),
      generators_(std::move(generators)) {
  const std::size_t n = labels_.size();
  if (products_.size() != n * n) throw DimensionMismatch("structure constants must have dim^2 entries");
  for (auto& p : products_) {
    p.normalize();
    for (const auto& [k, c] : p.terms) {
      if (k >= n) throw DimensionMismatch("structure constant index out of range");
      if (c.field() != field_) throw FieldMismatch("structure constant over the wrong field");
    }
  }
  unit_.normalize();
  if (generators_.empty())
    for (std::size_t i = 0; i < n; ++i) generators_.push_back(SparseVec::single(i, Scalar::one(field_)));
  for (auto& g : generators_) g.normalize();
}

std::size_t BasisAlgebra::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  throw Error("no basis element labelled '" + label + "'");
}

void BasisAlgebra::set_labels(std::vector<std::string> labels) {
  if (labels.size() != labels_.size()) throw DimensionMismatch("label count does not match the dimension");
  labels_ = std::move(labels);
}

SparseVec BasisAlgebra::multiply(const SparseVec& a, const SparseVec& b) const {
  std::vector<std::pair<std::size_t, Scalar>> out;
  for (const auto& [i, c] : a.terms)
    for (const auto& [j, d] : b.terms) push_scaled(out, product(i, j), c * d);
  return finish(std::move(out));
}

Matrix BasisAlgebra::left_multiplication(const SparseVec& a) const {
  Matrix m(field_, dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j)
    for (const auto& [i, c] : a.terms)
      for (const auto& [k, u] : product(i, j).terms) m(k, j) += c * u;
  return m;
}

Matrix BasisAlgebra::right_multiplication(const SparseVec& a) const {
  Matrix m(field_, dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j)
    for (const auto& [i, c] : a.terms)
      for (const auto& [k, u] : product(j, i).terms) m(k, j) += c * u;
  return m;
}

void BasisAlgebra::set_hopf(HopfData h) {
  const std::size_t n = dim();
  if (h.comul.size() != n || h.counit.size() != n || h.antipode.size() != n)
    throw DimensionMismatch("Hopf data has the wrong size");
  for (auto& v : h.comul) v.normalize();
  for (auto& v : h.antipode) v.normalize();
  hopf_ = std::move(h);
}

std::string BasisAlgebra::element_to_string(const SparseVec& v) const {
  if (v.empty()) return "0";
  std::string s;
  for (const auto& [i, c] : v.terms) {
    if (!s.empty()) s += " + ";
    if (!c.is_one()) s += "(" + c.to_string() + ")";
    s += labels_[i];
  }
  return s;
}

Report check_associativity(const BasisAlgebra& a) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const SparseVec& ij = a.product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        std::vector<std::pair<std::size_t, Scalar>> lhs, rhs;
        for (const auto& [t, c] : ij.terms) push_scaled(lhs, a.product(t, k), c);
        for (const auto& [t, c] : a.product(j, k).terms) push_scaled(rhs, a.product(i, t), c);
        if (lhs.size() == 1 && rhs.size() == 1 && lhs[0].first == rhs[0].first && lhs[0].second == rhs[0].second)
          continue;
        if (!(finish(std::move(lhs)).terms == finish(std::move(rhs)).terms))
          return Report::fail("(e_i e_j) e_k != e_i (e_j e_k) at (" + a.label(i) + "," + a.label(j) + "," +
                              a.label(k) + ")");
      }
    }
  return Report::pass();
}

Report check_unit(const BasisAlgebra& a) {
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const SparseVec e = SparseVec::single(i, Scalar::one(a.field()));
    if (!(a.multiply(a.unit(), e).terms == e.terms) || !(a.multiply(e, a.unit()).terms == e.terms))
      return Report::fail("unit law fails at " + a.label(i));
  }
  return Report::pass();
}

namespace {

// (Delta (x) id) or (id (x) Delta) applied to an element of A (x) A.
SparseVec comul_left(const BasisAlgebra& a, const SparseVec& t) {
  const std::size_t n = a.dim();
  std::vector<std::pair<std::size_t, Scalar>> out;
  for (const auto& [idx, c] : t.terms) {
    const std::size_t i = idx / n, j = idx % n;
    for (const auto& [d, u] : a.hopf()->comul[i].terms) out.emplace_back(d * n + j, c * u);
  }
  return finish(std::move(out));
}

SparseVec comul_right(const BasisAlgebra& a, const SparseVec& t) {
  const std::size_t n = a.dim();
  std::vector<std::pair<std::size_t, Scalar>> out;
  for (const auto& [idx, c] : t.terms) {
    const std::size_t i = idx / n, j = idx % n;
    for (const auto& [d, u] : a.hopf()->comul[j].terms) out.emplace_back(i * n * n + d, c * u);
  }
  return finish(std::move(out));
}

}  // namespace

Report check_coassociativity(const BasisAlgebra& a) {
  if (!a.hopf()) return Report::pass();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const auto& d = a.hopf()->comul[i];
    if (!(comul_left(a, d).terms == comul_right(a, d).terms))
      return Report::fail("coassociativity fails at " + a.label(i));
  }
  return Report::pass();
}

Report check_counit(const BasisAlgebra& a) {
  if (!a.hopf()) return Report::pass();
  const std::size_t n = a.dim();
  const auto& h = *a.hopf();
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::pair<std::size_t, Scalar>> l, r;
    for (const auto& [idx, c] : h.comul[i].terms) {
      const std::size_t p = idx / n, q = idx % n;
      if (!h.counit[p].is_zero()) l.emplace_back(q, c * h.counit[p]);
      if (!h.counit[q].is_zero()) r.emplace_back(p, c * h.counit[q]);
    }
    const SparseVec e = SparseVec::single(i, Scalar::one(a.field()));
    if (!(finish(std::move(l)).terms == e.terms) || !(finish(std::move(r)).terms == e.terms))
      return Report::fail("counit axiom fails at " + a.label(i));
  }
  return Report::pass();
}

Report check_bialgebra(const BasisAlgebra& a) {
  if (!a.hopf()) return Report::pass();
  const std::size_t n = a.dim();
  const auto& h = *a.hopf();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const SparseVec lhs = apply_basis_map(h.comul, a.product(i, j));
      const SparseVec rhs = tensor_multiply(a, a, h.comul[i], h.comul[j]);
      if (!(lhs.terms == rhs.terms))
        return Report::fail("Delta(e_i e_j) != Delta(e_i) Delta(e_j) at (" + a.label(i) + "," + a.label(j) + ")");
      Scalar eps = Scalar::zero(a.field());
      for (const auto& [k, c] : a.product(i, j).terms) eps.add_product(c, h.counit[k]);
      if (eps != h.counit[i] * h.counit[j])
        return Report::fail("epsilon is not multiplicative at (" + a.label(i) + "," + a.label(j) + ")");
    }
  const SparseVec du = apply_basis_map(h.comul, a.unit());
  if (!(du.terms == tensor(a.unit(), a.unit(), n).terms)) return Report::fail("Delta(1) != 1 (x) 1");
  Scalar eu = Scalar::zero(a.field());
  for (const auto& [k, c] : a.unit().terms) eu.add_product(c, h.counit[k]);
  if (!eu.is_one()) return Report::fail("epsilon(1) != 1");
  return Report::pass();
}

Report check_antipode(const BasisAlgebra& a) {
  if (!a.hopf()) return Report::pass();
  const std::size_t n = a.dim();
  const auto& h = *a.hopf();
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::pair<std::size_t, Scalar>> l, r;
    for (const auto& [idx, c] : h.comul[i].terms) {
      const std::size_t p = idx / n, q = idx % n;
      for (const auto& [s, u] : h.antipode[p].terms) push_scaled(l, a.product(s, q), c * u);
      for (const auto& [s, u] : h.antipode[q].terms) push_scaled(r, a.product(p, s), c * u);
    }
    const SparseVec expect = scaled(a.unit(), h.counit[i]);
    if (!(finish(std::move(l)).terms == expect.terms))
      return Report::fail("m(S (x) id) Delta != u epsilon at " + a.label(i));
    if (!(finish(std::move(r)).terms == expect.terms))
      return Report::fail("m(id (x) S) Delta != u epsilon at " + a.label(i));
  }
  return Report::pass();
}

Report check_hopf_axioms(const BasisAlgebra& a) {
  for (auto check : {check_unit, check_associativity, check_coassociativity, check_counit, check_bialgebra,
                     check_antipode}) {
    auto r = check(a);
    if (!r) return r;
  }
  return Report::pass();
}

SparseVec AlgebraMap::image(std::size_t basis_index) const {
  SparseVec v;
  for (std::size_t i = 0; i < matrix.rows(); ++i)
    if (!matrix(i, basis_index).is_zero()) v.terms.emplace_back(i, matrix(i, basis_index));
  return v;
}

SparseVec AlgebraMap::image(const SparseVec& v) const { return apply_matrix(matrix, v); }

Report check_algebra_map(const AlgebraMap& f, bool unital, bool injective) {
  const auto& s = *f.source;
  const auto& t = *f.target;
  if (f.matrix.rows() != t.dim() || f.matrix.cols() != s.dim()) return Report::fail("map has the wrong shape");
  std::vector<SparseVec> img(s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i) img[i] = f.image(i);
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < s.dim(); ++j) {
      const SparseVec lhs = apply_basis_map(img, s.product(i, j));
      const SparseVec rhs = t.multiply(img[i], img[j]);
      if (!(lhs.terms == rhs.terms))
        return Report::fail("map is not multiplicative at (" + s.label(i) + "," + s.label(j) + ")");
    }
  if (unital && !(apply_basis_map(img, s.unit()).terms == t.unit().terms)) return Report::fail("map is not unital");
  if (injective && rank(f.matrix) != s.dim()) return Report::fail("map is not injective");
  return Report::pass();
}

Report check_hopf_automorphism(const BasisAlgebra& a, const Matrix& m) {
  const std::size_t n = a.dim();
  if (m.rows() != n || m.cols() != n) return Report::fail("automorphism matrix has the wrong shape");
  auto as_map = std::make_shared<const BasisAlgebra>(a);
  if (auto r = check_algebra_map(AlgebraMap{as_map, as_map, m}, true, true); !r) return r;
  if (!a.hopf()) return Report::pass();
  const auto& h = *a.hopf();
  std::vector<SparseVec> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = apply_matrix(m, SparseVec::single(i, Scalar::one(a.field())));
  for (std::size_t i = 0; i < n; ++i) {
    // Delta(phi(e_i)) = (phi (x) phi) Delta(e_i)
    const SparseVec lhs = apply_basis_map(h.comul, img[i]);
    std::vector<std::pair<std::size_t, Scalar>> rhs;
    for (const auto& [idx, c] : h.comul[i].terms) {
      const SparseVec t = tensor(img[idx / n], img[idx % n], n);
      push_scaled(rhs, t, c);
    }
    if (!(lhs.terms == finish(std::move(rhs)).terms))
      return Report::fail("action does not commute with Delta at " + a.label(i));
    Scalar e = Scalar::zero(a.field());
    for (const auto& [k, c] : img[i].terms) e.add_product(c, h.counit[k]);
    if (e != h.counit[i]) return Report::fail("action does not preserve epsilon at " + a.label(i));
    if (!(apply_basis_map(h.antipode, img[i]).terms == apply_basis_map(img, h.antipode[i]).terms))
      return Report::fail("action does not commute with S at " + a.label(i));
  }
  return Report::pass();
}

}  // namespace hopfkit
