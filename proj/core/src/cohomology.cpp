#include "hopfkit/cohomology.hpp"

#include <algorithm>
#include <limits>

namespace hopfkit {

namespace {

// Normalized bar cochains Hom(Abar^{(x) n}, V) for an A-bimodule V, with
// (df)(a_1..a_{n+1}) = a_1 f(a_2..) + sum_i (-1)^i f(..a_i a_{i+1}..) + (-1)^{n+1} f(a_1..a_n) a_{n+1}.
// Abar is spanned by the basis elements other than one index j0 in the support of the unit.
struct BarData {
  FieldSpec field;
  std::size_t nb = 0;
  std::size_t dv = 0;
  // products_into[k] lists (a, b, c) with e_a e_b = c e_k + ... in Abar
  std::vector<std::vector<std::tuple<std::size_t, std::size_t, Scalar>>> products_into;
  // left[a][v], right[a][v]: image of value basis vector v
  std::vector<std::vector<SparseVec>> left, right;
};

std::vector<SparseVec> sparse_columns(const Matrix& m) {
  std::vector<SparseVec> out(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) out[c] = SparseVec::from_dense(m.col(c));
  return out;
}

BarData make_bar_data(const BasisAlgebra& a, const std::vector<Matrix>& left, const std::vector<Matrix>& right) {
  const auto& unit = a.unit().terms;
  if (unit.empty()) throw Error("bar complex: algebra has zero unit");
  const std::size_t j0 = unit.front().first;
  const Scalar c0_inv = unit.front().second.inverse();
  auto bar_index = [&](std::size_t i) { return i < j0 ? i : i - 1; };
  auto basis_index = [&](std::size_t b) { return b < j0 ? b : b + 1; };

  BarData d;
  d.field = a.field();
  d.nb = a.dim() - 1;
  d.dv = left.empty() ? 0 : left.front().rows();
  d.products_into.resize(d.nb);
  d.left.resize(d.nb);
  d.right.resize(d.nb);
  for (std::size_t x = 0; x < d.nb; ++x) {
    const std::size_t i = basis_index(x);
    d.left[x] = sparse_columns(left[i]);
    d.right[x] = sparse_columns(right[i]);
    for (std::size_t y = 0; y < d.nb; ++y) {
      SparseVec p = a.product(i, basis_index(y));
      // subtract the multiple of the unit that clears index j0
      Scalar t = Scalar::zero(d.field);
      for (const auto& [k, c] : p.terms)
        if (k == j0) t = c * c0_inv;
      if (!t.is_zero()) p = difference(p, scaled(a.unit(), t));
      for (const auto& [k, c] : p.terms) {
        if (k == j0) continue;
        d.products_into[bar_index(k)].emplace_back(x, y, c);
      }
    }
  }
  return d;
}

std::size_t checked_power(std::size_t base, std::size_t e, std::size_t times, std::size_t limit) {
  std::size_t r = times;
  for (std::size_t i = 0; i < e; ++i) {
    if (base != 0 && r > limit / base) return std::numeric_limits<std::size_t>::max();
    r *= base;
  }
  return r;
}

// d^n applied to the basis cochain that is v on the word w and zero elsewhere.
SparseVec bar_delta(const BarData& d, std::size_t n, std::size_t w, std::size_t v, const std::vector<std::size_t>& pw) {
  SparseVec out;
  const std::size_t nb = d.nb, dv = d.dv;
  const Scalar one = Scalar::one(d.field);
  for (std::size_t a = 0; a < nb; ++a) {
    const std::size_t word = a * pw[n] + w;
    for (const auto& [vv, c] : d.left[a][v].terms) out.terms.emplace_back(word * dv + vv, c);
  }
  for (std::size_t i = 1; i <= n; ++i) {
    // w = prefix * nb^{n-i+1} + w_i * nb^{n-i} + suffix
    const std::size_t low = pw[n - i];
    const std::size_t suffix = w % low;
    const std::size_t wi = (w / low) % nb;
    const std::size_t prefix = w / (low * nb);
    const Scalar sign = (i % 2 == 0) ? one : -one;
    for (const auto& [a, b, c] : d.products_into[wi]) {
      const std::size_t word = ((prefix * nb + a) * nb + b) * low + suffix;
      out.terms.emplace_back(word * dv + v, sign * c);
    }
  }
  const Scalar last = ((n + 1) % 2 == 0) ? one : -one;
  for (std::size_t a = 0; a < nb; ++a) {
    const std::size_t word = w * nb + a;
    for (const auto& [vv, c] : d.right[a][v].terms) out.terms.emplace_back(word * dv + vv, last * c);
  }
  out.normalize();
  return out;
}

CochainComplexSlice bar_cohomology(const BasisAlgebra& a, const std::vector<Matrix>& left,
                                   const std::vector<Matrix>& right, std::size_t n_max, const CohomologyOptions& opts) {
  const BarData d = make_bar_data(a, left, right);
  CochainComplexSlice out;
  out.n_max = n_max;
  std::vector<std::size_t> pw{1};
  for (std::size_t n = 0; n <= n_max + 1; ++n) {
    const std::size_t dim = checked_power(d.nb, n, d.dv, opts.max_cochain_dim);
    if (dim > opts.max_cochain_dim)
      throw ResourceGuard("cochain space C^" + std::to_string(n) + " exceeds " + std::to_string(opts.max_cochain_dim));
    out.cochain_dims.push_back(dim);
    pw.push_back(pw.back() * d.nb);
  }
  for (std::size_t n = 0; n <= n_max; ++n) {
    std::vector<SparseVec> cols;
    cols.reserve(out.cochain_dims[n]);
    SparseRowReducer red(d.field);
    for (std::size_t w = 0; w < pw[n]; ++w)
      for (std::size_t v = 0; v < d.dv; ++v) {
        cols.push_back(bar_delta(d, n, w, v, pw));
        red.insert(cols.back());
      }
    out.ranks.push_back(red.rank());
    out.differentials.push_back(std::move(cols));
  }
  for (std::size_t n = 0; n <= n_max; ++n)
    out.dims.push_back(out.cochain_dims[n] - out.ranks[n] - (n == 0 ? 0 : out.ranks[n - 1]));
  if (opts.check_d_squared) {
    for (std::size_t n = 0; n + 1 <= n_max && out.d_squared_zero; ++n) {
      const auto& next = out.differentials[n + 1];
      for (const auto& col : out.differentials[n]) {
        SparseVec acc;
        for (const auto& [k, c] : col.terms)
          for (const auto& [j, e] : next[k].terms) acc.terms.emplace_back(j, c * e);
        acc.normalize();
        if (!acc.empty()) {
          out.d_squared_zero = false;
          break;
        }
      }
    }
  }
  return out;
}

const GroupAlgebraInfo& untwisted_group_info(const BasisAlgebra& a) {
  const auto* g = std::get_if<GroupAlgebraInfo>(&a.info());
  if (g == nullptr || !g->alpha.is_trivial()) throw Error("group cohomology needs a module over an untwisted group algebra");
  return *g;
}

}  // namespace

AdjointModule adjoint_module(const CocycleSlice& alpha) {
  auto tw = twisted_group_algebra(alpha);
  const auto& l = *alpha.group();
  const FieldSpec f = alpha.field();
  auto kl = group_algebra(alpha.group(), f);
  const std::size_t n = l.order();
  auto e = [&](std::size_t i) { return SparseVec::single(i, Scalar::one(f)); };
  std::vector<Matrix> action;
  action.reserve(n);
  for (std::size_t g = 0; g < n; ++g) {
    const Scalar s = alpha(l.inv(g), g).inverse();
    Matrix m(f, n, n);
    for (std::size_t x = 0; x < n; ++x) {
      const SparseVec img = tw->multiply(tw->multiply(e(g), e(x)), e(l.inv(g)));
      for (const auto& [k, c] : img.terms) m(k, x) = s * c;
    }
    action.push_back(std::move(m));
  }
  AdjointModule out;
  out.group_algebra = kl;
  out.twisted = tw;
  out.module = make_module(kl, std::move(action), "ad");
  out.classes = conjugacy_classes(l);
  for (const auto& cls : out.classes) {
    Matrix basis(f, n, cls.size());
    for (std::size_t i = 0; i < cls.size(); ++i) basis(cls[i], i) = Scalar::one(f);
    out.summands.push_back(submodule(out.module, basis));
  }
  return out;
}

CochainComplexSlice group_cohomology_dims(const AlgModule& m, std::size_t n_max, const CohomologyOptions& opts) {
  untwisted_group_info(*m.algebra);
  const auto& a = *m.algebra;
  const auto& counit = a.hopf()->counit;
  std::vector<Matrix> right;
  right.reserve(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) right.push_back(counit[i] * Matrix::identity(m.field(), m.dim()));
  return bar_cohomology(a, m.action, right, n_max, opts);
}

CochainComplexSlice hochschild_dims(const AlgebraPtr& a, std::size_t n_max, const CohomologyOptions& opts) {
  std::vector<Matrix> left, right;
  for (std::size_t i = 0; i < a->dim(); ++i) {
    const auto e = SparseVec::single(i, Scalar::one(a->field()));
    left.push_back(a->left_multiplication(e));
    right.push_back(a->right_multiplication(e));
  }
  return bar_cohomology(*a, left, right, n_max, opts);
}

IsoAdReport verify_iso_ad(const CocycleSlice& alpha, std::size_t n_max, const CohomologyOptions& opts) {
  const auto ad = adjoint_module(alpha);
  const auto hh = hochschild_dims(ad.twisted, n_max, opts);
  const auto gc = group_cohomology_dims(ad.module, n_max, opts);
  IsoAdReport out{Report::pass(), hh.dims, gc.dims};
  if (!hh.d_squared_zero || !gc.d_squared_zero) {
    out.report = Report::fail("d^2 != 0 in a bar complex");
    return out;
  }
  for (std::size_t n = 0; n <= n_max; ++n)
    if (hh.dims[n] != gc.dims[n]) {
      out.report = Report::fail("degree " + std::to_string(n) + ": HH " + std::to_string(hh.dims[n]) + " vs H(L, ad) " +
                                std::to_string(gc.dims[n]));
      break;
    }
  return out;
}

EmbeddingReport verify_h_embedding(const CocycleSlice& alpha, std::size_t n_max, const CohomologyOptions& opts) {
  const auto ad = adjoint_module(alpha);
  const std::size_t id = alpha.group()->identity();
  std::size_t which = 0;
  for (std::size_t i = 0; i < ad.classes.size(); ++i)
    if (ad.classes[i] == std::vector<std::size_t>{id}) which = i;
  const auto& summand = ad.summands[which];
  EmbeddingReport out;
  out.report = Report::pass();
  // k 1bar must be the trivial module
  for (std::size_t g = 0; g < summand.action.size(); ++g)
    if (!summand.action[g].is_identity()) {
      out.report = Report::fail("k 1bar is not a trivial summand (element " + alpha.group()->label(g) + ")");
      return out;
    }
  out.summand = group_cohomology_dims(summand, n_max, opts).dims;
  out.trivial = group_cohomology_dims(trivial_module(ad.group_algebra), n_max, opts).dims;
  if (out.summand != out.trivial) out.report = Report::fail("summand and trivial-module cohomology differ");
  return out;
}

}  // namespace hopfkit
