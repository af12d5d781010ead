#include "hopfkit/constructors.hpp"

#include <numeric>

namespace hopfkit {

namespace {

SparseVec unit_vec(std::size_t i, FieldSpec f) { return SparseVec::single(i, Scalar::one(f)); }

std::string power_label(const std::string& sym, std::uint32_t e) {
  if (e == 0) return "";
  return e == 1 ? sym : sym + "^" + std::to_string(e);
}

// g^i x^j in factor `k` (suffix omitted when there is a single factor).
std::string taft_label(std::uint32_t i, std::uint32_t j, const std::string& suffix) {
  std::string s = power_label("g" + suffix, i) + power_label("x" + suffix, j);
  return s;
}

std::vector<std::string> qea_labels(std::uint32_t n, std::uint32_t m) {
  std::size_t dim = 1;
  for (std::uint32_t k = 0; k < m; ++k) dim *= n * n;
  std::vector<std::string> labels(dim);
  for (std::size_t idx = 0; idx < dim; ++idx) {
    std::size_t rest = idx;
    std::vector<std::size_t> parts(m);
    for (std::uint32_t k = m; k-- > 0;) {
      parts[k] = rest % (n * n);
      rest /= n * n;
    }
    std::string s;
    for (std::uint32_t k = 0; k < m; ++k) {
      const auto i = static_cast<std::uint32_t>(parts[k] / n), j = static_cast<std::uint32_t>(parts[k] % n);
      s += taft_label(i, j, m > 1 ? std::to_string(k + 1) : "");
    }
    labels[idx] = s.empty() ? "1" : s;
  }
  return labels;
}

std::shared_ptr<BasisAlgebra> finish_build(std::shared_ptr<BasisAlgebra> a, const BuildOptions& opts) {
  if (opts.verify) require_axioms(*a);
  return a;
}

// Hopf data on a basis of monomials in generators, extended multiplicatively:
// basis element b = w_b[0] w_b[1] ... as a word in generator basis indices.
HopfData extend_hopf(const BasisAlgebra& a, const std::vector<std::vector<std::size_t>>& words,
                     const std::map<std::size_t, SparseVec>& gen_comul, const std::map<std::size_t, Scalar>& gen_counit,
                     const std::map<std::size_t, SparseVec>& gen_antipode) {
  const FieldSpec f = a.field();
  const std::size_t n = a.dim();
  HopfData h;
  for (std::size_t b = 0; b < n; ++b) {
    SparseVec d = tensor(a.unit(), a.unit(), n);
    SparseVec s = a.unit();
    Scalar e = Scalar::one(f);
    for (auto g : words[b]) {
      d = tensor_multiply(a, a, d, gen_comul.at(g));
      s = a.multiply(gen_antipode.at(g), s);  // anti-multiplicative
      e *= gen_counit.at(g);
    }
    // words give the basis element up to the scalar a.multiply produces; recover it
    SparseVec prod = a.unit();
    for (auto g : words[b]) prod = a.multiply(prod, unit_vec(g, f));
    if (prod.terms.size() != 1 || prod.terms[0].first != b)
      throw Error("internal: word does not evaluate to basis element " + a.label(b));
    const Scalar c = prod.terms[0].second.inverse();
    h.comul.push_back(scaled(d, c));
    h.antipode.push_back(scaled(s, c));
    h.counit.push_back(e * c);
  }
  return h;
}

}  // namespace

void require_axioms(const BasisAlgebra& a) {
  auto r = check_hopf_axioms(a);
  if (!r) throw AxiomFailure((a.name().empty() ? std::string("algebra") : a.name()) + ": " + r.witness);
}

AlgebraPtr group_algebra(GroupPtr group, FieldSpec field, BuildOptions opts) {
  const auto& g = *group;
  const std::size_t n = g.order();
  std::vector<SparseVec> prod(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) prod[a * n + b] = unit_vec(g.mul(a, b), field);
  std::vector<SparseVec> gens;
  for (auto s : g.generators()) gens.push_back(unit_vec(s, field));
  auto alg = std::make_shared<BasisAlgebra>(field, g.labels(), std::move(prod), unit_vec(g.identity(), field), gens);
  HopfData h;
  for (std::size_t a = 0; a < n; ++a) {
    h.comul.push_back(unit_vec(a * n + a, field));
    h.counit.push_back(Scalar::one(field));
    h.antipode.push_back(unit_vec(g.inv(a), field));
  }
  alg->set_hopf(std::move(h));
  alg->set_info(GroupAlgebraInfo{group, CocycleSlice::trivial(group, field)});
  alg->set_name("kG (|G|=" + std::to_string(n) + ")");
  return finish_build(alg, opts);
}

AlgebraPtr dual_group_algebra(GroupPtr group, FieldSpec field, BuildOptions opts) {
  const auto& g = *group;
  const std::size_t n = g.order();
  std::vector<SparseVec> prod(n * n);
  for (std::size_t x = 0; x < n; ++x) prod[x * n + x] = unit_vec(x, field);
  SparseVec one;
  for (std::size_t x = 0; x < n; ++x) one.terms.emplace_back(x, Scalar::one(field));
  std::vector<std::string> labels;
  for (const auto& l : g.labels()) labels.push_back("p_" + l);
  auto alg = std::make_shared<BasisAlgebra>(field, std::move(labels), std::move(prod), one);
  HopfData h;
  for (std::size_t x = 0; x < n; ++x) {
    SparseVec d;
    for (std::size_t y = 0; y < n; ++y) d.terms.emplace_back(y * n + g.mul(g.inv(y), x), Scalar::one(field));
    d.normalize();
    h.comul.push_back(std::move(d));
    h.counit.push_back(x == g.identity() ? Scalar::one(field) : Scalar::zero(field));
    h.antipode.push_back(unit_vec(g.inv(x), field));
  }
  alg->set_hopf(std::move(h));
  alg->set_info(DualGroupInfo{group});
  alg->set_name("k^G (|G|=" + std::to_string(n) + ")");
  return finish_build(alg, opts);
}

AlgebraPtr twisted_group_algebra(const CocycleSlice& alpha, bool validate) {
  if (validate) {
    auto r = check_cocycle(alpha);
    if (!r) throw InvalidCocycle(r.witness);
  }
  const auto& g = *alpha.group();
  const FieldSpec f = alpha.field();
  const std::size_t n = g.order();
  std::vector<SparseVec> prod(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) prod[a * n + b] = SparseVec::single(g.mul(a, b), alpha(a, b));
  std::vector<SparseVec> gens;
  for (auto s : g.generators()) gens.push_back(unit_vec(s, f));
  auto alg = std::make_shared<BasisAlgebra>(f, g.labels(), std::move(prod), unit_vec(g.identity(), f), gens);
  alg->set_info(GroupAlgebraInfo{alpha.group(), alpha});
  alg->set_name(alpha.is_trivial() ? "kL" : "k^alpha L");
  if (validate) require_axioms(*alg);
  return alg;
}

AlgebraPtr truncated_polynomial_algebra(std::uint32_t n, FieldSpec field) {
  if (n == 0) throw Error("k[t]/(t^n) needs n >= 1");
  std::vector<SparseVec> prod(static_cast<std::size_t>(n) * n);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      if (i + j < n) prod[i * n + j] = unit_vec(i + j, field);
  std::vector<std::string> labels;
  for (std::uint32_t i = 0; i < n; ++i) labels.push_back(i == 0 ? "1" : power_label("t", i));
  std::vector<SparseVec> gens;
  if (n > 1) gens.push_back(unit_vec(1, field));
  auto alg = std::make_shared<BasisAlgebra>(field, std::move(labels), std::move(prod), unit_vec(0, field), gens);
  alg->set_info(TruncatedPolyInfo{n});
  alg->set_name("k[t]/(t^" + std::to_string(n) + ")");
  return alg;
}

AlgebraPtr taft_algebra(std::uint32_t n, FieldSpec field, BuildOptions opts) {
  if (n < 2) throw Error("Taft algebra needs n >= 2");
  if (field.characteristic() != 0 && n % field.characteristic() == 0)
    throw UnsupportedRoot("characteristic divides n");
  const Scalar q = primitive_root_of_unity(field, n);
  const Scalar qi = q.inverse();
  const std::size_t d = static_cast<std::size_t>(n) * n;
  std::vector<SparseVec> prod(d * d);
  // (g^i x^j)(g^k x^l) = q^{-jk} g^{i+k} x^{j+l}
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      for (std::uint32_t k = 0; k < n; ++k)
        for (std::uint32_t l = 0; l < n; ++l) {
          if (j + l >= n) continue;
          const std::size_t target = ((i + k) % n) * n + (j + l);
          prod[(i * n + j) * d + (k * n + l)] = SparseVec::single(target, qi.pow(static_cast<std::int64_t>(j) * k));
        }
  const std::size_t g = n, x = 1;  // basis indices of g and x
  auto alg = std::make_shared<BasisAlgebra>(field, qea_labels(n, 1), std::move(prod), unit_vec(0, field),
                                            std::vector<SparseVec>{unit_vec(g, field), unit_vec(x, field)});
  std::vector<std::vector<std::size_t>> words(d);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) {
      auto& w = words[i * n + j];
      w.insert(w.end(), i, g);
      w.insert(w.end(), j, x);
    }
  const std::size_t g_inv = static_cast<std::size_t>(n - 1) * n;
  std::map<std::size_t, SparseVec> comul = {
      {g, unit_vec(g * d + g, field)},
      {x, sum(unit_vec(0 * d + x, field), unit_vec(x * d + g, field))}};
  std::map<std::size_t, Scalar> counit = {{g, Scalar::one(field)}, {x, Scalar::zero(field)}};
  std::map<std::size_t, SparseVec> antipode = {
      {g, unit_vec(g_inv, field)},
      {x, scaled(alg->multiply(unit_vec(x, field), unit_vec(g_inv, field)), -Scalar::one(field))}};
  alg->set_hopf(extend_hopf(*alg, words, comul, counit, antipode));
  alg->set_info(QeaInfo{n, 1, q});
  alg->set_name("T_" + std::to_string(n));
  return finish_build(alg, opts);
}

AlgebraPtr tensor_algebra(const AlgebraPtr& a_ptr, const AlgebraPtr& b_ptr, BuildOptions opts) {
  const auto& a = *a_ptr;
  const auto& b = *b_ptr;
  if (a.field() != b.field()) throw FieldMismatch("tensor_algebra: factors over different fields");
  const FieldSpec f = a.field();
  const std::size_t da = a.dim(), db = b.dim(), d = da * db;
  std::vector<SparseVec> prod(d * d);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < db; ++j)
      for (std::size_t k = 0; k < da; ++k)
        for (std::size_t l = 0; l < db; ++l)
          prod[(i * db + j) * d + (k * db + l)] = tensor(a.product(i, k), b.product(j, l), db);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < db; ++j) labels.push_back(a.label(i) + "⊗" + b.label(j));
  std::vector<SparseVec> gens;
  for (const auto& g : a.generators()) gens.push_back(tensor(g, b.unit(), db));
  for (const auto& g : b.generators()) gens.push_back(tensor(a.unit(), g, db));
  auto alg = std::make_shared<BasisAlgebra>(f, std::move(labels), std::move(prod), tensor(a.unit(), b.unit(), db),
                                            std::move(gens));
  if (a.hopf() && b.hopf()) {
    const auto& ha = *a.hopf();
    const auto& hb = *b.hopf();
    HopfData h;
    for (std::size_t i = 0; i < da; ++i)
      for (std::size_t j = 0; j < db; ++j) {
        SparseVec c;
        for (const auto& [ia, ca] : ha.comul[i].terms)
          for (const auto& [jb, cb] : hb.comul[j].terms) {
            const std::size_t p = ia / da, q = ia % da, r = jb / db, s = jb % db;
            c.terms.emplace_back((p * db + r) * d + (q * db + s), ca * cb);
          }
        c.normalize();
        h.comul.push_back(std::move(c));
        h.counit.push_back(ha.counit[i] * hb.counit[j]);
        h.antipode.push_back(tensor(ha.antipode[i], hb.antipode[j], db));
      }
    alg->set_hopf(std::move(h));
  }
  const auto* qa = std::get_if<QeaInfo>(&a.info());
  const auto* qb = std::get_if<QeaInfo>(&b.info());
  if (qa && qb && qa->n == qb->n && qa->q == qb->q) {
    alg->set_info(QeaInfo{qa->n, qa->m + qb->m, qa->q});
    alg->set_labels(qea_labels(qa->n, qa->m + qb->m));
    alg->set_name("T_" + std::to_string(qa->n) + "^(x)" + std::to_string(qa->m + qb->m));
  } else {
    alg->set_name(a.name() + " (x) " + b.name());
  }
  return finish_build(alg, opts);
}

AlgebraPtr quantum_elem_abelian(std::uint32_t n, std::uint32_t m, FieldSpec field, BuildOptions opts) {
  if (m == 0) throw Error("quantum elementary abelian group needs m >= 1");
  if (field.characteristic() != 0) throw Error("quantum elementary abelian groups are built in characteristic 0");
  BuildOptions inner{false};
  AlgebraPtr t = taft_algebra(n, field, opts);
  AlgebraPtr a = t;
  for (std::uint32_t k = 1; k < m; ++k) a = tensor_algebra(a, t, inner);
  if (opts.verify && m > 1) require_axioms(*a);
  return a;
}

Matrix tensor_factor_permutation(FieldSpec f, std::size_t d, std::size_t m, const std::vector<std::size_t>& perm) {
  if (perm.size() != m) throw DimensionMismatch("permutation length must equal the number of factors");
  std::size_t dim = 1;
  for (std::size_t k = 0; k < m; ++k) dim *= d;
  Matrix out(f, dim, dim);
  std::vector<std::size_t> digits(m), moved(m);
  for (std::size_t idx = 0; idx < dim; ++idx) {
    std::size_t rest = idx;
    for (std::size_t k = m; k-- > 0;) {
      digits[k] = rest % d;
      rest /= d;
    }
    for (std::size_t k = 0; k < m; ++k) moved[perm[k]] = digits[k];
    std::size_t target = 0;
    for (std::size_t k = 0; k < m; ++k) target = target * d + moved[k];
    out(target, idx) = Scalar::one(f);
  }
  return out;
}

std::vector<Matrix> extend_group_matrices(const FiniteGroup& g, FieldSpec field, std::size_t d,
                                          const std::map<std::size_t, Matrix>& generator_images) {
  std::vector<std::optional<Matrix>> img(g.order());
  img[g.identity()] = Matrix::identity(field, d);
  std::vector<std::size_t> frontier{g.identity()};
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (auto x : frontier)
      for (const auto& [s, ms] : generator_images) {
        if (ms.rows() != d || ms.cols() != d) throw DimensionMismatch("generator image has the wrong shape");
        const std::size_t xs = g.mul(x, s);
        Matrix prod = *img[x] * ms;
        if (!img[xs]) {
          img[xs] = std::move(prod);
          next.push_back(xs);
        } else if (!(*img[xs] == prod)) {
          throw Error("generator images do not define a representation of G");
        }
      }
    frontier = std::move(next);
  }
  std::vector<Matrix> out;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (!img[x]) throw Error("listed generators do not generate G");
    out.push_back(std::move(*img[x]));
  }
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::size_t y = 0; y < g.order(); ++y)
      if (!(out[g.mul(x, y)] == out[x] * out[y])) throw Error("generator images do not define a representation of G");
  return out;
}

namespace {

Matrix recast(const Matrix& m, FieldSpec f) {
  if (m.field() == f) return m;
  Matrix out(f, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto& s = m(i, j);
      if (s.field().kind() != FieldSpec::Kind::Rationals) throw FieldMismatch("action matrix over the wrong field");
      out(i, j) = Scalar::from_rational(f, s.rational());
    }
  return out;
}

}  // namespace

AlgebraPtr smash_coproduct(const AlgebraPtr& a_ptr, GroupPtr g_ptr, std::vector<Matrix> action, BuildOptions opts) {
  const auto& a = *a_ptr;
  const auto& g = *g_ptr;
  const FieldSpec f = a.field();
  if (!a.hopf()) throw Error("smash_coproduct needs a Hopf algebra");
  if (action.size() != g.order()) throw DimensionMismatch("need one action matrix per group element");
  for (auto& m : action) m = recast(m, f);
  if (!action[g.identity()].is_identity()) throw AxiomFailure("identity of G must act trivially");
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::size_t y = 0; y < g.order(); ++y)
      if (!(action[g.mul(x, y)] == action[x] * action[y]))
        throw AxiomFailure("action is not a homomorphism at (" + g.label(x) + "," + g.label(y) + ")");
  for (std::size_t x = 0; x < g.order(); ++x) {
    auto r = check_hopf_automorphism(a, action[x]);
    if (!r) throw AxiomFailure("element " + g.label(x) + " does not act by Hopf automorphisms: " + r.witness);
  }
  const std::size_t da = a.dim(), ng = g.order(), d = da * ng;
  std::vector<SparseVec> act_img(ng * da);  // act_img[x * da + b] = x . e_b
  for (std::size_t x = 0; x < ng; ++x)
    for (std::size_t b = 0; b < da; ++b) act_img[x * da + b] = apply_matrix(action[x], unit_vec(b, f));
  auto lift = [ng](const SparseVec& v, std::size_t x) {
    SparseVec out;
    for (const auto& [b, c] : v.terms) out.terms.emplace_back(b * ng + x, c);
    return out;
  };
  std::vector<SparseVec> prod(d * d);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j)
      for (std::size_t x = 0; x < ng; ++x) prod[(i * ng + x) * d + (j * ng + x)] = lift(a.product(i, j), x);
  SparseVec one;
  for (std::size_t x = 0; x < ng; ++x) one = sum(one, lift(a.unit(), x));
  std::vector<SparseVec> gens;
  for (const auto& gen : a.generators()) {
    SparseVec s;
    for (std::size_t x = 0; x < ng; ++x) s = sum(s, lift(gen, x));
    gens.push_back(std::move(s));
  }
  for (std::size_t x = 0; x < ng; ++x) gens.push_back(lift(a.unit(), x));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t x = 0; x < ng; ++x) labels.push_back(a.label(i) + "#p_" + g.label(x));
  auto k = std::make_shared<BasisAlgebra>(f, std::move(labels), std::move(prod), one, std::move(gens));
  const auto& ha = *a.hopf();
  HopfData h;
  h.comul.resize(d);
  h.antipode.resize(d);
  h.counit.assign(d, Scalar::zero(f));
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t x = 0; x < ng; ++x) {
      const std::size_t idx = i * ng + x;
      // Delta(a # p_x) = sum_y (a1 # p_y) (x) ((y^-1 . a2) # p_{y^-1 x})
      std::vector<std::pair<std::size_t, Scalar>> terms;
      for (std::size_t y = 0; y < ng; ++y) {
        const std::size_t yi = g.inv(y), z = g.mul(yi, x);
        for (const auto& [t, c] : ha.comul[i].terms) {
          const std::size_t a1 = t / da, a2 = t % da;
          for (const auto& [b2, u] : act_img[yi * da + a2].terms)
            terms.emplace_back((a1 * ng + y) * d + (b2 * ng + z), c * u);
        }
      }
      SparseVec dv;
      dv.terms = std::move(terms);
      dv.normalize();
      h.comul[idx] = std::move(dv);
      if (x == g.identity()) h.counit[idx] = ha.counit[i];
      // S(a # p_x) = (x^-1 . S(a)) # p_{x^-1}
      const std::size_t xi = g.inv(x);
      h.antipode[idx] = lift(apply_basis_map(std::vector<SparseVec>(act_img.begin() + static_cast<std::ptrdiff_t>(xi * da),
                                                                    act_img.begin() + static_cast<std::ptrdiff_t>((xi + 1) * da)),
                                             ha.antipode[i]),
                             xi);
    }
  k->set_hopf(std::move(h));
  CoproductInfo info;
  info.kind = CoproductInfo::Kind::Smash;
  info.g = g_ptr;
  info.base = a_ptr;
  info.blocks.assign(ng, a_ptr);
  info.action = std::move(action);
  k->set_info(std::move(info));
  k->set_name("(" + a.name() + ")#k^G");
  return finish_build(k, opts);
}

AlgebraPtr crossed_coproduct(const SigmaCocycle& sigma, const TauCocycle& tau, BuildOptions opts) {
  auto r = validate_compatibility(sigma, tau);
  if (!r) throw CompatibilityError(r.witness);
  const auto& act = sigma.action;
  const auto& g = *act.acting();
  const auto& l = *act.target();
  const FieldSpec f = sigma.field();
  const std::size_t nl = l.order(), ng = g.order(), d = nl * ng;
  std::vector<SparseVec> prod(d * d);
  for (std::size_t a = 0; a < nl; ++a)
    for (std::size_t b = 0; b < nl; ++b)
      for (std::size_t x = 0; x < ng; ++x)
        prod[(a * ng + x) * d + (b * ng + x)] = SparseVec::single(l.mul(a, b) * ng + x, sigma(x, a, b));
  SparseVec one;
  for (std::size_t x = 0; x < ng; ++x) one.terms.emplace_back(l.identity() * ng + x, Scalar::one(f));
  std::vector<SparseVec> gens;
  for (auto s : l.generators()) {
    SparseVec v;
    for (std::size_t x = 0; x < ng; ++x) v.terms.emplace_back(s * ng + x, Scalar::one(f));
    gens.push_back(std::move(v));
  }
  for (std::size_t x = 0; x < ng; ++x) gens.push_back(unit_vec(l.identity() * ng + x, f));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < nl; ++a)
    for (std::size_t x = 0; x < ng; ++x) labels.push_back(l.label(a) + "#p_" + g.label(x));
  auto k = std::make_shared<BasisAlgebra>(f, std::move(labels), std::move(prod), one, std::move(gens));
  HopfData h;
  h.comul.resize(d);
  h.antipode.resize(d);
  h.counit.assign(d, Scalar::zero(f));
  for (std::size_t a = 0; a < nl; ++a)
    for (std::size_t x = 0; x < ng; ++x) {
      const std::size_t idx = a * ng + x;
      SparseVec dv;
      for (std::size_t y = 0; y < ng; ++y) {
        const std::size_t yi = g.inv(y), z = g.mul(yi, x);
        dv.terms.emplace_back((a * ng + y) * d + (act.act(yi, a) * ng + z), tau(y, z, a));
      }
      dv.normalize();
      h.comul[idx] = std::move(dv);
      if (x == g.identity()) h.counit[idx] = Scalar::one(f);
      const std::size_t xi = g.inv(x), ai = l.inv(a);
      h.antipode[idx] = SparseVec::single(act.act(xi, ai) * ng + xi, tau(x, xi, ai) * sigma(x, ai, a));
    }
  k->set_hopf(std::move(h));
  CoproductInfo info;
  info.kind = CoproductInfo::Kind::Crossed;
  info.g = act.acting();
  info.base = group_algebra(act.target(), f, BuildOptions{false});
  for (std::size_t x = 0; x < ng; ++x) info.blocks.push_back(twisted_group_algebra(sigma.slices[x], false));
  info.sigma = sigma;
  info.tau = tau;
  k->set_info(std::move(info));
  k->set_name("kL#_sigma^tau k^G");
  return finish_build(k, opts);
}

Matrix center(const BasisAlgebra& a) {
  std::vector<Matrix> blocks;
  for (const auto& g : a.generators()) blocks.push_back(a.left_multiplication(g) - a.right_multiplication(g));
  if (blocks.empty()) return Matrix::identity(a.field(), a.dim());
  return kernel_basis(vstack(blocks));
}

AlgebraPtr enveloping_algebra(const AlgebraPtr& a_ptr) {
  const auto& a = *a_ptr;
  const FieldSpec f = a.field();
  const std::size_t n = a.dim(), d = n * n;
  std::vector<SparseVec> prod(d * d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) prod[(i * n + j) * d + (k * n + l)] = tensor(a.product(i, k), a.product(l, j), n);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) labels.push_back(a.label(i) + "⊗" + a.label(j) + "°");
  std::vector<SparseVec> gens;
  for (const auto& g : a.generators()) gens.push_back(tensor(g, a.unit(), n));
  for (const auto& g : a.generators()) gens.push_back(tensor(a.unit(), g, n));
  auto e = std::make_shared<BasisAlgebra>(f, std::move(labels), std::move(prod), tensor(a.unit(), a.unit(), n),
                                          std::move(gens));
  e->set_name("(" + a.name() + ")^e");
  return e;
}

AlgebraMap delta_embedding(const CocycleSlice& alpha) {
  const auto& l = *alpha.group();
  const FieldSpec f = alpha.field();
  auto tw = twisted_group_algebra(alpha);
  auto env = enveloping_algebra(tw);
  auto kl = group_algebra(alpha.group(), f, BuildOptions{false});
  const std::size_t n = l.order();
  Matrix m(f, n * n, n);
  for (std::size_t a = 0; a < n; ++a) {
    const std::size_t ai = l.inv(a);
    // (a-bar)^-1 = alpha(a^-1, a)^-1 (a^-1)-bar
    m(a * n + ai, a) = alpha(ai, a).inverse();
  }
  AlgebraMap map{kl, env, std::move(m)};
  auto r = check_algebra_map(map);
  if (!r) throw AxiomFailure("delta embedding: " + r.witness);
  return map;
}

TauElement qea_tau_element(const AlgebraPtr& qea, const Vector& lambda) {
  const auto* info = std::get_if<QeaInfo>(&qea->info());
  if (!info) throw Error("qea_tau_element needs a quantum elementary abelian group");
  const std::uint32_t n = info->n, m = info->m;
  if (lambda.size() != m)
    throw DimensionMismatch("lambda must have " + std::to_string(m) + " entries, got " + std::to_string(lambda.size()));
  if (is_zero_vector(lambda)) throw Error("lambda = 0 gives tau = 0, which does not generate k[t]/(t^n)");
  const FieldSpec f = qea->field();
  const std::size_t nn = static_cast<std::size_t>(n) * n;
  SparseVec tau;
  for (std::uint32_t i = 0; i < m; ++i) {
    if (lambda[i].is_zero()) continue;
    std::size_t idx = 0;
    for (std::uint32_t k = 0; k < m; ++k) {
      std::size_t part = 0;
      if (k < i) part = n;  // g
      else if (k == i) part = 1;  // x
      idx = idx * nn + part;
    }
    tau.terms.emplace_back(idx, lambda[i]);
  }
  tau.normalize();
  auto poly = truncated_polynomial_algebra(n, f);
  Matrix mat(f, qea->dim(), n);
  SparseVec pw = qea->unit();
  for (std::uint32_t j = 0; j < n; ++j) {
    for (const auto& [i, c] : pw.terms) mat(i, j) = c;
    pw = qea->multiply(pw, tau);
  }
  if (!pw.empty()) throw AxiomFailure("tau(lambda)^n != 0");
  AlgebraMap emb{poly, qea, std::move(mat)};
  auto r = check_algebra_map(emb);
  if (!r) throw AxiomFailure("k[t]/(t^n) -> A via tau(lambda): " + r.witness);
  return {std::move(tau), std::move(emb)};
}

AlgebraMap qea_nilpotent_embedding(const AlgebraPtr& qea) {
  const auto* info = std::get_if<QeaInfo>(&qea->info());
  if (!info) throw Error("qea_nilpotent_embedding needs a quantum elementary abelian group");
  const std::uint32_t n = info->n, m = info->m;
  const FieldSpec f = qea->field();
  AlgebraPtr lambda = truncated_polynomial_algebra(n, f);
  for (std::uint32_t k = 1; k < m; ++k) lambda = tensor_algebra(lambda, truncated_polynomial_algebra(n, f), BuildOptions{false});
  const std::size_t nn = static_cast<std::size_t>(n) * n;
  Matrix mat(f, qea->dim(), lambda->dim());
  for (std::size_t idx = 0; idx < lambda->dim(); ++idx) {
    std::size_t rest = idx, target = 0, scale = 1;
    for (std::uint32_t k = 0; k < m; ++k) {
      target += (rest % n) * scale;  // x^j at index j inside the factor
      rest /= n;
      scale *= nn;
    }
    mat(target, idx) = Scalar::one(f);
  }
  AlgebraMap emb{lambda, qea, std::move(mat)};
  auto r = check_algebra_map(emb);
  if (!r) throw AxiomFailure("x-monomial subalgebra: " + r.witness);
  return emb;
}

AlgebraMap block_embedding(const AlgebraPtr& k, std::size_t x) {
  const auto* info = std::get_if<CoproductInfo>(&k->info());
  if (!info) throw Error("block_embedding needs a smash or crossed coproduct");
  const std::size_t ng = info->g->order();
  if (x >= ng) throw Error("block index out of range");
  const auto& block = info->blocks[x];
  Matrix m(k->field(), k->dim(), block->dim());
  for (std::size_t b = 0; b < block->dim(); ++b) m(b * ng + x, b) = Scalar::one(k->field());
  return {block, k, std::move(m)};
}

AlgebraMap subgroup_embedding(const AlgebraPtr& twisted, const Subgroup& h) {
  const auto* info = std::get_if<GroupAlgebraInfo>(&twisted->info());
  if (!info) throw Error("subgroup_embedding needs a (twisted) group algebra");
  const auto& sub = *h.group;
  std::vector<Scalar> vals;
  for (std::size_t a = 0; a < sub.order(); ++a)
    for (std::size_t b = 0; b < sub.order(); ++b) vals.push_back(info->alpha(h.embedding[a], h.embedding[b]));
  auto src = twisted_group_algebra(CocycleSlice(h.group, twisted->field(), std::move(vals)));
  Matrix m(twisted->field(), twisted->dim(), sub.order());
  for (std::size_t a = 0; a < sub.order(); ++a) m(h.embedding[a], a) = Scalar::one(twisted->field());
  return {src, twisted, std::move(m)};
}

}  // namespace hopfkit
