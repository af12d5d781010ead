#include "hopfkit/projectivity.hpp"

namespace hopfkit {

namespace {

ProjectivityVerdict verdict(bool p, Strategy s, std::string w) { return {p, s, std::move(w)}; }

bool is_power_of(std::size_t n, std::uint32_t p) {
  if (n == 0 || p < 2) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

Matrix span_columns(const BasisAlgebra& a, const std::vector<SparseVec>& vs) {
  std::vector<Vector> cols;
  for (const auto& v : vs) cols.push_back(v.to_dense(a.field(), a.dim()));
  if (cols.empty()) return Matrix(a.field(), a.dim(), 0);
  return column_space(Matrix::from_columns(a.field(), a.dim(), cols));
}

// Checks that `rad` spans a nilpotent two-sided ideal of codimension one.
Report check_local_radical(const BasisAlgebra& a, const std::vector<SparseVec>& rad) {
  const Matrix span = span_columns(a, rad);
  if (span.cols() + 1 != a.dim())
    return Report::fail("radical candidate has dimension " + std::to_string(span.cols()) + ", expected " +
                        std::to_string(a.dim() - 1));
  const FieldSpec f = a.field();
  auto in_span = [&](const Matrix& s, const SparseVec& v) {
    if (v.empty()) return true;
    Matrix col = Matrix::column(v.to_dense(f, a.dim()));
    return rank(hstack({s, col})) == s.cols();
  };
  for (const auto& g : a.generators())
    for (const auto& r : rad)
      if (!in_span(span, a.multiply(g, r)) || !in_span(span, a.multiply(r, g)))
        return Report::fail("radical candidate is not an ideal");
  std::vector<SparseVec> power = rad;
  for (std::size_t step = 0; step <= a.dim(); ++step) {
    std::vector<SparseVec> next;
    for (const auto& v : power)
      for (const auto& r : rad) {
        auto p = a.multiply(v, r);
        if (!p.empty()) next.push_back(std::move(p));
      }
    if (next.empty()) return Report::pass();
    const Matrix s = span_columns(a, next);
    if (s.cols() == span_columns(a, power).cols()) return Report::fail("radical candidate is not nilpotent");
    power.clear();
    for (std::size_t c = 0; c < s.cols(); ++c) power.push_back(SparseVec::from_dense(s.col(c)));
  }
  return Report::fail("radical candidate is not nilpotent");
}

}  // namespace

std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::Auto: return "auto";
    case Strategy::Split: return "split";
    case Strategy::Local: return "local";
    case Strategy::Jordan: return "jordan";
  }
  return "?";
}

Strategy parse_strategy(const std::string& s) {
  if (s == "auto") return Strategy::Auto;
  if (s == "split") return Strategy::Split;
  if (s == "local") return Strategy::Local;
  if (s == "jordan") return Strategy::Jordan;
  throw Error("unknown strategy '" + s + "' (auto|split|local|jordan)");
}

ProjectivityVerdict is_projective_split(const AlgModule& m) {
  const auto& a = *m.algebra;
  const FieldSpec f = m.field();
  const std::size_t d = m.dim(), na = a.dim();
  if (d == 0) return verdict(true, Strategy::Split, "zero module");
  const AlgModule reg = regular_module(m.algebra);
  const auto homs = hom_space(m, reg);  // each na x d
  const std::size_t r = homs.size();
  if (r == 0) return verdict(false, Strategy::Split, "Hom(M, A) = 0, so no section of A (x) M -> M");
  // s(m_k) = sum_j s_j(m_k) (x) m_j with s_j = sum_i c_{ji} h_i; require mu(s(m_k)) = m_k:
  // sum_{j,i} c_{ji} (h_i(m_k) acting on M)[q, j] = delta_{qk}
  std::vector<std::vector<Matrix>> acts(r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < d; ++k) acts[i].push_back(m.act(SparseVec::from_dense(homs[i].col(k))));
  Matrix sys(f, d * d, d * r);
  Matrix rhs(f, d * d, 1);
  for (std::size_t q = 0; q < d; ++q)
    for (std::size_t k = 0; k < d; ++k) {
      if (q == k) rhs(q * d + k, 0) = Scalar::one(f);
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < r; ++i) sys(q * d + k, j * r + i) = acts[i][k](q, j);
    }
  auto sol = solve_linear(sys, rhs);
  if (!sol)
    return verdict(false, Strategy::Split,
                   "A (x) M -> M has no A-linear section (dim Hom(M, A) = " + std::to_string(r) + ")");
  // assemble s : M -> A (x) M (index a * d + j) and re-verify
  Matrix s(f, na * d, d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < r; ++i) {
      const Scalar& c = sol->particular(j * r + i, 0);
      if (c.is_zero()) continue;
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t x = 0; x < na; ++x)
          if (!homs[i](x, k).is_zero()) s(x * d + j, k) += c * homs[i](x, k);
    }
  Matrix mu(f, d, na * d);
  for (std::size_t x = 0; x < na; ++x)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t q = 0; q < d; ++q)
        if (!m.action[x](q, j).is_zero()) mu(q, x * d + j) = m.action[x](q, j);
  if (!(mu * s).is_identity()) throw Error("internal: split section does not invert the multiplication");
  const Matrix id = Matrix::identity(f, d);
  for (const auto& g : a.generators())
    if (!(kronecker(a.left_multiplication(g), id) * s == s * m.act(g)))
      throw Error("internal: split section is not A-linear");
  return verdict(true, Strategy::Split,
                 "A-linear section of A (x) M -> M found and verified (dim Hom(M, A) = " + std::to_string(r) + ")");
}

ProjectivityVerdict is_free_over_nilpotent_line(const Matrix& t, std::uint32_t n) {
  const std::size_t d = t.rows();
  if (n == 0) throw Error("nilpotency degree must be positive");
  if (!power(t, n).is_zero() && d) throw Error("t^" + std::to_string(n) + " does not act as zero");
  if (d == 0) return verdict(true, Strategy::Jordan, "zero module");
  const std::size_t top = rank(power(t, n - 1));
  const bool free = d % n == 0 && top == d / n;
  return verdict(free, Strategy::Jordan,
                 "dim " + std::to_string(d) + ", n = " + std::to_string(n) + ", rank t^" + std::to_string(n - 1) + " = " +
                     std::to_string(top) + (free ? " = dim/n" : (d % n ? ", n does not divide dim" : " != dim/n")));
}

ProjectivityVerdict is_free_over_nilpotent_line(const AlgModule& m) {
  const auto* info = std::get_if<TruncatedPolyInfo>(&m.algebra->info());
  if (!info) throw Error("module is not over k[t]/(t^n)");
  if (info->n == 1) return verdict(true, Strategy::Jordan, "k[t]/(t) = k");
  return is_free_over_nilpotent_line(m.action[1], info->n);
}

std::optional<std::vector<SparseVec>> local_radical(const BasisAlgebra& a) {
  const FieldSpec f = a.field();
  if (const auto* gi = std::get_if<GroupAlgebraInfo>(&a.info())) {
    const auto& l = *gi->group;
    const std::uint32_t p = f.characteristic();
    if (l.order() == 1) return std::vector<SparseVec>{};
    if (p == 0 || !is_power_of(l.order(), p)) return std::nullopt;
    std::vector<SparseVec> rad;
    for (std::size_t x = 0; x < l.order(); ++x) {
      if (x == l.identity()) continue;
      // x-bar^{|x|} = c 1-bar; over F_p the p-power root of c is c itself
      Scalar c = Scalar::one(f);
      std::size_t acc = x;
      for (std::size_t k = 1; k < l.element_order(x); ++k) {
        c *= gi->alpha(acc, x);
        acc = l.mul(acc, x);
      }
      if (f.kind() != FieldSpec::Kind::Prime) return std::nullopt;
      rad.push_back(difference(SparseVec::single(x, Scalar::one(f)), scaled(a.unit(), c)));
    }
    return rad;
  }
  // unit basis element plus a nilpotent ideal spanned by the others
  if (a.unit().terms.size() != 1 || !a.unit().terms[0].second.is_one()) return std::nullopt;
  const std::size_t u = a.unit().terms[0].first;
  std::vector<SparseVec> rad;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (i != u) rad.push_back(SparseVec::single(i, Scalar::one(f)));
  if (!check_local_radical(a, rad)) return std::nullopt;
  return rad;
}

ProjectivityVerdict is_projective_local(const AlgModule& m, const std::vector<SparseVec>& radical) {
  const auto& a = *m.algebra;
  auto r = check_local_radical(a, radical);
  if (!r) throw Error("not a local algebra radical: " + r.witness);
  const std::size_t d = m.dim();
  if (d == 0) return verdict(true, Strategy::Local, "zero module");
  std::vector<Matrix> imgs;
  for (const auto& x : radical) imgs.push_back(m.act(x));
  const std::size_t rad_m = imgs.empty() ? 0 : rank(hstack(imgs));
  const std::size_t top = d - rad_m;
  const bool free = d == top * a.dim();
  return verdict(free, Strategy::Local,
                 "dim M = " + std::to_string(d) + ", dim M/rad M = " + std::to_string(top) + ", dim A = " +
                     std::to_string(a.dim()) + (free ? " (free)" : " (not free)"));
}

namespace {

ProjectivityVerdict structural(const AlgModule& m, const ProjectivityOptions& opts);

ProjectivityVerdict twisted_group_case(const AlgModule& m, const GroupAlgebraInfo& gi) {
  const FieldSpec f = m.field();
  const std::uint32_t p = f.characteristic();
  const auto& l = *gi.group;
  if (p == 0 || l.order() % p != 0)
    return verdict(true, Strategy::Local, "|L| = " + std::to_string(l.order()) + " is invertible in k, every module is projective");
  auto sylow = sylow_subgroup(l, p);
  auto emb = subgroup_embedding(m.algebra, sylow);
  auto res = restrict_module(m, emb);
  auto rad = local_radical(*emb.source);
  if (!rad) throw Error("internal: Sylow subgroup algebra is not local");
  auto v = is_projective_local(res, *rad);
  v.witness = "restricted to a Sylow " + std::to_string(p) + "-subgroup of order " + std::to_string(sylow.group->order()) +
              ": " + v.witness;
  return v;
}

ProjectivityVerdict structural(const AlgModule& m, const ProjectivityOptions& opts) {
  const auto& a = *m.algebra;
  if (m.dim() == 0) return verdict(true, Strategy::Local, "zero module");
  if (const auto* ci = std::get_if<CoproductInfo>(&a.info())) {
    std::string w;
    bool all = true;
    Strategy used = Strategy::Local;
    for (std::size_t x = 0; x < ci->g->order(); ++x) {
      const auto cx = component(m, x);
      if (cx.dim() == 0) continue;
      auto v = structural(cx, opts);
      used = v.strategy;
      w += (w.empty() ? "" : "; ") + std::string("component ") + ci->g->label(x) + ": " + v.witness;
      if (!v.projective) all = false;
    }
    return verdict(all, used, w);
  }
  if (const auto* gi = std::get_if<GroupAlgebraInfo>(&a.info())) return twisted_group_case(m, *gi);
  if (std::holds_alternative<DualGroupInfo>(a.info()))
    return verdict(true, Strategy::Local, "k^G is semisimple, every module is projective");
  if (std::holds_alternative<TruncatedPolyInfo>(a.info())) return is_free_over_nilpotent_line(m);
  if (const auto* qi = std::get_if<QeaInfo>(&a.info())) {
    const std::uint32_t p = a.field().characteristic();
    if (p == 0 || qi->n % p != 0) {
      // A = Lambda # (Z_n)^m with |(Z_n)^m| invertible: projective iff free over Lambda
      auto emb = qea_nilpotent_embedding(m.algebra);
      auto res = restrict_module(m, emb);
      auto rad = local_radical(*emb.source);
      if (!rad) throw Error("internal: x-monomial subalgebra is not local");
      auto v = is_projective_local(res, *rad);
      v.witness = "restricted to k[x_1..x_m]/(x_i^n): " + v.witness;
      return v;
    }
  }
  if (auto rad = local_radical(a)) return is_projective_local(m, *rad);
  return is_projective_split(m);
}

}  // namespace

ProjectivityVerdict is_projective(const AlgModule& m, const ProjectivityOptions& opts) {
  switch (opts.strategy) {
    case Strategy::Split: return is_projective_split(m);
    case Strategy::Jordan: return is_free_over_nilpotent_line(m);
    case Strategy::Local: {
      auto rad = local_radical(*m.algebra);
      if (!rad) throw Error("local strategy: algebra is not recognisably local");
      return is_projective_local(m, *rad);
    }
    case Strategy::Auto: break;
  }
  auto v = structural(m, opts);
  if (opts.cross_check && v.strategy != Strategy::Split && m.algebra->dim() <= opts.cross_check_max_algebra_dim &&
      m.dim() <= opts.cross_check_max_module_dim) {
    auto s = is_projective_split(m);
    if (s.projective != v.projective)
      throw Error("projectivity strategies disagree: " + to_string(v.strategy) + " says " +
                  (v.projective ? "projective" : "not projective") + " (" + v.witness + "), split says " +
                  (s.projective ? "projective" : "not projective"));
    v.witness += " [split agrees]";
  }
  return v;
}

std::vector<Vector> default_lambdas(FieldSpec f, std::uint32_t m, bool enumerate, std::size_t max_enumerate) {
  std::vector<Vector> out;
  if (enumerate && f.kind() == FieldSpec::Kind::Prime) {
    const std::uint32_t p = f.characteristic();
    std::size_t total = 1;
    for (std::uint32_t k = 0; k < m; ++k) {
      total *= p;
      if (total > max_enumerate) throw ResourceGuard("too many lambda vectors to enumerate");
    }
    for (std::size_t code = 1; code < total; ++code) {
      std::vector<std::int64_t> digits(m);
      std::size_t c = code;
      for (std::uint32_t k = m; k-- > 0;) {
        digits[k] = static_cast<std::int64_t>(c % p);
        c /= p;
      }
      std::size_t lead = 0;
      while (digits[lead] == 0) ++lead;
      if (digits[lead] != 1) continue;
      Vector v;
      for (auto dgt : digits) v.push_back(Scalar::from_int(f, dgt));
      out.push_back(std::move(v));
    }
    return out;
  }
  for (std::uint32_t i = 0; i < m; ++i) {
    Vector v = zero_vector(f, m);
    v[i] = Scalar::one(f);
    out.push_back(std::move(v));
  }
  for (std::uint32_t i = 0; i < m; ++i)
    for (std::uint32_t j = i + 1; j < m; ++j) {
      Vector v = zero_vector(f, m);
      v[i] = Scalar::one(f);
      v[j] = Scalar::one(f);
      out.push_back(std::move(v));
    }
  return out;
}

RankVarietyReport rank_variety_membership(const AlgModule& m, const std::vector<Vector>& lambdas) {
  const auto* qi = std::get_if<QeaInfo>(&m.algebra->info());
  if (!qi) throw Error("rank varieties are defined here for quantum elementary abelian groups");
  RankVarietyReport rep;
  for (const auto& lambda : lambdas) {
    auto te = qea_tau_element(m.algebra, lambda);
    auto v = is_free_over_nilpotent_line(m.act(te.element), qi->n);
    rep.points.push_back({lambda, !v.projective, v.witness});
  }
  rep.notes = "lambda in V(M) iff M restricted to k<tau(lambda)> is not free; raw points, no G-orbit identification";
  return rep;
}

}  // namespace hopfkit
