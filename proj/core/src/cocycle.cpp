#include "hopfkit/cocycle.hpp"

#include <map>
#include <numeric>
#include <sstream>

namespace hopfkit {

namespace {

std::string triple(const FiniteGroup& g, std::size_t a, std::size_t b, std::size_t c) {
  return "(" + g.label(a) + "," + g.label(b) + "," + g.label(c) + ")";
}

void require_same_group(const CocycleSlice& a, const CocycleSlice& b) {
  if (!same_group(a.group(), b.group())) throw Error("cocycles live on different groups");
  if (a.field() != b.field()) throw FieldMismatch("cocycles live over different fields");
}

}  // namespace

CocycleSlice::CocycleSlice(GroupPtr group, FieldSpec field, std::vector<Scalar> values)
    : group_(std::move(group)), field_(field), values_(std::move(values)) {
  if (values_.size() != group_->order() * group_->order())
    throw DimensionMismatch("cocycle table must have |L|^2 entries");
  for (const auto& v : values_)
    if (v.field() != field_) throw FieldMismatch("cocycle value over the wrong field");
}

CocycleSlice CocycleSlice::trivial(GroupPtr group, FieldSpec field) {
  const std::size_t n = group->order();
  return CocycleSlice(std::move(group), field, std::vector<Scalar>(n * n, Scalar::one(field)));
}

bool CocycleSlice::is_trivial() const {
  for (const auto& v : values_)
    if (!v.is_one()) return false;
  return true;
}

Report check_cocycle(const CocycleSlice& alpha) {
  const auto& g = *alpha.group();
  const std::size_t n = g.order(), e = g.identity();
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t m = 0; m < n; ++m)
      if (alpha(l, m).is_zero()) return Report::fail("zero value at (" + g.label(l) + "," + g.label(m) + ")");
  for (std::size_t l = 0; l < n; ++l)
    if (!alpha(e, l).is_one() || !alpha(l, e).is_one())
      return Report::fail("not normalized at " + g.label(l));
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t m = 0; m < n; ++m) {
      const Scalar lhs0 = alpha(l, m);
      const std::size_t lm = g.mul(l, m);
      for (std::size_t k = 0; k < n; ++k) {
        if (lhs0 * alpha(lm, k) != alpha(m, k) * alpha(l, g.mul(m, k)))
          return Report::fail("cocycle identity fails at " + triple(g, l, m, k));
      }
    }
  for (std::size_t l = 0; l < n; ++l)
    if (alpha(l, g.inv(l)) != alpha(g.inv(l), l))
      return Report::fail("alpha(l,l^-1) != alpha(l^-1,l) at " + g.label(l));
  return Report::pass();
}

CocycleSlice conjugate_cocycle(const CocycleSlice& alpha, const GroupAction& action, std::size_t y) {
  if (!same_group(alpha.group(), action.target())) throw Error("action does not act on the cocycle's group");
  const auto& g = *action.acting();
  const std::size_t n = alpha.group()->order();
  const auto& p = action.perm(g.inv(y));
  std::vector<Scalar> v;
  v.reserve(n * n);
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t m = 0; m < n; ++m) v.push_back(alpha(p[l], p[m]));
  return CocycleSlice(alpha.group(), alpha.field(), std::move(v));
}

CocycleSlice cocycle_product(const CocycleSlice& a, const CocycleSlice& b) {
  require_same_group(a, b);
  std::vector<Scalar> v = a.values();
  for (std::size_t i = 0; i < v.size(); ++i) v[i] *= b.values()[i];
  return CocycleSlice(a.group(), a.field(), std::move(v));
}

CocycleSlice cocycle_inverse(const CocycleSlice& a) {
  std::vector<Scalar> v;
  v.reserve(a.values().size());
  for (const auto& s : a.values()) v.push_back(s.inverse());
  return CocycleSlice(a.group(), a.field(), std::move(v));
}

bool is_g_invariant(const CocycleSlice& alpha, const GroupAction& action) {
  for (std::size_t y = 0; y < action.acting()->order(); ++y)
    if (!(conjugate_cocycle(alpha, action, y) == alpha)) return false;
  return true;
}

CocycleSlice coboundary_of(GroupPtr group, const Vector& mu) {
  const auto& g = *group;
  if (mu.size() != g.order()) throw DimensionMismatch("mu must have one value per group element");
  const FieldSpec f = mu.front().field();
  std::vector<Scalar> v;
  v.reserve(g.order() * g.order());
  for (std::size_t l = 0; l < g.order(); ++l)
    for (std::size_t m = 0; m < g.order(); ++m) v.push_back(mu[l] * mu[m] / mu[g.mul(l, m)]);
  return CocycleSlice(std::move(group), f, std::move(v));
}

// Diagonalizes A over Z/modulus with unimodular row and column operations
// (tracking the column operations in V), then solves the diagonal system.
std::optional<std::vector<std::int64_t>> solve_mod(const std::vector<std::int64_t>& a_in, std::size_t rows,
                                                   std::size_t cols, const std::vector<std::int64_t>& b_in,
                                                   std::int64_t modulus) {
  if (a_in.size() != rows * cols || b_in.size() != rows) throw DimensionMismatch("solve_mod: bad shapes");
  if (modulus < 1) throw Error("solve_mod: modulus must be positive");
  const std::int64_t M = modulus;
  auto red = [M](__int128 v) {
    v %= M;
    if (v < 0) v += M;
    return static_cast<std::int64_t>(v);
  };
  std::vector<std::int64_t> a(rows * cols), b(rows), v(cols * cols, 0);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = red(a_in[i]);
  for (std::size_t i = 0; i < rows; ++i) b[i] = red(b_in[i]);
  for (std::size_t i = 0; i < cols; ++i) v[i * cols + i] = 1 % M;
  auto A = [&](std::size_t r, std::size_t c) -> std::int64_t& { return a[r * cols + c]; };

  auto xgcd = [](std::int64_t x, std::int64_t y, std::int64_t& s, std::int64_t& t) {
    if (x != 0 && y % x == 0) {  // plain elimination keeps the pivot line fixed
      s = 1;
      t = 0;
      return x;
    }
    std::int64_t r0 = x, r1 = y, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
      const std::int64_t q = r0 / r1;
      std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
      std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
      std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
    }
    s = s0;
    t = t0;
    return r0;
  };
  // rows (p, i) <- [[s, t], [-e/g, d/g]] (p, i)
  auto row_combine = [&](std::size_t p, std::size_t i, std::size_t col) {
    const std::int64_t d = A(p, col), e = A(i, col);
    std::int64_t s, t;
    const std::int64_t g = xgcd(d, e, s, t);
    const std::int64_t u = -(e / g), w = d / g;
    for (std::size_t c = 0; c < cols; ++c) {
      const std::int64_t x = A(p, c), y = A(i, c);
      A(p, c) = red(static_cast<__int128>(s) * x + static_cast<__int128>(t) * y);
      A(i, c) = red(static_cast<__int128>(u) * x + static_cast<__int128>(w) * y);
    }
    const std::int64_t x = b[p], y = b[i];
    b[p] = red(static_cast<__int128>(s) * x + static_cast<__int128>(t) * y);
    b[i] = red(static_cast<__int128>(u) * x + static_cast<__int128>(w) * y);
  };
  auto col_combine = [&](std::size_t p, std::size_t j, std::size_t row) {
    const std::int64_t d = A(row, p), e = A(row, j);
    std::int64_t s, t;
    const std::int64_t g = xgcd(d, e, s, t);
    const std::int64_t u = -(e / g), w = d / g;
    for (std::size_t r = 0; r < rows; ++r) {
      const std::int64_t x = A(r, p), y = A(r, j);
      A(r, p) = red(static_cast<__int128>(s) * x + static_cast<__int128>(t) * y);
      A(r, j) = red(static_cast<__int128>(u) * x + static_cast<__int128>(w) * y);
    }
    for (std::size_t r = 0; r < cols; ++r) {
      const std::int64_t x = v[r * cols + p], y = v[r * cols + j];
      v[r * cols + p] = red(static_cast<__int128>(s) * x + static_cast<__int128>(t) * y);
      v[r * cols + j] = red(static_cast<__int128>(u) * x + static_cast<__int128>(w) * y);
    }
  };

  std::size_t rank = 0;
  std::vector<std::int64_t> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // find a nonzero pivot
    std::size_t pr = rows, pc = cols;
    for (std::size_t r = t; r < rows && pr == rows; ++r)
      for (std::size_t c = t; c < cols; ++c)
        if (A(r, c) != 0) {
          pr = r;
          pc = c;
          break;
        }
    if (pr == rows) break;
    if (pr != t) {
      for (std::size_t c = 0; c < cols; ++c) std::swap(A(t, c), A(pr, c));
      std::swap(b[t], b[pr]);
    }
    if (pc != t) {
      for (std::size_t r = 0; r < rows; ++r) std::swap(A(r, t), A(r, pc));
      for (std::size_t r = 0; r < cols; ++r) std::swap(v[r * cols + t], v[r * cols + pc]);
    }
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (std::size_t r = t + 1; r < rows; ++r)
        if (A(r, t) != 0) row_combine(t, r, t);
      for (std::size_t c = t + 1; c < cols; ++c)
        if (A(t, c) != 0) {
          col_combine(t, c, t);
          dirty = true;
        }
      if (dirty) {
        dirty = false;
        for (std::size_t r = t + 1; r < rows; ++r)
          if (A(r, t) != 0) dirty = true;
      }
    }
    diag.push_back(A(t, t));
    ++rank;
  }
  for (std::size_t r = rank; r < rows; ++r)
    if (b[r] != 0) return std::nullopt;
  std::vector<std::int64_t> y(cols, 0);
  for (std::size_t t = 0; t < rank; ++t) {
    const std::int64_t d = diag[t];
    std::int64_t s, u;
    const std::int64_t g = xgcd(d, M, s, u);  // s d + u M = g
    if (b[t] % g != 0) return std::nullopt;
    y[t] = red(static_cast<__int128>(b[t] / g) * s);
  }
  std::vector<std::int64_t> x(cols, 0);
  for (std::size_t r = 0; r < cols; ++r) {
    __int128 acc = 0;
    for (std::size_t c = 0; c < cols; ++c) acc += static_cast<__int128>(v[r * cols + c]) * y[c];
    x[r] = red(acc);
  }
  // verify
  for (std::size_t r = 0; r < rows; ++r) {
    __int128 acc = 0;
    for (std::size_t c = 0; c < cols; ++c) acc += static_cast<__int128>(red(a_in[r * cols + c])) * x[c];
    if (red(acc) != red(b_in[r])) throw Error("solve_mod: internal verification failed");
  }
  return x;
}

CoboundaryVerdict is_coboundary(const CocycleSlice& beta) {
  const auto& g = *beta.group();
  const FieldSpec f = beta.field();
  const std::size_t n = g.order();
  const auto N = static_cast<std::int64_t>(f.roots_of_unity_order());
  std::map<std::string, std::int64_t> log_cache;
  std::vector<std::int64_t> logs(n * n);
  for (std::size_t i = 0; i < n * n; ++i) {
    const Scalar& s = beta.values()[i];
    const std::string key = s.to_string();
    auto it = log_cache.find(key);
    if (it == log_cache.end()) {
      auto e = root_of_unity_log(s);
      if (!e)
        throw Unsupported("cocycle value " + key + " at (" + g.label(i / n) + "," + g.label(i % n) +
                          ") is not a root of unity in " + f.to_string());
      it = log_cache.emplace(key, static_cast<std::int64_t>(*e)).first;
    }
    logs[i] = it->second;
  }
  // equations e(l) + e(m) - e(lm) = log beta(l, m)
  std::vector<std::int64_t> a(n * n * n, 0);
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t m = 0; m < n; ++m) {
      const std::size_t row = l * n + m;
      a[row * n + l] += 1;
      a[row * n + m] += 1;
      a[row * n + g.mul(l, m)] -= 1;
    }
  CoboundaryVerdict out;
  if (auto x = solve_mod(a, n * n, n, logs, N)) {
    const Scalar gen = root_of_unity_generator(f);
    Vector mu;
    for (std::size_t l = 0; l < n; ++l) mu.push_back(gen.pow((*x)[l]));
    // normalize so that mu(1) = 1 (beta is normalized, so mu(1) = 1 already up to d of a constant)
    if (!(coboundary_of(beta.group(), mu) == beta)) throw Error("coboundary witness failed verification");
    out.coboundary = true;
    out.witness = std::move(mu);
    out.reason = "witness found in " + f.to_string();
    return out;
  }
  std::int64_t e = static_cast<std::int64_t>(g.exponent());
  if (f.characteristic() != 0)
    while (e % f.characteristic() == 0) e /= f.characteristic();
  const std::int64_t M = N * e;
  std::vector<std::int64_t> scaled(logs);
  for (auto& v : scaled) v *= e;
  if (e > 1 && solve_mod(a, n * n, n, scaled, M)) {
    out.coboundary = true;
    out.needs_extension = true;
    out.reason = "coboundary only after adjoining roots of unity of order " + std::to_string(M);
    return out;
  }
  out.reason = "additive system over Z/" + std::to_string(M) + " is inconsistent";
  return out;
}

CoboundaryVerdict cohomologous(const CocycleSlice& alpha, const CocycleSlice& beta) {
  return is_coboundary(cocycle_product(alpha, cocycle_inverse(beta)));
}

CocycleSlice cocycle_from_projective_rep(GroupPtr group, const std::vector<Matrix>& rho) {
  const auto& g = *group;
  if (rho.size() != g.order()) throw DimensionMismatch("need one matrix per group element");
  const FieldSpec f = rho.front().field();
  if (!rho[g.identity()].is_identity()) throw NotProjectiveRep("rho(1) must be the identity");
  std::vector<std::optional<Matrix>> inverses(g.order());
  std::vector<Scalar> v;
  v.reserve(g.order() * g.order());
  for (std::size_t l = 0; l < g.order(); ++l)
    for (std::size_t m = 0; m < g.order(); ++m) {
      const std::size_t lm = g.mul(l, m);
      if (!inverses[lm]) {
        inverses[lm] = inverse(rho[lm]);
        if (!inverses[lm]) throw NotProjectiveRep("rho(" + g.label(lm) + ") is not invertible");
      }
      const Matrix p = rho[l] * rho[m] * *inverses[lm];
      const Scalar c = p(0, 0);
      if (c.is_zero() || !(p == c * Matrix::identity(f, p.rows())))
        throw NotProjectiveRep("rho(" + g.label(l) + ") rho(" + g.label(m) + ") rho(" + g.label(lm) +
                               ")^-1 is not a scalar matrix");
      v.push_back(c);
    }
  return CocycleSlice(std::move(group), f, std::move(v));
}

CocycleSlice extend_cocycle_trivially(const CocycleSlice& alpha, GroupPtr full,
                                      const std::vector<std::size_t>& coords) {
  const auto& h = *alpha.group();
  const auto& l = *full;
  if (h.factor_orders().size() != coords.size())
    throw Error("extend_cocycle_trivially: factor has " + std::to_string(h.factor_orders().size()) +
                " coordinates but " + std::to_string(coords.size()) + " positions were given");
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i] >= l.factor_orders().size() || l.factor_orders()[coords[i]] != h.factor_orders()[i])
      throw Error("extend_cocycle_trivially: coordinate orders do not match");
  std::vector<std::size_t> proj(l.order());
  for (std::size_t e = 0; e < l.order(); ++e) {
    auto c = l.coordinates(e);
    std::vector<std::uint32_t> hc;
    for (auto k : coords) hc.push_back(c[k]);
    proj[e] = h.from_coordinates(hc);
  }
  std::vector<Scalar> v;
  v.reserve(l.order() * l.order());
  for (std::size_t a = 0; a < l.order(); ++a)
    for (std::size_t b = 0; b < l.order(); ++b) v.push_back(alpha(proj[a], proj[b]));
  return CocycleSlice(std::move(full), alpha.field(), std::move(v));
}

SigmaCocycle SigmaCocycle::trivial(const GroupAction& action, FieldSpec field) {
  std::vector<CocycleSlice> s(action.acting()->order(), CocycleSlice::trivial(action.target(), field));
  return {action, std::move(s)};
}

TauCocycle TauCocycle::trivial(const GroupAction& action, FieldSpec field) {
  const std::size_t g = action.acting()->order(), l = action.target()->order();
  return {action, field, std::vector<Scalar>(g * g * l, Scalar::one(field))};
}

bool TauCocycle::is_trivial() const {
  for (const auto& v : values)
    if (!v.is_one()) return false;
  return true;
}

Report check_sigma(const SigmaCocycle& sigma) {
  const auto& g = *sigma.action.acting();
  if (sigma.slices.size() != g.order()) return Report::fail("sigma needs one slice per element of G");
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (!same_group(sigma.slices[x].group(), sigma.action.target()))
      return Report::fail("sigma_" + g.label(x) + " lives on the wrong group");
    auto r = check_cocycle(sigma.slices[x]);
    if (!r) return Report::fail("sigma_" + g.label(x) + ": " + r.witness);
  }
  return Report::pass();
}

Report check_tau(const TauCocycle& tau) {
  const auto& g = *tau.action.acting();
  const auto& l = *tau.action.target();
  if (tau.values.size() != g.order() * g.order() * l.order()) return Report::fail("tau table has the wrong size");
  for (const auto& v : tau.values)
    if (v.is_zero()) return Report::fail("tau takes the value zero");
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::size_t m = 0; m < l.order(); ++m)
      if (!tau(g.identity(), x, m).is_one() || !tau(x, g.identity(), m).is_one())
        return Report::fail("tau not normalized at x=" + g.label(x) + ", l=" + l.label(m));
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::size_t y = 0; y < g.order(); ++y)
      for (std::size_t z = 0; z < g.order(); ++z)
        for (std::size_t m = 0; m < l.order(); ++m) {
          const Scalar lhs = tau(g.mul(x, y), z, m) * tau(x, y, m);
          const Scalar rhs = tau(x, g.mul(y, z), m) * tau(y, z, tau.action.act(g.inv(x), m));
          if (lhs != rhs)
            return Report::fail("tau identity fails at (x,y,z,l)=(" + g.label(x) + "," + g.label(y) + "," +
                                g.label(z) + "," + l.label(m) + ")");
        }
  return Report::pass();
}

Report validate_compatibility(const SigmaCocycle& sigma, const TauCocycle& tau) {
  const auto& g = *sigma.action.acting();
  const auto& l = *sigma.action.target();
  if (!same_group(sigma.action.acting(), tau.action.acting()) ||
      !same_group(sigma.action.target(), tau.action.target()) || sigma.action.perms() != tau.action.perms())
    throw Error("sigma and tau use different groups or actions");
  if (sigma.field() != tau.field) throw FieldMismatch("sigma and tau live over different fields");
  if (auto r = check_sigma(sigma); !r) return r;
  if (auto r = check_tau(tau); !r) return r;
  const auto& act = sigma.action;
  for (std::size_t x = 0; x < g.order(); ++x) {
    const auto& px = act.perm(g.inv(x));
    for (std::size_t y = 0; y < g.order(); ++y) {
      const std::size_t xy = g.mul(x, y);
      for (std::size_t a = 0; a < l.order(); ++a)
        for (std::size_t b = 0; b < l.order(); ++b) {
          const Scalar lhs = sigma(xy, a, b) * tau(x, y, l.mul(a, b));
          Scalar rhs = sigma(x, a, b) * sigma(y, px[a], px[b]);
          rhs *= tau(x, y, a);
          rhs *= tau(x, y, b);
          if (lhs != rhs)
            return Report::fail("compatibility fails at (x,y,l,m)=(" + g.label(x) + "," + g.label(y) + "," +
                                l.label(a) + "," + l.label(b) + ")");
        }
    }
  }
  const std::size_t one = g.identity();
  for (std::size_t a = 0; a < l.order(); ++a)
    for (std::size_t b = 0; b < l.order(); ++b)
      if (!sigma(one, a, b).is_one()) return Report::fail("sigma_1 is not trivial at (" + l.label(a) + "," + l.label(b) + ")");
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::size_t y = 0; y < g.order(); ++y)
      if (!tau(x, y, l.identity()).is_one())
        return Report::fail("tau_{" + g.label(x) + "," + g.label(y) + "}(1) != 1");
  // derived identities
  for (std::size_t x = 0; x < g.order(); ++x) {
    const std::size_t xi = g.inv(x);
    const auto& px = act.perm(xi);
    for (std::size_t a = 0; a < l.order(); ++a)
      for (std::size_t b = 0; b < l.order(); ++b) {
        const Scalar lhs = sigma(x, a, b).inverse();
        Scalar rhs = sigma(xi, px[a], px[b]) * tau(x, xi, a);
        rhs *= tau(x, xi, b);
        rhs /= tau(x, xi, l.mul(a, b));
        if (lhs != rhs)
          return Report::fail("derived identity (y = x^-1) fails at (x,l,m)=(" + g.label(x) + "," + l.label(a) +
                              "," + l.label(b) + ")");
      }
    for (std::size_t y = 0; y < g.order(); ++y) {
      const std::size_t xy = g.mul(x, y);
      for (std::size_t a = 0; a < l.order(); ++a) {
        const std::size_t ai = l.inv(a);
        const Scalar lhs = tau(x, y, a).inverse();
        Scalar rhs = sigma(xy, a, ai).inverse() * sigma(x, a, ai);
        rhs *= sigma(y, px[a], px[ai]);
        rhs *= tau(x, y, ai);
        if (lhs != rhs)
          return Report::fail("derived identity (m = l^-1) fails at (x,y,l)=(" + g.label(x) + "," + g.label(y) +
                              "," + l.label(a) + ")");
      }
    }
  }
  return Report::pass();
}

CocycleSlice tau_coboundary(const TauCocycle& tau, std::size_t x, std::size_t y) {
  const auto& l = *tau.action.target();
  Vector mu;
  for (std::size_t a = 0; a < l.order(); ++a) mu.push_back(tau(x, y, a));
  return coboundary_of(tau.action.target(), mu);
}

}  // namespace hopfkit
