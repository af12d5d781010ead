#include "hopfkit/field.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace hopfkit {

namespace {

using u128 = unsigned __int128;
using i128 = __int128;

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u128 abs128(i128 v) { return v < 0 ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v); }

bool fits_int64(i128 v) {
  return v > static_cast<i128>(std::numeric_limits<std::int64_t>::min()) &&
         v <= static_cast<i128>(std::numeric_limits<std::int64_t>::max());
}

mpz_class to_mpz(i128 v) {
  u128 mag = abs128(v);
  mpz_class hi = static_cast<unsigned long>(static_cast<std::uint64_t>(mag >> 64));
  mpz_class lo = static_cast<unsigned long>(static_cast<std::uint64_t>(mag));
  mpz_class out = (hi << 64) + lo;
  return v < 0 ? mpz_class(-out) : out;
}

bool mpz_small(const mpz_class& z) {
  return mpz_fits_slong_p(z.get_mpz_t()) && z != std::numeric_limits<long>::min();
}

}  // namespace

// ---------------------------------------------------------------- Rational

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw Error("rational with zero denominator");
  assign_wide(n, d);
}

Rational::Rational(const mpq_class& q) { assign_big(q); }

Rational::Rational(const Rational& other)
    : num_(other.num_), den_(other.den_),
      big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}

Rational& Rational::operator=(const Rational& other) {
  if (this == &other) return *this;
  num_ = other.num_;
  den_ = other.den_;
  big_ = other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr;
  return *this;
}

void Rational::assign_big(mpq_class q) {
  q.canonicalize();
  if (mpz_small(q.get_num()) && mpz_small(q.get_den())) {
    num_ = q.get_num().get_si();
    den_ = q.get_den().get_si();
    big_.reset();
    return;
  }
  num_ = 0;
  den_ = 1;
  big_ = std::make_unique<mpq_class>(std::move(q));
}

void Rational::assign_wide(i128 n, i128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0) {
    num_ = 0;
    den_ = 1;
    big_.reset();
    return;
  }
  u128 g = gcd128(abs128(n), static_cast<u128>(d));
  if (g > 1) {
    n /= static_cast<i128>(g);
    d /= static_cast<i128>(g);
  }
  if (fits_int64(n) && fits_int64(d)) {
    num_ = static_cast<std::int64_t>(n);
    den_ = static_cast<std::int64_t>(d);
    big_.reset();
    return;
  }
  mpq_class q(to_mpz(n), to_mpz(d));
  assign_big(std::move(q));
}

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  mpq_class q(static_cast<long>(num_), static_cast<unsigned long>(den_));
  q.canonicalize();
  return q;
}

std::optional<std::pair<std::int64_t, std::int64_t>> Rational::small_parts() const {
  if (big_) return std::nullopt;
  return std::make_pair(num_, den_);
}

std::string Rational::to_string() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty()) throw Error("empty rational literal");
  mpq_class q;
  if (q.set_str(t, 10) != 0) throw Error("malformed rational literal '" + text + "'");
  if (q.get_den() == 0) throw Error("rational with zero denominator: '" + text + "'");
  return Rational(q);
}

Rational Rational::operator-() const {
  if (big_) return Rational(mpq_class(-*big_));
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) throw Error("division by zero");
  if (big_) return Rational(mpq_class(1 / *big_));
  Rational r;
  r.assign_wide(den_, num_);
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  if (!big_ && !o.big_) {
    if (den_ == o.den_ && den_ == 1) {
      assign_wide(static_cast<i128>(num_) + o.num_, 1);
      return *this;
    }
    assign_wide(static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_,
                static_cast<i128>(den_) * o.den_);
    return *this;
  }
  assign_big(to_mpq() + o.to_mpq());
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  if (!big_ && !o.big_) {
    assign_wide(static_cast<i128>(num_) * o.den_ - static_cast<i128>(o.num_) * den_,
                static_cast<i128>(den_) * o.den_);
    return *this;
  }
  assign_big(to_mpq() - o.to_mpq());
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  if (!big_ && !o.big_) {
    assign_wide(static_cast<i128>(num_) * o.num_, static_cast<i128>(den_) * o.den_);
    return *this;
  }
  assign_big(to_mpq() * o.to_mpq());
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error("division by zero");
  if (!big_ && !o.big_) {
    assign_wide(static_cast<i128>(num_) * o.den_, static_cast<i128>(den_) * o.num_);
    return *this;
  }
  assign_big(to_mpq() / o.to_mpq());
  return *this;
}

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // canonical: a value is big only when it does not fit
}

// ---------------------------------------------------------------- number theory

std::uint32_t euler_phi(std::uint32_t n) {
  std::uint32_t result = n;
  for (std::uint32_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

bool is_prime_number(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = static_cast<std::uint64_t>(static_cast<u128>(r) * b % m);
    b = static_cast<std::uint64_t>(static_cast<u128>(b) * b % m);
    e >>= 1;
  }
  return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t smallest_primitive_root(std::uint64_t p) {
  if (p == 2) return 1;
  auto factors = prime_factors(p - 1);
  for (std::uint64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (auto q : factors)
      if (powmod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw Error("no primitive root found");
}

}  // namespace

// ---------------------------------------------------------------- FieldSpec

FieldSpec FieldSpec::cyclotomic(std::uint32_t n) {
  if (n < 1) throw Error("cyclotomic field requires n >= 1");
  return FieldSpec(Kind::Cyclotomic, n);
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (!is_prime_number(p)) throw Error("F_p requires p prime, got " + std::to_string(p));
  if (p > (1u << 31)) throw Error("prime field modulus too large");
  return FieldSpec(Kind::Prime, p);
}

FieldSpec FieldSpec::parse(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '_' && c != '(' && c != ')')
      t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  auto number_after = [&](std::size_t pos) -> std::uint32_t {
    if (pos >= t.size()) throw Error("malformed field '" + text + "'");
    for (std::size_t i = pos; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i])))
        throw Error("malformed field '" + text + "'");
    return static_cast<std::uint32_t>(std::stoul(t.substr(pos)));
  };
  if (t == "q" || t == "rationals") return rationals();
  if (t.rfind("qzeta", 0) == 0) return cyclotomic(number_after(5));
  if (t.rfind("gf", 0) == 0) return prime(number_after(2));
  if (t.rfind("f", 0) == 0) return prime(number_after(1));
  throw Error("unknown field '" + text + "' (expected Q, F<p>, or Q(zeta<n>))");
}

std::uint64_t FieldSpec::roots_of_unity_order() const {
  switch (kind_) {
    case Kind::Rationals:
      return 2;
    case Kind::Cyclotomic:
      return param_ % 2 == 0 ? param_ : 2ull * param_;
    case Kind::Prime:
      return param_ - 1;
  }
  return 1;
}

std::string FieldSpec::to_string() const {
  switch (kind_) {
    case Kind::Rationals:
      return "Q";
    case Kind::Cyclotomic:
      return "Q(zeta_" + std::to_string(param_) + ")";
    case Kind::Prime:
      return "F_" + std::to_string(param_);
  }
  return "?";
}

// ---------------------------------------------------------------- cyclotomic arithmetic

struct CyclotomicContext {
  std::uint32_t n = 1;
  std::uint32_t phi = 1;
  // reduce[k] = x^k mod Phi_n for k in [0, 2 phi - 1)
  std::vector<std::vector<std::int64_t>> reduce;
};

namespace {

using IntPoly = std::vector<std::int64_t>;  // low degree first

IntPoly cyclotomic_polynomial(std::uint32_t n) {
  // x^n - 1 divided by Phi_d for all proper divisors d
  IntPoly num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (std::uint32_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    IntPoly den = cyclotomic_polynomial(d);
    // exact division by monic den
    IntPoly q(num.size() - den.size() + 1, 0);
    IntPoly r = num;
    for (std::size_t i = q.size(); i-- > 0;) {
      std::int64_t c = r[i + den.size() - 1];
      q[i] = c;
      for (std::size_t j = 0; j < den.size(); ++j) r[i + j] -= c * den[j];
    }
    num = std::move(q);
  }
  return num;
}

const CyclotomicContext* cyclotomic_context(std::uint32_t n) {
  static std::mutex mu;
  static std::map<std::uint32_t, std::unique_ptr<CyclotomicContext>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second.get();
  auto ctx = std::make_unique<CyclotomicContext>();
  ctx->n = n;
  IntPoly phi_poly = cyclotomic_polynomial(n);
  ctx->phi = static_cast<std::uint32_t>(phi_poly.size() - 1);
  const std::size_t phi = ctx->phi;
  ctx->reduce.assign(std::max<std::size_t>(2 * phi - 1, n), std::vector<std::int64_t>(phi, 0));
  for (std::size_t k = 0; k < phi && k < ctx->reduce.size(); ++k) ctx->reduce[k][k] = 1;
  // x^phi = -(phi_poly[0] + ... + phi_poly[phi-1] x^{phi-1})
  for (std::size_t k = phi; k < ctx->reduce.size(); ++k) {
    const auto& prev = ctx->reduce[k - 1];
    auto& cur = ctx->reduce[k];
    std::int64_t top = prev[phi - 1];
    for (std::size_t i = phi; i-- > 1;) cur[i] = prev[i - 1];
    cur[0] = 0;
    for (std::size_t i = 0; i < phi; ++i) cur[i] -= top * phi_poly[i];
  }
  auto* raw = ctx.get();
  cache.emplace(n, std::move(ctx));
  return raw;
}

std::vector<Rational> reduce_poly(const CyclotomicContext& ctx, std::vector<Rational> raw) {
  const std::size_t phi = ctx.phi;
  std::vector<Rational> out(phi);
  for (std::size_t k = 0; k < raw.size(); ++k) {
    if (raw[k].is_zero()) continue;
    if (k < phi) {
      out[k] += raw[k];
      continue;
    }
    std::vector<std::int64_t> red;
    if (k < ctx.reduce.size()) {
      red = ctx.reduce[k];
    } else {
      // x^k with k >= 2 phi - 1: use x^n = 1 first
      std::size_t kk = k % ctx.n;
      if (kk < phi) {
        out[kk] += raw[k];
        continue;
      }
      red = ctx.reduce[kk];
    }
    for (std::size_t i = 0; i < phi; ++i)
      if (red[i] != 0) out[i] += raw[k] * Rational(red[i]);
  }
  return out;
}

std::vector<Rational> cyclo_multiply(const CyclotomicContext& ctx, const std::vector<Rational>& a,
                                     const std::vector<Rational>& b) {
  const std::size_t phi = ctx.phi;
  std::vector<Rational> raw(2 * phi - 1);
  for (std::size_t i = 0; i < phi; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < phi; ++j) {
      if (b[j].is_zero()) continue;
      raw[i + j] += a[i] * b[j];
    }
  }
  return reduce_poly(ctx, std::move(raw));
}

std::vector<Rational> cyclo_inverse(const CyclotomicContext& ctx, const std::vector<Rational>& a) {
  // Solve (multiplication-by-a) x = 1 over Q.
  const std::size_t phi = ctx.phi;
  std::vector<std::vector<Rational>> m(phi, std::vector<Rational>(phi + 1));
  for (std::size_t j = 0; j < phi; ++j) {
    std::vector<Rational> basis(phi);
    basis[j] = Rational(1);
    auto col = cyclo_multiply(ctx, a, basis);
    for (std::size_t i = 0; i < phi; ++i) m[i][j] = col[i];
  }
  m[0][phi] = Rational(1);
  for (std::size_t c = 0; c < phi; ++c) {
    std::size_t piv = c;
    while (piv < phi && m[piv][c].is_zero()) ++piv;
    if (piv == phi) throw Error("division by zero in cyclotomic field");
    std::swap(m[piv], m[c]);
    Rational inv = m[c][c].inverse();
    for (std::size_t k = c; k <= phi; ++k) m[c][k] *= inv;
    for (std::size_t r = 0; r < phi; ++r) {
      if (r == c || m[r][c].is_zero()) continue;
      Rational f = m[r][c];
      for (std::size_t k = c; k <= phi; ++k) m[r][k] -= f * m[c][k];
    }
  }
  std::vector<Rational> out(phi);
  for (std::size_t i = 0; i < phi; ++i) out[i] = m[i][phi];
  return out;
}

}  // namespace

// ---------------------------------------------------------------- Scalar

Scalar Scalar::zero(FieldSpec f) {
  switch (f.kind()) {
    case FieldSpec::Kind::Prime:
      return Scalar(f, std::int64_t{0});
    case FieldSpec::Kind::Rationals:
      return Scalar(f, Rational());
    case FieldSpec::Kind::Cyclotomic: {
      const auto* ctx = cyclotomic_context(f.parameter());
      return Scalar(f, Cyclo{ctx, std::vector<Rational>(ctx->phi)});
    }
  }
  throw Error("unknown field kind");
}

Scalar Scalar::one(FieldSpec f) { return from_int(f, 1); }

Scalar Scalar::from_int(FieldSpec f, std::int64_t v) { return from_rational(f, Rational(v)); }

Scalar Scalar::from_rational(FieldSpec f, const Rational& r) {
  switch (f.kind()) {
    case FieldSpec::Kind::Prime: {
      auto parts = r.small_parts();
      const std::int64_t p = f.parameter();
      std::int64_t num, den;
      if (parts) {
        num = parts->first % p;
        den = parts->second % p;
      } else {
        mpq_class q = r.to_mpq();
        mpz_class nn = q.get_num() % p, dd = q.get_den() % p;
        num = nn.get_si();
        den = dd.get_si();
      }
      if (num < 0) num += p;
      if (den < 0) den += p;
      if (den == 0) throw Error("rational " + r.to_string() + " has denominator divisible by p");
      std::int64_t inv = static_cast<std::int64_t>(powmod(static_cast<std::uint64_t>(den), p - 2, p));
      return Scalar(f, static_cast<std::int64_t>((static_cast<u128>(num) * inv) % p));
    }
    case FieldSpec::Kind::Rationals:
      return Scalar(f, r);
    case FieldSpec::Kind::Cyclotomic: {
      Scalar z = zero(f);
      std::get<Cyclo>(z.value_).c[0] = r;
      return z;
    }
  }
  throw Error("unknown field kind");
}

Scalar Scalar::zeta(FieldSpec f) {
  if (f.kind() != FieldSpec::Kind::Cyclotomic) throw Error("zeta requires a cyclotomic field");
  std::vector<Rational> c(2);
  c[1] = Rational(1);
  return from_power_basis(f, c);
}

Scalar Scalar::from_power_basis(FieldSpec f, const std::vector<Rational>& coeffs) {
  if (f.kind() != FieldSpec::Kind::Cyclotomic) {
    if (coeffs.size() > 1)
      for (std::size_t i = 1; i < coeffs.size(); ++i)
        if (!coeffs[i].is_zero()) throw FieldMismatch("power-basis element outside " + f.to_string());
    return from_rational(f, coeffs.empty() ? Rational() : coeffs[0]);
  }
  const auto* ctx = cyclotomic_context(f.parameter());
  return Scalar(f, Cyclo{ctx, reduce_poly(*ctx, coeffs)});
}

bool Scalar::is_zero() const {
  switch (value_.index()) {
    case 0:
      return std::get<0>(value_) == 0;
    case 1:
      return std::get<1>(value_).is_zero();
    default: {
      for (const auto& c : std::get<2>(value_).c)
        if (!c.is_zero()) return false;
      return true;
    }
  }
}

bool Scalar::is_one() const {
  switch (value_.index()) {
    case 0:
      return std::get<0>(value_) == 1 % static_cast<std::int64_t>(field_.parameter());
    case 1:
      return std::get<1>(value_).is_one();
    default: {
      const auto& c = std::get<2>(value_).c;
      if (!c[0].is_one()) return false;
      for (std::size_t i = 1; i < c.size(); ++i)
        if (!c[i].is_zero()) return false;
      return true;
    }
  }
}

std::int64_t Scalar::residue() const {
  if (const auto* r = std::get_if<std::int64_t>(&value_)) return *r;
  throw FieldMismatch("residue() on non-prime-field scalar");
}

const Rational& Scalar::rational() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return *r;
  throw FieldMismatch("rational() on non-rational scalar");
}

const std::vector<Rational>& Scalar::coefficients() const {
  if (const auto* r = std::get_if<Cyclo>(&value_)) return r->c;
  throw FieldMismatch("coefficients() on non-cyclotomic scalar");
}

void Scalar::require_same(const Scalar& o) const {
  if (!(field_ == o.field_))
    throw FieldMismatch("field mismatch: " + field_.to_string() + " vs " + o.field_.to_string());
}

Scalar Scalar::operator-() const {
  switch (value_.index()) {
    case 0: {
      std::int64_t r = std::get<0>(value_);
      return Scalar(field_, r == 0 ? std::int64_t{0} : static_cast<std::int64_t>(field_.parameter()) - r);
    }
    case 1:
      return Scalar(field_, -std::get<1>(value_));
    default: {
      Cyclo c = std::get<2>(value_);
      for (auto& x : c.c) x = -x;
      return Scalar(field_, std::move(c));
    }
  }
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("division by zero");
  switch (value_.index()) {
    case 0: {
      const std::uint64_t p = field_.parameter();
      return Scalar(field_, static_cast<std::int64_t>(powmod(static_cast<std::uint64_t>(std::get<0>(value_)), p - 2, p)));
    }
    case 1:
      return Scalar(field_, std::get<1>(value_).inverse());
    default: {
      const auto& c = std::get<2>(value_);
      return Scalar(field_, Cyclo{c.ctx, cyclo_inverse(*c.ctx, c.c)});
    }
  }
}

Scalar Scalar::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar result = one(field_);
  Scalar base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same(o);
  switch (value_.index()) {
    case 0: {
      std::int64_t& r = std::get<0>(value_);
      r += std::get<0>(o.value_);
      if (r >= static_cast<std::int64_t>(field_.parameter())) r -= field_.parameter();
      break;
    }
    case 1:
      std::get<1>(value_) += std::get<1>(o.value_);
      break;
    default: {
      auto& a = std::get<2>(value_).c;
      const auto& b = std::get<2>(o.value_).c;
      for (std::size_t i = 0; i < a.size(); ++i)
        if (!b[i].is_zero()) a[i] += b[i];
    }
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_same(o);
  switch (value_.index()) {
    case 0: {
      std::int64_t& r = std::get<0>(value_);
      r -= std::get<0>(o.value_);
      if (r < 0) r += field_.parameter();
      break;
    }
    case 1:
      std::get<1>(value_) -= std::get<1>(o.value_);
      break;
    default: {
      auto& a = std::get<2>(value_).c;
      const auto& b = std::get<2>(o.value_).c;
      for (std::size_t i = 0; i < a.size(); ++i)
        if (!b[i].is_zero()) a[i] -= b[i];
    }
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same(o);
  switch (value_.index()) {
    case 0: {
      std::int64_t& r = std::get<0>(value_);
      r = static_cast<std::int64_t>(static_cast<std::uint64_t>(r) * static_cast<std::uint64_t>(std::get<0>(o.value_)) %
                                    field_.parameter());
      break;
    }
    case 1:
      std::get<1>(value_) *= std::get<1>(o.value_);
      break;
    default: {
      auto& a = std::get<2>(value_);
      a.c = cyclo_multiply(*a.ctx, a.c, std::get<2>(o.value_).c);
    }
  }
  return *this;
}

void Scalar::add_product(const Scalar& a, const Scalar& b) {
  if (value_.index() == 0 && a.value_.index() == 0 && b.value_.index() == 0 && field_ == a.field_ &&
      field_ == b.field_) {
    std::int64_t& r = std::get<0>(value_);
    const std::uint64_t p = field_.parameter();
    r = static_cast<std::int64_t>((static_cast<std::uint64_t>(r) +
                                   static_cast<std::uint64_t>(std::get<0>(a.value_)) *
                                       static_cast<std::uint64_t>(std::get<0>(b.value_))) %
                                  p);
    return;
  }
  Scalar t = a;
  t *= b;
  *this += t;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_)) return false;
  switch (a.value_.index()) {
    case 0:
      return std::get<0>(a.value_) == std::get<0>(b.value_);
    case 1:
      return std::get<1>(a.value_) == std::get<1>(b.value_);
    default:
      return std::get<2>(a.value_).c == std::get<2>(b.value_).c;
  }
}

std::string Scalar::to_string() const {
  switch (value_.index()) {
    case 0:
      return std::to_string(std::get<0>(value_));
    case 1:
      return std::get<1>(value_).to_string();
    default: {
      const auto& c = std::get<2>(value_).c;
      std::ostringstream os;
      bool first = true;
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0) {
          os << c[i].to_string();
        } else {
          if (!c[i].is_one()) os << c[i].to_string() << "*";
          os << "z" << field_.parameter();
          if (i > 1) os << "^" << i;
        }
      }
      if (first) os << "0";
      return os.str();
    }
  }
}

// ---------------------------------------------------------------- roots of unity

Scalar root_of_unity_generator(FieldSpec field) {
  switch (field.kind()) {
    case FieldSpec::Kind::Rationals:
      return Scalar::from_int(field, -1);
    case FieldSpec::Kind::Cyclotomic: {
      Scalar z = Scalar::zeta(field);
      return field.parameter() % 2 == 0 ? z : -z;
    }
    case FieldSpec::Kind::Prime:
      return Scalar::from_int(field, static_cast<std::int64_t>(smallest_primitive_root(field.parameter())));
  }
  throw Error("unknown field kind");
}

Scalar primitive_root_of_unity(FieldSpec field, std::uint64_t n) {
  if (n == 0) throw UnsupportedRoot("root of unity order must be positive");
  const std::uint64_t big_n = field.roots_of_unity_order();
  if (big_n % n != 0)
    throw UnsupportedRoot("no primitive " + std::to_string(n) + "-th root of unity in " + field.to_string());
  return root_of_unity_generator(field).pow(static_cast<std::int64_t>(big_n / n));
}

std::optional<std::uint64_t> root_of_unity_log(const Scalar& s) {
  if (s.is_zero()) return std::nullopt;
  const FieldSpec f = s.field();
  const std::uint64_t big_n = f.roots_of_unity_order();
  const Scalar g = root_of_unity_generator(f);
  Scalar cur = Scalar::one(f);
  for (std::uint64_t e = 0; e < big_n; ++e) {
    if (cur == s) return e;
    cur *= g;
  }
  return std::nullopt;
}

std::optional<std::uint64_t> root_of_unity_order(const Scalar& s) {
  auto e = root_of_unity_log(s);
  if (!e) return std::nullopt;
  const std::uint64_t big_n = s.field().roots_of_unity_order();
  return big_n / std::gcd(big_n, *e);
}

}  // namespace hopfkit
