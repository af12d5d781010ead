#pragma once

// Exact scalars over Q, the cyclotomic fields Q(zeta_n), and prime fields F_p.

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "hopfkit/error.hpp"

namespace hopfkit {

/// Arbitrary-precision rational with a machine-word fast path.
///
/// Values whose reduced numerator and denominator fit in 64 bits are kept
/// inline; anything larger spills into a GMP rational and is demoted back as
/// soon as it fits again.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t n, std::int64_t d);
  explicit Rational(const mpq_class& q);

  Rational(const Rational& other);
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& other);
  Rational& operator=(Rational&&) noexcept = default;
  ~Rational() = default;

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_small() const { return !big_; }
  int sign() const;

  mpq_class to_mpq() const;
  std::string to_string() const;
  static Rational parse(const std::string& text);

  /// Numerator/denominator when both fit in 64 bits.
  std::optional<std::pair<std::int64_t, std::int64_t>> small_parts() const;

  Rational operator-() const;
  Rational inverse() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b);

 private:
  void assign_big(mpq_class q);
  void assign_wide(__int128 n, __int128 d);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

/// Which exact field a scalar lives in.
class FieldSpec {
 public:
  enum class Kind : std::uint8_t { Rationals, Cyclotomic, Prime };

  constexpr FieldSpec() = default;
  static FieldSpec rationals() { return FieldSpec(Kind::Rationals, 1); }
  static FieldSpec cyclotomic(std::uint32_t n);
  static FieldSpec prime(std::uint32_t p);

  /// Accepts "Q", "F3", "F_3", "GF(3)", "Q(zeta4)", "Q(zeta_4)", "Qzeta4".
  static FieldSpec parse(const std::string& text);

  Kind kind() const { return kind_; }
  /// n for cyclotomic fields, p for prime fields, 1 for Q.
  std::uint32_t parameter() const { return param_; }
  std::uint32_t characteristic() const { return kind_ == Kind::Prime ? param_ : 0; }
  bool is_prime() const { return kind_ == Kind::Prime; }

  /// Order of the cyclic group of roots of unity contained in the field.
  std::uint64_t roots_of_unity_order() const;

  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  constexpr FieldSpec(Kind k, std::uint32_t p) : kind_(k), param_(p) {}
  Kind kind_ = Kind::Rationals;
  std::uint32_t param_ = 1;
};

struct CyclotomicContext;

/// An exact element of one FieldSpec.
///
/// Cyclotomic elements are coefficient vectors in the power basis of zeta_n,
/// reduced modulo the n-th cyclotomic polynomial, so equality is coefficientwise.
class Scalar {
 public:
  Scalar() : field_(FieldSpec::rationals()), value_(Rational()) {}

  static Scalar zero(FieldSpec f);
  static Scalar one(FieldSpec f);
  static Scalar from_int(FieldSpec f, std::int64_t v);
  static Scalar from_rational(FieldSpec f, const Rational& r);
  /// zeta_n in Q(zeta_n).
  static Scalar zeta(FieldSpec f);
  /// Cyclotomic element from power-basis coefficients (any length; reduced).
  static Scalar from_power_basis(FieldSpec f, const std::vector<Rational>& coeffs);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  std::int64_t residue() const;                      // prime fields
  const Rational& rational() const;                  // rationals
  const std::vector<Rational>& coefficients() const; // cyclotomic fields

  Scalar operator-() const;
  Scalar inverse() const;
  Scalar pow(std::int64_t e) const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }
  /// this += a * b without a temporary for the common fast paths.
  void add_product(const Scalar& a, const Scalar& b);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  std::string to_string() const;

 private:
  struct Cyclo {
    const CyclotomicContext* ctx;
    std::vector<Rational> c;
  };

  Scalar(FieldSpec f, std::int64_t residue) : field_(f), value_(residue) {}
  Scalar(FieldSpec f, Rational r) : field_(f), value_(std::move(r)) {}
  Scalar(FieldSpec f, Cyclo c) : field_(f), value_(std::move(c)) {}

  void require_same(const Scalar& o) const;

  FieldSpec field_;
  std::variant<std::int64_t, Rational, Cyclo> value_;
};

/// Euler phi.
std::uint32_t euler_phi(std::uint32_t n);
bool is_prime_number(std::uint64_t n);

/// zeta with zeta^n = 1 and zeta^d != 1 for 0 < d < n; throws UnsupportedRoot.
Scalar primitive_root_of_unity(FieldSpec field, std::uint64_t n);

/// Generator of the roots of unity in the field (order roots_of_unity_order()).
Scalar root_of_unity_generator(FieldSpec field);

/// e in [0, N) with generator^e == s, or nullopt if s is not a root of unity.
std::optional<std::uint64_t> root_of_unity_log(const Scalar& s);

/// Multiplicative order of s when s is a root of unity.
std::optional<std::uint64_t> root_of_unity_order(const Scalar& s);

}  // namespace hopfkit
