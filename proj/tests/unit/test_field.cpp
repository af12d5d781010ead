#include <random>

#include <gtest/gtest.h>

#include "hopfkit/field.hpp"

using namespace hopfkit;

namespace {

Scalar random_scalar(FieldSpec f, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-9, 9);
  switch (f.kind()) {
    case FieldSpec::Kind::Prime:
      return Scalar::from_int(f, d(rng));
    case FieldSpec::Kind::Rationals: {
      int den = d(rng);
      if (den == 0) den = 1;
      return Scalar::from_rational(f, Rational(d(rng), den));
    }
    case FieldSpec::Kind::Cyclotomic: {
      std::vector<Rational> c;
      for (std::uint32_t i = 0; i < f.parameter() + 2; ++i) c.emplace_back(d(rng), 1 + (d(rng) + 9) % 3);
      return Scalar::from_power_basis(f, c);
    }
  }
  return Scalar::zero(f);
}

}  // namespace

TEST(Rational, ReducesAndCompares) {
  EXPECT_EQ(Rational(2, 4), Rational(1, 2));
  EXPECT_EQ(Rational(-3, -6), Rational(1, 2));
  EXPECT_EQ(Rational(1, -2).to_string(), "-1/2");
  EXPECT_EQ(Rational::parse("6/-4"), Rational(-3, 2));
  EXPECT_THROW(Rational(1, 0), std::exception);
}

TEST(Rational, SpillsToBigAndBack) {
  Rational x(1LL << 62);
  Rational y = x * x * x;
  EXPECT_FALSE(y.is_small());
  EXPECT_EQ(y.to_mpq(), mpq_class(mpz_class(1) << 186));
  Rational z = y / (x * x);
  EXPECT_TRUE(z.is_small());
  EXPECT_EQ(z, x);
  // 1/p - 1/q near the 64-bit boundary
  Rational a(1, 4611686018427387847LL), b(1, 4611686018427387817LL);
  EXPECT_EQ((a - b).to_mpq(), mpq_class(1, mpz_class("4611686018427387847")) - mpq_class(1, mpz_class("4611686018427387817")));
}

TEST(FieldSpec, ParsesAndReportsCharacteristic) {
  EXPECT_EQ(FieldSpec::parse("Q"), FieldSpec::rationals());
  EXPECT_EQ(FieldSpec::parse("F_3"), FieldSpec::prime(3));
  EXPECT_EQ(FieldSpec::parse("GF(7)"), FieldSpec::prime(7));
  EXPECT_EQ(FieldSpec::parse("Q(zeta_4)"), FieldSpec::cyclotomic(4));
  EXPECT_EQ(FieldSpec::prime(3).characteristic(), 3u);
  EXPECT_EQ(FieldSpec::cyclotomic(5).characteristic(), 0u);
  EXPECT_THROW(FieldSpec::prime(4), Error);
  EXPECT_THROW(FieldSpec::parse("R"), Error);
  EXPECT_EQ(FieldSpec::parse(FieldSpec::cyclotomic(12).to_string()), FieldSpec::cyclotomic(12));
}

TEST(Scalar, FieldAxiomsOnRandomTriples) {
  std::mt19937 rng(7);
  for (FieldSpec f : {FieldSpec::rationals(), FieldSpec::prime(7), FieldSpec::prime(2), FieldSpec::cyclotomic(3),
                      FieldSpec::cyclotomic(4), FieldSpec::cyclotomic(12), FieldSpec::cyclotomic(1)}) {
    for (int t = 0; t < 60; ++t) {
      const Scalar a = random_scalar(f, rng), b = random_scalar(f, rng), c = random_scalar(f, rng);
      EXPECT_EQ((a + b) + c, a + (b + c)) << f.to_string();
      EXPECT_EQ((a * b) * c, a * (b * c)) << f.to_string();
      EXPECT_EQ(a * (b + c), a * b + a * c) << f.to_string();
      EXPECT_EQ(a * b, b * a) << f.to_string();
      EXPECT_TRUE((a - a).is_zero());
      if (!a.is_zero()) EXPECT_TRUE((a * a.inverse()).is_one()) << f.to_string() << " " << a.to_string();
      Scalar acc = c;
      acc.add_product(a, b);
      EXPECT_EQ(acc, c + a * b);
    }
  }
}

TEST(Scalar, MixingFieldsThrows) {
  EXPECT_THROW(Scalar::one(FieldSpec::prime(3)) + Scalar::one(FieldSpec::prime(5)), FieldMismatch);
  EXPECT_THROW(Scalar::one(FieldSpec::rationals()) * Scalar::one(FieldSpec::cyclotomic(3)), FieldMismatch);
}

TEST(Scalar, CyclotomicPolynomialVanishes) {
  // Phi_12(x) = x^4 - x^2 + 1, Phi_9(x) = x^6 + x^3 + 1, Phi_5 = 1 + x + x^2 + x^3 + x^4
  const auto z12 = Scalar::zeta(FieldSpec::cyclotomic(12));
  EXPECT_TRUE((z12.pow(4) - z12.pow(2) + Scalar::one(z12.field())).is_zero());
  const auto z9 = Scalar::zeta(FieldSpec::cyclotomic(9));
  EXPECT_TRUE((z9.pow(6) + z9.pow(3) + Scalar::one(z9.field())).is_zero());
  const auto z5 = Scalar::zeta(FieldSpec::cyclotomic(5));
  Scalar s = Scalar::zero(z5.field());
  for (int i = 0; i < 5; ++i) s += z5.pow(i);
  EXPECT_TRUE(s.is_zero());
  EXPECT_EQ(z5.coefficients().size(), 4u);
  // reduction is idempotent: rebuilding from canonical coefficients gives the same element
  const auto w = z12.pow(7) + z12.pow(11);
  EXPECT_EQ(Scalar::from_power_basis(w.field(), w.coefficients()), w);
}

TEST(RootsOfUnity, PrimitiveRoots) {
  EXPECT_EQ(primitive_root_of_unity(FieldSpec::rationals(), 2), Scalar::from_int(FieldSpec::rationals(), -1));
  EXPECT_TRUE(primitive_root_of_unity(FieldSpec::rationals(), 1).is_one());
  EXPECT_THROW(primitive_root_of_unity(FieldSpec::rationals(), 3), UnsupportedRoot);
  // F_7: the elements of order 3, found by enumeration
  const auto f7 = FieldSpec::prime(7);
  std::vector<std::int64_t> order3;
  for (std::int64_t a = 1; a < 7; ++a)
    if ((a * a * a) % 7 == 1 && a != 1) order3.push_back(a);
  const auto r = primitive_root_of_unity(f7, 3);
  EXPECT_NE(std::find(order3.begin(), order3.end(), r.residue()), order3.end());
  EXPECT_THROW(primitive_root_of_unity(f7, 4), UnsupportedRoot);
  const auto q4 = FieldSpec::cyclotomic(4);
  const auto i = primitive_root_of_unity(q4, 4);
  EXPECT_EQ(i * i, Scalar::from_int(q4, -1));
  EXPECT_THROW(primitive_root_of_unity(q4, 3), UnsupportedRoot);
  // Q(zeta_3) contains the 6th roots
  const auto q3 = FieldSpec::cyclotomic(3);
  const auto z6 = primitive_root_of_unity(q3, 6);
  EXPECT_TRUE(z6.pow(6).is_one());
  EXPECT_FALSE(z6.pow(3).is_one());
  EXPECT_FALSE(z6.pow(2).is_one());
}

TEST(RootsOfUnity, LogsAndOrders) {
  for (FieldSpec f : {FieldSpec::rationals(), FieldSpec::prime(13), FieldSpec::cyclotomic(5), FieldSpec::cyclotomic(4)}) {
    const auto g = root_of_unity_generator(f);
    const auto n = f.roots_of_unity_order();
    EXPECT_EQ(root_of_unity_order(g), n);
    for (std::uint64_t e = 0; e < n; ++e) EXPECT_EQ(root_of_unity_log(g.pow(static_cast<std::int64_t>(e))), e);
  }
  EXPECT_FALSE(root_of_unity_log(Scalar::from_int(FieldSpec::rationals(), 2)).has_value());
  EXPECT_EQ(FieldSpec::cyclotomic(5).roots_of_unity_order(), 10u);
  EXPECT_EQ(FieldSpec::prime(3).roots_of_unity_order(), 2u);
}
