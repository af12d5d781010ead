#include <random>

#include <gtest/gtest.h>

#include "hopfkit/cocycle.hpp"

using namespace hopfkit;

namespace {

GroupPtr group(std::vector<std::uint32_t> orders, std::vector<std::string> names = {}) {
  return std::make_shared<const FiniteGroup>(make_product_of_cyclics(orders, names));
}

std::vector<Matrix> klein_rho(const FiniteGroup& v, FieldSpec f) {
  std::vector<Matrix> rho(4);
  rho[v.index_of("1")] = Matrix::identity(f, 2);
  rho[v.index_of("a")] = Matrix::from_rows(f, {{0, -1}, {1, 0}});
  rho[v.index_of("b")] = Matrix::from_rows(f, {{1, 0}, {0, -1}});
  rho[v.index_of("ab")] = Matrix::from_rows(f, {{0, 1}, {1, 0}});
  return rho;
}

struct KleinData {
  FieldSpec f = FieldSpec::prime(3);
  GroupPtr g = group({2}, {"h"});
  GroupPtr l = group({2, 2, 3, 3}, {"a", "b", "c", "d"});
  GroupPtr v = group({2, 2}, {"a", "b"});
  GroupAction act = GroupAction::from_generators(g, l, {{1, coordinate_permutation(*l, {0, 1, 3, 2})}});
  CocycleSlice alpha = extend_cocycle_trivially(cocycle_from_projective_rep(v, klein_rho(*v, f)), l, {0, 1});
  SigmaCocycle sigma{act, {CocycleSlice::trivial(l, f), alpha}};
  TauCocycle tau = TauCocycle::trivial(act, f);
};

}  // namespace

TEST(Cocycle, KleinFromProjectiveRep) {
  const auto q = FieldSpec::rationals();
  auto v = group({2, 2}, {"a", "b"});
  auto alpha = cocycle_from_projective_rep(v, klein_rho(*v, q));
  const auto a = v->index_of("a"), b = v->index_of("b"), ab = v->index_of("ab");
  // hand multiplication of the matrices
  EXPECT_TRUE(alpha(a, b).is_one());
  EXPECT_EQ(alpha(b, a), Scalar::from_int(q, -1));
  EXPECT_EQ(alpha(a, a), Scalar::from_int(q, -1));
  EXPECT_TRUE(alpha(b, b).is_one());
  EXPECT_TRUE(alpha(ab, ab).is_one());
  EXPECT_TRUE(check_cocycle(alpha));
  EXPECT_TRUE(cocycle_product(alpha, alpha).is_trivial());
  EXPECT_TRUE(cocycle_product(alpha, cocycle_inverse(alpha)).is_trivial());
  EXPECT_EQ(cocycle_product(CocycleSlice::trivial(v, q), alpha), alpha);
}

TEST(Cocycle, ProjectiveRepErrors) {
  const auto q = FieldSpec::rationals();
  auto v = group({2, 2}, {"a", "b"});
  auto rho = klein_rho(*v, q);
  rho[v->index_of("a")] = Matrix::from_rows(q, {{1, 1}, {0, 1}});
  EXPECT_THROW(cocycle_from_projective_rep(v, rho), NotProjectiveRep);
  // an honest representation gives the trivial cocycle
  std::vector<Matrix> lin(4);
  for (std::size_t i = 0; i < 4; ++i) {
    auto c = v->coordinates(i);
    lin[i] = Matrix::from_rows(q, {{c[0] ? -1 : 1, 0}, {0, c[1] ? -1 : 1}});
  }
  EXPECT_TRUE(cocycle_from_projective_rep(v, lin).is_trivial());
}

TEST(Cocycle, PerturbedFailsWithWitness) {
  const auto q = FieldSpec::rationals();
  auto v = group({2, 2}, {"a", "b"});
  auto alpha = cocycle_from_projective_rep(v, klein_rho(*v, q));
  auto vals = alpha.values();
  vals[v->index_of("a") * 4 + v->index_of("b")] = Scalar::from_int(q, 2);
  auto r = check_cocycle(CocycleSlice(v, q, vals));
  EXPECT_FALSE(r);
  EXPECT_NE(r.witness.find("("), std::string::npos);
}

TEST(Cocycle, KleinCompatibility) {
  KleinData ex;
  EXPECT_TRUE(validate_compatibility(ex.sigma, ex.tau)) << validate_compatibility(ex.sigma, ex.tau).witness;
  EXPECT_TRUE(is_g_invariant(ex.alpha, ex.act));
  EXPECT_EQ(conjugate_cocycle(ex.alpha, ex.act, 0), ex.alpha);
  // perturb sigma_h at one value: must fail with a tuple
  auto vals = ex.alpha.values();
  vals[ex.l->index_of("a") * 36 + ex.l->index_of("b")] = Scalar::from_int(ex.f, -1);
  SigmaCocycle bad{ex.act, {CocycleSlice::trivial(ex.l, ex.f), CocycleSlice(ex.l, ex.f, vals)}};
  auto r = validate_compatibility(bad, ex.tau);
  EXPECT_FALSE(r);
  EXPECT_FALSE(r.witness.empty());
  // a sigma_1 that is not trivial violates the compatibility condition at x = y = 1
  SigmaCocycle bad1{ex.act, {ex.alpha, ex.alpha}};
  EXPECT_FALSE(validate_compatibility(bad1, ex.tau));
}

TEST(Cocycle, ConjugationByNonInvariantAction) {
  // swapping a and b does not fix the Klein cocycle, and applying it twice returns it
  const auto q = FieldSpec::rationals();
  auto v = group({2, 2}, {"a", "b"});
  auto g = group({2}, {"h"});
  auto act = GroupAction::from_generators(g, v, {{1, coordinate_permutation(*v, {1, 0})}});
  auto alpha = cocycle_from_projective_rep(v, klein_rho(*v, q));
  auto c = conjugate_cocycle(alpha, act, 1);
  EXPECT_FALSE(c == alpha);
  EXPECT_TRUE(check_cocycle(c));
  EXPECT_EQ(conjugate_cocycle(c, act, 1), alpha);
  // but the conjugate is cohomologous to alpha (H^2 of the Klein group is Z/2)
  EXPECT_TRUE(cohomologous(c, alpha).coboundary);
}

TEST(Coboundary, Decisions) {
  KleinData ex;
  auto triv = is_coboundary(CocycleSlice::trivial(ex.l, ex.f));
  EXPECT_TRUE(triv.coboundary);
  ASSERT_TRUE(triv.witness);
  for (const auto& m : *triv.witness) EXPECT_TRUE(m.is_one());

  auto klein = is_coboundary(ex.alpha);
  EXPECT_FALSE(klein.coboundary);
  auto klein_v = is_coboundary(cocycle_from_projective_rep(ex.v, klein_rho(*ex.v, FieldSpec::cyclotomic(4))));
  EXPECT_FALSE(klein_v.coboundary);

  // d(mu) for a root-of-unity valued mu is recognized, and the witness reproduces it
  const auto f = FieldSpec::prime(7);
  auto z6 = group({6});
  Vector mu;
  for (std::size_t i = 0; i < 6; ++i) mu.push_back(Scalar::from_int(f, 3).pow(static_cast<std::int64_t>(i * i)));
  auto beta = coboundary_of(z6, mu);
  auto r = is_coboundary(beta);
  ASSERT_TRUE(r.coboundary);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(coboundary_of(z6, *r.witness), beta);
}

TEST(Coboundary, NeedsExtension) {
  // On Z/2, alpha(a,a) = -1 is d(mu) with mu(a) = i, which is not rational.
  const auto q = FieldSpec::rationals();
  auto z2 = group({2});
  std::vector<Scalar> vals(4, Scalar::one(q));
  vals[3] = Scalar::from_int(q, -1);
  auto alpha = CocycleSlice(z2, q, vals);
  ASSERT_TRUE(check_cocycle(alpha));
  auto r = is_coboundary(alpha);
  EXPECT_TRUE(r.coboundary);
  EXPECT_TRUE(r.needs_extension);
  EXPECT_FALSE(r.witness);
  // Over Q(i) the witness is in the field.
  const auto qi = FieldSpec::cyclotomic(4);
  std::vector<Scalar> vi(4, Scalar::one(qi));
  vi[3] = Scalar::from_int(qi, -1);
  auto ri = is_coboundary(CocycleSlice(z2, qi, vi));
  EXPECT_TRUE(ri.coboundary);
  EXPECT_TRUE(ri.witness);
}

TEST(Coboundary, NonRootOfUnityIsUnsupported) {
  const auto q = FieldSpec::rationals();
  auto z2 = group({2});
  Vector mu = {Scalar::one(q), Scalar::from_int(q, 2)};
  EXPECT_THROW(is_coboundary(coboundary_of(z2, mu)), Unsupported);
}

TEST(Coboundary, TauCoboundariesAndRewrite) {
  KleinData ex;
  // sigma_xy and sigma_x (x sigma_y) are cohomologous for every x, y
  const auto& g = *ex.g;
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::size_t y = 0; y < g.order(); ++y) {
      auto rhs = cocycle_product(ex.sigma.slices[x], conjugate_cocycle(ex.sigma.slices[y], ex.act, x));
      EXPECT_TRUE(cohomologous(ex.sigma.slices[g.mul(x, y)], rhs).coboundary);
    }
}

TEST(SolveMod, AgreesWithBruteForce) {
  std::mt19937 rng(4);
  for (int t = 0; t < 200; ++t) {
    const std::int64_t m = 2 + rng() % 11;
    const std::size_t rows = 1 + rng() % 3, cols = 1 + rng() % 3;
    std::vector<std::int64_t> a(rows * cols), b(rows);
    for (auto& x : a) x = static_cast<std::int64_t>(rng() % m);
    for (auto& x : b) x = static_cast<std::int64_t>(rng() % m);
    bool feasible = false;
    std::vector<std::int64_t> x(cols, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (feasible) return;
      if (i == cols) {
        bool ok = true;
        for (std::size_t r = 0; r < rows && ok; ++r) {
          std::int64_t s = 0;
          for (std::size_t c = 0; c < cols; ++c) s += a[r * cols + c] * x[c];
          ok = (s - b[r]) % m == 0;
        }
        feasible = ok;
        return;
      }
      for (std::int64_t v = 0; v < m && !feasible; ++v) {
        x[i] = v;
        rec(i + 1);
      }
    };
    rec(0);
    auto sol = solve_mod(a, rows, cols, b, m);
    EXPECT_EQ(sol.has_value(), feasible);
  }
}
