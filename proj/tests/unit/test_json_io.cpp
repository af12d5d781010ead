#include <gtest/gtest.h>

#include "hopfkit/catalog.hpp"
#include "hopfkit/json_io.hpp"

using namespace hopfkit;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F3 = FieldSpec::prime(3);

}  // namespace

TEST(JsonScalars, RoundTrip) {
  const Scalar half = Scalar::from_rational(Q, Rational::parse("-3/2"));
  EXPECT_EQ(scalar_to_json(half), "-3/2");
  EXPECT_EQ(scalar_from_json(scalar_to_json(half), Q), half);
  EXPECT_EQ(scalar_to_json(Scalar::from_int(F3, 5)), 2);
  EXPECT_EQ(scalar_from_json(Json("1/2"), F3), Scalar::from_int(F3, 2));
  const FieldSpec c3 = FieldSpec::parse("Q(zeta3)");
  const Scalar z = Scalar::from_power_basis(c3, {Rational(1), Rational::parse("2/3")});
  EXPECT_EQ(scalar_from_json(scalar_to_json(z), c3), z);
  EXPECT_THROW(scalar_from_json(Json::array(), Q, "/x"), FormatError);
}

TEST(JsonMatrices, RoundTripAndRagged) {
  const Matrix m = Matrix::from_rows(Q, {{1, 2}, {0, -1}});
  EXPECT_EQ(matrix_from_json(matrix_to_json(m), Q), m);
  try {
    matrix_from_json(Json::parse(R"j([[1, 2], [3]])j"), Q, "/m");
    FAIL() << "ragged matrix accepted";
  } catch (const FormatError& e) {
    EXPECT_NE(std::string(e.what()).find("/m/1"), std::string::npos);
  }
}

TEST(JsonGroups, RoundTripAndSpecs) {
  auto g = cyclic_product({2, 3}, {"a", "b"});
  auto back = group_from_json(group_to_json(*g));
  EXPECT_EQ(back->labels(), g->labels());
  EXPECT_EQ(back->table(), g->table());
  EXPECT_EQ(parse_group_spec("cyclic:2,2")->order(), 4u);
  EXPECT_EQ(parse_group_spec("symmetric:3")->order(), 6u);
  EXPECT_EQ(parse_group_spec("dihedral:4")->order(), 8u);
  auto s3 = parse_group_spec("symmetric:3");
  auto raw = group_to_json(*s3);
  raw.erase("cyclic");
  EXPECT_EQ(group_from_json(raw)->table(), s3->table());
}

TEST(JsonCocycles, CrossedDataRoundTrip) {
  auto d = klein_crossed_data(F3);
  auto act = action_from_json(action_to_json(d.sigma.action));
  auto sigma = sigma_from_json(sigma_to_json(d.sigma), act, F3);
  auto tau = tau_from_json(tau_to_json(d.tau), act, F3);
  auto original = crossed_coproduct(d.sigma, d.tau);
  auto rebuilt = crossed_coproduct(sigma, tau);
  EXPECT_TRUE(same_algebra(*original, *rebuilt));
  EXPECT_THROW(cocycle_from_json(Json::parse(R"j({"zz": {"1": 2}})j"), d.sigma.action.target(), F3, "/c"), FormatError);
}

TEST(JsonAlgebras, RecipesRebuild) {
  const char* recipes[] = {
      R"j({"type": "taft", "n": 3, "field": "Q(zeta3)"})j",
      R"j({"type": "group-algebra", "group": {"symmetric": 3}, "field": "F3"})j",
      R"j({"type": "dual-group", "group": {"cyclic": [2, 2]}, "field": "Q"})j",
      R"j({"type": "truncated", "n": 3, "field": "Q"})j",
      R"j({"type": "smash", "preset": "shift", "m": 2, "field": "Q"})j",
      R"j({"type": "crossed", "preset": "klein", "field": "F3"})j",
      R"j({"type": "tensor", "left": {"type": "taft", "n": 2, "field": "Q"},
          "right": {"type": "group-algebra", "group": {"cyclic": [2]}, "field": "Q"}})j",
  };
  for (const char* text : recipes) {
    auto a = build_from_recipe(Json::parse(text));
    const Json doc = algebra_to_json(*a);
    ASSERT_TRUE(doc.contains("recipe")) << text;
    auto b = algebra_from_json(doc);
    EXPECT_TRUE(same_algebra(*a, *b)) << text;
    // constants alone suffice too
    Json raw = doc;
    raw.erase("recipe");
    auto c = algebra_from_json(raw);
    EXPECT_TRUE(same_algebra(*a, *c)) << text;
    EXPECT_EQ(c->hopf().has_value(), a->hopf().has_value()) << text;
  }
}

TEST(JsonAlgebras, DerivedRecipeAndMismatch) {
  auto h = taft_algebra(2, Q);
  const Json doc = algebra_to_json(*h);
  ASSERT_TRUE(doc.contains("recipe"));
  EXPECT_EQ(doc["recipe"]["type"], "taft");
  Json tampered = doc;
  tampered["mult"][0][3] = "5";
  EXPECT_THROW(algebra_from_json(tampered), FormatError);
  EXPECT_THROW(build_from_recipe(Json::parse(R"j({"type": "nope", "field": "Q"})j")), FormatError);
  EXPECT_THROW(build_from_recipe(Json::parse(R"j({"type": "taft", "field": "Q"})j")), FormatError);
}

TEST(JsonModules, RoundTrip) {
  auto s = shift_smash(2);
  auto u = shift_module_u(s);
  const Json doc = module_to_json(u);
  EXPECT_TRUE(doc["algebra"].contains("recipe"));
  auto back = module_from_json(doc);
  EXPECT_EQ(back.dim(), u.dim());
  for (std::size_t i = 0; i < u.action.size(); ++i) EXPECT_EQ(back.action[i], u.action[i]);
  Json bad = doc;
  bad["action"].erase(0);
  EXPECT_THROW(module_from_json(bad), FormatError);
}

TEST(JsonElements, Parse) {
  auto h = taft_algebra(2, Q);
  const std::string g = h->label(h->generators()[0].terms.front().first);
  const SparseVec v = parse_element(*h, "2*" + g + " - 1/2");
  SparseVec expect = sum(scaled(SparseVec::single(h->index_of(g), Scalar::one(Q)), Scalar::from_int(Q, 2)),
                         scaled(h->unit(), Scalar::from_rational(Q, Rational::parse("-1/2"))));
  EXPECT_TRUE(difference(v, expect).empty());
  EXPECT_THROW(parse_element(*h, "3*bogus"), FormatError);
}
