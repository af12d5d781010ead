#pragma once

// JSON documents for scalars, matrices, groups, cocycles, algebras and modules.
//
// Scalars: Q as "num/den" strings, F_p as integer residues, Q(zeta_n) as
// {"zeta_n": n, "coeffs": ["a0", "a1", ...]}. Matrices are row-major nested arrays.

#include <string>

#include <nlohmann/json.hpp>

#include "hopfkit/representations.hpp"

namespace hopfkit {

using Json = nlohmann::json;

/// Malformed input; the message carries the JSON pointer of the offending value.
class FormatError : public Error {
 public:
  using Error::Error;
};

Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j, FieldSpec f, const std::string& where = "");

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, FieldSpec f, const std::string& where = "");

/// {order, labels, table}, plus "cyclic" orders for products of cyclic groups.
Json group_to_json(const FiniteGroup& g);
/// Also accepts {"cyclic": [..], "names": [..]}, {"symmetric": n} and {"dihedral": n}.
GroupPtr group_from_json(const Json& j, const std::string& where = "");
/// "cyclic:2,2", "symmetric:3", "dihedral:4", or a group document.
GroupPtr parse_group_spec(const std::string& spec);

/// {"g": group, "l": group, "perms": {g-label: [l-labels]}}
Json action_to_json(const GroupAction& a);
GroupAction action_from_json(const Json& j, const std::string& where = "");

/// {l-label: {m-label: scalar}}; omitted entries are 1.
Json cocycle_to_json(const CocycleSlice& c);
CocycleSlice cocycle_from_json(const Json& j, GroupPtr l, FieldSpec f, const std::string& where = "");
/// {x-label: cocycle}; omitted x are trivial.
Json sigma_to_json(const SigmaCocycle& s);
SigmaCocycle sigma_from_json(const Json& j, const GroupAction& a, FieldSpec f, const std::string& where = "");
/// {x-label: {y-label: {l-label: scalar}}}; omitted entries are 1.
Json tau_to_json(const TauCocycle& t);
TauCocycle tau_from_json(const Json& j, const GroupAction& a, FieldSpec f, const std::string& where = "");

/// Builds an algebra from a construction recipe such as {"type": "taft", "n": 2, "field": "Q"}.
/// Types: group-algebra, dual-group, twisted, taft, qea, truncated, tensor, smash, crossed.
/// The result carries the recipe.
AlgebraPtr build_from_recipe(const Json& recipe, const std::string& where = "");

/// {format, name, field, dim, labels, mult: [[i, j, k, c]], unit: [[k, c]],
///  generators, hopf: {comul: [[i, j, k, c]], counit, antipode: [[i, k, c]]}, recipe}
/// The recipe is written when the algebra carries one or its structure info determines one.
Json algebra_to_json(const BasisAlgebra& a);
/// Rebuilds from the recipe when present (and checks it against any stored
/// structure constants); otherwise takes the constants as given.
AlgebraPtr algebra_from_json(const Json& j, const std::string& where = "");

/// {format, name, dim, algebra, action: [matrix per basis element]}. The algebra is
/// stored as its recipe alone when one is known, in full otherwise.
Json module_to_json(const AlgModule& m);
AlgModule module_from_json(const Json& j, const std::string& where = "");
/// The same over an algebra already built from j["algebra"].
AlgModule module_from_json(const Json& j, AlgebraPtr algebra, const std::string& where = "");

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

/// "2*x1 - g2 + 1/2" in the basis labels of `a` ("1" is the unit).
SparseVec parse_element(const BasisAlgebra& a, const std::string& text);

}  // namespace hopfkit
