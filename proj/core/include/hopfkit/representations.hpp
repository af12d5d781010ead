#pragma once

// Finite-dimensional left modules given by the action matrix of every basis element.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hopfkit/constructors.hpp"

namespace hopfkit {

struct AlgModule {
  AlgebraPtr algebra;
  /// action[i] is the matrix of e_i.
  std::vector<Matrix> action;
  std::string name;

  std::size_t dim() const { return action.empty() ? 0 : action.front().rows(); }
  const FieldSpec& field() const { return algebra->field(); }
  Matrix act(const SparseVec& a) const;
};

/// Same field, dimension and structure constants.
bool same_algebra(const BasisAlgebra& a, const BasisAlgebra& b);

/// Unit acts as the identity and e_g e_j acts as e_g . e_j for the generators g;
/// this forces the full module axiom because every basis element's action is stored.
Report check_module_axioms(const AlgModule& m);
/// Builds and (optionally) verifies, throwing AxiomFailure.
AlgModule make_module(AlgebraPtr a, std::vector<Matrix> action, std::string name = {}, bool verify = true);

AlgModule regular_module(const AlgebraPtr& a);
AlgModule trivial_module(const AlgebraPtr& a);
AlgModule zero_module(const AlgebraPtr& a);
/// A / (A g_1 + ... + A g_r).
AlgModule quotient_by_left_ideal(const AlgebraPtr& a, const std::vector<SparseVec>& gens);
/// The submodule spanned by the columns of `basis` (must be invariant and independent).
AlgModule submodule(const AlgModule& m, const Matrix& basis);
/// The quotient by the submodule spanned by the columns of `basis`.
AlgModule quotient_module(const AlgModule& m, const Matrix& basis);
AlgModule direct_sum(const AlgModule& m, const AlgModule& n);

/// M (x) N through the comultiplication; basis m_i (x) n_j at i * dim N + j.
AlgModule tensor_module(const AlgModule& m, const AlgModule& n);
/// b acts on M* by the transpose of S(b).
AlgModule dual_module(const AlgModule& m);
/// M (x) N over A (x) B for an A-module M and B-module N; `ab` must be tensor_algebra(A, B).
AlgModule external_tensor(const AlgModule& m, const AlgModule& n, const AlgebraPtr& ab);

/// Module over f.source with e_i acting as f(e_i).
AlgModule restrict_module(const AlgModule& m, const AlgebraMap& f, bool verify = true);
/// B (x)_A M for an injective unital f : A -> B with B free as a right A-module.
AlgModule induce(const AlgebraMap& f, const AlgModule& m);

// ---- graded modules over A # k^G and kL #_sigma^tau k^G ----------------------

const CoproductInfo& coproduct_info(const BasisAlgebra& k);
/// Columns span M_x = p_x M.
Matrix component_basis(const AlgModule& m, std::size_t x);
std::vector<std::size_t> component_dims(const AlgModule& m);
/// M_x as a module over the block algebra K p_x.
AlgModule component(const AlgModule& m, std::size_t x);
/// U (x) k p_x: p_x acts as the identity and the other p_y as zero.
AlgModule place_in_component(const AlgModule& u, const AlgebraPtr& k, std::size_t x);
/// yU for a module U over a block of K: b acts as y^-1 . b. Over a crossed
/// coproduct the result lives over k^{y sigma}L.
AlgModule conjugate_module(const AlgModule& u, const AlgebraPtr& k, std::size_t y);

/// k^alpha L-module (x) k^beta L-module, a k^{alpha beta}L-module with l acting as l (x) l.
AlgModule twisted_tensor(const AlgModule& m, const AlgModule& n);
/// The k^{alpha^-1}L-module M* with (l . f)(m) = f(l^-1 . m).
AlgModule twisted_dual(const AlgModule& m);
/// The twisted group algebra of a cocycle, reusing a block of K when one matches.
AlgebraPtr twisted_algebra_for(const CocycleSlice& alpha, const AlgebraPtr& k = nullptr);

/// Builds the canonical maps (M (x) N)_x -> sum_{yz=x} M_y (x) yN_z and
/// (M*)_x -> x(M_{x^-1})* and checks that each is a bijective intertwiner.
Report verify_component_decomposition(const AlgModule& m, const AlgModule& n);

// ---- homomorphisms ------------------------------------------------------------

/// Largest dim M * dim N accepted by hom_space.
inline constexpr std::size_t kMaxHomUnknowns = 20000;

/// Basis of Hom_A(M, N), each a dim N x dim M matrix. Throws ResourceGuard past kMaxHomUnknowns.
std::vector<Matrix> hom_space(const AlgModule& m, const AlgModule& n);

struct IsoVerdict {
  enum class Kind { Isomorphic, NotIsomorphic, Inconclusive };
  Kind kind = Kind::Inconclusive;
  std::optional<Matrix> certificate;
  std::string reason;
};
std::string to_string(IsoVerdict::Kind k);

IsoVerdict is_isomorphic(const AlgModule& m, const AlgModule& n, std::size_t trials = 20, std::uint64_t seed = 0);
/// f intertwines the actions on all generators.
bool is_intertwiner(const AlgModule& m, const AlgModule& n, const Matrix& f);

/// (id (x) ev)(coev (x) id) = id_M, with ev and coev checked to be module maps.
Report rigidity_check(const AlgModule& m);

}  // namespace hopfkit
