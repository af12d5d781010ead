#pragma once

// Builders for every algebra the workbench knows about.

#include <cstdint>
#include <map>
#include <vector>

#include "hopfkit/algebra.hpp"

namespace hopfkit {

struct BuildOptions {
  /// Run the exhaustive (Hopf) axiom checks and throw AxiomFailure on failure.
  bool verify = true;
};

AlgebraPtr group_algebra(GroupPtr group, FieldSpec field, BuildOptions opts = {});
AlgebraPtr dual_group_algebra(GroupPtr group, FieldSpec field, BuildOptions opts = {});

/// k^alpha L. Throws InvalidCocycle unless `validate` is false, in which case
/// the (possibly non-associative) structure constants are built anyway.
AlgebraPtr twisted_group_algebra(const CocycleSlice& alpha, bool validate = true);

/// T_n with q the field's primitive_root_of_unity(n).
AlgebraPtr taft_algebra(std::uint32_t n, FieldSpec field, BuildOptions opts = {});
/// T_n^{(x) m}.
AlgebraPtr quantum_elem_abelian(std::uint32_t n, std::uint32_t m, FieldSpec field, BuildOptions opts = {});
AlgebraPtr truncated_polynomial_algebra(std::uint32_t n, FieldSpec field);

/// A (x) B, with the tensor-product Hopf structure when both have one.
AlgebraPtr tensor_algebra(const AlgebraPtr& a, const AlgebraPtr& b, BuildOptions opts = {});

/// Matrix on the basis of A^{(x) m} (A of dimension d) moving factor k to position perm[k].
Matrix tensor_factor_permutation(FieldSpec f, std::size_t d, std::size_t m, const std::vector<std::size_t>& perm);

/// Extends matrices for the generators of G to a representation G -> GL(d).
std::vector<Matrix> extend_group_matrices(const FiniteGroup& g, FieldSpec field, std::size_t d,
                                          const std::map<std::size_t, Matrix>& generator_images);

/// A # k^G; action[x] is the matrix of x on the basis of A. Throws AxiomFailure
/// when G does not act by Hopf automorphisms.
AlgebraPtr smash_coproduct(const AlgebraPtr& a, GroupPtr g, std::vector<Matrix> action, BuildOptions opts = {});

/// kL #_sigma^tau k^G. Throws CompatibilityError naming the first violating tuple.
AlgebraPtr crossed_coproduct(const SigmaCocycle& sigma, const TauCocycle& tau, BuildOptions opts = {});

/// Columns form a basis of Z(A).
Matrix center(const BasisAlgebra& a);

/// A (x) A^op with (a (x) b)(c (x) d) = ac (x) db.
AlgebraPtr enveloping_algebra(const AlgebraPtr& a);

/// delta: kL -> (k^alpha L)^e, l -> l (x) l^-1; verified multiplicative, unital, injective.
AlgebraMap delta_embedding(const CocycleSlice& alpha);

struct TauElement {
  SparseVec element;
  /// k[t]/(t^n) -> A, t -> tau(lambda).
  AlgebraMap embedding;
};

/// tau(lambda) = lambda_1 x_1 + lambda_2 x_2 g_1 + ... + lambda_m x_m g_1 ... g_{m-1}.
TauElement qea_tau_element(const AlgebraPtr& qea, const Vector& lambda);

/// k[x_1..x_m]/(x_i^n) as the span of the x-monomials of T_n^{(x) m}.
AlgebraMap qea_nilpotent_embedding(const AlgebraPtr& qea);

/// The block algebra K p_x (A, or k^{sigma_x} L) inside a coproduct K (not unital).
AlgebraMap block_embedding(const AlgebraPtr& k, std::size_t x);

/// k^{alpha|H} H inside k^alpha L for a subgroup H.
AlgebraMap subgroup_embedding(const AlgebraPtr& twisted, const Subgroup& h);

/// Throws AxiomFailure with the witness when verification is requested and fails.
void require_axioms(const BasisAlgebra& a);

}  // namespace hopfkit
