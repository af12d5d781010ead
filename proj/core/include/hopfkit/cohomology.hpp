#pragma once

// Group and Hochschild cohomology in low degrees from normalized bar cochains,
// and the adjoint module of a twisted group algebra.

#include <cstddef>
#include <string>
#include <vector>

#include "hopfkit/representations.hpp"

namespace hopfkit {

struct CohomologyOptions {
  /// Refuse cochain spaces C^{n+1} larger than this.
  std::size_t max_cochain_dim = 4'000'000;
  /// Check d^{i+1} d^i = 0 for the stored differentials.
  bool check_d_squared = true;
};

/// Degrees 0..n_max of a cochain complex. differentials[i] holds d^i : C^i -> C^{i+1}
/// column by column (the image of each basis cochain).
struct CochainComplexSlice {
  std::size_t n_max = 0;
  std::vector<std::size_t> cochain_dims;  // C^0 .. C^{n_max + 1}
  std::vector<std::size_t> ranks;         // rank d^0 .. d^{n_max}
  std::vector<std::size_t> dims;          // dim H^0 .. H^{n_max}
  std::vector<std::vector<SparseVec>> differentials;
  bool d_squared_zero = true;
};

/// (k^alpha L)^ad over kL: l . m = alpha(l^-1, l)^-1 l m l^-1, split by conjugacy class.
struct AdjointModule {
  AlgebraPtr group_algebra;  // kL
  AlgebraPtr twisted;        // k^alpha L
  AlgModule module;
  std::vector<std::vector<std::size_t>> classes;
  /// summands[i] is spanned by the basis elements of classes[i].
  std::vector<AlgModule> summands;
};

/// Throws InvalidCocycle.
AdjointModule adjoint_module(const CocycleSlice& alpha);

/// H^n(L, M) for a module over an untwisted group algebra kL.
CochainComplexSlice group_cohomology_dims(const AlgModule& m, std::size_t n_max, const CohomologyOptions& opts = {});

/// HH^n(A) = HH^n(A, A) through Hom(Abar^{(x) n}, A), Abar = A / k1.
CochainComplexSlice hochschild_dims(const AlgebraPtr& a, std::size_t n_max, const CohomologyOptions& opts = {});

struct IsoAdReport {
  Report report;
  std::vector<std::size_t> hochschild;  // dim HH^n(k^alpha L)
  std::vector<std::size_t> group;       // dim H^n(L, (k^alpha L)^ad)
};
IsoAdReport verify_iso_ad(const CocycleSlice& alpha, std::size_t n_max, const CohomologyOptions& opts = {});

struct EmbeddingReport {
  Report report;
  std::vector<std::size_t> summand;  // dim H^n(L, k 1bar)
  std::vector<std::size_t> trivial;  // dim H^n(L, k)
};
/// The summand k 1bar of the adjoint module against the trivial module.
EmbeddingReport verify_h_embedding(const CocycleSlice& alpha, std::size_t n_max, const CohomologyOptions& opts = {});

}  // namespace hopfkit
