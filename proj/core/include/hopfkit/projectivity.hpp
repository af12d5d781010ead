#pragma once

// Projectivity tests and rank-variety membership for quantum elementary abelian groups.

#include <string>
#include <vector>

#include "hopfkit/representations.hpp"

namespace hopfkit {

enum class Strategy { Auto, Split, Local, Jordan };
std::string to_string(Strategy s);
Strategy parse_strategy(const std::string& s);

struct ProjectivityVerdict {
  bool projective = false;
  Strategy strategy = Strategy::Split;
  std::string witness;
};

/// M is projective iff the multiplication A (x) M -> M has an A-linear section.
/// The section is found through Hom_A(M, A) (dual basis lemma) and re-verified.
ProjectivityVerdict is_projective_split(const AlgModule& m);

/// Free over k[t]/(t^n) where t acts by `t_action`: n | dim and rank t^{n-1} = dim / n.
ProjectivityVerdict is_free_over_nilpotent_line(const Matrix& t_action, std::uint32_t n);
/// The same for a module over truncated_polynomial_algebra(n).
ProjectivityVerdict is_free_over_nilpotent_line(const AlgModule& m);

/// Over a local algebra with the given radical basis: projective iff
/// dim M = dim(M / rad M) * dim A. Throws Error when `radical` is not the
/// radical of a local algebra.
ProjectivityVerdict is_projective_local(const AlgModule& m, const std::vector<SparseVec>& radical);

/// Radical of a local algebra when it can be written down directly: twisted
/// group algebras of p-groups in characteristic p (spanned by l - c_l with
/// l^{|l|} = c_l^{|l|}), or a unit basis element whose complement spans a
/// nilpotent ideal. nullopt when neither applies.
std::optional<std::vector<SparseVec>> local_radical(const BasisAlgebra& a);

struct ProjectivityOptions {
  Strategy strategy = Strategy::Auto;
  /// Re-run the split test when the structural test was used and both are affordable.
  bool cross_check = true;
  std::size_t cross_check_max_algebra_dim = 36;
  std::size_t cross_check_max_module_dim = 36;
};

/// Auto: components over smash/crossed coproducts; Sylow restriction plus
/// the local test over twisted group algebras in characteristic p; the
/// x-monomial subalgebra for quantum elementary abelian groups; Jordan blocks
/// over k[t]/(t^n); the split test otherwise. Throws Error when cross-checked
/// strategies disagree.
ProjectivityVerdict is_projective(const AlgModule& m, const ProjectivityOptions& opts = {});

struct RankVarietyPoint {
  Vector lambda;
  /// True when the restriction to k<tau(lambda)> is not projective.
  bool in_variety = false;
  std::string witness;
};

struct RankVarietyReport {
  std::vector<RankVarietyPoint> points;
  std::string notes;
};

/// Coordinate vectors and pairwise sums; over F_p with p^m <= `max_enumerate`
/// all nonzero vectors with leading coefficient 1 instead.
std::vector<Vector> default_lambdas(FieldSpec f, std::uint32_t m, bool enumerate = false, std::size_t max_enumerate = 4096);

RankVarietyReport rank_variety_membership(const AlgModule& m, const std::vector<Vector>& lambdas);

}  // namespace hopfkit
