#pragma once

// Scalar 2-cocycles on a finite group and the sigma/tau data of a crossed coproduct.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hopfkit/group.hpp"
#include "hopfkit/matrix.hpp"

namespace hopfkit {

/// A function alpha: L x L -> k^x stored as a dense |L| x |L| table.
class CocycleSlice {
 public:
  CocycleSlice(GroupPtr group, FieldSpec field, std::vector<Scalar> values);

  static CocycleSlice trivial(GroupPtr group, FieldSpec field);

  const GroupPtr& group() const { return group_; }
  const FieldSpec& field() const { return field_; }
  const Scalar& operator()(std::size_t l, std::size_t m) const { return values_[l * group_->order() + m]; }
  const std::vector<Scalar>& values() const { return values_; }
  bool is_trivial() const;

  friend bool operator==(const CocycleSlice& a, const CocycleSlice& b) {
    return same_group(a.group_, b.group_) && a.values_ == b.values_;
  }

 private:
  GroupPtr group_;
  FieldSpec field_;
  std::vector<Scalar> values_;
};

/// Nonzero values, normalization, and alpha(l,m) alpha(lm,n) = alpha(m,n) alpha(l,mn)
/// on every triple; also the consequence alpha(l,l^-1) = alpha(l^-1,l).
Report check_cocycle(const CocycleSlice& alpha);

/// (y alpha)(l, m) = alpha(y^-1 . l, y^-1 . m).
CocycleSlice conjugate_cocycle(const CocycleSlice& alpha, const GroupAction& action, std::size_t y);
CocycleSlice cocycle_product(const CocycleSlice& a, const CocycleSlice& b);
CocycleSlice cocycle_inverse(const CocycleSlice& a);
bool is_g_invariant(const CocycleSlice& alpha, const GroupAction& action);

/// beta(l, m) = mu(l) mu(m) mu(lm)^-1.
CocycleSlice coboundary_of(GroupPtr group, const Vector& mu);

struct CoboundaryVerdict {
  bool coboundary = false;
  /// mu with beta = d mu, when one exists with values in the base field.
  std::optional<Vector> witness;
  /// True when beta only becomes a coboundary after adjoining roots of unity.
  bool needs_extension = false;
  std::string reason;
};

/// Decides whether beta is a coboundary over the algebraic closure of the
/// field. Values must be roots of unity; throws Unsupported otherwise.
CoboundaryVerdict is_coboundary(const CocycleSlice& beta);
CoboundaryVerdict cohomologous(const CocycleSlice& alpha, const CocycleSlice& beta);

/// alpha(l, m) = rho(l) rho(m) rho(lm)^-1, which must be scalar; rho is indexed by L.
CocycleSlice cocycle_from_projective_rep(GroupPtr group, const std::vector<Matrix>& rho);

/// Pulls alpha on a coordinate factor back to L along the coordinate projection.
/// `coords` lists the positions of the factor's coordinates inside L.
CocycleSlice extend_cocycle_trivially(const CocycleSlice& alpha, GroupPtr full,
                                      const std::vector<std::size_t>& coords);

/// The family {sigma_x}_{x in G}.
struct SigmaCocycle {
  GroupAction action;
  std::vector<CocycleSlice> slices;  // indexed by x in G

  static SigmaCocycle trivial(const GroupAction& action, FieldSpec field);
  FieldSpec field() const { return slices.front().field(); }
  const Scalar& operator()(std::size_t x, std::size_t l, std::size_t m) const { return slices[x](l, m); }
};

/// tau_{x,y}(l) stored densely, index (x * |G| + y) * |L| + l.
struct TauCocycle {
  GroupAction action;
  FieldSpec field;
  std::vector<Scalar> values;

  static TauCocycle trivial(const GroupAction& action, FieldSpec field);
  const Scalar& operator()(std::size_t x, std::size_t y, std::size_t l) const {
    const std::size_t g = action.acting()->order();
    return values[(x * g + y) * action.target()->order() + l];
  }
  Scalar& at(std::size_t x, std::size_t y, std::size_t l) {
    const std::size_t g = action.acting()->order();
    return values[(x * g + y) * action.target()->order() + l];
  }
  bool is_trivial() const;
};

Report check_sigma(const SigmaCocycle& sigma);
/// Normalization and tau_{xy,z}(l) tau_{x,y}(l) = tau_{x,yz}(l) tau_{y,z}(x^-1 . l).
Report check_tau(const TauCocycle& tau);

/// The compatibility condition linking sigma and tau, followed by the
/// identities it implies (sigma_1 = 1, tau(1) = 1, and the two derived
/// identities obtained from y = x^-1 and m = l^-1). Also runs check_sigma and
/// check_tau. The witness names the first violating tuple.
Report validate_compatibility(const SigmaCocycle& sigma, const TauCocycle& tau);

/// beta_{x,y}(l, m) = tau_{x,y}(l) tau_{x,y}(m) tau_{x,y}(lm)^-1.
CocycleSlice tau_coboundary(const TauCocycle& tau, std::size_t x, std::size_t y);

/// Solves A x = b over Z/modulus; A is rows x cols, row-major.
std::optional<std::vector<std::int64_t>> solve_mod(const std::vector<std::int64_t>& a, std::size_t rows,
                                                   std::size_t cols, const std::vector<std::int64_t>& b,
                                                   std::int64_t modulus);

}  // namespace hopfkit
