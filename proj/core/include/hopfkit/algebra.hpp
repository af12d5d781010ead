#pragma once

// Finite-dimensional algebras by structure constants, optional Hopf data,
// algebra maps, and exhaustive axiom checks.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hopfkit/cocycle.hpp"
#include "hopfkit/matrix.hpp"
#include "hopfkit/sparse.hpp"

namespace hopfkit {

class BasisAlgebra;
using AlgebraPtr = std::shared_ptr<const BasisAlgebra>;

/// Delta(e_i) as a sparse vector over the index j * dim + k of e_j (x) e_k;
/// antipode[i] = S(e_i).
struct HopfData {
  std::vector<SparseVec> comul;
  Vector counit;
  std::vector<SparseVec> antipode;
};

/// Basis indexed by group elements, product l m = alpha(l, m) lm.
struct GroupAlgebraInfo {
  GroupPtr group;
  CocycleSlice alpha;
};

/// Basis {p_x}.
struct DualGroupInfo {
  GroupPtr group;
};

/// T_n^{(x) m}. The basis is the left-major tensor basis of the factors, and
/// inside one factor g^i x^j sits at index i * n + j.
struct QeaInfo {
  std::uint32_t n = 0;
  std::uint32_t m = 0;
  Scalar q;
};

/// k[t]/(t^n), basis t^j.
struct TruncatedPolyInfo {
  std::uint32_t n = 0;
};

/// A smash or crossed coproduct. The basis element b # p_x sits at index
/// b * |G| + x, where b runs over the basis of the base algebra.
struct CoproductInfo {
  enum class Kind { Smash, Crossed };
  Kind kind = Kind::Smash;
  GroupPtr g;
  /// The algebra A (smash) or kL (crossed).
  AlgebraPtr base;
  /// The block algebras K p_x: A, or k^{sigma_x} L.
  std::vector<AlgebraPtr> blocks;
  /// Smash: x acting on the basis of A.
  std::vector<Matrix> action;
  /// Crossed: the cocycle data.
  std::optional<SigmaCocycle> sigma;
  std::optional<TauCocycle> tau;
};

using StructureInfo =
    std::variant<std::monostate, GroupAlgebraInfo, DualGroupInfo, QeaInfo, TruncatedPolyInfo, CoproductInfo>;

class BasisAlgebra {
 public:
  /// products[i * dim + j] = e_i e_j. `generators` generate the algebra
  /// (together with the unit); empty means "every basis element".
  BasisAlgebra(FieldSpec field, std::vector<std::string> labels, std::vector<SparseVec> products, SparseVec unit,
               std::vector<SparseVec> generators = {});

  const FieldSpec& field() const { return field_; }
  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  std::size_t index_of(const std::string& label) const;
  void set_labels(std::vector<std::string> labels);

  const SparseVec& product(std::size_t i, std::size_t j) const { return products_[i * dim() + j]; }
  SparseVec multiply(const SparseVec& a, const SparseVec& b) const;
  const SparseVec& unit() const { return unit_; }
  const std::vector<SparseVec>& generators() const { return generators_; }

  /// Matrix of v -> a v (left) or v -> v a (right) on the basis.
  Matrix left_multiplication(const SparseVec& a) const;
  Matrix right_multiplication(const SparseVec& a) const;

  const std::optional<HopfData>& hopf() const { return hopf_; }
  void set_hopf(HopfData h);

  const StructureInfo& info() const { return info_; }
  void set_info(StructureInfo info) { info_ = std::move(info); }

  /// JSON text that rebuilds this algebra through the constructors (may be empty).
  /// Metadata only, so it can be attached to an already shared algebra.
  const std::string& recipe() const { return recipe_; }
  void set_recipe(std::string r) const { recipe_ = std::move(r); }

  /// Human-readable name such as "T_2 (x) T_2".
  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  std::string element_to_string(const SparseVec& v) const;

 private:
  FieldSpec field_;
  std::vector<std::string> labels_;
  std::vector<SparseVec> products_;
  SparseVec unit_;
  std::vector<SparseVec> generators_;
  std::optional<HopfData> hopf_;
  StructureInfo info_;
  mutable std::string recipe_;
  std::string name_;
};

/// Sparse helpers.
SparseVec scaled(const SparseVec& v, const Scalar& s);
SparseVec sum(const SparseVec& a, const SparseVec& b);
SparseVec difference(const SparseVec& a, const SparseVec& b);
/// (a (x) b) with index i * right_dim + j.
SparseVec tensor(const SparseVec& a, const SparseVec& b, std::size_t right_dim);
/// Product in A (x) B where A has dimension da and B dimension db.
SparseVec tensor_multiply(const BasisAlgebra& a, const BasisAlgebra& b, const SparseVec& x, const SparseVec& y);
/// Applies a linear map (given on basis vectors) to a sparse vector.
SparseVec apply_basis_map(const std::vector<SparseVec>& images, const SparseVec& v);
SparseVec apply_matrix(const Matrix& m, const SparseVec& v);

/// Algebra-level checks; witnesses name basis elements.
Report check_associativity(const BasisAlgebra& a);
Report check_unit(const BasisAlgebra& a);
Report check_coassociativity(const BasisAlgebra& a);
Report check_counit(const BasisAlgebra& a);
/// Delta and epsilon are unital algebra maps.
Report check_bialgebra(const BasisAlgebra& a);
Report check_antipode(const BasisAlgebra& a);
/// Everything above; Hopf parts are skipped when the algebra has no Hopf data.
Report check_hopf_axioms(const BasisAlgebra& a);

/// A linear map source -> target given by a target.dim x source.dim matrix.
struct AlgebraMap {
  AlgebraPtr source;
  AlgebraPtr target;
  Matrix matrix;

  SparseVec image(std::size_t basis_index) const;
  SparseVec image(const SparseVec& v) const;
};

/// Multiplicative on all basis pairs; optionally unital and injective.
Report check_algebra_map(const AlgebraMap& f, bool unital = true, bool injective = true);

/// Is a (sigma x) an algebra automorphism of `a` commuting with Delta, epsilon, S?
Report check_hopf_automorphism(const BasisAlgebra& a, const Matrix& m);

}  // namespace hopfkit
