#pragma once

// Finite groups given by Cayley tables, and actions of one group on another.

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hopfkit/error.hpp"

namespace hopfkit {

class FiniteGroup {
 public:
  /// Validates the table (closure, associativity, identity, inverses).
  FiniteGroup(std::vector<std::string> labels, std::vector<std::vector<std::size_t>> table);

  std::size_t order() const { return labels_.size(); }
  std::size_t identity() const { return identity_; }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a * order() + b]; }
  std::size_t inv(std::size_t a) const { return inverse_[a]; }
  std::size_t power(std::size_t a, std::int64_t k) const;
  std::size_t element_order(std::size_t a) const;
  std::size_t exponent() const;
  bool is_abelian() const;

  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t index_of(const std::string& label) const;
  std::vector<std::vector<std::size_t>> table() const;

  /// A generating set (the unit vectors for a product of cyclic groups).
  const std::vector<std::size_t>& generators() const { return generators_; }

  /// Non-empty when built by make_product_of_cyclics; element index is
  /// lexicographic in the exponent vector, first factor most significant.
  const std::vector<std::uint32_t>& factor_orders() const { return factor_orders_; }
  std::vector<std::uint32_t> coordinates(std::size_t element) const;
  std::size_t from_coordinates(const std::vector<std::uint32_t>& coords) const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.labels_ == b.labels_ && a.table_ == b.table_;
  }

 private:
  friend FiniteGroup make_product_of_cyclics(const std::vector<std::uint32_t>&, const std::vector<std::string>&);

  std::vector<std::string> labels_;
  std::vector<std::size_t> table_;
  std::vector<std::size_t> inverse_;
  std::size_t identity_ = 0;
  std::vector<std::size_t> generators_;
  std::vector<std::uint32_t> factor_orders_;
  std::map<std::string, std::size_t> label_index_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

bool same_group(const GroupPtr& a, const GroupPtr& b);

/// Z_{n1} x ... x Z_{nk}. Labels use the generator names ("a", "b", ... by
/// default): identity "1", otherwise e.g. "ab", "c^2d".
FiniteGroup make_product_of_cyclics(const std::vector<std::uint32_t>& orders,
                                    const std::vector<std::string>& names = {});

/// Symmetric group on n <= 5 points, elements as permutations in lexicographic order.
FiniteGroup make_symmetric_group(std::size_t n);

/// Dihedral group of order 2n: r^i s^j with s r s = r^{-1}.
FiniteGroup make_dihedral_group(std::size_t n);

/// A subgroup together with the index of each of its elements in the parent.
struct Subgroup {
  GroupPtr group;
  std::vector<std::size_t> embedding;
};

Subgroup subgroup_generated(const FiniteGroup& parent, const std::vector<std::size_t>& elements);

/// The factors of a product of cyclics selected by coordinate position.
Subgroup coordinate_subgroup(const FiniteGroup& parent, const std::vector<std::size_t>& coords);

/// A Sylow p-subgroup, built by repeatedly extending inside the normalizer.
Subgroup sylow_subgroup(const FiniteGroup& parent, std::uint32_t p);

std::vector<std::vector<std::size_t>> conjugacy_classes(const FiniteGroup& g);

/// Action of G on L by automorphisms: perms[g][l] = g . l.
class GroupAction {
 public:
  /// Validates automorphisms and the homomorphism G -> Aut(L).
  GroupAction(GroupPtr acting, GroupPtr target, std::vector<std::vector<std::size_t>> perms);

  static GroupAction trivial(GroupPtr acting, GroupPtr target);
  /// Extends images of G's generators to all of G.
  static GroupAction from_generators(GroupPtr acting, GroupPtr target,
                                     const std::map<std::size_t, std::vector<std::size_t>>& generator_perms);

  const GroupPtr& acting() const { return acting_; }
  const GroupPtr& target() const { return target_; }
  std::size_t act(std::size_t g, std::size_t l) const { return perms_[g][l]; }
  const std::vector<std::size_t>& perm(std::size_t g) const { return perms_.at(g); }
  const std::vector<std::vector<std::size_t>>& perms() const { return perms_; }

 private:
  GroupPtr acting_;
  GroupPtr target_;
  std::vector<std::vector<std::size_t>> perms_;
};

/// Automorphism of a product of cyclics permuting factor coordinates.
std::vector<std::size_t> coordinate_permutation(const FiniteGroup& l, const std::vector<std::size_t>& perm);

}  // namespace hopfkit
