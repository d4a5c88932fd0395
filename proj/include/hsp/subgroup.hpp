#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hsp/bigint.hpp"
#include "hsp/fp_linalg.hpp"
#include "hsp/group.hpp"
#include "hsp/rng.hpp"

namespace hsp {

/// A subgroup H of a Group, in canonical form.
///
/// For a structured abelian group H is stored as a product H_1 x ... x H_m,
/// one F_p-subspace per prime component, each given by its reduced row
/// echelon basis (k_i rows of length n_i). Canonical form makes equality a
/// plain comparison. For a table group H is its sorted element-index set.
class Subgroup {
 public:
  static Subgroup trivial(const Group& g);
  static Subgroup whole(const Group& g);

  /// Smallest subgroup containing `generators`; empty input gives the trivial
  /// subgroup. Throws StructuralError on elements of another group.
  static Subgroup span(const Group& g, std::span<const GroupElement> generators);

  /// Abelian only. bases[i] holds spanning rows of H_i (any form).
  static Subgroup from_component_bases(const Group& g, std::vector<std::vector<fp::Row>> bases);

  /// Table only. Throws StructuralError unless `elements` is closed under the
  /// operation and contains the identity.
  static Subgroup from_elements(const Group& g, std::vector<std::uint32_t> elements);

  const Group& group() const { return group_; }
  const BigInt& order() const { return order_; }

  bool contains(const GroupElement& x) const;

  /// Minimal generating set size. Abelian: max_i k_i. Table: breadth-first
  /// search over subgroups generated by 1, 2, ... elements; CapacityError
  /// above 256 elements. The trivial subgroup has rank 0.
  unsigned rank() const;

  /// k_i per component (abelian only).
  std::span<const unsigned> component_ranks() const { return component_ranks_; }
  const std::vector<fp::Row>& basis(std::size_t component) const { return bases_[component]; }
  /// Sorted element indices (table only).
  std::span<const std::uint32_t> elements() const { return elements_; }

  /// Canonical representative of the left coset xH: x reduced against the
  /// echelon basis (abelian), or the least index in xH (table).
  GroupElement coset_representative(const GroupElement& x) const;

  /// A generating set: basis vectors embedded in G (abelian) or all elements (table).
  std::vector<GroupElement> generators() const;

  bool is_subgroup_of(const Subgroup& other) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b);

 private:
  explicit Subgroup(Group g) : group_(std::move(g)) {}
  void finish_abelian();
  static Subgroup from_closed_set(const Group& g, const std::vector<char>& member);

  Group group_;
  BigInt order_ = 1;
  // abelian
  std::vector<std::vector<fp::Row>> bases_;
  std::vector<unsigned> component_ranks_;
  // table
  std::vector<std::uint32_t> elements_;
  std::vector<char> member_;
};

/// |G| / |H|.
BigInt subgroup_index(const Group& g, const Subgroup& h);

/// Number of rank-k subgroups of Z_p^n (Gaussian binomial coefficient).
/// Throws DomainError when k > n.
BigInt subgroup_count(std::uint32_t p, unsigned n, unsigned k);

/// RREF basis of a uniformly random k-dimensional subspace of F_p^n, by
/// rejection-sampling n x k matrices until one has full rank.
std::vector<fp::Row> random_subspace_basis(std::uint32_t p, unsigned n, unsigned k, RngStream& rng);

/// Uniformly random rank-k subgroup of Z_p^n; requires 1 <= k < n.
Subgroup uniform_random_subgroup(std::uint32_t p, unsigned n, unsigned k, RngStream& rng);

/// Upper limit on how many subgroups an enumeration may produce.
inline constexpr std::uint64_t kEnumerationCap = 1'000'000;

/// Every k-dimensional subspace of F_p^n as an RREF basis, by walking pivot
/// column choices and free entries. Throws CapacityError above kEnumerationCap.
std::vector<std::vector<fp::Row>> enumerate_subspace_bases(std::uint32_t p, unsigned n, unsigned k);

/// Every rank-k subgroup of Z_p^n, each exactly once.
std::vector<Subgroup> enumerate_subgroups(std::uint32_t p, unsigned n, unsigned k);

/// All subgroups of a table group, optionally only those of a given order.
/// Built by closing the trivial subgroup under adjoining single elements.
std::vector<Subgroup> enumerate_table_subgroups(const Group& g, const BigInt* order_filter = nullptr);

/// Direct product G1 x G2. Abelian groups with disjoint primes give an
/// abelian group; otherwise both are materialized and the result is a table
/// group with element (a, b) at index a * |G2| + b.
Group direct_product(const Group& a, const Group& b);

/// H1 x H2 inside direct_product(H1.group(), H2.group()).
Subgroup direct_product(const Subgroup& a, const Subgroup& b);

}  // namespace hsp
