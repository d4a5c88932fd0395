#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "hsp/bigint.hpp"
#include "hsp/rng.hpp"

namespace hsp {

/// Z_p^n factor of a structured abelian group.
struct PrimeComponent {
  std::uint32_t prime = 2;
  unsigned exponent = 1;

  friend bool operator==(const PrimeComponent&, const PrimeComponent&) = default;
};

/// An element of some Group.
///
/// Abelian groups store the residue vectors of all components back to back in
/// component order; table groups store a single table index. The owning group
/// is not carried; every Group operation checks the shape.
class GroupElement {
 public:
  GroupElement() = default;
  explicit GroupElement(std::vector<std::uint32_t> coords) : coords_(std::move(coords)) {}

  std::span<const std::uint32_t> coords() const { return coords_; }
  std::uint32_t operator[](std::size_t i) const { return coords_[i]; }
  std::size_t size() const { return coords_.size(); }

  /// Table index; only meaningful for table groups.
  std::uint32_t index() const { return coords_.front(); }

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;

 private:
  std::vector<std::uint32_t> coords_;
};

enum class GroupKind { StructuredAbelian, Table };

/// Largest table group accepted on load.
inline constexpr std::size_t kMaxTableOrder = 4096;

/// A finite group: either a product of elementary abelian p-groups
/// Z_{p_1}^{n_1} x ... x Z_{p_m}^{n_m} with distinct primes, or an explicit
/// multiplication table over indices [0, N).
///
/// Immutable value type; copies share table storage.
class Group {
 public:
  /// Throws DomainError unless every prime is prime (and < 2^31), primes are
  /// pairwise distinct, the list is nonempty and every exponent is >= 1.
  static Group abelian(std::vector<PrimeComponent> components);

  /// rows[i][j] = index of i*j. Validates the group axioms (associativity is
  /// checked exhaustively up to 256 elements, by Light's test beyond that).
  static Group table(const std::vector<std::vector<std::uint32_t>>& rows);

  GroupKind kind() const { return kind_; }
  bool is_abelian_product() const { return kind_ == GroupKind::StructuredAbelian; }

  std::span<const PrimeComponent> components() const { return components_; }
  /// Offset of component i inside an element's coordinate vector.
  std::size_t component_offset(std::size_t i) const { return offsets_[i]; }
  /// Number of coordinates an element of this group carries.
  std::size_t element_width() const;
  std::size_t table_order() const;

  GroupElement identity() const;
  GroupElement mul(const GroupElement& a, const GroupElement& b) const;
  GroupElement inv(const GroupElement& a) const;
  /// a^{-1} b
  GroupElement quotient(const GroupElement& a, const GroupElement& b) const;

  BigInt order() const;
  GroupElement uniform_element(RngStream& rng) const;

  /// Throws StructuralError if `a` is not an element of this group.
  void check(const GroupElement& a) const;
  bool is_valid(const GroupElement& a) const;

  /// Mixed-radix numbering of elements, used for exhaustive enumeration.
  /// Throws CapacityError when the order exceeds 2^32.
  std::uint64_t index_of(const GroupElement& a) const;
  GroupElement element_at(std::uint64_t index) const;
  /// All elements in index order. Throws CapacityError above `cap` elements.
  std::vector<GroupElement> elements(std::uint64_t cap = 1u << 20) const;

  /// Raw table access for table groups.
  std::uint32_t table_mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t table_inv(std::uint32_t a) const;

  friend bool operator==(const Group& a, const Group& b);

 private:
  struct Table {
    std::size_t order = 0;
    std::vector<std::uint32_t> mul;  // row-major order x order
    std::vector<std::uint32_t> inv;
    std::uint32_t identity = 0;
  };

  Group() = default;
  std::uint64_t small_order() const;

  GroupKind kind_ = GroupKind::StructuredAbelian;
  std::vector<PrimeComponent> components_;
  std::vector<std::size_t> offsets_;
  std::shared_ptr<const Table> table_;
};

/// The same abelian group as a table group; element i of the result is
/// g.element_at(i). Throws CapacityError above kMaxTableOrder elements.
Group materialize_table(const Group& g);

bool is_prime(std::uint64_t n);

}  // namespace hsp
