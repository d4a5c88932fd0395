#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hsp/bigint.hpp"
#include "hsp/group.hpp"
#include "hsp/subgroup.hpp"

namespace hsp {

/// One factor Z_p^n of an rAHSP instance with hidden rank k.
struct RankedComponent {
  std::uint32_t prime = 2;
  unsigned n = 1;
  unsigned k = 0;

  friend bool operator==(const RankedComponent&, const RankedComponent&) = default;
};

/// Parameters of a restricted abelian HSP: G = prod Z_{p_i}^{n_i}, H a
/// product of rank-k_i subgroups. GSP(p, n, k) is the one-component case.
using RahspParams = std::vector<RankedComponent>;

RahspParams gsp_params(std::uint32_t p, unsigned n, unsigned k);

/// Throws DomainError unless primes are distinct primes and 1 <= k_i < n_i.
void validate_rahsp(const RahspParams& params);

Group rahsp_group(const RahspParams& params);

enum class FamilyKind { RahspRanks, ExplicitList };

/// The candidate family of hidden subgroups known to the learner.
///
/// RahspRanks describes every product of rank-k_i subgroups without listing
/// them; ExplicitList is a deduplicated, nonempty list of subgroups of one group.
class Family {
 public:
  static Family rahsp(const RahspParams& params);
  static Family explicit_list(std::vector<Subgroup> members);

  FamilyKind kind() const { return kind_; }
  const Group& group() const { return group_; }

  /// sr: the largest rank among members.
  unsigned subgroup_rank() const { return subgroup_rank_; }
  const BigInt& max_index() const { return max_index_; }
  const BigInt& min_index() const { return min_index_; }
  /// Number of members.
  const BigInt& size() const { return size_; }

  /// Distinct values of |G|/|H| over the members.
  std::span<const BigInt> indices() const { return indices_; }

  std::span<const unsigned> ranks() const { return ranks_; }
  std::span<const Subgroup> members() const { return members_; }

  bool contains(const Subgroup& h) const;

  /// Every member; CapacityError when the family exceeds kEnumerationCap.
  std::vector<Subgroup> enumerate() const;

 private:
  explicit Family(Group g) : group_(std::move(g)) {}

  FamilyKind kind_ = FamilyKind::ExplicitList;
  Group group_;
  unsigned subgroup_rank_ = 0;
  BigInt max_index_, min_index_, size_;
  std::vector<BigInt> indices_;
  std::vector<unsigned> ranks_;
  std::vector<Subgroup> members_;
};

}  // namespace hsp
