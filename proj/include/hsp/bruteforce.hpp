#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hsp/oracle.hpp"
#include "hsp/rng.hpp"
#include "hsp/subgroup.hpp"

namespace hsp {

/// Partition of observed points by label equality. class_of[i] is dense from
/// 0 in order of first appearance.
struct CollisionPattern {
  std::vector<std::size_t> class_of;
  std::size_t class_count = 0;
};

CollisionPattern collision_pattern(std::span<const Example> examples);

/// True iff for every pair of examples: equal labels <=> x_i^{-1} x_j in H.
bool is_consistent(std::span<const Example> examples, const Subgroup& candidate);

/// Candidates consistent with every pair of examples, in input order.
/// An empty result means the examples cannot come from any candidate.
/// Throws DomainError on an empty candidate list.
std::vector<Subgroup> consistent_subgroups(std::span<const Example> examples, std::span<const Subgroup> candidates);

/// Smallest T >= 1 such that a learner that draws T uniform examples and
/// answers with a uniformly random consistent candidate recovers the hidden
/// subgroup in at least `target_success` of `trials` runs. Runs for every T
/// share one base seed drawn from `rng`, so the result is monotone in the
/// target. Requires |G| <= 256 and an enumerable family; CapacityError if no
/// T up to `max_samples` qualifies.
std::uint64_t min_samples_exhaustive(const HspInstance& inst, RngStream& rng, double target_success,
                                     std::uint64_t trials, std::uint64_t max_samples = 4096);

}  // namespace hsp
