#include "hsp/bruteforce.hpp"

#include <unordered_map>

#include "hsp/errors.hpp"

namespace hsp {

CollisionPattern collision_pattern(std::span<const Example> examples) {
  CollisionPattern pattern;
  std::unordered_map<Label, std::size_t> classes;
  for (const auto& e : examples) {
    const auto [it, inserted] = classes.try_emplace(e.label, pattern.class_count);
    if (inserted) ++pattern.class_count;
    pattern.class_of.push_back(it->second);
  }
  return pattern;
}

namespace {

struct PairwiseFacts {
  std::vector<GroupElement> quotients;  // x_i^{-1} x_j for i < j
  std::vector<char> same_class;
};

PairwiseFacts pairwise(const Group& g, std::span<const Example> examples) {
  const auto pattern = collision_pattern(examples);
  PairwiseFacts facts;
  for (std::size_t i = 0; i < examples.size(); ++i) {
    for (std::size_t j = i + 1; j < examples.size(); ++j) {
      facts.quotients.push_back(g.quotient(examples[i].point, examples[j].point));
      facts.same_class.push_back(pattern.class_of[i] == pattern.class_of[j]);
    }
  }
  return facts;
}

bool satisfies(const PairwiseFacts& facts, const Subgroup& h) {
  for (std::size_t q = 0; q < facts.quotients.size(); ++q) {
    if (h.contains(facts.quotients[q]) != static_cast<bool>(facts.same_class[q])) return false;
  }
  return true;
}

}  // namespace

bool is_consistent(std::span<const Example> examples, const Subgroup& candidate) {
  return satisfies(pairwise(candidate.group(), examples), candidate);
}

std::vector<Subgroup> consistent_subgroups(std::span<const Example> examples, std::span<const Subgroup> candidates) {
  if (candidates.empty()) throw DomainError("candidate list must be nonempty");
  const auto facts = pairwise(candidates.front().group(), examples);
  std::vector<Subgroup> out;
  for (const auto& h : candidates) {
    if (satisfies(facts, h)) out.push_back(h);
  }
  return out;
}

std::uint64_t min_samples_exhaustive(const HspInstance& inst, RngStream& rng, double target_success,
                                     std::uint64_t trials, std::uint64_t max_samples) {
  if (inst.group().order() > 256) throw CapacityError("exhaustive probe limited to groups of order <= 256");
  if (trials == 0) throw DomainError("trials must be positive");
  const auto candidates = inst.family().enumerate();
  const std::uint64_t base_seed = rng.next_u64();
  for (std::uint64_t t = 1; t <= max_samples; ++t) {
    std::uint64_t successes = 0;
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
      auto stream = RngStream::derive(base_seed, "min-samples", (t << 32) | trial);
      MeteredSampler sampler(inst, stream);
      const auto examples = sampler.draw_many(t);
      const auto consistent = consistent_subgroups(examples, candidates);
      auto pick = RngStream::derive(base_seed, "min-samples-pick", (t << 32) | trial);
      if (!consistent.empty() && consistent[pick.uniform_below(consistent.size())] == inst.hidden()) ++successes;
    }
    if (static_cast<double>(successes) >= target_success * static_cast<double>(trials)) return t;
  }
  throw CapacityError("no sample count up to the limit reaches the target success rate");
}

}  // namespace hsp
