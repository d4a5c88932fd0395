#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hsp/bigint.hpp"
#include "hsp/family.hpp"
#include "hsp/oracle.hpp"
#include "hsp/rng.hpp"
#include "hsp/subgroup.hpp"

namespace hsp {

/// Parameters of the collision learner.
///
/// Each iteration draws a probe set P of `probe_size` examples, then
/// `rounds_per_iteration` query sets Q_i of `query_size` examples each. The
/// sizes satisfy probe_size * query_size >= 9 * max |G|/|H|, which makes a
/// fresh Q_i collide with P with probability above 3/4.
struct LearnerPlan {
  std::uint64_t probe_size = 1;            // A
  std::uint64_t query_size = 1;            // B
  std::uint64_t rounds_per_iteration = 9;  // 9 * sr
  std::uint64_t iterations = 1;            // ceil(ln(1/delta) / ln(6/5))
  double delta = 1.0 / 3.0;

  std::uint64_t samples_per_iteration() const { return probe_size + rounds_per_iteration * query_size; }
  std::uint64_t total_samples() const { return samples_per_iteration() * iterations; }
};

/// ceil(ln(1/delta) / ln(6/5)).
std::uint64_t iteration_count(double delta);

/// Requires max_index >= 1, sr >= 1 and 0 < delta < 1/2 (DomainError
/// otherwise). If max_index > sr: A = ceil(9 sqrt(max_index * sr)),
/// B = ceil(sqrt(max_index / sr)); else A = 9 * max_index, B = 1. A and B are
/// computed with exact integer square roots.
LearnerPlan make_plan(const BigInt& max_index, unsigned sr, double delta);

/// Plan for a family; sr is clamped to at least 1 so families whose largest
/// member is trivial still get a nonzero number of rounds.
LearnerPlan make_plan(const Family& family, double delta);

struct CollisionPair {
  GroupElement a;         // from P
  GroupElement b;         // from Q
  GroupElement quotient;  // a^{-1} b
};

/// All (a, b) in P x Q with equal labels, via a label index over P.
std::vector<CollisionPair> find_collisions(const Group& g, std::span<const Example> probe,
                                           std::span<const Example> query);

struct IterationOutcome {
  /// a^{-1} b for one uniformly chosen collision pair per colliding round.
  std::vector<GroupElement> emitted;
  std::uint64_t colliding_rounds = 0;
};

/// One pass of steps 2-3: consumes exactly A + rounds * B fresh examples.
IterationOutcome run_iteration(MeteredSampler& sampler, const LearnerPlan& plan, RngStream& rng);

struct LearnOptions {
  /// Stop once <W> reaches the largest member order in the family. Changes
  /// the sample count, so acceptance runs leave it off.
  bool early_stop = false;
};

struct LearnResult {
  Subgroup subgroup;
  std::vector<GroupElement> witnesses;  // W
  std::uint64_t samples = 0;
  std::uint64_t iterations_run = 0;
};

/// Runs the plan's iterations, accumulating W, and returns <W>. <W> is
/// always a subgroup of the hidden H.
LearnResult learn(MeteredSampler& sampler, const LearnerPlan& plan, const Group& g, RngStream& rng,
                  LearnOptions options = {});

}  // namespace hsp
