#include "hsp/learner.hpp"

#include <cmath>
#include <limits>
#include <unordered_map>

#include "hsp/errors.hpp"

namespace hsp {

namespace {

std::uint64_t to_u64(const BigInt& v, const char* what) {
  if (v > std::numeric_limits<std::uint32_t>::max()) {
    throw CapacityError(std::string(what) + " = " + to_string(v) + " is too large to sample");
  }
  return v.convert_to<std::uint64_t>();
}

using LabelIndex = std::unordered_map<Label, std::vector<std::size_t>>;

LabelIndex index_by_label(std::span<const Example> examples) {
  LabelIndex index;
  for (std::size_t i = 0; i < examples.size(); ++i) index[examples[i].label].push_back(i);
  return index;
}

}  // namespace

std::uint64_t iteration_count(double delta) {
  const double raw = std::log(1.0 / delta) / std::log(6.0 / 5.0);
  return static_cast<std::uint64_t>(std::ceil(raw));
}

LearnerPlan make_plan(const BigInt& max_index, unsigned sr, double delta) {
  if (max_index < 1) throw DomainError("max index must be >= 1");
  if (sr < 1) throw DomainError("subgroup rank sr must be >= 1");
  if (!(delta > 0.0 && delta < 0.5)) throw DomainError("delta must lie in (0, 1/2)");
  LearnerPlan plan;
  plan.delta = delta;
  plan.rounds_per_iteration = 9ull * sr;
  plan.iterations = std::max<std::uint64_t>(1, iteration_count(delta));
  if (max_index > sr) {
    // ceil(9 sqrt(m s)) = ceil(sqrt(81 m s)); ceil(sqrt(m / s)) = least b with b^2 s >= m.
    plan.probe_size = to_u64(ceil_sqrt(81 * max_index * sr), "A");
    BigInt b = ceil_sqrt(max_index / sr);
    while (b > 1 && (b - 1) * (b - 1) * sr >= max_index) --b;
    while (b * b * sr < max_index) ++b;
    plan.query_size = to_u64(b, "B");
  } else {
    plan.probe_size = to_u64(9 * max_index, "A");
    plan.query_size = 1;
  }
  return plan;
}

LearnerPlan make_plan(const Family& family, double delta) {
  return make_plan(family.max_index(), std::max(1u, family.subgroup_rank()), delta);
}

std::vector<CollisionPair> find_collisions(const Group& g, std::span<const Example> probe,
                                           std::span<const Example> query) {
  const auto index = index_by_label(probe);
  std::vector<CollisionPair> pairs;
  for (const auto& q : query) {
    const auto it = index.find(q.label);
    if (it == index.end()) continue;
    for (const auto i : it->second) {
      pairs.push_back({probe[i].point, q.point, g.quotient(probe[i].point, q.point)});
    }
  }
  return pairs;
}

IterationOutcome run_iteration(MeteredSampler& sampler, const LearnerPlan& plan, RngStream& rng) {
  const Group& g = sampler.instance().group();
  const auto probe = sampler.draw_many(plan.probe_size);
  const auto index = index_by_label(probe);

  IterationOutcome out;
  std::vector<std::size_t> hits(plan.query_size);
  for (std::uint64_t round = 0; round < plan.rounds_per_iteration; ++round) {
    const auto query = sampler.draw_many(plan.query_size);
    // Pick a collision pair uniformly: weight each query element by the
    // number of probe elements sharing its label.
    std::uint64_t total = 0;
    for (std::size_t j = 0; j < query.size(); ++j) {
      const auto it = index.find(query[j].label);
      hits[j] = it == index.end() ? 0 : it->second.size();
      total += hits[j];
    }
    if (total == 0) continue;
    ++out.colliding_rounds;
    std::uint64_t pick = rng.uniform_below(total);
    std::size_t j = 0;
    while (pick >= hits[j]) pick -= hits[j++];
    const auto& bucket = index.at(query[j].label);
    const auto& a = probe[bucket[pick]].point;
    out.emitted.push_back(g.quotient(a, query[j].point));
  }
  return out;
}

LearnResult learn(MeteredSampler& sampler, const LearnerPlan& plan, const Group& g, RngStream& rng,
                  LearnOptions options) {
  const auto& family = sampler.instance().family();
  if (!(family.group() == g)) throw StructuralError("plan group differs from the sampler's instance");
  const std::uint64_t start = sampler.draws();
  const BigInt target_order = g.order() / family.min_index();

  LearnResult result{Subgroup::trivial(g), {}, 0, 0};
  for (std::uint64_t it = 0; it < plan.iterations; ++it) {
    auto outcome = run_iteration(sampler, plan, rng);
    result.witnesses.insert(result.witnesses.end(), outcome.emitted.begin(), outcome.emitted.end());
    ++result.iterations_run;
    if (options.early_stop) {
      result.subgroup = Subgroup::span(g, result.witnesses);
      if (result.subgroup.order() == target_order) break;
    }
  }
  result.subgroup = Subgroup::span(g, result.witnesses);
  result.samples = sampler.draws() - start;
  return result;
}

}  // namespace hsp
