#include "doctest.h"
#include "hsp/acceptance.hpp"
#include "hsp/errors.hpp"
#include "hsp/learner.hpp"

using namespace hsp;

namespace {

GroupElement el(std::vector<std::uint32_t> v) { return GroupElement(std::move(v)); }

Example ex(std::uint32_t point, Label label) { return {GroupElement({point}), label}; }

}  // namespace

TEST_CASE("plan arithmetic") {
  const auto plan = make_plan(8, 1, 1.0 / 3.0);
  CHECK(plan.probe_size == 26);
  CHECK(plan.query_size == 3);
  CHECK(plan.rounds_per_iteration == 9);
  CHECK(plan.iterations == 7);
  CHECK(plan.total_samples() == 371);

  const auto small = make_plan(4, 4, 1.0 / 3.0);
  CHECK(small.probe_size == 36);
  CHECK(small.query_size == 1);
  CHECK(small.rounds_per_iteration == 36);

  CHECK(iteration_count(0.1) == 13);  // ln 10 / ln 1.2 = 12.63
  CHECK(iteration_count(0.01) == 26);
}

TEST_CASE("plan invariant A*B >= 9 * max_index") {
  for (std::uint64_t m = 1; m <= 3000; m += 7) {
    for (unsigned sr = 1; sr <= 12; ++sr) {
      const auto plan = make_plan(m, sr, 0.2);
      CHECK(BigInt(plan.probe_size) * plan.query_size >= 9 * BigInt(m));
      CHECK(plan.probe_size >= 1);
      CHECK(plan.query_size >= 1);
      if (m > sr) {
        // Exact ceilings: A-1 and B-1 would be too small.
        CHECK((plan.probe_size - 1) * (plan.probe_size - 1) < 81 * m * sr);
        CHECK(plan.probe_size * plan.probe_size >= 81 * m * sr);
        CHECK(plan.query_size * plan.query_size * sr >= m);
        CHECK((plan.query_size - 1) * (plan.query_size - 1) * sr < m);
      }
    }
  }
  // Large index stays exact.
  const auto big = make_plan(pow_big(2, 30), 1, 1.0 / 3.0);
  CHECK(big.probe_size == 294912);  // 9 * 2^15
  CHECK(big.query_size == 32768);
}

TEST_CASE("plan domain errors") {
  CHECK_THROWS_AS(make_plan(8, 1, 0.0), DomainError);
  CHECK_THROWS_AS(make_plan(8, 1, 0.5), DomainError);
  CHECK_THROWS_AS(make_plan(8, 1, -0.1), DomainError);
  CHECK_THROWS_AS(make_plan(0, 1, 0.25), DomainError);
  CHECK_THROWS_AS(make_plan(8, 0, 0.25), DomainError);
  CHECK_THROWS_AS(make_plan(pow_big(2, 80), 1, 0.25), CapacityError);
}

TEST_CASE("collision pairs") {
  const auto g = acceptance::symmetric3();
  const std::vector<Example> p{ex(0, 1), ex(1, 2), ex(2, 3)};
  const std::vector<Example> q{ex(3, 3), ex(4, 4)};
  const auto pairs = find_collisions(g, p, q);
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0].a == el({2}));
  CHECK(pairs[0].b == el({3}));
  CHECK(pairs[0].quotient == g.mul(g.inv(el({2})), el({3})));

  CHECK(find_collisions(g, p, std::vector<Example>{ex(5, 9)}).empty());

  std::vector<Example> same;
  for (std::uint32_t i = 0; i < 6; ++i) same.push_back(ex(i, 7));
  CHECK(find_collisions(g, same, same).size() == 36);
}

TEST_CASE("iteration on H = G emits one element per round") {
  const auto d4 = acceptance::dihedral8();
  const auto whole = Subgroup::whole(d4);
  const HspInstance inst(whole, Family::explicit_list({whole}), 1);
  const auto plan = make_plan(inst.family(), 1.0 / 3.0);
  CHECK(plan.rounds_per_iteration == 18);  // sr(D4) = 2
  MeteredSampler sampler(inst, RngStream(1));
  RngStream rng(2);
  const auto out = run_iteration(sampler, plan, rng);
  CHECK(out.emitted.size() == 18);
  CHECK(out.colliding_rounds == 18);
  CHECK(sampler.draws() == plan.samples_per_iteration());
}

TEST_CASE("iteration on trivial H only emits the identity") {
  const auto g = Group::abelian({{2, 4}});
  const auto trivial = Subgroup::trivial(g);
  const HspInstance inst(trivial, Family::explicit_list({trivial}), 3);
  const auto plan = make_plan(16, 1, 1.0 / 3.0);
  MeteredSampler sampler(inst, RngStream(4));
  RngStream rng(5);
  std::size_t emitted = 0;
  for (int i = 0; i < 50; ++i) {
    for (const auto& x : run_iteration(sampler, plan, rng).emitted) {
      CHECK(x == g.identity());
      ++emitted;
    }
  }
  CHECK(emitted > 0);
}

TEST_CASE("a fresh query set collides with the probe set with probability above 3/4") {
  const auto inst = random_instance(gsp_params(2, 4, 1), 17);
  const auto plan = make_plan(inst.family(), 1.0 / 3.0);
  MeteredSampler sampler(inst, RngStream(18));
  RngStream rng(19);
  std::uint64_t colliding = 0, rounds = 0;
  for (int i = 0; i < 10000; ++i) {
    colliding += run_iteration(sampler, plan, rng).colliding_rounds;
    rounds += plan.rounds_per_iteration;
  }
  CHECK(colliding / static_cast<double>(rounds) >= 0.75 - 0.03);
}

TEST_CASE("a single iteration recovers H with probability at least 1/6") {
  const auto inst = random_instance(gsp_params(2, 6, 2), 23);
  const auto plan = make_plan(inst.family(), 1.0 / 3.0);
  MeteredSampler sampler(inst, RngStream(24));
  RngStream rng(25);
  int recovered = 0;
  constexpr int kIterations = 10000;
  for (int i = 0; i < kIterations; ++i) {
    const auto out = run_iteration(sampler, plan, rng);
    recovered += Subgroup::span(inst.group(), out.emitted) == inst.hidden();
  }
  CHECK(recovered / static_cast<double>(kIterations) >= 1.0 / 6.0 - 0.03);
}

TEST_CASE("Simon n=2 with s=(1,1)") {
  const auto g = Group::abelian({{2, 2}});
  const auto hidden = Subgroup::span(g, std::vector{el({1, 1})});
  const auto plan = make_plan(Family::rahsp(gsp_params(2, 2, 1)), 1.0 / 3.0);
  int successes = 0;
  for (int t = 0; t < 500; ++t) {
    const HspInstance inst(hidden, Family::rahsp(gsp_params(2, 2, 1)), static_cast<std::uint64_t>(t));
    MeteredSampler sampler(inst, RngStream::derive(31, "simon", t));
    auto rng = RngStream::derive(31, "simon-select", t);
    const auto result = learn(sampler, plan, g, rng);
    CHECK(result.subgroup.is_subgroup_of(hidden));
    CHECK(result.samples == plan.total_samples());
    CHECK(sampler.draws() == plan.total_samples());
    successes += result.subgroup == hidden;
  }
  CHECK(successes / 500.0 >= 2.0 / 3.0);
}

TEST_CASE("output is always a subgroup of H") {
  for (const auto& params : {gsp_params(2, 5, 2), gsp_params(3, 3, 1), gsp_params(5, 3, 2), RahspParams{{2, 3, 1}, {5, 2, 1}}}) {
    for (std::uint64_t t = 0; t < 40; ++t) {
      const auto inst = random_instance(params, t);
      // delta near 1/2: some runs fail.
      const auto plan = make_plan(inst.family(), 0.49);
      MeteredSampler sampler(inst, RngStream(t + 100));
      RngStream rng(t + 200);
      const auto result = learn(sampler, plan, inst.group(), rng);
      CHECK(result.subgroup.is_subgroup_of(inst.hidden()));
      for (const auto& w : result.witnesses) CHECK(inst.hidden().contains(w));
    }
  }
}

TEST_CASE("learning on a non-abelian table group") {
  const auto d4 = acceptance::dihedral8();
  const BigInt two = 2;
  const auto family = Family::explicit_list(enumerate_table_subgroups(d4, &two));
  CHECK(family.size() == 5);
  int successes = 0;
  for (std::uint64_t t = 0; t < 200; ++t) {
    const auto& hidden = family.members()[t % 5];
    const HspInstance inst(hidden, family, t);
    const auto plan = make_plan(family, 1.0 / 3.0);
    MeteredSampler sampler(inst, RngStream(t));
    RngStream rng(t + 1000);
    const auto result = learn(sampler, plan, d4, rng);
    CHECK(result.subgroup.is_subgroup_of(hidden));
    successes += result.subgroup == hidden;
  }
  CHECK(successes >= 0.6 * 200);
}

TEST_CASE("early stop") {
  const auto inst = random_instance(gsp_params(2, 6, 1), 5);
  const auto plan = make_plan(inst.family(), 0.01);
  MeteredSampler sampler(inst, RngStream(6));
  RngStream rng(7);
  const auto result = learn(sampler, plan, inst.group(), rng, {true});
  CHECK(result.subgroup.is_subgroup_of(inst.hidden()));
  CHECK(result.samples == result.iterations_run * plan.samples_per_iteration());
  CHECK(result.iterations_run <= plan.iterations);
  if (result.subgroup == inst.hidden()) CHECK(result.iterations_run < plan.iterations);
}
