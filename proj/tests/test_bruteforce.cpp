#include "doctest.h"
#include "hsp/bruteforce.hpp"
#include "hsp/errors.hpp"

using namespace hsp;

namespace {

Example ex(std::uint32_t a, std::uint32_t b, Label label) { return {GroupElement({a, b}), label}; }

}  // namespace

TEST_CASE("Simon n=2 consistency") {
  const auto family = Family::rahsp(gsp_params(2, 2, 1)).enumerate();
  REQUIRE(family.size() == 3);
  const auto g = family[0].group();
  const auto s11 = Subgroup::span(g, std::vector{GroupElement({1, 1})});

  const std::vector<Example> pair{ex(0, 0, 5), ex(1, 1, 5)};
  auto found = consistent_subgroups(pair, family);
  REQUIRE(found.size() == 1);
  CHECK(found[0] == s11);

  const std::vector<Example> three{ex(0, 0, 1), ex(0, 1, 2), ex(1, 0, 3)};
  CHECK(consistent_subgroups(three, family).empty());

  CHECK(consistent_subgroups(std::span<const Example>{}, family).size() == 3);

  const std::vector<Example> apart{ex(0, 0, 1), ex(1, 1, 2)};
  CHECK(consistent_subgroups(apart, family).size() == 2);

  CHECK_THROWS_AS(consistent_subgroups(pair, std::span<const Subgroup>{}), DomainError);

  const auto pattern = collision_pattern(three);
  CHECK(pattern.class_count == 3);
  const auto pattern2 = collision_pattern(std::vector<Example>{ex(0, 0, 9), ex(1, 0, 4), ex(1, 1, 9)});
  CHECK(pattern2.class_count == 2);
  CHECK(pattern2.class_of == std::vector<std::size_t>{0, 1, 0});
}

TEST_CASE("hidden subgroup is always consistent and the set shrinks") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto inst = random_instance(gsp_params(seed % 2 ? 3 : 2, 3, 1 + seed % 2), seed);
    const auto family = inst.family().enumerate();
    MeteredSampler sampler(inst, RngStream(seed));
    std::vector<Example> examples;
    std::size_t previous = family.size();
    for (int t = 0; t < 12; ++t) {
      examples.push_back(sampler.draw());
      const auto found = consistent_subgroups(examples, family);
      CHECK(found.size() <= previous);
      previous = found.size();
      bool has_hidden = false;
      for (const auto& h : found) {
        has_hidden |= h == inst.hidden();
        CHECK(is_consistent(examples, h));
      }
      CHECK(has_hidden);
    }
  }
}

TEST_CASE("minimum samples for the exhaustive learner") {
  const auto inst = random_instance(gsp_params(2, 3, 1), 11);
  RngStream a(12), b(12), c(12);
  const auto low = min_samples_exhaustive(inst, a, 0.5, 200);
  const auto high = min_samples_exhaustive(inst, b, 0.9, 200);
  CHECK(low >= 2);
  CHECK(low <= high);
  CHECK(high <= 16);

  RngStream d(13);
  const auto doubled = min_samples_exhaustive(inst, d, 0.5, 400);
  CHECK(doubled + 1 >= low);
  CHECK(doubled <= low + 1);

  const auto g = Group::abelian({{2, 3}});
  const auto h = Subgroup::span(g, std::vector{GroupElement({1, 0, 0})});
  const HspInstance single(h, Family::explicit_list({h}), 1);
  CHECK(min_samples_exhaustive(single, c, 1.0, 50) == 1);

  const auto big = random_instance(gsp_params(2, 9, 1), 3);
  RngStream e(1);
  CHECK_THROWS_AS(min_samples_exhaustive(big, e, 0.5, 10), CapacityError);
}
