#include <set>

#include "doctest.h"
#include "hsp/acceptance.hpp"
#include "hsp/errors.hpp"
#include "hsp/oracle.hpp"

using namespace hsp;

namespace {

GroupElement el(std::vector<std::uint32_t> v) { return GroupElement(std::move(v)); }

HspInstance single_member(const Subgroup& h, std::uint64_t salt = 42) {
  return HspInstance(h, Family::explicit_list({h}), salt);
}

}  // namespace

TEST_CASE("coset labels follow the promise") {
  const auto z22 = Group::abelian({{2, 2}});
  const auto inst = single_member(Subgroup::span(z22, std::vector{el({1, 1})}));
  CHECK(inst.label(el({0, 0})) == inst.label(el({1, 1})));
  CHECK(inst.label(el({0, 1})) == inst.label(el({1, 0})));
  CHECK(inst.label(el({0, 0})) != inst.label(el({0, 1})));
  CHECK(coset_label(inst, el({1, 1})) == inst.label(el({1, 1})));
}

TEST_CASE("trivial subgroup gives an injective labeling") {
  const auto g = Group::abelian({{2, 3}, {3, 1}});
  const auto inst = single_member(Subgroup::trivial(g));
  std::set<Label> labels;
  for (const auto& x : g.elements()) labels.insert(inst.label(x));
  CHECK(BigInt(labels.size()) == g.order());
}

TEST_CASE("whole table group gives a constant labeling") {
  const auto d4 = acceptance::dihedral8();
  const auto inst = single_member(Subgroup::whole(d4));
  std::set<Label> labels;
  for (const auto& x : d4.elements()) labels.insert(inst.label(x));
  CHECK(labels.size() == 1);
}

TEST_CASE("promise holds exhaustively on the corpus") {
  for (const auto& entry : acceptance::promise_corpus(9)) {
    CAPTURE(entry.name);
    const auto& g = entry.hidden.group();
    const auto inst = single_member(entry.hidden);
    const auto elems = g.elements();
    std::set<Label> labels;
    bool ok = true;
    for (const auto& x : elems) {
      labels.insert(inst.label(x));
      for (const auto& y : elems) {
        const bool member = entry.hidden.contains(g.quotient(x, y));
        ok = ok && ((inst.label(x) == inst.label(y)) == member);
        ok = ok && ((entry.hidden.coset_representative(x) == entry.hidden.coset_representative(y)) == member);
      }
    }
    CHECK(ok);
    CHECK(BigInt(labels.size()) == subgroup_index(g, entry.hidden));
  }
}

TEST_CASE("salt changes label values but not the partition") {
  RngStream rng(8);
  const auto h = uniform_random_subgroup(3, 3, 1, rng);
  const auto a = single_member(h, 1), b = single_member(h, 2);
  const auto elems = h.group().elements();
  bool any_differs = false;
  for (const auto& x : elems) {
    any_differs = any_differs || a.label(x) != b.label(x);
    for (const auto& y : elems) CHECK((a.label(x) == a.label(y)) == (b.label(x) == b.label(y)));
  }
  CHECK(any_differs);
}

TEST_CASE("metered sampler") {
  const auto inst = random_instance(gsp_params(2, 4, 1), 11);
  MeteredSampler sampler(inst, RngStream(3));
  for (int i = 0; i < 371; ++i) sampler.draw();
  CHECK(sampler.draws() == 371);
  sampler.draw_many(29);
  CHECK(sampler.draws() == 400);
  CHECK(sampler.history().empty());

  SUBCASE("same seed, same stream") {
    MeteredSampler a(inst, RngStream(5), true), b(inst, RngStream(5), true);
    a.draw_many(50);
    b.draw_many(50);
    for (std::size_t i = 0; i < 50; ++i) {
      CHECK(a.history()[i].point == b.history()[i].point);
      CHECK(a.history()[i].label == b.history()[i].label);
    }
  }
  SUBCASE("labels match f") {
    MeteredSampler s(inst, RngStream(6));
    for (int i = 0; i < 100; ++i) {
      const auto e = s.draw();
      CHECK(e.label == inst.label(e.point));
    }
  }
}

TEST_CASE("pairwise collision rate is |H|/|G|") {
  const auto inst = random_instance(gsp_params(2, 4, 1), 21);
  MeteredSampler sampler(inst, RngStream(22));
  int hits = 0;
  for (int i = 0; i < 100000; ++i) hits += sampler.draw().label == sampler.draw().label;
  CHECK(std::abs(hits / 100000.0 - 0.125) <= 0.01);
}

TEST_CASE("random instances") {
  const auto inst = random_instance(gsp_params(2, 6, 2), 1);
  CHECK(inst.hidden().order() == 4);
  CHECK(subgroup_index(inst.group(), inst.hidden()) == 16);
  CHECK(inst.family().kind() == FamilyKind::RahspRanks);

  const auto mixed = random_instance({{2, 2, 1}, {3, 2, 1}}, 2);
  CHECK(mixed.family().size() == 12);
  CHECK(mixed.hidden().component_ranks()[0] == 1);
  CHECK(mixed.hidden().component_ranks()[1] == 1);

  CHECK_THROWS_AS(random_instance(gsp_params(2, 3, 3), 1), DomainError);
  CHECK_THROWS_AS(random_instance(gsp_params(2, 3, 0), 1), DomainError);
  CHECK_THROWS_AS(random_instance(gsp_params(2, 40, 1), 1), CapacityError);
}

TEST_CASE("different seeds disagree at the rate 1 - 1/|family|") {
  // Over GSP(2,3,1) the hidden subgroup is uniform over 7 candidates.
  int differ = 0;
  constexpr int kPairs = 2000;
  for (int i = 0; i < kPairs; ++i) {
    differ += !(random_instance(gsp_params(2, 3, 1), 2 * i).hidden() ==
                random_instance(gsp_params(2, 3, 1), 2 * i + 1).hidden());
  }
  CHECK(std::abs(differ / static_cast<double>(kPairs) - 6.0 / 7.0) <= 0.03);
}

TEST_CASE("instance rejects hidden subgroups outside the family") {
  const auto f = Family::rahsp(gsp_params(2, 3, 1));
  CHECK_THROWS_AS(HspInstance(Subgroup::trivial(f.group()), f, 0), DomainError);
}
