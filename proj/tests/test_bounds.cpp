#include "doctest.h"
#include "hsp/bounds.hpp"
#include "hsp/errors.hpp"

#include <cmath>

using namespace hsp;

TEST_CASE("lower bound examples") {
  const auto simon3 = Family::rahsp(gsp_params(2, 3, 1));
  CHECK(simon3.size() == 7);
  CHECK(lower_bound(8, simon3) == doctest::Approx(2.370).epsilon(0.0005));

  const auto g = Group::abelian({{2, 2}});
  const auto a = Subgroup::span(g, std::vector{GroupElement({1, 0})});
  const auto b = Subgroup::span(g, std::vector{GroupElement({0, 1})});
  CHECK(lower_bound(4, Family::explicit_list({a, b})) == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("lower bound tracks theta for GSP(2, n, 1)") {
  for (unsigned n = 8; n <= 20; ++n) {
    const auto family = Family::rahsp(gsp_params(2, n, 1));
    const double ratio = lower_bound(pow_big(2, n), family) / gsp_theta(2, n, 1);
    CHECK(ratio >= 0.5);
    CHECK(ratio <= 1.5);
  }
}

TEST_CASE("upper bound examples") {
  CHECK(upper_bound(16, Family::rahsp(gsp_params(2, 4, 1))) == doctest::Approx(std::sqrt(8.0)));
  CHECK(upper_bound(64, Family::rahsp(gsp_params(2, 6, 4))) == doctest::Approx(4.0));
}

TEST_CASE("rahsp bounds") {
  const auto r = rahsp_bounds(gsp_params(2, 6, 1));
  CHECK(r.upper == doctest::Approx(5.657).epsilon(0.0005));
  REQUIRE(r.theta.has_value());
  CHECK(*r.theta == doctest::Approx(r.upper));
  CHECK(r.group_order == 64);
  CHECK(r.family_size == 63);
  CHECK(r.subgroup_rank == 1);

  const auto two = rahsp_bounds({{2, 3, 1}, {3, 3, 1}});
  CHECK(two.lower == doctest::Approx(6.0));
  CHECK(two.upper == doctest::Approx(6.0));
  CHECK_FALSE(two.theta.has_value());
  CHECK(two.group_order == 216);
  CHECK(two.family_size == 7 * 13);
  CHECK(two.min_subgroup_order == 6);

  CHECK(rahsp_bounds(gsp_params(3, 5, 2)).lower <= rahsp_bounds(gsp_params(3, 5, 2)).upper);
}

TEST_CASE("theta examples") {
  CHECK(gsp_theta(3, 5, 2) == doctest::Approx(7.348).epsilon(0.0002));
  CHECK(gsp_theta(2, 10, 9) == doctest::Approx(9.0));
  CHECK(gsp_theta(3, 5, 1) == doctest::Approx(9.0));
  for (unsigned n = 2; n <= 30; ++n)
    CHECK(gsp_theta(2, n, 1) == doctest::Approx(std::max(1.0, std::sqrt(std::ldexp(1.0, static_cast<int>(n) - 1)))));
  CHECK_THROWS_AS(gsp_theta(2, 4, 4), DomainError);
  CHECK_THROWS_AS(gsp_theta(2, 4, 0), DomainError);
  CHECK_THROWS_AS(gsp_theta(4, 4, 1), DomainError);
}

TEST_CASE("theta equals the rahsp upper bound for one component") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u})
    for (unsigned n = 2; n <= 9; ++n)
      for (unsigned k = 1; k < n; ++k) {
        const auto r = rahsp_bounds(gsp_params(p, n, k));
        CHECK(*r.theta == doctest::Approx(r.upper));
        CHECK(gsp_theta(p, n, k) == doctest::Approx(r.upper));
      }
}

TEST_CASE("theta is monotone in n") {
  for (std::uint32_t p : {2u, 3u})
    for (unsigned k = 1; k <= 3; ++k)
      for (unsigned n = k + 1; n < 25; ++n) CHECK(gsp_theta(p, n + 1, k) >= gsp_theta(p, n, k));
}

TEST_CASE("huge groups stay finite") {
  const auto r = rahsp_bounds(gsp_params(2, 200, 1));
  CHECK(std::isfinite(r.upper));
  CHECK(std::isfinite(r.lower));
  CHECK(r.upper > 1e29);
}

TEST_CASE("binary entropy and the Fano floor") {
  CHECK(binary_entropy(0.5) == doctest::Approx(1.0));
  CHECK(binary_entropy(0.0) == 0.0);
  CHECK(binary_entropy(1.0) == 0.0);
  CHECK(binary_entropy(0.25) == doctest::Approx(0.8113).epsilon(0.0001));
  CHECK_THROWS_AS(binary_entropy(-0.1), DomainError);
  CHECK_THROWS_AS(binary_entropy(1.1), DomainError);

  CHECK(fano_floor(0.0, 8) == doctest::Approx(3.0));
  CHECK(fano_floor(1.0 / 3.0, 7) == doctest::Approx(0.953).epsilon(0.0005));
  CHECK_THROWS_AS(fano_floor(0.5, 8), DomainError);
  CHECK_THROWS_AS(fano_floor(0.1, 1), DomainError);

  double previous = fano_floor(0.0, 1024);
  for (int i = 1; i < 500; ++i) {
    const double v = fano_floor(i / 1000.0, 1024);
    CHECK(v <= previous);
    previous = v;
  }
}

TEST_CASE("lower bound needs two members") {
  const auto g = Group::abelian({{2, 2}});
  const auto a = Subgroup::span(g, std::vector{GroupElement({1, 0})});
  CHECK_THROWS_AS(lower_bound(4, Family::explicit_list({a})), DomainError);
}
