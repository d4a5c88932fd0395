#include "doctest.h"
#include "hsp/errors.hpp"
#include "hsp/experiments.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace hsp;

TEST_CASE("trials are reproducible") {
  const auto params = gsp_params(3, 4, 2);
  for (std::uint64_t t = 0; t < 10; ++t) {
    const auto a = run_trial(params, 1.0 / 3.0, t, 99);
    const auto b = run_trial(params, 1.0 / 3.0, t, 99);
    CHECK(a.success == b.success);
    CHECK(a.samples == b.samples);
    CHECK(a.contained);
  }
}

TEST_CASE("GSP(2,6,1) success rate and sample accounting") {
  const auto s = run_trials(gsp_params(2, 6, 1), 1.0 / 3.0, 300, 5);
  CHECK(s.trials == 300);
  CHECK(s.contained == 300);
  CHECK(s.sample_mismatches == 0);
  CHECK(s.successes / 300.0 >= 2.0 / 3.0);
  // A = ceil(9 sqrt(32)) = 51, B = ceil(sqrt(32)) = 6.
  CHECK(s.plan.probe_size == 51);
  CHECK(s.plan.query_size == 6);
  CHECK(s.plan.total_samples() == (51 + 9 * 6) * 7);
}

TEST_CASE("summaries do not depend on the thread count") {
  const auto params = RahspParams{{2, 4, 1}, {3, 2, 1}};
  const auto one = run_trials(params, 0.25, 64, 7, 1);
  const auto four = run_trials(params, 0.25, 64, 7, 4);
  CHECK(one.successes == four.successes);
  CHECK(one.contained == four.contained);
}

TEST_CASE("csv output") {
  CHECK(csv_header() == "p,n,k,delta,A,B,iterations,samples_used,trials,successes,success_rate,theta,ratio,seed");
  CHECK(to_csv({}) == csv_header() + "\n");

  const std::vector<RankedComponent> grid{{2, 4, 1}, {2, 5, 2}, {3, 3, 1}};
  const auto a = to_csv(sweep(grid, 1.0 / 3.0, 20, 42, 1));
  const auto b = to_csv(sweep(grid, 1.0 / 3.0, 20, 42, 4));
  CHECK(a == b);
  std::istringstream lines(a);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) ++count;
  CHECK(count == 4);

  const auto row = run_point(2, 4, 1, 1.0 / 3.0, 20, 42);
  CHECK(row.samples_used == 371);
  CHECK(row.ratio == doctest::Approx(371 / std::sqrt(8.0)));
  CHECK(csv_line(row).rfind("2,4,1,0.333333,26,3,7,371,20,", 0) == 0);
}

TEST_CASE("sweep validation and i/o errors") {
  const std::vector<RankedComponent> bad{{2, 4, 1}, {2, 4, 4}};
  CHECK_THROWS_AS(sweep(bad, 1.0 / 3.0, 5, 1), DomainError);
  const std::vector<RankedComponent> composite{{4, 4, 1}};
  CHECK_THROWS_AS(sweep(composite, 1.0 / 3.0, 5, 1), DomainError);
  CHECK_THROWS_AS(sweep(std::vector<RankedComponent>{{2, 4, 1}}, 0.7, 5, 1), DomainError);

  CHECK_THROWS_AS(write_csv("/nonexistent-dir/x/out.csv", {}), IoError);
  const auto path = std::filesystem::temp_directory_path() / "hsp_test_sweep.csv";
  write_csv(path, {});
  std::ifstream in(path);
  std::string content((std::istreambuf_iterator<char>(in)), {});
  CHECK(content == csv_header() + "\n");
  std::filesystem::remove(path);
}

TEST_CASE("number formatting and slope") {
  CHECK(format_real(1.0 / 3.0) == "0.333333");
  CHECK(format_real(2.0) == "2");
  CHECK(format_real(131.1666666) == "131.167");
  CHECK(format_real(1234567.0) == "1.23457e+06");
  CHECK(format_real(0.0) == "0");

  const std::vector<double> x{1, 2, 3, 4};
  const std::vector<double> y{3, 5, 7, 9};
  CHECK(least_squares_slope(x, y) == doctest::Approx(2.0));
}
