#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "hsp/family.hpp"
#include "hsp/learner.hpp"

namespace hsp {

struct TrialOutcome {
  bool success = false;    // learned subgroup equals the hidden one
  bool contained = false;  // learned subgroup is a subgroup of the hidden one
  std::uint64_t samples = 0;
};

/// One learner run on a fresh random instance. The instance comes from
/// stream (seed, "inst", trial_index), examples from (seed, "learn",
/// trial_index) and pair selection from (seed, "learn-select", trial_index).
TrialOutcome run_trial(const RahspParams& params, double delta, std::uint64_t trial_index,
                       std::uint64_t master_seed);

struct TrialSummary {
  LearnerPlan plan;
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  std::uint64_t contained = 0;
  /// Number of trials whose sample count differed from plan.total_samples().
  std::uint64_t sample_mismatches = 0;
};

/// Runs trials 0..trials-1, in parallel when threads != 1 (0 = hardware
/// concurrency). The summary does not depend on the thread count.
TrialSummary run_trials(const RahspParams& params, double delta, std::uint64_t trials, std::uint64_t master_seed,
                        unsigned threads = 0);

/// One line of sweep output.
struct SweepRow {
  std::uint32_t p = 2;
  unsigned n = 1;
  unsigned k = 1;
  double delta = 0;
  std::uint64_t probe_size = 0;
  std::uint64_t query_size = 0;
  std::uint64_t iterations = 0;
  std::uint64_t samples_used = 0;
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  double success_rate = 0;
  double theta = 0;
  double ratio = 0;  // samples_used / theta
  std::uint64_t seed = 0;
};

SweepRow run_point(std::uint32_t p, unsigned n, unsigned k, double delta, std::uint64_t trials,
                   std::uint64_t master_seed, unsigned threads = 0);

/// One row per grid point (p, n, k), in grid order. Every point is validated
/// before any trial runs; DomainError names the first invalid point.
std::vector<SweepRow> sweep(std::span<const RankedComponent> grid, double delta, std::uint64_t trials,
                            std::uint64_t master_seed, unsigned threads = 0);

std::string csv_header();
std::string csv_line(const SweepRow& row);
std::string to_csv(std::span<const SweepRow> rows);
void write_csv(const std::filesystem::path& path, std::span<const SweepRow> rows);

/// Reals with 6 significant digits, locale independent.
std::string format_real(double v);

/// Ordinary least-squares slope of y on x.
double least_squares_slope(std::span<const double> x, std::span<const double> y);

}  // namespace hsp
