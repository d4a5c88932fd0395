#include "hsp/experiments.hpp"

#include <atomic>
#include <charconv>
#include <fstream>
#include <thread>

#include "hsp/bounds.hpp"
#include "hsp/errors.hpp"
#include "hsp/oracle.hpp"
#include "hsp/text_format.hpp"

namespace hsp {

TrialOutcome run_trial(const RahspParams& params, double delta, std::uint64_t trial_index,
                       std::uint64_t master_seed) {
  auto inst_rng = RngStream::derive(master_seed, "inst", trial_index);
  const auto inst = random_instance(params, inst_rng);
  const auto plan = make_plan(inst.family(), delta);
  MeteredSampler sampler(inst, RngStream::derive(master_seed, "learn", trial_index));
  auto select_rng = RngStream::derive(master_seed, "learn-select", trial_index);
  const auto result = learn(sampler, plan, inst.group(), select_rng);
  return {result.subgroup == inst.hidden(), result.subgroup.is_subgroup_of(inst.hidden()), result.samples};
}

TrialSummary run_trials(const RahspParams& params, double delta, std::uint64_t trials, std::uint64_t master_seed,
                        unsigned threads) {
  TrialSummary summary;
  summary.plan = make_plan(Family::rahsp(params), delta);
  summary.trials = trials;

  std::vector<TrialOutcome> outcomes(trials);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t t = next++; t < trials; t = next++) outcomes[t] = run_trial(params, delta, t, master_seed);
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(trials, 1)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }

  for (const auto& o : outcomes) {
    summary.successes += o.success;
    summary.contained += o.contained;
    summary.sample_mismatches += o.samples != summary.plan.total_samples();
  }
  return summary;
}

SweepRow run_point(std::uint32_t p, unsigned n, unsigned k, double delta, std::uint64_t trials,
                   std::uint64_t master_seed, unsigned threads) {
  const auto summary = run_trials(gsp_params(p, n, k), delta, trials, master_seed, threads);
  SweepRow row;
  row.p = p;
  row.n = n;
  row.k = k;
  row.delta = delta;
  row.probe_size = summary.plan.probe_size;
  row.query_size = summary.plan.query_size;
  row.iterations = summary.plan.iterations;
  row.samples_used = summary.plan.total_samples();
  row.trials = trials;
  row.successes = summary.successes;
  row.success_rate = trials ? static_cast<double>(summary.successes) / static_cast<double>(trials) : 0.0;
  row.theta = gsp_theta(p, n, k);
  row.ratio = static_cast<double>(row.samples_used) / row.theta;
  row.seed = master_seed;
  return row;
}

std::vector<SweepRow> sweep(std::span<const RankedComponent> grid, double delta, std::uint64_t trials,
                            std::uint64_t master_seed, unsigned threads) {
  for (const auto& point : grid) {
    try {
      validate_rahsp({point});
      make_plan(Family::rahsp({point}), delta);
    } catch (const std::exception& e) {
      throw DomainError("invalid grid point " + format_params({point}) + ": " + e.what());
    }
  }
  std::vector<SweepRow> rows;
  for (const auto& point : grid) rows.push_back(run_point(point.prime, point.n, point.k, delta, trials, master_seed, threads));
  return rows;
}

std::string format_real(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 6);
  return std::string(buf, ptr);
}

std::string csv_header() {
  return "p,n,k,delta,A,B,iterations,samples_used,trials,successes,success_rate,theta,ratio,seed";
}

std::string csv_line(const SweepRow& r) {
  std::string out;
  auto field = [&out](const std::string& s) {
    if (!out.empty()) out += ',';
    out += s;
  };
  field(std::to_string(r.p));
  field(std::to_string(r.n));
  field(std::to_string(r.k));
  field(format_real(r.delta));
  field(std::to_string(r.probe_size));
  field(std::to_string(r.query_size));
  field(std::to_string(r.iterations));
  field(std::to_string(r.samples_used));
  field(std::to_string(r.trials));
  field(std::to_string(r.successes));
  field(format_real(r.success_rate));
  field(format_real(r.theta));
  field(format_real(r.ratio));
  field(std::to_string(r.seed));
  return out;
}

std::string to_csv(std::span<const SweepRow> rows) {
  std::string out = csv_header() + "\n";
  for (const auto& r : rows) out += csv_line(r) + "\n";
  return out;
}

void write_csv(const std::filesystem::path& path, std::span<const SweepRow> rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << to_csv(rows);
  out.flush();
  if (!out) throw IoError("write failed for " + path.string());
}

double least_squares_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw DomainError("slope needs at least two paired points");
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(x.size());
  my /= static_cast<double>(y.size());
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  if (sxx == 0) throw DomainError("slope undefined for constant x");
  return sxy / sxx;
}

}  // namespace hsp
