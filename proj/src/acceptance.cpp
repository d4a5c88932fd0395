#include "hsp/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>

#include "hsp/bounds.hpp"
#include "hsp/bruteforce.hpp"
#include "hsp/errors.hpp"
#include "hsp/experiments.hpp"
#include "hsp/learner.hpp"
#include "hsp/oracle.hpp"
#include "hsp/text_format.hpp"

namespace hsp::acceptance {

namespace {

constexpr double kDelta = 1.0 / 3.0;

constexpr const char* kDihedral8 = R"(table n=8
0 1 2 3 4 5 6 7
1 2 3 0 5 6 7 4
2 3 0 1 6 7 4 5
3 0 1 2 7 4 5 6
4 7 6 5 0 3 2 1
5 4 7 6 1 0 3 2
6 5 4 7 2 1 0 3
7 6 5 4 3 2 1 0
)";

constexpr const char* kSymmetric3 = R"(table n=6
0 1 2 3 4 5
1 0 4 5 2 3
2 3 0 1 5 4
3 2 5 4 0 1
4 5 1 0 3 2
5 4 3 2 1 0
)";

struct Verdict {
  bool passed = false;
  std::string detail;
};

std::string fmt(double v) { return format_real(v); }

std::vector<std::pair<std::string, RahspParams>> success_instances() {
  return {{"GSP(2,6,1)", gsp_params(2, 6, 1)},
          {"GSP(2,6,2)", gsp_params(2, 6, 2)},
          {"GSP(3,4,1)", gsp_params(3, 4, 1)},
          {"rAHSP(2^3:1,3^3:1)", {{2, 3, 1}, {3, 3, 1}}}};
}

constexpr std::uint64_t kSuccessTrials = 500;

// 1: success rate >= 1 - delta - 3 sigma.
Verdict success_guarantee(const Options& o) {
  const double threshold = (1.0 - kDelta) - 3.0 * std::sqrt(kDelta * (1.0 - kDelta) / kSuccessTrials);
  Verdict v{true, "threshold " + fmt(threshold) + ";"};
  const auto start = std::chrono::steady_clock::now();
  for (const auto& [name, params] : success_instances()) {
    const auto s = run_trials(params, kDelta, kSuccessTrials, o.seed, o.threads);
    const double rate = static_cast<double>(s.successes) / static_cast<double>(s.trials);
    v.passed = v.passed && rate >= threshold;
    v.detail += " " + name + " " + fmt(rate);
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  v.passed = v.passed && secs < 60.0;
  v.detail += "; " + fmt(secs) + " s (budget 60)";
  return v;
}

// 2: <W> <= H on every trial.
Verdict one_sided_error(const Options& o) {
  Verdict v{true, ""};
  for (const auto& [name, params] : success_instances()) {
    const auto s = run_trials(params, kDelta, kSuccessTrials, o.seed, o.threads);
    v.passed = v.passed && s.contained == s.trials;
    v.detail += name + " " + std::to_string(s.contained) + "/" + std::to_string(s.trials) + " ";
  }
  return v;
}

// 3: draws per run equal (A + 9 B sr) ceil(ln(1/delta)/ln(6/5)).
Verdict sample_accounting(const Options& o) {
  // Closed form evaluated directly from the formulas, in floating point.
  auto closed_form = [](double max_index, double sr, double delta) {
    double a = 9.0 * max_index, b = 1.0;
    if (max_index > sr) {
      a = std::ceil(9.0 * std::sqrt(max_index * sr));
      b = std::ceil(std::sqrt(max_index / sr));
    }
    const double iters = std::ceil(std::log(1.0 / delta) / std::log(6.0 / 5.0));
    return static_cast<std::uint64_t>((a + 9.0 * b * sr) * iters);
  };
  auto inst_rng = RngStream::derive(o.seed, "accounting");
  const auto inst = random_instance(gsp_params(2, 4, 1), inst_rng);
  const auto plan = make_plan(inst.family(), kDelta);
  MeteredSampler sampler(inst, RngStream::derive(o.seed, "accounting-draws"));
  auto select = RngStream::derive(o.seed, "accounting-select");
  learn(sampler, plan, inst.group(), select);
  const auto expected = closed_form(8, 1, kDelta);
  Verdict v{sampler.draws() == 371 && expected == 371 && plan.total_samples() == 371,
            "GSP(2,4,1) measured " + std::to_string(sampler.draws()) + ", closed form " + std::to_string(expected)};
  for (const auto& [name, params] : success_instances()) {
    const auto s = run_trials(params, kDelta, 20, o.seed, o.threads);
    const auto f = Family::rahsp(params);
    const auto cf = closed_form(to_double(f.max_index()), f.subgroup_rank(), kDelta);
    v.passed = v.passed && s.sample_mismatches == 0 && cf == s.plan.total_samples();
    v.detail += "; " + name + " " + std::to_string(cf) + " x20 mismatches " + std::to_string(s.sample_mismatches);
  }
  return v;
}

// 4: Theta(max{k, sqrt(k p^{n-k})}) scaling.
Verdict scaling(const Options& o) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<RankedComponent> grid;
  for (unsigned k : {1u, 2u}) {
    for (unsigned n = 6; n <= 12; ++n) grid.push_back({2, n, k});
  }
  const auto rows = sweep(grid, kDelta, 100, o.seed, o.threads);
  double lo = rows.front().ratio, hi = rows.front().ratio;
  for (const auto& r : rows) {
    lo = std::min(lo, r.ratio);
    hi = std::max(hi, r.ratio);
  }
  Verdict v{hi / lo <= 8.0, "ratio band [" + fmt(lo) + ", " + fmt(hi) + "] spread " + fmt(hi / lo)};
  for (unsigned k : {1u, 2u}) {
    std::vector<double> x, y;
    for (const auto& r : rows) {
      if (r.k != k) continue;
      x.push_back(static_cast<double>(r.n - r.k));
      y.push_back(std::log2(static_cast<double>(r.samples_used)));
    }
    const double slope = least_squares_slope(x, y);
    v.passed = v.passed && std::abs(slope - 0.5) <= 0.1;
    v.detail += "; k=" + std::to_string(k) + " slope " + fmt(slope);
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  v.passed = v.passed && secs < 300.0;
  v.detail += "; " + fmt(secs) + " s (budget 300)";
  return v;
}

// 5: Gaussian binomial vs enumeration, and the p^{(n-k)k} lower estimate.
Verdict counting(const Options&) {
  const auto start = std::chrono::steady_clock::now();
  Verdict v{true, ""};
  int cases = 0;
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (unsigned n = 2; n <= 4; ++n) {
      for (unsigned k = 1; k < n; ++k) {
        const auto listed = enumerate_subgroups(p, n, k);
        std::set<std::vector<fp::Row>> distinct;
        for (const auto& h : listed) {
          distinct.insert(h.basis(0));
          if (h.rank() != k) v.passed = false;
        }
        const BigInt count = subgroup_count(p, n, k);
        const bool ok = distinct.size() == listed.size() && BigInt(listed.size()) == count &&
                        count > pow_big(p, (n - k) * k);
        if (!ok) {
          v.passed = false;
          v.detail += "mismatch at (" + std::to_string(p) + "," + std::to_string(n) + "," + std::to_string(k) + ") ";
        }
        ++cases;
      }
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  v.passed = v.passed && secs < 30.0;
  v.detail += std::to_string(cases) + " (p,n,k) cases; " + fmt(secs) + " s (budget 30)";
  return v;
}

// 6: f(x) = f(y) <=> x^{-1} y in H, exhaustively.
Verdict oracle_promise(const Options& o) {
  Verdict v{true, ""};
  std::size_t pairs = 0;
  const auto corpus = promise_corpus(o.seed);
  for (const auto& entry : corpus) {
    const Group& g = entry.hidden.group();
    const HspInstance inst(entry.hidden, Family::explicit_list({entry.hidden}), splitmix64(o.seed));
    const auto elems = g.elements(256);
    std::vector<Label> labels;
    std::vector<GroupElement> reps;
    for (const auto& x : elems) {
      labels.push_back(inst.label(x));
      reps.push_back(entry.hidden.coset_representative(x));
    }
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (std::size_t j = 0; j < elems.size(); ++j) {
        const bool member = entry.hidden.contains(g.quotient(elems[i], elems[j]));
        if ((labels[i] == labels[j]) != member || (reps[i] == reps[j]) != member) {
          v.passed = false;
        }
        ++pairs;
      }
    }
    const std::set<Label> distinct(labels.begin(), labels.end());
    if (BigInt(distinct.size()) != subgroup_index(g, entry.hidden)) v.passed = false;
  }
  v.detail = std::to_string(corpus.size()) + " (group, subgroup) cases, " + std::to_string(pairs) + " pairs";
  return v;
}

// 7: P{x^{-1} y in H} = |H|/|G| for independent uniform x, y.
Verdict collision_probability(const Options& o) {
  auto inst_rng = RngStream::derive(o.seed, "collision-prob");
  const auto inst = random_instance(gsp_params(2, 4, 1), inst_rng);
  MeteredSampler sampler(inst, RngStream::derive(o.seed, "collision-prob-draws"));
  constexpr int kPairs = 100000;
  int hits = 0;
  for (int i = 0; i < kPairs; ++i) hits += sampler.draw().label == sampler.draw().label;
  const double freq = static_cast<double>(hits) / kPairs;
  return {std::abs(freq - 0.125) <= 0.01, "frequency " + fmt(freq) + " vs 1/8 +- 0.01"};
}

// 8: a fresh Q_i collides with a fresh P with probability > 3/4.
Verdict probe_collision(const Options& o) {
  auto inst_rng = RngStream::derive(o.seed, "probe-collision");
  const auto inst = random_instance(gsp_params(2, 6, 1), inst_rng);
  const auto plan = make_plan(inst.family(), kDelta);
  MeteredSampler sampler(inst, RngStream::derive(o.seed, "probe-collision-draws"));
  constexpr int kRounds = 10000;
  int hits = 0;
  for (int i = 0; i < kRounds; ++i) {
    const auto probe = sampler.draw_many(plan.probe_size);
    const auto query = sampler.draw_many(plan.query_size);
    hits += !find_collisions(inst.group(), probe, query).empty();
  }
  const double freq = static_cast<double>(hits) / kRounds;
  return {freq >= 0.72, "A=" + std::to_string(plan.probe_size) + " B=" + std::to_string(plan.query_size) +
                            " frequency " + fmt(freq) + " (>= 0.72)"};
}

// 9: bound evaluators and the entropy inequality sweep.
Verdict bound_evaluators(const Options&) {
  const auto simon3 = Family::rahsp(gsp_params(2, 3, 1));
  const double lower = lower_bound(simon3.group().order(), simon3);
  const double theta = gsp_theta(3, 5, 2);
  int violations = 0;
  for (int i = 1; i <= 500; ++i) {
    const double q = 0.001 * i;
    if (-(1.0 - q) * std::log2(1.0 - q) > -q * std::log2(q)) ++violations;
    if (binary_entropy(q) > 2.0 * q * std::log2(1.0 / q)) ++violations;
  }
  const bool ok = std::abs(lower - 2.370) <= 0.001 && std::abs(theta - 7.348) <= 0.001 && violations == 0;
  return {ok, "lower(Simon n=3) " + fmt(lower) + ", theta(3,5,2) " + fmt(theta) + ", entropy violations " +
                  std::to_string(violations)};
}

// 10: learner vs exhaustive consistency on Simon n=3.
Verdict bruteforce_equivalence(const Options& o) {
  const auto params = gsp_params(2, 3, 1);
  const auto candidates = Family::rahsp(params).enumerate();
  constexpr int kTrials = 200;
  int sound = 0, singletons = 0, singleton_agree = 0;
  for (int t = 0; t < kTrials; ++t) {
    auto inst_rng = RngStream::derive(o.seed, "bf-inst", t);
    const auto inst = random_instance(params, inst_rng);
    const auto plan = make_plan(inst.family(), kDelta);
    MeteredSampler sampler(inst, RngStream::derive(o.seed, "bf-learn", t), true);
    auto select = RngStream::derive(o.seed, "bf-select", t);
    const auto result = learn(sampler, plan, inst.group(), select);
    const auto consistent = consistent_subgroups(sampler.history(), candidates);
    sound += std::find(consistent.begin(), consistent.end(), inst.hidden()) != consistent.end();
    if (consistent.size() == 1) {
      ++singletons;
      singleton_agree += result.subgroup == consistent.front();
    }
  }
  return {sound == kTrials && singleton_agree == singletons,
          "hidden consistent " + std::to_string(sound) + "/" + std::to_string(kTrials) + ", singleton agreement " +
              std::to_string(singleton_agree) + "/" + std::to_string(singletons)};
}

struct Criterion {
  int id;
  const char* title;
  std::function<Verdict(const Options&)> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "success rate >= 1 - delta - 3 sigma", success_guarantee},
      {2, "one-sided error", one_sided_error},
      {3, "sample accounting", sample_accounting},
      {4, "Theta scaling sweep", scaling},
      {5, "subgroup counting", counting},
      {6, "oracle promise", oracle_promise},
      {7, "pairwise collision probability", collision_probability},
      {8, "per-probe collision bound", probe_collision},
      {9, "bound evaluators", bound_evaluators},
      {10, "brute-force equivalence", bruteforce_equivalence},
  };
  return all;
}

}  // namespace

Group dihedral8() { return parse_group(kDihedral8); }
Group symmetric3() { return parse_group(kSymmetric3); }

std::vector<CorpusEntry> promise_corpus(std::uint64_t seed) {
  std::vector<CorpusEntry> out;
  auto rng = RngStream::derive(seed, "promise-corpus");
  auto add_random = [&](const std::string& name, const RahspParams& params) {
    out.push_back({name, random_instance(params, rng).hidden()});
  };
  const auto z22 = Group::abelian({{2, 2}});
  out.push_back({"Z_2^2 <(1,1)>", Subgroup::span(z22, std::vector{GroupElement({1, 1})})});
  out.push_back({"Z_2^2 trivial", Subgroup::trivial(z22)});
  const auto z32 = Group::abelian({{3, 2}});
  out.push_back({"Z_3^2 <(1,2)>", Subgroup::span(z32, std::vector{GroupElement({1, 2})})});
  add_random("Z_2^4 rank 1", gsp_params(2, 4, 1));
  add_random("Z_2^4 rank 2", gsp_params(2, 4, 2));
  add_random("Z_5^3 rank 1", gsp_params(5, 3, 1));
  add_random("Z_2^2 x Z_3^2 ranks (1,1)", {{2, 2, 1}, {3, 2, 1}});
  add_random("Z_2^3 x Z_3^2 ranks (2,1)", {{2, 3, 2}, {3, 2, 1}});
  add_random("Z_2^8 rank 3", gsp_params(2, 8, 3));
  const auto z2z3 = Group::abelian({{2, 1}, {3, 1}});
  out.push_back({"Z_2 x Z_3 whole", Subgroup::whole(z2z3)});
  for (const auto& [name, g] : {std::pair{std::string("D4"), dihedral8()}, std::pair{std::string("S3"), symmetric3()}}) {
    for (const auto& h : enumerate_table_subgroups(g)) {
      out.push_back({name + " subgroup of order " + to_string(h.order()), h});
    }
  }
  return out;
}

std::vector<int> criterion_ids() {
  std::vector<int> ids;
  for (const auto& c : criteria()) ids.push_back(c.id);
  return ids;
}

CriterionResult run_criterion(int id, const Options& options) {
  for (const auto& c : criteria()) {
    if (c.id != id) continue;
    CriterionResult r;
    r.id = id;
    r.title = c.title;
    const auto start = std::chrono::steady_clock::now();
    try {
      const auto verdict = c.run(options);
      r.passed = verdict.passed;
      r.detail = verdict.detail;
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
  }
  throw DomainError("no acceptance criterion " + std::to_string(id));
}

std::vector<CriterionResult> run_all(const Options& options, std::span<const int> ids) {
  std::vector<CriterionResult> out;
  const auto all = criterion_ids();
  for (const int id : ids.empty() ? std::span<const int>(all) : ids) out.push_back(run_criterion(id, options));
  return out;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream out;
  out << (r.passed ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.title << ": " << r.detail << " ("
      << format_real(r.seconds) << " s)";
  return out.str();
}

}  // namespace hsp::acceptance
