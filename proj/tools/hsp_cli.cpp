// hsp: command-line front end for the collision learner and its experiments.
//
// Exit codes: 0 success, 1 I/O failure or failed selftest, 2 parameter
// error, 3 capacity guard.

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hsp/acceptance.hpp"
#include "hsp/bounds.hpp"
#include "hsp/bruteforce.hpp"
#include "hsp/errors.hpp"
#include "hsp/experiments.hpp"
#include "hsp/learner.hpp"
#include "hsp/oracle.hpp"
#include "hsp/text_format.hpp"

namespace {

using namespace hsp;

struct Common {
  std::uint64_t seed = 1;
  std::string delta = "1/3";
  std::uint64_t trials = 1;
  std::string out;
  std::string instance;
  std::vector<std::string> gsp;
  std::vector<std::string> rahsp;
  unsigned threads = 0;
};

double parse_real(const std::string& text) {
  const auto slash = text.find('/');
  auto number = [](std::string_view s) {
    double v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
      throw DomainError("cannot parse number '" + std::string(s) + "'");
    }
    return v;
  };
  if (slash == std::string::npos) return number(text);
  return number(std::string_view(text).substr(0, slash)) / number(std::string_view(text).substr(slash + 1));
}

// "lo..hi" or a single value.
std::pair<unsigned, unsigned> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  auto num = [](const std::string& t) {
    try {
      std::size_t used = 0;
      const auto v = std::stoul(t, &used);
      if (used != t.size()) throw std::invalid_argument(t);
      return static_cast<unsigned>(v);
    } catch (const std::exception&) {
      throw DomainError("cannot parse integer '" + t + "'");
    }
  };
  if (dots == std::string::npos) return {num(s), num(s)};
  return {num(s.substr(0, dots)), num(s.substr(dots + 2))};
}

// "p,n,k" where each field may be a range lo..hi.
std::vector<RankedComponent> expand_gsp_grid(const std::string& spec) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (std::size_t pos; (pos = spec.find(',', start)) != std::string::npos; start = pos + 1) {
    parts.push_back(spec.substr(start, pos - start));
  }
  parts.push_back(spec.substr(start));
  if (parts.size() != 3) throw DomainError("--gsp expects p,n,k (fields may be lo..hi ranges)");
  const auto [p0, p1] = parse_range(parts[0]);
  const auto [n0, n1] = parse_range(parts[1]);
  const auto [k0, k1] = parse_range(parts[2]);
  std::vector<RankedComponent> out;
  for (unsigned p = p0; p <= p1; ++p) {
    if (p0 != p1 && !is_prime(p)) continue;
    for (unsigned k = k0; k <= k1; ++k)
      for (unsigned n = n0; n <= n1; ++n) out.push_back({p, n, k});
  }
  return out;
}

std::vector<RahspParams> requested_params(const Common& c) {
  std::vector<RahspParams> out;
  for (const auto& g : c.gsp) {
    for (const auto& point : expand_gsp_grid(g)) out.push_back({point});
  }
  for (const auto& r : c.rahsp) out.push_back(parse_rahsp_spec(r));
  return out;
}

void add_instance_options(CLI::App* sub, Common& c) {
  sub->add_option("--gsp", c.gsp, "GSP parameters p,n,k (repeatable)");
  sub->add_option("--rahsp", c.rahsp, "rAHSP parameters p1^n1:k1,p2^n2:k2,... (repeatable)");
}

void add_run_options(CLI::App* sub, Common& c) {
  sub->add_option("--seed", c.seed, "master seed");
  sub->add_option("--delta", c.delta, "failure probability in (0, 1/2), e.g. 1/3 or 0.1");
  sub->add_option("--trials", c.trials, "number of independent trials");
  sub->add_option("--threads", c.threads, "worker threads (0 = all cores)");
}

std::ostream& open_out(const std::string& path, std::ofstream& file) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path, std::ios::binary);
  if (!file) throw IoError("cannot open " + path + " for writing");
  return file;
}

int cmd_bounds(const Common& c) {
  const auto all = requested_params(c);
  if (all.empty()) throw DomainError("bounds needs --gsp or --rahsp");
  std::ofstream file;
  auto& out = open_out(c.out, file);
  out << "params,group_order,family_size,subgroup_order,sr,lower,upper,theta\n";
  for (const auto& params : all) {
    const auto r = rahsp_bounds(params);
    out << format_params(params) << ',' << to_string(r.group_order) << ',' << to_string(r.family_size) << ','
        << to_string(r.min_subgroup_order) << ',' << r.subgroup_rank << ',' << format_real(r.lower) << ','
        << format_real(r.upper) << ',' << (r.theta ? format_real(*r.theta) : "") << '\n';
  }
  return 0;
}

HspInstance instance_from(const Common& c) {
  if (!c.instance.empty()) return load_instance(c.instance);
  const auto all = requested_params(c);
  if (all.size() != 1) throw DomainError("learn needs exactly one of --instance, --gsp, --rahsp");
  auto rng = RngStream::derive(c.seed, "inst");
  return random_instance(all.front(), rng);
}

int cmd_learn(const Common& c, bool early_stop, const std::string& save_path) {
  const double delta = parse_real(c.delta);
  std::ofstream file;
  auto& out = open_out(c.out, file);
  if (c.trials > 1 && c.instance.empty()) {
    const auto all = requested_params(c);
    if (all.size() != 1) throw DomainError("learn needs exactly one of --gsp, --rahsp");
    const auto s = run_trials(all.front(), delta, c.trials, c.seed, c.threads);
    out << "params " << format_params(all.front()) << "\nA " << s.plan.probe_size << "\nB " << s.plan.query_size
        << "\niterations " << s.plan.iterations << "\nsamples_per_run " << s.plan.total_samples() << "\ntrials "
        << s.trials << "\nsuccesses " << s.successes << "\nsuccess_rate "
        << format_real(static_cast<double>(s.successes) / static_cast<double>(s.trials)) << "\ncontained "
        << s.contained << "\n";
    return 0;
  }
  const auto inst = instance_from(c);
  if (!save_path.empty()) save_instance(save_path, inst);
  const auto plan = make_plan(inst.family(), delta);
  MeteredSampler sampler(inst, RngStream::derive(c.seed, "learn"));
  auto select = RngStream::derive(c.seed, "learn-select");
  const auto result = learn(sampler, plan, inst.group(), select, {early_stop});
  out << "A " << plan.probe_size << "\nB " << plan.query_size << "\nrounds_per_iteration "
      << plan.rounds_per_iteration << "\niterations " << plan.iterations << "\nsamples " << result.samples
      << "\nsuccess " << (result.subgroup == inst.hidden() ? "true" : "false") << "\n# learned\n"
      << format_subgroup(result.subgroup) << "# hidden\n"
      << format_subgroup(inst.hidden());
  return 0;
}

int cmd_sweep(const Common& c) {
  std::vector<RankedComponent> grid;
  for (const auto& g : c.gsp) {
    const auto points = expand_gsp_grid(g);
    grid.insert(grid.end(), points.begin(), points.end());
  }
  const auto rows = sweep(grid, parse_real(c.delta), c.trials, c.seed, c.threads);
  if (c.out.empty() || c.out == "-") {
    std::cout << to_csv(rows);
  } else {
    write_csv(c.out, rows);
  }
  return 0;
}

int cmd_enumerate(const Common& c, std::optional<std::uint64_t> samples, std::optional<double> target) {
  const auto all = requested_params(c);
  if (all.size() != 1 && c.instance.empty()) throw DomainError("enumerate needs one --gsp/--rahsp or --instance");
  std::ofstream file;
  auto& out = open_out(c.out, file);
  const auto inst = instance_from(c);
  const auto candidates = inst.family().enumerate();
  out << "family_size " << to_string(inst.family().size()) << "\nenumerated " << candidates.size() << "\n";
  if (samples) {
    MeteredSampler sampler(inst, RngStream::derive(c.seed, "enumerate"));
    const auto examples = sampler.draw_many(*samples);
    const auto consistent = consistent_subgroups(examples, candidates);
    out << "consistent " << consistent.size() << "\n";
    for (const auto& h : consistent) out << format_subgroup(h);
  } else if (target) {
    auto rng = RngStream::derive(c.seed, "min-samples");
    out << "min_samples " << min_samples_exhaustive(inst, rng, *target, std::max<std::uint64_t>(c.trials, 1)) << "\n";
  } else {
    for (const auto& h : candidates) out << format_subgroup(h);
  }
  return 0;
}

int cmd_selftest(const Common& c, const std::vector<int>& ids) {
  acceptance::Options options;
  options.seed = c.seed;
  options.threads = c.threads;
  bool all_passed = true;
  for (const int id : ids.empty() ? acceptance::criterion_ids() : ids) {
    const auto r = acceptance::run_criterion(id, options);
    std::cout << acceptance::format_result(r) << std::endl;
    all_passed = all_passed && r.passed;
  }
  return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hidden subgroup learner: collision-based sample algorithm, bounds and experiments"};
  app.require_subcommand(1);

  Common common;
  bool early_stop = false;
  std::string save_instance;
  std::optional<std::uint64_t> samples;
  std::optional<double> target;
  std::vector<int> criteria;

  auto* bounds = app.add_subcommand("bounds", "print lower/upper/theta sample-complexity bounds");
  add_instance_options(bounds, common);
  bounds->add_option("--out", common.out, "output path (default stdout)");

  auto* learn_cmd = app.add_subcommand("learn", "run the collision learner");
  add_instance_options(learn_cmd, common);
  add_run_options(learn_cmd, common);
  learn_cmd->add_option("--instance", common.instance, "instance file");
  learn_cmd->add_option("--out", common.out, "output path (default stdout)");
  learn_cmd->add_option("--save-instance", save_instance, "write the generated instance to this file");
  learn_cmd->add_flag("--early-stop", early_stop, "stop once <W> reaches the promised order");

  auto* sweep_cmd = app.add_subcommand("sweep", "run a GSP grid and write CSV");
  sweep_cmd->add_option("--gsp", common.gsp, "grid p,n,k; fields may be lo..hi (repeatable)");
  add_run_options(sweep_cmd, common);
  sweep_cmd->add_option("--out", common.out, "CSV path (default stdout)");

  auto* enumerate_cmd = app.add_subcommand("enumerate", "exhaustive candidate enumeration and consistency");
  add_instance_options(enumerate_cmd, common);
  add_run_options(enumerate_cmd, common);
  enumerate_cmd->add_option("--instance", common.instance, "instance file");
  enumerate_cmd->add_option("--out", common.out, "output path (default stdout)");
  enumerate_cmd->add_option("--samples", samples, "draw this many examples and list consistent candidates");
  enumerate_cmd->add_option("--min-samples", target, "smallest T reaching this success rate");

  auto* selftest = app.add_subcommand("selftest", "run the acceptance criteria");
  selftest->add_option("--seed", common.seed, "master seed");
  selftest->add_option("--threads", common.threads, "worker threads (0 = all cores)");
  selftest->add_option("--criterion", criteria, "run only these criteria (repeatable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*bounds) return cmd_bounds(common);
    if (*learn_cmd) return cmd_learn(common, early_stop, save_instance);
    if (*sweep_cmd) return cmd_sweep(common);
    if (*enumerate_cmd) return cmd_enumerate(common, samples, target);
    if (*selftest) return cmd_selftest(common, criteria);
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return 3;
  } catch (const DomainError& e) {
    std::cerr << "parameter error: " << e.what() << "\n";
    return 2;
  } catch (const StructuralError& e) {
    std::cerr << "parameter error: " << e.what() << "\n";
    return 2;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
