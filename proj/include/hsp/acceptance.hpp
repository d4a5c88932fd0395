#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hsp/group.hpp"
#include "hsp/subgroup.hpp"

namespace hsp::acceptance {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct Options {
  std::uint64_t seed = 20240601;
  unsigned threads = 0;
};

std::vector<int> criterion_ids();
CriterionResult run_criterion(int id, const Options& options);
/// Runs `ids` (all criteria when empty) in order.
std::vector<CriterionResult> run_all(const Options& options, std::span<const int> ids = {});
std::string format_result(const CriterionResult& r);

/// Order-8 dihedral group as a table; index i + 4j is r^i s^j.
Group dihedral8();
/// Symmetric group on three points as a table.
Group symmetric3();

struct CorpusEntry {
  std::string name;
  Subgroup hidden;
};

/// Groups of order <= 256 with subgroups covering abelian products, mixed
/// primes, and two non-abelian table groups with all of their subgroups.
std::vector<CorpusEntry> promise_corpus(std::uint64_t seed);

}  // namespace hsp::acceptance
