#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hsp/family.hpp"
#include "hsp/group.hpp"
#include "hsp/rng.hpp"
#include "hsp/subgroup.hpp"

namespace hsp {

/// Opaque value of the hidden function f. Only equality is meaningful.
using Label = std::uint64_t;

/// Labels are 64-bit hashes of coset representatives; instances with more
/// than 2^30 cosets are refused so accidental label collisions stay negligible.
inline constexpr std::uint64_t kMaxCosetCount = std::uint64_t{1} << 30;

/// A hidden-subgroup instance: group G, hidden H, the family the learner is
/// told about, and the salt that makes f's values opaque.
class HspInstance {
 public:
  /// Throws DomainError if `hidden` is not a member of `family`, and
  /// CapacityError if |G|/|H| exceeds kMaxCosetCount.
  HspInstance(Subgroup hidden, Family family, std::uint64_t label_salt);

  const Group& group() const { return hidden_.group(); }
  const Subgroup& hidden() const { return hidden_; }
  const Family& family() const { return family_; }
  std::uint64_t label_salt() const { return salt_; }

  /// f(x): constant on each left coset xH, distinct across cosets.
  Label label(const GroupElement& x) const;

 private:
  Subgroup hidden_;
  Family family_;
  std::uint64_t salt_;
};

Label coset_label(const HspInstance& inst, const GroupElement& x);

/// A uniform example (x, f(x)).
struct Example {
  GroupElement point;
  Label label = 0;
};

/// The learner's only channel to f: draws i.i.d. uniform examples and counts them.
class MeteredSampler {
 public:
  MeteredSampler(const HspInstance& inst, RngStream rng, bool record_history = false)
      : inst_(&inst), rng_(std::move(rng)), record_(record_history) {}

  Example draw();
  std::vector<Example> draw_many(std::size_t count);

  std::uint64_t draws() const { return draws_; }
  /// Every example drawn so far, when constructed with record_history.
  std::span<const Example> history() const { return history_; }
  const HspInstance& instance() const { return *inst_; }

 private:
  const HspInstance* inst_;
  RngStream rng_;
  bool record_;
  std::uint64_t draws_ = 0;
  std::vector<Example> history_;
};

/// Random rAHSP instance: hidden = product of independent uniform rank-k_i
/// subgroups, family = RahspRanks, salt drawn from the same stream.
HspInstance random_instance(const RahspParams& params, RngStream& rng);
HspInstance random_instance(const RahspParams& params, std::uint64_t seed);

}  // namespace hsp
