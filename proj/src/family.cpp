#include "hsp/family.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "hsp/errors.hpp"

namespace hsp {

RahspParams gsp_params(std::uint32_t p, unsigned n, unsigned k) { return {{p, n, k}}; }

void validate_rahsp(const RahspParams& params) {
  if (params.empty()) throw DomainError("rAHSP needs at least one component");
  std::set<std::uint32_t> primes;
  for (const auto& c : params) {
    if (!is_prime(c.prime)) throw DomainError(std::to_string(c.prime) + " is not prime");
    if (!primes.insert(c.prime).second) throw DomainError("repeated prime " + std::to_string(c.prime));
    if (c.k < 1 || c.k >= c.n) {
      throw DomainError("rank k=" + std::to_string(c.k) + " must satisfy 1 <= k < n=" + std::to_string(c.n));
    }
  }
}

Group rahsp_group(const RahspParams& params) {
  std::vector<PrimeComponent> comps;
  for (const auto& c : params) comps.push_back({c.prime, c.n});
  return Group::abelian(std::move(comps));
}

Family Family::rahsp(const RahspParams& params) {
  validate_rahsp(params);
  Family f(rahsp_group(params));
  f.kind_ = FamilyKind::RahspRanks;
  f.size_ = 1;
  BigInt index = 1;
  for (const auto& c : params) {
    f.ranks_.push_back(c.k);
    f.subgroup_rank_ = std::max(f.subgroup_rank_, c.k);
    f.size_ *= subgroup_count(c.prime, c.n, c.k);
    index *= pow_big(c.prime, c.n - c.k);
  }
  f.max_index_ = f.min_index_ = index;
  f.indices_ = {index};
  return f;
}

Family Family::explicit_list(std::vector<Subgroup> members) {
  if (members.empty()) throw DomainError("explicit family must be nonempty");
  Family f(members.front().group());
  f.kind_ = FamilyKind::ExplicitList;
  for (auto& h : members) {
    if (!(h.group() == f.group_)) throw StructuralError("family members belong to different groups");
    if (std::find(f.members_.begin(), f.members_.end(), h) == f.members_.end()) f.members_.push_back(std::move(h));
  }
  const BigInt order = f.group_.order();
  std::set<BigInt> indices;
  for (const auto& h : f.members_) {
    f.subgroup_rank_ = std::max(f.subgroup_rank_, h.rank());
    indices.insert(order / h.order());
  }
  f.indices_.assign(indices.begin(), indices.end());
  f.min_index_ = f.indices_.front();
  f.max_index_ = f.indices_.back();
  f.size_ = BigInt(f.members_.size());
  return f;
}

bool Family::contains(const Subgroup& h) const {
  if (!(h.group() == group_)) return false;
  if (kind_ == FamilyKind::ExplicitList) return std::find(members_.begin(), members_.end(), h) != members_.end();
  const auto ks = h.component_ranks();
  return std::equal(ks.begin(), ks.end(), ranks_.begin(), ranks_.end());
}

std::vector<Subgroup> Family::enumerate() const {
  if (kind_ == FamilyKind::ExplicitList) return members_;
  if (size_ > kEnumerationCap) throw CapacityError("family of size " + to_string(size_) + " exceeds enumeration cap");
  const auto comps = group_.components();
  std::vector<std::vector<std::vector<fp::Row>>> per_component;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    per_component.push_back(enumerate_subspace_bases(comps[i].prime, comps[i].exponent, ranks_[i]));
  }
  std::vector<Subgroup> out;
  std::vector<std::size_t> choice(comps.size(), 0);
  for (;;) {
    std::vector<std::vector<fp::Row>> bases;
    for (std::size_t i = 0; i < comps.size(); ++i) bases.push_back(per_component[i][choice[i]]);
    out.push_back(Subgroup::from_component_bases(group_, std::move(bases)));
    std::size_t pos = 0;
    while (pos < choice.size() && ++choice[pos] == per_component[pos].size()) choice[pos++] = 0;
    if (pos == choice.size()) break;
  }
  return out;
}

}  // namespace hsp
