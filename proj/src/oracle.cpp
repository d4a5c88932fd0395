#include "hsp/oracle.hpp"

#include "hsp/errors.hpp"

namespace hsp {

HspInstance::HspInstance(Subgroup hidden, Family family, std::uint64_t label_salt)
    : hidden_(std::move(hidden)), family_(std::move(family)), salt_(label_salt) {
  if (!family_.contains(hidden_)) throw DomainError("hidden subgroup is not a member of the family");
  if (subgroup_index(group(), hidden_) > kMaxCosetCount) {
    throw CapacityError("more than 2^30 cosets; 64-bit labels would risk collisions");
  }
}

Label HspInstance::label(const GroupElement& x) const {
  const auto rep = hidden_.coset_representative(x);
  std::uint64_t h = splitmix64(salt_);
  for (const auto v : rep.coords()) h = splitmix64(h ^ v);
  return h;
}

Label coset_label(const HspInstance& inst, const GroupElement& x) { return inst.label(x); }

Example MeteredSampler::draw() {
  Example e;
  e.point = inst_->group().uniform_element(rng_);
  e.label = inst_->label(e.point);
  ++draws_;
  if (record_) history_.push_back(e);
  return e;
}

std::vector<Example> MeteredSampler::draw_many(std::size_t count) {
  std::vector<Example> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(draw());
  return out;
}

HspInstance random_instance(const RahspParams& params, RngStream& rng) {
  auto family = Family::rahsp(params);
  std::vector<std::vector<fp::Row>> bases;
  for (const auto& c : params) bases.push_back(random_subspace_basis(c.prime, c.n, c.k, rng));
  auto hidden = Subgroup::from_component_bases(family.group(), std::move(bases));
  const std::uint64_t salt = rng.next_u64();
  return HspInstance(std::move(hidden), std::move(family), salt);
}

HspInstance random_instance(const RahspParams& params, std::uint64_t seed) {
  RngStream rng(seed);
  return random_instance(params, rng);
}

}  // namespace hsp
