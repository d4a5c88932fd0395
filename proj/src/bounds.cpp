#include "hsp/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hsp/errors.hpp"

namespace hsp {

namespace {

// sqrt(k * x) for a big integer x; goes through log2 once x leaves the double range.
double sqrt_scaled(double k, const BigInt& x) {
  const double xd = to_double(x);
  if (std::isfinite(xd) && std::isfinite(k * xd)) return std::sqrt(k * xd);
  return std::exp2(0.5 * (std::log2(k) + log2_big(x)));
}

}  // namespace

double binary_entropy(double q) {
  if (!(q >= 0.0 && q <= 1.0)) throw DomainError("entropy argument must lie in [0, 1]");
  if (q == 0.0 || q == 1.0) return 0.0;
  return -q * std::log2(q) - (1.0 - q) * std::log2(1.0 - q);
}

double fano_floor(double delta, const BigInt& family_size) {
  if (!(delta >= 0.0 && delta < 0.5)) throw DomainError("delta must lie in [0, 1/2)");
  if (family_size < 2) throw DomainError("family must have at least two members");
  return (1.0 - delta) * log2_big(family_size) - binary_entropy(delta);
}

double lower_bound(const BigInt& group_order, const Family& family) {
  if (family.size() < 2) throw DomainError("lower bound needs a family with at least two members");
  if (!(family.group().order() == group_order)) throw DomainError("group order does not match the family");
  const double log_family = log2_big(family.size());
  double first = std::numeric_limits<double>::infinity();
  double second = std::numeric_limits<double>::infinity();
  for (const auto& index : family.indices()) {
    if (index <= 1) continue;
    const double ratio = log_family / log2_big(index);
    first = std::min(first, ratio);
    second = std::min(second, sqrt_scaled(ratio, index));
  }
  return std::max(first, second);
}

double upper_bound(const BigInt& group_order, const Family& family) {
  if (!(family.group().order() == group_order)) throw DomainError("group order does not match the family");
  const unsigned sr = family.subgroup_rank();
  if (sr < 1) throw DomainError("upper bound needs sr >= 1");
  return std::max(static_cast<double>(sr), sqrt_scaled(sr, family.max_index()));
}

BoundReport rahsp_bounds(const RahspParams& params) {
  validate_rahsp(params);
  BoundReport r;
  BigInt index = 1;
  r.group_order = 1;
  r.family_size = 1;
  r.min_subgroup_order = 1;
  unsigned min_k = std::numeric_limits<unsigned>::max();
  for (const auto& c : params) {
    index *= pow_big(c.prime, c.n - c.k);
    r.group_order *= pow_big(c.prime, c.n);
    r.min_subgroup_order *= pow_big(c.prime, c.k);
    r.family_size *= subgroup_count(c.prime, c.n, c.k);
    r.subgroup_rank = std::max(r.subgroup_rank, c.k);
    min_k = std::min(min_k, c.k);
  }
  // Every member of an rAHSP family has the same order.
  r.max_subgroup_order = r.min_subgroup_order;

  double min_sqrt = std::numeric_limits<double>::infinity();
  double max_term = 0;
  for (const auto& c : params) {
    const double s = sqrt_scaled(c.k, index);
    min_sqrt = std::min(min_sqrt, s);
    max_term = std::max({max_term, static_cast<double>(c.k), s});
  }
  r.lower = std::max(static_cast<double>(min_k), min_sqrt);
  r.upper = max_term;
  if (params.size() == 1) r.theta = gsp_theta(params[0].prime, params[0].n, params[0].k);
  return r;
}

double gsp_theta(std::uint32_t p, unsigned n, unsigned k) {
  validate_rahsp(gsp_params(p, n, k));
  return std::max(static_cast<double>(k), sqrt_scaled(k, pow_big(p, n - k)));
}

}  // namespace hsp
