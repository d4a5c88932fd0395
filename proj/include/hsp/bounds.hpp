#pragma once

#include <cstdint>
#include <optional>

#include "hsp/bigint.hpp"
#include "hsp/family.hpp"

namespace hsp {

/// Closed-form sample-complexity bounds for one parameter set. Values are
/// bare formula values; asymptotic constants are not included.
struct BoundReport {
  double lower = 0;
  double upper = 0;
  std::optional<double> theta;  // set when lower and upper coincide (GSP)
  BigInt group_order;
  BigInt family_size;
  BigInt min_subgroup_order;
  BigInt max_subgroup_order;
  unsigned subgroup_rank = 0;
};

/// Binary entropy in bits; 0 at q = 0 and q = 1.
double binary_entropy(double q);

/// (1 - delta) log2|family| - h(delta): the mutual information any learner
/// with error at most delta must extract. Requires 0 <= delta < 1/2, size >= 2.
double fano_floor(double delta, const BigInt& family_size);

/// max{ min_H log|F| / log(|G|/|H|), min_H sqrt(|G|/|H| * log|F| / log(|G|/|H|)) }
/// with base-2 logs. Members of index 1 contribute no finite term. Requires |F| >= 2.
double lower_bound(const BigInt& group_order, const Family& family);

/// max{ sr, sqrt(max_H |G|/|H| * sr) }. Requires sr >= 1.
double upper_bound(const BigInt& group_order, const Family& family);

/// Same formulas specialised to rAHSP parameters:
/// lower = max{ min_i k_i, min_i sqrt(k_i * prod_j p_j^{n_j-k_j}) },
/// upper = max_i max{ k_i, sqrt(k_i * prod_j p_j^{n_j-k_j}) }.
BoundReport rahsp_bounds(const RahspParams& params);

/// max{ k, sqrt(k * p^{n-k}) }. Requires 1 <= k < n.
double gsp_theta(std::uint32_t p, unsigned n, unsigned k);

}  // namespace hsp
