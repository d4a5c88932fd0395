#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hsp {

using BigInt = boost::multiprecision::cpp_int;

BigInt pow_big(std::uint64_t base, unsigned exponent);

/// log2 of a positive integer, accurate to double precision for any size.
double log2_big(const BigInt& x);

/// Nearest double; saturates to +inf for values beyond the double range.
double to_double(const BigInt& x);

/// Smallest r with r*r >= x.
BigInt ceil_sqrt(const BigInt& x);

std::string to_string(const BigInt& x);

}  // namespace hsp
