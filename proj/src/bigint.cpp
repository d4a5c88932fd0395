#include "hsp/bigint.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace hsp {

BigInt pow_big(std::uint64_t base, unsigned exponent) {
  return boost::multiprecision::pow(BigInt(base), exponent);
}

double log2_big(const BigInt& x) {
  if (x <= 0) throw std::domain_error("log2 of non-positive integer");
  const unsigned top = boost::multiprecision::msb(x);
  if (top < 1000) return std::log2(x.convert_to<double>());
  // Keep 64 leading bits; the rest only affects digits below double precision.
  const unsigned shift = top - 63;
  const BigInt head = x >> shift;
  return std::log2(head.convert_to<double>()) + static_cast<double>(shift);
}

double to_double(const BigInt& x) {
  if (x > 0 && boost::multiprecision::msb(x) >= 1024) {
    return std::numeric_limits<double>::infinity();
  }
  return x.convert_to<double>();
}

BigInt ceil_sqrt(const BigInt& x) {
  if (x < 0) throw std::domain_error("sqrt of negative integer");
  BigInt r = boost::multiprecision::sqrt(x);
  if (r * r < x) ++r;
  return r;
}

std::string to_string(const BigInt& x) { return x.str(); }

}  // namespace hsp
