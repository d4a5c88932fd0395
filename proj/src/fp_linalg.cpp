#include "hsp/fp_linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace hsp::fp {

std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw std::domain_error("zero has no inverse mod p");
  // Fermat: a^(p-2)
  std::uint64_t result = 1, base = a % p;
  for (std::uint64_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

std::size_t pivot_column(std::span<const std::uint32_t> row) {
  const auto it = std::find_if(row.begin(), row.end(), [](std::uint32_t v) { return v != 0; });
  return static_cast<std::size_t>(it - row.begin());
}

namespace {

// row -= factor * other
void axpy(Row& row, const Row& other, std::uint32_t factor, std::uint32_t p) {
  if (factor == 0) return;
  const std::uint32_t neg = p - factor;
  for (std::size_t j = 0; j < row.size(); ++j) {
    row[j] = static_cast<std::uint32_t>((row[j] + static_cast<std::uint64_t>(neg) * other[j]) % p);
  }
}

}  // namespace

std::vector<Row> row_reduce(std::vector<Row> rows, std::uint32_t p) {
  if (rows.empty()) return rows;
  const std::size_t width = rows.front().size();
  std::size_t lead = 0;
  for (std::size_t col = 0; col < width && lead < rows.size(); ++col) {
    std::size_t sel = lead;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[lead], rows[sel]);
    const std::uint32_t scale = inv_mod(rows[lead][col], p);
    for (auto& v : rows[lead]) v = mul_mod(v, scale, p);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != lead) axpy(rows[r], rows[lead], rows[r][col], p);
    }
    ++lead;
  }
  rows.resize(lead);
  return rows;
}

void reduce_against(std::span<std::uint32_t> v, const std::vector<Row>& rref, std::uint32_t p) {
  for (const auto& row : rref) {
    const std::size_t c = pivot_column(row);
    const std::uint32_t factor = v[c];
    if (factor == 0) continue;
    const std::uint32_t neg = p - factor;
    for (std::size_t j = c; j < v.size(); ++j) {
      v[j] = static_cast<std::uint32_t>((v[j] + static_cast<std::uint64_t>(neg) * row[j]) % p);
    }
  }
}

std::size_t rank(std::vector<Row> rows, std::uint32_t p) { return row_reduce(std::move(rows), p).size(); }

}  // namespace hsp::fp
