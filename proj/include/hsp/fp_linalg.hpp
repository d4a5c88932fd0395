#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace hsp::fp {

using Row = std::vector<std::uint32_t>;

std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p);
std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p);

/// Column of the first nonzero entry, or row.size() for the zero row.
std::size_t pivot_column(std::span<const std::uint32_t> row);

/// Reduced row echelon basis of the row space of `rows` over F_p: pivots are
/// 1, pivot columns are zero elsewhere, rows sorted by pivot, zero rows
/// dropped. Two inputs span the same space iff the outputs are identical.
std::vector<Row> row_reduce(std::vector<Row> rows, std::uint32_t p);

/// Clears every pivot coordinate of v using the rows of an RREF basis. The
/// result is the canonical representative of v modulo the row space; it is
/// zero iff v lies in the row space.
void reduce_against(std::span<std::uint32_t> v, const std::vector<Row>& rref, std::uint32_t p);

std::size_t rank(std::vector<Row> rows, std::uint32_t p);

}  // namespace hsp::fp
