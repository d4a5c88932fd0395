#include "hsp/group.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "hsp/errors.hpp"

namespace hsp {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Group Group::abelian(std::vector<PrimeComponent> components) {
  if (components.empty()) throw DomainError("abelian group needs at least one component");
  std::set<std::uint32_t> seen;
  Group g;
  g.kind_ = GroupKind::StructuredAbelian;
  std::size_t offset = 0;
  for (const auto& c : components) {
    if (c.prime >= (1u << 31) || !is_prime(c.prime)) {
      throw DomainError("component modulus " + std::to_string(c.prime) + " is not a prime below 2^31");
    }
    if (c.exponent < 1) throw DomainError("component exponent must be >= 1");
    if (!seen.insert(c.prime).second) {
      throw DomainError("prime " + std::to_string(c.prime) + " appears in two components");
    }
    g.offsets_.push_back(offset);
    offset += c.exponent;
  }
  g.offsets_.push_back(offset);
  g.components_ = std::move(components);
  return g;
}

namespace {

// Light's associativity test: if (x g) y == x (g y) for all x, y and every g
// in a set generating the magma under multiplication, the operation is
// associative.
bool light_associative(std::size_t n, const std::vector<std::uint32_t>& mul) {
  auto at = [&](std::uint32_t a, std::uint32_t b) { return mul[a * n + b]; };
  std::vector<std::uint32_t> gens;
  std::vector<char> reached(n, 0);
  std::vector<std::uint32_t> frontier;
  auto add = [&](std::uint32_t x) {
    if (!reached[x]) {
      reached[x] = 1;
      frontier.push_back(x);
    }
  };
  for (std::uint32_t cand = 0; cand < n; ++cand) {
    if (reached[cand]) continue;
    gens.push_back(cand);
    std::fill(reached.begin(), reached.end(), 0);
    for (const std::uint32_t s : gens) add(s);
    while (!frontier.empty()) {
      const std::uint32_t x = frontier.back();
      frontier.pop_back();
      for (const std::uint32_t s : gens) {
        add(at(x, s));
        add(at(s, x));
      }
    }
  }
  for (const std::uint32_t g : gens) {
    for (std::uint32_t x = 0; x < n; ++x) {
      for (std::uint32_t y = 0; y < n; ++y) {
        if (at(at(x, g), y) != at(x, at(g, y))) return false;
      }
    }
  }
  return true;
}

}  // namespace

Group Group::table(const std::vector<std::vector<std::uint32_t>>& rows) {
  const std::size_t n = rows.size();
  if (n == 0) throw StructuralError("table group must have at least one element");
  if (n > kMaxTableOrder) {
    throw CapacityError("table group of order " + std::to_string(n) + " exceeds cap " +
                        std::to_string(kMaxTableOrder));
  }
  Table t;
  t.order = n;
  t.mul.reserve(n * n);
  for (const auto& row : rows) {
    if (row.size() != n) throw StructuralError("table row length differs from table order");
    for (const auto v : row) {
      if (v >= n) throw StructuralError("table entry out of range");
      t.mul.push_back(v);
    }
  }
  auto at = [&](std::size_t a, std::size_t b) { return t.mul[a * n + b]; };

  bool found_identity = false;
  for (std::uint32_t e = 0; e < n && !found_identity; ++e) {
    bool ok = true;
    for (std::uint32_t x = 0; x < n && ok; ++x) ok = at(e, x) == x && at(x, e) == x;
    if (ok) {
      t.identity = e;
      found_identity = true;
    }
  }
  if (!found_identity) throw StructuralError("table has no identity element");

  t.inv.assign(n, 0);
  for (std::uint32_t x = 0; x < n; ++x) {
    const auto* row = &t.mul[x * n];
    const auto it = std::find(row, row + n, t.identity);
    if (it == row + n) throw StructuralError("element " + std::to_string(x) + " has no inverse");
    const auto y = static_cast<std::uint32_t>(it - row);
    if (at(y, x) != t.identity) throw StructuralError("left and right inverses differ");
    t.inv[x] = y;
  }

  if (n <= 256) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (at(at(a, b), c) != at(a, at(b, c))) throw StructuralError("table is not associative");
  } else if (!light_associative(n, t.mul)) {
    throw StructuralError("table is not associative");
  }

  Group g;
  g.kind_ = GroupKind::Table;
  g.table_ = std::make_shared<const Table>(std::move(t));
  return g;
}

std::size_t Group::element_width() const {
  return kind_ == GroupKind::Table ? 1 : offsets_.back();
}

std::size_t Group::table_order() const {
  if (kind_ != GroupKind::Table) throw StructuralError("not a table group");
  return table_->order;
}

GroupElement Group::identity() const {
  if (kind_ == GroupKind::Table) return GroupElement({table_->identity});
  return GroupElement(std::vector<std::uint32_t>(element_width(), 0));
}

bool Group::is_valid(const GroupElement& a) const {
  if (a.size() != element_width()) return false;
  if (kind_ == GroupKind::Table) return a.index() < table_->order;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    for (std::size_t j = offsets_[i]; j < offsets_[i + 1]; ++j) {
      if (a[j] >= components_[i].prime) return false;
    }
  }
  return true;
}

void Group::check(const GroupElement& a) const {
  if (!is_valid(a)) throw StructuralError("element does not belong to the group");
}

GroupElement Group::mul(const GroupElement& a, const GroupElement& b) const {
  check(a);
  check(b);
  if (kind_ == GroupKind::Table) return GroupElement({table_->mul[a.index() * table_->order + b.index()]});
  std::vector<std::uint32_t> out(a.size());
  for (std::size_t i = 0; i < components_.size(); ++i) {
    const std::uint32_t p = components_[i].prime;
    for (std::size_t j = offsets_[i]; j < offsets_[i + 1]; ++j) {
      const std::uint32_t s = a[j] + b[j];
      out[j] = s >= p ? s - p : s;
    }
  }
  return GroupElement(std::move(out));
}

GroupElement Group::inv(const GroupElement& a) const {
  check(a);
  if (kind_ == GroupKind::Table) return GroupElement({table_->inv[a.index()]});
  std::vector<std::uint32_t> out(a.size());
  for (std::size_t i = 0; i < components_.size(); ++i) {
    const std::uint32_t p = components_[i].prime;
    for (std::size_t j = offsets_[i]; j < offsets_[i + 1]; ++j) out[j] = a[j] == 0 ? 0 : p - a[j];
  }
  return GroupElement(std::move(out));
}

GroupElement Group::quotient(const GroupElement& a, const GroupElement& b) const {
  return mul(inv(a), b);
}

BigInt Group::order() const {
  if (kind_ == GroupKind::Table) return BigInt(table_->order);
  BigInt result = 1;
  for (const auto& c : components_) result *= pow_big(c.prime, c.exponent);
  return result;
}

GroupElement Group::uniform_element(RngStream& rng) const {
  if (kind_ == GroupKind::Table) {
    return GroupElement({static_cast<std::uint32_t>(rng.uniform_below(table_->order))});
  }
  std::vector<std::uint32_t> out(element_width());
  for (std::size_t i = 0; i < components_.size(); ++i) {
    for (std::size_t j = offsets_[i]; j < offsets_[i + 1]; ++j) {
      out[j] = static_cast<std::uint32_t>(rng.uniform_below(components_[i].prime));
    }
  }
  return GroupElement(std::move(out));
}

std::uint64_t Group::small_order() const {
  const BigInt n = order();
  if (n > (BigInt(1) << 32)) throw CapacityError("group of order " + to_string(n) + " is too large to index");
  return n.convert_to<std::uint64_t>();
}

std::uint64_t Group::index_of(const GroupElement& a) const {
  check(a);
  if (kind_ == GroupKind::Table) return a.index();
  small_order();
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    for (std::size_t j = offsets_[i]; j < offsets_[i + 1]; ++j) idx = idx * components_[i].prime + a[j];
  }
  return idx;
}

GroupElement Group::element_at(std::uint64_t index) const {
  const std::uint64_t n = small_order();
  if (index >= n) throw StructuralError("element index out of range");
  if (kind_ == GroupKind::Table) return GroupElement({static_cast<std::uint32_t>(index)});
  std::vector<std::uint32_t> out(element_width());
  for (std::size_t i = components_.size(); i-- > 0;) {
    for (std::size_t j = offsets_[i + 1]; j-- > offsets_[i];) {
      out[j] = static_cast<std::uint32_t>(index % components_[i].prime);
      index /= components_[i].prime;
    }
  }
  return GroupElement(std::move(out));
}

std::vector<GroupElement> Group::elements(std::uint64_t cap) const {
  const std::uint64_t n = small_order();
  if (n > cap) throw CapacityError("group of order " + std::to_string(n) + " exceeds enumeration cap");
  std::vector<GroupElement> out;
  out.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(element_at(i));
  return out;
}

std::uint32_t Group::table_mul(std::uint32_t a, std::uint32_t b) const {
  return table_->mul[a * table_->order + b];
}

std::uint32_t Group::table_inv(std::uint32_t a) const { return table_->inv[a]; }

bool operator==(const Group& a, const Group& b) {
  if (a.kind_ != b.kind_) return false;
  if (a.kind_ == GroupKind::StructuredAbelian) return a.components_ == b.components_;
  if (a.table_ == b.table_) return true;
  return a.table_->mul == b.table_->mul;
}

Group materialize_table(const Group& g) {
  if (!g.is_abelian_product()) return g;
  if (g.order() > kMaxTableOrder) throw CapacityError("group too large to materialize as a table");
  const auto elems = g.elements();
  std::vector<std::vector<std::uint32_t>> rows(elems.size(), std::vector<std::uint32_t>(elems.size()));
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j < elems.size(); ++j) {
      rows[i][j] = static_cast<std::uint32_t>(g.index_of(g.mul(elems[i], elems[j])));
    }
  }
  return Group::table(rows);
}

}  // namespace hsp
