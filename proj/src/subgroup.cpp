#include "hsp/subgroup.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "hsp/errors.hpp"

namespace hsp {

namespace {

void require_abelian(const Group& g, const char* what) {
  if (!g.is_abelian_product()) throw StructuralError(std::string(what) + " needs a structured abelian group");
}

void require_table(const Group& g, const char* what) {
  if (g.is_abelian_product()) throw StructuralError(std::string(what) + " needs a table group");
}

// Closure of `member` together with `extra` under the group operation.
// `member` must already be a subgroup (or contain only the identity).
std::vector<char> table_closure(const Group& g, std::vector<char> member,
                                std::span<const std::uint32_t> extra) {
  std::vector<std::uint32_t> gens;
  for (std::uint32_t x = 0; x < member.size(); ++x) {
    if (member[x]) gens.push_back(x);
  }
  for (const auto x : extra) {
    gens.push_back(x);
    gens.push_back(g.table_inv(x));
  }
  std::vector<std::uint32_t> frontier;
  for (std::uint32_t x = 0; x < member.size(); ++x) {
    if (member[x]) frontier.push_back(x);
  }
  for (const auto x : extra) {
    if (!member[x]) {
      member[x] = 1;
      frontier.push_back(x);
    }
  }
  while (!frontier.empty()) {
    const std::uint32_t x = frontier.back();
    frontier.pop_back();
    for (const auto s : gens) {
      const std::uint32_t y = g.table_mul(x, s);
      if (!member[y]) {
        member[y] = 1;
        frontier.push_back(y);
      }
    }
  }
  return member;
}

std::vector<char> identity_only(const Group& g) {
  std::vector<char> member(g.table_order(), 0);
  member[g.identity().index()] = 1;
  return member;
}

}  // namespace

void Subgroup::finish_abelian() {
  component_ranks_.clear();
  order_ = 1;
  const auto comps = group_.components();
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const auto k = static_cast<unsigned>(bases_[i].size());
    component_ranks_.push_back(k);
    order_ *= pow_big(comps[i].prime, k);
  }
}

Subgroup Subgroup::from_closed_set(const Group& g, const std::vector<char>& member) {
  Subgroup h(g);
  h.member_ = member;
  for (std::uint32_t x = 0; x < member.size(); ++x) {
    if (member[x]) h.elements_.push_back(x);
  }
  h.order_ = BigInt(h.elements_.size());
  return h;
}

Subgroup Subgroup::trivial(const Group& g) {
  if (g.is_abelian_product()) {
    Subgroup h(g);
    h.bases_.assign(g.components().size(), {});
    h.finish_abelian();
    return h;
  }
  return from_closed_set(g, identity_only(g));
}

Subgroup Subgroup::whole(const Group& g) {
  if (g.is_abelian_product()) {
    std::vector<std::vector<fp::Row>> bases;
    for (const auto& c : g.components()) {
      std::vector<fp::Row> rows;
      for (unsigned j = 0; j < c.exponent; ++j) {
        fp::Row r(c.exponent, 0);
        r[j] = 1;
        rows.push_back(std::move(r));
      }
      bases.push_back(std::move(rows));
    }
    return from_component_bases(g, std::move(bases));
  }
  return from_closed_set(g, std::vector<char>(g.table_order(), 1));
}

Subgroup Subgroup::span(const Group& g, std::span<const GroupElement> generators) {
  for (const auto& x : generators) g.check(x);
  if (g.is_abelian_product()) {
    // The projections of the generators onto each prime component generate
    // the component projections of <W>, and <W> is the product of those
    // because the component orders are coprime.
    const auto comps = g.components();
    std::vector<std::vector<fp::Row>> bases(comps.size());
    for (std::size_t i = 0; i < comps.size(); ++i) {
      const auto lo = g.component_offset(i);
      const auto hi = g.component_offset(i + 1);
      for (const auto& x : generators) {
        fp::Row r(x.coords().begin() + lo, x.coords().begin() + hi);
        if (fp::pivot_column(r) < r.size()) bases[i].push_back(std::move(r));
      }
    }
    return from_component_bases(g, std::move(bases));
  }
  std::vector<std::uint32_t> extra;
  for (const auto& x : generators) extra.push_back(x.index());
  return from_closed_set(g, table_closure(g, identity_only(g), extra));
}

Subgroup Subgroup::from_component_bases(const Group& g, std::vector<std::vector<fp::Row>> bases) {
  require_abelian(g, "from_component_bases");
  const auto comps = g.components();
  if (bases.size() != comps.size()) throw StructuralError("one basis per component required");
  Subgroup h(g);
  for (std::size_t i = 0; i < comps.size(); ++i) {
    for (const auto& r : bases[i]) {
      if (r.size() != comps[i].exponent) throw StructuralError("basis row length differs from component exponent");
      for (const auto v : r) {
        if (v >= comps[i].prime) throw StructuralError("basis residue not reduced mod p");
      }
    }
    h.bases_.push_back(fp::row_reduce(std::move(bases[i]), comps[i].prime));
  }
  h.finish_abelian();
  return h;
}

Subgroup Subgroup::from_elements(const Group& g, std::vector<std::uint32_t> elements) {
  require_table(g, "from_elements");
  std::vector<char> member(g.table_order(), 0);
  for (const auto x : elements) {
    if (x >= member.size()) throw StructuralError("subgroup element index out of range");
    member[x] = 1;
  }
  if (!member[g.identity().index()]) throw StructuralError("subgroup must contain the identity");
  for (std::uint32_t a = 0; a < member.size(); ++a) {
    if (!member[a]) continue;
    if (!member[g.table_inv(a)]) throw StructuralError("subgroup not closed under inverses");
    for (std::uint32_t b = 0; b < member.size(); ++b) {
      if (member[b] && !member[g.table_mul(a, b)]) throw StructuralError("subgroup not closed under products");
    }
  }
  return from_closed_set(g, member);
}

bool Subgroup::contains(const GroupElement& x) const {
  group_.check(x);
  if (!group_.is_abelian_product()) return member_[x.index()] != 0;
  const auto rep = coset_representative(x);
  return std::all_of(rep.coords().begin(), rep.coords().end(), [](std::uint32_t v) { return v == 0; });
}

GroupElement Subgroup::coset_representative(const GroupElement& x) const {
  group_.check(x);
  if (group_.is_abelian_product()) {
    std::vector<std::uint32_t> v(x.coords().begin(), x.coords().end());
    const auto comps = group_.components();
    for (std::size_t i = 0; i < comps.size(); ++i) {
      const auto lo = group_.component_offset(i);
      const auto hi = group_.component_offset(i + 1);
      fp::reduce_against(std::span<std::uint32_t>(v).subspan(lo, hi - lo), bases_[i], comps[i].prime);
    }
    return GroupElement(std::move(v));
  }
  std::uint32_t best = static_cast<std::uint32_t>(group_.table_order());
  for (const auto h : elements_) best = std::min(best, group_.table_mul(x.index(), h));
  return GroupElement({best});
}

unsigned Subgroup::rank() const {
  if (group_.is_abelian_product()) {
    unsigned r = 0;
    for (const auto k : component_ranks_) r = std::max(r, k);
    return r;
  }
  if (elements_.size() == 1) return 0;
  if (elements_.size() > 256) throw CapacityError("table subgroup rank search is limited to 256 elements");
  // Level r holds the distinct subgroups generated by r elements of H.
  std::set<std::vector<char>> seen;
  std::vector<std::vector<char>> level{identity_only(group_)};
  seen.insert(level.front());
  for (unsigned r = 1;; ++r) {
    std::vector<std::vector<char>> next;
    for (const auto& k : level) {
      for (const auto h : elements_) {
        if (k[h]) continue;
        const std::uint32_t extra[] = {h};
        auto c = table_closure(group_, k, extra);
        if (c == member_) return r;
        if (seen.insert(c).second) next.push_back(std::move(c));
      }
    }
    level = std::move(next);
  }
}

std::vector<GroupElement> Subgroup::generators() const {
  std::vector<GroupElement> out;
  if (group_.is_abelian_product()) {
    for (std::size_t i = 0; i < bases_.size(); ++i) {
      for (const auto& row : bases_[i]) {
        std::vector<std::uint32_t> v(group_.element_width(), 0);
        std::copy(row.begin(), row.end(), v.begin() + static_cast<std::ptrdiff_t>(group_.component_offset(i)));
        out.emplace_back(std::move(v));
      }
    }
    return out;
  }
  for (const auto x : elements_) out.push_back(GroupElement({x}));
  return out;
}

bool Subgroup::is_subgroup_of(const Subgroup& other) const {
  if (!(group_ == other.group_)) return false;
  for (const auto& x : generators()) {
    if (!other.contains(x)) return false;
  }
  return true;
}

bool operator==(const Subgroup& a, const Subgroup& b) {
  return a.group_ == b.group_ && a.bases_ == b.bases_ && a.elements_ == b.elements_;
}

BigInt subgroup_index(const Group& g, const Subgroup& h) {
  if (!(g == h.group())) throw StructuralError("subgroup belongs to a different group");
  return g.order() / h.order();
}

BigInt subgroup_count(std::uint32_t p, unsigned n, unsigned k) {
  if (k > n) throw DomainError("subgroup rank k exceeds n");
  BigInt num = 1, den = 1;
  const BigInt pn = pow_big(p, n), pk = pow_big(p, k);
  for (unsigned j = 0; j < k; ++j) {
    const BigInt pj = pow_big(p, j);
    num *= pn - pj;
    den *= pk - pj;
  }
  return num / den;
}

namespace {

void check_rank_params(std::uint32_t p, unsigned n, unsigned k) {
  if (!is_prime(p)) throw DomainError("p must be prime");
  if (k < 1 || k >= n) throw DomainError("rank k must satisfy 1 <= k < n");
}

}  // namespace

std::vector<fp::Row> random_subspace_basis(std::uint32_t p, unsigned n, unsigned k, RngStream& rng) {
  // Every k-dimensional subspace has the same number of ordered bases, so the
  // column space of a uniform full-rank matrix is uniform over subspaces.
  for (;;) {
    std::vector<fp::Row> cols(k, fp::Row(n));
    for (auto& c : cols) {
      for (auto& v : c) v = static_cast<std::uint32_t>(rng.uniform_below(p));
    }
    auto reduced = fp::row_reduce(cols, p);
    if (reduced.size() == k) return reduced;
  }
}

Subgroup uniform_random_subgroup(std::uint32_t p, unsigned n, unsigned k, RngStream& rng) {
  check_rank_params(p, n, k);
  const auto g = Group::abelian({{p, n}});
  return Subgroup::from_component_bases(g, {random_subspace_basis(p, n, k, rng)});
}

std::vector<std::vector<fp::Row>> enumerate_subspace_bases(std::uint32_t p, unsigned n, unsigned k) {
  if (k > n) throw DomainError("subgroup rank k exceeds n");
  if (subgroup_count(p, n, k) > kEnumerationCap) {
    throw CapacityError("enumeration of rank-" + std::to_string(k) + " subgroups of Z_" + std::to_string(p) +
                        "^" + std::to_string(n) + " exceeds cap");
  }
  std::vector<std::vector<fp::Row>> out;
  std::vector<unsigned> pivots(k);
  for (unsigned i = 0; i < k; ++i) pivots[i] = i;

  for (;;) {
    // Free entries: row r, column c > pivots[r], c not a pivot column.
    std::vector<std::pair<unsigned, unsigned>> free;
    std::vector<char> is_pivot(n, 0);
    for (const auto c : pivots) is_pivot[c] = 1;
    for (unsigned r = 0; r < k; ++r) {
      for (unsigned c = pivots[r] + 1; c < n; ++c) {
        if (!is_pivot[c]) free.emplace_back(r, c);
      }
    }
    std::vector<std::uint32_t> digits(free.size(), 0);
    for (;;) {
      std::vector<fp::Row> basis(k, fp::Row(n, 0));
      for (unsigned r = 0; r < k; ++r) basis[r][pivots[r]] = 1;
      for (std::size_t f = 0; f < free.size(); ++f) basis[free[f].first][free[f].second] = digits[f];
      out.push_back(std::move(basis));
      std::size_t pos = 0;
      while (pos < digits.size() && ++digits[pos] == p) digits[pos++] = 0;
      if (pos == digits.size()) break;
    }
    // Next pivot combination.
    int i = static_cast<int>(k) - 1;
    while (i >= 0 && pivots[static_cast<unsigned>(i)] == n - k + static_cast<unsigned>(i)) --i;
    if (i < 0) break;
    ++pivots[static_cast<unsigned>(i)];
    for (auto j = static_cast<unsigned>(i) + 1; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
  }
  return out;
}

std::vector<Subgroup> enumerate_subgroups(std::uint32_t p, unsigned n, unsigned k) {
  if (!is_prime(p)) throw DomainError("p must be prime");
  const auto g = Group::abelian({{p, n}});
  std::vector<Subgroup> out;
  for (auto& b : enumerate_subspace_bases(p, n, k)) out.push_back(Subgroup::from_component_bases(g, {std::move(b)}));
  return out;
}

std::vector<Subgroup> enumerate_table_subgroups(const Group& g, const BigInt* order_filter) {
  require_table(g, "enumerate_table_subgroups");
  std::set<std::vector<char>> seen;
  std::vector<std::vector<char>> queue{identity_only(g)};
  seen.insert(queue.front());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto k = queue[head];
    for (std::uint32_t x = 0; x < k.size(); ++x) {
      if (k[x]) continue;
      const std::uint32_t extra[] = {x};
      auto c = table_closure(g, k, extra);
      if (seen.insert(c).second) queue.push_back(std::move(c));
    }
  }
  std::vector<Subgroup> out;
  for (const auto& m : queue) {
    std::vector<std::uint32_t> elems;
    for (std::uint32_t x = 0; x < m.size(); ++x) {
      if (m[x]) elems.push_back(x);
    }
    auto h = Subgroup::from_elements(g, std::move(elems));
    if (order_filter == nullptr || h.order() == *order_filter) out.push_back(std::move(h));
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return std::lexicographical_compare(a.elements().begin(), a.elements().end(), b.elements().begin(),
                                        b.elements().end());
  });
  return out;
}

Group direct_product(const Group& a, const Group& b) {
  if (a.is_abelian_product() && b.is_abelian_product()) {
    std::vector<PrimeComponent> comps(a.components().begin(), a.components().end());
    comps.insert(comps.end(), b.components().begin(), b.components().end());
    try {
      return Group::abelian(std::move(comps));
    } catch (const DomainError&) {
      // shared prime: fall through to a table
    }
  }
  const Group ta = materialize_table(a), tb = materialize_table(b);
  const std::size_t na = ta.table_order(), nb = tb.table_order();
  if (na * nb > kMaxTableOrder) throw CapacityError("direct product too large for a table group");
  std::vector<std::vector<std::uint32_t>> rows(na * nb, std::vector<std::uint32_t>(na * nb));
  for (std::uint32_t x = 0; x < na * nb; ++x) {
    for (std::uint32_t y = 0; y < na * nb; ++y) {
      const auto first = ta.table_mul(static_cast<std::uint32_t>(x / nb), static_cast<std::uint32_t>(y / nb));
      const auto second = tb.table_mul(static_cast<std::uint32_t>(x % nb), static_cast<std::uint32_t>(y % nb));
      rows[x][y] = static_cast<std::uint32_t>(first * nb + second);
    }
  }
  return Group::table(rows);
}

Subgroup direct_product(const Subgroup& a, const Subgroup& b) {
  const Group g = direct_product(a.group(), b.group());
  if (g.is_abelian_product()) {
    std::vector<std::vector<fp::Row>> bases;
    for (std::size_t i = 0; i < a.component_ranks().size(); ++i) bases.push_back(a.basis(i));
    for (std::size_t i = 0; i < b.component_ranks().size(); ++i) bases.push_back(b.basis(i));
    return Subgroup::from_component_bases(g, std::move(bases));
  }
  auto table_indices = [](const Subgroup& h) {
    std::vector<std::uint64_t> out;
    if (h.group().is_abelian_product()) {
      for (const auto& x : h.group().elements()) {
        if (h.contains(x)) out.push_back(h.group().index_of(x));
      }
    } else {
      out.assign(h.elements().begin(), h.elements().end());
    }
    return out;
  };
  const auto ia = table_indices(a), ib = table_indices(b);
  const std::uint64_t nb = b.group().order().convert_to<std::uint64_t>();
  std::vector<std::uint32_t> elems;
  for (const auto x : ia) {
    for (const auto y : ib) elems.push_back(static_cast<std::uint32_t>(x * nb + y));
  }
  return Subgroup::from_elements(g, std::move(elems));
}

}  // namespace hsp
