#include "hsp/text_format.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "hsp/errors.hpp"

namespace hsp {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    const auto pos = s.find(sep);
    out.push_back(trim(s.substr(0, pos)));
    if (pos == std::string_view::npos) break;
    s.remove_prefix(pos + 1);
  }
  return out;
}

std::vector<std::string_view> words(std::string_view s) {
  std::vector<std::string_view> out;
  for (const auto w : split(s, ' ')) {
    if (!w.empty()) out.push_back(w);
  }
  return out;
}

template <typename T>
T parse_number(std::string_view s, std::string_view what) {
  T value{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw StructuralError("cannot parse " + std::string(what) + " from '" + std::string(s) + "'");
  }
  return value;
}

// Value of `key=` in a whitespace-separated token.
std::string_view keyed(std::string_view token, std::string_view key) {
  if (token.size() <= key.size() || token.substr(0, key.size()) != key || token[key.size()] != '=') {
    throw StructuralError("expected '" + std::string(key) + "=...', got '" + std::string(token) + "'");
  }
  return token.substr(key.size() + 1);
}

class LineReader {
 public:
  explicit LineReader(std::string_view text) {
    for (const auto raw : split(text, '\n')) {
      const auto line = trim(raw);
      if (!line.empty() && line.front() != '#') lines_.push_back(line);
    }
  }
  bool done() const { return pos_ >= lines_.size(); }
  std::string_view peek() const { return done() ? std::string_view{} : lines_[pos_]; }
  std::string_view next() {
    if (done()) throw StructuralError("unexpected end of input");
    return lines_[pos_++];
  }

 private:
  std::vector<std::string_view> lines_;
  std::size_t pos_ = 0;
};

bool starts_with_word(std::string_view line, std::string_view word) {
  const auto w = words(line);
  return !w.empty() && w.front() == word;
}

Group read_group(LineReader& in) {
  const auto head = words(in.next());
  if (head.size() == 1 && head[0] == "abelian") {
    std::vector<PrimeComponent> comps;
    while (!in.done() && starts_with_word(in.peek(), "component")) {
      const auto w = words(in.next());
      if (w.size() != 3) throw StructuralError("component line needs p= and n=");
      comps.push_back({parse_number<std::uint32_t>(keyed(w[1], "p"), "prime"),
                       parse_number<unsigned>(keyed(w[2], "n"), "exponent")});
    }
    return Group::abelian(std::move(comps));
  }
  if (head.size() == 2 && head[0] == "table") {
    const auto n = parse_number<std::size_t>(keyed(head[1], "n"), "table order");
    if (n > kMaxTableOrder) throw CapacityError("table group exceeds the order cap");
    std::vector<std::vector<std::uint32_t>> rows;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::uint32_t> row;
      for (const auto w : words(in.next())) row.push_back(parse_number<std::uint32_t>(w, "table entry"));
      rows.push_back(std::move(row));
    }
    return Group::table(rows);
  }
  throw StructuralError("group section must start with 'abelian' or 'table n=<N>'");
}

Subgroup read_subgroup(const Group& g, LineReader& in) {
  const auto head = words(in.next());
  if (head.size() != 2 || head[0] != "hidden") throw StructuralError("subgroup section must start with 'hidden'");
  if (g.is_abelian_product()) {
    std::vector<unsigned> ranks;
    for (const auto k : split(keyed(head[1], "rank"), ',')) ranks.push_back(parse_number<unsigned>(k, "rank"));
    const auto comps = g.components();
    if (ranks.size() != comps.size()) throw StructuralError("one rank per component required");
    std::vector<std::vector<fp::Row>> bases(comps.size());
    for (std::size_t i = 0; i < comps.size(); ++i) {
      for (unsigned r = 0; r < ranks[i]; ++r) {
        const auto w = words(in.next());
        if (w.empty() || w[0] != "basis") throw StructuralError("expected a 'basis' row");
        fp::Row row;
        for (std::size_t j = 1; j < w.size(); ++j) row.push_back(parse_number<std::uint32_t>(w[j], "residue"));
        bases[i].push_back(std::move(row));
      }
    }
    auto h = Subgroup::from_component_bases(g, std::move(bases));
    if (!std::equal(ranks.begin(), ranks.end(), h.component_ranks().begin(), h.component_ranks().end())) {
      throw StructuralError("basis rows are linearly dependent");
    }
    return h;
  }
  std::vector<std::uint32_t> elems;
  for (const auto x : split(keyed(head[1], "elements"), ',')) elems.push_back(parse_number<std::uint32_t>(x, "element"));
  return Subgroup::from_elements(g, std::move(elems));
}

void expect_done(const LineReader& in) {
  if (!in.done()) throw StructuralError("unexpected trailing line '" + std::string(in.peek()) + "'");
}

std::string join(const std::vector<std::uint32_t>& v, char sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

Group parse_group(std::string_view text) {
  LineReader in(text);
  auto g = read_group(in);
  expect_done(in);
  return g;
}

std::string format_group(const Group& g) {
  std::ostringstream out;
  if (g.is_abelian_product()) {
    out << "abelian\n";
    for (const auto& c : g.components()) out << "component p=" << c.prime << " n=" << c.exponent << "\n";
    return out.str();
  }
  const auto n = static_cast<std::uint32_t>(g.table_order());
  out << "table n=" << n << "\n";
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) out << (j ? " " : "") << g.table_mul(i, j);
    out << "\n";
  }
  return out.str();
}

Subgroup parse_subgroup(const Group& g, std::string_view text) {
  LineReader in(text);
  auto h = read_subgroup(g, in);
  expect_done(in);
  return h;
}

std::string format_subgroup(const Subgroup& h) {
  std::ostringstream out;
  if (h.group().is_abelian_product()) {
    const auto ks = h.component_ranks();
    out << "hidden rank=" << join(std::vector<std::uint32_t>(ks.begin(), ks.end()), ',') << "\n";
    for (std::size_t i = 0; i < ks.size(); ++i) {
      for (const auto& row : h.basis(i)) out << "basis " << join(row, ' ') << "\n";
    }
    return out.str();
  }
  out << "hidden elements=" << join(std::vector<std::uint32_t>(h.elements().begin(), h.elements().end()), ',')
      << "\n";
  return out.str();
}

HspInstance parse_instance(std::string_view text) {
  LineReader in(text);
  const auto g = read_group(in);
  auto hidden = read_subgroup(g, in);
  const auto salt = parse_number<std::uint64_t>(keyed(in.next(), "salt"), "salt");
  expect_done(in);
  if (g.is_abelian_product()) {
    RahspParams params;
    const auto comps = g.components();
    for (std::size_t i = 0; i < comps.size(); ++i) {
      params.push_back({comps[i].prime, comps[i].exponent, hidden.component_ranks()[i]});
    }
    return HspInstance(std::move(hidden), Family::rahsp(params), salt);
  }
  const BigInt order = hidden.order();
  return HspInstance(std::move(hidden), Family::explicit_list(enumerate_table_subgroups(g, &order)), salt);
}

std::string format_instance(const HspInstance& inst) {
  return format_group(inst.group()) + format_subgroup(inst.hidden()) +
         "salt=" + std::to_string(inst.label_salt()) + "\n";
}

HspInstance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

void save_instance(const std::filesystem::path& path, const HspInstance& inst) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << format_instance(inst);
  if (!out) throw IoError("write failed for " + path.string());
}

RahspParams parse_gsp_spec(std::string_view text) {
  const auto parts = split(text, ',');
  if (parts.size() != 3) throw DomainError("--gsp expects p,n,k");
  try {
    return gsp_params(parse_number<std::uint32_t>(parts[0], "p"), parse_number<unsigned>(parts[1], "n"),
                      parse_number<unsigned>(parts[2], "k"));
  } catch (const StructuralError& e) {
    throw DomainError(e.what());
  }
}

RahspParams parse_rahsp_spec(std::string_view text) {
  RahspParams params;
  std::string list(text);
  std::replace(list.begin(), list.end(), ';', ',');
  try {
    for (const auto item : split(list, ',')) {
      const auto caret = item.find('^');
      const auto colon = item.find(':');
      if (caret == std::string_view::npos || colon == std::string_view::npos || colon < caret) {
        throw DomainError("--rahsp items look like p^n:k, got '" + std::string(item) + "'");
      }
      params.push_back({parse_number<std::uint32_t>(item.substr(0, caret), "p"),
                        parse_number<unsigned>(item.substr(caret + 1, colon - caret - 1), "n"),
                        parse_number<unsigned>(item.substr(colon + 1), "k")});
    }
  } catch (const StructuralError& e) {
    throw DomainError(e.what());
  }
  return params;
}

std::string format_params(const RahspParams& params) {
  std::string out;
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) out += ';';
    out += std::to_string(params[i].prime) + "^" + std::to_string(params[i].n) + ":" + std::to_string(params[i].k);
  }
  return out;
}

}  // namespace hsp
