#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "hsp/family.hpp"
#include "hsp/group.hpp"
#include "hsp/oracle.hpp"
#include "hsp/subgroup.hpp"

// Plain-text descriptions of groups, subgroups and instances.
//
//   abelian                       table n=<N>
//   component p=<prime> n=<int>   <N rows of N space-separated indices>
//   ...
//
//   hidden rank=<k1,...,km>       hidden elements=<i,j,...>   (table groups)
//   basis <residues...>           (k_i rows per component, component order)
//
//   salt=<u64>
//
// Blank lines and lines starting with '#' are ignored. Malformed text
// raises StructuralError.

namespace hsp {

Group parse_group(std::string_view text);
std::string format_group(const Group& g);

Subgroup parse_subgroup(const Group& g, std::string_view text);
std::string format_subgroup(const Subgroup& h);

/// Group section, subgroup section, salt line. The family is RahspRanks with
/// the hidden subgroup's ranks (abelian) or every subgroup of the hidden
/// subgroup's order (table).
HspInstance parse_instance(std::string_view text);
std::string format_instance(const HspInstance& inst);

HspInstance load_instance(const std::filesystem::path& path);
void save_instance(const std::filesystem::path& path, const HspInstance& inst);

/// "p,n,k"
RahspParams parse_gsp_spec(std::string_view text);
/// "p1^n1:k1,p2^n2:k2,..."; ';' also separates items.
RahspParams parse_rahsp_spec(std::string_view text);
/// "p1^n1:k1;p2^n2:k2;...", safe inside a CSV field.
std::string format_params(const RahspParams& params);

}  // namespace hsp
