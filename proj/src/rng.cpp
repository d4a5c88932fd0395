#include "hsp/rng.hpp"

namespace hsp {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

RngStream RngStream::derive(std::uint64_t master_seed, std::string_view label,
                            std::uint64_t index) {
  // FNV-1a over the label, then mix with seed and index.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const char c : label) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  std::uint64_t s = splitmix64(master_seed);
  s = splitmix64(s ^ h);
  s = splitmix64(s ^ index);
  return RngStream(s);
}

}  // namespace hsp
