#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace ultrarel {

/// A subset of a carrier of at most 64 points; bit i set iff element i is a member.
using Mask = std::uint64_t;

inline constexpr std::size_t kMaskBits = 64;

constexpr Mask bit(std::size_t i) { return Mask{1} << i; }

constexpr Mask full_mask(std::size_t n) {
  return n >= kMaskBits ? ~Mask{0} : (Mask{1} << n) - 1;
}

constexpr bool has(Mask m, std::size_t i) { return ((m >> i) & 1U) != 0; }

constexpr bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }

constexpr bool meets(Mask a, Mask b) { return (a & b) != 0; }

inline std::size_t count(Mask m) { return static_cast<std::size_t>(std::popcount(m)); }

inline std::size_t lowest(Mask m) { return static_cast<std::size_t>(std::countr_zero(m)); }

template <class F>
void for_each_bit(Mask m, F&& f) {
  while (m != 0) {
    f(lowest(m));
    m &= m - 1;
  }
}

/// Visits every subset of `m`, starting with the empty set.
template <class F>
void for_each_subset(Mask m, F&& f) {
  Mask s = 0;
  do {
    f(s);
    s = (s - m) & m;
  } while (s != 0);
}

/// Visits every S with base ⊆ S ⊆ universe.
template <class F>
void for_each_superset(Mask base, Mask universe, F&& f) {
  const Mask free = universe & ~base;
  for_each_subset(free, [&](Mask s) { f(base | s); });
}

inline std::vector<std::size_t> elements(Mask m) {
  std::vector<std::size_t> out;
  out.reserve(count(m));
  for_each_bit(m, [&](std::size_t i) { out.push_back(i); });
  return out;
}

/// "{0,2}"
inline std::string format_set(Mask m) {
  std::string out = "{";
  bool first = true;
  for_each_bit(m, [&](std::size_t i) {
    if (!first) out += ',';
    out += std::to_string(i);
    first = false;
  });
  out += '}';
  return out;
}

}  // namespace ultrarel
