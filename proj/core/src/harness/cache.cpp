#include <map>
#include <memory>
#include <unordered_map>

#include "internal.hpp"

namespace ultrarel::detail {

namespace {

std::uint64_t key(const Rel& r) { return (std::uint64_t{r.size()} << 40) | r.bits(); }

template <class Build>
const FilterRel& memo(std::unordered_map<std::uint64_t, FilterRel>& table, const Rel& r, Build build) {
  const auto k = key(r);
  auto it = table.find(k);
  if (it == table.end()) it = table.emplace(k, build(r)).first;
  return it->second;
}

}  // namespace

const FilterRel& star_of(const Rel& r) {
  thread_local std::unordered_map<std::uint64_t, FilterRel> table;
  return memo(table, r, [](const Rel& x) { return star_filter(x); });
}

const FilterRel& tilde_of(const Rel& r) {
  thread_local std::unordered_map<std::uint64_t, FilterRel> table;
  return memo(table, r, [](const Rel& x) { return tilde_filter(x); });
}

const FilterRel& star_literal_of(const Rel& r) {
  thread_local std::unordered_map<std::uint64_t, FilterRel> table;
  return memo(table, r, [](const Rel& x) { return star_filter_literal(x); });
}

const Rel& star_ultra_of(const Rel& r) {
  thread_local std::unordered_map<std::uint64_t, Rel> table;
  auto it = table.find(key(r));
  if (it == table.end()) it = table.emplace(key(r), star_ultra(r)).first;
  return it->second;
}

const Rel& tilde_ultra_of(const Rel& r) {
  thread_local std::unordered_map<std::uint64_t, Rel> table;
  auto it = table.find(key(r));
  if (it == table.end()) it = table.emplace(key(r), tilde_ultra(r)).first;
  return it->second;
}

const HyperSpace& hyperspace_of(const Topology& t) {
  thread_local std::map<std::vector<Mask>, std::unique_ptr<HyperSpace>> table;
  std::vector<Mask> k(t.size());
  for (std::size_t x = 0; x < t.size(); ++x) k[x] = t.neighbourhood(x);
  auto& slot = table[k];
  if (!slot) slot = std::make_unique<HyperSpace>(t);
  return *slot;
}

bool compose_entry(const FilterRel& r, const FilterRel& s, std::size_t i, std::size_t j) {
  bool found = false;
  for_each_bit(s.row(i), [&](std::size_t k) { found = found || r.contains(k, j); });
  return found;
}

bool is_total(const Rel& r) {
  for (std::size_t x = 0; x < r.size(); ++x) {
    if (r.row(x) == 0) return false;
  }
  return true;
}

bool is_functional(const Rel& r) {
  for (std::size_t x = 0; x < r.size(); ++x) {
    if (count(r.row(x)) != 1) return false;
  }
  return true;
}

}  // namespace ultrarel::detail
