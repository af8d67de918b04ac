#pragma once

// Brute-force reference implementations. They work on plain vectors and
// bit loops and never call into the library's algorithms.

#include <cstddef>
#include <cstdint>
#include <vector>

namespace oracle {

using Set = std::uint64_t;
using Matrix = std::vector<std::vector<bool>>;

inline bool in(Set s, std::size_t i) { return ((s >> i) & 1U) != 0; }

inline Matrix matrix_of(std::size_t n, Set bits) {
  Matrix m(n, std::vector<bool>(n, false));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) m[x][y] = in(bits, x * n + y);
  return m;
}

inline Set bits_of(const Matrix& m) {
  const std::size_t n = m.size();
  Set out = 0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (m[x][y]) out |= Set{1} << (x * n + y);
  return out;
}

/// (x, z) iff s(x, y) and r(y, z) for some y.
inline Matrix compose(const Matrix& r, const Matrix& s) {
  const std::size_t n = r.size();
  Matrix out(n, std::vector<bool>(n, false));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (s[x][y] && r[y][z]) out[x][z] = true;
  return out;
}

/// Warshall.
inline Matrix transitive_closure(Matrix m) {
  const std::size_t n = m.size();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (m[i][k] && m[k][j]) m[i][j] = true;
  return m;
}

/// `fam` has bit s set iff subset s is in the family.
inline bool is_topology(std::size_t n, std::uint64_t fam) {
  const std::size_t subsets = std::size_t{1} << n;
  if (!in(fam, 0) || !in(fam, subsets - 1)) return false;
  for (std::size_t a = 0; a < subsets; ++a) {
    if (!in(fam, a)) continue;
    for (std::size_t b = 0; b < subsets; ++b)
      if (in(fam, b) && (!in(fam, a | b) || !in(fam, a & b))) return false;
  }
  return true;
}

/// Counts topologies on n <= 4 points by testing every family of subsets.
inline std::size_t count_topologies(std::size_t n) {
  const std::size_t subsets = std::size_t{1} << n;
  std::size_t total = 0;
  for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << subsets); ++fam)
    if (is_topology(n, fam)) ++total;
  return total;
}

/// Smallest family containing `gens`, ∅ and X, closed under ∪ and ∩.
inline std::vector<Set> generate(std::size_t n, std::vector<Set> fam) {
  const Set all = (Set{1} << n) - 1;
  fam.push_back(0);
  fam.push_back(all);
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<Set> cur = fam;
    for (Set a : cur)
      for (Set b : cur)
        for (Set c : {a | b, a & b}) {
          bool found = false;
          for (Set d : fam) found |= d == c;
          if (!found) {
            fam.push_back(c);
            grew = true;
          }
        }
  }
  return fam;
}

/// Intersection of all closed supersets of a, closed sets being complements of opens.
inline Set closure(std::size_t n, const std::vector<Set>& opens, Set a) {
  const Set all = (Set{1} << n) - 1;
  Set out = all;
  for (Set o : opens) {
    const Set c = all & ~o;
    if ((a & ~c) == 0) out &= c;
  }
  return out;
}

/// Opens of the product: unions of rectangles U x V, pair (x, y) at x*m + y.
inline std::vector<Set> product_opens(std::size_t n, const std::vector<Set>& left, std::size_t m,
                                      const std::vector<Set>& right) {
  std::vector<Set> rects;
  for (Set u : left)
    for (Set v : right) {
      Set r = 0;
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < m; ++y)
          if (in(u, x) && in(v, y)) r |= Set{1} << (x * m + y);
      rects.push_back(r);
    }
  return generate(n * m, rects);
}

}  // namespace oracle
