#include "ultrarel/rel.hpp"

#include <string>

#include "ultrarel/error.hpp"

namespace ultrarel {

namespace {

void require_same(const Rel& a, const Rel& b, const char* op) {
  if (a.size() != b.size()) {
    throw DimensionError(std::string(op) + ": carriers differ (" + std::to_string(a.size()) +
                         " vs " + std::to_string(b.size()) + ")");
  }
}

}  // namespace

Carrier::Carrier(std::size_t n) : n_(n) {
  if (n == 0) throw ValidationError("carrier must have at least one element");
  if (n > kMaxCarrier) {
    throw SizeError("carrier size " + std::to_string(n) + " exceeds the maximum of " +
                    std::to_string(kMaxCarrier));
  }
}

Rel::Rel(std::size_t n) : carrier_(n) {}

Rel::Rel(std::size_t n, Mask bits) : carrier_(n), bits_(bits) {
  if (!is_subset(bits, full_mask(n * n))) throw ValidationError("relation bits outside the n x n matrix");
}

Rel Rel::from_pairs(std::size_t n, std::span<const Pair> pairs) {
  Rel r(n);
  for (const auto& [x, y] : pairs) {
    if (x >= n || y >= n) {
      throw ValidationError("pair (" + std::to_string(x) + "," + std::to_string(y) +
                            ") out of range for n=" + std::to_string(n));
    }
    r.bits_ |= bit(x * n + y);
  }
  return r;
}

Rel Rel::identity(std::size_t n) {
  Rel r(n);
  for (std::size_t x = 0; x < n; ++x) r.bits_ |= bit(x * n + x);
  return r;
}

Rel Rel::universal(std::size_t n) { return Rel(n, full_mask(n * n)); }

Mask Rel::column(std::size_t y) const noexcept {
  Mask out = 0;
  for (std::size_t x = 0; x < size(); ++x) {
    if (contains(x, y)) out |= bit(x);
  }
  return out;
}

std::vector<Pair> Rel::pairs() const {
  std::vector<Pair> out;
  for_each_bit(bits_, [&](std::size_t i) { out.emplace_back(i / size(), i % size()); });
  return out;
}

Mask line_mask(std::size_t n, std::size_t index, Side side) {
  Mask m = 0;
  for (std::size_t k = 0; k < n; ++k) m |= side == Side::left ? bit(index * n + k) : bit(k * n + index);
  return m;
}

Rel complement(const Rel& a) { return Rel(a.size(), ~a.bits() & full_mask(a.size() * a.size())); }

Rel union_of(const Rel& a, const Rel& b) {
  require_same(a, b, "union");
  return Rel(a.size(), a.bits() | b.bits());
}

Rel intersection(const Rel& a, const Rel& b) {
  require_same(a, b, "intersection");
  return Rel(a.size(), a.bits() & b.bits());
}

bool is_subrelation(const Rel& a, const Rel& b) {
  require_same(a, b, "inclusion");
  return is_subset(a.bits(), b.bits());
}

Rel inverse(const Rel& r) {
  const std::size_t n = r.size();
  Mask out = 0;
  for_each_bit(r.bits(), [&](std::size_t i) { out |= bit((i % n) * n + i / n); });
  return Rel(n, out);
}

Rel compose(const Rel& r, const Rel& s) {
  require_same(r, s, "compose");
  const std::size_t n = r.size();
  Mask out = 0;
  for (std::size_t x = 0; x < n; ++x) out |= image(r, s.row(x)) << (x * n);
  return Rel(n, out);
}

Mask image(const Rel& r, Mask a) {
  Mask out = 0;
  for_each_bit(a & r.carrier().all(), [&](std::size_t x) { out |= r.row(x); });
  return out;
}

Mask preimage(const Rel& r, Mask b) {
  Mask out = 0;
  for (std::size_t x = 0; x < r.size(); ++x) {
    if (meets(r.row(x), b)) out |= bit(x);
  }
  return out;
}

Rel section(const Rel& r, std::size_t index, Side side) {
  if (index >= r.size()) throw ValidationError("section index out of range");
  return Rel(r.size(), r.bits() & line_mask(r.size(), index, side));
}

Rel transitive_closure(const Rel& r) {
  const std::size_t n = r.size();
  std::vector<Mask> rows(n);
  for (std::size_t x = 0; x < n; ++x) rows[x] = r.row(x);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t x = 0; x < n; ++x) {
      if (has(rows[x], k)) rows[x] |= rows[k];
    }
  }
  Mask out = 0;
  for (std::size_t x = 0; x < n; ++x) out |= rows[x] << (x * n);
  return Rel(n, out);
}

Rel reflexive_closure(const Rel& r) { return Rel(r.size(), r.bits() | Rel::identity(r.size()).bits()); }

bool is_homomorphism(std::span<const std::size_t> h, const Rel& r, const Rel& s) {
  if (h.size() != r.size()) throw DimensionError("homomorphism: map length differs from domain carrier");
  for (std::size_t v : h) {
    if (v >= s.size()) throw ValidationError("homomorphism: value outside codomain carrier");
  }
  for (const auto& [x, y] : r.pairs()) {
    if (!s.contains(h[x], h[y])) return false;
  }
  return true;
}

std::vector<Rel> all_relations(std::size_t n) {
  const Carrier carrier(n);
  const std::size_t cells = carrier.size() * carrier.size();
  if (cells > 20) throw SizeError("refusing to enumerate 2^" + std::to_string(cells) + " relations");
  std::vector<Rel> out;
  out.reserve(std::size_t{1} << cells);
  for (Mask m = 0; m < (Mask{1} << cells); ++m) out.emplace_back(n, m);
  return out;
}

}  // namespace ultrarel
