#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "ultrarel/bits.hpp"

namespace ultrarel {

/// Largest carrier any kernel value accepts. Filter spaces over n points have
/// 2^n - 1 members and must fit a Mask, which pins this at 6.
inline constexpr std::size_t kMaxCarrier = 6;

/// The finite set {0, ..., n-1}.
class Carrier {
 public:
  explicit Carrier(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  Mask all() const noexcept { return full_mask(n_); }
  bool contains(Mask m) const noexcept { return is_subset(m, all()); }

  friend bool operator==(const Carrier&, const Carrier&) = default;

 private:
  std::size_t n_;
};

using Pair = std::pair<std::size_t, std::size_t>;

enum class Side { left, right };

/// A binary relation on a finite carrier, stored as an n x n boolean matrix
/// packed row-major into one word: (x, y) lives at bit x*n + y. The same
/// layout encodes subsets of the pair carrier of a product space, so a Rel and
/// a product-space relation over the same n share bits exactly.
class Rel {
 public:
  explicit Rel(std::size_t n);  // empty relation
  Rel(std::size_t n, Mask bits);

  /// Rejects out-of-range elements; duplicates are harmless here (the file
  /// layer rejects them).
  static Rel from_pairs(std::size_t n, std::span<const Pair> pairs);
  static Rel identity(std::size_t n);
  static Rel universal(std::size_t n);

  std::size_t size() const noexcept { return carrier_.size(); }
  const Carrier& carrier() const noexcept { return carrier_; }
  Mask bits() const noexcept { return bits_; }
  bool empty() const noexcept { return bits_ == 0; }

  bool contains(std::size_t x, std::size_t y) const noexcept { return has(bits_, x * size() + y); }

  /// {y : (x, y) in R}
  Mask row(std::size_t x) const noexcept { return (bits_ >> (x * size())) & carrier_.all(); }
  /// {x : (x, y) in R}
  Mask column(std::size_t y) const noexcept;

  /// Lexicographically sorted.
  std::vector<Pair> pairs() const;

  friend bool operator==(const Rel&, const Rel&) = default;

 private:
  Carrier carrier_;
  Mask bits_ = 0;
};

/// Bit mask of the cells {x} x X (left) or X x {y} (right) in the n x n layout.
Mask line_mask(std::size_t n, std::size_t index, Side side);

Rel complement(const Rel& a);
Rel union_of(const Rel& a, const Rel& b);
Rel intersection(const Rel& a, const Rel& b);
bool is_subrelation(const Rel& a, const Rel& b);

Rel inverse(const Rel& r);

/// (x, z) in compose(r, s) iff there is y with s(x, y) and r(y, z): `s` is
/// applied first, so image(compose(r, s), A) = image(r, image(s, A)).
Rel compose(const Rel& r, const Rel& s);

/// {y : exists x in a, r(x, y)}
Mask image(const Rel& r, Mask a);
/// {x : exists y in b, r(x, y)}
Mask preimage(const Rel& r, Mask b);

/// R^(x) = R ∩ ({x} x X) for Side::left, R_(y) = R ∩ (X x {y}) for Side::right.
Rel section(const Rel& r, std::size_t index, Side side);

Rel transitive_closure(const Rel& r);
Rel reflexive_closure(const Rel& r);

/// True iff r(x, y) implies s(h[x], h[y]). `h` must have r.size() entries,
/// each below s.size().
bool is_homomorphism(std::span<const std::size_t> h, const Rel& r, const Rel& s);

/// Every relation on n points in increasing bit order.
std::vector<Rel> all_relations(std::size_t n);

}  // namespace ultrarel
