#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ultrarel/bits.hpp"
#include "ultrarel/rel.hpp"

namespace ultrarel {

/// A topology on {0, ..., n-1}, n <= 64.
///
/// Every finite topology is determined by the smallest open set containing
/// each point, and that family is what we store. Openness, closure and
/// interior are mask operations over it; the full family of open sets is
/// produced by opens() when a caller really needs it. Two Topology values
/// compare equal iff they have the same open sets.
class Topology {
 public:
  /// Smallest topology in which every generator is open.
  static Topology generated_by(std::size_t n, std::span<const Mask> generators);
  /// Topology whose point closures are `closures` (closures[x] = cl{x}).
  /// The closures must form a preorder: x in cl{x}, and y in cl{x} implies
  /// cl{y} subset of cl{x}.
  static Topology from_point_closures(std::vector<Mask> closures);
  /// Topology of a preorder given as a reflexive, transitive Rel, with
  /// (x, y) meaning x in cl{y}.
  static Topology from_specialization(const Rel& preorder);

  static Topology discrete(std::size_t n);
  static Topology indiscrete(std::size_t n);
  /// Two points, opens {∅, {0}, {0,1}}.
  static Topology sierpinski();

  std::size_t size() const noexcept { return nbhd_.size(); }
  Mask all() const noexcept { return full_mask(size()); }

  /// Smallest open set containing x.
  Mask neighbourhood(std::size_t x) const { return nbhd_.at(x); }
  /// cl{x}
  Mask point_closure(std::size_t x) const { return ptcl_.at(x); }

  bool is_open(Mask a) const;
  bool is_closed(Mask a) const { return is_open(all() & ~a); }
  bool is_clopen(Mask a) const { return is_open(a) && is_closed(a); }

  Mask closure(Mask a) const;
  Mask interior(Mask a) const;

  /// All open sets, ascending by mask value. Throws SizeError past 2^22 sets.
  std::vector<Mask> opens() const;
  /// All closed sets, ascending by mask value.
  std::vector<Mask> closed_sets() const;

  /// (x, y) iff x in cl{y}. Only for carriers within kMaxCarrier.
  Rel specialization_preorder() const;

  bool is_t0() const;
  bool is_t1() const;
  bool is_discrete() const;

  /// Every open set of `coarser` is open here.
  bool refines(const Topology& coarser) const;

  friend bool operator==(const Topology& a, const Topology& b) { return a.nbhd_ == b.nbhd_; }

 private:
  explicit Topology(std::vector<Mask> nbhd);

  std::vector<Mask> nbhd_;
  std::vector<Mask> ptcl_;
};

/// Subspace topology on the points of `subset`, renumbered in increasing order.
Topology subspace(const Topology& t, Mask subset);

/// Product of two finite spaces. The pair (x, y) is point x * right.size() + y
/// of the pair carrier, so for equal factor sizes a relation's bit layout and
/// a subset of the pair carrier coincide.
class ProductSpace {
 public:
  ProductSpace(Topology left, Topology right);

  const Topology& left() const noexcept { return left_; }
  const Topology& right() const noexcept { return right_; }
  /// The product topology on the pair carrier.
  const Topology& pairs() const noexcept { return pair_; }

  std::size_t left_size() const noexcept { return left_.size(); }
  std::size_t right_size() const noexcept { return right_.size(); }
  std::size_t point_count() const noexcept { return pair_.size(); }
  Mask all() const noexcept { return pair_.all(); }

  std::size_t encode(std::size_t x, std::size_t y) const noexcept { return x * right_size() + y; }
  Pair decode(std::size_t p) const noexcept { return {p / right_size(), p % right_size()}; }

  /// {x} x Y
  Mask row(std::size_t x) const;
  /// X x {y}
  Mask column(std::size_t y) const;

  /// right x left
  ProductSpace swapped() const { return ProductSpace(right_, left_); }
  /// R ↦ R^{-1}, as a subset of swapped().
  Mask transpose(Mask cells) const;

  Mask closure(Mask cells) const { return pair_.closure(cells); }
  Mask interior(Mask cells) const { return pair_.interior(cells); }

  friend bool operator==(const ProductSpace& a, const ProductSpace& b) {
    return a.left_ == b.left_ && a.right_ == b.right_;
  }

 private:
  Topology left_;
  Topology right_;
  Topology pair_;
};

/// All topologies on n points (n <= 4), each once, in lexicographic order of
/// their ascending open-set lists.
std::vector<Topology> enumerate_topologies(std::size_t n);

}  // namespace ultrarel
