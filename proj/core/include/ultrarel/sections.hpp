#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "ultrarel/bits.hpp"
#include "ultrarel/report.hpp"
#include "ultrarel/topology.hpp"

namespace ultrarel {

/// A relation R ⊆ X x Y living in a product space, as a subset of its pair carrier.
class ProductRel {
 public:
  ProductRel(std::shared_ptr<const ProductSpace> space, Mask cells);

  const ProductSpace& space() const noexcept { return *space_; }
  const std::shared_ptr<const ProductSpace>& shared_space() const noexcept { return space_; }
  Mask cells() const noexcept { return cells_; }

  /// R^{-1} in the swapped product Y x X.
  ProductRel inverse() const;

  friend bool operator==(const ProductRel& a, const ProductRel& b) {
    return a.cells_ == b.cells_ && *a.space_ == *b.space_;
  }

 private:
  std::shared_ptr<const ProductSpace> space_;
  Mask cells_;
};

/// lcl R = ⋃_x cl R^(x): union of the product-closures of the left sections.
Mask lcl(const ProductSpace& space, Mask cells);
/// rcl R = ⋃_y cl R_(y): union of the product-closures of the right sections.
Mask rcl(const ProductSpace& space, Mask cells);

ProductRel lcl(const ProductRel& r);
ProductRel rcl(const ProductRel& r);

/// Applies rcl∘lcl until nothing changes or `max_rounds` rounds ran.
/// Returns the last value; `rounds` receives the number of applications.
Mask iterate_rcl_lcl(const ProductSpace& space, Mask cells, std::size_t max_rounds, std::size_t* rounds = nullptr);

/// The topology whose closed sets are the fixed points of lcl (Side::left)
/// or rcl (Side::right).
Topology derived_topology(const ProductSpace& space, Side which);

enum class Sidedness { closed, open, clopen };

/// True iff every left (resp. right) section indexed by a member of `on` is
/// closed / open / clopen in the product topology.
bool sidedness(const ProductRel& r, Side side, Mask on, Sidedness mode);

struct LawCheckReport {
  bool pass = true;
  std::uint64_t relations = 0;
  bool exhaustive = true;
  std::vector<LawResult> laws;
};

/// Checks the closure laws of lcl and rcl (empty set, extensive, idempotent,
/// finitely additive) and the inverse conjugations (lcl R^{-1})^{-1} = rcl R,
/// (rcl R^{-1})^{-1} = lcl R. Exhaustive over every relation when the pair
/// carrier has at most `max_exhaustive` cells, otherwise over `samples`
/// seeded random relations.
LawCheckReport lcl_rcl_laws_check(const ProductSpace& space, std::size_t max_exhaustive,
                                  std::uint64_t samples = 2000, std::uint64_t seed = 1);

/// The operator identities obtained by composing the inverse conjugations:
///   rcl(lcl R) = (lcl((lcl R)^{-1}))^{-1} = rcl((rcl R^{-1})^{-1})
///   lcl(rcl R) = (rcl((rcl R)^{-1}))^{-1} = lcl((lcl R^{-1})^{-1})
LawCheckReport corollary_check(const ProductSpace& space, std::size_t max_exhaustive,
                               std::uint64_t samples = 2000, std::uint64_t seed = 1);

/// Witness payload for a relation in a product space:
/// {"left": topology, "right": topology, "rel": [[x, y], ...]}.
Json product_witness(const ProductSpace& space, Mask cells);

/// Searches every pair of topologies on n points (n <= n_max, at most
/// `topo_limit` topologies per factor) and every relation for
///   lcl(rcl(lcl R)) != rcl(lcl R)   or   rcl(lcl(rcl R)) != lcl(rcl R).
SearchReport idempotence_search(std::size_t n_max, bool stop_at_first = false,
                                std::size_t topo_limit = SIZE_MAX, std::size_t keep = 16);

}  // namespace ultrarel
