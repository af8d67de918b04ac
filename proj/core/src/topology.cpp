#include "ultrarel/topology.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "ultrarel/error.hpp"

namespace ultrarel {

namespace {

constexpr std::size_t kMaxOpens = std::size_t{1} << 22;

void require_points(std::size_t n) {
  if (n == 0) throw ValidationError("topology needs at least one point");
  if (n > kMaskBits) throw SizeError("topology carrier of " + std::to_string(n) + " points exceeds 64");
}

}  // namespace

Topology::Topology(std::vector<Mask> nbhd) : nbhd_(std::move(nbhd)), ptcl_(nbhd_.size(), 0) {
  for (std::size_t x = 0; x < nbhd_.size(); ++x) {
    for_each_bit(nbhd_[x], [&](std::size_t y) { ptcl_[y] |= bit(x); });
  }
}

Topology Topology::generated_by(std::size_t n, std::span<const Mask> generators) {
  require_points(n);
  const Mask all = full_mask(n);
  std::vector<Mask> nbhd(n, all);
  for (Mask g : generators) {
    if (!is_subset(g, all)) {
      throw ValidationError("generator " + format_set(g) + " is not a subset of a " + std::to_string(n) +
                            "-point carrier");
    }
    for_each_bit(g, [&](std::size_t x) { nbhd[x] &= g; });
  }
  return Topology(std::move(nbhd));
}

Topology Topology::from_point_closures(std::vector<Mask> closures) {
  const std::size_t n = closures.size();
  require_points(n);
  for (std::size_t x = 0; x < n; ++x) {
    if (!has(closures[x], x) || !is_subset(closures[x], full_mask(n))) {
      throw ValidationError("point closure of " + std::to_string(x) + " must contain the point");
    }
    for_each_bit(closures[x], [&](std::size_t y) {
      if (!is_subset(closures[y], closures[x])) throw ValidationError("point closures are not transitive");
    });
  }
  std::vector<Mask> nbhd(n, 0);
  for (std::size_t y = 0; y < n; ++y) {
    for_each_bit(closures[y], [&](std::size_t x) { nbhd[x] |= bit(y); });
  }
  return Topology(std::move(nbhd));
}

Topology Topology::from_specialization(const Rel& preorder) {
  std::vector<Mask> closures(preorder.size());
  for (std::size_t y = 0; y < preorder.size(); ++y) closures[y] = preorder.column(y);
  return from_point_closures(std::move(closures));
}

Topology Topology::discrete(std::size_t n) {
  require_points(n);
  std::vector<Mask> nbhd(n);
  for (std::size_t x = 0; x < n; ++x) nbhd[x] = bit(x);
  return Topology(std::move(nbhd));
}

Topology Topology::indiscrete(std::size_t n) {
  require_points(n);
  return Topology(std::vector<Mask>(n, full_mask(n)));
}

Topology Topology::sierpinski() {
  const Mask generators[] = {0b01};
  return generated_by(2, generators);
}

bool Topology::is_open(Mask a) const {
  if (!is_subset(a, all())) return false;
  bool open = true;
  for_each_bit(a, [&](std::size_t x) { open = open && is_subset(nbhd_[x], a); });
  return open;
}

Mask Topology::closure(Mask a) const {
  Mask out = 0;
  for_each_bit(a & all(), [&](std::size_t y) { out |= ptcl_[y]; });
  return out;
}

Mask Topology::interior(Mask a) const {
  Mask out = 0;
  for (std::size_t x = 0; x < size(); ++x) {
    if (is_subset(nbhd_[x], a)) out |= bit(x);
  }
  return out;
}

std::vector<Mask> Topology::opens() const {
  std::unordered_set<Mask> seen{0};
  std::vector<Mask> family{0};
  // Opens are exactly the unions of minimal neighbourhoods.
  for (Mask u : nbhd_) {
    const std::size_t current = family.size();
    for (std::size_t i = 0; i < current; ++i) {
      const Mask joined = family[i] | u;
      if (seen.insert(joined).second) {
        family.push_back(joined);
        if (family.size() > kMaxOpens) throw SizeError("topology has more than 2^22 open sets");
      }
    }
  }
  std::sort(family.begin(), family.end());
  return family;
}

std::vector<Mask> Topology::closed_sets() const {
  std::vector<Mask> family = opens();
  for (Mask& m : family) m = all() & ~m;
  std::sort(family.begin(), family.end());
  return family;
}

Rel Topology::specialization_preorder() const {
  const std::size_t n = size();
  Mask bits = 0;
  for (std::size_t y = 0; y < n; ++y) {
    for_each_bit(ptcl_[y], [&](std::size_t x) { bits |= bit(x * n + y); });
  }
  return Rel(n, bits);
}

bool Topology::is_t0() const {
  for (std::size_t x = 0; x < size(); ++x) {
    for (std::size_t y = x + 1; y < size(); ++y) {
      if (has(ptcl_[y], x) && has(ptcl_[x], y)) return false;
    }
  }
  return true;
}

bool Topology::is_t1() const {
  for (std::size_t x = 0; x < size(); ++x) {
    if (ptcl_[x] != bit(x)) return false;
  }
  return true;
}

bool Topology::is_discrete() const {
  for (std::size_t x = 0; x < size(); ++x) {
    if (nbhd_[x] != bit(x)) return false;
  }
  return true;
}

bool Topology::refines(const Topology& coarser) const {
  if (coarser.size() != size()) throw DimensionError("refines: carriers differ");
  for (std::size_t x = 0; x < size(); ++x) {
    if (!is_subset(nbhd_[x], coarser.nbhd_[x])) return false;
  }
  return true;
}

Topology subspace(const Topology& t, Mask subset) {
  if (!is_subset(subset, t.all())) throw ValidationError("subspace: subset outside the carrier");
  const std::vector<std::size_t> keep = elements(subset);
  std::vector<Mask> closures(keep.size(), 0);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    const Mask cl = t.point_closure(keep[i]) & subset;
    for (std::size_t j = 0; j < keep.size(); ++j) {
      if (has(cl, keep[j])) closures[i] |= bit(j);
    }
  }
  return Topology::from_point_closures(std::move(closures));
}

ProductSpace::ProductSpace(Topology left, Topology right)
    : left_(std::move(left)), right_(std::move(right)), pair_(Topology::discrete(1)) {
  const std::size_t points = left_.size() * right_.size();
  if (points > kMaskBits) {
    throw SizeError("product of " + std::to_string(left_.size()) + " and " + std::to_string(right_.size()) +
                    " points exceeds the 64-point cap");
  }
  std::vector<Mask> closures(points, 0);
  for (std::size_t x = 0; x < left_size(); ++x) {
    for (std::size_t y = 0; y < right_size(); ++y) {
      // cl{(x, y)} = cl{x} x cl{y}
      Mask cl = 0;
      for_each_bit(left_.point_closure(x), [&](std::size_t a) {
        for_each_bit(right_.point_closure(y), [&](std::size_t b) { cl |= bit(encode(a, b)); });
      });
      closures[encode(x, y)] = cl;
    }
  }
  pair_ = Topology::from_point_closures(std::move(closures));
}

Mask ProductSpace::row(std::size_t x) const { return full_mask(right_size()) << (x * right_size()); }

Mask ProductSpace::column(std::size_t y) const {
  Mask out = 0;
  for (std::size_t x = 0; x < left_size(); ++x) out |= bit(encode(x, y));
  return out;
}

Mask ProductSpace::transpose(Mask cells) const {
  Mask out = 0;
  for_each_bit(cells & all(), [&](std::size_t p) {
    const auto [x, y] = decode(p);
    out |= bit(y * left_size() + x);
  });
  return out;
}

std::vector<Topology> enumerate_topologies(std::size_t n) {
  if (n == 0 || n > 4) throw SizeError("topology enumeration supports 1 to 4 points");
  // Finite topologies are exactly the preorders; enumerate the off-diagonal
  // part of the specialization relation and keep the transitive ones.
  std::vector<std::size_t> off_diagonal;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x != y) off_diagonal.push_back(x * n + y);
    }
  }
  const Mask diagonal = Rel::identity(n).bits();
  std::vector<std::pair<std::vector<Mask>, Topology>> found;
  for (Mask choice = 0; choice < (Mask{1} << off_diagonal.size()); ++choice) {
    Mask bits = diagonal;
    for (std::size_t i = 0; i < off_diagonal.size(); ++i) {
      if (has(choice, i)) bits |= bit(off_diagonal[i]);
    }
    const Rel preorder(n, bits);
    if (transitive_closure(preorder) != preorder) continue;
    Topology t = Topology::from_specialization(preorder);
    found.emplace_back(t.opens(), std::move(t));
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Topology> out;
  out.reserve(found.size());
  for (auto& entry : found) out.push_back(std::move(entry.second));
  return out;
}

}  // namespace ultrarel
