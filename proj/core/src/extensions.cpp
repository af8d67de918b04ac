#include "ultrarel/extensions.hpp"

#include <optional>
#include <string>

#include "ultrarel/error.hpp"

namespace ultrarel {

std::string_view to_string(Condition c) {
  switch (c) {
    case Condition::c0: return "c0";
    case Condition::ci: return "ci";
    case Condition::cii: return "cii";
    case Condition::ciii: return "ciii";
    case Condition::civ: return "civ";
    case Condition::cv: return "cv";
    case Condition::cvi: return "cvi";
  }
  return "c0";
}

Condition condition_from_string(std::string_view s) {
  for (Condition c : kAllConditions) {
    if (to_string(c) == s) return c;
  }
  throw ValidationError("unknown condition '" + std::string(s) + "'");
}

namespace {

void require_carrier(const Rel& r, const FilterGen& f) {
  if (f.size() != r.size()) throw DimensionError("filter and relation live on different carriers");
}

/// {x : exists y in s, R(x, y)}
Mask some_successor_in(const Rel& r, Mask s) {
  Mask out = 0;
  for (std::size_t x = 0; x < r.size(); ++x) {
    for (std::size_t y = 0; y < r.size(); ++y) {
      if (has(s, y) && r.contains(x, y)) out |= bit(x);
    }
  }
  return out;
}

/// {y : exists x in s, R(x, y)}
Mask some_predecessor_in(const Rel& r, Mask s) {
  Mask out = 0;
  for (std::size_t y = 0; y < r.size(); ++y) {
    for (std::size_t x = 0; x < r.size(); ++x) {
      if (has(s, x) && r.contains(x, y)) out |= bit(y);
    }
  }
  return out;
}

/// {x : for all y in s, R(x, y)}
Mask all_successors_in(const Rel& r, Mask s) {
  Mask out = 0;
  for (std::size_t x = 0; x < r.size(); ++x) {
    bool all = true;
    for_each_bit(s, [&](std::size_t y) { all = all && r.contains(x, y); });
    if (all) out |= bit(x);
  }
  return out;
}

/// {y : for all x in s, R(x, y)}
Mask all_predecessors_in(const Rel& r, Mask s) {
  Mask out = 0;
  for (std::size_t y = 0; y < r.size(); ++y) {
    bool all = true;
    for_each_bit(s, [&](std::size_t x) { all = all && r.contains(x, y); });
    if (all) out |= bit(y);
  }
  return out;
}

}  // namespace

bool condition(const Rel& r, const FilterGen& u, const FilterGen& v, Condition which) {
  require_carrier(r, u);
  require_carrier(r, v);
  const std::size_t n = r.size();
  const Mask all = r.carrier().all();
  bool result = false;
  switch (which) {
    case Condition::c0:
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          result = result || (u.contains(bit(x)) && v.contains(bit(y)) && r.contains(x, y));
        }
      }
      return result;
    case Condition::ci:
      result = true;
      for_each_superset(v.gen(), all, [&](Mask s) { result = result && u.contains(some_successor_in(r, s)); });
      return result;
    case Condition::cii:
      result = true;
      for_each_superset(u.gen(), all, [&](Mask s) { result = result && v.contains(some_predecessor_in(r, s)); });
      return result;
    case Condition::ciii:
      for_each_superset(v.gen(), all, [&](Mask s) { result = result || u.contains(all_successors_in(r, s)); });
      return result;
    case Condition::civ:
      for_each_superset(u.gen(), all, [&](Mask s) { result = result || v.contains(all_predecessors_in(r, s)); });
      return result;
    case Condition::cv: {
      Mask xs = 0;
      for (std::size_t x = 0; x < n; ++x) {
        if (v.contains(r.row(x))) xs |= bit(x);
      }
      return u.contains(xs);
    }
    case Condition::cvi: {
      Mask ys = 0;
      for (std::size_t y = 0; y < n; ++y) {
        if (u.contains(r.column(y))) ys |= bit(y);
      }
      return v.contains(ys);
    }
  }
  return false;
}

namespace {

Rel principal_evaluation(const Rel& r, Condition which) {
  const std::size_t n = r.size();
  Mask bits = 0;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (condition(r, FilterGen::principal(n, x), FilterGen::principal(n, y), which)) bits |= bit(x * n + y);
    }
  }
  return Rel(n, bits);
}

}  // namespace

Rel star_ultra(const Rel& r) { return principal_evaluation(r, Condition::ci); }

Rel tilde_ultra(const Rel& r) { return principal_evaluation(r, Condition::cv); }

FilterRel::FilterRel(std::size_t n) : n_(n), rows_(filter_count(n), 0) {}

FilterRel::FilterRel(std::size_t n, std::vector<Mask> rows) : n_(n), rows_(std::move(rows)) {
  const std::size_t count = filter_count(n);
  if (rows_.size() != count) throw DimensionError("filter relation needs one row per filter");
  for (Mask m : rows_) {
    if (!is_subset(m, full_mask(count))) throw ValidationError("filter relation row outside the filter space");
  }
}

FilterRel FilterRel::universal(std::size_t n) {
  const std::size_t count = filter_count(n);
  return FilterRel(n, std::vector<Mask>(count, full_mask(count)));
}

Rel FilterRel::principal_block() const {
  Mask bits = 0;
  for (std::size_t x = 0; x < n_; ++x) {
    for (std::size_t y = 0; y < n_; ++y) {
      if (contains(FilterGen::principal(n_, x), FilterGen::principal(n_, y))) bits |= bit(x * n_ + y);
    }
  }
  return Rel(n_, bits);
}

std::vector<Pair> FilterRel::pairs() const {
  std::vector<Pair> out;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for_each_bit(rows_[i], [&](std::size_t j) { out.emplace_back(i, j); });
  }
  return out;
}

namespace {

void require_same(const FilterRel& a, const FilterRel& b) {
  if (a.size() != b.size()) throw DimensionError("filter relations over different carriers");
}

}  // namespace

FilterRel complement(const FilterRel& a) {
  std::vector<Mask> rows = a.rows();
  for (Mask& m : rows) m = ~m & full_mask(a.index_count());
  return FilterRel(a.size(), std::move(rows));
}

FilterRel union_of(const FilterRel& a, const FilterRel& b) {
  require_same(a, b);
  std::vector<Mask> rows = a.rows();
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] |= b.row(i);
  return FilterRel(a.size(), std::move(rows));
}

FilterRel intersection(const FilterRel& a, const FilterRel& b) {
  require_same(a, b);
  std::vector<Mask> rows = a.rows();
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] &= b.row(i);
  return FilterRel(a.size(), std::move(rows));
}

FilterRel inverse(const FilterRel& a) {
  std::vector<Mask> rows(a.index_count(), 0);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for_each_bit(a.row(i), [&](std::size_t j) { rows[j] |= bit(i); });
  }
  return FilterRel(a.size(), std::move(rows));
}

FilterRel compose(const FilterRel& r, const FilterRel& s) {
  require_same(r, s);
  std::vector<Mask> rows(r.index_count(), 0);
  for (std::size_t c = 0; c < rows.size(); ++c) {
    for_each_bit(s.row(c), [&](std::size_t d) { rows[c] |= r.row(d); });
  }
  return FilterRel(r.size(), std::move(rows));
}

bool is_subrelation(const FilterRel& a, const FilterRel& b) {
  require_same(a, b);
  for (std::size_t i = 0; i < a.index_count(); ++i) {
    if (!is_subset(a.row(i), b.row(i))) return false;
  }
  return true;
}

FilterRel star_filter(const Rel& r) {
  const std::size_t n = r.size();
  const std::size_t count = filter_count(n);
  std::vector<Mask> rows(count, 0);
  for (std::size_t c = 0; c < count; ++c) {
    const Mask reach = image(r, FilterGen::from_index(n, c).gen());
    for (std::size_t d = 0; d < count; ++d) {
      if (meets(FilterGen::from_index(n, d).gen(), reach)) rows[c] |= bit(d);
    }
  }
  return FilterRel(n, std::move(rows));
}

bool is_centered(std::span<const Mask> family) {
  // For a finite family the intersection of all members is contained in the
  // intersection of every subfamily, so it alone decides centeredness.
  Mask meet = ~Mask{0};
  for (Mask m : family) meet &= m;
  return family.empty() || meet != 0;
}

FilterRel star_filter_literal(const Rel& r) {
  const std::size_t n = r.size();
  const Mask all = r.carrier().all();
  const std::vector<FilterGen> filters = all_filters(n);
  std::vector<Mask> rows(filters.size(), 0);
  std::vector<Mask> family;
  for (const FilterGen& c : filters) {
    for (const FilterGen& d : filters) {
      bool holds = true;
      for_each_superset(c.gen(), all, [&](Mask a) {
        if (!holds) return;
        family.clear();
        for_each_superset(d.gen(), all, [&](Mask member) { family.push_back(member); });
        family.push_back(some_predecessor_in(r, a));
        holds = is_centered(family);
      });
      if (holds) rows[c.index()] |= bit(d.index());
    }
  }
  return FilterRel(n, std::move(rows));
}

FilterRel tilde_filter(const Rel& r) {
  const std::size_t n = r.size();
  const std::vector<FilterGen> filters = all_filters(n);
  std::vector<Mask> rows(filters.size(), 0);
  for (const FilterGen& c : filters) {
    for (const FilterGen& d : filters) {
      Mask xs = 0;
      for (std::size_t x = 0; x < n; ++x) {
        if (d.contains(r.row(x))) xs |= bit(x);
      }
      if (c.contains(xs)) rows[c.index()] |= bit(d.index());
    }
  }
  return FilterRel(n, std::move(rows));
}

bool rectangle_check(const Rel& r, const FilterGen& c, const FilterGen& d) {
  require_carrier(r, c);
  require_carrier(r, d);
  const std::size_t n = r.size();
  const Mask all = r.carrier().all();
  bool holds = true;
  for_each_superset(c.gen(), all, [&](Mask a) {
    for_each_superset(d.gen(), all, [&](Mask b) {
      Mask rectangle = 0;
      for_each_bit(a, [&](std::size_t x) { rectangle |= b << (x * n); });
      holds = holds && meets(r.bits(), rectangle);
    });
  });
  return holds;
}

bool filter_reduction_check(const Rel& r, const FilterGen& c, const FilterGen& d) {
  require_carrier(r, c);
  require_carrier(r, d);
  bool found = false;
  for_each_bit(ultra_set(c), [&](std::size_t x) {
    for_each_bit(ultra_set(d), [&](std::size_t y) { found = found || r.contains(x, y); });
  });
  return found;
}

std::pair<FilterGen, FilterGen> filter_projections(Mask w_gen, std::size_t n) {
  const Carrier carrier(n);
  if (w_gen == 0 || !is_subset(w_gen, full_mask(n * n))) {
    throw ValidationError("projection: generator must be a nonempty subset of the pair carrier");
  }
  Mask first = 0, second = 0;
  for_each_bit(w_gen, [&](std::size_t p) {
    first |= bit(p / n);
    second |= bit(p % n);
  });
  return {FilterGen(n, first), FilterGen(n, second)};
}

bool projection_witness_exists(const Rel& r, const FilterGen& c, const FilterGen& d) {
  require_carrier(r, c);
  require_carrier(r, d);
  const std::size_t n = r.size();
  // Any witness W lies inside R ∩ (gen c x gen d) and projecting is monotone,
  // so that largest candidate decides.
  Mask box = 0;
  for_each_bit(c.gen(), [&](std::size_t x) { box |= d.gen() << (x * n); });
  const Mask w = r.bits() & box;
  if (w == 0) return false;
  const auto [first, second] = filter_projections(w, n);
  return first == c && second == d;
}

MultiMap::MultiMap(Topology domain, Topology codomain, std::vector<Mask> values)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), values_(std::move(values)) {
  if (values_.size() != domain_.size()) throw DimensionError("multi-valued map needs one value per domain point");
  for (std::size_t x = 0; x < values_.size(); ++x) {
    if (values_[x] == 0 || !codomain_.is_closed(values_[x])) {
      throw ValidationError("value at " + std::to_string(x) + " (" + format_set(values_[x]) +
                            ") is not a nonempty closed set");
    }
  }
}

MultiMap r_bullet(const Rel& r, const Topology& t) {
  if (t.size() != r.size()) throw DimensionError("R-bullet: topology and relation carriers differ");
  std::vector<Mask> values(r.size());
  for (std::size_t x = 0; x < r.size(); ++x) {
    if (r.row(x) == 0) throw PreconditionError("R-bullet: row " + std::to_string(x) + " is empty");
    values[x] = t.closure(r.row(x));
  }
  return MultiMap(Topology::discrete(r.size()), t, std::move(values));
}

Mask graph_cells(const MultiMap& f) {
  const std::size_t m = f.codomain().size();
  if (f.domain().size() * m > kMaskBits) throw SizeError("graph of the map exceeds 64 cells");
  Mask out = 0;
  for (std::size_t x = 0; x < f.domain().size(); ++x) out |= f.value(x) << (x * m);
  return out;
}

Mask star_as_map(const Rel& r, const FilterGen& c) {
  require_carrier(r, c);
  const Mask all = r.carrier().all();
  Mask out = all;
  // Closure in the discrete space is the identity.
  for_each_superset(c.gen(), all, [&](Mask a) { out &= image(r, a); });
  return out;
}

std::string_view to_string(Semicontinuity s) {
  switch (s) {
    case Semicontinuity::lower: return "lower";
    case Semicontinuity::upper: return "upper";
    case Semicontinuity::vietoris: return "vietoris";
  }
  return "vietoris";
}

bool vietoris_continuous(const MultiMap& f, const HyperSpace& codomain, Flavor which) {
  if (!(codomain.base() == f.codomain())) throw DimensionError("hyperspace built over a different codomain");
  std::vector<std::size_t> index(f.domain().size());
  for (std::size_t x = 0; x < index.size(); ++x) index[x] = *codomain.index_of(f.value(x));
  const Topology& target = codomain.topology(which);
  // Opens are unions of minimal neighbourhoods and preimages preserve unions.
  for (std::size_t q = 0; q < codomain.point_count(); ++q) {
    const Mask nbhd = target.neighbourhood(q);
    Mask pre = 0;
    for (std::size_t x = 0; x < index.size(); ++x) {
      if (has(nbhd, index[x])) pre |= bit(x);
    }
    if (!f.domain().is_open(pre)) return false;
  }
  return true;
}

bool semicontinuity(const MultiMap& f, Semicontinuity which, const HyperSpace* hyper) {
  if (which == Semicontinuity::vietoris) {
    if (hyper != nullptr) return vietoris_continuous(f, *hyper, Flavor::full);
    return vietoris_continuous(f, HyperSpace(f.codomain()), Flavor::full);
  }
  for (Mask o : f.codomain().opens()) {
    Mask pre = 0;
    for (std::size_t x = 0; x < f.domain().size(); ++x) {
      const bool in = which == Semicontinuity::lower ? meets(f.value(x), o) : is_subset(f.value(x), o);
      if (in) pre |= bit(x);
    }
    if (!f.domain().is_open(pre)) return false;
  }
  return true;
}

bool semicontinuity_closed_form(const MultiMap& f, Semicontinuity which, const HyperSpace* hyper) {
  if (which == Semicontinuity::vietoris) {
    std::optional<HyperSpace> own;
    if (hyper == nullptr) hyper = &own.emplace(f.codomain());
    else if (!(hyper->base() == f.codomain())) throw DimensionError("hyperspace built over a different codomain");
    const HyperSpace& h = *hyper;
    std::vector<std::size_t> index(f.domain().size());
    for (std::size_t x = 0; x < index.size(); ++x) index[x] = *h.index_of(f.value(x));
    for (Mask closed : h.topology(Flavor::full).closed_sets()) {
      Mask pre = 0;
      for (std::size_t x = 0; x < index.size(); ++x) {
        if (has(closed, index[x])) pre |= bit(x);
      }
      if (!f.domain().is_closed(pre)) return false;
    }
    return true;
  }
  for (Mask c : f.codomain().closed_sets()) {
    Mask pre = 0;
    for (std::size_t x = 0; x < f.domain().size(); ++x) {
      const bool in = which == Semicontinuity::lower ? is_subset(f.value(x), c) : meets(f.value(x), c);
      if (in) pre |= bit(x);
    }
    if (!f.domain().is_closed(pre)) return false;
  }
  return true;
}

FilterGen pushforward(const FilterGen& c, std::span<const std::size_t> h, std::size_t m) {
  if (h.size() != c.size()) throw DimensionError("pushforward: map length differs from the carrier");
  const Mask all = Carrier(m).all();
  // h̄(C) = {T : h^{-1}(T) ∈ C}; its generator is the meet of its members.
  Mask gen = all;
  for_each_subset(all, [&](Mask t) {
    Mask pre = 0;
    for (std::size_t x = 0; x < h.size(); ++x) {
      if (has(t, h[x])) pre |= bit(x);
    }
    if (c.contains(pre)) gen &= t;
  });
  return FilterGen(m, gen);
}

bool hom_preservation_check(std::span<const std::size_t> h, const Rel& r, const Rel& s) {
  if (!is_homomorphism(h, r, s)) throw PreconditionError("map is not a homomorphism of the structures");
  const FilterRel star_r = star_filter(r), star_s = star_filter(s);
  const FilterRel tilde_r = tilde_filter(r), tilde_s = tilde_filter(s);
  const std::vector<FilterGen> filters = all_filters(r.size());
  std::vector<FilterGen> image;
  image.reserve(filters.size());
  for (const FilterGen& c : filters) image.push_back(pushforward(c, h, s.size()));
  for (const FilterGen& c : filters) {
    for (const FilterGen& d : filters) {
      const FilterGen& hc = image[c.index()];
      const FilterGen& hd = image[d.index()];
      if (star_r.contains(c, d) && !star_s.contains(hc, hd)) return false;
      if (tilde_r.contains(c, d) && !tilde_s.contains(hc, hd)) return false;
    }
  }
  return true;
}

}  // namespace ultrarel
