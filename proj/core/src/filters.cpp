#include "ultrarel/filters.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "ultrarel/error.hpp"

namespace ultrarel {

FilterGen::FilterGen(std::size_t n, Mask gen) : carrier_(n), gen_(gen) {
  if (gen == 0) throw ValidationError("filter generator must be nonempty");
  if (!carrier_.contains(gen)) throw ValidationError("filter generator " + format_set(gen) + " outside the carrier");
}

std::size_t filter_count(std::size_t n) { return static_cast<std::size_t>(full_mask(Carrier(n).size())); }

std::vector<FilterGen> all_filters(std::size_t n) {
  std::vector<FilterGen> out;
  const std::size_t total = filter_count(n);
  out.reserve(total);
  for (std::size_t i = 0; i < total; ++i) out.push_back(FilterGen::from_index(n, i));
  return out;
}

Mask ultra_set(const FilterGen& f) {
  const Mask all = full_mask(f.size());
  Mask out = 0;
  for (std::size_t x = 0; x < f.size(); ++x) {
    // x̂ extends f iff every member of f contains x.
    bool extends = true;
    for_each_superset(f.gen(), all, [&](Mask member) { extends = extends && has(member, x); });
    if (extends) out |= bit(x);
  }
  return out;
}

FilterGen meet_of_principals(std::size_t n, Mask points) {
  const Mask all = Carrier(n).all();
  if (points == 0 || !is_subset(points, all)) throw ValidationError("meet of principals needs a nonempty point set");
  // Members are the S lying in every x̂; the generator is their intersection.
  Mask gen = all;
  for_each_subset(all, [&](Mask s) {
    bool member = true;
    for_each_bit(points, [&](std::size_t x) { member = member && has(s, x); });
    if (member) gen &= s;
  });
  return FilterGen(n, gen);
}

bool compatible(const FilterGen& a, const FilterGen& b) { return meets(a.gen(), b.gen()); }

std::string to_text(const FilterGen& f) { return "gen" + format_set(f.gen()); }

FilterGen filter_from_text(std::string_view text, std::size_t n) {
  auto fail = [&](const std::string& why) -> FilterGen {
    throw ValidationError("bad filter literal '" + std::string(text) + "': " + why);
  };
  if (text.substr(0, 4) != "gen{" || text.back() != '}') return fail("expected gen{...}");
  const std::string_view body = text.substr(4, text.size() - 5);
  Mask gen = 0;
  std::size_t pos = 0;
  while (pos < body.size()) {
    std::size_t end = body.find(',', pos);
    if (end == std::string_view::npos) end = body.size();
    const std::string_view tok = body.substr(pos, end - pos);
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); })) {
      return fail("element '" + std::string(tok) + "' is not a number");
    }
    const std::size_t x = std::stoul(std::string(tok));
    if (x >= n) return fail("element " + std::to_string(x) + " out of range for n=" + std::to_string(n));
    if (has(gen, x)) return fail("duplicate element " + std::to_string(x));
    gen |= bit(x);
    pos = end + 1;
  }
  return FilterGen(n, gen);
}

std::string_view to_string(Flavor f) {
  switch (f) {
    case Flavor::lower: return "lower";
    case Flavor::upper: return "upper";
    case Flavor::full: return "full";
  }
  return "full";
}

Flavor flavor_from_string(std::string_view s) {
  if (s == "lower") return Flavor::lower;
  if (s == "upper") return Flavor::upper;
  if (s == "full") return Flavor::full;
  throw ValidationError("unknown Vietoris flavour '" + std::string(s) + "'");
}

namespace {

std::vector<Mask> nonempty_closed_sets(const Topology& base) {
  std::vector<Mask> closed = base.closed_sets();
  closed.erase(std::remove(closed.begin(), closed.end(), Mask{0}), closed.end());
  if (closed.size() > kMaskBits) {
    throw SizeError("hyperspace would have " + std::to_string(closed.size()) + " points; the cap is 64");
  }
  return closed;
}

Mask hat_of(const std::vector<Mask>& points, Mask a, Hat which) {
  Mask out = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const bool in = which == Hat::minus ? is_subset(points[i], a) : meets(points[i], a);
    if (in) out |= bit(i);
  }
  return out;
}

Topology vietoris_topology(const Topology& base, const std::vector<Mask>& points, bool lower, bool upper) {
  std::vector<Mask> generators;
  for (Mask o : base.opens()) {
    if (lower) generators.push_back(hat_of(points, o, Hat::plus));
    if (upper) generators.push_back(hat_of(points, o, Hat::minus));
  }
  return Topology::generated_by(points.size(), generators);
}

}  // namespace

HyperSpace::HyperSpace(Topology base)
    : base_(std::move(base)),
      points_(nonempty_closed_sets(base_)),
      lower_(vietoris_topology(base_, points_, true, false)),
      upper_(vietoris_topology(base_, points_, false, true)),
      full_(vietoris_topology(base_, points_, true, true)) {}

std::optional<std::size_t> HyperSpace::index_of(Mask closed_set) const {
  const auto it = std::lower_bound(points_.begin(), points_.end(), closed_set);
  if (it == points_.end() || *it != closed_set) return std::nullopt;
  return static_cast<std::size_t>(it - points_.begin());
}

const Topology& HyperSpace::topology(Flavor f) const {
  switch (f) {
    case Flavor::lower: return lower_;
    case Flavor::upper: return upper_;
    case Flavor::full: return full_;
  }
  return full_;
}

Mask hatted_set(const HyperSpace& h, Mask a, Hat which) {
  if (!is_subset(a, h.base().all())) throw ValidationError("hatted set: subset outside the base carrier");
  return hat_of(h.points(), a, which);
}

Mask vietoris_basic(const HyperSpace& h, std::span<const Mask> family) {
  Mask cover = 0;
  for (Mask o : family) {
    if (!h.base().is_open(o)) throw ValidationError("Vietoris basic set: " + format_set(o) + " is not open");
    cover |= o;
  }
  Mask out = 0;
  for (std::size_t i = 0; i < h.point_count(); ++i) {
    const Mask b = h.points()[i];
    if (!is_subset(b, cover)) continue;
    if (std::all_of(family.begin(), family.end(), [b](Mask o) { return meets(b, o); })) out |= bit(i);
  }
  return out;
}

Mask vietoris_basic_by_hats(const HyperSpace& h, std::span<const Mask> family) {
  Mask cover = 0;
  for (Mask o : family) cover |= o;
  Mask out = hatted_set(h, cover, Hat::minus);
  for (Mask o : family) out &= hatted_set(h, o, Hat::plus);
  return out;
}

Mask vietoris_closure_formula(const HyperSpace& h, Mask s, Flavor which) {
  if (!is_subset(s, h.all())) throw ValidationError("closure: point set outside the hyperspace");
  const std::vector<Mask>& pts = h.points();
  const std::size_t p = pts.size();
  auto lower = [&] {
    if (p > 20) throw SizeError("lower Vietoris closure formula enumerates 2^" + std::to_string(p) + " families");
    std::vector<Mask> minus(p);
    for (std::size_t i = 0; i < p; ++i) minus[i] = hat_of(pts, pts[i], Hat::minus);
    // unions[F] = ⋃_{C∈F} C^-, built by dropping the lowest member.
    std::vector<Mask> unions(std::size_t{1} << p, 0);
    Mask out = h.all();
    for (std::size_t f = 1; f < unions.size(); ++f) {
      unions[f] = unions[f & (f - 1)] | minus[lowest(f)];
      if (is_subset(s, unions[f])) out &= unions[f];
    }
    if (s == 0) out = 0;  // F = ∅ covers S = ∅ with the empty union.
    return out;
  };
  auto upper = [&] {
    // C = ∅ is closed as well, and ∅^+ = ∅ covers S = ∅.
    if (s == 0) return Mask{0};
    Mask out = h.all();
    for (Mask c : pts) {
      const Mask plus = hat_of(pts, c, Hat::plus);
      if (is_subset(s, plus)) out &= plus;
    }
    return out;
  };
  switch (which) {
    case Flavor::lower: return lower();
    case Flavor::upper: return upper();
    case Flavor::full: return lower() & upper();
  }
  return 0;
}

Mask vietoris_closure_generic(const HyperSpace& h, Mask s, Flavor which) {
  if (!is_subset(s, h.all())) throw ValidationError("closure: point set outside the hyperspace");
  return h.topology(which).closure(s);
}

Mask vietoris_closure(const HyperSpace& h, Mask s, Flavor which) {
  const Mask formula = vietoris_closure_formula(h, s, which);
  const Mask generic = vietoris_closure_generic(h, s, which);
  if (formula != generic) {
    throw InvariantError(std::string(to_string(which)) + " Vietoris closure of " + format_set(s) +
                         ": formula gives " + format_set(formula) + ", topology gives " + format_set(generic));
  }
  return formula;
}

FilterSet filter_vietoris_closure(std::size_t n, FilterSet s, Flavor which) {
  if (n > 4) throw SizeError("filter Vietoris closure quantifies over all filter families; n <= 4");
  const std::vector<FilterGen> filters = all_filters(n);
  const std::size_t count = filters.size();
  if (!is_subset(s, full_mask(count))) throw ValidationError("filter set outside the filter space");
  const std::vector<std::size_t> members = elements(s);

  // extends[c]: the filters E with C ⊆ E.
  std::vector<FilterSet> extends(count, 0);
  for (std::size_t c = 0; c < count; ++c) {
    for (std::size_t e = 0; e < count; ++e) {
      if (filters[c].included_in(filters[e])) extends[c] |= bit(e);
    }
  }

  auto in_lower = [&](std::size_t d) {
    std::vector<FilterSet> covered(std::size_t{1} << count, 0);
    for (std::size_t f = 0; f < covered.size(); ++f) {
      if (f != 0) covered[f] = covered[f & (f - 1)] | extends[lowest(f)];
      // "each filter in S extends some C in F" ...
      const bool premise = is_subset(s, covered[f]);
      // ... "then D extends some C in F"
      if (premise && !has(covered[f], d)) return false;
    }
    return true;
  };
  auto in_upper = [&](std::size_t d) {
    if (members.empty()) return false;  // the empty set is closed
    for (const FilterGen& c : filters) {
      const bool premise = std::all_of(members.begin(), members.end(),
                                       [&](std::size_t e) { return compatible(filters[e], c); });
      if (premise && !compatible(c, filters[d])) return false;
    }
    return true;
  };

  FilterSet out = 0;
  for (std::size_t d = 0; d < count; ++d) {
    bool in = false;
    switch (which) {
      case Flavor::lower: in = in_lower(d); break;
      case Flavor::upper: in = in_upper(d); break;
      case Flavor::full: in = in_lower(d) && in_upper(d); break;
    }
    if (in) out |= bit(d);
  }
  return out;
}

FilterSet filter_vietoris_closure_transport(std::size_t n, FilterSet s, Flavor which) {
  const HyperSpace h(Topology::discrete(n));
  const std::vector<FilterGen> filters = all_filters(n);
  auto to_point = [&](std::size_t filter_index) { return *h.index_of(ultra_set(filters[filter_index])); };
  Mask points = 0;
  for_each_bit(s, [&](std::size_t i) { points |= bit(to_point(i)); });
  const Mask closed = vietoris_closure_generic(h, points, which);
  FilterSet out = 0;
  for (std::size_t i = 0; i < filters.size(); ++i) {
    if (has(closed, to_point(i))) out |= bit(i);
  }
  return out;
}

}  // namespace ultrarel
