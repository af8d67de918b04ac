#include <algorithm>
#include <iterator>
#include <string>
#include <utility>

#include "internal.hpp"
#include "ultrarel/error.hpp"
#include "ultrarel/harness.hpp"
#include "ultrarel/sections.hpp"

namespace ultrarel {

namespace {

using K = InstanceKind;
using detail::compose_entry;
using detail::star_ultra_of;
using detail::tilde_ultra_of;
using detail::star_of;
using detail::tilde_of;

class Registry {
 public:
  template <class F>
  void add(std::string name, std::string level, K kind, F&& f) {
    laws.push_back(Law{std::move(name), std::move(level), kind, std::forward<F>(f)});
  }

  std::vector<Law> laws;
};

bool implies(bool a, bool b) { return !a || b; }

std::size_t point_of(const FilterGen& f) { return lowest(f.gen()); }

ProductSpace space_of(const Instance& in) { return ProductSpace(*in.left, *in.right); }

void require_square(const Instance& in) {
  if (in.left->size() != in.right->size()) throw ValidationError("composition needs a space times itself");
}

Rel as_rel(const ProductSpace& space, Mask cells) { return Rel(space.left_size(), cells); }

// ---------------------------------------------------------------------------

void add_conditions(Registry& reg) {
  for (Condition c : kAllConditions) {
    reg.add(std::string(to_string(c)) + "(x̂, ŷ) = R(x, y)", "principal", K::rel_cd, [c](const Instance& in) {
      return condition(*in.r, *in.c, *in.d, c) == in.r->contains(point_of(*in.c), point_of(*in.d));
    });
  }
  for (Condition a : kAllConditions) {
    for (Condition b : kAllConditions) {
      if (a == b) continue;
      const std::string name = std::string(to_string(a)) + " -> " + std::string(to_string(b));
      for (const char* level : {"principal", "filter"}) {
        reg.add(name, level, K::rel_cd, [a, b](const Instance& in) {
          return implies(condition(*in.r, *in.c, *in.d, a), condition(*in.r, *in.c, *in.d, b));
        });
      }
    }
  }
  reg.add("R* = R", "principal", K::rel, [](const Instance& in) { return star_ultra_of(*in.r) == *in.r; });
  reg.add("R~ = R", "principal", K::rel, [](const Instance& in) { return tilde_ultra_of(*in.r) == *in.r; });
}

// ---------------------------------------------------------------------------

/// The inclusion diagram between R*, R~ and their duals, evaluated with `star` and `tilde`
/// producing relations of one level (Rel or FilterRel).
template <class Star, class Tilde>
void add_diagram(Registry& reg, const std::string& level, Star star, Tilde tilde) {
  auto lower = [star](const Rel& r) { return complement(star(complement(r))); };
  auto inv_tilde = [tilde](const Rel& r) { return inverse(tilde(inverse(r))); };
  reg.add("-((-R)*) ⊆ R~", level, K::rel,
          [lower, tilde](const Instance& in) { return is_subrelation(lower(*in.r), tilde(*in.r)); });
  reg.add("R~ ⊆ R*", level, K::rel,
          [star, tilde](const Instance& in) { return is_subrelation(tilde(*in.r), star(*in.r)); });
  reg.add("-((-R)*) ⊆ (R^-1~)^-1", level, K::rel,
          [lower, inv_tilde](const Instance& in) { return is_subrelation(lower(*in.r), inv_tilde(*in.r)); });
  reg.add("(R^-1~)^-1 ⊆ R*", level, K::rel,
          [star, inv_tilde](const Instance& in) { return is_subrelation(inv_tilde(*in.r), star(*in.r)); });
  reg.add("R* = ((R^-1)*)^-1", level, K::rel,
          [star](const Instance& in) { return star(*in.r) == inverse(star(inverse(*in.r))); });
  reg.add("R~ = -((-R)~)", level, K::rel,
          [tilde](const Instance& in) { return tilde(*in.r) == complement(tilde(complement(*in.r))); });
}

void add_table_rows(Registry& reg) {
  auto empty = [](std::size_t n) { return Rel(n); };
  auto univ = [](std::size_t n) { return Rel::universal(n); };
  auto eq = [](std::size_t n) { return Rel::identity(n); };

  reg.add("R* = R for R = ∅, U_X, =_X", "principal", K::carrier, [=](const Instance& in) {
    for (const Rel& r : {empty(in.n), univ(in.n), eq(in.n)}) {
      if (!(star_ultra_of(r) == r)) return false;
    }
    return true;
  });
  reg.add("R~ = R for R = ∅, U_X, =_X", "principal", K::carrier, [=](const Instance& in) {
    for (const Rel& r : {empty(in.n), univ(in.n), eq(in.n)}) {
      if (!(tilde_ultra_of(r) == r)) return false;
    }
    return true;
  });
  reg.add("∅* = ∅", "filter", K::carrier,
          [=](const Instance& in) { return star_filter(empty(in.n)) == FilterRel(in.n); });
  reg.add("∅~ = ∅", "filter", K::carrier,
          [=](const Instance& in) { return tilde_filter(empty(in.n)) == FilterRel(in.n); });
  reg.add("(U_X)* = U_εX", "filter", K::carrier,
          [=](const Instance& in) { return star_filter(univ(in.n)) == FilterRel::universal(in.n); });
  reg.add("(U_X)~ = U_εX", "filter", K::carrier,
          [=](const Instance& in) { return tilde_filter(univ(in.n)) == FilterRel::universal(in.n); });
  reg.add("(=_X)*(C, D) iff gen C meets gen D", "filter", K::carrier, [=](const Instance& in) {
    const FilterRel s = star_filter(eq(in.n));
    for (const FilterGen& c : all_filters(in.n)) {
      for (const FilterGen& d : all_filters(in.n)) {
        if (s.contains(c, d) != compatible(c, d)) return false;
      }
    }
    return true;
  });
  reg.add("(=_X)~(C, D) iff C = D is principal", "filter", K::carrier, [=](const Instance& in) {
    const FilterRel t = tilde_filter(eq(in.n));
    for (const FilterGen& c : all_filters(in.n)) {
      for (const FilterGen& d : all_filters(in.n)) {
        if (t.contains(c, d) != (c == d && c.is_principal())) return false;
      }
    }
    return true;
  });

  reg.add("R ⊆ -((-R)*)", "principal", K::rel, [](const Instance& in) {
    return is_subrelation(*in.r, complement(star_ultra_of(complement(*in.r))));
  });
  add_diagram(reg, "principal", [](const Rel& r) { return star_ultra_of(r); },
              [](const Rel& r) { return tilde_ultra_of(r); });
  add_diagram(reg, "filter", [](const Rel& r) { return star_of(r); }, [](const Rel& r) { return tilde_of(r); });
}

// ---------------------------------------------------------------------------

void add_distributivity(Registry& reg) {
  // Principal level: whole relations.
  reg.add("(-R)~ = -R~", "principal", K::rel,
          [](const Instance& in) { return tilde_ultra_of(complement(*in.r)) == complement(tilde_ultra_of(*in.r)); });
  reg.add("(R ∩ S)~ = R~ ∩ S~", "principal", K::rel_pair, [](const Instance& in) {
    return tilde_ultra_of(intersection(*in.r, *in.s)) == intersection(tilde_ultra_of(*in.r), tilde_ultra_of(*in.s));
  });
  reg.add("(R ∪ S)~ = R~ ∪ S~", "principal", K::rel_pair, [](const Instance& in) {
    return tilde_ultra_of(union_of(*in.r, *in.s)) == union_of(tilde_ultra_of(*in.r), tilde_ultra_of(*in.s));
  });
  reg.add("(R ∘ S)~ = R~ ∘ S~", "principal", K::rel_pair, [](const Instance& in) {
    return tilde_ultra_of(compose(*in.r, *in.s)) == compose(tilde_ultra_of(*in.r), tilde_ultra_of(*in.s));
  });
  reg.add("(R^-1)~ = (R~)^-1", "principal", K::rel,
          [](const Instance& in) { return tilde_ultra_of(inverse(*in.r)) == inverse(tilde_ultra_of(*in.r)); });
  reg.add("(-R)* = -R*", "principal", K::rel,
          [](const Instance& in) { return star_ultra_of(complement(*in.r)) == complement(star_ultra_of(*in.r)); });
  reg.add("(R ∩ S)* = R* ∩ S*", "principal", K::rel_pair, [](const Instance& in) {
    return star_ultra_of(intersection(*in.r, *in.s)) == intersection(star_ultra_of(*in.r), star_ultra_of(*in.s));
  });
  reg.add("(R ∪ S)* = R* ∪ S*", "principal", K::rel_pair, [](const Instance& in) {
    return star_ultra_of(union_of(*in.r, *in.s)) == union_of(star_ultra_of(*in.r), star_ultra_of(*in.s));
  });
  reg.add("(R ∘ S)* = R* ∘ S*", "principal", K::rel_pair, [](const Instance& in) {
    return star_ultra_of(compose(*in.r, *in.s)) == compose(star_ultra_of(*in.r), star_ultra_of(*in.s));
  });
  reg.add("(R^-1)* = (R*)^-1", "principal", K::rel,
          [](const Instance& in) { return star_ultra_of(inverse(*in.r)) == inverse(star_ultra_of(*in.r)); });
  reg.add("(R^+)* = (R*)^+", "principal", K::rel, [](const Instance& in) {
    return star_ultra_of(transitive_closure(*in.r)) == transitive_closure(star_ultra_of(*in.r));
  });
  reg.add("(R^=)* = (R*)^=", "principal", K::rel, [](const Instance& in) {
    return star_ultra_of(reflexive_closure(*in.r)) == reflexive_closure(star_ultra_of(*in.r));
  });

  // Filter level: one entry (C, D) at a time.
  auto at = [](const FilterRel& f, const Instance& in) { return f.contains(*in.c, *in.d); };
  reg.add("-R* ⊆ (-R)*", "filter", K::rel_cd,
          [at](const Instance& in) { return implies(!at(star_of(*in.r), in), at(star_of(complement(*in.r)), in)); });
  reg.add("(-R)* ⊆ -R*", "filter", K::rel_cd,
          [at](const Instance& in) { return implies(at(star_of(complement(*in.r)), in), !at(star_of(*in.r), in)); });
  reg.add("(R ∩ S)* ⊆ R* ∩ S*", "filter", K::rel_pair_cd, [at](const Instance& in) {
    return implies(at(star_of(intersection(*in.r, *in.s)), in), at(star_of(*in.r), in) && at(star_of(*in.s), in));
  });
  reg.add("R* ∩ S* ⊆ (R ∩ S)*", "filter", K::rel_pair_cd, [at](const Instance& in) {
    return implies(at(star_of(*in.r), in) && at(star_of(*in.s), in), at(star_of(intersection(*in.r, *in.s)), in));
  });
  reg.add("(R ∪ S)* = R* ∪ S*", "filter", K::rel_pair_cd, [at](const Instance& in) {
    return at(star_of(union_of(*in.r, *in.s)), in) == (at(star_of(*in.r), in) || at(star_of(*in.s), in));
  });
  reg.add("(R^-1)* = (R*)^-1", "filter", K::rel_cd, [at](const Instance& in) {
    return at(star_of(inverse(*in.r)), in) == star_of(*in.r).contains(*in.d, *in.c);
  });
  reg.add("(R ∘ S)* = R* ∘ S*", "filter", K::rel_pair_cd, [at](const Instance& in) {
    return at(star_of(compose(*in.r, *in.s)), in) ==
           compose_entry(star_of(*in.r), star_of(*in.s), in.c->index(), in.d->index());
  });
  reg.add("(⋃ atoms of R)* = ⋃ atom*", "filter", K::rel_cd, [at](const Instance& in) {
    bool any = false;
    for (const Pair& p : in.r->pairs()) any = any || at(star_of(Rel(in.r->size(), bit(p.first * in.r->size() + p.second))), in);
    return any == at(star_of(*in.r), in);
  });
  reg.add("(R ∩ S)~ = R~ ∩ S~", "filter", K::rel_pair_cd, [at](const Instance& in) {
    return at(tilde_of(intersection(*in.r, *in.s)), in) == (at(tilde_of(*in.r), in) && at(tilde_of(*in.s), in));
  });
  reg.add("(R ∪ S)~ = R~ ∪ S~", "filter", K::rel_pair_cd, [at](const Instance& in) {
    return at(tilde_of(union_of(*in.r, *in.s)), in) == (at(tilde_of(*in.r), in) || at(tilde_of(*in.s), in));
  });
  reg.add("(-R)~ = -R~", "filter", K::rel_cd,
          [at](const Instance& in) { return at(tilde_of(complement(*in.r)), in) == !at(tilde_of(*in.r), in); });
  reg.add("R~ ∘ S~ ⊆ (R ∘ S)~", "filter", K::rel_pair_cd, [at](const Instance& in) {
    return implies(compose_entry(tilde_of(*in.r), tilde_of(*in.s), in.c->index(), in.d->index()),
                   at(tilde_of(compose(*in.r, *in.s)), in));
  });
  reg.add("(R ∘ S)~ ⊆ R~ ∘ S~", "filter", K::rel_pair_cd, [at](const Instance& in) {
    return implies(at(tilde_of(compose(*in.r, *in.s)), in),
                   compose_entry(tilde_of(*in.r), tilde_of(*in.s), in.c->index(), in.d->index()));
  });
  reg.add("(R^-1)~ = (R~)^-1", "filter", K::rel_cd, [at](const Instance& in) {
    return at(tilde_of(inverse(*in.r)), in) == tilde_of(*in.r).contains(*in.d, *in.c);
  });
}

// ---------------------------------------------------------------------------

bool some_projection(const Rel& r, const FilterGen& c, const FilterGen& d) {
  bool found = false;
  for_each_subset(r.bits(), [&](Mask w) {
    if (found || w == 0) return;
    const auto [first, second] = filter_projections(w, r.size());
    found = first == c && second == d;
  });
  return found;
}

void add_rectangles(Registry& reg) {
  reg.add("R*(C, D): closed form = literal quantifier form", "filter", K::rel_cd, [](const Instance& in) {
    return star_of(*in.r).contains(*in.c, *in.d) == detail::star_literal_of(*in.r).contains(*in.c, *in.d);
  });
  reg.add("R*(C, D) iff R meets every A × B", "filter", K::rel_cd, [](const Instance& in) {
    return star_of(*in.r).contains(*in.c, *in.d) == rectangle_check(*in.r, *in.c, *in.d);
  });
  reg.add("R*(C, D) iff R(x, y) for some x̂ ⊇ C, ŷ ⊇ D", "filter", K::rel_cd, [](const Instance& in) {
    return star_of(*in.r).contains(*in.c, *in.d) == filter_reduction_check(*in.r, *in.c, *in.d);
  });
  reg.add("R meets every A × B at (x̂, ŷ) iff R(x, y)", "principal", K::rel_cd, [](const Instance& in) {
    return rectangle_check(*in.r, *in.c, *in.d) == in.r->contains(point_of(*in.c), point_of(*in.d));
  });

  reg.add("R*(x̂, ŷ) iff a principal w ∋ R projects to (x̂, ŷ)", "principal", K::rel_cd, [](const Instance& in) {
    bool found = false;
    for_each_bit(in.r->bits(), [&](std::size_t p) {
      const auto [first, second] = filter_projections(bit(p), in.r->size());
      found = found || (first == *in.c && second == *in.d);
    });
    return condition(*in.r, *in.c, *in.d, Condition::ci) == found;
  });
  reg.add("projection witness: largest candidate = search over all w ∋ R", "filter", K::rel_cd,
          [](const Instance& in) {
            return projection_witness_exists(*in.r, *in.c, *in.d) == some_projection(*in.r, *in.c, *in.d);
          });
  reg.add("R*(C, D) -> some w ∋ R projects to (C, D)", "filter", K::rel_cd, [](const Instance& in) {
    return implies(star_of(*in.r).contains(*in.c, *in.d), some_projection(*in.r, *in.c, *in.d));
  });
  reg.add("some w ∋ R projects to (C, D) -> R*(C, D)", "filter", K::rel_cd, [](const Instance& in) {
    return implies(some_projection(*in.r, *in.c, *in.d), star_of(*in.r).contains(*in.c, *in.d));
  });
}

// ---------------------------------------------------------------------------

void add_closures(Registry& reg) {
  const std::string level = "product-space";
  reg.add("lcl(∅) = ∅", level, K::product, [](const Instance& in) { return lcl(space_of(in), 0) == 0; });
  reg.add("rcl(∅) = ∅", level, K::product, [](const Instance& in) { return rcl(space_of(in), 0) == 0; });
  reg.add("R ⊆ lcl R", level, K::product,
          [](const Instance& in) { return is_subset(in.cells, lcl(space_of(in), in.cells)); });
  reg.add("R ⊆ rcl R", level, K::product,
          [](const Instance& in) { return is_subset(in.cells, rcl(space_of(in), in.cells)); });
  reg.add("lcl(lcl R) = lcl R", level, K::product, [](const Instance& in) {
    const ProductSpace sp = space_of(in);
    const Mask l = lcl(sp, in.cells);
    return lcl(sp, l) == l;
  });
  reg.add("rcl(rcl R) = rcl R", level, K::product, [](const Instance& in) {
    const ProductSpace sp = space_of(in);
    const Mask r = rcl(sp, in.cells);
    return rcl(sp, r) == r;
  });
  reg.add("lcl R ∪ lcl S = lcl(R ∪ S)", level, K::product_pair, [](const Instance& in) {
    const ProductSpace sp = space_of(in);
    return (lcl(sp, in.cells) | lcl(sp, in.cells2)) == lcl(sp, in.cells | in.cells2);
  });
  reg.add("rcl R ∪ rcl S = rcl(R ∪ S)", level, K::product_pair, [](const Instance& in) {
    const ProductSpace sp = space_of(in);
    return (rcl(sp, in.cells) | rcl(sp, in.cells2)) == rcl(sp, in.cells | in.cells2);
  });
  reg.add("(lcl R^{-1})^{-1} = rcl R", level, K::product, [](const Instance& in) {
    const ProductSpace sp = space_of(in), sw = sp.swapped();
    return sw.transpose(lcl(sw, sp.transpose(in.cells))) == rcl(sp, in.cells);
  });
  reg.add("(rcl R^{-1})^{-1} = lcl R", level, K::product, [](const Instance& in) {
    const ProductSpace sp = space_of(in), sw = sp.swapped();
    return sw.transpose(rcl(sw, sp.transpose(in.cells))) == lcl(sp, in.cells);
  });

  for (Side side : {Side::left, Side::right}) {
    const std::string op = side == Side::left ? "lcl" : "rcl";
    reg.add("τ_" + op + " refines τ", level, K::space_pair, [side](const Instance& in) {
      const ProductSpace sp = space_of(in);
      return derived_topology(sp, side).refines(sp.pairs());
    });
    reg.add("closed sets of τ_" + op + " = fixed points of " + op, level, K::space_pair, [side](const Instance& in) {
      const ProductSpace sp = space_of(in);
      const Topology t = derived_topology(sp, side);
      bool ok = true;
      for_each_subset(sp.all(), [&](Mask s) {
        const Mask c = side == Side::left ? lcl(sp, s) : rcl(sp, s);
        ok = ok && (t.is_closed(s) == (c == s));
      });
      return ok;
    });
  }
  reg.add("τ_lcl ∩ τ_rcl = τ", level, K::space_pair, [](const Instance& in) {
    const ProductSpace sp = space_of(in);
    const std::vector<Mask> a = derived_topology(sp, Side::left).opens();
    const std::vector<Mask> b = derived_topology(sp, Side::right).opens();
    std::vector<Mask> both;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
    return both == sp.pairs().opens();
  });

  reg.add("rcl(lcl R) = (lcl((lcl R)^{-1}))^{-1}", level, K::product, [](const Instance& in) {
    const ProductSpace sp = space_of(in), sw = sp.swapped();
    const Mask l = lcl(sp, in.cells);
    return rcl(sp, l) == sw.transpose(lcl(sw, sp.transpose(l)));
  });
  reg.add("rcl(lcl R) = rcl((rcl R^{-1})^{-1})", level, K::product, [](const Instance& in) {
    const ProductSpace sp = space_of(in), sw = sp.swapped();
    return rcl(sp, lcl(sp, in.cells)) == rcl(sp, sw.transpose(rcl(sw, sp.transpose(in.cells))));
  });
  reg.add("lcl(rcl R) = (rcl((rcl R)^{-1}))^{-1}", level, K::product, [](const Instance& in) {
    const ProductSpace sp = space_of(in), sw = sp.swapped();
    const Mask r = rcl(sp, in.cells);
    return lcl(sp, r) == sw.transpose(rcl(sw, sp.transpose(r)));
  });
  reg.add("lcl(rcl R) = lcl((lcl R^{-1})^{-1})", level, K::product, [](const Instance& in) {
    const ProductSpace sp = space_of(in), sw = sp.swapped();
    return lcl(sp, rcl(sp, in.cells)) == lcl(sp, sw.transpose(lcl(sw, sp.transpose(in.cells))));
  });
  reg.add("rcl(lcl R) = R on discrete products", level, K::product, [](const Instance& in) {
    if (!in.left->is_discrete() || !in.right->is_discrete()) throw ValidationError("factors must be discrete");
    const ProductSpace sp = space_of(in);
    return rcl(sp, lcl(sp, in.cells)) == in.cells;
  });
  reg.add("lcl(rcl(lcl R)) = rcl(lcl R) and rcl(lcl(rcl R)) = lcl(rcl R)", level, K::product,
          [](const Instance& in) {
            const ProductSpace sp = space_of(in);
            const Mask rl = rcl(sp, lcl(sp, in.cells));
            const Mask lr = lcl(sp, rcl(sp, in.cells));
            return lcl(sp, rl) == rl && rcl(sp, lr) == lr;
          });
  reg.add("graph of R^∙ = lcl R in discrete × t", level, K::rel_topology, [](const Instance& in) {
    const ProductSpace sp(Topology::discrete(in.n), *in.right);
    return graph_cells(r_bullet(*in.r, *in.right)) == lcl(sp, in.r->bits());
  });

  // Closure in the product topology against the relational operations.
  reg.add("cl(R^-1) = (cl R)^-1", level, K::product, [](const Instance& in) {
    const ProductSpace sp = space_of(in), sw = sp.swapped();
    return sw.closure(sp.transpose(in.cells)) == sp.transpose(sp.closure(in.cells));
  });
  reg.add("cl(R ∪ S) = cl R ∪ cl S", level, K::product_pair, [](const Instance& in) {
    const ProductSpace sp = space_of(in);
    return sp.closure(in.cells | in.cells2) == (sp.closure(in.cells) | sp.closure(in.cells2));
  });
  reg.add("cl(R ∩ S) ⊆ cl R ∩ cl S", level, K::product_pair, [](const Instance& in) {
    const ProductSpace sp = space_of(in);
    return is_subset(sp.closure(in.cells & in.cells2), sp.closure(in.cells) & sp.closure(in.cells2));
  });
  reg.add("cl R ∩ cl S ⊆ cl(R ∩ S)", level, K::product_pair, [](const Instance& in) {
    const ProductSpace sp = space_of(in);
    return is_subset(sp.closure(in.cells) & sp.closure(in.cells2), sp.closure(in.cells & in.cells2));
  });
  auto closed_compose = [](const Instance& in) {
    require_square(in);
    const ProductSpace sp = space_of(in);
    const Rel lhs = as_rel(sp, sp.closure(compose(as_rel(sp, in.cells), as_rel(sp, in.cells2)).bits()));
    const Rel rhs = compose(as_rel(sp, sp.closure(in.cells)), as_rel(sp, sp.closure(in.cells2)));
    return std::pair{lhs, rhs};
  };
  reg.add("cl(R ∘ S) ⊆ cl R ∘ cl S", level, K::product_pair, [closed_compose](const Instance& in) {
    const auto [lhs, rhs] = closed_compose(in);
    return is_subrelation(lhs, rhs);
  });
  reg.add("cl R ∘ cl S ⊆ cl(R ∘ S)", level, K::product_pair, [closed_compose](const Instance& in) {
    const auto [lhs, rhs] = closed_compose(in);
    return is_subrelation(rhs, lhs);
  });
  reg.add("cl(R ∘ S) = cl R ∘ cl S on discrete spaces", level, K::product_pair, [closed_compose](const Instance& in) {
    if (!in.left->is_discrete()) throw ValidationError("the space must be discrete");
    const auto [lhs, rhs] = closed_compose(in);
    return lhs == rhs;
  });
}

// ---------------------------------------------------------------------------

void add_hyperspace(Registry& reg) {
  const std::string level = "hyperspace";
  for (Flavor f : {Flavor::lower, Flavor::upper, Flavor::full}) {
    const std::string tau = f == Flavor::lower ? "τ⁻" : f == Flavor::upper ? "τ⁺" : "τ";
    reg.add("cl_" + tau + " S by formula = closure in " + tau, level, K::hyper_set, [f](const Instance& in) {
      const HyperSpace& h = detail::hyperspace_of(*in.left);
      return vietoris_closure_formula(h, in.cells, f) == vietoris_closure_generic(h, in.cells, f);
    });
    reg.add(std::string(to_string(f)) + " filter closure = transported hyperspace closure", "filter",
            K::filter_set, [f](const Instance& in) {
              return filter_vietoris_closure(in.n, in.cells, f) == filter_vietoris_closure_transport(in.n, in.cells, f);
            });
  }
  reg.add("cl_τ S = cl_τ⁻ S ∩ cl_τ⁺ S", level, K::hyper_set, [](const Instance& in) {
    const HyperSpace& h = detail::hyperspace_of(*in.left);
    return vietoris_closure_generic(h, in.cells, Flavor::full) ==
           (vietoris_closure_generic(h, in.cells, Flavor::lower) & vietoris_closure_generic(h, in.cells, Flavor::upper));
  });
  reg.add("cl_τ S ⊆ cl_τ⁻ S ∩ cl_τ⁺ S", level, K::hyper_set, [](const Instance& in) {
    const HyperSpace& h = detail::hyperspace_of(*in.left);
    return is_subset(vietoris_closure_generic(h, in.cells, Flavor::full),
                     vietoris_closure_generic(h, in.cells, Flavor::lower) &
                         vietoris_closure_generic(h, in.cells, Flavor::upper));
  });
  reg.add("transported full closure ⊆ filter-side full closure", "filter", K::filter_set, [](const Instance& in) {
    return is_subset(filter_vietoris_closure_transport(in.n, in.cells, Flavor::full),
                     filter_vietoris_closure(in.n, in.cells, Flavor::full));
  });
  reg.add("A⁻ = P_cl ∖ (X ∖ A)⁺", level, K::base_subset, [](const Instance& in) {
    const HyperSpace& h = detail::hyperspace_of(*in.left);
    const Mask rest = in.left->all() & ~in.cells;
    return hatted_set(h, in.cells, Hat::minus) == (h.all() & ~hatted_set(h, rest, Hat::plus));
  });
  reg.add("C⁺ ∪ D⁺ = (C ∪ D)⁺ with C ∪ D closed", level, K::base_subsets, [](const Instance& in) {
    const HyperSpace& h = detail::hyperspace_of(*in.left);
    if (!in.left->is_closed(in.cells) || !in.left->is_closed(in.cells2)) throw ValidationError("sets must be closed");
    return in.left->is_closed(in.cells | in.cells2) &&
           (hatted_set(h, in.cells, Hat::plus) | hatted_set(h, in.cells2, Hat::plus)) ==
               hatted_set(h, in.cells | in.cells2, Hat::plus);
  });
  reg.add("<F> = (⋃F)⁻ ∩ ⋂ O⁺", level, K::hyper_family, [](const Instance& in) {
    const HyperSpace& h = detail::hyperspace_of(*in.left);
    return vietoris_basic(h, in.family) == vietoris_basic_by_hats(h, in.family);
  });
  reg.add("finite sets are dense in P_cl", level, K::base, [](const Instance& in) {
    const HyperSpace& h = detail::hyperspace_of(*in.left);
    return vietoris_closure_generic(h, h.all(), Flavor::full) == h.all();
  });

  reg.add("ultra_set(⋂ {x̂ : x ∈ A}) = A", "discrete", K::carrier_set,
          [](const Instance& in) { return ultra_set(meet_of_principals(in.n, in.cells)) == in.cells; });
  reg.add("A ⊆ B iff ⋂ B̂ ⊆ ⋂ Â", "discrete", K::carrier_sets, [](const Instance& in) {
    return is_subset(in.cells, in.cells2) ==
           meet_of_principals(in.n, in.cells2).included_in(meet_of_principals(in.n, in.cells));
  });
  reg.add("⋂ {x̂ : x ∈ ultra_set(C)} = C", "discrete", K::carrier_filter,
          [](const Instance& in) { return meet_of_principals(in.n, ultra_set(*in.c)) == *in.c; });
}

// ---------------------------------------------------------------------------

void add_extension_maps(Registry& reg) {
  reg.add("principal block of R* = R", "filter", K::rel,
          [](const Instance& in) { return star_of(*in.r).principal_block() == *in.r; });
  reg.add("principal block of R~ = R", "filter", K::rel,
          [](const Instance& in) { return tilde_of(*in.r).principal_block() == *in.r; });
  reg.add("R*(C) = {y : R*(C, ŷ)}", "filter", K::rel_filter, [](const Instance& in) {
    Mask slice = 0;
    for (std::size_t y = 0; y < in.r->size(); ++y) {
      if (star_of(*in.r).contains(*in.c, FilterGen::principal(in.r->size(), y))) slice |= bit(y);
    }
    return star_as_map(*in.r, *in.c) == slice;
  });
  reg.add("F~ = F* for functional F", "principal", K::rel, [](const Instance& in) {
    if (!detail::is_functional(*in.r)) throw ValidationError("relation must be functional");
    return tilde_ultra_of(*in.r) == star_ultra_of(*in.r) && star_ultra_of(*in.r) == *in.r;
  });
  reg.add("F~ = F* for functional F", "filter", K::rel, [](const Instance& in) {
    if (!detail::is_functional(*in.r)) throw ValidationError("relation must be functional");
    return tilde_of(*in.r) == star_of(*in.r);
  });
  reg.add("h̄ maps R* into S* and R~ into S~", "filter", K::hom,
          [](const Instance& in) { return hom_preservation_check(in.h, *in.r, *in.s); });
  reg.add("h̄(x̂) = h(x)^", "filter", K::hom, [](const Instance& in) {
    for (std::size_t x = 0; x < in.h.size(); ++x) {
      if (!(pushforward(FilterGen::principal(in.r->size(), x), in.h, in.s->size()) ==
            FilterGen::principal(in.s->size(), in.h[x]))) {
        return false;
      }
    }
    return true;
  });
}

void add_continuity(Registry& reg) {
  const std::string level = "multimap";
  auto map_of = [](const Instance& in) { return MultiMap(*in.left, *in.right, in.family); };
  reg.add("Vietoris continuous iff lower and upper semicontinuous", level, K::multimap, [map_of](const Instance& in) {
    const MultiMap f = map_of(in);
    const HyperSpace& h = detail::hyperspace_of(*in.right);
    return semicontinuity(f, Semicontinuity::vietoris, &h) ==
           (semicontinuity(f, Semicontinuity::lower) && semicontinuity(f, Semicontinuity::upper));
  });
  for (Semicontinuity s : {Semicontinuity::lower, Semicontinuity::upper, Semicontinuity::vietoris}) {
    reg.add(std::string(to_string(s)) + ": open-set form = closed-set form", level, K::multimap,
            [map_of, s](const Instance& in) {
              const MultiMap f = map_of(in);
              const HyperSpace& h = detail::hyperspace_of(*in.right);
              return semicontinuity(f, s, &h) == semicontinuity_closed_form(f, s, &h);
            });
  }
  reg.add("lower semicontinuous iff continuous into τ⁻", level, K::multimap, [map_of](const Instance& in) {
    const MultiMap f = map_of(in);
    return semicontinuity(f, Semicontinuity::lower) ==
           vietoris_continuous(f, detail::hyperspace_of(*in.right), Flavor::lower);
  });
  reg.add("upper semicontinuous iff continuous into τ⁺", level, K::multimap, [map_of](const Instance& in) {
    const MultiMap f = map_of(in);
    return semicontinuity(f, Semicontinuity::upper) ==
           vietoris_continuous(f, detail::hyperspace_of(*in.right), Flavor::upper);
  });

  for (Flavor fl : {Flavor::full, Flavor::lower, Flavor::upper}) {
    const std::string tau = fl == Flavor::lower ? "τ⁻" : fl == Flavor::upper ? "τ⁺" : "τ";
    reg.add("C ↦ R*(C) is continuous from (εX, " + tau + ") to (P X, " + tau + ")", "discrete", K::rel,
            [fl](const Instance& in) {
              const std::size_t n = in.r->size();
              const Topology& domain = detail::hyperspace_of(Topology::discrete(n)).topology(fl);
              std::vector<Mask> values(filter_count(n));
              for (std::size_t i = 0; i < values.size(); ++i) {
                values[i] = star_as_map(*in.r, FilterGen::from_index(n, i));
              }
              bool ok = true;
              for_each_subset(full_mask(n), [&](Mask o) {
                Mask hit = 0, inside = 0;
                for (std::size_t i = 0; i < values.size(); ++i) {
                  if (meets(values[i], o)) hit |= bit(i);
                  if (is_subset(values[i], o)) inside |= bit(i);
                }
                if (fl != Flavor::upper) ok = ok && domain.is_open(hit);
                if (fl != Flavor::lower) ok = ok && domain.is_open(inside);
              });
              return ok;
            });
  }
}

std::vector<Law> build() {
  Registry reg;
  add_conditions(reg);
  add_table_rows(reg);
  add_distributivity(reg);
  add_rectangles(reg);
  add_closures(reg);
  add_hyperspace(reg);
  add_extension_maps(reg);
  add_continuity(reg);
  return std::move(reg.laws);
}

}  // namespace

const std::vector<Law>& law_registry() {
  static const std::vector<Law> laws = build();
  return laws;
}

const Law& find_law(std::string_view name, std::string_view level) {
  for (const Law& law : law_registry()) {
    if (law.name == name && law.level == level) return law;
  }
  throw UsageError("no law '" + std::string(name) + "' at level '" + std::string(level) + "'");
}

Json make_witness(const Law& law, const Instance& in, bool holds) {
  Json j;
  j["law"] = law.name;
  j["level"] = law.level;
  j["holds"] = holds;
  const Json fields = instance_to_json(law.kind, in);
  for (const auto& [k, v] : fields.items()) j[k] = v;
  return j;
}

}  // namespace ultrarel
