#include "ultrarel/sections.hpp"

#include <random>
#include <string>

#include "ultrarel/error.hpp"
#include "ultrarel/io.hpp"

namespace ultrarel {

ProductRel::ProductRel(std::shared_ptr<const ProductSpace> space, Mask cells)
    : space_(std::move(space)), cells_(cells) {
  if (!space_) throw ValidationError("product relation needs a space");
  if (!is_subset(cells_, space_->all())) throw ValidationError("relation cells outside the pair carrier");
}

ProductRel ProductRel::inverse() const {
  return ProductRel(std::make_shared<const ProductSpace>(space_->swapped()), space_->transpose(cells_));
}

Mask lcl(const ProductSpace& space, Mask cells) {
  Mask out = 0;
  for (std::size_t x = 0; x < space.left_size(); ++x) {
    const Mask section = cells & space.row(x);
    if (section != 0) out |= space.closure(section);
  }
  return out;
}

Mask rcl(const ProductSpace& space, Mask cells) {
  Mask out = 0;
  for (std::size_t y = 0; y < space.right_size(); ++y) {
    const Mask section = cells & space.column(y);
    if (section != 0) out |= space.closure(section);
  }
  return out;
}

ProductRel lcl(const ProductRel& r) { return ProductRel(r.shared_space(), lcl(r.space(), r.cells())); }

ProductRel rcl(const ProductRel& r) { return ProductRel(r.shared_space(), rcl(r.space(), r.cells())); }

Mask iterate_rcl_lcl(const ProductSpace& space, Mask cells, std::size_t max_rounds, std::size_t* rounds) {
  std::size_t done = 0;
  Mask current = cells;
  while (done < max_rounds) {
    const Mask next = rcl(space, lcl(space, current));
    ++done;
    if (next == current) break;
    current = next;
  }
  if (rounds != nullptr) *rounds = done;
  return current;
}

Topology derived_topology(const ProductSpace& space, Side which) {
  std::vector<Mask> closures(space.point_count());
  for (std::size_t p = 0; p < space.point_count(); ++p) {
    closures[p] = which == Side::left ? lcl(space, bit(p)) : rcl(space, bit(p));
  }
  return Topology::from_point_closures(std::move(closures));
}

bool sidedness(const ProductRel& r, Side side, Mask on, Sidedness mode) {
  const ProductSpace& space = r.space();
  const std::size_t limit = side == Side::left ? space.left_size() : space.right_size();
  if (!is_subset(on, full_mask(limit))) throw ValidationError("sidedness: index set outside the factor");
  bool ok = true;
  for_each_bit(on, [&](std::size_t i) {
    const Mask section = r.cells() & (side == Side::left ? space.row(i) : space.column(i));
    switch (mode) {
      case Sidedness::closed: ok = ok && space.pairs().is_closed(section); break;
      case Sidedness::open: ok = ok && space.pairs().is_open(section); break;
      case Sidedness::clopen: ok = ok && space.pairs().is_clopen(section); break;
    }
  });
  return ok;
}

Json product_witness(const ProductSpace& space, Mask cells) {
  Json j;
  j["left"] = topology_to_json(space.left());
  j["right"] = topology_to_json(space.right());
  j["rel"] = cells_to_json(space, cells);
  return j;
}

namespace {

/// Calls f(R) for every relation of the space, or for `samples` seeded draws.
template <class F>
bool for_each_relation(const ProductSpace& space, std::size_t max_exhaustive, std::uint64_t samples,
                       std::uint64_t seed, F&& f) {
  const std::size_t cells = space.point_count();
  if (cells <= max_exhaustive && cells < 32) {
    for (Mask m = 0; m < (Mask{1} << cells); ++m) f(m);
    return true;
  }
  std::mt19937_64 rng(seed);
  for (std::uint64_t i = 0; i < samples; ++i) f(rng() & space.all());
  return false;
}

}  // namespace

LawCheckReport lcl_rcl_laws_check(const ProductSpace& space, std::size_t max_exhaustive, std::uint64_t samples,
                                  std::uint64_t seed) {
  const ProductSpace swapped = space.swapped();
  const std::string level = "product-space";
  LawTally lcl_empty("lcl(∅) = ∅", level), rcl_empty("rcl(∅) = ∅", level);
  LawTally lcl_ext("R ⊆ lcl R", level), rcl_ext("R ⊆ rcl R", level);
  LawTally lcl_idem("lcl(lcl R) = lcl R", level), rcl_idem("rcl(rcl R) = rcl R", level);
  LawTally lcl_add("lcl R ∪ lcl S = lcl(R ∪ S)", level), rcl_add("rcl R ∪ rcl S = rcl(R ∪ S)", level);
  LawTally conj_l("(lcl R^{-1})^{-1} = rcl R", level), conj_r("(rcl R^{-1})^{-1} = lcl R", level);

  auto wit = [&](Mask r) { return [&space, r] { return product_witness(space, r); }; };
  auto wit2 = [&](Mask r, Mask s) {
    return [&space, r, s] {
      Json j = product_witness(space, r);
      j["rel2"] = cells_to_json(space, s);
      return j;
    };
  };

  lcl_empty.record(lcl(space, 0) == 0, wit(0));
  rcl_empty.record(rcl(space, 0) == 0, wit(0));

  std::vector<Mask> seen;
  const bool exhaustive = for_each_relation(space, max_exhaustive, samples, seed, [&](Mask r) {
    const Mask l = lcl(space, r);
    const Mask rc = rcl(space, r);
    lcl_ext.record(is_subset(r, l), wit(r));
    rcl_ext.record(is_subset(r, rc), wit(r));
    lcl_idem.record(lcl(space, l) == l, wit(r));
    rcl_idem.record(rcl(space, rc) == rc, wit(r));
    const Mask inv = space.transpose(r);
    conj_l.record(swapped.transpose(lcl(swapped, inv)) == rc, wit(r));
    conj_r.record(swapped.transpose(rcl(swapped, inv)) == l, wit(r));
    seen.push_back(r);
  });

  // Additivity over pairs: all pairs when the family is small, else
  // consecutive pairs of the sample.
  if (seen.size() <= 512) {
    for (Mask r : seen) {
      for (Mask s : seen) {
        lcl_add.record((lcl(space, r) | lcl(space, s)) == lcl(space, r | s), wit2(r, s));
        rcl_add.record((rcl(space, r) | rcl(space, s)) == rcl(space, r | s), wit2(r, s));
      }
    }
  } else {
    for (std::size_t i = 0; i + 1 < seen.size(); ++i) {
      const Mask r = seen[i], s = seen[i + 1];
      lcl_add.record((lcl(space, r) | lcl(space, s)) == lcl(space, r | s), wit2(r, s));
      rcl_add.record((rcl(space, r) | rcl(space, s)) == rcl(space, r | s), wit2(r, s));
    }
  }

  LawCheckReport report;
  report.relations = seen.size();
  report.exhaustive = exhaustive;
  for (const LawTally* t : {&lcl_empty, &lcl_ext, &lcl_idem, &lcl_add, &rcl_empty, &rcl_ext, &rcl_idem, &rcl_add,
                            &conj_l, &conj_r}) {
    report.laws.push_back(t->must_hold());
    report.pass = report.pass && report.laws.back().ok();
  }
  return report;
}

LawCheckReport corollary_check(const ProductSpace& space, std::size_t max_exhaustive, std::uint64_t samples,
                               std::uint64_t seed) {
  const ProductSpace swapped = space.swapped();
  const std::string level = "product-space";
  LawTally a("rcl(lcl R) = (lcl((lcl R)^{-1}))^{-1}", level);
  LawTally b("rcl(lcl R) = rcl((rcl R^{-1})^{-1})", level);
  LawTally c("lcl(rcl R) = (rcl((rcl R)^{-1}))^{-1}", level);
  LawTally d("lcl(rcl R) = lcl((lcl R^{-1})^{-1})", level);
  std::uint64_t count = 0;
  const bool exhaustive = for_each_relation(space, max_exhaustive, samples, seed, [&](Mask r) {
    ++count;
    auto wit = [&space, r] { return product_witness(space, r); };
    const Mask l = lcl(space, r);
    const Mask rc = rcl(space, r);
    const Mask rl = rcl(space, l);
    const Mask lr = lcl(space, rc);
    const Mask inv = space.transpose(r);
    a.record(rl == swapped.transpose(lcl(swapped, space.transpose(l))), wit);
    b.record(rl == rcl(space, swapped.transpose(rcl(swapped, inv))), wit);
    c.record(lr == swapped.transpose(rcl(swapped, space.transpose(rc))), wit);
    d.record(lr == lcl(space, swapped.transpose(lcl(swapped, inv))), wit);
  });
  LawCheckReport report;
  report.relations = count;
  report.exhaustive = exhaustive;
  for (const LawTally* t : {&a, &b, &c, &d}) {
    report.laws.push_back(t->must_hold());
    report.pass = report.pass && report.laws.back().ok();
  }
  return report;
}

SearchReport idempotence_search(std::size_t n_max, bool stop_at_first, std::size_t topo_limit, std::size_t keep) {
  if (n_max == 0 || n_max > 3) throw SizeError("idempotence search supports 1 to 3 points per factor");
  SearchReport report;
  report.property = "lclrcl-nonidempotent";
  std::uint64_t spaces = 0, first_kind = 0, second_kind = 0;
  for (std::size_t n = 1; n <= n_max && !(stop_at_first && report.witness_count > 0); ++n) {
    std::vector<Topology> tops = enumerate_topologies(n);
    if (tops.size() > topo_limit) tops.erase(tops.begin() + static_cast<std::ptrdiff_t>(topo_limit), tops.end());
    for (const Topology& t1 : tops) {
      for (const Topology& t2 : tops) {
        const ProductSpace space(t1, t2);
        ++spaces;
        for (Mask r = 0; r < (Mask{1} << space.point_count()); ++r) {
          ++report.searched;
          const Mask rl = rcl(space, lcl(space, r));
          const Mask lr = lcl(space, rcl(space, r));
          const bool bad_first = lcl(space, rl) != rl;
          const bool bad_second = rcl(space, lr) != lr;
          if (!bad_first && !bad_second) continue;
          first_kind += bad_first ? 1 : 0;
          second_kind += bad_second ? 1 : 0;
          ++report.witness_count;
          if (report.witnesses.size() < keep) {
            Json w = product_witness(space, r);
            w["lcl(rcl(lcl R)) != rcl(lcl R)"] = bad_first;
            w["rcl(lcl(rcl R)) != lcl(rcl R)"] = bad_second;
            report.witnesses.push_back(std::move(w));
          }
          if (stop_at_first) break;
        }
        if (stop_at_first && report.witness_count > 0) break;
      }
      if (stop_at_first && report.witness_count > 0) break;
    }
  }
  report.exhausted = !(stop_at_first && report.witness_count > 0);
  report.detail["spaces"] = spaces;
  report.detail["n_max"] = n_max;
  report.detail["lcl_rcl_lcl_witnesses"] = first_kind;
  report.detail["rcl_lcl_rcl_witnesses"] = second_kind;
  return report;
}

}  // namespace ultrarel
