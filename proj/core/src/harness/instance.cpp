#include <string>

#include "ultrarel/error.hpp"
#include "ultrarel/harness.hpp"
#include "ultrarel/io.hpp"

namespace ultrarel {

namespace {

const Json& need(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError("witness", "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(key, "missing field");
  return *it;
}

/// Re-raises a nested parse error with the enclosing field in front.
template <class F>
auto nested(const char* key, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError& e) {
    throw ParseError(std::string(key) + "." + e.where(), e.what());
  } catch (const ValidationError& e) {
    throw ParseError(key, e.what());
  }
}

Rel read_rel(const Json& j, const char* key) {
  return nested(key, [&] { return rel_from_json(need(j, key)); });
}

Topology read_topology(const Json& j, const char* key) {
  return nested(key, [&] { return topology_from_json(need(j, key)).topology; });
}

FilterGen read_filter(const Json& j, const char* key, std::size_t n) { return filter_from_json(need(j, key), n, key); }

std::size_t read_n(const Json& j) {
  const Json& v = need(j, "n");
  if (!v.is_number_unsigned() || v.get<std::size_t>() == 0 || v.get<std::size_t>() > kMaxCarrier) {
    throw ParseError("n", "must be between 1 and " + std::to_string(kMaxCarrier));
  }
  return v.get<std::size_t>();
}

Json family_to_json(const std::vector<Mask>& family) {
  Json out = Json::array();
  for (Mask m : family) out.push_back(set_to_json(m));
  return out;
}

std::vector<Mask> family_from_json(const Json& j, const char* key, std::size_t n) {
  const Json& arr = need(j, key);
  if (!arr.is_array()) throw ParseError(key, "expected an array");
  std::vector<Mask> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    out.push_back(set_from_json(arr[i], n, std::string(key) + "[" + std::to_string(i) + "]"));
  }
  return out;
}

}  // namespace

Json instance_to_json(InstanceKind kind, const Instance& in) {
  Json j = Json::object();
  auto rel = [&] { j["rel"] = rel_to_json(*in.r); };
  auto rel2 = [&] { j["rel2"] = rel_to_json(*in.s); };
  auto cfil = [&] { j["C"] = filter_to_json(*in.c); };
  auto dfil = [&] { j["D"] = filter_to_json(*in.d); };
  auto product = [&] {
    const ProductSpace space(*in.left, *in.right);
    j["left"] = topology_to_json(*in.left);
    j["right"] = topology_to_json(*in.right);
    j["rel"] = cells_to_json(space, in.cells);
    return space;
  };
  switch (kind) {
    case InstanceKind::carrier: j["n"] = in.n; break;
    case InstanceKind::rel: rel(); break;
    case InstanceKind::rel_pair: rel(); rel2(); break;
    case InstanceKind::rel_filter: rel(); cfil(); break;
    case InstanceKind::rel_cd: rel(); cfil(); dfil(); break;
    case InstanceKind::rel_pair_cd: rel(); rel2(); cfil(); dfil(); break;
    case InstanceKind::rel_topology:
      rel();
      j["topology"] = topology_to_json(*in.right);
      break;
    case InstanceKind::hom:
      rel();
      rel2();
      j["h"] = in.h;
      break;
    case InstanceKind::space_pair:
      j["left"] = topology_to_json(*in.left);
      j["right"] = topology_to_json(*in.right);
      break;
    case InstanceKind::product: product(); break;
    case InstanceKind::product_pair: {
      const ProductSpace space = product();
      j["rel2"] = cells_to_json(space, in.cells2);
      break;
    }
    case InstanceKind::base: j["base"] = topology_to_json(*in.left); break;
    case InstanceKind::base_subset:
    case InstanceKind::hyper_set:
      j["base"] = topology_to_json(*in.left);
      j["set"] = set_to_json(in.cells);
      break;
    case InstanceKind::base_subsets:
      j["base"] = topology_to_json(*in.left);
      j["set"] = set_to_json(in.cells);
      j["set2"] = set_to_json(in.cells2);
      break;
    case InstanceKind::hyper_family:
      j["base"] = topology_to_json(*in.left);
      j["family"] = family_to_json(in.family);
      break;
    case InstanceKind::multimap:
      j["domain"] = topology_to_json(*in.left);
      j["codomain"] = topology_to_json(*in.right);
      j["values"] = family_to_json(in.family);
      break;
    case InstanceKind::carrier_set:
      j["n"] = in.n;
      j["set"] = set_to_json(in.cells);
      break;
    case InstanceKind::carrier_sets:
      j["n"] = in.n;
      j["set"] = set_to_json(in.cells);
      j["set2"] = set_to_json(in.cells2);
      break;
    case InstanceKind::carrier_filter:
      j["n"] = in.n;
      cfil();
      break;
    case InstanceKind::filter_set: {
      j["n"] = in.n;
      Json filters = Json::array();
      for_each_bit(in.cells, [&](std::size_t i) { filters.push_back(to_text(FilterGen::from_index(in.n, i))); });
      j["filters"] = filters;
      break;
    }
  }
  return j;
}

Instance instance_from_json(InstanceKind kind, const Json& j) {
  Instance in;
  auto rel = [&] {
    in.r = read_rel(j, "rel");
    in.n = in.r->size();
  };
  auto rel2 = [&] { in.s = read_rel(j, "rel2"); };
  auto cfil = [&] { in.c = read_filter(j, "C", in.n); };
  auto dfil = [&] { in.d = read_filter(j, "D", in.n); };
  auto same_carrier = [&] {
    if (in.s->size() != in.n) throw ParseError("rel2", "carrier differs from rel");
  };
  auto base = [&] {
    in.left = read_topology(j, "base");
    in.n = in.left->size();
  };
  auto product = [&] {
    in.left = read_topology(j, "left");
    in.right = read_topology(j, "right");
    const ProductSpace space(*in.left, *in.right);
    in.cells = cells_from_json(space, need(j, "rel"), "rel");
    return space;
  };
  switch (kind) {
    case InstanceKind::carrier: in.n = read_n(j); break;
    case InstanceKind::rel: rel(); break;
    case InstanceKind::rel_pair: rel(); rel2(); same_carrier(); break;
    case InstanceKind::rel_filter: rel(); cfil(); break;
    case InstanceKind::rel_cd: rel(); cfil(); dfil(); break;
    case InstanceKind::rel_pair_cd: rel(); rel2(); same_carrier(); cfil(); dfil(); break;
    case InstanceKind::rel_topology:
      rel();
      in.right = read_topology(j, "topology");
      if (in.right->size() != in.n) throw ParseError("topology", "carrier differs from rel");
      break;
    case InstanceKind::hom: {
      rel();
      rel2();
      const Json& h = need(j, "h");
      if (!h.is_array() || h.size() != in.n) throw ParseError("h", "expected one image per element of rel's carrier");
      for (std::size_t i = 0; i < h.size(); ++i) {
        if (!h[i].is_number_unsigned() || h[i].get<std::size_t>() >= in.s->size()) {
          throw ParseError("h[" + std::to_string(i) + "]", "not an element of rel2's carrier");
        }
        in.h.push_back(h[i].get<std::size_t>());
      }
      break;
    }
    case InstanceKind::space_pair:
      in.left = read_topology(j, "left");
      in.right = read_topology(j, "right");
      break;
    case InstanceKind::product: product(); break;
    case InstanceKind::product_pair: {
      const ProductSpace space = product();
      in.cells2 = cells_from_json(space, need(j, "rel2"), "rel2");
      break;
    }
    case InstanceKind::base: base(); break;
    case InstanceKind::base_subset:
      base();
      in.cells = set_from_json(need(j, "set"), in.n, "set");
      break;
    case InstanceKind::hyper_set: {
      base();
      const HyperSpace hs(*in.left);
      in.cells = set_from_json(need(j, "set"), hs.point_count(), "set");
      break;
    }
    case InstanceKind::base_subsets:
      base();
      in.cells = set_from_json(need(j, "set"), in.n, "set");
      in.cells2 = set_from_json(need(j, "set2"), in.n, "set2");
      break;
    case InstanceKind::hyper_family:
      base();
      in.family = family_from_json(j, "family", in.n);
      break;
    case InstanceKind::multimap:
      in.left = read_topology(j, "domain");
      in.right = read_topology(j, "codomain");
      in.family = family_from_json(j, "values", in.right->size());
      break;
    case InstanceKind::carrier_set:
      in.n = read_n(j);
      in.cells = set_from_json(need(j, "set"), in.n, "set");
      break;
    case InstanceKind::carrier_sets:
      in.n = read_n(j);
      in.cells = set_from_json(need(j, "set"), in.n, "set");
      in.cells2 = set_from_json(need(j, "set2"), in.n, "set2");
      break;
    case InstanceKind::carrier_filter:
      in.n = read_n(j);
      cfil();
      break;
    case InstanceKind::filter_set: {
      in.n = read_n(j);
      const Json& filters = need(j, "filters");
      if (!filters.is_array()) throw ParseError("filters", "expected an array");
      for (std::size_t i = 0; i < filters.size(); ++i) {
        in.cells |= bit(filter_from_json(filters[i], in.n, "filters[" + std::to_string(i) + "]").index());
      }
      break;
    }
  }
  return in;
}

}  // namespace ultrarel
