#include "ultrarel/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "ultrarel/error.hpp"

namespace ultrarel {

Json parse_json_text(std::string_view text, std::string_view source) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(std::string(source) + ":" + std::to_string(line) + ":" + std::to_string(col),
                     "invalid JSON");
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str(), path);
}

namespace {

bool is_flat(const Json& j) {
  for (const Json& e : j) {
    if (e.is_structured()) return false;
  }
  return true;
}

void write(const Json& j, std::size_t indent, std::string& out) {
  const std::string pad(indent + 2, ' ');
  if (j.is_object() && !j.empty()) {
    out += "{\n";
    std::size_t i = 0;
    for (const auto& [key, value] : j.items()) {
      out += pad + Json(key).dump() + ": ";
      write(value, indent + 2, out);
      out += ++i < j.size() ? ",\n" : "\n";
    }
    out += std::string(indent, ' ') + "}";
  } else if (j.is_array() && !j.empty() && !is_flat(j)) {
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += pad;
      write(j[i], indent + 2, out);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += std::string(indent, ' ') + "]";
  } else if (j.is_array()) {
    out += "[";
    for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + j[i].dump();
    out += "]";
  } else {
    out += j.dump();
  }
}

}  // namespace

std::string dump(const Json& j) {
  std::string out;
  write(j, 0, out);
  return out + "\n";
}

namespace {

void expect_object(const Json& j, const std::string& where) {
  if (!j.is_object()) throw ParseError(where, "expected an object");
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  expect_object(j, where);
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(where.empty() ? key : where + "." + key, "missing field");
  return *it;
}

std::size_t as_index(const Json& j, const std::string& where) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    throw ParseError(where, "expected a non-negative integer");
  }
  return j.get<std::size_t>();
}

std::size_t read_n(const Json& j, std::size_t cap) {
  const std::size_t n = as_index(field(j, "n", ""), "n");
  if (n == 0 || n > cap) throw ParseError("n", "must be between 1 and " + std::to_string(cap));
  return n;
}

const Json& expect_array(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where, "expected an array");
  return j;
}

std::size_t element(const Json& j, std::size_t n, const std::string& where) {
  const std::size_t x = as_index(j, where);
  if (x >= n) throw ParseError(where, std::to_string(x) + " is out of range for n=" + std::to_string(n));
  return x;
}

Pair read_pair(const Json& j, std::size_t n1, std::size_t n2, const std::string& where) {
  if (!j.is_array() || j.size() != 2) throw ParseError(where, "expected a pair [x, y]");
  return {element(j[0], n1, where + "[0]"), element(j[1], n2, where + "[1]")};
}

}  // namespace

Mask set_from_json(const Json& j, std::size_t n, const std::string& where) {
  expect_array(j, where);
  Mask m = 0;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = where + "[" + std::to_string(i) + "]";
    const std::size_t x = element(j[i], n, at);
    if (has(m, x)) throw ParseError(at, "duplicate element " + std::to_string(x));
    m |= bit(x);
  }
  return m;
}

Json set_to_json(Mask m) { return elements(m); }

Json rel_to_json(const Rel& r) {
  Json j;
  j["n"] = r.size();
  Json pairs = Json::array();
  for (const auto& [x, y] : r.pairs()) pairs.push_back({x, y});
  j["pairs"] = pairs;
  return j;
}

Rel rel_from_json(const Json& j) {
  const std::size_t n = read_n(j, kMaxCarrier);
  const Json& pairs = expect_array(field(j, "pairs", ""), "pairs");
  Mask bits = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const std::string at = "pairs[" + std::to_string(i) + "]";
    const auto [x, y] = read_pair(pairs[i], n, n, at);
    if (has(bits, x * n + y)) throw ParseError(at, "duplicate pair");
    bits |= bit(x * n + y);
  }
  return Rel(n, bits);
}

Json topology_to_json(const Topology& t) {
  Json j;
  j["n"] = t.size();
  Json opens = Json::array();
  for (Mask o : t.opens()) opens.push_back(set_to_json(o));
  j["opens"] = opens;
  return j;
}

ParsedTopology topology_from_json(const Json& j) {
  const std::size_t n = read_n(j, kMaxCarrier);
  const Json& opens = expect_array(field(j, "opens", ""), "opens");
  std::vector<Mask> listed;
  for (std::size_t i = 0; i < opens.size(); ++i) listed.push_back(set_from_json(opens[i], n, "opens[" + std::to_string(i) + "]"));
  Topology t = Topology::generated_by(n, listed);
  std::sort(listed.begin(), listed.end());
  listed.erase(std::unique(listed.begin(), listed.end()), listed.end());
  const bool closed_up = listed != t.opens();
  return {std::move(t), closed_up};
}

Json cells_to_json(const ProductSpace& space, Mask cells) {
  Json out = Json::array();
  for_each_bit(cells, [&](std::size_t p) {
    const auto [x, y] = space.decode(p);
    out.push_back({x, y});
  });
  return out;
}

Mask cells_from_json(const ProductSpace& space, const Json& j, const std::string& where) {
  expect_array(j, where);
  Mask cells = 0;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = where + "[" + std::to_string(i) + "]";
    const auto [x, y] = read_pair(j[i], space.left_size(), space.right_size(), at);
    const std::size_t p = space.encode(x, y);
    if (has(cells, p)) throw ParseError(at, "duplicate pair");
    cells |= bit(p);
  }
  return cells;
}

Json filter_to_json(const FilterGen& f) { return to_text(f); }

FilterGen filter_from_json(const Json& j, std::size_t n, const std::string& where) {
  if (!j.is_string()) throw ParseError(where, "expected a filter literal \"gen{...}\"");
  try {
    return filter_from_text(j.get<std::string>(), n);
  } catch (const ValidationError& e) {
    throw ParseError(where, e.what());
  }
}

Json filter_rel_to_json(const FilterRel& r) {
  Json j;
  j["n"] = r.size();
  Json index = Json::array();
  for (const FilterGen& f : all_filters(r.size())) index.push_back(to_text(f));
  j["index"] = index;
  Json pairs = Json::array();
  for (const auto& [a, b] : r.pairs()) pairs.push_back({a, b});
  j["pairs"] = pairs;
  Json matrix = Json::array();
  for (std::size_t a = 0; a < r.index_count(); ++a) {
    Json row = Json::array();
    for (std::size_t b = 0; b < r.index_count(); ++b) row.push_back(r.contains(a, b) ? 1 : 0);
    matrix.push_back(row);
  }
  j["matrix"] = matrix;
  return j;
}

FilterRel filter_rel_from_json(const Json& j) {
  const std::size_t n = read_n(j, kMaxCarrier);
  const std::size_t count = filter_count(n);
  if (j.contains("index")) {
    const Json& index = expect_array(j["index"], "index");
    if (index.size() != count) throw ParseError("index", "expected " + std::to_string(count) + " filters");
    for (std::size_t i = 0; i < count; ++i) {
      const std::string at = "index[" + std::to_string(i) + "]";
      if (filter_from_json(index[i], n, at).index() != i) throw ParseError(at, "filters out of canonical order");
    }
  }
  const Json& pairs = expect_array(field(j, "pairs", ""), "pairs");
  std::vector<Mask> rows(count, 0);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const std::string at = "pairs[" + std::to_string(i) + "]";
    const auto [a, b] = read_pair(pairs[i], count, count, at);
    if (has(rows[a], b)) throw ParseError(at, "duplicate pair");
    rows[a] |= bit(b);
  }
  if (j.contains("matrix")) {
    const Json& matrix = expect_array(j["matrix"], "matrix");
    if (matrix.size() != count) throw ParseError("matrix", "expected " + std::to_string(count) + " rows");
    for (std::size_t a = 0; a < count; ++a) {
      const std::string at = "matrix[" + std::to_string(a) + "]";
      const Json& row = expect_array(matrix[a], at);
      if (row.size() != count) throw ParseError(at, "expected " + std::to_string(count) + " entries");
      for (std::size_t b = 0; b < count; ++b) {
        const std::string cell = at + "[" + std::to_string(b) + "]";
        if (!row[b].is_number_integer() || (row[b] != 0 && row[b] != 1)) throw ParseError(cell, "expected 0 or 1");
        if ((row[b] == 1) != has(rows[a], b)) throw ParseError(cell, "disagrees with pairs");
      }
    }
  }
  return FilterRel(n, std::move(rows));
}

Json hyperspace_to_json(const HyperSpace& h, Flavor which) {
  Json j = topology_to_json(h.topology(which));
  j["flavor"] = to_string(which);
  Json points = Json::array();
  for (Mask c : h.points()) points.push_back(set_to_json(c));
  j["points"] = points;
  j["base"] = topology_to_json(h.base());
  return j;
}

}  // namespace ultrarel
