#include <string>

#include "ultrarel/error.hpp"
#include "ultrarel/harness.hpp"

namespace ultrarel {

namespace {

bool is_witness(const Json& j) { return j.is_object() && j.contains("law") && j.contains("level"); }

ReplayResult replay_one(const Json& w, const std::string& where) {
  auto text = [&](const char* key) {
    const Json& v = w.at(key);
    if (!v.is_string()) throw ParseError(where + "." + key, "expected a string");
    return v.get<std::string>();
  };
  ReplayResult out;
  out.law = text("law");
  out.level = text("level");
  const auto holds = w.find("holds");
  if (holds == w.end() || !holds->is_boolean()) throw ParseError(where + ".holds", "expected true or false");
  out.recorded = holds->get<bool>();
  const Law& law = find_law(out.law, out.level);
  Instance in;
  try {
    in = instance_from_json(law.kind, w);
  } catch (const ParseError& e) {
    throw ParseError(where + "." + e.where(), e.what());
  }
  try {
    out.holds = law.holds(in);
  } catch (const ValidationError& e) {
    throw ParseError(where, std::string("instance outside the law's domain: ") + e.what());
  }
  return out;
}

void collect(const Json& j, const std::string& where, std::vector<ReplayResult>& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      const std::string at = where.empty() ? key : where + "." + key;
      if (key == "witnesses" && value.is_array()) {
        for (std::size_t i = 0; i < value.size(); ++i) {
          const std::string wi = at + "[" + std::to_string(i) + "]";
          if (!is_witness(value[i])) throw ParseError(wi, "expected a witness with \"law\" and \"level\"");
          out.push_back(replay_one(value[i], wi));
        }
      } else {
        collect(value, at, out);
      }
    }
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) collect(j[i], where + "[" + std::to_string(i) + "]", out);
  }
}

}  // namespace

std::vector<ReplayResult> replay(const Json& doc) {
  std::vector<ReplayResult> out;
  if (is_witness(doc)) {
    out.push_back(replay_one(doc, "witness"));
    return out;
  }
  collect(doc, "", out);
  return out;
}

Json to_json(const ReplayResult& r) {
  Json j;
  j["law"] = r.law;
  j["level"] = r.level;
  j["recorded"] = r.recorded;
  j["holds"] = r.holds;
  j["reproduced"] = r.reproduced();
  return j;
}

}  // namespace ultrarel
