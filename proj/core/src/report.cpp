#include "ultrarel/report.hpp"

#include "ultrarel/error.hpp"

namespace ultrarel {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::verified: return "verified";
    case Verdict::witnessed_strict: return "witnessed-strict";
    case Verdict::finding: return "finding";
    case Verdict::violated: return "violated";
  }
  return "violated";
}

Verdict verdict_from_string(std::string_view s) {
  if (s == "verified") return Verdict::verified;
  if (s == "witnessed-strict") return Verdict::witnessed_strict;
  if (s == "finding") return Verdict::finding;
  if (s == "violated") return Verdict::violated;
  throw ValidationError("unknown verdict '" + std::string(s) + "'");
}

LawResult LawTally::base(Verdict v, std::string note) const {
  LawResult r;
  r.law = law_;
  r.level = level_;
  r.instances = instances_;
  r.failures = failures_;
  r.verdict = v;
  r.witnesses = witnesses_;
  r.note = std::move(note);
  return r;
}

LawResult LawTally::must_hold(std::string note) const {
  return base(failures_ == 0 ? Verdict::verified : Verdict::violated, std::move(note));
}

LawResult LawTally::must_fail(std::string note) const {
  return base(failures_ == 0 ? Verdict::violated : Verdict::witnessed_strict, std::move(note));
}

LawResult LawTally::finding(std::string note) const {
  return base(failures_ == 0 ? Verdict::verified : Verdict::finding, std::move(note));
}

Json to_json(const LawResult& r) {
  Json j;
  j["law"] = r.law;
  j["level"] = r.level;
  j["instances"] = r.instances;
  j["failures"] = r.failures;
  j["verdict"] = to_string(r.verdict);
  j["witnesses"] = r.witnesses;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json to_json(const SearchReport& r) {
  Json j;
  j["property"] = r.property;
  Json searched = Json::object();
  searched["instances"] = r.searched;
  searched["witnesses"] = r.witness_count;
  searched["exhausted"] = r.exhausted;
  for (const auto& [k, v] : r.detail.items()) searched[k] = v;
  j["searched"] = searched;
  j["witnesses"] = r.witnesses;
  return j;
}

}  // namespace ultrarel
