#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace ultrarel {

using Json = nlohmann::ordered_json;

enum class Verdict {
  verified,          // the law held on every instance searched
  witnessed_strict,  // an expected strictness was confirmed by a replayable witness
  finding,           // recorded outcome of an exploratory search; no expectation either way
  violated,          // a law that must hold failed, or an expected witness is missing
};

std::string_view to_string(Verdict v);
Verdict verdict_from_string(std::string_view s);

/// Outcome of checking one law over an instance family.
struct LawResult {
  std::string law;
  /// Where the law was evaluated: "principal", "filter", "product-space", ...
  std::string level;
  std::uint64_t instances = 0;
  std::uint64_t failures = 0;
  Verdict verdict = Verdict::verified;
  std::vector<Json> witnesses;
  std::string note;

  bool ok() const { return verdict != Verdict::violated; }
};

/// Result of a property search.
struct SearchReport {
  std::string property;
  std::uint64_t searched = 0;
  std::uint64_t witness_count = 0;
  /// False when the search stopped at its first witness.
  bool exhausted = true;
  std::vector<Json> witnesses;
  Json detail = Json::object();
};

/// Accumulates instances of one law and keeps the first few failing ones.
class LawTally {
 public:
  LawTally(std::string law, std::string level, std::size_t keep = 1)
      : law_(std::move(law)), level_(std::move(level)), keep_(keep) {}

  /// `witness` is only invoked for failing instances that are kept.
  template <class W>
  bool record(bool holds, W&& witness) {
    ++instances_;
    if (!holds) {
      ++failures_;
      if (witnesses_.size() < keep_) witnesses_.push_back(witness());
    }
    return holds;
  }

  /// Appends another tally of the same law, recorded over later instances.
  void absorb(const LawTally& other) {
    instances_ += other.instances_;
    failures_ += other.failures_;
    for (const Json& w : other.witnesses_) {
      if (witnesses_.size() < keep_) witnesses_.push_back(w);
    }
  }

  std::uint64_t failures() const { return failures_; }
  std::uint64_t instances() const { return instances_; }

  /// A law that must hold: any failure makes it violated.
  LawResult must_hold(std::string note = {}) const;
  /// A law expected to fail somewhere: failures are the strictness
  /// witnesses, and finding none is itself a violation.
  LawResult must_fail(std::string note = {}) const;
  /// No expectation: failures are recorded as findings.
  LawResult finding(std::string note = {}) const;

 private:
  LawResult base(Verdict v, std::string note) const;

  std::string law_;
  std::string level_;
  std::size_t keep_;
  std::uint64_t instances_ = 0;
  std::uint64_t failures_ = 0;
  std::vector<Json> witnesses_;
};

Json to_json(const LawResult& r);
Json to_json(const SearchReport& r);

}  // namespace ultrarel
