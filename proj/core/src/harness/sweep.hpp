#pragma once

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

#include "ultrarel/harness.hpp"

namespace ultrarel::detail {

enum class Expect { hold, fail, find };

/// Tallies for a fixed list of registry laws. Laws are declared up front so
/// the result order does not depend on which instances a shard happened to see.
class Checker {
 public:
  explicit Checker(std::size_t keep = 4) : keep_(keep) {}

  std::size_t declare(const std::string& name, const std::string& level, Expect expect, std::string note = {}) {
    slots_.push_back(Slot{&find_law(name, level), expect, std::move(note), LawTally(name, level, keep_)});
    return slots_.size() - 1;
  }

  bool check(std::size_t id, const Instance& in) {
    Slot& s = slots_[id];
    const bool holds = s.law->holds(in);
    return s.tally.record(holds, [&] { return make_witness(*s.law, in, holds); });
  }

  /// A copy with the same declarations and empty tallies.
  Checker fresh() const {
    Checker out(keep_);
    for (const Slot& s : slots_) out.slots_.push_back(Slot{s.law, s.expect, s.note, LawTally(s.law->name, s.law->level, keep_)});
    return out;
  }

  void absorb(const Checker& other) {
    for (std::size_t i = 0; i < slots_.size(); ++i) slots_[i].tally.absorb(other.slots_[i].tally);
  }

  std::vector<LawResult> results() const {
    std::vector<LawResult> out;
    for (const Slot& s : slots_) {
      switch (s.expect) {
        case Expect::hold: out.push_back(s.tally.must_hold(s.note)); break;
        case Expect::fail: out.push_back(s.tally.must_fail(s.note)); break;
        case Expect::find: out.push_back(s.tally.finding(s.note)); break;
      }
    }
    return out;
  }

 private:
  struct Slot {
    const Law* law;
    Expect expect;
    std::string note;
    LawTally tally;
  };

  std::size_t keep_;
  std::vector<Slot> slots_;
};

/// ULTRAREL_THREADS if set, otherwise the hardware concurrency.
inline std::size_t worker_count() {
  if (const char* env = std::getenv("ULTRAREL_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<std::size_t>(v);
  }
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

/// Runs body(checker, i) for i in [0, count) over contiguous shards and merges
/// the shard tallies in index order, so the kept witnesses are the first ones
/// in enumeration order whatever the shard count.
template <class Body>
void sweep(Checker& into, std::size_t count, Body&& body) {
  const std::size_t workers = std::min(worker_count(), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(into, i);
    return;
  }
  std::vector<Checker> shards;
  for (std::size_t w = 0; w < workers; ++w) shards.push_back(into.fresh());
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        const std::size_t lo = count * w / workers, hi = count * (w + 1) / workers;
        for (std::size_t i = lo; i < hi; ++i) body(shards[w], i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (std::thread& t : threads) t.join();
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  for (const Checker& c : shards) into.absorb(c);
}

}  // namespace ultrarel::detail
