#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "flexsr/session.hpp"

namespace properties {

struct Result {
  std::uint64_t checked = 0;   // cases examined
  std::uint64_t exercised = 0; // cases that did non-trivial work (e.g. actually forwarded)
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  void fail(std::string what) {
    if (failures.size() < 20) failures.push_back(std::move(what));
  }
};

/// Per-node SPF on random scenarios against brute-force enumeration, for algo 0 and
/// one FAD per metric type: distances and first-hop sets must match.
Result spf_matches_oracle(std::uint64_t seed, int topologies);

/// Random flows on random scenarios until `trials` of them were forwarded: every
/// traversed adjacency satisfies the FAD's constraints, every node participates, and
/// the path cost is the oracle optimum.
Result exclusion_soundness(std::uint64_t seed, int trials);

/// Random advertisements survive encode/decode unchanged.
Result codec_round_trip(std::uint64_t seed, int count);

/// Flow conservation on every recorded flow run and PHP on every recorded trace.
Result golden_invariants(const flexsr::Session& session);

}  // namespace properties
