// Exhaustive minimum-schedule search on small instances, plus executable
// forms of the lower-bound and optimality statements.
#pragma once

#include <string>
#include <vector>

#include "cdpic/decoder.hpp"
#include "cdpic/schemes.hpp"

namespace cdpic {

struct SearchCaps {
  // Bound on the raw candidate count C * (2^K - 1) before deduplication.
  long long candidate_cap = 100000;
  // Maximum schedule length searched; < 0 means S + 4.
  int depth_cap = -1;
  // Bound on combinations examined at one depth.
  long long combo_cap = 1000000000;
};

struct CapExceeded : std::runtime_error {
  std::string which;  // the cap that fired
  CapExceeded(std::string which, const std::string& what)
      : std::runtime_error(what), which(std::move(which)) {}
};

struct OracleResult {
  int n_min = 0;
  Schedule witness;          // verifies under `mode` with exactly n_min transmissions
  long long search_space = 0;  // candidate transmissions after deduplication
  DecodeMode mode = DecodeMode::Static;
  long long combos_examined = 0;
};

// Every (client, nonempty subset of its window) pair, deduplicated by
// payload with the smallest holding client as transmitter, ordered by
// (payload size, transmitter, payload). Decoding depends only on the
// payload, so the deduplication loses nothing.
std::vector<Transmission> enumerate_transmissions(const ProblemInstance&,
                                                  const SearchCaps& = {},
                                                  bool uncoded_only = false);

// Iterative-deepening search over candidate combinations, starting at the
// S+1 floor (the first transmitter learns nothing from its own broadcast).
// Returns the first witness in canonical order; the parallel scan reduces
// to the same witness a serial scan would find.
OracleResult brute_force_min(const ProblemInstance&, DecodeMode,
                             const SearchCaps& = {});

// Same search restricted to single-message payloads, floor-checked at
// ceil(M*S/(M-K)) when m == c.
OracleResult uncoded_min(const ProblemInstance&, DecodeMode,
                         const SearchCaps& = {});

// Straightforward serial search kept as a reference: no deduplication, no
// bitmask precomputation, no rotation pruning. Same n_min on any instance
// small enough to run it.
OracleResult exhaustive_min_reference(const ProblemInstance&, DecodeMode,
                                      const SearchCaps& = {});

struct TheoremCheck {
  std::string id;
  enum class Status { Pass, Fail, Skipped } status;
  std::string detail;
};

// Instance-level certification of the five structural claims:
//   T1 satisfied => length >= S+1
//   T2 satisfied => sum of served counts >= C*S
//   T3 uncoded threshold => full search minimum == uncoded minimum
//   T4 a satisfying m == c schedule re-verifies on C' = M+1 and C' = 2M
//   T5 uncoded / paired-half / multi-XOR bands achieve exactly S+1
std::vector<TheoremCheck> check_theorems(const ProblemInstance&, const Schedule&,
                                         const DecodingReport&,
                                         const SearchCaps& = {});

}  // namespace cdpic
