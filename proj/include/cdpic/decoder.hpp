// Per-client decoding simulation: who recovers what from a broadcast
// schedule, and whether every client ends up with at least S new messages.
#pragma once

#include <optional>
#include <span>
#include <vector>

#include "cdpic/core.hpp"

namespace cdpic {

// Static: every transmission is decoded against the original side
// information only. Progressive: knowledge grows with decoded messages and
// the transmission list is replayed to a fixpoint.
enum class DecodeMode { Static, Progressive };

// A payload whose transmitter does not hold all of it.
struct ConstraintViolation : std::runtime_error {
  int transmission_index;
  ConstraintViolation(int index, const std::string& what)
      : std::runtime_error(what), transmission_index(index) {}
};

// One-unknown XOR rule: the unique payload message missing from
// `knowledge`, if there is exactly one; nothing on zero or >= 2 unknowns.
std::optional<int> decode_symbol(std::span<const int> knowledge,
                                 std::span<const int> payload);

struct DecodingReport {
  static constexpr int kNoDecode = -1;

  // cells[client][i]: message client recovers from transmission i, or
  // kNoDecode. Static mode records every decode, repeats included;
  // Progressive records each message at the transmission that first
  // yielded it.
  std::vector<std::vector<int>> cells;
  // Distinct new messages per client, ascending. Disjoint from side info.
  std::vector<std::vector<int>> per_client_decoded;
  // served_counts[i]: clients whose set of new messages grew at
  // transmission i. Sums to the total of per_client_decoded sizes.
  std::vector<int> served_counts;
  bool satisfied = false;
  int n_used = 0;

  long long total_served() const;
  int min_decoded() const;
};

// Simulates the schedule at every client. Checks the decentralized
// constraint up front and throws ConstraintViolation with the offending
// index. The per-client loop runs in parallel; results are identical to a
// serial evaluation.
DecodingReport run_schedule(const ProblemInstance&,
                            std::span<const Transmission>, DecodeMode);

}  // namespace cdpic
