// Core domain model for consecutive-window pliable broadcast problems:
// instances, side-information geometry and regime classification.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace cdpic {

// Which window of the message ring a client holds as side information.
// The shifted window is the default: it is the only convention under which
// every built-in schedule construction transmits messages the transmitter
// actually possesses.
enum class Convention {
  ShiftedWindow,  // client i holds {X_{i+1}, ..., X_{i+K}}
  PlainWindow,    // client i holds {X_i, ..., X_{i+K-1}}
};

struct ProblemInstance {
  int m = 0;  // number of message classes, >= 2
  int c = 0;  // number of clients, >= 2
  int k = 0;  // side-information window size, 1 <= k < m
  int s = 0;  // new messages demanded per client, 0 <= s <= m - k
  Convention convention = Convention::ShiftedWindow;

  // Throws std::invalid_argument when the tuple violates the bounds above.
  void validate() const;

  bool operator==(const ProblemInstance&) const = default;
};

ProblemInstance make_instance(int m, int c, int k, int s,
                              Convention convention = Convention::ShiftedWindow);

// One broadcast: a client XOR-combines a set of messages it holds.
// Payload is kept sorted ascending; |payload| == 1 means uncoded.
struct Transmission {
  int transmitter = 0;
  std::vector<int> payload;

  bool operator==(const Transmission&) const = default;
};

Transmission make_transmission(int transmitter, std::vector<int> payload);

// Reduce an index to [0, m).
int mod_message(int m, long long index);

// The K messages client `client` holds, in window order (may wrap).
std::vector<int> side_info(const ProblemInstance&, int client);

bool holds_message(const ProblemInstance&, int client, int message);
bool holds_payload(const ProblemInstance&, int client, const std::vector<int>& payload);

// Smallest client index holding every message of `payload`, or -1.
int smallest_holder(const ProblemInstance&, const std::vector<int>& payload);

// K-range cases of the schedule constructions, for m == c:
//   Uncoded        K <= floor(M/(S+1)),      S+1 single-message broadcasts
//   UncodedExtra   next K band (carries n),  S+n single-message broadcasts
//   PairedMid      floor((M+2)/3) < K < floor(M/2), stride-spaced XOR pairs
//   PairedHalf     K in {floor(M/2), floor(M/2)+1}, first/last-of-window pairs
//   MultiXor       K > floor(M/2)+1,         (e+1)-message XORs
// K <= floor((M+2)/3) always classifies uncoded (single messages are
// optimal there); above that the coded bands win even where the uncoded
// condition overlaps them. Unclassified is reported when nothing applies.
enum class Regime {
  Uncoded,
  UncodedExtra,
  PairedMid,
  PairedHalf,
  MultiXor,
  Unclassified,
};

struct RegimeInfo {
  Regime kind = Regime::Unclassified;
  int extra = 0;  // n, only meaningful for UncodedExtra

  bool operator==(const RegimeInfo&) const = default;
};

std::string regime_name(Regime);

// Classify an instance with m == c. Total: every valid (M, K, S) lands in
// exactly one regime.
RegimeInfo classify_regime(const ProblemInstance&);

// The two forms of the "uncoded transmissions are optimal" threshold.
// They coincide for m == c but can disagree otherwise.
struct UncodedThresholds {
  bool client_form;   // 3K <= C + 2
  bool message_form;  // K <= floor((M+2)/3)
  bool agree;
};

UncodedThresholds uncoded_optimal_thresholds(const ProblemInstance&);

}  // namespace cdpic
