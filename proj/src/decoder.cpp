#include "cdpic/decoder.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace cdpic {

std::optional<int> decode_symbol(std::span<const int> knowledge,
                                 std::span<const int> payload) {
  int unknowns = 0;
  int last = -1;
  for (int msg : payload) {
    if (std::find(knowledge.begin(), knowledge.end(), msg) == knowledge.end()) {
      ++unknowns;
      last = msg;
      if (unknowns > 1) return std::nullopt;
    }
  }
  if (unknowns == 1) return last;
  return std::nullopt;
}

long long DecodingReport::total_served() const {
  return std::accumulate(served_counts.begin(), served_counts.end(), 0LL);
}

int DecodingReport::min_decoded() const {
  int lo = per_client_decoded.empty() ? 0 : static_cast<int>(per_client_decoded[0].size());
  for (const auto& d : per_client_decoded) lo = std::min(lo, static_cast<int>(d.size()));
  return lo;
}

namespace {

// Fills one client's row of the cell matrix.
void decode_client(const ProblemInstance& p, std::span<const Transmission> txs,
                   DecodeMode mode, int client, std::vector<int>& row) {
  const int n = static_cast<int>(txs.size());
  std::vector<char> known(p.m, 0);
  for (int msg : side_info(p, client)) known[msg] = 1;

  auto one_unknown = [&](const std::vector<int>& payload) {
    int unknowns = 0, last = -1;
    for (int msg : payload) {
      if (!known[msg]) {
        ++unknowns;
        last = msg;
        if (unknowns > 1) return -1;
      }
    }
    return unknowns == 1 ? last : -1;
  };

  if (mode == DecodeMode::Static) {
    for (int i = 0; i < n; ++i) row[i] = one_unknown(txs[i].payload);
    return;
  }

  // Progressive: replay until no transmission yields anything new. Once a
  // transmission decodes, its payload is fully known and stays silent.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < n; ++i) {
      if (row[i] != DecodingReport::kNoDecode) continue;
      int msg = one_unknown(txs[i].payload);
      if (msg >= 0) {
        row[i] = msg;
        known[msg] = 1;
        changed = true;
      }
    }
  }
}

}  // namespace

DecodingReport run_schedule(const ProblemInstance& p,
                            std::span<const Transmission> txs, DecodeMode mode) {
  p.validate();
  const int n = static_cast<int>(txs.size());
  for (int i = 0; i < n; ++i) {
    const auto& t = txs[i];
    if (t.transmitter < 0 || t.transmitter >= p.c)
      throw std::invalid_argument("transmitter out of range at index " + std::to_string(i));
    if (t.payload.empty())
      throw std::invalid_argument("empty payload at index " + std::to_string(i));
    for (int msg : t.payload)
      if (msg < 0 || msg >= p.m)
        throw std::invalid_argument("message out of range at index " + std::to_string(i));
    if (!holds_payload(p, t.transmitter, t.payload))
      throw ConstraintViolation(
          i, "transmission " + std::to_string(i) + ": client " +
                 std::to_string(t.transmitter) + " does not hold its payload");
  }

  DecodingReport report;
  report.n_used = n;
  report.cells.assign(p.c, std::vector<int>(n, DecodingReport::kNoDecode));
  report.per_client_decoded.assign(p.c, {});
  report.served_counts.assign(n, 0);

#pragma omp parallel for schedule(static)
  for (int client = 0; client < p.c; ++client)
    decode_client(p, txs, mode, client, report.cells[client]);

  // Attribute each distinct message to the transmission that first produced
  // it; under Static a later repeat of the same message does not serve.
  std::vector<char> seen(p.m, 0);
  bool all_satisfied = true;
  for (int client = 0; client < p.c; ++client) {
    std::fill(seen.begin(), seen.end(), 0);
    auto& decoded = report.per_client_decoded[client];
    for (int i = 0; i < n; ++i) {
      int msg = report.cells[client][i];
      if (msg >= 0 && !seen[msg]) {
        seen[msg] = 1;
        decoded.push_back(msg);
        ++report.served_counts[i];
      }
    }
    std::sort(decoded.begin(), decoded.end());
    if (static_cast<int>(decoded.size()) < p.s) all_satisfied = false;
  }
  report.satisfied = all_satisfied;
  return report;
}

}  // namespace cdpic
