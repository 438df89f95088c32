#include "cdpic/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <map>

namespace cdpic {

namespace {

std::string instance_tag(const ProblemInstance& p) {
  return "M=" + std::to_string(p.m) + " C=" + std::to_string(p.c) +
         " K=" + std::to_string(p.k) + " S=" + std::to_string(p.s);
}

long long raw_candidate_count(const ProblemInstance& p, bool uncoded_only) {
  if (uncoded_only) return p.c;
  if (p.k >= 62) return -1;  // beyond any sane cap
  return static_cast<long long>(p.c) * ((1LL << p.k) - 1);
}

long long combinations(long long n, int d, long long cap) {
  long long total = 1;
  for (int i = 1; i <= d; ++i) {
    total = total * (n - i + 1) / i;
    if (total > cap || total < 0) return cap + 1;
  }
  return total;
}

// Candidate list plus the per-client static decode of each candidate,
// packed as message bitmasks.
struct CandidateTable {
  std::vector<Transmission> txs;
  std::vector<std::vector<uint64_t>> decode_masks;  // [cand][client]
  std::vector<uint64_t> payload_masks;              // [cand]
  std::vector<uint64_t> side_masks;                 // [client]
  int max_payload = 0;
};

CandidateTable build_table(const ProblemInstance& p,
                           std::vector<Transmission> txs) {
  if (p.m > 64)
    throw CapExceeded("mask-width",
                      instance_tag(p) + ": search supports at most 64 messages");
  CandidateTable table;
  table.txs = std::move(txs);
  table.side_masks.assign(p.c, 0);
  for (int cl = 0; cl < p.c; ++cl)
    for (int msg : side_info(p, cl)) table.side_masks[cl] |= 1ULL << msg;

  table.decode_masks.assign(table.txs.size(), std::vector<uint64_t>(p.c, 0));
  table.payload_masks.assign(table.txs.size(), 0);
  for (size_t i = 0; i < table.txs.size(); ++i) {
    uint64_t pm = 0;
    for (int msg : table.txs[i].payload) pm |= 1ULL << msg;
    table.payload_masks[i] = pm;
    table.max_payload = std::max(table.max_payload,
                                 static_cast<int>(table.txs[i].payload.size()));
    for (int cl = 0; cl < p.c; ++cl) {
      const uint64_t unknown = pm & ~table.side_masks[cl];
      if (std::popcount(unknown) == 1) table.decode_masks[i][cl] = unknown;
    }
  }
  return table;
}

// Depth-first scan of d-combinations in lexicographic candidate order.
// With rotation pruning on, subtrees that can no longer include a
// transmitter-0 candidate are skipped: any satisfying schedule rotates to
// one that contains such a candidate, so skipping them never changes the
// depth verdict.
struct ComboScanner {
  const ProblemInstance& p;
  const CandidateTable& table;
  int depth;
  DecodeMode mode;
  std::vector<int> next_zero;  // next candidate index >= i transmitted by client 0, or n
  bool prune_rotations;

  std::vector<std::vector<uint64_t>> accs;  // prefix ORs of decode masks
  std::vector<int> combo;
  std::vector<int> hit;
  long long examined = 0;

  ComboScanner(const ProblemInstance& p, const CandidateTable& table, int depth,
               DecodeMode mode, bool prune_rotations)
      : p(p), table(table), depth(depth), mode(mode),
        prune_rotations(prune_rotations) {
    const int n = static_cast<int>(table.txs.size());
    next_zero.assign(n + 1, n);
    for (int i = n - 1; i >= 0; --i)
      next_zero[i] = table.txs[i].transmitter == 0 ? i : next_zero[i + 1];
    accs.assign(depth + 1, std::vector<uint64_t>(p.c, 0));
    combo.assign(depth, 0);
  }

  bool progressive_satisfied() const {
    int total = 0;
    for (int cl = 0; cl < p.c; ++cl) {
      uint64_t known = table.side_masks[cl];
      bool changed = true;
      while (changed) {
        changed = false;
        for (int i : combo) {
          const uint64_t unknown = table.payload_masks[i] & ~known;
          if (std::popcount(unknown) == 1) {
            known |= unknown;
            changed = true;
          }
        }
      }
      if (std::popcount(known & ~table.side_masks[cl]) < p.s) return false;
      ++total;
    }
    return total == p.c;
  }

  bool descend(int pos, int from, bool has_zero) {
    const int n = static_cast<int>(table.txs.size());
    const int remaining = depth - pos - 1;
    for (int i = from; i <= n - 1 - remaining; ++i) {
      if (prune_rotations && !has_zero && next_zero[i] >= n) break;
      combo[pos] = i;
      const auto& mask = table.decode_masks[i];
      auto& acc = accs[pos + 1];
      const auto& prev = accs[pos];
      bool viable = true;
      if (pos + 1 == depth) {
        ++examined;
        bool ok = true;
        for (int cl = 0; cl < p.c; ++cl) {
          acc[cl] = prev[cl] | mask[cl];
          if (std::popcount(acc[cl]) < p.s) ok = false;
        }
        if (!ok && mode == DecodeMode::Progressive) ok = progressive_satisfied();
        if (ok) {
          hit = combo;
          return true;
        }
        continue;
      }
      for (int cl = 0; cl < p.c; ++cl) {
        acc[cl] = prev[cl] | mask[cl];
        // A client can gain at most one message per remaining transmission.
        if (mode == DecodeMode::Static &&
            std::popcount(acc[cl]) +
                    static_cast<long long>(remaining) * table.max_payload <
                p.s)
          viable = false;
      }
      if (!viable) continue;
      if (descend(pos + 1, i + 1,
                  has_zero || table.txs[i].transmitter == 0))
        return true;
    }
    return false;
  }
};

// Scans one depth over all first indices, in parallel, and returns the
// lexicographically first satisfying combination (after pruning).
bool scan_depth(const ProblemInstance& p, const CandidateTable& table, int depth,
                DecodeMode mode, bool prune_rotations, std::vector<int>& witness,
                long long& examined) {
  const int n = static_cast<int>(table.txs.size());
  if (depth == 0) return false;
  std::vector<std::vector<int>> hits(std::max(0, n - depth + 1));
  std::atomic<int> best_first{n};
  std::atomic<long long> total_examined{0};

#pragma omp parallel for schedule(dynamic, 1)
  for (int i0 = 0; i0 <= n - depth; ++i0) {
    if (i0 > best_first.load(std::memory_order_relaxed)) continue;
    ComboScanner scanner(p, table, depth, mode, prune_rotations);
    if (prune_rotations && scanner.next_zero[i0] >= n &&
        table.txs[i0].transmitter != 0)
      continue;  // no rotation representative in this subtree
    scanner.combo[0] = i0;
    const auto& mask = table.decode_masks[i0];
    for (int cl = 0; cl < p.c; ++cl) scanner.accs[1][cl] = mask[cl];
    bool found;
    if (depth == 1) {
      ++scanner.examined;
      found = true;
      for (int cl = 0; cl < p.c; ++cl)
        if (std::popcount(scanner.accs[1][cl]) < p.s) found = false;
      if (!found && mode == DecodeMode::Progressive) {
        scanner.combo = {i0};
        found = scanner.progressive_satisfied();
      }
      if (found) scanner.hit = {i0};
    } else {
      found = scanner.descend(1, i0 + 1, table.txs[i0].transmitter == 0);
    }
    total_examined.fetch_add(scanner.examined, std::memory_order_relaxed);
    if (found) {
      hits[i0] = scanner.hit;
      int expected = best_first.load();
      while (i0 < expected &&
             !best_first.compare_exchange_weak(expected, i0)) {
      }
    }
  }

  examined += total_examined.load();
  const int first = best_first.load();
  if (first >= n) return false;
  witness = hits[first];
  return true;
}

OracleResult search_min(const ProblemInstance& p, DecodeMode mode,
                        const SearchCaps& caps, bool uncoded_only) {
  p.validate();
  OracleResult result;
  result.mode = mode;
  result.witness = Schedule{p, {}, "manual"};
  if (p.s == 0) return result;

  const long long raw = raw_candidate_count(p, uncoded_only);
  if (raw < 0 || raw > caps.candidate_cap)
    throw CapExceeded("candidate-cap",
                      instance_tag(p) + ": raw candidate count exceeds " +
                          std::to_string(caps.candidate_cap));
  CandidateTable table =
      build_table(p, enumerate_transmissions(p, caps, uncoded_only));
  result.search_space = static_cast<long long>(table.txs.size());

  int start = p.s + 1;
  if (uncoded_only && p.m == p.c)
    start = std::max(start,
                     static_cast<int>((static_cast<long long>(p.m) * p.s +
                                       (p.m - p.k) - 1) /
                                      (p.m - p.k)));
  const int depth_cap = caps.depth_cap >= 0 ? caps.depth_cap : p.s + 4;
  if (start > depth_cap)
    throw CapExceeded("depth-cap", instance_tag(p) + ": search floor " +
                                       std::to_string(start) +
                                       " exceeds depth cap " +
                                       std::to_string(depth_cap));

  const bool prune_rotations = p.m == p.c;
  for (int depth = start; depth <= depth_cap; ++depth) {
    if (combinations(result.search_space, depth, caps.combo_cap) > caps.combo_cap)
      throw CapExceeded("combination-cap",
                        instance_tag(p) + ": C(" +
                            std::to_string(result.search_space) + "," +
                            std::to_string(depth) + ") exceeds the combination cap");
    std::vector<int> witness;
    if (scan_depth(p, table, depth, mode, prune_rotations, witness,
                   result.combos_examined)) {
      result.n_min = depth;
      for (int i : witness) result.witness.transmissions.push_back(table.txs[i]);
      return result;
    }
  }
  throw CapExceeded("depth-cap",
                    instance_tag(p) + ": no schedule of length <= " +
                        std::to_string(depth_cap) + " satisfies");
}

}  // namespace

std::vector<Transmission> enumerate_transmissions(const ProblemInstance& p,
                                                  const SearchCaps& caps,
                                                  bool uncoded_only) {
  p.validate();
  const long long raw = raw_candidate_count(p, uncoded_only);
  if (raw < 0 || raw > caps.candidate_cap)
    throw CapExceeded("candidate-cap",
                      instance_tag(p) + ": raw candidate count exceeds " +
                          std::to_string(caps.candidate_cap));

  std::map<std::vector<int>, int> first_holder;
  for (int cl = 0; cl < p.c; ++cl) {
    const std::vector<int> window = side_info(p, cl);
    if (uncoded_only) {
      for (int msg : window) first_holder.try_emplace({msg}, cl);
      continue;
    }
    for (unsigned subset = 1; subset < (1u << p.k); ++subset) {
      std::vector<int> payload;
      for (int t = 0; t < p.k; ++t)
        if (subset & (1u << t)) payload.push_back(window[t]);
      std::sort(payload.begin(), payload.end());
      first_holder.try_emplace(std::move(payload), cl);
    }
  }

  std::vector<Transmission> candidates;
  candidates.reserve(first_holder.size());
  for (const auto& [payload, transmitter] : first_holder)
    candidates.push_back(Transmission{transmitter, payload});
  std::sort(candidates.begin(), candidates.end(),
            [](const Transmission& a, const Transmission& b) {
              if (a.payload.size() != b.payload.size())
                return a.payload.size() < b.payload.size();
              if (a.transmitter != b.transmitter) return a.transmitter < b.transmitter;
              return a.payload < b.payload;
            });
  return candidates;
}

OracleResult brute_force_min(const ProblemInstance& p, DecodeMode mode,
                             const SearchCaps& caps) {
  return search_min(p, mode, caps, false);
}

OracleResult uncoded_min(const ProblemInstance& p, DecodeMode mode,
                         const SearchCaps& caps) {
  return search_min(p, mode, caps, true);
}

OracleResult exhaustive_min_reference(const ProblemInstance& p, DecodeMode mode,
                                      const SearchCaps& caps) {
  p.validate();
  OracleResult result;
  result.mode = mode;
  result.witness = Schedule{p, {}, "manual"};
  if (p.s == 0) return result;

  const long long raw = raw_candidate_count(p, false);
  if (raw < 0 || raw > caps.candidate_cap)
    throw CapExceeded("candidate-cap",
                      instance_tag(p) + ": raw candidate count exceeds " +
                          std::to_string(caps.candidate_cap));

  // Every (client, window subset) pair, duplicates and all.
  std::vector<Transmission> candidates;
  for (int cl = 0; cl < p.c; ++cl) {
    const std::vector<int> window = side_info(p, cl);
    for (unsigned subset = 1; subset < (1u << p.k); ++subset) {
      std::vector<int> payload;
      for (int t = 0; t < p.k; ++t)
        if (subset & (1u << t)) payload.push_back(window[t]);
      candidates.push_back(make_transmission(cl, std::move(payload)));
    }
  }
  result.search_space = static_cast<long long>(candidates.size());

  const int depth_cap = caps.depth_cap >= 0 ? caps.depth_cap : p.s + 4;
  std::vector<Transmission> chosen;
  std::vector<int> combo;

  auto satisfied = [&]() {
    return run_schedule(p, chosen, mode).satisfied;
  };
  // Plain lexicographic depth-first scan.
  auto descend = [&](auto&& self, int depth, int from) -> bool {
    if (static_cast<int>(chosen.size()) == depth) {
      ++result.combos_examined;
      return satisfied();
    }
    for (int i = from; i < static_cast<int>(candidates.size()); ++i) {
      chosen.push_back(candidates[i]);
      if (self(self, depth, i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };

  for (int depth = p.s + 1; depth <= depth_cap; ++depth) {
    if (combinations(result.search_space, depth, caps.combo_cap) > caps.combo_cap)
      throw CapExceeded("combination-cap",
                        instance_tag(p) + ": reference search too large at depth " +
                            std::to_string(depth));
    if (descend(descend, depth, 0)) {
      result.n_min = depth;
      result.witness.transmissions = chosen;
      return result;
    }
  }
  throw CapExceeded("depth-cap",
                    instance_tag(p) + ": reference search exhausted depth cap");
}

std::vector<TheoremCheck> check_theorems(const ProblemInstance& p,
                                         const Schedule& schedule,
                                         const DecodingReport& report,
                                         const SearchCaps& caps) {
  using Status = TheoremCheck::Status;
  std::vector<TheoremCheck> checks;

  if (report.satisfied && p.s >= 1) {
    const bool ok = report.n_used >= p.s + 1;
    checks.push_back({"T1", ok ? Status::Pass : Status::Fail,
                      std::to_string(report.n_used) + " >= " + std::to_string(p.s + 1)});
  } else {
    checks.push_back({"T1", Status::Pass, "vacuous: schedule not satisfying or S=0"});
  }

  if (report.satisfied) {
    const long long served = report.total_served();
    const long long need = static_cast<long long>(p.c) * p.s;
    checks.push_back({"T2", served >= need ? Status::Pass : Status::Fail,
                      "served " + std::to_string(served) + " >= " + std::to_string(need)});
  } else {
    checks.push_back({"T2", Status::Pass, "vacuous: schedule not satisfying"});
  }

  if (3 * p.k <= p.c + 2) {
    try {
      const OracleResult full = brute_force_min(p, DecodeMode::Static, caps);
      const OracleResult uncoded = uncoded_min(p, DecodeMode::Static, caps);
      checks.push_back({"T3", full.n_min == uncoded.n_min ? Status::Pass : Status::Fail,
                        "full " + std::to_string(full.n_min) + ", uncoded " +
                            std::to_string(uncoded.n_min)});
    } catch (const CapExceeded& e) {
      checks.push_back({"T3", Status::Skipped, std::string("cap: ") + e.what()});
    }
  } else {
    checks.push_back({"T3", Status::Skipped, "3K > C+2"});
  }

  if (p.m == p.c && report.satisfied) {
    bool ok = true;
    std::string detail;
    for (int extra : {1, p.m}) {
      ProblemInstance wider = make_instance(p.m, p.c + extra, p.k, p.s, p.convention);
      const auto wide_report =
          run_schedule(wider, schedule.transmissions, DecodeMode::Static);
      if (!wide_report.satisfied) {
        ok = false;
        detail = "fails at C'=" + std::to_string(wider.c);
      }
    }
    checks.push_back({"T4", ok ? Status::Pass : Status::Fail,
                      ok ? "re-verifies at C'=M+1 and C'=2M" : detail});
  } else {
    checks.push_back({"T4", Status::Skipped, "needs a satisfying m == c schedule"});
  }

  if (p.m == p.c && p.s >= 1) {
    const RegimeInfo info = classify_regime(p);
    if (info.kind == Regime::Uncoded || info.kind == Regime::PairedHalf ||
        info.kind == Regime::MultiXor) {
      const bool ok = report.satisfied && report.n_used == p.s + 1;
      checks.push_back({"T5", ok ? Status::Pass : Status::Fail,
                        regime_name(info.kind) + " length " +
                            std::to_string(report.n_used) + " vs " +
                            std::to_string(p.s + 1)});
    } else {
      checks.push_back({"T5", Status::Skipped,
                        "regime " + regime_name(info.kind) + " makes no S+1 claim"});
    }
  } else {
    checks.push_back({"T5", Status::Skipped, "needs m == c and S >= 1"});
  }

  return checks;
}

}  // namespace cdpic
