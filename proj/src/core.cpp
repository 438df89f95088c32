#include "cdpic/core.hpp"

#include <algorithm>

namespace cdpic {

void ProblemInstance::validate() const {
  if (m < 2) throw std::invalid_argument("m must be >= 2");
  if (c < 2) throw std::invalid_argument("c must be >= 2");
  if (k < 1 || k >= m) throw std::invalid_argument("k must satisfy 1 <= k < m");
  if (s < 0 || s > m - k) throw std::invalid_argument("s must satisfy 0 <= s <= m - k");
}

ProblemInstance make_instance(int m, int c, int k, int s, Convention convention) {
  ProblemInstance p{m, c, k, s, convention};
  p.validate();
  return p;
}

Transmission make_transmission(int transmitter, std::vector<int> payload) {
  std::sort(payload.begin(), payload.end());
  if (std::adjacent_find(payload.begin(), payload.end()) != payload.end())
    throw std::invalid_argument("payload repeats a message");
  if (payload.empty()) throw std::invalid_argument("payload is empty");
  return Transmission{transmitter, std::move(payload)};
}

int mod_message(int m, long long index) {
  int r = static_cast<int>(index % m);
  return r < 0 ? r + m : r;
}

namespace {

int window_base(const ProblemInstance& p) {
  return p.convention == Convention::ShiftedWindow ? 1 : 0;
}

}  // namespace

std::vector<int> side_info(const ProblemInstance& p, int client) {
  if (client < 0 || client >= p.c) throw std::invalid_argument("client out of range");
  std::vector<int> window(p.k);
  const int base = window_base(p);
  for (int t = 0; t < p.k; ++t) window[t] = mod_message(p.m, client + base + t);
  return window;
}

bool holds_message(const ProblemInstance& p, int client, int message) {
  return mod_message(p.m, static_cast<long long>(message) - client - window_base(p)) < p.k;
}

bool holds_payload(const ProblemInstance& p, int client, const std::vector<int>& payload) {
  for (int msg : payload)
    if (!holds_message(p, client, msg)) return false;
  return true;
}

int smallest_holder(const ProblemInstance& p, const std::vector<int>& payload) {
  for (int client = 0; client < p.c; ++client)
    if (holds_payload(p, client, payload)) return client;
  return -1;
}

std::string regime_name(Regime r) {
  switch (r) {
    case Regime::Uncoded: return "uncoded";
    case Regime::UncodedExtra: return "uncoded-extra";
    case Regime::PairedMid: return "paired-mid";
    case Regime::PairedHalf: return "paired-half";
    case Regime::MultiXor: return "multi-xor";
    case Regime::Unclassified: return "unclassified";
  }
  return "unclassified";
}

RegimeInfo classify_regime(const ProblemInstance& p) {
  p.validate();
  if (p.m != p.c) throw std::invalid_argument("classify_regime requires m == c");
  const int m = p.m, k = p.k, s = p.s;
  const int half = m / 2;

  // K <= floor((M+2)/3), equivalently 3K <= M+2: single-message broadcasts
  // serve at least as many clients as any coded symbol, so the uncoded
  // schemes own this zone outright — even where a coded K band overlaps it
  // on small instances.
  if (3 * k <= m + 2) {
    if (k <= m / (s + 1)) return {Regime::Uncoded, 0};
    // Bands (floor((n-1)M/(S+n-1)), floor(nM/(S+n))] tile the K axis above
    // the previous case, so this search always terminates for a valid
    // instance. floor(nM/(S+n)) rather than n*floor(M/(S+n)): the product
    // form leaves holes (e.g. M=9, S=3, K=3) where the count it certifies
    // is not the uncoded optimum.
    for (int n = 2; n <= m - s; ++n) {
      const long long lo = static_cast<long long>(n - 1) * m / (s + n - 1);
      const long long hi = static_cast<long long>(n) * m / (s + n);
      if (lo < k && k <= hi) return {Regime::UncodedExtra, n};
    }
    return {Regime::Unclassified, 0};
  }

  // Coded zone; the three K bands partition it. For small S the uncoded
  // S+1 condition can reach up here too, but these bands take precedence:
  // coded pairs meet the same count and stay competitive as S grows.
  if (k > half + 1) return {Regime::MultiXor, 0};
  if (k >= half) return {Regime::PairedHalf, 0};
  return {Regime::PairedMid, 0};
}

UncodedThresholds uncoded_optimal_thresholds(const ProblemInstance& p) {
  UncodedThresholds t{};
  t.client_form = 3 * p.k <= p.c + 2;
  t.message_form = p.k <= (p.m + 2) / 3;
  t.agree = t.client_form == t.message_form;
  return t;
}

}  // namespace cdpic
