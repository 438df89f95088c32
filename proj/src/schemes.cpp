#include "cdpic/schemes.hpp"

#include <algorithm>
#include <string>

namespace cdpic {

namespace {

std::string instance_tag(const ProblemInstance& p) {
  return "M=" + std::to_string(p.m) + " C=" + std::to_string(p.c) +
         " K=" + std::to_string(p.k) + " S=" + std::to_string(p.s);
}

void require_regime(const ProblemInstance& p, Regime expected) {
  RegimeInfo info = classify_regime(p);
  if (info.kind != expected)
    throw ConstructError(ConstructError::Kind::RegimeMismatch,
                         instance_tag(p) + " classifies as " + regime_name(info.kind) +
                             ", not " + regime_name(expected));
}

Schedule empty_schedule(const ProblemInstance& p) { return {p, {}, "none"}; }

bool statically_satisfied(const ProblemInstance& p, const std::vector<Transmission>& txs) {
  return run_schedule(p, txs, DecodeMode::Static).satisfied;
}

// Every constructor runs its output through the decoder before returning,
// so a schedule the caller receives always satisfies its instance.
Schedule verified(Schedule sched) {
  if (!statically_satisfied(sched.instance, sched.transmissions))
    throw ConstructError(
        ConstructError::Kind::VerificationFailed,
        instance_tag(sched.instance) + ": " + sched.regime +
            " schedule leaves a client short under static decoding "
            "(progressive decoding may still satisfy)");
  return sched;
}

}  // namespace

Schedule construct_regime_a(const ProblemInstance& p) {
  p.validate();
  if (p.s == 0) return empty_schedule(p);
  require_regime(p, Regime::Uncoded);
  const int spacing = p.m / (p.s + 1);
  Schedule sched{p, {}, regime_name(Regime::Uncoded)};
  for (int j = 0; j <= p.s; ++j) {
    const int pos = mod_message(p.m, static_cast<long long>(j) * spacing);
    sched.transmissions.push_back(
        make_transmission(pos % p.c, {mod_message(p.m, pos + 1)}));
  }
  return verified(std::move(sched));
}

Schedule construct_regime_b(const ProblemInstance& p, int n) {
  p.validate();
  if (p.s == 0) return empty_schedule(p);
  RegimeInfo info = classify_regime(p);
  if (info.kind != Regime::UncodedExtra || info.extra != n)
    throw ConstructError(ConstructError::Kind::RegimeMismatch,
                         instance_tag(p) + " does not take n=" + std::to_string(n));
  // Evenly spread positions floor(j*M/N): any K-window then covers at most
  // n of the transmitted messages, so every client decodes >= S of them.
  const int count = p.s + n;
  Schedule sched{p, {}, regime_name(Regime::UncodedExtra)};
  for (int j = 0; j < count; ++j) {
    const int pos = static_cast<int>(static_cast<long long>(j) * p.m / count);
    sched.transmissions.push_back(
        make_transmission(pos % p.c, {mod_message(p.m, pos + 1)}));
  }
  return verified(std::move(sched));
}

Schedule construct_regime_c(const ProblemInstance& p) {
  p.validate();
  if (p.s == 0) return empty_schedule(p);
  require_regime(p, Regime::PairedMid);
  const int stride = p.m - 2 * p.k + 1;  // > 0 since K < floor(M/2)
  Schedule sched{p, {}, regime_name(Regime::PairedMid)};

  auto pair_at = [&](int j) {
    const long long off = static_cast<long long>(j) * stride;
    return make_transmission(mod_message(p.m, off) % p.c,
                             {mod_message(p.m, 1 + off), mod_message(p.m, p.k + off)});
  };

  if (p.s == 1) {
    sched.transmissions = {pair_at(0), pair_at(1)};
    return verified(std::move(sched));
  }
  // S > 1: keep extending until the static decode satisfies everyone. The
  // pairs repeat messages at some clients, so the final count can exceed
  // S+1; anything past M transmissions signals a construction gap.
  for (int j = 0; j < p.m; ++j) {
    sched.transmissions.push_back(pair_at(j));
    if (j >= 1 && statically_satisfied(p, sched.transmissions)) return sched;
  }
  throw ConstructError(ConstructError::Kind::GrowthCapExceeded,
                       instance_tag(p) + ": pair chain unsatisfied after M transmissions");
}

Schedule construct_regime_d(const ProblemInstance& p, int rotation) {
  p.validate();
  if (p.s == 0) return empty_schedule(p);
  require_regime(p, Regime::PairedHalf);

  // Offsets 0, K-2, K-3, ... descending mod C, skipping repeats, until S+1
  // distinct transmitters exist.
  std::vector<char> used(p.c, 0);
  std::vector<int> offsets{0};
  used[0] = 1;
  int next = p.k - 2;
  while (static_cast<int>(offsets.size()) < p.s + 1) {
    const int offset = mod_message(p.c, next--);
    if (used[offset]) continue;
    used[offset] = 1;
    offsets.push_back(offset);
  }

  Schedule sched{p, {}, regime_name(Regime::PairedHalf)};
  for (int offset : offsets) {
    const long long j = offset + rotation;
    sched.transmissions.push_back(
        make_transmission(mod_message(p.c, j),
                          {mod_message(p.m, j + 1), mod_message(p.m, j + p.k)}));
  }
  return verified(std::move(sched));
}

Schedule construct_regime_e(const ProblemInstance& p) {
  p.validate();
  if (p.s == 0) return empty_schedule(p);
  require_regime(p, Regime::MultiXor);
  const int e = p.k - p.m / 2;  // >= 2 in this band
  const int step = p.k / e;
  Schedule sched{p, {}, regime_name(Regime::MultiXor)};
  for (int j = 0; j <= p.s; ++j) {
    std::vector<int> payload;
    for (int i = 0; i <= e; ++i) {
      const int msg = mod_message(p.m, j + 1 + static_cast<long long>(i) * step);
      if (!holds_message(p, j % p.c, msg))
        throw ConstructError(
            ConstructError::Kind::PayloadEscape,
            instance_tag(p) + ": e=" + std::to_string(e) + " divides K, index X_" +
                std::to_string(msg) + " falls outside client " + std::to_string(j) +
                "'s window");
      payload.push_back(msg);
    }
    sched.transmissions.push_back(make_transmission(j % p.c, std::move(payload)));
  }
  // The window-escape guard above is not the only failure mode: when the
  // payload's wrap gap exceeds M - K, a client whose unknown messages all
  // sit in that gap decodes nothing, so the decoder gets the final word.
  return verified(std::move(sched));
}

namespace {

Schedule construct_square(const ProblemInstance& p) {
  RegimeInfo info = classify_regime(p);
  switch (info.kind) {
    case Regime::Uncoded: return construct_regime_a(p);
    case Regime::UncodedExtra: return construct_regime_b(p, info.extra);
    case Regime::PairedMid: return construct_regime_c(p);
    case Regime::PairedHalf: return construct_regime_d(p);
    case Regime::MultiXor: return construct_regime_e(p);
    case Regime::Unclassified: break;
  }
  throw ConstructError(ConstructError::Kind::NotConstructible,
                       instance_tag(p) + ": no construction covers this K band");
}

// Reassign transmissions to the smallest client holding the payload. With
// keep_valid set, a transmitter that still exists and holds its payload is
// left alone.
std::vector<Transmission> remap_transmitters(const ProblemInstance& p,
                                             std::vector<Transmission> txs,
                                             bool keep_valid) {
  for (auto& t : txs) {
    if (keep_valid && t.transmitter < p.c && holds_payload(p, t.transmitter, t.payload))
      continue;
    const int holder = smallest_holder(p, t.payload);
    if (holder < 0)
      throw ConstructError(ConstructError::Kind::NoHolder,
                           instance_tag(p) + ": no client holds payload of size " +
                               std::to_string(t.payload.size()));
    t.transmitter = holder;
  }
  return txs;
}

}  // namespace

Schedule construct(const ProblemInstance& p) {
  p.validate();
  if (p.s == 0) return empty_schedule(p);
  if (p.m == p.c) return construct_square(p);

  ProblemInstance square = make_instance(p.m, p.m, p.k, p.s, p.convention);

  if (p.c > p.m) {
    // Clients repeat their windows with period M, so the square schedule
    // satisfies the extra clients as-is. Its transmitters, being < M, are
    // already the smallest clients with those windows.
    Schedule base = construct_square(square);
    return {p, std::move(base.transmissions), base.regime};
  }

  // m > c below: fewer clients than messages.
  if (3 * p.k <= p.c + 2) {
    Schedule base = construct_square(square);
    if (base.regime != regime_name(Regime::Uncoded) &&
        base.regime != regime_name(Regime::UncodedExtra))
      throw ConstructError(ConstructError::Kind::NotConstructible,
                           instance_tag(p) + ": uncoded reuse expected an uncoded band");
    return {p, remap_transmitters(p, std::move(base.transmissions), false),
            base.regime};
  }
  if (p.k >= p.m / 2) {
    Schedule base = construct_square(square);
    return {p, remap_transmitters(p, std::move(base.transmissions), true),
            base.regime};
  }
  throw ConstructError(
      ConstructError::Kind::NotConstructible,
      instance_tag(p) + ": middle K band with more messages than clients has no "
                        "construction; use the exhaustive search");
}

}  // namespace cdpic
