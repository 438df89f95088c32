// Schedule constructions per K-range regime, plus the dispatcher that also
// covers the C > M and M > C cases.
#pragma once

#include <string>
#include <vector>

#include "cdpic/core.hpp"
#include "cdpic/decoder.hpp"

namespace cdpic {

struct Schedule {
  ProblemInstance instance;
  std::vector<Transmission> transmissions;
  std::string regime;  // regime_name(...) or "manual" / "none"

  int length() const { return static_cast<int>(transmissions.size()); }
};

struct ConstructError : std::runtime_error {
  enum class Kind {
    RegimeMismatch,      // constructor called outside its K band
    PayloadEscape,       // multi-XOR index lands outside the transmitter's window
    NotConstructible,    // no scheme covers the instance (e.g. M > C middle band)
    NoHolder,            // no client holds a payload after remapping
    GrowthCapExceeded,   // paired-mid growth ran past its cap unsatisfied
    VerificationFailed,  // generated schedule does not satisfy every client
  };
  Kind kind;
  ConstructError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind(kind) {}
};

// K <= floor(M/(S+1)): S+1 uncoded broadcasts spaced floor(M/(S+1)) apart.
Schedule construct_regime_a(const ProblemInstance&);

// Next K band: S+n uncoded broadcasts at evenly spread positions
// floor(j*M/(S+n)). n must match classify_regime.
Schedule construct_regime_b(const ProblemInstance&, int n);

// floor((M+2)/3) < K < floor(M/2): XOR pairs {X_{1+jd}, X_{K+jd}} with
// stride d = M-2K+1. S = 1 takes exactly two transmissions; S > 1 grows
// until the static decode satisfies everyone (capped at M transmissions).
Schedule construct_regime_c(const ProblemInstance&);

// K in {floor(M/2), floor(M/2)+1}: client C_j sends the first and last
// message of its window, offsets j = 0, K-2, K-3, ... descending, skipping
// repeats, until S+1 distinct transmitters exist. `rotation` shifts every
// index; the schedule is returned only if it verifies statically.
Schedule construct_regime_d(const ProblemInstance&, int rotation = 0);

// K > floor(M/2)+1: client C_j (j = 0..S) XORs the e+1 messages
// {X_{j+1+i*floor(K/e)}}, e = K - floor(M/2). When e divides K the last
// index escapes the transmitter's window and PayloadEscape is thrown.
Schedule construct_regime_e(const ProblemInstance&);

// Regime dispatch for m == c; reuse with transmitter remapping otherwise.
// S = 0 yields the empty schedule for any instance.
Schedule construct(const ProblemInstance&);

}  // namespace cdpic
