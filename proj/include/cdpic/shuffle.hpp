// Data-class shuffling model: transmission counts against the uncoded
// baseline, per-node class coverage, and payload bit/time accounting.
#pragma once

#include <vector>

#include "cdpic/decoder.hpp"
#include "cdpic/schemes.hpp"

namespace cdpic {

struct ShuffleConfig {
  long long samples_per_class = 2000;
  long long sample_bytes = 784;     // 28 x 28 grayscale
  double compression_ratio = 0.2;   // fraction of bytes kept on the wire
  double link_rate_bps = 1e6;

  void validate() const;
};

// Uncoded broadcast floor ceil(C*S / (C-K)): each plain class broadcast is
// new for exactly C-K nodes. Requires C > K.
long long baseline_transmissions(const ProblemInstance&);

struct EfficiencyRow {
  int s = 0;
  long long n_baseline = 0;
  int n_achieved = 0;
  double efficiency_pct = 0.0;  // (N_W - N) / N_W * 100
};

// Constructs the schedule for the instance and compares its length with
// the uncoded baseline. Construction errors propagate.
EfficiencyRow efficiency_report(const ProblemInstance&);

struct ShuffleReport {
  std::vector<int> coverage_before;  // classes held per node (= K)
  std::vector<int> coverage_after;   // K + distinct classes decoded
  long long n_baseline = 0;
  int n_achieved = 0;
  double efficiency_pct = 0.0;
  double bits_per_transmission = 0.0;
  // Whole-shuffle saving: (N_W - N) transmissions' worth of bits.
  double bits_saved = 0.0;
  double time_saved_ms = 0.0;
  // Same saving expressed per baseline transmission, i.e. the efficiency
  // fraction of one transmission's bits. Both views are reported since the
  // headline numbers quoted for this model use the per-transmission form.
  double bits_saved_per_transmission = 0.0;
  double time_saved_per_transmission_ms = 0.0;
};

// Runs the static decode, turns decoded messages into acquired classes and
// prices the saved transmissions. The schedule must satisfy the instance.
ShuffleReport simulate_shuffle(const ProblemInstance&, const Schedule&,
                               const ShuffleConfig&);

}  // namespace cdpic
