#include "cdpic/shuffle.hpp"

#include <stdexcept>

namespace cdpic {

void ShuffleConfig::validate() const {
  if (samples_per_class <= 0) throw std::invalid_argument("samples_per_class must be positive");
  if (sample_bytes <= 0) throw std::invalid_argument("sample_bytes must be positive");
  if (compression_ratio <= 0.0 || compression_ratio > 1.0)
    throw std::invalid_argument("compression_ratio must be in (0, 1]");
  if (link_rate_bps <= 0.0) throw std::invalid_argument("link_rate_bps must be positive");
}

long long baseline_transmissions(const ProblemInstance& p) {
  p.validate();
  if (p.c <= p.k) throw std::invalid_argument("baseline needs C > K");
  const long long demand = static_cast<long long>(p.c) * p.s;
  const long long per_broadcast = p.c - p.k;
  return (demand + per_broadcast - 1) / per_broadcast;
}

EfficiencyRow efficiency_report(const ProblemInstance& p) {
  EfficiencyRow row;
  row.s = p.s;
  row.n_baseline = baseline_transmissions(p);
  row.n_achieved = construct(p).length();
  row.efficiency_pct =
      row.n_baseline == 0
          ? 0.0
          : 100.0 * static_cast<double>(row.n_baseline - row.n_achieved) /
                static_cast<double>(row.n_baseline);
  return row;
}

ShuffleReport simulate_shuffle(const ProblemInstance& p, const Schedule& schedule,
                               const ShuffleConfig& config) {
  config.validate();
  const DecodingReport decode = run_schedule(p, schedule.transmissions, DecodeMode::Static);
  if (!decode.satisfied)
    throw std::invalid_argument("schedule does not satisfy the instance");

  ShuffleReport report;
  report.coverage_before.assign(p.c, p.k);
  report.coverage_after.resize(p.c);
  for (int node = 0; node < p.c; ++node)
    report.coverage_after[node] =
        p.k + static_cast<int>(decode.per_client_decoded[node].size());

  report.n_baseline = baseline_transmissions(p);
  report.n_achieved = decode.n_used;
  const double saved = static_cast<double>(report.n_baseline - report.n_achieved);
  report.efficiency_pct =
      100.0 * saved / static_cast<double>(report.n_baseline);
  report.bits_per_transmission = static_cast<double>(config.samples_per_class) *
                                 static_cast<double>(config.sample_bytes) * 8.0 *
                                 config.compression_ratio;
  report.bits_saved = saved * report.bits_per_transmission;
  report.time_saved_ms = report.bits_saved / config.link_rate_bps * 1000.0;
  report.bits_saved_per_transmission =
      saved / static_cast<double>(report.n_baseline) * report.bits_per_transmission;
  report.time_saved_per_transmission_ms =
      report.bits_saved_per_transmission / config.link_rate_bps * 1000.0;
  return report;
}

}  // namespace cdpic
