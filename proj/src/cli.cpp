#include "cdpic/cli.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <string>

#include "CLI11.hpp"
#include "cdpic/json_io.hpp"
#include "cdpic/oracle.hpp"
#include "cdpic/shuffle.hpp"
#include "cdpic/table.hpp"

namespace cdpic::cli {

namespace {

std::string two_decimals(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.2f", value);
  return buffer;
}

std::string whole(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.0f", value);
  return buffer;
}

struct InstanceFlags {
  int m = 0, c = 0, k = 0, s = 0;
  std::string convention = "examples";

  void attach(CLI::App* cmd, bool with_s = true) {
    cmd->add_option("--m", m, "number of message classes")->required();
    cmd->add_option("--c", c, "number of clients")->required();
    cmd->add_option("--k", k, "side-information window size")->required();
    if (with_s) cmd->add_option("--s", s, "new messages demanded per client")->required();
    cmd->add_option("--convention", convention,
                    "side-information window: examples = {X_{i+1}..X_{i+K}}, "
                    "definition2 = {X_i..X_{i+K-1}}")
        ->check(CLI::IsMember({"examples", "definition2"}));
  }

  Convention conv() const {
    return convention == "definition2" ? Convention::PlainWindow
                                       : Convention::ShiftedWindow;
  }

  ProblemInstance instance() const { return make_instance(m, c, k, s, conv()); }
};

void print_summary(std::ostream& out, const DecodingReport& report) {
  out << "satisfied: " << (report.satisfied ? "yes" : "no") << "\n"
      << "transmissions: " << report.n_used << "\n"
      << "min new messages per client: " << report.min_decoded() << "\n"
      << "total served: " << report.total_served() << "\n";
}

int cmd_construct(const InstanceFlags& flags, const std::string& output,
                  std::ostream& out) {
  const Schedule schedule = construct(flags.instance());
  const std::string text = render_document(document_from_schedule(schedule));
  if (output.empty()) {
    out << text;
  } else {
    std::ofstream file(output);
    if (!file) throw std::invalid_argument("cannot write " + output);
    file << text;
  }
  return 0;
}

int cmd_verify(const std::string& path, const std::string& mode_name, bool table,
               const std::string& convention, std::ostream& out) {
  ScheduleDocument doc = load_document(path);
  doc.instance.convention = convention == "definition2" ? Convention::PlainWindow
                                                        : Convention::ShiftedWindow;
  const DecodeMode mode =
      mode_name == "progressive" ? DecodeMode::Progressive : DecodeMode::Static;
  const DecodingReport report =
      run_schedule(doc.instance, doc.transmissions, mode);
  if (table) out << render_table(make_decoding_table(doc.instance, report));
  print_summary(out, report);
  return report.satisfied ? 0 : 1;
}

int cmd_oracle(const InstanceFlags& flags, const std::string& mode_name,
               bool uncoded_only, const SearchCaps& caps, std::ostream& out) {
  const ProblemInstance instance = flags.instance();
  const DecodeMode mode =
      mode_name == "progressive" ? DecodeMode::Progressive : DecodeMode::Static;
  const OracleResult result = uncoded_only ? uncoded_min(instance, mode, caps)
                                           : brute_force_min(instance, mode, caps);
  out << "candidates: " << result.search_space << "\n"
      << "combos examined: " << result.combos_examined << "\n"
      << "n_min: " << result.n_min << "\n"
      << "witness:\n"
      << render_document(document_from_schedule(result.witness));
  try {
    const int constructed = construct(instance).length();
    out << "constructed length: " << constructed << " ("
        << (constructed == result.n_min ? "matches n_min" : "differs from n_min")
        << ")\n";
  } catch (const ConstructError& e) {
    out << "constructed length: unavailable (" << e.what() << ")\n";
  }
  return 0;
}

int cmd_efficiency(const InstanceFlags& flags, int s_single,
                   const std::string& s_range, std::ostream& out) {
  int lo = s_single, hi = s_single;
  if (!s_range.empty()) {
    const auto dots = s_range.find("..");
    if (dots == std::string::npos)
      throw std::invalid_argument("--s-range expects a..b");
    lo = std::stoi(s_range.substr(0, dots));
    hi = std::stoi(s_range.substr(dots + 2));
    if (lo > hi) throw std::invalid_argument("--s-range expects a <= b");
  }
  out << "S | N_W | N | efficiency%\n";
  for (int s = lo; s <= hi; ++s) {
    const EfficiencyRow row =
        efficiency_report(make_instance(flags.m, flags.c, flags.k, s, flags.conv()));
    out << row.s << " | " << row.n_baseline << " | " << row.n_achieved << " | "
        << two_decimals(row.efficiency_pct) << "\n";
  }
  return 0;
}

int cmd_shuffle(const InstanceFlags& flags, const ShuffleConfig& config,
                std::ostream& out) {
  const ProblemInstance instance = flags.instance();
  const Schedule schedule = construct(instance);
  const ShuffleReport report = simulate_shuffle(instance, schedule, config);
  int min_after = report.coverage_after.empty() ? 0 : report.coverage_after[0];
  int max_after = min_after;
  for (int v : report.coverage_after) {
    min_after = std::min(min_after, v);
    max_after = std::max(max_after, v);
  }
  out << "instance: M=" << instance.m << " C=" << instance.c << " K=" << instance.k
      << " S=" << instance.s << "\n"
      << "regime: " << schedule.regime << "\n"
      << "N_W (uncoded baseline): " << report.n_baseline << "\n"
      << "N (schedule length): " << report.n_achieved << "\n"
      << "efficiency: " << two_decimals(report.efficiency_pct) << "%\n"
      << "coverage before: " << instance.k << " classes per node\n"
      << "coverage after: min " << min_after << ", max " << max_after
      << " classes per node\n"
      << "bits per transmission: " << whole(report.bits_per_transmission) << "\n"
      << "bits saved: " << whole(report.bits_saved) << "\n"
      << "time saved: " << two_decimals(report.time_saved_ms) << " ms\n"
      << "bits saved per baseline transmission: "
      << whole(report.bits_saved_per_transmission) << "\n"
      << "time saved per baseline transmission: "
      << two_decimals(report.time_saved_per_transmission_ms) << " ms\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"consecutive-window pliable broadcast schedules: construct, "
               "verify, search, and shuffle accounting"};
  app.require_subcommand(1);

  InstanceFlags construct_flags;
  std::string output;
  CLI::App* construct_cmd =
      app.add_subcommand("construct", "build a schedule and emit its document");
  construct_flags.attach(construct_cmd);
  construct_cmd->add_option("--output", output, "write the document here instead of stdout");

  std::string verify_path, verify_mode = "static", verify_convention = "examples";
  bool verify_table = false;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "decode a schedule document at every client");
  verify_cmd->add_option("schedule", verify_path, "schedule document path")->required();
  verify_cmd->add_option("--mode", verify_mode, "static or progressive decoding")
      ->check(CLI::IsMember({"static", "progressive"}));
  verify_cmd->add_flag("--table", verify_table, "render the per-client decoding table");
  verify_cmd->add_option("--convention", verify_convention, "side-information window")
      ->check(CLI::IsMember({"examples", "definition2"}));

  InstanceFlags oracle_flags;
  std::string oracle_mode = "static";
  bool uncoded_only = false;
  SearchCaps caps;
  CLI::App* oracle_cmd =
      app.add_subcommand("oracle", "exhaustive minimum-schedule search");
  oracle_flags.attach(oracle_cmd);
  oracle_cmd->add_option("--mode", oracle_mode, "static or progressive decoding")
      ->check(CLI::IsMember({"static", "progressive"}));
  oracle_cmd->add_flag("--uncoded-only", uncoded_only,
                       "restrict the search to single-message payloads");
  oracle_cmd->add_option("--candidate-cap", caps.candidate_cap,
                         "bound on raw candidate transmissions");
  oracle_cmd->add_option("--depth-cap", caps.depth_cap,
                         "maximum schedule length searched (default S+4)");

  InstanceFlags efficiency_flags;
  std::string s_range;
  CLI::App* efficiency_cmd = app.add_subcommand(
      "efficiency", "baseline vs constructed transmission counts");
  efficiency_flags.attach(efficiency_cmd, false);
  efficiency_cmd->add_option("--s", efficiency_flags.s, "single demand value");
  efficiency_cmd->add_option("--s-range", s_range, "demand range a..b");

  InstanceFlags shuffle_flags;
  ShuffleConfig config;
  CLI::App* shuffle_cmd =
      app.add_subcommand("shuffle", "class coverage and payload-bit accounting");
  shuffle_flags.attach(shuffle_cmd);
  shuffle_cmd->add_option("--samples", config.samples_per_class, "samples per class");
  shuffle_cmd->add_option("--sample-bytes", config.sample_bytes, "bytes per sample");
  shuffle_cmd->add_option("--compression", config.compression_ratio,
                          "fraction of bytes kept on the wire");
  shuffle_cmd->add_option("--rate", config.link_rate_bps, "link rate in bits/s");

  std::vector<const char*> argv;
  argv.push_back("cdpic");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (construct_cmd->parsed()) return cmd_construct(construct_flags, output, out);
    if (verify_cmd->parsed())
      return cmd_verify(verify_path, verify_mode, verify_table, verify_convention, out);
    if (oracle_cmd->parsed())
      return cmd_oracle(oracle_flags, oracle_mode, uncoded_only, caps, out);
    if (efficiency_cmd->parsed()) {
      if (s_range.empty() && efficiency_cmd->count("--s") == 0)
        throw std::invalid_argument("efficiency needs --s or --s-range");
      return cmd_efficiency(efficiency_flags, efficiency_flags.s, s_range, out);
    }
    if (shuffle_cmd->parsed()) return cmd_shuffle(shuffle_flags, config, out);
    err << "no subcommand given\n";
    return 2;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ConstraintViolation& e) {
    err << "error: " << e.what() << "\n";
    return 4;
  } catch (const ConstructError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const CapExceeded& e) {
    err << "error (" << e.which << "): " << e.what() << "\n";
    return 5;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace cdpic::cli
