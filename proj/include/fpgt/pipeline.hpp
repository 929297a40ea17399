#ifndef FPGT_PIPELINE_HPP
#define FPGT_PIPELINE_HPP

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "fpgt/ingest.hpp"
#include "fpgt/miner.hpp"
#include "fpgt/window.hpp"

namespace fpgt {

enum class OutputMode { Json, Text };

/// Settings for one end-to-end run, mirroring the command-line flags.
struct RunConfig {
  std::string input = "-";
  std::size_t window = 0;
  std::size_t slide = 1;
  SupportSpec min_support = SupportSpec::fraction(0.2);
  std::size_t k = 10;
  OutputMode output = OutputMode::Json;
  bool include_nonclosed = false;

  void validate() const {
    WindowConfig{window, slide}.validate();
    if (k < 1) throw std::invalid_argument("top-k count must be at least 1");
  }
};

/// Result of one mining pass over the current window.
struct WindowReport {
  std::uint64_t window_end = 0;
  std::size_t occupied = 0;
  std::size_t threshold = 0;
  std::vector<MinedPattern> patterns;  // closed only unless configured
  std::vector<Itemset> top_k;
};

inline WindowReport make_report(const WindowSnapshot& snap,
                                const MinerConfig& config,
                                bool include_nonclosed) {
  WindowReport report;
  report.window_end = snap.window_end_seq();
  report.occupied = snap.occupied();
  report.threshold = config.min_support.resolve(snap.occupied());
  std::vector<MinedPattern> all = mine(snap, config);
  for (const MinedPattern& p : all) {
    if (p.closed && report.top_k.size() < config.k)
      report.top_k.push_back(p.itemset);
  }
  if (include_nonclosed) {
    report.patterns = std::move(all);
  } else {
    for (MinedPattern& p : all)
      if (p.closed) report.patterns.push_back(std::move(p));
  }
  return report;
}

/// JSON mode: one single-line object per report. Text mode: an aligned
/// table. Both are deterministic for a given report.
inline std::string render_report(const WindowReport& report, OutputMode mode) {
  if (mode == OutputMode::Json) {
    nlohmann::ordered_json j;
    j["window_end"] = report.window_end;
    j["occupied"] = report.occupied;
    j["threshold"] = report.threshold;
    nlohmann::ordered_json patterns = nlohmann::ordered_json::array();
    for (const MinedPattern& p : report.patterns) {
      nlohmann::ordered_json entry;
      entry["items"] = p.itemset;
      entry["support"] = p.support;
      entry["closed"] = p.closed;
      patterns.push_back(std::move(entry));
    }
    j["patterns"] = std::move(patterns);
    j["top_k"] = report.top_k;
    return j.dump();
  }

  std::ostringstream os;
  os << "window_end=" << report.window_end << " occupied=" << report.occupied
     << " threshold=" << report.threshold
     << " patterns=" << report.patterns.size() << '\n';
  std::size_t width = 7;  // header column
  std::vector<std::string> rendered;
  rendered.reserve(report.patterns.size());
  for (const MinedPattern& p : report.patterns) {
    std::string joined;
    for (const Item& item : p.itemset) {
      if (!joined.empty()) joined += ' ';
      joined += item;
    }
    width = std::max(width, joined.size());
    rendered.push_back(std::move(joined));
  }
  os << "  " << std::left << std::setw(static_cast<int>(width)) << "itemset"
     << "  support  closed\n";
  for (std::size_t i = 0; i < report.patterns.size(); ++i) {
    os << "  " << std::left << std::setw(static_cast<int>(width))
       << rendered[i] << "  " << std::right << std::setw(7)
       << report.patterns[i].support << "  "
       << (report.patterns[i].closed ? "yes" : "no") << '\n';
  }
  os << "  top-k:";
  for (const Itemset& itemset : report.top_k) {
    os << " {";
    for (std::size_t i = 0; i < itemset.size(); ++i)
      os << (i ? " " : "") << itemset[i];
    os << "}";
  }
  return std::move(os).str();
}

/// Consume `in` once: push every transaction, emit one report per mine
/// trigger, flush the final window if un-mined arrivals remain. Returns
/// the process exit status (0 ok, 1 I/O failure, 2 bad configuration).
inline int run_stream(const RunConfig& config, std::istream& in,
                      std::ostream& out, std::ostream& err) {
  try {
    config.validate();
  } catch (const std::exception& e) {
    err << "fpgt: " << e.what() << '\n';
    return 2;
  }

  const MinerConfig miner_config{config.min_support, config.k};
  SlidingWindow window(WindowConfig{config.window, config.slide});
  TransactionReader reader(in);

  const auto emit = [&] {
    const WindowReport report =
        make_report(window.snapshot(), miner_config, config.include_nonclosed);
    out << render_report(report, config.output) << '\n';
  };

  while (auto txn = reader.next())
    if (window.push(*txn)) emit();

  if (reader.bad()) {
    err << "fpgt: read failure after " << reader.stats().lines_read
        << " lines\n";
    return 1;
  }
  if (window.occupied() > 0 && window.pending_arrivals() > 0) emit();

  if (reader.stats().malformed_lines > 0)
    err << "fpgt: skipped " << reader.stats().malformed_lines
        << " malformed line(s)\n";
  return 0;
}

/// Open the configured input (a path, or "-" for standard input) and run.
inline int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    config.validate();
  } catch (const std::exception& e) {
    err << "fpgt: " << e.what() << '\n';
    return 2;
  }
  if (config.input == "-") return run_stream(config, std::cin, out, err);
  std::ifstream file(config.input);
  if (!file.is_open()) {
    err << "fpgt: cannot open input: " << config.input << '\n';
    return 1;
  }
  return run_stream(config, file, out, err);
}

}  // namespace fpgt

#endif  // FPGT_PIPELINE_HPP
