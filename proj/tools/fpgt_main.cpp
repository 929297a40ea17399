// fpgt: mine closed frequent itemsets and top-k patterns from a
// transaction stream in a single scan, one report per window slide.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "fpgt/pipeline.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "Single-scan closed frequent itemset miner over a sliding window.\n"
      "Reads one transaction per line (items comma- or space-separated,\n"
      "'#' comments ignored) and emits one report per mining pass."};

  long long window = 0;
  long long slide = 1;
  long long k = 10;
  std::string min_support = "0.2";
  std::string output = "json";
  bool include_nonclosed = false;
  std::string input = "-";

  app.add_option("--window", window, "Window capacity in transactions")
      ->required();
  app.add_option("--slide", slide,
                 "Arrivals between mining passes once the window is full");
  app.add_option("--min-support", min_support,
                 "Support threshold: fraction of the window (e.g. 0.2) or "
                 "absolute count (e.g. 3)");
  app.add_option("--top-k", k, "Number of top patterns listed per report");
  app.add_option("--output", output, "Report format: json or text")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--include-nonclosed", include_nonclosed,
               "Report non-closed frequent patterns as well");
  app.add_option("input", input, "Input path, or '-' for standard input");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  fpgt::RunConfig config;
  config.input = input;
  config.output =
      output == "text" ? fpgt::OutputMode::Text : fpgt::OutputMode::Json;
  config.include_nonclosed = include_nonclosed;
  if (window < 0 || slide < 0 || k < 0) {
    std::cerr << "fpgt: counts must be non-negative\n";
    return 2;
  }
  config.window = static_cast<std::size_t>(window);
  config.slide = static_cast<std::size_t>(slide);
  config.k = static_cast<std::size_t>(k);
  try {
    config.min_support = fpgt::SupportSpec::parse(min_support);
  } catch (const std::exception& e) {
    std::cerr << "fpgt: " << e.what() << '\n';
    return 2;
  }

  return fpgt::run(config, std::cout, std::cerr);
}
