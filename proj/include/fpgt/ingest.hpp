#ifndef FPGT_INGEST_HPP
#define FPGT_INGEST_HPP

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <istream>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "fpgt/window.hpp"

namespace fpgt {

struct SourceStats {
  std::size_t lines_read = 0;
  std::size_t transactions_emitted = 0;
  std::size_t malformed_lines = 0;
};

enum class LineKind { Transaction, Skip, Malformed };

struct ParsedLine {
  LineKind kind = LineKind::Skip;
  Itemset items;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

}  // namespace detail

/// Tokenize one input line. Comma-separated when the line contains a
/// comma, whitespace-separated otherwise; tokens are item identifiers.
/// Blank lines and lines whose first non-blank character is '#' are
/// skipped; a non-blank line yielding no tokens (separators only) is
/// malformed. Duplicate items are dropped.
inline ParsedLine parse_line(std::string_view line) {
  const std::string_view body = detail::trim(line);
  if (body.empty() || body.front() == '#') return {LineKind::Skip, {}};

  Itemset items;
  if (body.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= body.size()) {
      const std::size_t end = std::min(body.find(',', start), body.size());
      const std::string_view token = detail::trim(body.substr(start, end - start));
      if (!token.empty()) items.emplace_back(token);
      start = end + 1;
    }
  } else {
    std::size_t i = 0;
    while (i < body.size()) {
      while (i < body.size() &&
             std::isspace(static_cast<unsigned char>(body[i])))
        ++i;
      std::size_t j = i;
      while (j < body.size() &&
             !std::isspace(static_cast<unsigned char>(body[j])))
        ++j;
      if (j > i) items.emplace_back(body.substr(i, j - i));
      i = j;
    }
  }
  if (items.empty()) return {LineKind::Malformed, {}};

  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
  return {LineKind::Transaction, std::move(items)};
}

/// Pulls transactions off a text stream, one line each, assigning
/// sequence numbers 1, 2, 3, ... Every line is consumed exactly once;
/// malformed lines are counted and skipped, never fatal.
class TransactionReader {
 public:
  explicit TransactionReader(std::istream& in) : in_(&in) {}

  /// Open a file for reading, or standard input for "-".
  static TransactionReader open(const std::string& path_or_dash) {
    if (path_or_dash == "-") return TransactionReader(std::cin);
    auto file = std::make_unique<std::ifstream>(path_or_dash);
    if (!file->is_open())
      throw std::runtime_error("cannot open input: " + path_or_dash);
    TransactionReader reader(*file);
    reader.owned_ = std::move(file);
    return reader;
  }

  std::optional<Transaction> next() {
    std::string line;
    while (std::getline(*in_, line)) {
      ++stats_.lines_read;
      ParsedLine parsed = parse_line(line);
      if (parsed.kind == LineKind::Skip) continue;
      if (parsed.kind == LineKind::Malformed) {
        ++stats_.malformed_lines;
        continue;
      }
      ++stats_.transactions_emitted;
      return Transaction(next_seq_++, std::move(parsed.items));
    }
    return std::nullopt;
  }

  const SourceStats& stats() const noexcept { return stats_; }

  /// True after a hard read failure (as opposed to plain end-of-file).
  bool bad() const noexcept { return in_->bad(); }

 private:
  std::unique_ptr<std::ifstream> owned_;
  std::istream* in_;
  SourceStats stats_;
  std::uint64_t next_seq_ = 1;
};

}  // namespace fpgt

#endif  // FPGT_INGEST_HPP
