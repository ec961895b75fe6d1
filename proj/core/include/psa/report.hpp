#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace psa {

/// Shortest decimal representation that round-trips to the same double.
/// Locale-independent, byte-deterministic.
std::string format_double(double value);

enum class OutputFormat { kv, csv };

/// Flat key-value document, one "key = value" line per entry.
class KvWriter {
 public:
  explicit KvWriter(std::ostream& out) : out_(out) {}

  void add(std::string_view key, double value);
  void add(std::string_view key, std::string_view value);
  /// Emits the value in radians and a derived _deg key.
  void add_angle(std::string_view key_rad, double radians);
  /// Emits the linear value and a derived _db key.
  void add_linear_db(std::string_view key, double linear);

 private:
  std::ostream& out_;
};

/// CSV with a fixed header; one row per call, deterministic order.
class CsvWriter {
 public:
  CsvWriter(std::ostream& out, const std::vector<std::string>& header);

  void row(const std::vector<double>& cells);
  void raw_row(const std::vector<std::string>& cells);

 private:
  std::ostream& out_;
  std::size_t columns_;
};

}  // namespace psa
