#include "psa/report.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace psa {

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

void KvWriter::add(std::string_view key, double value) {
  out_ << key << " = " << format_double(value) << '\n';
}

void KvWriter::add(std::string_view key, std::string_view value) {
  out_ << key << " = " << value << '\n';
}

void KvWriter::add_angle(std::string_view key_rad, double radians) {
  add(key_rad, radians);
  std::string deg_key(key_rad);
  const auto pos = deg_key.rfind("_rad");
  if (pos != std::string::npos && pos == deg_key.size() - 4) {
    deg_key.replace(pos, 4, "_deg");
  } else {
    deg_key += "_deg";
  }
  add(deg_key, radians * 180.0 / std::numbers::pi);
}

void KvWriter::add_linear_db(std::string_view key, double linear) {
  add(key, linear);
  add(std::string(key) + "_db", 10.0 * std::log10(linear));
}

CsvWriter::CsvWriter(std::ostream& out, const std::vector<std::string>& header)
    : out_(out), columns_(header.size()) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) out_ << ',';
    out_ << header[i];
  }
  out_ << '\n';
}

void CsvWriter::row(const std::vector<double>& cells) {
  std::vector<std::string> formatted;
  formatted.reserve(cells.size());
  for (double c : cells) formatted.push_back(format_double(c));
  raw_row(formatted);
}

void CsvWriter::raw_row(const std::vector<std::string>& cells) {
  if (cells.size() != columns_) throw std::logic_error("csv row width mismatch");
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out_ << ',';
    out_ << cells[i];
  }
  out_ << '\n';
}

}  // namespace psa
