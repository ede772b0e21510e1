#include "specgap/csv.hpp"

#include <cstdio>

#include "specgap/errors.hpp"

namespace specgap {

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_int(long long v) { return std::to_string(v); }

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

CsvWriter::CsvWriter(const std::string& path, const std::vector<std::string>& header)
    : out_(path), width_(header.size()) {
  if (!out_) throw NumericalError("CsvWriter: cannot open " + path);
  out_ << "# schema=1\n";
  for (std::size_t i = 0; i < header.size(); ++i)
    out_ << header[i] << (i + 1 < header.size() ? "," : "\n");
}

void CsvWriter::row(const std::vector<std::string>& fields) {
  if (fields.size() != width_)
    throw DomainError("CsvWriter: row width " + std::to_string(fields.size()) +
                      " != header width " + std::to_string(width_));
  for (std::size_t i = 0; i < fields.size(); ++i)
    out_ << fields[i] << (i + 1 < fields.size() ? "," : "\n");
}

void CsvWriter::comment(const std::string& text) { out_ << "# " << text << "\n"; }

}  // namespace specgap
