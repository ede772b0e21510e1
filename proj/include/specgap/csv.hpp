#pragma once

#include <fstream>
#include <string>
#include <vector>

namespace specgap {

// Shortest round-trip decimal form (17 significant digits), so identical
// inputs always produce byte-identical files.
std::string fmt_double(double v);
std::string fmt_int(long long v);

// Quote a field (used for phi labels, which may contain commas).
std::string csv_quote(const std::string& s);

class CsvWriter {
 public:
  CsvWriter(const std::string& path, const std::vector<std::string>& header);
  void row(const std::vector<std::string>& fields);
  void comment(const std::string& text);  // "# ..." line

 private:
  std::ofstream out_;
  std::size_t width_;
};

}  // namespace specgap
