#pragma once

#include <iosfwd>
#include <vector>

namespace specgap {

// Symmetric matrix with entries vanishing beyond a fixed bandwidth. Only the
// lower band is stored: row i keeps A(i, i-d) for d = 0..bandwidth, 0-based.
struct SymmetricBandedMatrix {
  int order = 0;
  int bandwidth = 0;
  std::vector<double> store;  // (bandwidth+1) slots per row

  static SymmetricBandedMatrix zero(int order, int bandwidth);

  double at(int i, int j) const;       // any pair; zero outside the band
  void add(int i, int j, double v);    // accumulate, |i-j| must be <= bandwidth
  void set(int i, int j, double v);

  // Plain-text serialization: "symband <order> <bandwidth>" then one line per
  // stored lower-band entry "i j value" (1-based, full round-trip precision).
  void write_symband(std::ostream& out) const;
  static SymmetricBandedMatrix read_symband(std::istream& in);
};

}  // namespace specgap
