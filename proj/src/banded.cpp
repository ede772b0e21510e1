#include "specgap/banded.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <string>

#include "specgap/errors.hpp"

namespace specgap {

SymmetricBandedMatrix SymmetricBandedMatrix::zero(int order, int bandwidth) {
  if (order < 1) throw DomainError("SymmetricBandedMatrix: order must be >= 1");
  if (bandwidth < 0 || bandwidth >= order)
    throw DomainError("SymmetricBandedMatrix: bandwidth must be in [0, order)");
  SymmetricBandedMatrix m;
  m.order = order;
  m.bandwidth = bandwidth;
  m.store.assign(std::size_t(order) * (bandwidth + 1), 0.0);
  return m;
}

namespace {

inline void check_pair(const SymmetricBandedMatrix& m, int i, int j, const char* who) {
  if (i < 0 || i >= m.order || j < 0 || j >= m.order)
    throw DomainError(std::string(who) + ": index out of range");
}

inline std::size_t slot(const SymmetricBandedMatrix& m, int i, int j) {
  // caller ensures i >= j and i-j <= bandwidth
  return std::size_t(i) * (m.bandwidth + 1) + std::size_t(i - j);
}

}  // namespace

double SymmetricBandedMatrix::at(int i, int j) const {
  check_pair(*this, i, j, "at");
  if (i < j) std::swap(i, j);
  if (i - j > bandwidth) return 0.0;
  return store[slot(*this, i, j)];
}

void SymmetricBandedMatrix::add(int i, int j, double v) {
  check_pair(*this, i, j, "add");
  if (i < j) std::swap(i, j);
  if (i - j > bandwidth) throw DomainError("add: entry outside the band");
  store[slot(*this, i, j)] += v;
}

void SymmetricBandedMatrix::set(int i, int j, double v) {
  check_pair(*this, i, j, "set");
  if (i < j) std::swap(i, j);
  if (i - j > bandwidth) throw DomainError("set: entry outside the band");
  store[slot(*this, i, j)] = v;
}

void SymmetricBandedMatrix::write_symband(std::ostream& out) const {
  out << "symband " << order << " " << bandwidth << "\n";
  char buf[64];
  for (int i = 0; i < order; ++i) {
    for (int j = std::max(0, i - bandwidth); j <= i; ++j) {
      std::snprintf(buf, sizeof buf, "%d %d %.17g\n", i + 1, j + 1,
                    store[slot(*this, i, j)]);
      out << buf;
    }
  }
}

SymmetricBandedMatrix SymmetricBandedMatrix::read_symband(std::istream& in) {
  std::string tag;
  int order = 0, bandwidth = -1;
  if (!(in >> tag >> order >> bandwidth) || tag != "symband")
    throw ParseError("read_symband: bad header");
  SymmetricBandedMatrix m = zero(order, bandwidth);
  int i = 0, j = 0;
  double v = 0.0;
  while (in >> i >> j >> v) m.set(i - 1, j - 1, v);
  return m;
}

}  // namespace specgap
