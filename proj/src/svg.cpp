#include "specgap/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include "specgap/errors.hpp"

namespace specgap {

namespace {

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

std::string num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Axis {
  double lo = 0.0, hi = 1.0;
  bool log = false;
  double map(double v, double pix_lo, double pix_hi) const {
    double t = log ? (std::log10(v) - std::log10(lo)) / (std::log10(hi) - std::log10(lo))
                   : (v - lo) / (hi - lo);
    return pix_lo + t * (pix_hi - pix_lo);
  }
  std::vector<double> ticks() const {
    std::vector<double> out;
    if (log) {
      const int e0 = int(std::floor(std::log10(lo)));
      const int e1 = int(std::ceil(std::log10(hi)));
      for (int e = e0; e <= e1; ++e) {
        const double v = std::pow(10.0, e);
        if (v >= lo * 0.999 && v <= hi * 1.001) out.push_back(v);
      }
      if (out.size() >= 2) return out;
    }
    const double span = hi - lo;
    const double raw = span / 5.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double step = mag;
    for (double mult : {1.0, 2.0, 2.5, 5.0, 10.0})
      if (mag * mult >= raw) {
        step = mag * mult;
        break;
      }
    out.clear();
    for (double v = std::ceil(lo / step) * step; v <= hi + 1e-9 * span; v += step)
      out.push_back(v);
    return out;
  }
};

}  // namespace

void write_line_plot(const std::string& path, const std::vector<PlotSeries>& series,
                     const PlotOptions& opts) {
  std::ofstream out(path);
  if (!out) throw NumericalError("write_line_plot: cannot open " + path);

  Axis xa, ya;
  xa.log = opts.logx;
  ya.log = opts.logy;
  double xlo = std::numeric_limits<double>::infinity(), xhi = -xlo;
  double ylo = xlo, yhi = -xlo;
  for (const auto& s : series)
    for (const auto& [x, y] : s.points) {
      if ((opts.logx && x <= 0.0) || (opts.logy && y <= 0.0)) continue;
      xlo = std::min(xlo, x);
      xhi = std::max(xhi, x);
      ylo = std::min(ylo, y);
      yhi = std::max(yhi, y);
    }
  if (!(xlo <= xhi)) {
    xlo = 0.0;
    xhi = 1.0;
    ylo = 0.0;
    yhi = 1.0;
  }
  if (xlo == xhi) {
    xlo -= 0.5;
    xhi += 0.5;
  }
  if (ylo == yhi) {
    ylo -= 0.5;
    yhi += 0.5;
  }
  if (!opts.logx) {
    const double pad = 0.04 * (xhi - xlo);
    xlo -= pad;
    xhi += pad;
  }
  if (!opts.logy) {
    const double pad = 0.06 * (yhi - ylo);
    ylo -= pad;
    yhi += pad;
  }
  xa.lo = xlo;
  xa.hi = xhi;
  ya.lo = ylo;
  ya.hi = yhi;

  const double W = opts.width, H = opts.height;
  const double L = 70, R = W - 24, T = 44, B = H - 52;

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
      << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
  out << "<rect width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n";
  out << "<text x=\"" << W / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\""
      << " font-size=\"15\">" << escape(opts.title) << "</text>\n";

  // frame and ticks
  out << "<rect x=\"" << L << "\" y=\"" << T << "\" width=\"" << R - L << "\" height=\""
      << B - T << "\" fill=\"none\" stroke=\"#333\"/>\n";
  for (double v : xa.ticks()) {
    const double px = xa.map(v, L, R);
    if (px < L - 0.5 || px > R + 0.5) continue;
    out << "<line x1=\"" << num(px) << "\" y1=\"" << B << "\" x2=\"" << num(px) << "\" y2=\""
        << B + 5 << "\" stroke=\"#333\"/>\n";
    out << "<text x=\"" << num(px) << "\" y=\"" << B + 19
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" << num(v)
        << "</text>\n";
  }
  for (double v : ya.ticks()) {
    const double py = B - (ya.map(v, 0, B - T));
    if (py < T - 0.5 || py > B + 0.5) continue;
    out << "<line x1=\"" << L - 5 << "\" y1=\"" << num(py) << "\" x2=\"" << L << "\" y2=\""
        << num(py) << "\" stroke=\"#333\"/>\n";
    out << "<text x=\"" << L - 8 << "\" y=\"" << num(py + 4)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << num(v)
        << "</text>\n";
  }
  out << "<text x=\"" << (L + R) / 2 << "\" y=\"" << H - 14
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
      << escape(opts.xlabel) << "</text>\n";
  out << "<text x=\"18\" y=\"" << (T + B) / 2
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\""
      << " transform=\"rotate(-90 18 " << (T + B) / 2 << ")\">" << escape(opts.ylabel)
      << "</text>\n";

  int ci = 0;
  for (const auto& s : series) {
    const char* color = kPalette[ci % 8];
    std::string pts;
    for (const auto& [x, y] : s.points) {
      if ((opts.logx && x <= 0.0) || (opts.logy && y <= 0.0)) continue;
      const double px = xa.map(x, L, R);
      const double py = B - ya.map(y, 0, B - T);
      pts += num(px);
      pts += ",";
      pts += num(py);
      pts += " ";
      if (s.markers)
        out << "<circle cx=\"" << num(px) << "\" cy=\"" << num(py) << "\" r=\"2.5\" fill=\""
            << color << "\"/>\n";
    }
    out << "<polyline points=\"" << pts << "\" fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"1.6\"/>\n";
    out << "<text x=\"" << R - 10 << "\" y=\"" << T + 18 + 16 * ci
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\" fill=\"" << color
        << "\">" << escape(s.name) << "</text>\n";
    ++ci;
  }
  out << "</svg>\n";
}

}  // namespace specgap
