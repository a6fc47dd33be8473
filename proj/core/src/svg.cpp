#include "rfa/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "rfa/errors.hpp"

namespace rfa::svg {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
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

}  // namespace

std::string chart(const std::string& title, const std::vector<Polyline>& lines,
                  const std::vector<Markers>& markers, int width, int height) {
  if (width < 100 || height < 100) {
    throw InvalidArgument("chart viewport must be at least 100 x 100");
  }
  double xlo = std::numeric_limits<double>::infinity(), xhi = -xlo;
  double ylo = xlo, yhi = -xlo;
  auto widen = [&](const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size()) {
      throw InvalidArgument("chart series has mismatched coordinate counts");
    }
    for (double v : xs) { xlo = std::min(xlo, v); xhi = std::max(xhi, v); }
    for (double v : ys) { ylo = std::min(ylo, v); yhi = std::max(yhi, v); }
  };
  for (const auto& l : lines) widen(l.xs, l.ys);
  for (const auto& m : markers) widen(m.xs, m.ys);
  if (!(xlo <= xhi) || !(ylo <= yhi)) {
    throw InvalidArgument("chart has no data points");
  }
  if (xhi == xlo) { xlo -= 0.5; xhi += 0.5; }
  if (yhi == ylo) { ylo -= 0.5; yhi += 0.5; }
  const double xpad = 0.05 * (xhi - xlo), ypad = 0.05 * (yhi - ylo);
  xlo -= xpad; xhi += xpad; ylo -= ypad; yhi += ypad;

  const double ml = 60, mr = 20, mt = 40, mb = 40;
  const double pw = width - ml - mr, ph = height - mt - mb;
  auto px = [&](double x) { return ml + (x - xlo) / (xhi - xlo) * pw; };
  auto py = [&](double y) { return mt + (yhi - y) / (yhi - ylo) * ph; };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         std::to_string(width) + "\" height=\"" + std::to_string(height) +
         "\" viewBox=\"0 0 " + std::to_string(width) + " " +
         std::to_string(height) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += "<text x=\"" + num(width / 2.0) +
         "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"16\">" + escape(title) + "</text>\n";

  // frame + ticks
  out += "<rect x=\"" + num(ml) + "\" y=\"" + num(mt) + "\" width=\"" +
         num(pw) + "\" height=\"" + num(ph) +
         "\" fill=\"none\" stroke=\"#999\"/>\n";
  for (int t = 0; t <= 4; ++t) {
    const double fx = xlo + t * (xhi - xlo) / 4;
    const double fy = ylo + t * (yhi - ylo) / 4;
    out += "<line x1=\"" + num(px(fx)) + "\" y1=\"" + num(mt + ph) +
           "\" x2=\"" + num(px(fx)) + "\" y2=\"" + num(mt + ph + 5) +
           "\" stroke=\"#999\"/>\n";
    out += "<text x=\"" + num(px(fx)) + "\" y=\"" + num(mt + ph + 18) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"11\">" + num(fx) + "</text>\n";
    out += "<line x1=\"" + num(ml - 5) + "\" y1=\"" + num(py(fy)) +
           "\" x2=\"" + num(ml) + "\" y2=\"" + num(py(fy)) +
           "\" stroke=\"#999\"/>\n";
    out += "<text x=\"" + num(ml - 8) + "\" y=\"" + num(py(fy) + 4) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" "
           "font-size=\"11\">" + num(fy) + "</text>\n";
  }

  for (const auto& l : lines) {
    if (l.xs.empty()) continue;
    out += "<polyline fill=\"none\" stroke=\"" + l.color + "\" stroke-width=\"" +
           num(l.width) + "\" points=\"";
    for (std::size_t i = 0; i < l.xs.size(); ++i) {
      if (i) out += ' ';
      out += num(px(l.xs[i])) + "," + num(py(l.ys[i]));
    }
    out += "\"/>\n";
  }
  for (const auto& m : markers) {
    for (std::size_t i = 0; i < m.xs.size(); ++i) {
      out += "<circle cx=\"" + num(px(m.xs[i])) + "\" cy=\"" +
             num(py(m.ys[i])) + "\" r=\"" + num(m.radius) + "\" fill=\"" +
             m.color + "\"/>\n";
    }
  }
  out += "</svg>\n";
  return out;
}

}  // namespace rfa::svg
