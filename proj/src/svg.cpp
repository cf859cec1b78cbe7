#include "hypants/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hypants {

namespace {

constexpr double kPixelsPerUnit = 100.0;

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s(buf);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

}  // namespace

std::string render_svg(const std::vector<Horoball>& balls, const CuspLattice& lattice) {
  if (balls.empty()) throw std::invalid_argument("render_svg: no horoballs to draw");

  const Complex corners[4] = {0.0, lattice.t1(), lattice.t1() + lattice.t2(), lattice.t2()};
  double x_lo = 0.0, x_hi = 0.0, y_lo = 0.0, y_hi = 0.0;
  auto grow = [&](double x0, double x1, double y0, double y1) {
    x_lo = std::min(x_lo, x0);
    x_hi = std::max(x_hi, x1);
    y_lo = std::min(y_lo, y0);
    y_hi = std::max(y_hi, y1);
  };
  for (const auto& c : corners) grow(c.real(), c.real(), c.imag(), c.imag());
  for (const auto& b : balls) {
    if (b.at_infinity()) continue;
    const Complex z = b.center().value();
    const double r = b.size() / 2.0;
    grow(z.real() - r, z.real() + r, z.imag() - r, z.imag() + r);
  }
  const double margin = 0.05 * std::max(x_hi - x_lo, y_hi - y_lo);
  x_lo -= margin;
  x_hi += margin;
  y_lo -= margin;
  y_hi += margin;

  // SVG y grows downward; flip so Im z points up.
  auto px = [](double x) { return num(kPixelsPerUnit * x); };
  auto py = [](double y) { return num(-kPixelsPerUnit * y); };
  const double width = kPixelsPerUnit * (x_hi - x_lo);
  const double height = kPixelsPerUnit * (y_hi - y_lo);

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\""
      << num(height) << "\" viewBox=\"" << px(x_lo) << " " << py(y_hi) << " " << num(width) << " "
      << num(height) << "\">\n";
  out << "  <g id=\"lattice\">\n";
  out << "    <polygon id=\"fundamental-domain\" points=\"";
  for (int i = 0; i < 4; ++i) {
    out << (i ? " " : "") << px(corners[i].real()) << "," << py(corners[i].imag());
  }
  out << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
  out << "  </g>\n";

  int plane = 0;
  for (const auto& b : balls) {
    if (!b.at_infinity()) continue;
    if (plane == 0) out << "  <g id=\"legend\">\n";
    out << "    <text id=\"plane-" << plane << "\" x=\"" << px(x_lo + margin / 2) << "\" y=\""
        << py(y_hi - margin / 2 - 0.1 * plane) << "\" font-size=\"10\">H_inf: boundary plane at height "
        << num(b.size()) << "</text>\n";
    ++plane;
  }
  if (plane > 0) out << "  </g>\n";

  out << "  <g id=\"horoballs\" fill=\"none\" stroke=\"steelblue\" stroke-width=\"1\">\n";
  int index = 0;
  for (const auto& b : balls) {
    if (b.at_infinity()) continue;
    const Complex z = b.center().value();
    out << "    <circle id=\"ball-" << index << "\" cx=\"" << px(z.real()) << "\" cy=\""
        << py(z.imag()) << "\" r=\"" << num(kPixelsPerUnit * b.size() / 2.0) << "\"/>\n";
    ++index;
  }
  out << "  </g>\n";
  out << "</svg>\n";
  return out.str();
}

void render_diagram(const std::vector<Horoball>& balls, const CuspLattice& lattice,
                    const std::filesystem::path& path) {
  const std::string svg = render_svg(balls, lattice);
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("render_diagram: cannot write " + path.string());
  file << svg;
  if (!file) throw std::runtime_error("render_diagram: write failed for " + path.string());
}

}  // namespace hypants
