// SPDX-License-Identifier: Apache-2.0
#include "lbfd/artifacts.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace lbfd {

namespace {

struct Rgb {
  int r, g, b;
};

// compact blue-white-red ramp
Rgb ramp(double t) {
  t = std::clamp(t, 0.0, 1.0);
  if (t < 0.5) {
    const double u = t * 2;
    return {int(40 + 215 * u), int(80 + 175 * u), 255};
  }
  const double u = (t - 0.5) * 2;
  return {255, int(255 - 175 * u), int(255 - 215 * u)};
}

}  // namespace

void write_heatmap_svg(const std::string& path, const std::vector<double>& values, int nx,
                       int ny, const std::string& title, const std::string& xlabel,
                       const std::string& ylabel, double x_lo, double x_hi, double y_lo,
                       double y_hi, const std::string& header) {
  if (int(values.size()) != nx * ny) throw std::runtime_error("heatmap size mismatch");
  double vmin = values[0], vmax = values[0];
  for (double v : values) {
    vmin = std::min(vmin, v);
    vmax = std::max(vmax, v);
  }
  const double span = vmax - vmin > 0 ? vmax - vmin : 1.0;
  const int cell = std::max(2, 560 / std::max(nx, ny));
  const int w = cell * nx + 140, h = cell * ny + 90;

  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open " + path);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
     << "\" font-family=\"monospace\" font-size=\"11\">\n";
  os << "<!-- " << header << " -->\n";
  os << "<text x=\"10\" y=\"16\">" << title << "</text>\n";
  char buf[160];
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      const Rgb c = ramp((values[size_t(j) * nx + i] - vmin) / span);
      // j increases upward in data: flip so the origin sits bottom-left
      std::snprintf(buf, sizeof buf,
                    "<rect x=\"%d\" y=\"%d\" width=\"%d\" height=\"%d\" fill=\"rgb(%d,%d,%d)\"/>\n",
                    60 + i * cell, 30 + (ny - 1 - j) * cell, cell, cell, c.r, c.g, c.b);
      os << buf;
    }
  std::snprintf(buf, sizeof buf, "<text x=\"10\" y=\"%d\">%s in [%.6g, %.6g]</text>\n",
                h - 40, "value", vmin, vmax);
  os << buf;
  std::snprintf(buf, sizeof buf, "<text x=\"10\" y=\"%d\">x: %s in [%.6g, %.6g]</text>\n",
                h - 26, xlabel.c_str(), x_lo, x_hi);
  os << buf;
  std::snprintf(buf, sizeof buf, "<text x=\"10\" y=\"%d\">y: %s in [%.6g, %.6g]</text>\n",
                h - 12, ylabel.c_str(), y_lo, y_hi);
  os << buf;
  os << "</svg>\n";
}

void write_loglog_svg(const std::string& path, const std::vector<double>& x,
                      const std::vector<double>& y, double guide_slope,
                      const std::string& title, const std::string& xlabel,
                      const std::string& ylabel, const std::string& header) {
  if (x.size() != y.size() || x.empty()) throw std::runtime_error("loglog series mismatch");
  const int w = 520, h = 420, ml = 70, mb = 50, mt = 40, mr = 30;
  std::vector<double> lx(x.size()), ly(y.size());
  for (size_t k = 0; k < x.size(); ++k) {
    lx[k] = std::log10(x[k]);
    ly[k] = std::log10(y[k]);
  }
  double xmin = *std::min_element(lx.begin(), lx.end());
  double xmax = *std::max_element(lx.begin(), lx.end());
  double ymin = *std::min_element(ly.begin(), ly.end());
  double ymax = *std::max_element(ly.begin(), ly.end());
  if (xmax - xmin < 1e-12) xmax = xmin + 1;
  if (ymax - ymin < 1e-12) ymax = ymin + 1;
  auto px = [&](double v) { return ml + (v - xmin) / (xmax - xmin) * (w - ml - mr); };
  auto py = [&](double v) { return h - mb - (v - ymin) / (ymax - ymin) * (h - mb - mt); };

  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open " + path);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
     << "\" font-family=\"monospace\" font-size=\"11\">\n";
  os << "<!-- " << header << " -->\n";
  os << "<text x=\"10\" y=\"16\">" << title << "</text>\n";
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "<rect x=\"%d\" y=\"%d\" width=\"%d\" height=\"%d\" fill=\"none\" stroke=\"black\"/>\n",
                ml, mt, w - ml - mr, h - mb - mt);
  os << buf;
  os << "<polyline fill=\"none\" stroke=\"crimson\" stroke-width=\"1.5\" points=\"";
  for (size_t k = 0; k < lx.size(); ++k) os << px(lx[k]) << "," << py(ly[k]) << " ";
  os << "\"/>\n";
  for (size_t k = 0; k < lx.size(); ++k) {
    std::snprintf(buf, sizeof buf, "<circle cx=\"%.1f\" cy=\"%.1f\" r=\"3\" fill=\"crimson\"/>\n",
                  px(lx[k]), py(ly[k]));
    os << buf;
  }
  // slope guide anchored to the first point
  const double gx0 = lx.front(), gy0 = ly.front();
  const double gx1 = lx.back(), gy1 = gy0 + guide_slope * (gx1 - gx0);
  std::snprintf(buf, sizeof buf,
                "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" stroke=\"gray\" "
                "stroke-dasharray=\"5,4\"/>\n",
                px(gx0), py(gy0), px(gx1), py(gy1));
  os << buf;
  std::snprintf(buf, sizeof buf, "<text x=\"%d\" y=\"%d\">log10 %s</text>\n", w / 2 - 40,
                h - 12, xlabel.c_str());
  os << buf;
  std::snprintf(buf, sizeof buf,
                "<text x=\"14\" y=\"%d\" transform=\"rotate(-90 14 %d)\">log10 %s</text>\n",
                h / 2, h / 2, ylabel.c_str());
  os << buf;
  std::snprintf(buf, sizeof buf, "<text x=\"%d\" y=\"%d\" fill=\"gray\">slope %.3g guide</text>\n",
                w - 170, mt + 14, guide_slope);
  os << buf;
  os << "</svg>\n";
}

}  // namespace lbfd
