// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

namespace lbfd {

/// Simple self-contained SVG heat map; values row-major, ny rows of nx.
void write_heatmap_svg(const std::string& path, const std::vector<double>& values, int nx,
                       int ny, const std::string& title, const std::string& xlabel,
                       const std::string& ylabel, double x_lo, double x_hi, double y_lo,
                       double y_hi, const std::string& header);

/// log-log polyline plot (one series) with a reference slope guide.
void write_loglog_svg(const std::string& path, const std::vector<double>& x,
                      const std::vector<double>& y, double guide_slope,
                      const std::string& title, const std::string& xlabel,
                      const std::string& ylabel, const std::string& header);

}  // namespace lbfd
