// Copyright 2026 The Littlewood Lab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LITTLEWOOD_TOOLS_LWLAB_PLOT_HPP_
#define LITTLEWOOD_TOOLS_LWLAB_PLOT_HPP_

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace lwlab {

struct PlotData {
  std::string title;
  std::string x_label;
  std::vector<double> edges;          // histogram bin edges
  std::vector<std::size_t> counts;    // histogram counts
  std::vector<double> samples;        // for the empirical CDF
  std::function<double(double)> reference_cdf;  // optional overlay
  std::string reference_label;
};

std::string histogram_csv(const PlotData& d);
// x, empirical CDF at x, and the reference CDF when one is set.
std::string cdf_csv(const PlotData& d);
// Histogram bars (density, left axis) with CDF polylines (right axis).
std::string render_svg(const PlotData& d);

// Writes <prefix>.hist.csv, <prefix>.cdf.csv and <prefix>.svg; returns the paths.
std::vector<std::string> write_plot_files(const std::string& prefix, const PlotData& d);

}  // namespace lwlab

#endif  // LITTLEWOOD_TOOLS_LWLAB_PLOT_HPP_
