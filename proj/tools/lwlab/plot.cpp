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

#include "plot.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "format.hpp"

namespace lwlab {
namespace {

constexpr double kWidth = 720, kHeight = 440;
constexpr double kLeft = 70, kRight = 70, kTop = 40, kBottom = 60;

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string fixed(double x, int digits = 2) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(digits);
  s << x;
  return s.str();
}

std::string tick_label(double x) {
  std::ostringstream s;
  s.precision(3);
  s << x;
  return s.str();
}

}  // namespace

std::string histogram_csv(const PlotData& d) {
  std::string out = "bin_lo,bin_hi,count,density\n";
  std::size_t total = 0;
  for (auto c : d.counts) total += c;
  for (std::size_t i = 0; i < d.counts.size(); ++i) {
    const double w = d.edges[i + 1] - d.edges[i];
    const double density = total && w > 0 ? double(d.counts[i]) / (double(total) * w) : 0.0;
    out += format_double(d.edges[i]) + ',' + format_double(d.edges[i + 1]) + ',' + std::to_string(d.counts[i]) +
           ',' + format_double(density) + '\n';
  }
  return out;
}

std::string cdf_csv(const PlotData& d) {
  std::vector<double> s(d.samples);
  std::sort(s.begin(), s.end());
  std::string out = d.reference_cdf ? "x,empirical,reference\n" : "x,empirical\n";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i + 1 < s.size() && s[i + 1] == s[i]) continue;
    out += format_double(s[i]) + ',' + format_double(double(i + 1) / double(s.size()));
    if (d.reference_cdf) out += ',' + format_double(d.reference_cdf(s[i]));
    out += '\n';
  }
  return out;
}

std::string render_svg(const PlotData& d) {
  std::vector<double> s(d.samples);
  std::sort(s.begin(), s.end());
  double lo = d.edges.empty() ? 0.0 : d.edges.front();
  double hi = d.edges.empty() ? 1.0 : d.edges.back();
  if (!s.empty()) {
    lo = std::min(lo, s.front());
    hi = std::max(hi, s.back());
  }
  if (!(hi > lo)) hi = lo + 1.0;
  std::size_t total = 0;
  for (auto c : d.counts) total += c;
  double max_density = 0.0;
  std::vector<double> density(d.counts.size(), 0.0);
  for (std::size_t i = 0; i < d.counts.size(); ++i) {
    const double w = d.edges[i + 1] - d.edges[i];
    density[i] = total && w > 0 ? double(d.counts[i]) / (double(total) * w) : 0.0;
    max_density = std::max(max_density, density[i]);
  }
  if (max_density <= 0.0) max_density = 1.0;

  const double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - lo) / (hi - lo) * pw; };
  auto py_density = [&](double y) { return kTop + ph - y / max_density * ph; };
  auto py_prob = [&](double p) { return kTop + ph - p * ph; };

  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
    << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  o << "<text x=\"" << kWidth / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">" << escape(d.title)
    << "</text>\n";

  for (std::size_t i = 0; i < d.counts.size(); ++i) {
    const double x0 = px(d.edges[i]), x1 = px(d.edges[i + 1]), y = py_density(density[i]);
    o << "<rect x=\"" << fixed(x0) << "\" y=\"" << fixed(y) << "\" width=\"" << fixed(std::max(0.0, x1 - x0))
      << "\" height=\"" << fixed(kTop + ph - y) << "\" fill=\"#9ecae1\" stroke=\"#3182bd\" stroke-width=\"0.5\"/>\n";
  }

  if (!s.empty()) {
    o << "<polyline fill=\"none\" stroke=\"#d62728\" stroke-width=\"1.5\" points=\"";
    o << fixed(px(lo)) << ',' << fixed(py_prob(0.0));
    const std::size_t step = std::max<std::size_t>(1, s.size() / 2000);
    for (std::size_t i = 0; i < s.size(); i += step) {
      const double p = double(i + 1) / double(s.size());
      o << ' ' << fixed(px(s[i])) << ',' << fixed(py_prob(double(i) / double(s.size()))) << ' ' << fixed(px(s[i]))
        << ',' << fixed(py_prob(p));
    }
    o << ' ' << fixed(px(hi)) << ',' << fixed(py_prob(1.0)) << "\"/>\n";
  }
  if (d.reference_cdf) {
    o << "<polyline fill=\"none\" stroke=\"#2ca02c\" stroke-width=\"1.5\" stroke-dasharray=\"5,3\" points=\"";
    for (int i = 0; i <= 400; ++i) {
      const double x = lo + (hi - lo) * i / 400.0;
      o << (i ? " " : "") << fixed(px(x)) << ',' << fixed(py_prob(std::clamp(d.reference_cdf(x), 0.0, 1.0)));
    }
    o << "\"/>\n";
  }

  // Axes and ticks.
  o << "<line x1=\"" << kLeft << "\" y1=\"" << kTop + ph << "\" x2=\"" << kLeft + pw << "\" y2=\"" << kTop + ph
    << "\" stroke=\"black\"/>\n";
  o << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\"" << kTop + ph
    << "\" stroke=\"black\"/>\n";
  o << "<line x1=\"" << kLeft + pw << "\" y1=\"" << kTop << "\" x2=\"" << kLeft + pw << "\" y2=\"" << kTop + ph
    << "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 5; ++i) {
    const double x = lo + (hi - lo) * i / 5.0, X = px(x);
    o << "<line x1=\"" << fixed(X) << "\" y1=\"" << kTop + ph << "\" x2=\"" << fixed(X) << "\" y2=\"" << kTop + ph + 5
      << "\" stroke=\"black\"/>\n";
    o << "<text x=\"" << fixed(X) << "\" y=\"" << kTop + ph + 18 << "\" text-anchor=\"middle\">" << tick_label(x)
      << "</text>\n";
    const double yd = max_density * i / 5.0, Y = py_density(yd);
    o << "<text x=\"" << kLeft - 6 << "\" y=\"" << fixed(Y + 4) << "\" text-anchor=\"end\">" << tick_label(yd)
      << "</text>\n";
    o << "<text x=\"" << kLeft + pw + 6 << "\" y=\"" << fixed(py_prob(i / 5.0) + 4) << "\">" << tick_label(i / 5.0)
      << "</text>\n";
  }
  o << "<text x=\"" << kLeft + pw / 2 << "\" y=\"" << kHeight - 15 << "\" text-anchor=\"middle\">"
    << escape(d.x_label) << "</text>\n";
  o << "<text transform=\"translate(18," << kTop + ph / 2 << ") rotate(-90)\" text-anchor=\"middle\">density</text>\n";
  o << "<text transform=\"translate(" << kWidth - 14 << ',' << kTop + ph / 2
    << ") rotate(90)\" text-anchor=\"middle\">CDF</text>\n";

  // Legend.
  double ly = kTop + 8;
  o << "<rect x=\"" << kLeft + 10 << "\" y=\"" << ly << "\" width=\"12\" height=\"8\" fill=\"#9ecae1\"/>"
    << "<text x=\"" << kLeft + 28 << "\" y=\"" << ly + 8 << "\">histogram</text>\n";
  ly += 14;
  o << "<line x1=\"" << kLeft + 10 << "\" y1=\"" << ly + 4 << "\" x2=\"" << kLeft + 22 << "\" y2=\"" << ly + 4
    << "\" stroke=\"#d62728\" stroke-width=\"1.5\"/><text x=\"" << kLeft + 28 << "\" y=\"" << ly + 8
    << "\">empirical CDF</text>\n";
  if (d.reference_cdf) {
    ly += 14;
    o << "<line x1=\"" << kLeft + 10 << "\" y1=\"" << ly + 4 << "\" x2=\"" << kLeft + 22 << "\" y2=\"" << ly + 4
      << "\" stroke=\"#2ca02c\" stroke-width=\"1.5\" stroke-dasharray=\"5,3\"/><text x=\"" << kLeft + 28
      << "\" y=\"" << ly + 8 << "\">" << escape(d.reference_label) << "</text>\n";
  }
  o << "</svg>\n";
  return o.str();
}

std::vector<std::string> write_plot_files(const std::string& prefix, const PlotData& d) {
  const std::vector<std::pair<std::string, std::string>> files = {
      {prefix + ".hist.csv", histogram_csv(d)}, {prefix + ".cdf.csv", cdf_csv(d)}, {prefix + ".svg", render_svg(d)}};
  std::vector<std::string> paths;
  for (const auto& [path, body] : files) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write '" + path + "'");
    f << body;
    paths.push_back(path);
  }
  return paths;
}

}  // namespace lwlab
