// Copyright 2026 The tqi Authors
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

#include "tqi/cli/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace tqi::cli {

namespace {

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string fmt(double v, const char* spec = "%.2f") {
  char buf[32];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

// Round step for about `target` ticks over a span.
double tick_step(double span, int target) {
  const double raw = span / target;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  for (double m : {1.0, 2.0, 5.0, 10.0})
    if (m * mag >= raw) return m * mag;
  return 10.0 * mag;
}

}  // namespace

std::string render_line_plot(const std::vector<double>& x, const std::vector<double>& y,
                             const PlotLabels& labels) {
  if (x.empty() || x.size() != y.size())
    throw std::invalid_argument("render_line_plot: series must be non-empty and of equal length");

  constexpr double W = 640, H = 440, left = 70, right = 20, top = 40, bottom = 60;
  const double pw = W - left - right, ph = H - top - bottom;
  const auto [xmin_it, xmax_it] = std::minmax_element(x.begin(), x.end());
  const auto [ymin_it, ymax_it] = std::minmax_element(y.begin(), y.end());
  double x0 = *xmin_it, x1 = *xmax_it, y0 = *ymin_it, y1 = *ymax_it;
  if (x1 == x0) x1 = x0 + 1.0;
  const double ypad = std::max(0.05 * (y1 - y0), 1e-3);
  y0 -= ypad;
  y1 += ypad;

  auto sx = [&](double v) { return left + (v - x0) / (x1 - x0) * pw; };
  auto sy = [&](double v) { return top + (y1 - v) / (y1 - y0) * ph; };

  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(W, "%.0f") + "\" height=\"" +
       fmt(H, "%.0f") + "\" viewBox=\"0 0 " + fmt(W, "%.0f") + " " + fmt(H, "%.0f") + "\">\n";
  s += "<rect x=\"0\" y=\"0\" width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  s += "<text x=\"" + fmt(W / 2) + "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
       "font-size=\"16\">" + escape(labels.title) + "</text>\n";
  s += "<rect x=\"" + fmt(left) + "\" y=\"" + fmt(top) + "\" width=\"" + fmt(pw) + "\" height=\"" +
       fmt(ph) + "\" fill=\"none\" stroke=\"black\"/>\n";

  const double xs = tick_step(x1 - x0, 6);
  for (double t = std::ceil(x0 / xs) * xs; t <= x1 + 1e-12; t += xs) {
    const double px = sx(t);
    s += "<line x1=\"" + fmt(px) + "\" y1=\"" + fmt(top + ph) + "\" x2=\"" + fmt(px) + "\" y2=\"" +
         fmt(top + ph + 5) + "\" stroke=\"black\"/>\n";
    s += "<text x=\"" + fmt(px) + "\" y=\"" + fmt(top + ph + 20) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" +
         fmt(t, "%.3g") + "</text>\n";
  }
  const double ys = tick_step(y1 - y0, 6);
  for (double t = std::ceil(y0 / ys) * ys; t <= y1 + 1e-12; t += ys) {
    const double py = sy(t);
    s += "<line x1=\"" + fmt(left - 5) + "\" y1=\"" + fmt(py) + "\" x2=\"" + fmt(left) + "\" y2=\"" +
         fmt(py) + "\" stroke=\"black\"/>\n";
    s += "<text x=\"" + fmt(left - 8) + "\" y=\"" + fmt(py + 4) +
         "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">" + fmt(t, "%.3g") +
         "</text>\n";
  }

  s += "<polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"2\" points=\"";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) s += ' ';
    s += fmt(sx(x[i])) + "," + fmt(sy(y[i]));
  }
  s += "\"/>\n";
  s += "<text x=\"" + fmt(left + pw / 2) + "\" y=\"" + fmt(H - 15) +
       "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">" +
       escape(labels.x_label) + "</text>\n";
  s += "<text x=\"18\" y=\"" + fmt(top + ph / 2) + "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
       "font-size=\"14\" transform=\"rotate(-90 18 " + fmt(top + ph / 2) + ")\">" +
       escape(labels.y_label) + "</text>\n";
  s += "</svg>\n";
  return s;
}

}  // namespace tqi::cli
