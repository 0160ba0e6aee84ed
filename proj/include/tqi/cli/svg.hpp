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

#pragma once

#include <string>
#include <vector>

namespace tqi::cli {

struct PlotLabels {
  std::string title;
  std::string x_label;
  std::string y_label;
};

/// Standalone SVG document with one polyline, a frame and numbered ticks.
/// Labels are XML-escaped. Throws std::invalid_argument on mismatched or
/// empty series.
std::string render_line_plot(const std::vector<double>& x, const std::vector<double>& y,
                             const PlotLabels& labels);

}  // namespace tqi::cli
