// Copyright 2026 The listrank Authors.
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

#ifndef LISTRANK_TOOLS_SVG_HPP_
#define LISTRANK_TOOLS_SVG_HPP_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace listrank::cli {

struct Series {
  std::string name;
  std::vector<std::optional<double>> values;
};

// Self-contained SVG line chart; missing values break the polyline.
std::string line_chart_svg(std::string_view title, std::span<const double> x,
                           std::span<const Series> series);

}  // namespace listrank::cli

#endif  // LISTRANK_TOOLS_SVG_HPP_
