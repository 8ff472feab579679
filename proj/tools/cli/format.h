// Copyright 2026 The Koopman Forge Authors. All Rights Reserved.
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

#ifndef KOOPMAN_FORGE_TOOLS_CLI_FORMAT_H_
#define KOOPMAN_FORGE_TOOLS_CLI_FORMAT_H_

#include <ostream>
#include <string>
#include <vector>

#include "koopman_forge/rat.h"

namespace koopman_forge::cli {

// 12 significant digits, round-half-even.
std::string Decimal(double value);

// "p" for integers, "p/q" otherwise; for human-readable tables.
std::string ShortRat(const Rat& r);

// Column-aligned text table. The first row is the header.
class Table {
 public:
  explicit Table(std::vector<std::string> header);
  void AddRow(std::vector<std::string> row);
  void Render(std::ostream& os) const;

 private:
  std::vector<std::vector<std::string>> rows_;
};

struct PlotPoint {
  double x;
  double y;
};

// Static SVG line chart. Throws ValidationError if the file cannot be written.
void WriteSvgPlot(const std::string& path, const std::string& title,
                  const std::string& x_label, const std::string& y_label,
                  const std::vector<PlotPoint>& points);

}  // namespace koopman_forge::cli

#endif  // KOOPMAN_FORGE_TOOLS_CLI_FORMAT_H_
