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

#include "cli/format.h"

#include <algorithm>
#include <cstdio>
#include <fstream>

#include "koopman_forge/errors.h"

namespace koopman_forge::cli {

std::string Decimal(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

std::string ShortRat(const Rat& r) {
  return r.is_integer() ? r.numerator().get_str() : r.ToString();
}

Table::Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }

void Table::AddRow(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

void Table::Render(std::ostream& os) const {
  std::vector<std::size_t> widths;
  for (const auto& row : rows_) {
    widths.resize(std::max(widths.size(), row.size()));
    for (std::size_t c = 0; c < row.size(); ++c) {
      widths[c] = std::max(widths[c], row[c].size());
    }
  }
  for (const auto& row : rows_) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) line += "  ";
      line += std::string(widths[c] - row[c].size(), ' ') + row[c];
    }
    os << line << '\n';
  }
}

void WriteSvgPlot(const std::string& path, const std::string& title,
                  const std::string& x_label, const std::string& y_label,
                  const std::vector<PlotPoint>& points) {
  constexpr double kWidth = 640, kHeight = 400, kMargin = 60;
  double x_min = 0, x_max = 1, y_max = 0;
  if (!points.empty()) {
    x_min = points.front().x;
    x_max = points.front().x;
  }
  for (const PlotPoint& p : points) {
    x_min = std::min(x_min, p.x);
    x_max = std::max(x_max, p.x);
    y_max = std::max(y_max, p.y);
  }
  if (x_max == x_min) x_max = x_min + 1;
  if (y_max <= 0) y_max = 1;
  auto sx = [&](double x) {
    return kMargin + (x - x_min) / (x_max - x_min) * (kWidth - 2 * kMargin);
  };
  auto sy = [&](double y) { return kHeight - kMargin - y / y_max * (kHeight - 2 * kMargin); };

  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write plot file '" + path + "'");
  char buf[256];
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << kWidth / 2 << "\" y=\"30\" text-anchor=\"middle\" "
      << "font-family=\"sans-serif\" font-size=\"16\">" << title << "</text>\n";
  std::snprintf(buf, sizeof(buf),
                "<line x1=\"%g\" y1=\"%g\" x2=\"%g\" y2=\"%g\" stroke=\"black\"/>\n", kMargin,
                kHeight - kMargin, kWidth - kMargin, kHeight - kMargin);
  out << buf;
  std::snprintf(buf, sizeof(buf),
                "<line x1=\"%g\" y1=\"%g\" x2=\"%g\" y2=\"%g\" stroke=\"black\"/>\n", kMargin,
                kMargin, kMargin, kHeight - kMargin);
  out << buf;
  out << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 15
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" << x_label
      << "</text>\n";
  out << "<text x=\"15\" y=\"" << kHeight / 2 << "\" transform=\"rotate(-90 15 " << kHeight / 2
      << ")\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" << y_label
      << "</text>\n";
  out << "<text x=\"" << kMargin - 5 << "\" y=\"" << kMargin + 4
      << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">"
      << Decimal(y_max) << "</text>\n";

  std::string polyline;
  for (const PlotPoint& p : points) {
    std::snprintf(buf, sizeof(buf), "%.2f,%.2f ", sx(p.x), sy(p.y));
    polyline += buf;
  }
  out << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\" points=\""
      << polyline << "\"/>\n";
  for (const PlotPoint& p : points) {
    std::snprintf(buf, sizeof(buf),
                  "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"3\" fill=\"steelblue\"/>\n"
                  "<text x=\"%.2f\" y=\"%.2f\" text-anchor=\"middle\" "
                  "font-family=\"sans-serif\" font-size=\"10\">%g</text>\n",
                  sx(p.x), sy(p.y), sx(p.x), kHeight - kMargin + 15, p.x);
    out << buf;
  }
  out << "</svg>\n";
}

}  // namespace koopman_forge::cli
