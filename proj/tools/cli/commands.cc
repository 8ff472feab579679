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

#include "cli/commands.h"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cli/builtins.h"
#include "cli/format.h"
#include "koopman_forge/errors.h"
#include "koopman_forge/json_io.h"
#include "koopman_forge/koopman.h"
#include "koopman_forge/limits.h"
#include "koopman_forge/realize.h"
#include "koopman_forge/transforms.h"

namespace koopman_forge::cli {
namespace {

using nlohmann::json;

struct GlobalOptions {
  std::optional<int> max_level;
  std::string timestamp = "off";
  std::string format;
  std::string out_path;
};

ResourceLimits Limits(const GlobalOptions& options) {
  ResourceLimits limits;
  if (const char* env = std::getenv("KOOPMAN_FORGE_MAX_LEVEL"); env && *env) {
    try {
      std::size_t used = 0;
      limits.max_level = std::stoi(env, &used);
      if (env[used] != '\0') throw std::invalid_argument(env);
    } catch (const std::exception&) {
      throw ValidationError(std::string("KOOPMAN_FORGE_MAX_LEVEL must be an integer, got '") +
                            env + "'");
    }
  }
  if (options.max_level) limits.max_level = *options.max_level;
  return limits;
}

class Output {
 public:
  Output(const GlobalOptions& options, std::ostream& out, std::ostream& err)
      : options_(options), out_(out), err_(err) {}

  bool json() const { return options_.format == "json"; }

  // Primary result: to --out if given, otherwise stdout.
  void Primary(const std::string& text) {
    if (options_.out_path.empty()) {
      out_ << Stamp() << text;
      return;
    }
    std::ofstream file(options_.out_path);
    if (!file) throw ValidationError("cannot write '" + options_.out_path + "'");
    file << text;
  }

  // Human-readable status; kept off stdout when stdout carries JSON.
  std::ostream& Status() {
    return json() && options_.out_path.empty() ? err_ : out_;
  }

 private:
  std::string Stamp() {
    if (options_.timestamp != "on" || json() || stamped_) return "";
    stamped_ = true;
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buffer[64];
    std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    return std::string("# generated ") + buffer + "\n";
  }

  const GlobalOptions& options_;
  std::ostream& out_;
  std::ostream& err_;
  bool stamped_ = false;
};

std::string Dump(const json& j) { return j.dump(2) + "\n"; }

std::string Render(const Table& table) {
  std::ostringstream os;
  table.Render(os);
  return os.str();
}

int CmdRealize(const std::string& matrix_spec, const GlobalOptions& options, Output& output) {
  const ResourceLimits limits = Limits(options);
  const DoublyStochasticMatrix m = LoadMatrix(matrix_spec);
  const PiecewiseTranslation t = RealizeIet(m, limits);
  const bool exact = KoopmanMatrix(t, m.level(), limits) == m;

  if (output.json()) {
    output.Primary(Dump(ToJson(t)));
  } else {
    Table table({"lo", "hi", "offset", "image_lo", "image_hi"});
    for (const TranslationPiece& p : t.pieces()) {
      const Interval image = p.image();
      table.AddRow({ShortRat(p.source.lo()), ShortRat(p.source.hi()), ShortRat(p.offset),
                    ShortRat(image.lo()), ShortRat(image.hi())});
    }
    output.Primary(Render(table));
  }
  output.Status() << "pieces: " << t.piece_count() << "\n"
                  << "round-trip: " << (exact ? "exact" : "MISMATCH") << "\n";
  return exact ? kExitOk : kExitInternal;
}

int CmdKoopman(const std::string& map_spec, int level, const GlobalOptions& options,
               Output& output) {
  const ResourceLimits limits = Limits(options);
  limits.CheckLevel(level);
  const DoublyStochasticMatrix m = KoopmanMatrix(AsAffine(LoadMap(map_spec)), level, limits);

  bool rows_ok = true;
  bool columns_ok = true;
  for (std::size_t j = 0; j < m.size(); ++j) {
    Rat row = 0;
    Rat column = 0;
    for (std::size_t k = 0; k < m.size(); ++k) {
      row += m(j, k);
      column += m(k, j);
    }
    rows_ok = rows_ok && row == 1;
    columns_ok = columns_ok && column == 1;
  }

  if (output.json()) {
    output.Primary(Dump(ToJson(m)));
  } else {
    std::vector<std::string> header{"j\\k"};
    for (std::size_t k = 1; k <= m.size(); ++k) header.push_back(std::to_string(k));
    Table table(std::move(header));
    for (std::size_t j = 0; j < m.size(); ++j) {
      std::vector<std::string> row{std::to_string(j + 1)};
      for (std::size_t k = 0; k < m.size(); ++k) row.push_back(ShortRat(m(j, k)));
      table.AddRow(std::move(row));
    }
    output.Primary(Render(table));
  }
  output.Status() << "level: " << level << " (" << m.size() << "x" << m.size() << ")\n"
                  << "row sums: " << (rows_ok ? "all exactly 1" : "NOT 1") << "\n"
                  << "column sums: " << (columns_ok ? "all exactly 1" : "NOT 1") << "\n";
  return rows_ok && columns_ok ? kExitOk : kExitInternal;
}

int CmdApprox(const std::string& target_spec, int n_max, int basis_level,
              const std::string& plot_path, const GlobalOptions& options, Output& output) {
  const ResourceLimits limits = Limits(options);
  limits.CheckLevel(n_max);
  if (n_max < 1) throw ValidationError("--n-max must be at least 1");
  const PiecewiseAffineMap target = AsAffine(LoadMap(target_spec));
  const MetricBasis basis = MetricBasis::DyadicIndicators(basis_level, limits);
  const auto steps = ApproximationSequence(target, n_max, basis, limits);

  if (output.json()) {
    json rows = json::array();
    for (const ApproximationStep& step : steps) {
      json defects = json::array();
      for (const Rat& d : step.weak_defects) defects.push_back(ToJson(d));
      rows.push_back({{"n", step.level},
                      {"pieces", step.map.piece_count()},
                      {"weak_defects", std::move(defects)},
                      {"metric", step.metric->value},
                      {"metric_decimal", Decimal(step.metric->value)}});
    }
    output.Primary(Dump({{"target", target_spec},
                         {"basis_level", basis_level},
                         {"basis_size", basis.size()},
                         {"tail_bound", basis.TailBound()},
                         {"rows", std::move(rows)}}));
  } else {
    std::vector<std::string> header{"n", "pieces"};
    for (int m = 1; m <= n_max; ++m) header.push_back("defect@" + std::to_string(m));
    header.push_back("d(T_n,target)");
    Table table(std::move(header));
    for (const ApproximationStep& step : steps) {
      std::vector<std::string> row{std::to_string(step.level),
                                   std::to_string(step.map.piece_count())};
      for (const Rat& d : step.weak_defects) row.push_back(ShortRat(d));
      row.push_back(Decimal(step.metric->value));
      table.AddRow(std::move(row));
    }
    std::ostringstream text;
    text << "# target " << target_spec << ", basis: dyadic indicators of levels 0.."
         << basis_level << " (" << basis.size() << " functions), tail bound "
         << Decimal(basis.TailBound()) << "\n";
    table.Render(text);
    output.Primary(text.str());
  }
  if (!plot_path.empty()) {
    std::vector<PlotPoint> points;
    for (const ApproximationStep& step : steps) {
      points.push_back({static_cast<double>(step.level), step.metric->value});
    }
    WriteSvgPlot(plot_path, "d(T_n, " + target_spec + ")", "n", "metric", points);
  }
  return kExitOk;
}

int CmdRangeDist(const std::string& map_spec, const std::string& function_spec,
                 const GlobalOptions& options, Output& output) {
  const ResourceLimits limits = Limits(options);
  const PiecewiseAffineMap map = AsAffine(LoadMap(map_spec));
  const auto functions = LoadFunctions(function_spec, limits);

  if (output.json()) {
    json rows = json::array();
    for (const LabelledFunction& f : functions) {
      const Rat d2 = RangeDistanceSquared(map, f.function);
      rows.push_back({{"function", f.label},
                      {"dist_squared", ToJson(d2)},
                      {"dist", Decimal(std::sqrt(d2.ToDouble()))}});
    }
    output.Primary(Dump({{"map", map_spec}, {"rows", std::move(rows)}}));
    return kExitOk;
  }
  Table table({"function", "dist^2", "dist"});
  for (const LabelledFunction& f : functions) {
    const Rat d2 = RangeDistanceSquared(map, f.function);
    table.AddRow({f.label, ShortRat(d2), Decimal(std::sqrt(d2.ToDouble()))});
  }
  output.Primary(Render(table));
  return kExitOk;
}

int CmdMetric(const std::string& a_spec, const std::string& b_spec, int basis_level,
              const GlobalOptions& options, Output& output) {
  const ResourceLimits limits = Limits(options);
  const MetricBasis basis = MetricBasis::DyadicIndicators(basis_level, limits);
  const MetricReport report =
      OpMetric(AsAffine(LoadMap(a_spec)), AsAffine(LoadMap(b_spec)), basis);

  if (output.json()) {
    json terms = json::array();
    for (const MetricTerm& t : report.terms) {
      terms.push_back({{"j", t.index},
                       {"function", basis.labels()[t.index - 1]},
                       {"diff_squared", ToJson(t.diff_squared)},
                       {"norm_squared", ToJson(t.norm_squared)},
                       {"term", t.value}});
    }
    output.Primary(Dump({{"a", a_spec},
                         {"b", b_spec},
                         {"basis_level", basis_level},
                         {"terms", std::move(terms)},
                         {"metric", report.value},
                         {"metric_decimal", Decimal(report.value)},
                         {"tail_bound", report.tail_bound}}));
    return kExitOk;
  }
  Table table({"j", "function", "|Tf-Sf|^2", "|f|^2", "term"});
  for (const MetricTerm& t : report.terms) {
    table.AddRow({std::to_string(t.index), basis.labels()[t.index - 1],
                  ShortRat(t.diff_squared), ShortRat(t.norm_squared), Decimal(t.value)});
  }
  std::ostringstream text;
  table.Render(text);
  text << "d = " << Decimal(report.value) << "\n"
       << "tail bound = " << Decimal(report.tail_bound) << " (" << basis.size()
       << " terms)\n";
  output.Primary(text.str());
  return kExitOk;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact dyadic Koopman matrices and invertible interval-exchange "
               "approximations of measure-preserving maps of [0,1)",
               "koopman-forge"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions options;
  app.add_option("--max-level", options.max_level,
                 "Largest dyadic level allowed (default 16, env KOOPMAN_FORGE_MAX_LEVEL)");
  app.add_option("--timestamp", options.timestamp, "Prefix text output with a timestamp")
      ->check(CLI::IsMember({"on", "off"}));
  app.add_option("--format", options.format, "Output format")
      ->check(CLI::IsMember({"json", "table"}));
  app.add_option("--out", options.out_path, "Write the primary output to PATH");

  std::string first;
  std::string second;
  std::string function_spec;
  std::string plot_path;
  int level = 1;
  int n_max = 6;
  int basis_level = kDefaultBasisLevel;

  CLI::App* realize = app.add_subcommand(
      "realize", "Build the invertible piecewise translation realizing a matrix");
  realize->add_option("matrix", first, "Matrix JSON file or inline JSON")->required();

  CLI::App* koopman = app.add_subcommand("koopman", "Extract the dyadic Koopman matrix of a map");
  koopman->add_option("map", first, "Builtin map name, map JSON file, or inline JSON")
      ->required();
  koopman->add_option("-n,--level", level, "Dyadic level")->required();

  CLI::App* approx = app.add_subcommand(
      "approx", "Approximate a map by realizations of its Koopman matrices");
  approx->add_option("map", first, "Builtin map name or map JSON")->required();
  approx->add_option("--n-max", n_max, "Largest level n")->capture_default_str();
  approx->add_option("--basis-level", basis_level, "Metric basis level")->capture_default_str();
  approx->add_option("--plot", plot_path, "Write an SVG plot of d(T_n) against n");

  CLI::App* rangedist = app.add_subcommand(
      "rangedist", "Distance from functions to the range of the Koopman operator");
  rangedist->add_option("map", first, "Builtin map name or map JSON")->required();
  rangedist
      ->add_option("--function", function_spec,
                   "rademacher, one, dyadic:j:n, dyadic:L, or step-function JSON")
      ->required();

  CLI::App* metric = app.add_subcommand("metric", "Truncated strong-operator metric");
  metric->add_option("a", first, "First map")->required();
  metric->add_option("b", second, "Second map")->required();
  metric->add_option("--basis-level", basis_level, "Metric basis level")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    const bool table_default = !realize->parsed() && !koopman->parsed();
    if (options.format.empty()) options.format = table_default ? "table" : "json";
    Output output(options, out, err);
    if (realize->parsed()) return CmdRealize(first, options, output);
    if (koopman->parsed()) return CmdKoopman(first, level, options, output);
    if (approx->parsed()) return CmdApprox(first, n_max, basis_level, plot_path, options, output);
    if (rangedist->parsed()) return CmdRangeDist(first, function_spec, options, output);
    if (metric->parsed()) return CmdMetric(first, second, basis_level, options, output);
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace koopman_forge::cli
