#pragma once

// CSV and JSON persistence. CSV files are UTF-8 with LF line ends, a header row and
// numbers written with 17 significant digits so that a write/read round trip is exact.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "curvrec/affine.hpp"
#include "curvrec/euclidean.hpp"
#include "curvrec/geometry.hpp"
#include "curvrec/report.hpp"

namespace curvrec {

using Json = nlohmann::ordered_json;

/// Header `s,x,y`, `t,x,y` or `alpha,x,y` (affine and series output). Throws CsvError (with line number) on malformed rows,
/// missing columns and a non-increasing parameter column; IoError if unreadable.
[[nodiscard]] SampledCurve read_curve_csv(const std::string& path);
void write_curve_csv(const SampledCurve& curve, const std::string& path, std::string_view param = "s");
[[nodiscard]] std::string curve_csv(const SampledCurve& curve, std::string_view param = "s");

/// Two-column function table, header `<param>,<value>` (e.g. `s,kappa`).
void write_function_csv(const SampledFunction& f, const std::string& path, std::string_view param = "s",
                        std::string_view value = "kappa");
[[nodiscard]] SampledFunction read_function_csv(const std::string& path, std::string_view param = "s",
                                                std::string_view value = "kappa");

/// Curvature table with header `t,value`, grid strictly increasing.
[[nodiscard]] std::pair<std::vector<double>, std::vector<double>> read_table_csv(const std::string& path);

void write_text_file(const std::string& path, std::string_view content);

/// {iterations, c, tail_bound, grid_size}
[[nodiscard]] Json to_json(const PicardResult& r);
[[nodiscard]] Json to_json(const BoundReport& r);
[[nodiscard]] Json to_json(const ClosureReport& r);

}  // namespace curvrec
