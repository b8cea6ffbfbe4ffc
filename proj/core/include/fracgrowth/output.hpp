#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "fracgrowth/growth_model.hpp"

namespace fracgrowth {

/// Shortest decimal that round-trips to the same double.
[[nodiscard]] std::string format_shortest(double v);

/// 17 significant digits, locale independent.
[[nodiscard]] std::string format_full(double v);

/// Header `t,Y`, one row per node, LF line endings.
[[nodiscard]] std::string format_csv(const Trajectory& tr);

/// Writes `content` to a sibling temporary file and renames it over `path`, so readers
/// never observe a partial file. Creates missing parent directories.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

struct PlotSeries {
    std::string file;   ///< CSV path relative to the script
    std::string title;
};

/// gnuplot script plotting Y against t for every series.
[[nodiscard]] std::string gnuplot_script(std::string_view title, const std::vector<PlotSeries>& series);

}  // namespace fracgrowth
