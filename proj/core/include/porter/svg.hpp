#pragma once

#include <filesystem>
#include <string>

#include "porter/model.hpp"

namespace porter {

// SVG rendering of a feasible solution: the closed tour as one polygon
// through all 2(n+1) visit points, circles for items, squares for
// placeholders, and a cross for each depot point.  Output bytes depend
// only on the inputs.
std::string render_svg(const Instance& inst, const Solution& sol);

// render_svg written to a file.
void write_svg(const Instance& inst, const Solution& sol,
               const std::filesystem::path& path);

}  // namespace porter
