#include "porter/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "porter/errors.hpp"

namespace porter {

namespace {

constexpr double kCanvas = 800.0;
constexpr double kMargin = 40.0;

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

}  // namespace

std::string render_svg(const Instance& inst, const Solution& sol) {
    const auto report = validate_solution(inst, sol);
    if (!report.empty()) {
        throw input_error("render_svg: infeasible solution: " + report.front());
    }
    const int n1 = inst.size();

    double min_x = inst.item(0).x, max_x = min_x;
    double min_y = inst.item(0).y, max_y = min_y;
    for (int k = 0; k < n1; ++k) {
        for (const Point& p : {inst.item(k), inst.placeholder(k)}) {
            min_x = std::min(min_x, p.x);
            max_x = std::max(max_x, p.x);
            min_y = std::min(min_y, p.y);
            max_y = std::max(max_y, p.y);
        }
    }
    const double span = std::max({max_x - min_x, max_y - min_y, 1e-12});
    const double scale = (kCanvas - 2.0 * kMargin) / span;
    // y grows upward in problem space, downward in SVG space.
    auto sx = [&](double x) { return kMargin + (x - min_x) * scale; };
    auto sy = [&](double y) { return kCanvas - kMargin - (y - min_y) * scale; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(kCanvas)
       << "\" height=\"" << num(kCanvas) << "\" viewBox=\"0 0 " << num(kCanvas)
       << " " << num(kCanvas) << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // Tour polygon: item, its placeholder, next item, ... for all
    // n + 1 positions, 2(n + 1) vertices in all.
    os << "<polygon fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" points=\"";
    for (int k = 0; k < n1; ++k) {
        const int i = sol.sequence(k);
        const Point& p = inst.item(i);
        const Point& s = inst.placeholder(sol.assignment(i));
        if (k > 0) os << ' ';
        os << num(sx(p.x)) << ',' << num(sy(p.y)) << ' '
           << num(sx(s.x)) << ',' << num(sy(s.y));
    }
    os << "\"/>\n";

    for (int k = 1; k < n1; ++k) {
        const Point& s = inst.placeholder(k);
        os << "<rect x=\"" << num(sx(s.x) - 4.0) << "\" y=\"" << num(sy(s.y) - 4.0)
           << "\" width=\"8.000\" height=\"8.000\" fill=\"#2ca02c\"/>\n";
    }
    for (int k = 1; k < n1; ++k) {
        const Point& p = inst.item(k);
        os << "<circle cx=\"" << num(sx(p.x)) << "\" cy=\"" << num(sy(p.y))
           << "\" r=\"4.000\" fill=\"#d62728\"/>\n";
    }
    for (const Point& d : {inst.depot_start(), inst.depot_end()}) {
        const double x = sx(d.x);
        const double y = sy(d.y);
        os << "<path d=\"M " << num(x - 7.0) << ' ' << num(y) << " L " << num(x + 7.0)
           << ' ' << num(y) << " M " << num(x) << ' ' << num(y - 7.0) << " L "
           << num(x) << ' ' << num(y + 7.0)
           << "\" stroke=\"black\" stroke-width=\"2.5\"/>\n";
    }

    os << "</svg>\n";
    return os.str();
}

void write_svg(const Instance& inst, const Solution& sol,
               const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out << render_svg(inst, sol);
}

}  // namespace porter
