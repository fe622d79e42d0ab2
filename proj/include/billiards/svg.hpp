#pragma once

// Static SVG drawings of plane grids and billiard trajectories.

#include <billiards/billiards.hpp>
#include <billiards/grid.hpp>

#include <charconv>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace billiards {

struct RenderOptions {
    Int cell_size = 40;
    Int margin = 20;
    std::vector<std::string> palette{"green", "blue", "red"};
    double boundary_width = 2.0;
    double grid_width = 0.75;
    double path_width = 1.5;
};

namespace detail {

inline std::string format_number(double v)
{
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, end);
}

inline std::string xml_escape(const std::string& text)
{
    std::string out;
    for (char c : text) {
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

} // namespace detail

/// Render a plane grid with one polyline per trajectory. (0,0) is drawn bottom-left.
inline std::string render_grid(const GridSpec& grid, const std::vector<Trajectory>& paths,
                               const RenderOptions& opts = {})
{
    if (grid.arity() != 2) {
        throw std::invalid_argument("only plane grids (p = 2) can be rendered");
    }
    if (opts.palette.empty()) {
        throw std::invalid_argument("render palette must not be empty");
    }
    if (opts.cell_size < 1 || opts.margin < 0) {
        throw std::invalid_argument("cell size must be >= 1 and margin >= 0");
    }
    const Int w = grid.dim(0);
    const Int h = grid.dim(1);
    const Int width = checked_add(checked_mul(w, opts.cell_size), 2 * opts.margin);
    const Int height = checked_add(checked_mul(h, opts.cell_size), 2 * opts.margin);
    const auto sx = [&](Int x) { return opts.margin + x * opts.cell_size; };
    const auto sy = [&](Int y) { return opts.margin + (h - y) * opts.cell_size; };

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    out << "  <rect x=\"" << sx(0) << "\" y=\"" << sy(h) << "\" width=\"" << w * opts.cell_size << "\" height=\""
        << h * opts.cell_size << "\" fill=\"none\" stroke=\"black\" stroke-width=\""
        << detail::format_number(opts.boundary_width) << "\"/>\n";

    const std::string grid_width = detail::format_number(opts.grid_width);
    for (Int x = 1; x < w; ++x) {
        out << "  <line x1=\"" << sx(x) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(x) << "\" y2=\"" << sy(h)
            << "\" stroke=\"black\" stroke-width=\"" << grid_width << "\"/>\n";
    }
    for (Int y = 1; y < h; ++y) {
        out << "  <line x1=\"" << sx(0) << "\" y1=\"" << sy(y) << "\" x2=\"" << sx(w) << "\" y2=\"" << sy(y)
            << "\" stroke=\"black\" stroke-width=\"" << grid_width << "\"/>\n";
    }

    const std::string path_width = detail::format_number(opts.path_width);
    for (std::size_t k = 0; k < paths.size(); ++k) {
        out << "  <polyline points=\"";
        for (std::size_t j = 0; j < paths[k].points.size(); ++j) {
            const Point& pt = paths[k].points[j];
            validate(grid, pt);
            out << (j ? " " : "") << sx(pt[0]) << ',' << sy(pt[1]);
        }
        out << "\" fill=\"none\" stroke=\"" << detail::xml_escape(opts.palette[k % opts.palette.size()]) << "\" stroke-width=\""
            << path_width << "\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

/// Render enumerated paths, each traced from its representative.
inline std::string render_grid(const GridSpec& grid, const std::vector<Path>& paths, const RenderOptions& opts = {})
{
    std::vector<Trajectory> traced;
    traced.reserve(paths.size());
    for (const auto& path : paths) {
        traced.push_back(trace(grid, path));
    }
    return render_grid(grid, traced, opts);
}

} // namespace billiards
