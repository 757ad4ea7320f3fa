#pragma once

// Static SVG figures: workspace bounds, obstacle discs, start/goal markers and
// one polyline per labelled path. World y grows upward, SVG y downward.

#include "curveplan/geometry.hpp"
#include "curveplan/scenario.hpp"
#include "curveplan/serialization.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace curveplan {

struct RenderStyle {
    int width_px = 800;
    int height_px = 800;
    int margin_px = 20;
    std::string background = "#ffffff";
    std::string bounds_stroke = "#333333";
    std::string obstacle_fill = "#9e9e9e";
    std::string obstacle_stroke = "#424242";
    std::string start_color = "#2e7d32";
    std::string goal_color = "#c62828";
    std::map<std::string, std::string> path_colors = {
        {"DCCPPA", "#1f77b4"}, {"RRT", "#ff7f0e"}, {"PRM", "#9467bd"}};
    std::vector<std::string> fallback_colors = {"#17becf", "#8c564b", "#e377c2", "#7f7f7f"};
    double path_stroke_px = 2.0;
    double outline_stroke_px = 1.0;
    double marker_px = 10.0;

    [[nodiscard]] static bool is_hex_color(const std::string& c) {
        if (c.size() != 7 || c[0] != '#')
            return false;
        for (std::size_t i = 1; i < 7; ++i)
            if (!std::isxdigit(static_cast<unsigned char>(c[i])))
                return false;
        return true;
    }

    void validate() const {
        if (width_px <= 0 || height_px <= 0)
            throw std::invalid_argument("RenderStyle: canvas dimensions must be positive");
        if (margin_px < 0 || 2 * margin_px >= std::min(width_px, height_px))
            throw std::invalid_argument("RenderStyle: margin leaves no drawing area");
        std::vector<const std::string*> colors = {&background,  &bounds_stroke, &obstacle_fill,
                                                  &obstacle_stroke, &start_color, &goal_color};
        for (const auto& [label, c] : path_colors)
            colors.push_back(&c);
        for (const auto& c : fallback_colors)
            colors.push_back(&c);
        for (const auto* c : colors)
            if (!is_hex_color(*c))
                throw std::invalid_argument("RenderStyle: invalid color '" + *c + "'");
        if (fallback_colors.empty())
            throw std::invalid_argument("RenderStyle: fallback palette is empty");
    }
};

/// Uniform-scale world-to-pixel map that centres the bounds in the canvas.
class Viewport {
public:
    Viewport(const Bounds& bounds, const RenderStyle& style) : bounds_(bounds) {
        const double avail_w = style.width_px - 2.0 * style.margin_px;
        const double avail_h = style.height_px - 2.0 * style.margin_px;
        scale_ = std::min(avail_w / bounds.width(), avail_h / bounds.height());
        offset_x_ = 0.5 * (style.width_px - scale_ * bounds.width());
        offset_y_ = 0.5 * (style.height_px - scale_ * bounds.height());
    }

    [[nodiscard]] Point2 to_pixel(const Point2& w) const noexcept {
        return {offset_x_ + (w.x - bounds_.min_x) * scale_, offset_y_ + (bounds_.max_y - w.y) * scale_};
    }

    [[nodiscard]] Point2 to_world(const Point2& px) const noexcept {
        return {bounds_.min_x + (px.x - offset_x_) / scale_, bounds_.max_y - (px.y - offset_y_) / scale_};
    }

    [[nodiscard]] double scale() const noexcept { return scale_; }

private:
    Bounds bounds_;
    double scale_ = 1.0;
    double offset_x_ = 0.0;
    double offset_y_ = 0.0;
};

namespace detail {

inline std::string xml_escape(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        case '\'': out += "&apos;"; break;
        default: out += c;
        }
    }
    return out;
}

inline std::string px(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

} // namespace detail

[[nodiscard]] inline std::string render_svg(const Scenario& scenario, std::span<const LabelledPath> paths,
                                            const RenderStyle& style = {}) {
    using detail::px;
    using detail::xml_escape;
    style.validate();
    const Viewport vp(scenario.bounds, style);
    std::ostringstream svg;

    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << style.width_px << "\" height=\""
        << style.height_px << "\" viewBox=\"0 0 " << style.width_px << ' ' << style.height_px << "\">\n"
        << "  <title>" << xml_escape(scenario.name) << "</title>\n"
        << "  <rect width=\"100%\" height=\"100%\" fill=\"" << style.background << "\"/>\n";

    const Point2 top_left = vp.to_pixel({scenario.bounds.min_x, scenario.bounds.max_y});
    svg << "  <rect class=\"bounds\" x=\"" << px(top_left.x) << "\" y=\"" << px(top_left.y) << "\" width=\""
        << px(scenario.bounds.width() * vp.scale()) << "\" height=\"" << px(scenario.bounds.height() * vp.scale())
        << "\" fill=\"none\" stroke=\"" << style.bounds_stroke << "\" stroke-width=\""
        << px(style.outline_stroke_px) << "\"/>\n";

    svg << "  <g class=\"obstacles\">\n";
    for (const auto& o : scenario.obstacles) {
        const Point2 c = vp.to_pixel(o.center);
        svg << "    <circle cx=\"" << px(c.x) << "\" cy=\"" << px(c.y) << "\" r=\"" << px(o.radius * vp.scale())
            << "\" fill=\"" << style.obstacle_fill << "\" stroke=\"" << style.obstacle_stroke
            << "\" stroke-width=\"" << px(style.outline_stroke_px) << "\"/>\n";
    }
    svg << "  </g>\n";

    std::vector<std::string> colors;
    std::size_t fallback = 0;
    for (const auto& p : paths) {
        auto it = style.path_colors.find(p.label);
        colors.push_back(it != style.path_colors.end()
                             ? it->second
                             : style.fallback_colors[fallback++ % style.fallback_colors.size()]);
    }

    svg << "  <g class=\"paths\" fill=\"none\" stroke-linejoin=\"round\">\n";
    for (std::size_t i = 0; i < paths.size(); ++i) {
        svg << "    <polyline data-label=\"" << xml_escape(paths[i].label) << "\" stroke=\"" << colors[i]
            << "\" stroke-width=\"" << px(style.path_stroke_px) << "\" points=\"";
        for (std::size_t k = 0; k < paths[i].path.size(); ++k) {
            const Point2 q = vp.to_pixel(paths[i].path[k]);
            svg << (k ? " " : "") << px(q.x) << ',' << px(q.y);
        }
        svg << "\"/>\n";
    }
    svg << "  </g>\n";

    const double m = style.marker_px;
    const Point2 s = vp.to_pixel(scenario.start);
    svg << "  <rect class=\"start\" x=\"" << px(s.x - m / 2) << "\" y=\"" << px(s.y - m / 2) << "\" width=\""
        << px(m) << "\" height=\"" << px(m) << "\" fill=\"" << style.start_color << "\"/>\n";
    const Point2 g = vp.to_pixel(scenario.goal);
    svg << "  <polygon class=\"goal\" points=\"" << px(g.x) << ',' << px(g.y - m * 0.7) << ' '
        << px(g.x + m * 0.7) << ',' << px(g.y) << ' ' << px(g.x) << ',' << px(g.y + m * 0.7) << ' '
        << px(g.x - m * 0.7) << ',' << px(g.y) << "\" fill=\"" << style.goal_color << "\"/>\n";

    svg << "  <g class=\"legend\" font-family=\"sans-serif\" font-size=\"12\">\n";
    const double lx = style.margin_px + 8.0;
    double ly = style.margin_px + 8.0;
    auto entry = [&](const std::string& color, const std::string& label) {
        svg << "    <rect x=\"" << px(lx) << "\" y=\"" << px(ly) << "\" width=\"12\" height=\"12\" fill=\"" << color
            << "\"/>\n"
            << "    <text x=\"" << px(lx + 18) << "\" y=\"" << px(ly + 10) << "\">" << xml_escape(label)
            << "</text>\n";
        ly += 18.0;
    };
    entry(style.start_color, "start");
    entry(style.goal_color, "goal");
    for (std::size_t i = 0; i < paths.size(); ++i)
        entry(colors[i], paths[i].label);
    svg << "  </g>\n</svg>\n";
    return svg.str();
}

inline void write_svg(const std::filesystem::path& out, const Scenario& scenario,
                      std::span<const LabelledPath> paths, const RenderStyle& style = {}) {
    const std::string doc = render_svg(scenario, paths, style);
    std::ofstream f(out);
    if (!f)
        throw std::runtime_error("cannot write SVG file '" + out.string() + "'");
    f << doc;
    if (!f)
        throw std::runtime_error("failed writing SVG file '" + out.string() + "'");
}

} // namespace curveplan
