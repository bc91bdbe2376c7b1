#pragma once

// Static SVG figures: input points as dots, homothets as outlined shapes of
// the scene's body, and graph/matching edges as highlighted segments.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "covpack/geometry.hpp"

namespace covpack {

struct SvgScene {
    ConvexBody body;  // shape drawn for each homothet
    PointSet points;
    std::vector<Homothet> homothets;
    std::vector<std::pair<int, int>> edges;  // indices into points
};

namespace detail {

inline std::string svg_num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.4f", x);
    return buf;
}

// axis-aligned extent of one homothet, for the viewBox
inline void extend_bbox(const ConvexBody& b, const Homothet& h, double lo[2], double hi[2]) {
    auto grow = [&](double x, double y) {
        lo[0] = std::min(lo[0], x);
        hi[0] = std::max(hi[0], x);
        lo[1] = std::min(lo[1], y);
        hi[1] = std::max(hi[1], y);
    };
    switch (b.kind) {
        case BodyKind::Ball:
            grow(h.center[0] - h.scale, h.center[1] - h.scale);
            grow(h.center[0] + h.scale, h.center[1] + h.scale);
            break;
        case BodyKind::AxisBox:
            grow(h.center[0] - h.scale * b.halfWidths[0], h.center[1] - h.scale * b.halfWidths[1]);
            grow(h.center[0] + h.scale * b.halfWidths[0], h.center[1] + h.scale * b.halfWidths[1]);
            break;
        default:
            for (const Point& v : b.vertices) grow(h.center[0] + h.scale * v[0], h.center[1] + h.scale * v[1]);
    }
}

}  // namespace detail

inline std::string render_svg(const SvgScene& scene) {
    if (scene.body.dim != 2) throw std::invalid_argument("render_svg: body must be 2-D");
    for (const Point& p : scene.points)
        if (p.size() != 2) throw std::invalid_argument("render_svg: points must be 2-D");
    for (const auto& [a, b] : scene.edges)
        if (a < 0 || b < 0 || a >= static_cast<int>(scene.points.size()) || b >= static_cast<int>(scene.points.size()))
            throw std::invalid_argument("render_svg: edge endpoint out of range");
    for (const Homothet& h : scene.homothets)
        if (h.center.size() != 2 || !(h.scale >= 0)) throw std::invalid_argument("render_svg: bad homothet");

    double lo[2] = {0.0, 0.0}, hi[2] = {1.0, 1.0};
    bool any = false;
    auto seed_bbox = [&](double x, double y) {
        if (!any) {
            lo[0] = hi[0] = x;
            lo[1] = hi[1] = y;
            any = true;
        } else {
            lo[0] = std::min(lo[0], x);
            hi[0] = std::max(hi[0], x);
            lo[1] = std::min(lo[1], y);
            hi[1] = std::max(hi[1], y);
        }
    };
    for (const Point& p : scene.points) seed_bbox(p[0], p[1]);
    for (const Homothet& h : scene.homothets) {
        seed_bbox(h.center[0], h.center[1]);
        detail::extend_bbox(scene.body, h, lo, hi);
    }
    double w = hi[0] - lo[0], hgt = hi[1] - lo[1];
    double pad = 0.05 * std::max({w, hgt, 1e-9});
    double span = std::max(w, hgt) + 2 * pad;
    // svg y grows downward; flip into the padded box
    auto X = [&](double x) { return x - lo[0] + pad; };
    auto Y = [&](double y) { return hi[1] - y + pad; };
    double strokeW = 0.004 * span, dotR = 0.006 * span;

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " + detail::svg_num(w + 2 * pad) + " " +
           detail::svg_num(hgt + 2 * pad) + "\">\n";
    for (const Homothet& h : scene.homothets) {
        switch (scene.body.kind) {
            case BodyKind::Ball:
                out += "  <circle cx=\"" + detail::svg_num(X(h.center[0])) + "\" cy=\"" + detail::svg_num(Y(h.center[1])) +
                       "\" r=\"" + detail::svg_num(h.scale) + "\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"" +
                       detail::svg_num(strokeW) + "\"/>\n";
                break;
            case BodyKind::AxisBox: {
                double bw = h.scale * scene.body.halfWidths[0], bh = h.scale * scene.body.halfWidths[1];
                out += "  <rect x=\"" + detail::svg_num(X(h.center[0] - bw)) + "\" y=\"" + detail::svg_num(Y(h.center[1] + bh)) +
                       "\" width=\"" + detail::svg_num(2 * bw) + "\" height=\"" + detail::svg_num(2 * bh) +
                       "\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"" + detail::svg_num(strokeW) + "\"/>\n";
                break;
            }
            default: {
                out += "  <polygon points=\"";
                for (std::size_t i = 0; i < scene.body.vertices.size(); ++i) {
                    const Point& v = scene.body.vertices[i];
                    if (i) out += " ";
                    out += detail::svg_num(X(h.center[0] + h.scale * v[0])) + "," +
                           detail::svg_num(Y(h.center[1] + h.scale * v[1]));
                }
                out += "\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"" + detail::svg_num(strokeW) + "\"/>\n";
            }
        }
    }
    for (const auto& [a, b] : scene.edges)
        out += "  <line x1=\"" + detail::svg_num(X(scene.points[a][0])) + "\" y1=\"" + detail::svg_num(Y(scene.points[a][1])) +
               "\" x2=\"" + detail::svg_num(X(scene.points[b][0])) + "\" y2=\"" + detail::svg_num(Y(scene.points[b][1])) +
               "\" stroke=\"#d62728\" stroke-width=\"" + detail::svg_num(1.5 * strokeW) + "\"/>\n";
    for (const Point& p : scene.points)
        out += "  <circle cx=\"" + detail::svg_num(X(p[0])) + "\" cy=\"" + detail::svg_num(Y(p[1])) + "\" r=\"" +
               detail::svg_num(dotR) + "\" fill=\"#333333\"/>\n";
    out += "</svg>\n";
    return out;
}

inline void render_svg(const SvgScene& scene, const std::string& path) {
    std::string doc = render_svg(scene);
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << doc;
}

}  // namespace covpack
