#pragma once

// JSON round-tripping for every artifact the CLI reads or writes.  Plain
// nlohmann::json keeps object keys sorted, so identical inputs serialize to
// identical bytes.

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "covpack/cover.hpp"
#include "covpack/geometry.hpp"
#include "covpack/graph.hpp"
#include "covpack/pack.hpp"
#include "covpack/weaknet.hpp"

namespace covpack {

using json = nlohmann::json;

inline json body_to_json(const ConvexBody& b) {
    json j;
    j["d"] = b.dim;
    switch (b.kind) {
        case BodyKind::Ball:
            j["kind"] = "ball";
            break;
        case BodyKind::AxisBox:
            j["kind"] = "axisbox";
            j["halfwidths"] = b.halfWidths;
            break;
        case BodyKind::SymPolygon:
            j["kind"] = "sympolygon";
            j["vertices"] = b.vertices;
            break;
        case BodyKind::Polygon:
            j["kind"] = "polygon";
            j["vertices"] = b.vertices;
            break;
    }
    return j;
}

inline ConvexBody body_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind")) throw std::invalid_argument("body json: missing kind");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "ball") {
        int d = j.value("d", 2);
        return make_ball(d);
    }
    if (kind == "axisbox") {
        if (!j.contains("halfwidths")) throw std::invalid_argument("body json: axisbox needs halfwidths");
        return make_axis_box(j.at("halfwidths").get<std::vector<double>>());
    }
    if (kind == "sympolygon" || kind == "polygon") {
        if (!j.contains("vertices")) throw std::invalid_argument("body json: polygon needs vertices");
        PointSet v = j.at("vertices").get<PointSet>();
        return kind == "sympolygon" ? make_sym_polygon(v) : make_polygon(v);
    }
    throw std::invalid_argument("body json: unknown kind '" + kind + "'");
}

inline json points_to_json(const PointSet& S) {
    json j;
    j["d"] = S.empty() ? 2 : static_cast<int>(S[0].size());
    j["points"] = S;
    return j;
}

inline PointSet points_from_json(const json& j) {
    if (!j.is_object() || !j.contains("points")) throw std::invalid_argument("points json: missing points");
    PointSet S = j.at("points").get<PointSet>();
    int d = j.value("d", S.empty() ? 2 : static_cast<int>(S[0].size()));
    for (const Point& p : S)
        if (static_cast<int>(p.size()) != d) throw std::invalid_argument("points json: dimension mismatch");
    return S;
}

inline json homothet_to_json(const Homothet& h) {
    json j;
    j["center"] = h.center;
    j["scale"] = h.scale;
    return j;
}

inline Homothet homothet_from_json(const json& j) {
    return {j.at("center").get<Point>(), j.at("scale").get<double>()};
}

inline json net_to_json(const WeakNet& net) {
    json j = points_to_json(net.points);
    j["epsilon"] = net.epsilon;
    j["approxFactor"] = net.approxFactor;
    j["rounds"] = static_cast<int>(net.trace.size());
    return j;
}

// validity is recomputed against the body and points, never trusted from the caller
inline json cover_to_json(const ConvexBody& b, const PointSet& S, int k, const Cover& c) {
    json j;
    j["homothets"] = json::array();
    for (const Homothet& h : c.homothets) j["homothets"].push_back(homothet_to_json(h));
    j["assignment"] = c.assignment;
    j["valid"] = cover_valid(b, S, k, c);
    j["sizeRatio"] = cover_size_ratio(S.size(), k, c);
    return j;
}

inline json packing_to_json(const ConvexBody& b, const PointSet& S, int k, const Packing& p) {
    json j;
    j["homothets"] = json::array();
    for (const Homothet& h : p.homothets) j["homothets"].push_back(homothet_to_json(h));
    j["covered"] = p.perHomothetCounts;
    j["valid"] = packing_valid(b, S, k, p);
    j["sizeRatio"] = packing_size_ratio(S.size(), k, p);
    return j;
}

inline json graph_to_json(const Graph& g) {
    json j;
    j["n"] = g.n;
    j["edges"] = json::array();
    for (const auto& [a, b] : g.edges) j["edges"].push_back(json::array({a, b}));
    return j;
}

inline Graph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n")) throw std::invalid_argument("graph json: missing n");
    int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const json& e : j.value("edges", json::array())) {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("graph json: edge must be a pair");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return make_graph(n, std::move(edges));
}

inline std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

inline void write_json(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << dump_json(j);
}

inline json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    return json::parse(in);
}

}  // namespace covpack
