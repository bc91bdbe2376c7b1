#pragma once

// Convex bodies, gauge functionals, homothets, fatness certificates and
// hitting sets.  Everything works on plain coordinate vectors; dimension is
// small (d <= 8) and all predicates are floating point with a fixed slack.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace covpack {

using Point = std::vector<double>;
using PointSet = std::vector<Point>;

// slack for containment/intersection predicates, relative to 1 + scale
inline constexpr double kTol = 1e-9;

inline Point sub(const Point& a, const Point& b) {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Point add(const Point& a, const Point& b) {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Point scaled(const Point& a, double s) {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
    return r;
}

inline double dot(const Point& a, const Point& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm2(const Point& a) { return dot(a, a); }
inline double norm(const Point& a) { return std::sqrt(norm2(a)); }

inline double dist(const Point& a, const Point& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

inline double cross2(const Point& a, const Point& b) { return a[0] * b[1] - a[1] * b[0]; }

enum class BodyKind { Ball, AxisBox, SymPolygon, Polygon };

// A convex body in canonical position.  Ball is the unit ball; AxisBox is
// the box of the given half-widths centered at the origin; polygons are CCW
// vertex lists with the origin strictly interior (SymPolygon additionally
// centrally symmetric).  Homothets translate and positively scale it.
struct ConvexBody {
    BodyKind kind = BodyKind::Ball;
    int dim = 2;
    std::vector<double> halfWidths;  // AxisBox only
    PointSet vertices;               // polygons only
    // derived for polygons: edge half-planes n_i . x <= h_i with h_i > 0
    PointSet edgeNormal;
    std::vector<double> edgeOffset;
};

struct Homothet {
    Point center;
    double scale = 1.0;  // >= 0; zero is the degenerate single-point homothet
};

// raised when boundary-sphere ties make a point-count threshold ambiguous
// (coincident gauge values straddling the budget); callers may jitter and retry
class DegeneracyError : public std::runtime_error {
  public:
    Point center;
    double radius;

    DegeneracyError(Point c, double r) : std::runtime_error(message(c, r)), center(std::move(c)), radius(r) {}

  private:
    static std::string message(const Point& c, double r) {
        std::string s = "degenerate boundary sphere at (";
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) s += ", ";
            s += std::to_string(c[i]);
        }
        s += ") with radius " + std::to_string(r) + " holds too many points";
        return s;
    }
};

inline void finish_polygon(ConvexBody& b, const char* what) {
    const PointSet& v = b.vertices;
    std::size_t m = v.size();
    if (m < 3) throw std::invalid_argument(std::string(what) + ": needs >= 3 vertices");
    b.edgeNormal.clear();
    b.edgeOffset.clear();
    double area2 = 0;
    for (std::size_t i = 0; i < m; ++i) {
        const Point& a = v[i];
        const Point& c = v[(i + 1) % m];
        area2 += cross2(a, c);
        Point e = sub(c, a);
        if (norm(e) < 1e-14) throw std::invalid_argument(std::string(what) + ": repeated vertex");
        Point n = {e[1], -e[0]};  // outward for CCW
        double h = dot(n, a);
        if (h <= 1e-12) throw std::invalid_argument(std::string(what) + ": origin not strictly interior");
        b.edgeNormal.push_back(n);
        b.edgeOffset.push_back(h);
    }
    if (area2 <= 0) throw std::invalid_argument(std::string(what) + ": vertices must be CCW");
    for (std::size_t i = 0; i < m; ++i) {  // strict convexity of the vertex chain
        const Point& a = v[i];
        const Point& c = v[(i + 1) % m];
        const Point& d = v[(i + 2) % m];
        if (cross2(sub(c, a), sub(d, c)) <= 1e-14) throw std::invalid_argument(std::string(what) + ": not strictly convex");
    }
}

inline ConvexBody make_ball(int d) {
    if (d < 1 || d > 8) throw std::invalid_argument("make_ball: dimension out of range");
    ConvexBody b;
    b.kind = BodyKind::Ball;
    b.dim = d;
    return b;
}

inline ConvexBody make_axis_box(std::vector<double> halfWidths) {
    ConvexBody b;
    b.kind = BodyKind::AxisBox;
    b.dim = static_cast<int>(halfWidths.size());
    if (b.dim < 1 || b.dim > 8) throw std::invalid_argument("make_axis_box: dimension out of range");
    for (double w : halfWidths)
        if (!(w > 0)) throw std::invalid_argument("make_axis_box: half-widths must be positive");
    b.halfWidths = std::move(halfWidths);
    return b;
}

inline ConvexBody make_polygon(PointSet verts) {
    ConvexBody b;
    b.kind = BodyKind::Polygon;
    b.dim = 2;
    for (const Point& p : verts)
        if (p.size() != 2) throw std::invalid_argument("make_polygon: vertices must be 2-D");
    b.vertices = std::move(verts);
    finish_polygon(b, "make_polygon");
    return b;
}

inline ConvexBody make_sym_polygon(PointSet verts) {
    ConvexBody b;
    b.kind = BodyKind::SymPolygon;
    b.dim = 2;
    for (const Point& p : verts)
        if (p.size() != 2) throw std::invalid_argument("make_sym_polygon: vertices must be 2-D");
    b.vertices = std::move(verts);
    finish_polygon(b, "make_sym_polygon");
    std::size_t m = b.vertices.size();
    if (m % 2 != 0) throw std::invalid_argument("make_sym_polygon: odd vertex count cannot be symmetric");
    for (std::size_t i = 0; i < m / 2; ++i) {
        const Point& a = b.vertices[i];
        const Point& c = b.vertices[i + m / 2];
        if (std::abs(a[0] + c[0]) > 1e-9 || std::abs(a[1] + c[1]) > 1e-9)
            throw std::invalid_argument("make_sym_polygon: vertices not centrally symmetric");
    }
    return b;
}

inline ConvexBody make_regular_polygon(int v, double circumRadius = 1.0, double phase = 0.0) {
    PointSet verts;
    verts.reserve(v);
    for (int i = 0; i < v; ++i) {
        double a = phase + 2.0 * M_PI * i / v;
        verts.push_back({circumRadius * std::cos(a), circumRadius * std::sin(a)});
    }
    return v % 2 == 0 ? make_sym_polygon(std::move(verts)) : make_polygon(std::move(verts));
}

inline bool is_symmetric(const ConvexBody& b) { return b.kind != BodyKind::Polygon; }

// Minkowski functional: min { lambda >= 0 : x in lambda * body }.
inline double gauge(const ConvexBody& b, const Point& x) {
    switch (b.kind) {
        case BodyKind::Ball:
            return norm(x);
        case BodyKind::AxisBox: {
            double g = 0;
            for (std::size_t i = 0; i < x.size(); ++i) g = std::max(g, std::abs(x[i]) / b.halfWidths[i]);
            return g;
        }
        default: {
            double g = 0;
            for (std::size_t i = 0; i < b.edgeNormal.size(); ++i) {
                double t = (b.edgeNormal[i][0] * x[0] + b.edgeNormal[i][1] * x[1]) / b.edgeOffset[i];
                g = std::max(g, t);
            }
            return g;
        }
    }
}

// gauge(q - center) without materializing the difference
inline double gauge_between(const ConvexBody& b, const Point& center, const Point& q) {
    switch (b.kind) {
        case BodyKind::Ball: {
            double s = 0;
            for (std::size_t i = 0; i < q.size(); ++i) {
                double d = q[i] - center[i];
                s += d * d;
            }
            return std::sqrt(s);
        }
        case BodyKind::AxisBox: {
            double g = 0;
            for (std::size_t i = 0; i < q.size(); ++i) g = std::max(g, std::abs(q[i] - center[i]) / b.halfWidths[i]);
            return g;
        }
        default: {
            double dx = q[0] - center[0], dy = q[1] - center[1];
            double g = 0;
            for (std::size_t i = 0; i < b.edgeNormal.size(); ++i) {
                double t = (b.edgeNormal[i][0] * dx + b.edgeNormal[i][1] * dy) / b.edgeOffset[i];
                g = std::max(g, t);
            }
            return g;
        }
    }
}

// symmetrized gauge max(g(x), g(-x)); a norm even for asymmetric bodies
inline double sym_gauge(const ConvexBody& b, const Point& x) {
    if (is_symmetric(b)) return gauge(b, x);
    Point nx = scaled(x, -1.0);
    return std::max(gauge(b, x), gauge(b, nx));
}

inline double support(const ConvexBody& b, const Point& dir) {
    switch (b.kind) {
        case BodyKind::Ball:
            return norm(dir);
        case BodyKind::AxisBox: {
            double s = 0;
            for (std::size_t i = 0; i < dir.size(); ++i) s += b.halfWidths[i] * std::abs(dir[i]);
            return s;
        }
        default: {
            double s = -1e300;
            for (const Point& v : b.vertices) s = std::max(s, dot(v, dir));
            return s;
        }
    }
}

// boundary point of the body along direction dir (dir != 0)
inline Point boundary_point(const ConvexBody& b, const Point& dir) {
    double g = gauge(b, dir);
    if (g <= 0) throw std::invalid_argument("boundary_point: zero direction");
    return scaled(dir, 1.0 / g);
}

inline bool contains(const ConvexBody& b, const Homothet& h, const Point& q, double tol = kTol) {
    return gauge_between(b, h.center, q) <= h.scale + tol * (1.0 + h.scale);
}

inline int count_covered(const ConvexBody& b, const Homothet& h, const PointSet& S, double tol = kTol) {
    int c = 0;
    for (const Point& q : S) c += contains(b, h, q, tol) ? 1 : 0;
    return c;
}

// closed intersection test between two homothets of the same body
inline bool intersects(const ConvexBody& b, const Homothet& h1, const Homothet& h2, double tol = kTol) {
    double slack = tol * (1.0 + h1.scale + h2.scale);
    if (is_symmetric(b)) return gauge_between(b, h1.center, h2.center) <= h1.scale + h2.scale + slack;
    // general polygon: separating-axis test over the edge normals (both
    // homothets share the body's normal fan, +/- for the Minkowski difference)
    for (std::size_t i = 0; i < b.edgeNormal.size(); ++i) {
        const Point& n = b.edgeNormal[i];
        Point nn = {-n[0], -n[1]};
        double off = n[0] * (h2.center[0] - h1.center[0]) + n[1] * (h2.center[1] - h1.center[1]);
        // separated along n: max over h2 of n.x < min over h1 of n.x
        if (off + h2.scale * support(b, n) < -h1.scale * support(b, nn) - slack) return false;
        if (-off + h1.scale * support(b, n) < -h2.scale * support(b, nn) - slack) return false;
    }
    return true;
}

// h_inner entirely inside h_outer (symmetric bodies)
inline bool homothet_inside(const ConvexBody& b, const Homothet& inner, const Homothet& outer, double tol = kTol) {
    if (!is_symmetric(b)) throw std::invalid_argument("homothet_inside: symmetric bodies only");
    return gauge_between(b, outer.center, inner.center) <= outer.scale - inner.scale + tol * (1.0 + outer.scale);
}

// --------------------------------------------------------------------------
// fatness

// Certificate that T(body) is sandwiched between balls at the origin, where
// T(x)_i = linScale_i * x_i + offset_i.
struct FatnessCert {
    std::vector<double> linScale;
    Point offset;
    double inRadius = 1.0;
    double outRadius = 1.0;
    double alpha = 1.0;

    Point apply(const Point& x) const {
        Point y(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) y[i] = linScale[i] * x[i] + offset[i];
        return y;
    }
    Point invert(const Point& y) const {
        Point x(y.size());
        for (std::size_t i = 0; i < y.size(); ++i) x[i] = (y[i] - offset[i]) / linScale[i];
        return x;
    }
};

// Chebyshev center of the polygon: maximize r subject to
// n_i . c + |n_i| r <= h_i, solved by enumerating constraint triples.
inline void chebyshev_center(const ConvexBody& b, Point& center, double& radius) {
    std::size_t m = b.edgeNormal.size();
    std::vector<double> len(m);
    for (std::size_t i = 0; i < m; ++i) len[i] = norm(b.edgeNormal[i]);
    double bestR = -1;
    Point bestC = {0, 0};
    auto feasible = [&](double cx, double cy, double r) {
        for (std::size_t i = 0; i < m; ++i)
            if (b.edgeNormal[i][0] * cx + b.edgeNormal[i][1] * cy + len[i] * r > b.edgeOffset[i] + 1e-9) return false;
        return true;
    };
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            for (std::size_t k = j + 1; k < m; ++k) {
                // solve the 3x3 system with rows (n_x, n_y, |n|) = h
                double a11 = b.edgeNormal[i][0], a12 = b.edgeNormal[i][1], a13 = len[i], r1 = b.edgeOffset[i];
                double a21 = b.edgeNormal[j][0], a22 = b.edgeNormal[j][1], a23 = len[j], r2 = b.edgeOffset[j];
                double a31 = b.edgeNormal[k][0], a32 = b.edgeNormal[k][1], a33 = len[k], r3 = b.edgeOffset[k];
                double det = a11 * (a22 * a33 - a23 * a32) - a12 * (a21 * a33 - a23 * a31) + a13 * (a21 * a32 - a22 * a31);
                if (std::abs(det) < 1e-12) continue;
                double cx = (r1 * (a22 * a33 - a23 * a32) - a12 * (r2 * a33 - a23 * r3) + a13 * (r2 * a32 - a22 * r3)) / det;
                double cy = (a11 * (r2 * a33 - a23 * r3) - r1 * (a21 * a33 - a23 * a31) + a13 * (a21 * r3 - r2 * a31)) / det;
                double r = (a11 * (a22 * r3 - r2 * a32) - a12 * (a21 * r3 - r2 * a31) + r1 * (a21 * a32 - a22 * a31)) / det;
                if (r > bestR && feasible(cx, cy, r)) {
                    bestR = r;
                    bestC = {cx, cy};
                }
            }
    if (bestR <= 0) throw std::runtime_error("chebyshev_center: degenerate polygon");
    center = bestC;
    radius = bestR;
}

inline FatnessCert fatten(const ConvexBody& b) {
    FatnessCert c;
    int d = b.dim;
    c.linScale.assign(d, 1.0);
    c.offset.assign(d, 0.0);
    switch (b.kind) {
        case BodyKind::Ball:
            c.inRadius = c.outRadius = 1.0;
            break;
        case BodyKind::AxisBox:
            for (int i = 0; i < d; ++i) c.linScale[i] = 1.0 / b.halfWidths[i];
            c.inRadius = 1.0;
            c.outRadius = std::sqrt(static_cast<double>(d));
            break;
        default: {
            Point ctr;
            double r;
            chebyshev_center(b, ctr, r);
            c.offset = {-ctr[0], -ctr[1]};
            c.inRadius = r;
            c.outRadius = 0;
            for (const Point& v : b.vertices) c.outRadius = std::max(c.outRadius, dist(v, ctr));
            break;
        }
    }
    c.alpha = c.inRadius / c.outRadius;
    return c;
}

// --------------------------------------------------------------------------
// hitting sets

// Point set hitting every homothet C' with C' ∩ C != ∅ and coefficient
// >= minCoeff.  Axis grid in fattened coordinates, spacing 2*minCoeff/sqrt(d)
// over the open cube of half-width (2+minCoeff)*rho where rho >= outR/inR.
inline PointSet hitting_set(const ConvexBody& b, double minCoeff) {
    if (!(minCoeff > 0) || minCoeff > 1.0) throw std::invalid_argument("hitting_set: minCoeff must be in (0, 1]");
    FatnessCert cert = fatten(b);
    int d = b.dim;
    double rho = std::max(static_cast<double>(d), cert.outRadius / cert.inRadius);
    double spacing = 2.0 * minCoeff / std::sqrt(static_cast<double>(d));
    double halfWidth = (2.0 + minCoeff) * rho;
    std::vector<double> axis;  // grid coordinates at half-spacing offsets
    for (int j = 0;; ++j) {
        double cj = (j + 0.5) * spacing;
        if (cj >= halfWidth) break;
        axis.push_back(cj);
    }
    std::vector<double> coords;
    for (std::size_t i = axis.size(); i-- > 0;) coords.push_back(-axis[i]);
    for (double cj : axis) coords.push_back(cj);

    PointSet out;
    std::vector<std::size_t> c(d, 0);
    while (true) {
        Point y(d);
        for (int i = 0; i < d; ++i) y[i] = coords[c[i]] * cert.inRadius;
        out.push_back(cert.invert(y));
        int i = 0;
        for (; i < d; ++i) {
            if (++c[i] < coords.size()) break;
            c[i] = 0;
        }
        if (i == d) break;
    }
    return out;
}

// Smallest homothet centered at p covering at least m points of S:
// scale = m-th smallest gauge(s - p) over s in S.
inline Homothet smallest_homothet_at(const ConvexBody& b, const Point& p, const PointSet& S, int m) {
    if (m < 1 || static_cast<std::size_t>(m) > S.size())
        throw std::invalid_argument("smallest_homothet_at: m out of range");
    std::vector<double> g(S.size());
    for (std::size_t i = 0; i < S.size(); ++i) g[i] = gauge_between(b, p, S[i]);
    std::nth_element(g.begin(), g.begin() + (m - 1), g.end());
    return Homothet{p, g[m - 1]};
}

// circumcenter of three points; false if (near-)collinear
inline bool circumcenter(const Point& a, const Point& b, const Point& c, Point& out) {
    double ax = b[0] - a[0], ay = b[1] - a[1];
    double bx = c[0] - a[0], by = c[1] - a[1];
    double d = 2.0 * (ax * by - ay * bx);
    double scale = std::abs(ax) + std::abs(ay) + std::abs(bx) + std::abs(by);
    if (std::abs(d) < 1e-12 * scale * scale) return false;
    double a2 = ax * ax + ay * ay, b2 = bx * bx + by * by;
    out = {a[0] + (by * a2 - ay * b2) / d, a[1] + (ax * b2 - bx * a2) / d};
    return true;
}

// indices of the convex hull in CCW order (collinear points dropped)
inline std::vector<int> convex_hull(const PointSet& P) {
    int n = static_cast<int>(P.size());
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        return P[a][0] < P[b][0] || (P[a][0] == P[b][0] && P[a][1] < P[b][1]);
    });
    idx.erase(std::unique(idx.begin(), idx.end(), [&](int a, int b) { return P[a] == P[b]; }), idx.end());
    if (idx.size() < 3) return idx;
    auto turn = [&](int a, int b, int c) { return cross2(sub(P[b], P[a]), sub(P[c], P[b])); };
    std::vector<int> h;
    for (int pass = 0; pass < 2; ++pass) {
        std::size_t base = h.size();
        for (int i : idx) {
            while (h.size() >= base + 2 && turn(h[h.size() - 2], h.back(), i) <= 0) h.pop_back();
            h.push_back(i);
        }
        h.pop_back();
        std::reverse(idx.begin(), idx.end());
    }
    return h;
}

// axis-aligned bounding box of a point set
inline void bounding_box(const PointSet& S, Point& lo, Point& hi) {
    if (S.empty()) throw std::invalid_argument("bounding_box: empty point set");
    lo = hi = S[0];
    for (const Point& p : S)
        for (std::size_t i = 0; i < p.size(); ++i) {
            lo[i] = std::min(lo[i], p[i]);
            hi[i] = std::max(hi[i], p[i]);
        }
}

inline double bbox_diameter(const PointSet& S) {
    Point lo, hi;
    bounding_box(S, lo, hi);
    return dist(lo, hi);
}

}  // namespace covpack
