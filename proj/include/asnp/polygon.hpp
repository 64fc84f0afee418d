#pragma once

#include "asnp/padic.hpp"
#include "asnp/rational.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace asnp {

/// (n, ord c_n) with an exact or lower-bound ordinate.
struct ValuationPoint {
    int index = 0;
    Valuation val;

    friend bool operator==(const ValuationPoint&, const ValuationPoint&) = default;
};

using Vertex = std::pair<int, Rational>;
using SlopeMult = std::pair<Rational, int>;

class NewtonPolygon {
public:
    std::vector<Vertex> vertices;
    std::vector<SlopeMult> slopes;
    bool certified = false;
    /// Abscissae where the data does not pin the polygon (empty when certified).
    std::vector<int> blocking;
    /// Input data, kept for plotting.
    std::vector<ValuationPoint> points;

    int length() const { return vertices.empty() ? 0 : vertices.back().first - vertices.front().first; }

    /// Piecewise-linear value at an integer abscissa within range.
    Rational value_at(int x) const {
        if (vertices.empty() || x < vertices.front().first || x > vertices.back().first)
            throw std::out_of_range("NewtonPolygon::value_at: abscissa outside the polygon");
        for (size_t k = 1; k < vertices.size(); ++k) {
            const auto& [x0, y0] = vertices[k - 1];
            const auto& [x1, y1] = vertices[k];
            if (x <= x1) return y0 + (y1 - y0) * Rational(x - x0, x1 - x0);
        }
        return vertices.back().second;
    }

    /// Slopes with multiplicity expanded, nondecreasing.
    std::vector<Rational> slope_list() const {
        std::vector<Rational> out;
        for (const auto& [s, m] : slopes) out.insert(out.end(), static_cast<size_t>(m), s);
        return out;
    }

    /// "{1/2, 3/4 x2, 1}"
    std::string slopes_string() const {
        std::string out = "{";
        for (size_t k = 0; k < slopes.size(); ++k) {
            if (k) out += ", ";
            out += to_string(slopes[k].first);
            if (slopes[k].second > 1) out += " x" + std::to_string(slopes[k].second);
        }
        return out + "}";
    }
};

namespace detail {

inline Rational cross(const Vertex& o, const Vertex& a, const Vertex& b) {
    return Rational(a.first - o.first) * (b.second - o.second) - (a.second - o.second) * Rational(b.first - o.first);
}

inline NewtonPolygon polygon_from_vertices(std::vector<Vertex> v) {
    NewtonPolygon P;
    P.vertices = std::move(v);
    for (size_t k = 1; k < P.vertices.size(); ++k) {
        const int dx = P.vertices[k].first - P.vertices[k - 1].first;
        const Rational s = (P.vertices[k].second - P.vertices[k - 1].second) / Rational(dx);
        if (!P.slopes.empty() && P.slopes.back().first == s) P.slopes.back().second += dx;
        else P.slopes.emplace_back(s, dx);
    }
    for (size_t k = 1; k < P.slopes.size(); ++k)
        if (!(P.slopes[k - 1].first < P.slopes[k].first))
            throw std::logic_error("NewtonPolygon: slopes are not increasing");
    return P;
}

/// Monotone-chain lower hull of points sorted by abscissa.
inline std::vector<Vertex> hull_vertices(std::vector<Vertex> pts) {
    std::sort(pts.begin(), pts.end());
    std::vector<Vertex> h;
    for (const auto& pt : pts) {
        while (h.size() >= 2 && cross(h[h.size() - 2], h.back(), pt) <= Rational(0)) h.pop_back();
        h.push_back(pt);
    }
    return h;
}

}  // namespace detail

/// Lower convex hull. Bound-only points participate at their bound; the
/// result is marked certified only when every point is exact.
inline NewtonPolygon lower_hull(const std::vector<ValuationPoint>& points) {
    if (points.empty()) throw std::invalid_argument("lower_hull: no points");
    std::vector<ValuationPoint> sorted = points;
    std::sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) { return x.index < y.index; });
    for (size_t k = 1; k < sorted.size(); ++k)
        if (sorted[k].index == sorted[k - 1].index) throw std::invalid_argument("lower_hull: repeated abscissa");
    if (!sorted.front().val.exact || !sorted.back().val.exact)
        throw std::invalid_argument("lower_hull: endpoints must be exact");
    std::vector<Vertex> v;
    bool all_exact = true;
    for (const auto& pt : sorted) {
        v.emplace_back(pt.index, pt.val.value);
        all_exact = all_exact && pt.val.exact;
    }
    NewtonPolygon P = detail::polygon_from_vertices(detail::hull_vertices(std::move(v)));
    P.certified = all_exact;
    P.points = sorted;
    return P;
}

/// Slopes a·k/d, k = 1..d-1.
inline NewtonPolygon hodge_polygon(int d, int a) {
    if (d < 2) throw std::invalid_argument("hodge_polygon: d must be >= 2");
    std::vector<Vertex> v;
    for (int k = 0; k < d; ++k) v.emplace_back(k, Rational(a * k * (k + 1), 2 * d));
    NewtonPolygon P = detail::polygon_from_vertices(std::move(v));
    P.certified = true;
    return P;
}

/// Reflect known ordinates through the centre of symmetry: t_(D-i) >= t_i + a·D/2 - a·i,
/// D = d-1. The endpoint (D, a·D/2) is emitted as exact.
inline std::vector<ValuationPoint> symmetry_bounds(const std::vector<ValuationPoint>& known, int d, int a) {
    const int D = d - 1;
    const Rational top(a * D, 2);
    std::vector<ValuationPoint> out;
    out.push_back({D, Valuation::exact_at(top)});
    for (const auto& pt : known) {
        if (pt.index <= 0 || pt.index >= D) continue;
        out.push_back({D - pt.index, Valuation::at_least(pt.val.value + top - Rational(a * pt.index))});
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.index < y.index; });
    return out;
}

/// Certify the Newton polygon of a degree D = d-1 polynomial with symmetric
/// slopes (α <-> a-α) from coefficient data. Each point gives either the exact
/// order of a coefficient or a lower bound for it.
///   upper envelope U: hull of the exact points, their mirror images and the endpoints;
///   lower envelope L: hull of the strongest lower bound available at each abscissa
///                     (own data, mirrored data, Hodge bound).
/// The polygon is certified when L and U coincide at every abscissa.
inline NewtonPolygon certify(const std::vector<ValuationPoint>& exact, const std::vector<ValuationPoint>& bounds, int d, int a) {
    const int D = d - 1;
    if (D < 0) throw std::invalid_argument("certify: d must be >= 1");
    const Rational top(a * D, 2);
    auto mirror = [&](int i, const Rational& v) { return v + top - Rational(a * i); };

    std::map<int, Rational> upper;
    std::vector<std::optional<Rational>> lower(static_cast<size_t>(D + 1));
    auto raise = [&](int i, const Rational& v) {
        auto& slot = lower[static_cast<size_t>(i)];
        if (!slot || *slot < v) slot = v;
    };
    auto lower_upper = [&](int i, const Rational& v) {
        auto it = upper.find(i);
        if (it == upper.end() || v < it->second) upper[i] = v;
    };
    lower_upper(0, Rational(0));
    lower_upper(D, top);
    raise(0, Rational(0));
    raise(D, top);
    for (const auto& pt : exact) {
        if (!pt.val.exact) throw std::invalid_argument("certify: exact list contains a bound");
        if (pt.index < 0 || pt.index > D) continue;
        lower_upper(pt.index, pt.val.value);
        lower_upper(D - pt.index, mirror(pt.index, pt.val.value));
        raise(pt.index, pt.val.value);
        raise(D - pt.index, mirror(pt.index, pt.val.value));
    }
    for (const auto& pt : bounds) {
        if (pt.index < 0 || pt.index > D) continue;
        raise(pt.index, pt.val.value);
        raise(D - pt.index, mirror(pt.index, pt.val.value));
    }
    if (D >= 1) {
        const NewtonPolygon H = hodge_polygon(d, a);
        for (int i = 0; i <= D; ++i) raise(i, H.value_at(i));
    }

    std::vector<Vertex> up(upper.begin(), upper.end());
    std::vector<Vertex> lo;
    for (int i = 0; i <= D; ++i) lo.emplace_back(i, *lower[static_cast<size_t>(i)]);
    const NewtonPolygon U = detail::polygon_from_vertices(detail::hull_vertices(up));
    const NewtonPolygon L = detail::polygon_from_vertices(detail::hull_vertices(lo));

    std::vector<int> blocking;
    for (int i = 0; i <= D; ++i)
        if (L.value_at(i) != U.value_at(i)) blocking.push_back(i);

    std::vector<ValuationPoint> data;
    for (const auto& pt : exact) data.push_back(pt);
    for (const auto& pt : bounds) data.push_back(pt);
    std::sort(data.begin(), data.end(), [](const auto& x, const auto& y) { return x.index < y.index; });

    NewtonPolygon P;
    if (blocking.empty()) {
        P = U;
        P.certified = true;
    } else {
        // Best available estimate: hull of all data at face value, uncertified.
        std::map<int, Rational> face(upper.begin(), upper.end());
        for (const auto& pt : bounds)
            if (pt.index >= 0 && pt.index <= D && !face.count(pt.index)) face[pt.index] = pt.val.value;
        P = detail::polygon_from_vertices(detail::hull_vertices({face.begin(), face.end()}));
        P.certified = false;
        P.blocking = std::move(blocking);
    }
    P.points = std::move(data);
    return P;
}

/// Difference between two slope multisets.
struct PolygonDiff {
    std::vector<SlopeMult> only_left;
    std::vector<SlopeMult> only_right;
};

inline PolygonDiff polygon_diff(const NewtonPolygon& P, const NewtonPolygon& Q) {
    std::map<Rational, int> m;
    for (const auto& [s, k] : P.slopes) m[s] += k;
    for (const auto& [s, k] : Q.slopes) m[s] -= k;
    PolygonDiff d;
    for (const auto& [s, k] : m) {
        if (k > 0) d.only_left.emplace_back(s, k);
        if (k < 0) d.only_right.emplace_back(s, -k);
    }
    return d;
}

/// Exact slope-multiset equality of two certified polygons.
inline bool polygon_eq(const NewtonPolygon& P, const NewtonPolygon& Q, PolygonDiff* diff = nullptr) {
    if (!P.certified || !Q.certified) throw std::invalid_argument("polygon_eq: both polygons must be certified");
    PolygonDiff d = polygon_diff(P, Q);
    const bool eq = d.only_left.empty() && d.only_right.empty();
    if (diff) *diff = std::move(d);
    return eq;
}

/// True when the slope multiset is invariant under α -> a - α.
inline bool slopes_symmetric(const NewtonPolygon& P, int a) {
    std::map<Rational, int> m;
    for (const auto& [s, k] : P.slopes) m[s] += k;
    for (const auto& [s, k] : m) {
        auto it = m.find(Rational(a) - s);
        if (it == m.end() || it->second != k) return false;
    }
    return true;
}

/// True when P lies on or above Q at every common integer abscissa.
inline bool lies_above(const NewtonPolygon& P, const NewtonPolygon& Q) {
    if (P.vertices.empty() || Q.vertices.empty()) return true;
    const int lo = std::max(P.vertices.front().first, Q.vertices.front().first);
    const int hi = std::min(P.vertices.back().first, Q.vertices.back().first);
    for (int x = lo; x <= hi; ++x)
        if (P.value_at(x) < Q.value_at(x)) return false;
    return true;
}

/// Drop the leading slope-0 segment of length one (the (1 - s) factor of the
/// torus L-function) and shift the polygon left.
inline NewtonPolygon strip_trivial_factor(const NewtonPolygon& P) {
    if (P.slopes.empty() || P.slopes.front().first != Rational(0))
        throw std::invalid_argument("strip_trivial_factor: polygon has no slope-0 segment");
    std::vector<Vertex> v{{0, Rational(0)}};
    Rational y(0);
    int x = 0;
    bool skipped = false;
    for (auto [s, k] : P.slopes) {
        if (!skipped) {
            skipped = true;
            if (--k == 0) continue;
        }
        x += k;
        y += s * Rational(k);
        v.emplace_back(x, y);
    }
    NewtonPolygon Q = detail::polygon_from_vertices(std::move(v));
    Q.certified = P.certified;
    return Q;
}

/// Inverse of strip_trivial_factor: prepend one slope-0 segment.
inline NewtonPolygon with_trivial_factor(const NewtonPolygon& P) {
    std::vector<Vertex> v{{0, Rational(0)}};
    int x = 1;
    Rational y(0);
    bool first = true;
    for (auto [s, k] : P.slopes) {
        // a leading slope 0 merges with the new segment
        if (!(first && s == Rational(0))) v.emplace_back(x, y);
        first = false;
        x += k;
        y += s * Rational(k);
    }
    v.emplace_back(x, y);
    NewtonPolygon Q = detail::polygon_from_vertices(std::move(v));
    Q.certified = P.certified;
    return Q;
}

/// Standalone SVG: polygon in black, Hodge bound in red, data points as dots.
/// Pass hodge = nullptr to omit the bound. Output depends only on the inputs.
inline std::string to_svg(const NewtonPolygon& P, const NewtonPolygon* hodge = nullptr, const std::string& title = "") {
    const int W = 480, H = 360, margin = 40;
    int xmax = 1;
    double ymax = 1.0;
    auto grow = [&](int x, const Rational& y) {
        xmax = std::max(xmax, x);
        ymax = std::max(ymax, to_double(y));
    };
    for (const auto& [x, y] : P.vertices) grow(x, y);
    if (hodge)
        for (const auto& [x, y] : hodge->vertices) grow(x, y);
    for (const auto& pt : P.points) grow(pt.index, pt.val.value);
    const double sx = double(W - 2 * margin) / xmax;
    const double sy = double(H - 2 * margin) / ymax;
    auto X = [&](double x) { return margin + x * sx; };
    auto Y = [&](double y) { return H - margin - y * sy; };
    auto fmt = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.2f", v);
        return std::string(buf);
    };
    auto polyline = [&](const std::vector<Vertex>& vs, const char* colour) {
        std::string s = "  <polyline fill=\"none\" stroke=\"" + std::string(colour) + "\" stroke-width=\"2\" points=\"";
        for (size_t k = 0; k < vs.size(); ++k) {
            if (k) s += ' ';
            s += fmt(X(vs[k].first)) + "," + fmt(Y(to_double(vs[k].second)));
        }
        return s + "\"/>\n";
    };

    std::ostringstream o;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\" viewBox=\"0 0 " << W
      << ' ' << H << "\">\n";
    o << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    o << "  <line x1=\"" << margin << "\" y1=\"" << H - margin << "\" x2=\"" << W - margin / 2 << "\" y2=\"" << H - margin
      << "\" stroke=\"gray\"/>\n";
    o << "  <line x1=\"" << margin << "\" y1=\"" << H - margin << "\" x2=\"" << margin << "\" y2=\"" << margin / 2
      << "\" stroke=\"gray\"/>\n";
    for (int x = 0; x <= xmax; ++x)
        o << "  <text x=\"" << fmt(X(x)) << "\" y=\"" << H - margin + 16 << "\" font-size=\"11\" text-anchor=\"middle\">"
          << x << "</text>\n";
    if (!title.empty())
        o << "  <text x=\"" << W / 2 << "\" y=\"" << margin / 2 << "\" font-size=\"13\" text-anchor=\"middle\">" << title
          << "</text>\n";
    if (hodge && hodge->vertices.size() >= 2) o << polyline(hodge->vertices, "red");
    if (P.vertices.size() >= 2) o << polyline(P.vertices, "black");
    for (const auto& pt : P.points)
        o << "  <circle cx=\"" << fmt(X(pt.index)) << "\" cy=\"" << fmt(Y(to_double(pt.val.value))) << "\" r=\"3\" fill=\""
          << (pt.val.exact ? "black" : "white") << "\" stroke=\"black\"/>\n";
    for (const auto& [x, y] : P.vertices)
        o << "  <circle class=\"vertex\" cx=\"" << fmt(X(x)) << "\" cy=\"" << fmt(Y(to_double(y)))
          << "\" r=\"4\" fill=\"blue\" data-x=\"" << x << "\" data-y=\"" << to_string(y) << "\"/>\n";
    o << "</svg>\n";
    return o.str();
}

}  // namespace asnp
