#include "asnp/polygon.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace asnp;

namespace {

ValuationPoint ex(int i, Rational v) { return {i, Valuation::exact_at(v)}; }
ValuationPoint lb(int i, Rational v) { return {i, Valuation::at_least(v)}; }
Rational R(long long n, long long d = 1) { return Rational(n, d); }

std::vector<Rational> expand(std::initializer_list<std::pair<Rational, int>> s) {
    std::vector<Rational> out;
    for (const auto& [v, k] : s) out.insert(out.end(), static_cast<size_t>(k), v);
    return out;
}

/// Brute-force lower hull value at x: minimum over all chords through data points.
Rational brute_hull_at(const std::vector<std::pair<int, Rational>>& pts, int x) {
    std::optional<Rational> best;
    for (const auto& [x0, y0] : pts)
        for (const auto& [x1, y1] : pts) {
            if (x0 > x || x1 < x) continue;
            Rational v = x0 == x1 ? y0 : y0 + (y1 - y0) * Rational(x - x0, x1 - x0);
            if (!best || v < *best) best = v;
        }
    return *best;
}

NewtonPolygon figure1() {
    return lower_hull({ex(0, R(0)), ex(1, R(1, 2)), ex(2, R(5, 4)), ex(3, R(2)), ex(4, R(3)), ex(5, R(17, 4)),
                       ex(6, R(11, 2)), ex(7, R(7))});
}

NewtonPolygon figure2() { return lower_hull({ex(0, R(0)), ex(1, R(1, 2)), ex(6, R(11, 2)), ex(7, R(7))}); }

}  // namespace

TEST(LowerHull, Figure1Data) {
    const auto P = figure1();
    EXPECT_EQ(P.slope_list(), expand({{R(1, 2), 1}, {R(3, 4), 2}, {R(1), 1}, {R(5, 4), 2}, {R(3, 2), 1}}));
    std::vector<int> xs;
    for (const auto& v : P.vertices) xs.push_back(v.first);
    EXPECT_EQ(xs, (std::vector<int>{0, 1, 3, 4, 6, 7}));
    EXPECT_TRUE(P.certified);
}

TEST(LowerHull, SmallCases) {
    auto P = lower_hull({ex(0, R(0)), ex(1, R(1))});
    EXPECT_EQ(P.slope_list(), expand({{R(1), 1}}));
    P = lower_hull({ex(0, R(0)), ex(1, R(5)), ex(2, R(1))});
    ASSERT_EQ(P.vertices.size(), 2u);
    EXPECT_EQ(P.vertices[1], (Vertex{2, R(1)}));
    EXPECT_EQ(P.slopes, (std::vector<SlopeMult>{{R(1, 2), 2}}));
}

TEST(LowerHull, Errors) {
    EXPECT_THROW(lower_hull({ex(0, R(0)), lb(2, R(1))}), std::invalid_argument);
    EXPECT_THROW(lower_hull({ex(0, R(0)), ex(0, R(1)), ex(2, R(1))}), std::invalid_argument);
    EXPECT_THROW(lower_hull({}), std::invalid_argument);
}

TEST(LowerHull, RandomAgainstBruteForce) {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = std::uniform_int_distribution<int>(1, 9)(rng);
        std::vector<ValuationPoint> pts;
        std::vector<std::pair<int, Rational>> raw;
        for (int i = 0; i <= n; ++i) {
            if (i != 0 && i != n && rng() % 3 == 0) continue;
            Rational y(std::uniform_int_distribution<int>(0, 40)(rng), std::uniform_int_distribution<int>(1, 4)(rng));
            pts.push_back(ex(i, y));
            raw.emplace_back(i, y);
        }
        const auto P = lower_hull(pts);
        for (int x = 0; x <= n; ++x) EXPECT_EQ(P.value_at(x), brute_hull_at(raw, x));
        // slopes nondecreasing and idempotent
        std::vector<ValuationPoint> vs;
        for (const auto& [x, y] : P.vertices) vs.push_back(ex(x, y));
        EXPECT_EQ(lower_hull(vs).vertices, P.vertices);
    }
}

TEST(Hodge, Examples) {
    auto H = hodge_polygon(8, 2);
    EXPECT_EQ(H.slope_list(), expand({{R(1, 4), 1}, {R(1, 2), 1}, {R(3, 4), 1}, {R(1), 1}, {R(5, 4), 1}, {R(3, 2), 1}, {R(7, 4), 1}}));
    EXPECT_EQ(H.vertices.back(), (Vertex{7, R(7)}));
    EXPECT_EQ(hodge_polygon(2, 1).slope_list(), expand({{R(1, 2), 1}}));
    EXPECT_EQ(hodge_polygon(3, 1).slope_list(), expand({{R(1, 3), 1}, {R(2, 3), 1}}));
    EXPECT_THROW(hodge_polygon(1, 1), std::invalid_argument);
    for (int d = 2; d < 12; ++d)
        for (int a = 1; a <= 3; ++a) EXPECT_TRUE(slopes_symmetric(hodge_polygon(d, a), a));
}

TEST(Symmetry, BoundsFromFigure1Data) {
    const auto b = symmetry_bounds({ex(1, R(1, 2)), ex(2, R(5, 4)), ex(3, R(2))}, 8, 2);
    std::map<int, ValuationPoint> by;
    for (const auto& pt : b) by[pt.index] = pt;
    EXPECT_EQ(by.at(4).val, Valuation::at_least(R(3)));
    EXPECT_EQ(by.at(5).val, Valuation::at_least(R(17, 4)));
    EXPECT_EQ(by.at(6).val, Valuation::at_least(R(11, 2)));
    EXPECT_EQ(by.at(7).val, Valuation::exact_at(R(7)));
}

TEST(Symmetry, BoundsFromCounterexampleData) {
    const auto b = symmetry_bounds({ex(1, R(1, 2)), lb(2, R(2)), lb(3, R(3))}, 8, 2);
    std::map<int, Valuation> by;
    for (const auto& pt : b) by[pt.index] = pt.val;
    EXPECT_EQ(by.at(4), Valuation::at_least(R(4)));
    EXPECT_EQ(by.at(5), Valuation::at_least(R(5)));
    EXPECT_EQ(by.at(6), Valuation::at_least(R(11, 2)));
}

TEST(Symmetry, IndexZeroGivesExactEndpoint) {
    const auto b = symmetry_bounds({ex(0, R(0))}, 8, 2);
    ASSERT_EQ(b.size(), 1u);
    EXPECT_EQ(b[0].index, 7);
    EXPECT_TRUE(b[0].val.exact);
    EXPECT_EQ(b[0].val.value, R(7));
}

TEST(Certify, Figure1Data) {
    const auto P = certify({ex(0, R(0)), ex(1, R(1, 2)), ex(2, R(5, 4)), ex(3, R(2))},
                           {lb(4, R(3)), lb(5, R(17, 4)), lb(6, R(11, 2))}, 8, 2);
    EXPECT_TRUE(P.certified);
    EXPECT_EQ(P.slope_list(), figure1().slope_list());
}

TEST(Certify, CounterexampleData) {
    const auto P = certify({ex(1, R(1, 2))}, {lb(2, R(2)), lb(3, R(3))}, 8, 2);
    EXPECT_TRUE(P.certified);
    EXPECT_EQ(P.slope_list(), expand({{R(1, 2), 1}, {R(1), 5}, {R(3, 2), 1}}));
}

TEST(Certify, NoInteriorData) {
    EXPECT_TRUE(certify({ex(0, R(0))}, {}, 2, 1).certified);
    const auto P = certify({ex(0, R(0))}, {}, 3, 1);
    EXPECT_FALSE(P.certified);
    EXPECT_EQ(P.blocking, (std::vector<int>{1}));
}

TEST(Certify, WeakBoundBlocks) {
    // t_2 only known to be >= 1 cannot exclude a vertex below the chord
    const auto P = certify({ex(1, R(1, 2))}, {lb(2, R(1)), lb(3, R(3))}, 8, 2);
    EXPECT_FALSE(P.certified);
    EXPECT_FALSE(P.blocking.empty());
}

TEST(Certify, MonotoneRobustness) {
    // raising bound points that are not vertices leaves a certified result unchanged
    const auto base = certify({ex(1, R(1, 2))}, {lb(2, R(2)), lb(3, R(3))}, 8, 2);
    const auto raised = certify({ex(1, R(1, 2))}, {lb(2, R(5)), lb(3, R(9))}, 8, 2);
    EXPECT_TRUE(raised.certified);
    EXPECT_EQ(raised.vertices, base.vertices);
}

TEST(PolygonEq, Figures) {
    PolygonDiff d;
    EXPECT_FALSE(polygon_eq(figure1(), figure2(), &d));
    EXPECT_EQ(d.only_left, (std::vector<SlopeMult>{{R(3, 4), 2}, {R(5, 4), 2}}));
    EXPECT_EQ(d.only_right, (std::vector<SlopeMult>{{R(1), 4}}));
    EXPECT_TRUE(polygon_eq(figure1(), figure1()));
    NewtonPolygon u = figure1();
    u.certified = false;
    EXPECT_THROW(polygon_eq(u, figure1()), std::invalid_argument);
}

TEST(Polygon, SymmetryAndHodge) {
    EXPECT_TRUE(slopes_symmetric(figure1(), 2));
    EXPECT_TRUE(slopes_symmetric(figure2(), 2));
    EXPECT_FALSE(slopes_symmetric(lower_hull({ex(0, R(0)), ex(1, R(1, 3)), ex(2, R(1))}), 2));
    EXPECT_TRUE(lies_above(figure1(), hodge_polygon(8, 2)));
    EXPECT_TRUE(lies_above(figure2(), hodge_polygon(8, 2)));
    EXPECT_FALSE(lies_above(hodge_polygon(8, 2), figure1()));
}

TEST(Polygon, TrivialFactor) {
    const auto star = lower_hull({ex(0, R(0)), ex(1, R(0)), ex(2, R(1, 2))});
    const auto P = strip_trivial_factor(star);
    EXPECT_EQ(P.slope_list(), expand({{R(1, 2), 1}}));
    EXPECT_EQ(with_trivial_factor(P).vertices, star.vertices);
    EXPECT_THROW(strip_trivial_factor(figure1()), std::invalid_argument);
    const auto empty = strip_trivial_factor(lower_hull({ex(0, R(0)), ex(1, R(0))}));
    EXPECT_TRUE(empty.slopes.empty());
    EXPECT_EQ(with_trivial_factor(empty).slope_list(), expand({{R(0), 1}}));
}

TEST(Svg, DeterministicWithBreakpoints) {
    const auto H = hodge_polygon(8, 2);
    const std::string a = to_svg(figure1(), &H, "fig");
    EXPECT_EQ(a, to_svg(figure1(), &H, "fig"));
    for (int x : {1, 3, 4, 6}) EXPECT_NE(a.find("data-x=\"" + std::to_string(x) + "\""), std::string::npos) << x;
    EXPECT_NE(a.find("stroke=\"red\""), std::string::npos);
    EXPECT_NE(a.find("stroke=\"black\""), std::string::npos);
    const std::string b = to_svg(figure2(), &H);
    EXPECT_NE(b.find("data-x=\"1\""), std::string::npos);
    EXPECT_NE(b.find("data-x=\"6\""), std::string::npos);
    EXPECT_EQ(b.find("data-x=\"3\""), std::string::npos);
}

TEST(Svg, EmptyPolygonHasAxesOnly) {
    NewtonPolygon empty;
    const std::string s = to_svg(empty);
    EXPECT_NE(s.find("<svg"), std::string::npos);
    EXPECT_EQ(s.find("<polyline"), std::string::npos);
}
