#include <doctest.h>

#include <random>

#include "radcen/geometry.hpp"
#include "support.hpp"

using namespace radcen;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("polygon validation rejects degenerate input") {
    CHECK(code_of([] { Polygon({{0, 0}, {1, 0}}); }) == ErrorCode::InvalidBody);
    CHECK(code_of([] { Polygon({{0, 0}, {1, 0}, {2, 0}}); }) == ErrorCode::InvalidBody);
    CHECK(code_of([] { Polygon({{0, 0}, {1, 0}, {1, 0}, {0, 1}}); }) == ErrorCode::InvalidBody);
    CHECK(code_of([] { Polygon({{0, 0}, {1, 1}, {1, 0}, {0, 1}}); }) == ErrorCode::InvalidBody);
    CHECK(code_of([] { Disk({0, 0}, 0.0); }) == ErrorCode::InvalidBody);
}

TEST_CASE("clockwise input is reoriented") {
    const Polygon p({{0, 0}, {0, 1}, {1, 1}, {1, 0}});
    CHECK(p.area() == doctest::Approx(1.0));
    CHECK(signed_area(p.vertices()) > 0);
}

TEST_CASE("area, centroid and diameter match shoelace on random polygons") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
        const auto v = oracle::random_convex(rng);
        const Polygon p(v);
        const Point c = oracle::centroid_of(v);
        CHECK(p.area() == doctest::Approx(std::abs(oracle::shoelace(v))).epsilon(1e-13));
        CHECK(distance(p.centroid(), c) < 1e-12 * p.diameter());
        CHECK(p.is_convex());
    }
}

TEST_CASE("non-convex polygons are detected") {
    const Polygon l({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}});
    CHECK_FALSE(l.is_convex());
    CHECK(l.area() == doctest::Approx(3.0));
    CHECK(l.contains({0.5, 1.5}));
    CHECK_FALSE(l.contains({1.5, 1.5}));
}

TEST_CASE("circumcenter matches brute-force enclosing circle") {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 40; ++i) {
        const auto v = oracle::random_convex(rng, 9);
        const Circle c = circumcenter(Body{Polygon(v)});
        const Circle o = oracle::brute_enclosing(v);
        CHECK(c.radius == doctest::Approx(o.radius).epsilon(1e-10));
        CHECK(distance(c.center, o.center) < 1e-9 * o.radius);
    }
    const Circle d = circumcenter(Body{Disk({1, 2}, 3)});
    CHECK(d.radius == 3.0);
}

TEST_CASE("incenter radius matches brute-force search") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 20; ++i) {
        const auto v = oracle::random_convex(rng);
        const Polygon p(v);
        const Incircle ic = incenter(Body{p});
        CHECK(ic.radius == doctest::Approx(oracle::brute_inradius(v)).epsilon(1e-10));
        CHECK(std::abs(oracle::edge_distance(v, ic.center) - ic.radius) <= 2e-9 * p.diameter());
    }
    const Incircle sq = incenter(Body{Polygon({{0, 0}, {4, 0}, {4, 2}, {0, 2}})});
    CHECK(sq.radius == doctest::Approx(1.0));
    CHECK(sq.center.x == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("circle_clip measure matches dense circle sampling") {
    std::mt19937_64 rng(14);
    std::uniform_real_distribution<double> u(0.05, 3.0);
    const std::vector<Point> l{{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}};
    const Body bl{Polygon(l)};
    for (int i = 0; i < 40; ++i) {
        const auto v = i % 2 ? oracle::random_convex(rng) : l;
        const Body b = i % 2 ? Body{Polygon(v)} : bl;
        const Point x = centroid(b) + Vec2{0.2, -0.1};
        const double r = u(rng);
        const ArcSet a = circle_clip(b, x, r);
        const auto s = oracle::sample_circle([&](const Point& p) { return oracle::inside_polygon(v, p); }, x, r, 400000);
        CHECK(a.measure() == doctest::Approx(s.measure).epsilon(1e-4).scale(kTwoPi));
        CHECK(a.measure() + a.complement().measure() == doctest::Approx(kTwoPi));
    }
}

TEST_CASE("circle_clip on a disk is exact") {
    const Body d{Disk({0, 0}, 1)};
    CHECK(circle_clip(d, {0, 0}, 0.5).is_full());
    CHECK(circle_clip(d, {0, 0}, 1.5).measure() == 0.0);
    // Lens angle from the law of cosines.
    const double half = std::acos((0.25 + 1.0 - 1.0) / (2 * 0.5 * 1.0));
    CHECK(circle_clip(d, {0.5, 0}, 1.0).measure() == doctest::Approx(2 * half));
}

TEST_CASE("radial function and star-shape failure") {
    const Body sq{Polygon({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}})};
    CHECK(radial_function(sq, {0, 0}, 0.0) == doctest::Approx(1.0));
    CHECK(radial_function(sq, {0, 0}, kPi / 4) == doctest::Approx(std::sqrt(2.0)));
    const Body u{Polygon({{0, 0}, {3, 0}, {3, 3}, {2, 3}, {2, 1}, {1, 1}, {1, 3}, {0, 3}})};
    CHECK_THROWS_AS(radial_function(u, {0.5, 2.5}, 0.0), Error);
}

TEST_CASE("unfolded region: centroid inside, refinement nests, offsets below support") {
    std::mt19937_64 rng(15);
    for (int i = 0; i < 10; ++i) {
        const Polygon p(oracle::random_convex(rng));
        const double tol = 1e-9 * p.diameter();
        const UnfoldedRegion coarse = unfolded_region(p, 64);
        const UnfoldedRegion fine = unfolded_region(p, 256);
        CHECK(coarse.contains(p.centroid(), tol));
        for (const Point& q : fine.outline) CHECK(coarse.contains(q, tol));
        for (std::size_t k = 0; k < coarse.directions.size(); ++k) {
            double support = -1e300;
            for (const Point& v : p.vertices()) support = std::max(support, dot(v, coarse.directions[k]));
            CHECK(coarse.offsets[k] <= support + tol);
        }
    }
}

TEST_CASE("maximal folding of a symmetric body is at the symmetry line") {
    const Polygon sq({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}});
    CHECK(maximal_folding(sq, {1, 0}) == doctest::Approx(0.0).epsilon(1e-9));
    const Polygon tri({{0, 0}, {4, 0}, {0, 3}});
    // Folding along x = l keeps the reflected cap inside while l >= 2 for this triangle's base.
    const double l = maximal_folding(tri, {1, 0});
    CHECK(l > 0.0);
    CHECK(l < 4.0);
}

TEST_CASE("radial arc body geometry") {
    std::vector<double> knots{1.0, 1.02, 1.05};
    const RadialArcBody b(1.05, {0.0, 2.0, 4.0}, knots, {std::vector<double>{0.3, 0.2, 0.0}, {0.3, 0.2, 0.0}, {0.3, 0.2, 0.0}});
    CHECK(b.radial_function(1.0) == doctest::Approx(1.0));
    CHECK(b.radial_function(0.0) == doctest::Approx(1.05));
    // Area against a fine trapezoid rule on the radial function.
    double a = 0.0;
    const int n = 400000;
    for (int k = 0; k < n; ++k) a += 0.5 * std::pow(b.radial_function(kTwoPi * (k + 0.5) / n), 2) * kTwoPi / n;
    CHECK(b.area() == doctest::Approx(a).epsilon(1e-7));
    CHECK(b.contains({0.5, 0.5}));
    CHECK_FALSE(b.contains({1.04, 0.5}));
}

TEST_CASE("transformed polygons keep area") {
    const Polygon p({{0, 0}, {4, 0}, {0, 3}});
    const Polygon q = transformed(p, 0.7, {1, 2}, 2.0);
    CHECK(q.area() == doctest::Approx(4 * p.area()));
}
