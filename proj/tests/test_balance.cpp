#include <doctest.h>

#include <random>

#include "radcen/balance.hpp"
#include "radcen/potentials.hpp"
#include "support.hpp"

using namespace radcen;

namespace {

const std::vector<Point> kTriangle{{0, 0}, {4, 0}, {0, 3}};

}  // namespace

TEST_CASE("vector residual matches circle sampling") {
    std::mt19937_64 rng(51);
    std::uniform_real_distribution<double> u(0.1, 2.5);
    for (int i = 0; i < 30; ++i) {
        const auto v = oracle::random_convex(rng);
        const Body b{Polygon(v)};
        const Point x = centroid(b) + Vec2{0.1, 0.05};
        const double r = u(rng);
        const auto s = oracle::sample_circle([&](const Point& p) { return oracle::inside_polygon(v, p); }, x, r, 400000);
        CHECK(norm(vector_residual(b, x, r) - s.moment) < 1e-4 * r);
    }
}

TEST_CASE("balance at centers of symmetry, not at the 3-4-5 centroid") {
    CHECK(balance_report(Body{Polygon(oracle::regular(3, 1.0, 0.3))}, {0, 0}).balanced);
    CHECK(balance_report(Body{Polygon({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}})}, {0, 0}).balanced);
    CHECK(balance_report(Body{Disk({1, 1}, 2)}, {1, 1}).balanced);
    const BalanceReport r = balance_report(Body{Polygon(kTriangle)}, oracle::centroid_of(kTriangle));
    CHECK_FALSE(r.balanced);
    CHECK(r.sup_residual > 1e-3);
    CHECK(r.radii.size() == r.residual_vectors.size());
    CHECK(std::is_sorted(r.radii.begin(), r.radii.end()));
    CHECK_THROWS_AS(balance_report(Body{Polygon(kTriangle)}, {1, 1}, 8), Error);
}

TEST_CASE("balance is equivalent to stationarity of every potential") {
    const Body sq{Polygon({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}})};
    const Body tri{Polygon(kTriangle)};
    const Point g = oracle::centroid_of(kTriangle);
    double worst = 0.0;
    for (double a : {-1.0, 0.0, 0.5, 1.0, 3.0, 5.0}) {
        CHECK(norm(riesz_gradient(sq, {0, 0}, Riesz{a})) < 1e-10);
        worst = std::max(worst, norm(riesz_gradient(tri, g, Riesz{a})));
    }
    for (double h : {0.3, 1.0, 3.0}) CHECK(norm(poisson_gradient(sq, {0, 0}, Poisson{h})) < 1e-12);
    CHECK(worst > 1e-3);
}

TEST_CASE("complement and split identities") {
    std::mt19937_64 rng(52);
    for (int i = 0; i < 5; ++i) {
        const Body b{Polygon(oracle::random_convex(rng))};
        const EquivalenceReport r = equivalence_check(b, centroid(b));
        CHECK(r.holds);
        CHECK(r.complement_defect < 1e-12);
        CHECK(r.split_defect < 1e-12);
    }
}

TEST_CASE("scalar residual and stationary candidates") {
    const Body a{Polygon({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}})};
    const Body c{Polygon({{1, -1}, {3, -1}, {3, 1}, {1, 1}})};
    WeightedBodyFunction f{{{1.0, a}, {2.0, c}}};
    CHECK(f.mass() == doctest::Approx(12.0));
    // Scalar residual is r·|S_r ∩ Ω| summed with weights; compare with sampling.
    const double r = 1.3;
    const auto sa = oracle::sample_circle([](const Point& p) { return std::abs(p.x) < 1 && std::abs(p.y) < 1; }, {0.5, 0.2}, r, 400000);
    const auto sc = oracle::sample_circle([](const Point& p) { return p.x > 1 && p.x < 3 && std::abs(p.y) < 1; }, {0.5, 0.2}, r, 400000);
    CHECK(scalar_residual(f, {0.5, 0.2}, r) == doctest::Approx(r * (sa.measure + 2 * sc.measure)).epsilon(1e-4));
    const auto cand = stationary_candidate(f);
    REQUIRE(std::holds_alternative<Point>(cand));
    CHECK(distance(std::get<Point>(cand), {(0 + 2 * 4 * 2.0) / 12.0, 0.0}) < 1e-12);
    WeightedBodyFunction zero{{{1.0, a}, {-1.0, Body{Polygon({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}})}}}};
    CHECK(std::holds_alternative<Indeterminate>(stationary_candidate(zero)));
    WeightedBodyFunction shifted{{{1.0, a}, {-1.0, c}}};
    CHECK(std::holds_alternative<NoneExists>(stationary_candidate(shifted)));
}

TEST_CASE("contact points sum to zero exactly for balanced polygons") {
    const ContactSet eq = contact_points(Body{Polygon(oracle::regular(3))}, {0, 0});
    CHECK(eq.points.size() == 3);
    CHECK(norm(eq.sum) < 1e-14);
    std::mt19937_64 rng(53);
    for (int i = 0; i < 20; ++i) {
        const auto v = oracle::random_parallelogram(rng);
        const Polygon p(v);
        const ContactSet cs = contact_points(Body{p}, p.centroid());
        CHECK(cs.points.size() >= 2);
        CHECK(norm(cs.sum) < 1e-12 * p.diameter());
        CHECK(cs.r_star == doctest::Approx(oracle::edge_distance(v, p.centroid())));
    }
    CHECK_THROWS_AS(contact_points(Body{Disk({0, 0}, 1)}, {0, 0}), Error);
    CHECK_THROWS_AS(contact_points(Body{Polygon(kTriangle)}, {5, 5}), Error);
}

TEST_CASE("classification of triangles and quadrangles") {
    CHECK(classify_polygon(Polygon(oracle::regular(3, 2.0, 0.4, {1, -3}))) == Classification::BalancedEquilateral);
    CHECK(classify_polygon(Polygon({{0, 0}, {3, 0}, {4, 2}, {1, 2}})) == Classification::BalancedParallelogram);
    CHECK(classify_polygon(Polygon(kTriangle)) == Classification::NotBalanced);
    CHECK(classify_polygon(Polygon({{0, 0}, {3, 0}, {4, 2}, {0.5, 2}})) == Classification::NotBalanced);
    CHECK_THROWS_AS(classify_polygon(Polygon(oracle::regular(5))), Error);
}

TEST_CASE("frame coefficients solve the moment equation") {
    const std::array<double, 3> ang{0.0, 137.0 * kPi / 180, 251.0 * kPi / 180};
    const auto c = balance_coefficients(ang);
    const Vec2 s = unit_vector(ang[0]) * c[0] + unit_vector(ang[1]) * c[1] + unit_vector(ang[2]) * c[2];
    CHECK(norm(s) < 1e-14);
    CHECK(c[1] == doctest::Approx(1.034998935).epsilon(1e-8));
    CHECK(c[2] == doctest::Approx(0.7465401468).epsilon(1e-8));
}

TEST_CASE("symmetry search") {
    CHECK(symmetry_search(Body{Polygon({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}})}).size() == 7);
    CHECK(symmetry_search(Body{Polygon(oracle::regular(3))}).size() == 5);
    CHECK(symmetry_search(Body{Polygon({{0, 0}, {3, 0}, {4, 2}, {1, 2}})}).size() == 1);
    CHECK(symmetry_search(Body{Polygon(kTriangle)}).empty());
}

TEST_CASE("asymmetric balanced body") {
    const RadialArcBody b = generate_asymmetric_balanced();
    const Body body{b};
    const BalanceReport r = balance_report(body, {0, 0});
    CHECK(r.balanced);
    CHECK(r.sup_residual < 1e-12);
    CHECK(is_convex(body));
    CHECK(symmetry_search(body).empty());
    // Residual against circle sampling at a few radii in the cap zone.
    for (double rad : {1.01, 1.025, 1.04}) {
        const auto s = oracle::sample_circle([&](const Point& p) { return b.contains(p); }, {0, 0}, rad, 400000);
        CHECK(norm(s.moment) < 1e-4);
    }
    for (double a : {-1.0, 0.5, 3.0}) CHECK(norm(riesz_gradient(body, {0, 0}, Riesz{a})) < 1e-9);
}
