// One line per criterion; exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "radcen/balance.hpp"
#include "radcen/centers.hpp"
#include "radcen/concavity.hpp"
#include "radcen/potentials.hpp"
#include "support.hpp"

using namespace radcen;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(const char* f, double a, double b = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, f, a, b);
    return buf;
}

const std::vector<Point> kTriangle{{0, 0}, {4, 0}, {0, 3}};
const std::vector<Point> kSquare{{-1, -1}, {1, -1}, {1, 1}, {-1, 1}};

Outcome disk_analytics() {
    const Body d{Disk({0, 0}, 1)};
    const std::vector<std::pair<double, double>> cases{
        {0.5, kTwoPi / 0.5}, {1.0, kTwoPi}, {3.0, -kTwoPi / 3}, {2.0, kPi / 2}, {0.0, 0.0}, {-1.0, -kTwoPi}};
    double worst = 0.0;
    for (const auto& [a, expect] : cases) worst = std::max(worst, std::abs(riesz_value(d, {0, 0}, Riesz{a}).value - expect));
    return {worst < 1e-8, fmt("max |V - closed form| = %.2e (tol 1e-8)", worst)};
}

Outcome centroid_exactness() {
    std::mt19937_64 rng(1001);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        const auto v = oracle::random_convex(rng);
        const Body b{Polygon(v)};
        const CenterResult c = find_center(b, PotentialSpec::riesz(4));
        worst = std::max(worst, distance(c.point, oracle::centroid_of(v)) / diameter(b));
    }
    return {worst < 1e-9, fmt("max |c - centroid|/diam = %.2e over 50 polygons (tol 1e-9)", worst)};
}

Outcome balance_stationary() {
    const Body sq{Polygon(kSquare)};
    const Body tri{Polygon(kTriangle)};
    const Point g = oracle::centroid_of(kTriangle);
    double sq_worst = 0.0, tri_best = 0.0;
    for (double a : {-1.0, 0.0, 0.5, 1.0, 3.0, 5.0}) {
        sq_worst = std::max(sq_worst, norm(riesz_gradient(sq, {0, 0}, Riesz{a})));
        tri_best = std::max(tri_best, norm(riesz_gradient(tri, g, Riesz{a})));
    }
    for (double h : {0.3, 1.0, 3.0}) {
        sq_worst = std::max(sq_worst, norm(poisson_gradient(sq, {0, 0}, Poisson{h})));
        tri_best = std::max(tri_best, norm(poisson_gradient(tri, g, Poisson{h})));
    }
    const bool tri_balanced = balance_report(tri, g).balanced;
    const bool ok = sq_worst < 1e-6 && tri_best > 1e-3 && !tri_balanced;
    return {ok, fmt("square max |grad| = %.2e (tol 1e-6); 3-4-5 max |grad| = %.3f (need > 1e-3)", sq_worst, tri_best) +
                    (tri_balanced ? ", 3-4-5 reported balanced" : ", 3-4-5 not balanced")};
}

double triangle_shape_distance(const std::vector<Point>& t) {
    const double a = distance(t[0], t[1]), b = distance(t[1], t[2]), c = distance(t[2], t[0]);
    return (std::max({a, b, c}) - std::min({a, b, c})) / std::max({a, b, c});
}

double quad_shape_distance(const std::vector<Point>& q) {
    const Point m1 = (q[0] + q[2]) * 0.5, m2 = (q[1] + q[3]) * 0.5;
    double d = 0.0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) d = std::max(d, distance(q[i], q[j]));
    return distance(m1, m2) / d;
}

// Perturbs every vertex by a random offset of the given size relative to diam.
std::vector<Point> jitter(std::vector<Point> v, double size, std::mt19937_64& rng) {
    double d = 0.0;
    for (const Point& p : v)
        for (const Point& q : v) d = std::max(d, distance(p, q));
    std::uniform_real_distribution<double> ang(0.0, kTwoPi);
    for (Point& p : v) p = p + unit_vector(ang(rng)) * (size * d);
    return v;
}

Outcome characterization() {
    std::mt19937_64 rng(1004);
    std::uniform_real_distribution<double> rot(0.0, kTwoPi), scale(0.3, 3.0), off(-2.0, 2.0), big(-3.0, -1.0);
    int mismatches = 0, violations = 0, total = 0, balanced = 0;
    auto run = [&](const std::vector<Point>& v, double shape) {
        const Polygon p(v);
        if (!p.is_convex()) return false;
        ++total;
        const bool expect = shape <= 1e-6;
        try {
            const Classification c = classify_polygon(p);
            const bool got = c != Classification::NotBalanced;
            balanced += got;
            if (got != expect) ++mismatches;
        } catch (const Error& e) {
            if (e.code() != ErrorCode::TheoremViolation) throw;
            ++violations;
        }
        return true;
    };
    // Perturbation sizes avoid (1e-10, 1e-4): residuals there are neither clearly zero nor clearly not.
    for (int i = 0; i < 200;) {
        std::vector<Point> t;
        const int kind = i % 5;
        if (kind == 0 || kind == 1) t = oracle::regular(3, scale(rng), rot(rng), {off(rng), off(rng)});
        else if (kind == 2) t = jitter(oracle::regular(3, scale(rng), rot(rng), {off(rng), off(rng)}), 1e-12, rng);
        else if (kind == 3) t = jitter(oracle::regular(3, scale(rng), rot(rng), {off(rng), off(rng)}), std::pow(10.0, big(rng)), rng);
        else t = oracle::random_triangle(rng);
        if (oracle::shoelace(t) < 0) std::swap(t[1], t[2]);
        if (run(t, triangle_shape_distance(t))) ++i;
    }
    for (int i = 0; i < 200;) {
        std::vector<Point> q;
        const int kind = i % 5;
        if (kind == 0 || kind == 1) q = oracle::random_parallelogram(rng);
        else if (kind == 2) q = jitter(oracle::random_parallelogram(rng), 1e-12, rng);
        else if (kind == 3) q = jitter(oracle::random_parallelogram(rng), std::pow(10.0, big(rng)), rng);
        else {
            std::uniform_real_distribution<double> u(-1.0, 1.0);
            std::vector<Point> pts{{u(rng), u(rng)}, {u(rng), u(rng)}, {u(rng), u(rng)}, {u(rng), u(rng)}};
            q = oracle::hull(pts);
            if (q.size() != 4 || std::abs(oracle::shoelace(q)) < 0.2) continue;
        }
        if (oracle::shoelace(q) < 0) std::reverse(q.begin(), q.end());
        if (run(q, quad_shape_distance(q))) ++i;
    }
    return {mismatches == 0 && violations == 0,
            fmt("%g polygons, %g classified balanced", total, balanced) + fmt(", mismatches %g, TheoremViolation %g", mismatches, violations)};
}

Outcome contact_law() {
    std::mt19937_64 rng(1005);
    double worst = 0.0;
    for (int i = 0; i <= 50; ++i) {
        const Polygon p(i < 50 ? oracle::random_parallelogram(rng) : oracle::regular(3, 1.7, 0.4, {0.3, -0.8}));
        const ContactSet cs = contact_points(Body{p}, p.centroid());
        Vec2 s{};
        for (const Point& q : cs.points) s += q;
        s -= p.centroid() * static_cast<double>(cs.points.size());
        worst = std::max(worst, norm(s) / p.diameter());
    }
    return {worst < 1e-8, fmt("max |sum p_j - k*centroid|/diam = %.2e over 51 bodies (tol 1e-8)", worst)};
}

Outcome limits() {
    const Body tri{Polygon(kTriangle)};
    const double diam = 5.0;
    const Point cc = circumcenter(tri).center, g = oracle::centroid_of(kTriangle), ic = incenter(tri).center;
    const double d10 = distance(find_center(tri, PotentialSpec::riesz(10)).point, cc);
    const double d200 = distance(find_center(tri, PotentialSpec::riesz(200)).point, cc);
    const double dh = distance(find_center(tri, PotentialSpec::poisson(100 * diam)).point, g);
    const double dt = distance(find_center(tri, PotentialSpec::heat(1e6)).point, g);
    const double ds = distance(find_center(tri, PotentialSpec::heat(1e-3)).point, ic);
    const bool ok = d200 < 0.05 * diam && d200 < d10 && dh < 1e-3 * diam && dt < 1e-3 * diam && ds < 0.1 * diam;
    return {ok, fmt("alpha: d(200)/diam = %.4f, d(10)/diam = %.4f", d200 / diam, d10 / diam) +
                    fmt("; h: %.1e; t=1e6: %.1e", dh / diam, dt / diam) + fmt("; t=1e-3 to incenter: %.1e", ds / diam)};
}

Outcome kernel_identity() {
    std::mt19937_64 rng(1007);
    std::uniform_real_distribution<double> z(0.0, 4.0), h(0.05, 4.0);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        const double zz = z(rng), hh = h(rng);
        worst = std::max(worst, std::abs(poisson_kernel_gaussian(zz, hh) - poisson_kernel(zz, hh)));
    }
    return {worst < 1e-8, fmt("max |gaussian - closed form| = %.2e over 20 (z,h) (tol 1e-8)", worst)};
}

Outcome gradient_consistency() {
    std::mt19937_64 rng(1008);
    const auto v = oracle::random_convex(rng, 7);
    const Body b{Polygon(v)};
    const double diam = diameter(b);
    const auto pts = interior_segments(b, 10, 0.05 * diam, 1009);
    double worst = 0.0;
    for (const auto& [p, q] : pts)
        for (const Point& x : {p, q})
            for (double a : {0.0, 0.5, 1.0, 3.0}) {
                const Vec2 gb = riesz_gradient(b, x, Riesz{a}, GradientRoute::Boundary);
                const Vec2 ga = riesz_gradient(b, x, Riesz{a}, GradientRoute::Annulus);
                const Vec2 gf = oracle::fd_gradient([&](const Point& y) { return riesz_value(b, y, Riesz{a}).value; }, x, 1e-5 * diam);
                worst = std::max({worst, norm(gb - ga), norm(gb - gf), norm(ga - gf)});
            }
    return {worst < 1e-6, fmt("max pairwise gradient gap = %.2e at 20 points x 4 alphas (tol 1e-6)", worst)};
}

Outcome concavity() {
    std::mt19937_64 rng(1009);
    int rows = 0, failed = 0;
    std::string first_fail;
    const std::vector<std::vector<Point>> polys{kTriangle, oracle::random_convex(rng), oracle::random_convex(rng)};
    for (const auto& v : polys)
        for (const ConcavityRow& r : concavity_suite(Polygon(v))) {
            ++rows;
            if (!r.passed) {
                ++failed;
                if (first_fail.empty()) first_fail = r.check;
            }
        }
    return {failed == 0, fmt("%g suite rows on 3 polygons, %g failed", rows, failed) + (first_fail.empty() ? "" : " (first: " + first_fail + ")")};
}

Outcome asymmetric_generator() {
    const RadialArcBody b = generate_asymmetric_balanced();
    const Body body{b};
    const BalanceReport r = balance_report(body, {0, 0});
    const bool convex = is_convex(body);
    const auto syms = symmetry_search(body);
    return {r.sup_residual < 1e-6 && convex && syms.empty(),
            fmt("sup residual = %.2e (tol 1e-6), symmetries found = %g", r.sup_residual, syms.size()) + (convex ? ", convex" : ", NOT convex")};
}

Outcome location() {
    std::mt19937_64 rng(1011);
    const std::vector<std::vector<Point>> polys{kTriangle, oracle::random_convex(rng), {{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}}};
    std::vector<PotentialSpec> specs;
    for (double a : {1.5, 2.0, 3.0, 4.0, 8.0}) specs.push_back(PotentialSpec::riesz(a));
    for (double h : {0.3, 1.0, 5.0}) specs.push_back(PotentialSpec::poisson(h));
    for (double t : {0.05, 0.5, 5.0}) specs.push_back(PotentialSpec::heat(t));
    int checked = 0, outside_heart = 0, outside_hull = 0;
    double worst_hull = 1e300;
    for (const auto& v : polys) {
        const Polygon p(v);
        const double diam = p.diameter();
        const UnfoldedRegion heart = unfolded_region(p, 64);
        const Polygon hull(convex_hull({p.vertices().begin(), p.vertices().end()}));
        for (const PotentialSpec& s : specs) {
            const CenterResult c = find_center(Body{p}, s);
            ++checked;
            if (!heart.contains(c.point, 1e-6 * diam)) ++outside_heart;
            const double margin = hull.contains(c.point) ? hull.boundary_distance(c.point) / diam : -1.0;
            worst_hull = std::min(worst_hull, margin);
            if (!(margin > 1e-9)) ++outside_hull;
        }
    }
    return {outside_heart == 0 && outside_hull == 0,
            fmt("%g centers, outside unfolded region %g", checked, outside_heart) +
                fmt(", outside hull %g; min hull margin/diam = %.3f", outside_hull, worst_hull)};
}

Outcome eps_independence() {
    const Body tri{Polygon(kTriangle)};
    double worst = 0.0;
    for (const Point& x : {Point{1.2, 0.9}, Point{0.4, 0.3}, Point{2.6, 0.5}})
        for (double a : {0.0, -1.0}) {
            const double d = boundary_distance(tri, x);
            std::vector<double> vals;
            for (double f : {0.01, 0.3, 0.9}) vals.push_back(riesz_value_excised(tri, x, a, f * d));
            vals.push_back(riesz_value(tri, x, Riesz{a}).value);
            for (double u : vals)
                for (double w : vals) worst = std::max(worst, std::abs(u - w));
        }
    return {worst < 1e-8, fmt("max spread across eps = %.2e (tol 1e-8)", worst)};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"disk analytics", disk_analytics},
        {"centroid exactness", centroid_exactness},
        {"balance <=> stationary", balance_stationary},
        {"characterization corpus", characterization},
        {"contact-point law", contact_law},
        {"limit centers", limits},
        {"kernel identity", kernel_identity},
        {"gradient consistency", gradient_consistency},
        {"concavity suite", concavity},
        {"asymmetric generator", asymmetric_generator},
        {"location suite", location},
        {"eps-independence", eps_independence},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        failures += !o.pass;
        std::printf("[%s] %2zu %-24s %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str(), secs);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
