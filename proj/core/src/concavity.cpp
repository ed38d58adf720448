#include "radcen/concavity.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "radcen/potentials.hpp"

namespace radcen {

void PowerMeanSpec::validate() const {
    if (std::isnan(alpha)) throw Error(ErrorCode::InvalidArgument, "alpha is NaN");
    if (!(lambda >= 0.0 && lambda <= 1.0)) throw Error(ErrorCode::InvalidArgument, "lambda must lie in [0,1]");
}

double PowerMeanSpec::gamma(int m) const {
    if (std::isinf(alpha)) return 1.0 / m;
    const double d = 1.0 + m * alpha;
    if (d == 0.0) throw Error(ErrorCode::InvalidArgument, "gamma undefined at alpha = -1/m");
    return alpha / d;
}

double power_mean(double a, double b, const PowerMeanSpec& spec) {
    spec.validate();
    if (!(a >= 0.0) || !(b >= 0.0)) throw Error(ErrorCode::NonPositiveValue, "power mean needs a, b >= 0");
    const double l = spec.lambda, al = spec.alpha;
    if (al == kInf) return std::max(a, b);
    if (al <= 0.0 && a * b == 0.0) return 0.0;
    if (al == -kInf) return std::min(a, b);
    if (a == b) return a;
    if (al == 0.0) return std::exp((1 - l) * std::log(a) + l * std::log(b));
    // Scale by the larger argument to keep powers in range.
    const double s = std::max(a, b);
    const double u = std::pow(a / s, al), v = std::pow(b / s, al);
    return s * std::pow((1 - l) * u + l * v, 1.0 / al);
}

SegmentReport segment_concavity(const ScalarField& f, const Point& x1, const Point& x2, double alpha, int n,
                                double tolerance) {
    if (n < 16) throw Error(ErrorCode::InvalidArgument, "need at least 16 sample points");
    const bool any_sign = alpha == 1.0;
    auto eval = [&](const Point& p) {
        const double v = f(p);
        if (!any_sign && !(v > 0.0)) throw Error(ErrorCode::NonPositiveValue, "function must be positive on the segment");
        return v;
    };
    const double f1 = eval(x1), f2 = eval(x2);
    SegmentReport rep;
    rep.min_slack = kInf;
    for (int k = 1; k <= n; ++k) {
        const double l = static_cast<double>(k) / (n + 1);
        const double fm = eval(x1 + (x2 - x1) * l);
        const double mean = any_sign ? (1 - l) * f1 + l * f2 : power_mean(f1, f2, {alpha, l});
        rep.lambdas.push_back(l);
        rep.slacks.push_back(fm - mean);
        rep.min_slack = std::min(rep.min_slack, fm - mean);
    }
    rep.concave = rep.min_slack >= -tolerance;
    rep.strict = rep.min_slack > rep.strict_margin;
    return rep;
}

double second_derivative_criterion(const ScalarField& f, const Point& x, const Vec2& v, double alpha, double step) {
    if (!(step > 0)) throw Error(ErrorCode::InvalidArgument, "step must be positive");
    const Vec2 u = v / norm(v);
    const double fp = f(x + u * step), f0 = f(x), fm = f(x - u * step);
    if (!(fp > 0 && f0 > 0 && fm > 0)) throw Error(ErrorCode::NonPositiveValue, "function must be positive near x");
    const double d1 = (fp - fm) / (2 * step);
    const double d2 = (fp - 2 * f0 + fm) / (step * step);
    return f0 * d2 + (alpha - 1) * d1 * d1;
}

namespace {

void box_of(const Body& body, Point& lo, Point& hi) {
    const auto pts = boundary_samples(body, 720);
    lo = hi = pts.front();
    for (const Point& p : pts) {
        lo.x = std::min(lo.x, p.x); lo.y = std::min(lo.y, p.y);
        hi.x = std::max(hi.x, p.x); hi.y = std::max(hi.y, p.y);
    }
}

}  // namespace

std::vector<std::pair<Point, Point>> interior_segments(const Body& body, int count, double margin, std::uint64_t seed) {
    if (!is_convex(body)) throw Error(ErrorCode::InvalidArgument, "interior segments need a convex body");
    Point lo, hi;
    box_of(body, lo, hi);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ux(lo.x, hi.x), uy(lo.y, hi.y);
    auto draw = [&]() {
        for (int tries = 0; tries < 100000; ++tries) {
            const Point p{ux(rng), uy(rng)};
            if (contains(body, p) && boundary_distance(body, p) >= margin) return p;
        }
        throw Error(ErrorCode::NoInteriorSeed, "margin leaves no interior points");
    };
    std::vector<std::pair<Point, Point>> out;
    while (static_cast<int>(out.size()) < count) {
        const Point a = draw(), b = draw();
        out.emplace_back(a, b);
    }
    return out;
}

std::vector<std::pair<Point, Point>> box_segments(const Body& body, int count, std::uint64_t seed) {
    const Point c = centroid(body);
    const double d = diameter(body);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-d, d);
    std::vector<std::pair<Point, Point>> out;
    for (int i = 0; i < count; ++i) {
        const Point a{c.x + u(rng), c.y + u(rng)};
        const Point b{c.x + u(rng), c.y + u(rng)};
        out.emplace_back(a, b);
    }
    return out;
}

std::vector<ConcavityRow> concavity_suite(const Polygon& poly, const ConcavityOptions& opts) {
    if (!poly.is_convex()) throw Error(ErrorCode::InvalidArgument, "concavity suite needs a convex polygon");
    const Body body{poly};
    const double diam = poly.diameter();
    const auto inner = interior_segments(body, opts.segments, 0.01 * diam, opts.seed);
    const auto wide = box_segments(body, opts.segments, opts.seed + 1);
    std::vector<ConcavityRow> rows;

    auto run = [&](std::string name, double param, const ScalarField& f, double alpha,
                   const std::vector<std::pair<Point, Point>>& segs) {
        ConcavityRow row{std::move(name), param, 0, kInf, true};
        for (const auto& [a, b] : segs) {
            // Rounding floor scales with the function size.
            const double scale = std::max({std::abs(f(a)), std::abs(f(b)), 1.0});
            const SegmentReport r = segment_concavity(f, a, b, alpha, opts.points_per_segment, 1e-12 * scale);
            row.samples += static_cast<int>(r.slacks.size());
            row.worst = std::min(row.worst, r.min_slack);
            row.passed = row.passed && r.concave;
        }
        rows.push_back(std::move(row));
    };

    const Poisson ps{opts.poisson_h};
    run("poisson_inverse_convex", ps.h, [&](const Point& p) { return poisson_value(body, p, ps).value; }, -1.0, inner);
    const Heat hs{opts.heat_t};
    run("heat_log_concave", hs.t, [&](const Point& p) { return heat_value(body, p, hs).value; }, 0.0, inner);
    for (double a : opts.interior_alphas)
        run("riesz_interior_concave", a, [&](const Point& p) { return riesz_value(body, p, Riesz{a}).value; }, 1.0, inner);
    for (double a : opts.global_alphas)
        run("riesz_global_concave", a, [&](const Point& p) { return riesz_value(body, p, Riesz{a}).value; }, 1.0, wide);

    // Guaranteed regimes: every seed must reach the same maximizer.
    std::vector<PotentialSpec> specs;
    for (double a : opts.interior_alphas) specs.push_back(PotentialSpec::riesz(a));
    for (double a : opts.global_alphas) specs.push_back(PotentialSpec::riesz(a));
    specs.push_back(PotentialSpec::poisson(opts.poisson_h));
    specs.push_back(PotentialSpec::heat(opts.heat_t));
    CenterOptions co;
    co.force_multistart = true;
    for (const PotentialSpec& spec : specs) {
        const CenterResult r = find_center(body, spec, co);
        double spread = 0.0;
        for (const Point& p : r.seed_endpoints) spread = std::max(spread, distance(p, r.point));
        rows.push_back({"unique_" + std::string(spec.name()), spec.parameter(), static_cast<int>(r.seed_endpoints.size()),
                        spread / diam, spread <= opts.uniqueness_tol * diam});
    }
    return rows;
}

}  // namespace radcen
