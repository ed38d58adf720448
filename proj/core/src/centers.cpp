#include "radcen/centers.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace radcen {

namespace {

// Ascent runs on a monotone transform of the potential that keeps values and
// gradients well scaled: −log(−V) for α > 2, −log(1 − P) and −log(1 − W).
enum class Transform { Identity, NegLogNegative, NegLogComplement };

Transform transform_for(const PotentialSpec& spec) {
    if (const auto* r = std::get_if<Riesz>(&spec.family)) return r->alpha > 2 ? Transform::NegLogNegative : Transform::Identity;
    return Transform::NegLogComplement;
}

struct Objective {
    const Body& body;
    const PotentialSpec& spec;
    const QuadratureConfig& quad;
    double diam;
    double band;          // trial points must keep this distance from ∂Ω (0: no restriction)
    Transform transform;

    bool admissible(const Point& p) const {
        if (band <= 0) return true;
        return contains(body, p) && boundary_distance(body, p) >= band;
    }
    double complement(const Point& p) const {
        const double q = std::holds_alternative<Heat>(spec.family) ? heat_complement(body, p, std::get<Heat>(spec.family), quad)
                                                                   : poisson_complement(body, p, std::get<Poisson>(spec.family), quad);
        if (!(q > 0)) throw Error(ErrorCode::InvalidArgument, "potential saturates at 1 in double precision for this parameter");
        return q;
    }
    double potential_value(const Point& p) const { return potential(body, p, spec, quad).value; }
    Vec2 potential_grad(const Point& p) const { return potential_gradient(body, p, spec, quad); }
    double value(const Point& p) const {
        switch (transform) {
            case Transform::NegLogNegative: return -std::log(-potential_value(p));
            case Transform::NegLogComplement: return -std::log(complement(p));
            case Transform::Identity: break;
        }
        return potential_value(p);
    }
    Vec2 gradient(const Point& p) const {
        switch (transform) {
            case Transform::NegLogNegative: return potential_grad(p) / (-potential_value(p));
            case Transform::NegLogComplement: return potential_grad(p) / complement(p);
            case Transform::Identity: break;
        }
        return potential_grad(p);
    }
};

bool needs_interior(const PotentialSpec& spec) {
    const auto* r = std::get_if<Riesz>(&spec.family);
    return r && r->alpha <= 1.0;
}

double halton(int index, int base) {
    double f = 1.0, r = 0.0;
    for (int i = index; i > 0; i /= base) {
        f /= base;
        r += f * (i % base);
    }
    return r;
}

void bounding_box(const Body& body, Point& lo, Point& hi) {
    const auto pts = boundary_samples(body, 720);
    lo = hi = pts.front();
    for (const Point& p : pts) {
        lo.x = std::min(lo.x, p.x); lo.y = std::min(lo.y, p.y);
        hi.x = std::max(hi.x, p.x); hi.y = std::max(hi.y, p.y);
    }
}

}  // namespace

std::string_view to_string(CenterRegime r) {
    switch (r) {
        case CenterRegime::ConcaveInterior: return "concave_interior";
        case CenterRegime::ConcaveGlobal: return "concave_global";
        case CenterRegime::Multistart: return "multistart";
    }
    return "unknown";
}

PotentialSpec make_spec(std::string_view family, double param) {
    PotentialSpec spec;
    if (family == "riesz") spec = PotentialSpec::riesz(param);
    else if (family == "poisson") spec = PotentialSpec::poisson(param);
    else if (family == "heat") spec = PotentialSpec::heat(param);
    else throw Error(ErrorCode::InvalidArgument, "unknown family '" + std::string(family) + "'");
    spec.validate();
    return spec;
}

CenterRegime center_regime(const Body& body, const PotentialSpec& spec) {
    const bool convex = is_convex(body);
    if (const auto* r = std::get_if<Riesz>(&spec.family)) {
        if (r->alpha >= spec.m + 1) return CenterRegime::ConcaveGlobal;
        if (convex && r->alpha <= 1) return CenterRegime::ConcaveInterior;
        return CenterRegime::Multistart;
    }
    return convex ? CenterRegime::ConcaveGlobal : CenterRegime::Multistart;
}

std::vector<Point> multistart_seeds(const Body& body, int n, double band) {
    std::vector<Point> seeds;
    auto ok = [&](const Point& p) { return contains(body, p) && boundary_distance(body, p) > band; };
    const Point g = centroid(body);
    if (ok(g)) seeds.push_back(g);
    const Incircle ic = incenter(body);
    if (ok(ic.center)) seeds.push_back(ic.center);
    const Circle cc = circumcenter(body);
    if (ok(cc.center)) seeds.push_back(cc.center);
    Point lo, hi;
    bounding_box(body, lo, hi);
    for (int i = 1; static_cast<int>(seeds.size()) < n && i < 20000; ++i) {
        const Point p{lo.x + (hi.x - lo.x) * halton(i, 2), lo.y + (hi.y - lo.y) * halton(i, 3)};
        if (ok(p)) seeds.push_back(p);
    }
    if (seeds.empty()) throw Error(ErrorCode::NoInteriorSeed, "no interior seed point found");
    if (static_cast<int>(seeds.size()) > n) seeds.resize(n);
    return seeds;
}

CenterResult local_ascent(const Body& body, const PotentialSpec& spec, const Point& start, const CenterOptions& opts) {
    const double diam = diameter(body);
    const Objective f{body, spec, opts.quad, diam, needs_interior(spec) ? 1e-6 * diam : 0.0, transform_for(spec)};
    if (!f.admissible(start)) throw Error(ErrorCode::NoInteriorSeed, "start point is not admissible");

    Point x = start;
    double v = f.value(x);
    Vec2 g = f.gradient(x);
    const double scale = std::max(std::abs(v), 1.0);
    const double tol = opts.grad_tol * scale;
    const double hstep = 1e-4 * diam;
    double grad_step = 0.1 * diam / std::max(norm(g), 1e-300);
    const double flat = 64 * std::numeric_limits<double>::epsilon() * std::max(std::abs(v), 1e-300);

    CenterResult res;
    res.regime = center_regime(body, spec);
    int it = 0;
    for (; it < opts.max_iterations; ++it) {
        const double gn = norm(g);
        if (gn < tol) break;

        // Central-difference Hessian of the gradient.
        Vec2 p = g * grad_step;
        bool newton = false;
        const Vec2 ex{hstep, 0.0}, ey{0.0, hstep};
        if (f.admissible(x + ex) && f.admissible(x - ex) && f.admissible(x + ey) && f.admissible(x - ey)) {
            const Vec2 gx = (f.gradient(x + ex) - f.gradient(x - ex)) / (2 * hstep);
            const Vec2 gy = (f.gradient(x + ey) - f.gradient(x - ey)) / (2 * hstep);
            const double hxx = gx.x, hyy = gy.y, hxy = 0.5 * (gx.y + gy.x);
            const double det = hxx * hyy - hxy * hxy;
            if (hxx < 0 && det > 0) {
                p = Vec2{-(hyy * g.x - hxy * g.y) / det, -(-hxy * g.x + hxx * g.y) / det};
                newton = true;
            }
        }
        // Cap steps at half a diameter.
        if (norm(p) > 0.5 * diam) p = p * (0.5 * diam / norm(p));

        double t = 1.0;
        bool accepted = false;
        Point y;
        double vy = v;
        Vec2 gy{};
        for (int ls = 0; ls < 60; ++ls, t *= 0.5) {
            y = x + p * t;
            if (!f.admissible(y)) continue;
            vy = f.value(y);
            if (vy > v + 1e-4 * t * dot(g, p)) {
                gy = f.gradient(y);
                accepted = true;
                break;
            }
            // Values flat to rounding: accept on gradient decrease.
            if (std::abs(vy - v) <= flat) {
                gy = f.gradient(y);
                if (norm(gy) < gn) { accepted = true; break; }
            }
            if (norm(p * t) < 1e-14 * diam) break;
        }
        if (!accepted) {
            if (gn >= tol) throw Error(ErrorCode::NonConvergence, "line search stalled");
            break;
        }
        const double moved = norm(y - x);
        if (!newton) grad_step *= (t == 1.0 ? 2.0 : t);
        x = y;
        v = vy;
        g = gy;
        if (newton && moved < 1e-12 * diam) { ++it; break; }
    }
    if (it >= opts.max_iterations && norm(g) >= tol) throw Error(ErrorCode::NonConvergence, "iteration budget exhausted");
    res.point = x;
    res.value = f.potential_value(x);
    res.grad_norm = norm(f.potential_grad(x));
    res.iterations = it;
    return res;
}

CenterResult find_center(const Body& body, const PotentialSpec& spec, const CenterOptions& opts) {
    spec.validate();
    if (spec.m != 2) throw Error(ErrorCode::InvalidArgument, "planar bodies need m = 2");
    const CenterRegime regime = center_regime(body, spec);
    const double diam = diameter(body);
    const double band = needs_interior(spec) ? 1e-6 * diam : 0.0;

    if (regime != CenterRegime::Multistart && !opts.force_multistart) {
        Point start;
        if (opts.start) start = *opts.start;
        else {
            start = centroid(body);
            if (!contains(body, start) || boundary_distance(body, start) <= band) start = incenter(body).center;
        }
        CenterResult r = local_ascent(body, spec, start, opts);
        r.regime = regime;
        r.uniqueness_guaranteed = true;
        return r;
    }

    std::vector<Point> seeds = opts.start ? std::vector<Point>{*opts.start} : multistart_seeds(body, opts.n_seeds, band);
    CenterResult best;
    bool have = false;
    int total_iters = 0;
    std::vector<Point> endpoints;
    for (const Point& s : seeds) {
        CenterResult r;
        try {
            r = local_ascent(body, spec, s, opts);
        } catch (const Error& e) {
            if (e.code() == ErrorCode::NonConvergence) continue;
            throw;
        }
        total_iters += r.iterations;
        endpoints.push_back(r.point);
        if (!have || r.value > best.value) {
            best = r;
            have = true;
        }
    }
    if (!have) throw Error(ErrorCode::NonConvergence, "no seed converged");
    best.iterations = total_iters;
    best.regime = regime;
    best.uniqueness_guaranteed = regime != CenterRegime::Multistart;
    best.seed_endpoints = std::move(endpoints);
    return best;
}

LocusTrace trace_locus(const Body& body, std::string_view family, double lo, double hi, int n_steps,
                       const CenterOptions& opts) {
    if (!(lo < hi) || n_steps < 2) throw Error(ErrorCode::InvalidArgument, "need lo < hi and n_steps >= 2");
    LocusTrace trace;
    trace.family = std::string(family);
    const bool logscale = lo > 0;
    std::vector<double> grid(n_steps);
    for (int k = 0; k < n_steps; ++k) {
        const double s = static_cast<double>(k) / (n_steps - 1);
        grid[k] = logscale ? lo * std::pow(hi / lo, s) : lo + (hi - lo) * s;
    }
    grid.back() = hi;

    std::optional<Point> prev;
    double prev_param = grid.front();
    auto solve = [&](double param, const std::optional<Point>& warm) {
        CenterOptions o = opts;
        if (warm) o.start = warm;
        return find_center(body, make_spec(family, param), o);
    };
    // Corrector over [prev_param, target] with step halving, depth-limited.
    std::function<bool(double, int)> advance = [&](double target, int depth) -> bool {
        CenterResult r;
        try {
            r = solve(target, prev);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::NonConvergence || !prev || depth >= 8) {
                trace.diagnostic = std::string(e.what()) + " at param " + std::to_string(target);
                return false;
            }
            r.iterations = std::numeric_limits<int>::max();
        }
        if (prev && r.iterations > 20 && depth < 8) {
            const double mid = logscale ? std::sqrt(prev_param * target) : 0.5 * (prev_param + target);
            if (!advance(mid, depth + 1)) return false;
            try {
                r = solve(target, prev);
            } catch (const Error& e) {
                trace.diagnostic = std::string(e.what()) + " at param " + std::to_string(target);
                return false;
            }
        }
        trace.params.push_back(target);
        trace.points.push_back(r.point);
        trace.grad_norms.push_back(r.grad_norm);
        prev = r.point;
        prev_param = target;
        return true;
    };
    for (double param : grid) {
        if (!advance(param, 0)) {
            trace.truncated = true;
            break;
        }
    }
    return trace;
}

LimitReport limit_diagnostics(const Body& body, const CenterOptions& opts) {
    if (!is_convex(body)) throw Error(ErrorCode::InvalidArgument, "limit diagnostics need a convex body");
    LimitReport rep;
    rep.circumcenter = circumcenter(body).center;
    rep.centroid = centroid(body);
    rep.incenter = incenter(body).center;
    const double diam = diameter(body);
    struct Sequence {
        std::string family;
        std::vector<double> params;
        std::string limit;
        Point target;
        bool checked;
    };
    const std::vector<Sequence> seqs{
        {"riesz", {10, 50, 200}, "circumcenter", rep.circumcenter, true},
        {"poisson", {1 * diam, 10 * diam, 100 * diam}, "centroid", rep.centroid, true},
        {"heat", {1e-3, 1, 1e3}, "centroid", rep.centroid, true},
        {"heat", {1e3, 1, 1e-3}, "incenter", rep.incenter, false},
    };
    for (const auto& s : seqs) {
        double last = std::numeric_limits<double>::infinity();
        for (double p : s.params) {
            const CenterResult c = find_center(body, make_spec(s.family, p), opts);
            const double d = distance(c.point, s.target);
            rep.rows.push_back({s.family, p, s.limit, c.point, d});
            if (s.checked && d > last + 1e-9 * diam) rep.monotone = false;
            last = d;
        }
    }
    return rep;
}

}  // namespace radcen
