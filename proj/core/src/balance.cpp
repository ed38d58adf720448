#include "radcen/balance.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace radcen {

namespace {

double arc_measure_intersection(const Arc& a, const Arc& b, std::vector<Arc>& out) {
    double total = 0.0;
    for (double shift : {-kTwoPi, 0.0, kTwoPi}) {
        const double lo = std::max(a.begin, b.begin + shift);
        const double hi = std::min(a.end, b.end + shift);
        if (hi > lo) {
            out.push_back({lo, hi});
            total += hi - lo;
        }
    }
    return total;
}

ArcSet intersect(const ArcSet& a, const ArcSet& b) {
    ArcSet out{a.center, a.radius, {}};
    for (const Arc& x : a.arcs)
        for (const Arc& y : b.arcs) arc_measure_intersection(x, y, out.arcs);
    for (Arc& arc : out.arcs) {
        const double len = arc.length();
        arc.begin = std::fmod(arc.begin, kTwoPi);
        if (arc.begin < 0) arc.begin += kTwoPi;
        arc.end = arc.begin + len;
    }
    std::sort(out.arcs.begin(), out.arcs.end(), [](const Arc& p, const Arc& q) { return p.begin < q.begin; });
    return out;
}

double farthest_distance(const Body& body, const Point& x) {
    if (const auto* d = std::get_if<Disk>(&body)) return distance(x, d->center) + d->radius;
    double best = 0.0;
    if (const auto* rb = std::get_if<RadialArcBody>(&body)) {
        if (norm(x) < 1e-14) return rb->r_max();
        for (const Point& p : rb->outline(8192)) best = std::max(best, distance(x, p));
        return best;
    }
    for (const Point& p : std::get<Polygon>(body).vertices()) best = std::max(best, distance(x, p));
    return best;
}

}  // namespace

Vec2 arc_moment(const ArcSet& arcs) {
    Vec2 s{};
    for (const Arc& a : arcs.arcs)
        s += Vec2{std::sin(a.end) - std::sin(a.begin), std::cos(a.begin) - std::cos(a.end)};
    return s * arcs.radius;
}

Vec2 vector_residual(const Body& body, const Point& x, double r) { return arc_moment(circle_clip(body, x, r)); }

std::vector<double> contact_radii(const Body& body, const Point& x) {
    std::vector<double> out;
    if (const auto* poly = std::get_if<Polygon>(&body)) {
        for (std::size_t i = 0; i < poly->size(); ++i) {
            out.push_back(distance(x, (*poly)[i]));
            out.push_back(segment_distance(x, (*poly)[i], (*poly)[i + 1]));
        }
    } else if (const auto* d = std::get_if<Disk>(&body)) {
        const double c = distance(x, d->center);
        out.push_back(std::abs(c - d->radius));
        out.push_back(c + d->radius);
    } else {
        const auto& rb = std::get<RadialArcBody>(body);
        if (norm(x) < 1e-14) {
            out.assign(rb.knots().begin(), rb.knots().end());
        } else {
            out.push_back(boundary_distance(body, x));
            out.push_back(farthest_distance(body, x));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

BalanceReport report_on_radii(const Body& body, const Point& x, std::vector<double> radii, double tolerance) {
    BalanceReport rep;
    rep.candidate = x;
    rep.tolerance = tolerance;
    std::sort(radii.begin(), radii.end());
    radii.erase(std::unique(radii.begin(), radii.end(), [](double a, double b) { return b - a <= 1e-14 * b; }), radii.end());
    for (double r : radii) {
        const Vec2 v = vector_residual(body, x, r);
        rep.radii.push_back(r);
        rep.residual_vectors.push_back(v);
        rep.sup_residual = std::max(rep.sup_residual, norm(v) / (kTwoPi * r));
    }
    rep.balanced = rep.sup_residual < tolerance;
    return rep;
}

std::vector<double> log_radii(double far, int n) {
    if (n < 32) throw Error(ErrorCode::InvalidArgument, "n_radii must be at least 32");
    std::vector<double> radii;
    const double lo = far * 1e-3;
    for (int k = 0; k < n; ++k) radii.push_back(lo * std::pow(far / lo, static_cast<double>(k) / (n - 1)));
    return radii;
}

}  // namespace

BalanceReport balance_report(const Body& body, const Point& x, int n_radii, double tolerance) {
    const double far = farthest_distance(body, x);
    std::vector<double> radii = log_radii(far, n_radii);
    for (double r : contact_radii(body, x))
        if (r > 0 && r <= far) radii.push_back(r);
    return report_on_radii(body, x, std::move(radii), tolerance);
}

double WeightedBodyFunction::mass() const {
    double m = 0.0;
    for (const auto& [w, b] : terms) m += w * area(b);
    return m;
}

Vec2 WeightedBodyFunction::first_moment() const {
    Vec2 s{};
    for (const auto& [w, b] : terms) s += centroid(b) * (w * area(b));
    return s;
}

double WeightedBodyFunction::magnitude() const {
    double m = 0.0;
    for (const auto& [w, b] : terms) m += std::abs(w) * area(b);
    return m;
}

double scalar_residual(const WeightedBodyFunction& f, const Point& x, double r) {
    if (!(r > 0)) throw Error(ErrorCode::InvalidArgument, "radius must be positive");
    if (f.terms.empty()) throw Error(ErrorCode::InvalidArgument, "weighted function has no terms");
    double s = 0.0;
    for (const auto& [w, b] : f.terms) s += w * r * circle_clip(b, x, r).measure();
    return s;
}

EquivalenceReport equivalence_check(const Body& body, const Point& x, double tolerance) {
    EquivalenceReport rep;
    const double far = farthest_distance(body, x);
    const double r_star = contains(body, x) ? boundary_distance(body, x) : 0.25 * far;
    for (int k = 1; k <= 64; ++k) rep.radii.push_back(far * 1.1 * k / 64);
    for (double c : {0.3, 0.7, 1.3}) rep.split_radii.push_back(c * r_star);
    for (double r : rep.radii) {
        const ArcSet in = circle_clip(body, x, r);
        const Vec2 total = arc_moment(in);
        rep.complement_defect = std::max(rep.complement_defect, norm(total + arc_moment(in.complement())) / (kTwoPi * r));
        for (double rho : rep.split_radii) {
            const ArcSet ball = circle_clip(Body{Disk(x, rho)}, x, r);
            const Vec2 inside = arc_moment(intersect(in, ball));
            const Vec2 outside = arc_moment(intersect(in, ball.complement()));
            rep.split_defect = std::max(rep.split_defect, norm(inside + outside - total) / (kTwoPi * r));
        }
    }
    rep.holds = rep.complement_defect <= tolerance && rep.split_defect <= tolerance;
    return rep;
}

ContactSet contact_points(const Body& body, const Point& x) {
    if (!contains(body, x) || boundary_distance(body, x) <= 1e-9 * diameter(body))
        throw Error(ErrorCode::NotInterior, "contact points need an interior point");
    if (!is_convex(body)) throw Error(ErrorCode::InvalidArgument, "contact points need a convex body");
    ContactSet cs;
    if (const auto* d = std::get_if<Disk>(&body)) {
        const Vec2 off = x - d->center;
        if (norm(off) <= 1e-12 * d->radius) throw Error(ErrorCode::ContinuumContact, "every boundary point is nearest");
        cs.r_star = d->radius - norm(off);
        cs.points.push_back(d->center + off / norm(off) * d->radius);
    } else if (std::holds_alternative<RadialArcBody>(body)) {
        throw Error(ErrorCode::ContinuumContact, "circular boundary pieces can be tangent to the contact circle");
    } else {
        const auto& poly = std::get<Polygon>(body);
        const double tol = 1e-9 * poly.diameter();
        cs.r_star = poly.boundary_distance(x);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            const Point a = poly[i];
            const Vec2 e = poly[i + 1] - a;
            const double t = std::clamp(dot(x - a, e) / dot(e, e), 0.0, 1.0);
            const Point p = a + e * t;
            if (distance(p, x) > cs.r_star + tol) continue;
            const bool dup = std::any_of(cs.points.begin(), cs.points.end(), [&](const Point& q) { return distance(p, q) <= tol; });
            if (!dup) cs.points.push_back(p);
        }
    }
    for (const Point& p : cs.points) cs.sum += p - x;
    return cs;
}

StationaryCandidate stationary_candidate(const WeightedBodyFunction& f) {
    if (f.terms.empty()) throw Error(ErrorCode::InvalidArgument, "weighted function has no terms");
    const double scale = f.magnitude();
    const double mass = f.mass();
    const Vec2 moment = f.first_moment();
    if (std::abs(mass) > 1e-10 * scale) return moment / mass;
    double extent = 0.0;
    for (const auto& [w, b] : f.terms) extent = std::max(extent, norm(centroid(b)) + diameter(b));
    if (norm(moment) > 1e-10 * scale * extent) return NoneExists{};
    return Indeterminate{};
}

std::string_view to_string(Classification c) {
    switch (c) {
        case Classification::BalancedEquilateral: return "BalancedEquilateral";
        case Classification::BalancedParallelogram: return "BalancedParallelogram";
        case Classification::NotBalanced: return "NotBalanced";
    }
    return "unknown";
}

Classification classify_polygon(const Polygon& poly) {
    if (poly.size() != 3 && poly.size() != 4) throw Error(ErrorCode::InvalidArgument, "classification needs 3 or 4 vertices");
    if (!poly.is_convex()) throw Error(ErrorCode::InvalidArgument, "classification needs a convex polygon");
    // Contact radii are left out: near a tangency a vertex shift δ moves arcs by O(√δ).
    const Body body{poly};
    const BalanceReport rep = report_on_radii(body, poly.centroid(), log_radii(farthest_distance(body, poly.centroid()), 256), 1e-8);
    if (!rep.balanced) return Classification::NotBalanced;
    const double tol = 1e-6 * poly.diameter();
    if (poly.size() == 3) {
        const double a = distance(poly[0], poly[1]), b = distance(poly[1], poly[2]), c = distance(poly[2], poly[0]);
        if (std::max({a, b, c}) - std::min({a, b, c}) <= tol) return Classification::BalancedEquilateral;
        throw Error(ErrorCode::TheoremViolation, "balanced triangle is not equilateral");
    }
    const Point m1 = (poly[0] + poly[2]) * 0.5;
    const Point m2 = (poly[1] + poly[3]) * 0.5;
    if (distance(m1, m2) <= tol) return Classification::BalancedParallelogram;
    throw Error(ErrorCode::TheoremViolation, "balanced quadrangle is not a parallelogram");
}

std::array<double, 3> balance_coefficients(const std::array<double, 3>& ang) {
    const Vec2 u = unit_vector(ang[0]), v = unit_vector(ang[1]), w = unit_vector(ang[2]);
    const double det = cross(v, w);
    if (std::abs(det) < 1e-12) throw Error(ErrorCode::InvalidArgument, "frame directions v, w are dependent");
    // c_v v + c_w w = −u
    const double cv = cross(-u, w) / det;
    const double cw = cross(v, -u) / det;
    return {1.0, cv, cw};
}

RadialArcBody generate_asymmetric_balanced(const GeneratorOptions& opts) {
    const double R = opts.r_max;
    if (!(R > 1.0) || R > 1.3) throw Error(ErrorCode::InvalidArgument, "r_max must lie in (1, 1.3]");
    if (opts.n_knots < 8) throw Error(ErrorCode::InvalidArgument, "need at least 8 knots");
    std::array<double, 3> ang{};
    for (int d = 0; d < 3; ++d) ang[d] = opts.direction_degrees[d] * kPi / 180.0;
    const auto c = balance_coefficients(ang);
    if (c[1] <= 0 || c[2] <= 0) throw Error(ErrorCode::InvalidArgument, "frame does not admit positive half-widths");

    const auto seed = opts.seed_sine ? opts.seed_sine : std::function<double(double)>([R](double r) {
        return std::sin(kPi / 6) * (1 - std::sqrt((r * r - 1) / (R * R - 1))) / r;
    });
    const int N = opts.n_knots;
    std::vector<double> knots(N + 1);
    for (int k = 0; k <= N; ++k) {
        const double s = static_cast<double>(k) / N;
        knots[k] = 1.0 + (R - 1.0) * s * s;
    }
    knots.back() = R;

    const double smax = std::sin(kPi / 3);
    double factor = 1.0;
    std::string last_reason = "no attempt";
    for (int attempt = 0; attempt <= opts.max_retries; ++attempt, factor *= opts.shrink) {
        std::array<std::vector<double>, 3> sines;
        bool ok = true;
        for (int d = 0; d < 3 && ok; ++d) {
            sines[d].resize(N + 1);
            for (int k = 0; k < N; ++k) {
                const double s = c[d] * factor * seed(knots[k]);
                if (!(s > 0) || !(s < smax)) { ok = false; last_reason = "half-width leaves (0, π/3)"; break; }
                sines[d][k] = s;
            }
            sines[d][N] = 0.0;
        }
        if (!ok) continue;
        try {
            RadialArcBody body(R, ang, knots, sines);
            if (!is_convex(Body{body})) { last_reason = "body is not convex"; continue; }
            return body;
        } catch (const Error& e) {
            last_reason = e.what();
        }
    }
    throw Error(ErrorCode::ConstructionFailed, "no convex balanced body within the retry budget: " + last_reason);
}

namespace {

Point apply(const Isometry& g, const Point& p) {
    const Vec2 v = p - g.center;
    if (g.kind == Isometry::Kind::Rotation) return g.center + rotate(v, g.angle);
    const Vec2 a = unit_vector(g.angle);
    return g.center + a * (2 * dot(v, a)) - v;
}

bool polygon_maps_to_itself(const Polygon& poly, const Isometry& g, double tol) {
    for (const Point& p : poly.vertices()) {
        const Point q = apply(g, p);
        const bool hit = std::any_of(poly.vertices().begin(), poly.vertices().end(),
                                     [&](const Point& v) { return distance(q, v) <= tol; });
        if (!hit) return false;
    }
    return true;
}

std::vector<double> support_function(std::span<const Point> pts, int n_dirs) {
    std::vector<double> h(n_dirs, -1e300);
    for (int k = 0; k < n_dirs; ++k) {
        const Vec2 u = unit_vector(kTwoPi * k / n_dirs);
        for (const Point& p : pts) h[k] = std::max(h[k], dot(p, u));
    }
    return h;
}

}  // namespace

std::vector<Isometry> symmetry_search(const Body& body, double rel_tol) {
    const Point c = centroid(body);
    const double tol = rel_tol * diameter(body);
    std::vector<Isometry> cands;
    std::vector<double> rot;
    for (int n = 2; n <= 12; ++n)
        for (int k = 1; k < n; ++k)
            if (std::gcd(k, n) == 1) rot.push_back(kTwoPi * k / n);
    std::sort(rot.begin(), rot.end());
    for (double a : rot) cands.push_back({Isometry::Kind::Rotation, a, c});

    std::vector<double> axes;
    auto add_axis = [&](const Point& p) {
        const Vec2 d = p - c;
        if (norm(d) <= tol) return;
        double a = std::fmod(std::atan2(d.y, d.x) + kPi, kPi);
        axes.push_back(a);
    };
    std::vector<Point> outline;
    if (const auto* poly = std::get_if<Polygon>(&body)) {
        for (std::size_t i = 0; i < poly->size(); ++i) {
            add_axis((*poly)[i]);
            add_axis(((*poly)[i] + (*poly)[i + 1]) * 0.5);
        }
    } else if (std::holds_alternative<Disk>(body)) {
        axes = {0.0, kPi / 2};
    } else {
        const auto& rb = std::get<RadialArcBody>(body);
        outline = rb.outline(4096);
        const std::size_t n = outline.size();
        for (std::size_t i = 0; i < n; ++i) {
            const double r0 = distance(outline[(i + n - 1) % n], c);
            const double r1 = distance(outline[i], c);
            const double r2 = distance(outline[(i + 1) % n], c);
            const double eps = 1e-12 * r1;
            if ((r1 > r0 + eps && r1 >= r2) || (r1 < r0 - eps && r1 <= r2)) add_axis(outline[i]);
        }
        for (double a : rb.junction_angles()) add_axis(unit_vector(a));
    }
    std::sort(axes.begin(), axes.end());
    axes.erase(std::unique(axes.begin(), axes.end(), [](double a, double b) { return b - a < 1e-9; }), axes.end());
    if (axes.size() > 1 && axes.front() + kPi - axes.back() < 1e-9) axes.pop_back();
    for (double a : axes) cands.push_back({Isometry::Kind::Reflection, a, c});

    constexpr int kDirs = 720;
    const std::vector<double> h0 = outline.empty() ? std::vector<double>{} : support_function(outline, kDirs);
    std::vector<Isometry> found;
    for (const Isometry& g : cands) {
        bool ok = false;
        if (const auto* poly = std::get_if<Polygon>(&body)) {
            ok = polygon_maps_to_itself(*poly, g, tol);
        } else if (std::holds_alternative<Disk>(body)) {
            ok = true;
        } else {
            std::vector<Point> img(outline.size());
            for (std::size_t i = 0; i < outline.size(); ++i) img[i] = apply(g, outline[i]);
            const auto h1 = support_function(img, kDirs);
            double worst = 0.0;
            for (int k = 0; k < kDirs; ++k) worst = std::max(worst, std::abs(h1[k] - h0[k]));
            ok = worst < tol;
        }
        if (ok) found.push_back(g);
    }
    return found;
}

}  // namespace radcen
