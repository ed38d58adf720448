#include "radcen/geometry.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace radcen {

namespace {

constexpr double kArcDedup = 1e-12;

double wrap_angle(double a) {
    a = std::fmod(a, kTwoPi);
    if (a < 0) a += kTwoPi;
    if (a >= kTwoPi) a -= kTwoPi;
    return a;
}

// Angular distance in [0, π].
double angular_distance(double a, double b) {
    const double d = wrap_angle(a - b);
    return d > kPi ? kTwoPi - d : d;
}

double max_pairwise_distance(std::span<const Point> pts) {
    double best = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) best = std::max(best, distance(pts[i], pts[j]));
    return best;
}

bool segments_cross(const Point& a, const Point& b, const Point& c, const Point& d, double eps) {
    const Vec2 r = b - a;
    const Vec2 s = d - c;
    const double den = cross(r, s);
    if (std::abs(den) <= eps * norm(r) * norm(s)) {
        // Parallel: overlapping collinear segments count as intersecting.
        if (std::abs(cross(c - a, r)) > eps * norm(r) * (norm(r) + norm(s))) return false;
        const double rr = dot(r, r);
        const double t0 = dot(c - a, r) / rr;
        const double t1 = dot(d - a, r) / rr;
        return std::max(t0, t1) >= -eps && std::min(t0, t1) <= 1 + eps;
    }
    const double t = cross(c - a, s) / den;
    const double u = cross(c - a, r) / den;
    return t >= -eps && t <= 1 + eps && u >= -eps && u <= 1 + eps;
}

bool segments_cross_properly(const Point& a, const Point& b, const Point& c, const Point& d, double eps) {
    const Vec2 r = b - a;
    const Vec2 s = d - c;
    const double den = cross(r, s);
    if (std::abs(den) <= 1e-14 * norm(r) * norm(s)) return false;
    const double t = cross(c - a, s) / den;
    const double u = cross(c - a, r) / den;
    return t > eps && t < 1 - eps && u > eps && u < 1 - eps;
}

// Smallest disk through two or three points.
Circle disk_from(const Point& a, const Point& b) { return {(a + b) * 0.5, distance(a, b) * 0.5}; }

Circle disk_from(const Point& a, const Point& b, const Point& c) {
    const Vec2 ab = b - a;
    const Vec2 ac = c - a;
    const double d = 2.0 * cross(ab, ac);
    if (std::abs(d) < 1e-300) {
        Circle best = disk_from(a, b);
        for (const Circle& cand : {disk_from(a, c), disk_from(b, c)})
            if (cand.radius > best.radius) best = cand;
        return best;
    }
    const double ab2 = dot(ab, ab);
    const double ac2 = dot(ac, ac);
    const Vec2 off{(ac.y * ab2 - ab.y * ac2) / d, (ab.x * ac2 - ac.x * ab2) / d};
    return {a + off, norm(off)};
}

Circle welzl(std::vector<Point> pts) {
    std::mt19937 rng(0x5eedU);
    std::shuffle(pts.begin(), pts.end(), rng);
    const double scale = max_pairwise_distance(std::span<const Point>(pts).first(std::min<std::size_t>(pts.size(), 64)));
    const double eps = 1e-12 * std::max(scale, 1e-300);
    auto outside = [&](const Circle& c, const Point& p) { return distance(c.center, p) > c.radius + eps; };
    Circle c{pts[0], 0.0};
    for (std::size_t i = 1; i < pts.size(); ++i) {
        if (!outside(c, pts[i])) continue;
        c = {pts[i], 0.0};
        for (std::size_t j = 0; j < i; ++j) {
            if (!outside(c, pts[j])) continue;
            c = disk_from(pts[i], pts[j]);
            for (std::size_t k = 0; k < j; ++k)
                if (outside(c, pts[k])) c = disk_from(pts[i], pts[j], pts[k]);
        }
    }
    return c;
}

// Dense simplex for: maximize c^T z subject to A z <= b, z >= 0, with b >= 0.
std::vector<double> simplex_max(const std::vector<std::vector<double>>& A, const std::vector<double>& b,
                                const std::vector<double>& c) {
    const std::size_t m = A.size();
    const std::size_t n = c.size();
    const std::size_t cols = n + m + 1;
    std::vector<std::vector<double>> tab(m + 1, std::vector<double>(cols, 0.0));
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) tab[i][j] = A[i][j];
        tab[i][n + i] = 1.0;
        tab[i][cols - 1] = b[i];
        basis[i] = n + i;
    }
    for (std::size_t j = 0; j < n; ++j) tab[m][j] = -c[j];

    for (int iter = 0; iter < 10000; ++iter) {
        std::size_t enter = cols;
        for (std::size_t j = 0; j + 1 < cols; ++j)
            if (tab[m][j] < -1e-14) { enter = j; break; }  // Bland
        if (enter == cols) break;
        std::size_t leave = m;
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < m; ++i) {
            if (tab[i][enter] > 1e-14) {
                const double ratio = tab[i][cols - 1] / tab[i][enter];
                if (ratio < best - 1e-15 || (std::abs(ratio - best) <= 1e-15 && leave < m && basis[i] < basis[leave])) {
                    best = ratio;
                    leave = i;
                }
            }
        }
        if (leave == m) throw Error(ErrorCode::InvalidBody, "unbounded inscribed-disk program");
        const double piv = tab[leave][enter];
        for (double& v : tab[leave]) v /= piv;
        for (std::size_t i = 0; i <= m; ++i) {
            if (i == leave) continue;
            const double f = tab[i][enter];
            if (f == 0.0) continue;
            for (std::size_t j = 0; j < cols; ++j) tab[i][j] -= f * tab[leave][j];
        }
        basis[leave] = enter;
    }
    std::vector<double> z(n, 0.0);
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < n) z[basis[i]] = tab[i][cols - 1];
    return z;
}

Incircle convex_polygon_incircle(const Polygon& poly) {
    const Point g = poly.centroid();
    const std::size_t n = poly.size();
    std::vector<Vec2> normals(n);
    std::vector<double> offsets(n);
    std::vector<std::vector<double>> A(n, std::vector<double>(5));
    std::vector<double> b(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 e = poly[i + 1] - poly[i];
        const Vec2 out = Vec2{e.y, -e.x} / norm(e);
        normals[i] = out;
        offsets[i] = dot(out, poly[i]);
        A[i] = {out.x, -out.x, out.y, -out.y, 1.0};
        b[i] = dot(out, poly[i] - g);
    }
    const auto z = simplex_max(A, b, {0, 0, 0, 0, 1});
    const double r = z[4];
    const Point lp = g + Vec2{z[0] - z[1], z[2] - z[3]};

    const double diam = poly.diameter();
    const double shrink = r - 1e-9 * diam;
    std::vector<Point> region(poly.vertices().begin(), poly.vertices().end());
    for (std::size_t i = 0; i < n && !region.empty(); ++i)
        region = clip_half_plane(region, normals[i], offsets[i] - shrink);
    Point center = lp;
    // The optimal set is a point or a segment; take the midpoint of its extreme pair.
    if (region.size() >= 2) {
        double best = -1.0;
        for (std::size_t i = 0; i < region.size(); ++i)
            for (std::size_t j = i + 1; j < region.size(); ++j)
                if (const double d = distance(region[i], region[j]); d > best) {
                    best = d;
                    center = (region[i] + region[j]) * 0.5;
                }
        if (best <= 1e-7 * diam) center = lp;
    }
    return {center, r, false};
}

// Maximizes dist(p, boundary) over the body interior by compass search.
template <class Contains, class Dist>
Incircle compass_incircle(Contains&& inside, Dist&& dist, std::vector<Point> seeds, double diam) {
    Point best = seeds.front();
    double best_val = -1.0;
    for (const Point& s : seeds) {
        if (!inside(s)) continue;
        Point p = s;
        double val = dist(p);
        double step = 0.05 * diam;
        while (step > 1e-13 * diam) {
            bool moved = false;
            for (int k = 0; k < 8; ++k) {
                const Point q = p + unit_vector(k * kPi / 4) * step;
                if (!inside(q)) continue;
                const double qv = dist(q);
                if (qv > val) { p = q; val = qv; moved = true; break; }
            }
            if (!moved) step *= 0.5;
        }
        if (val > best_val) { best_val = val; best = p; }
    }
    return {best, best_val, true};
}

ArcSet clip_by_membership(const Body& body, const Point& x, double r) {
    constexpr int kSamples = 4096;
    ArcSet out{x, r, {}};
    std::vector<char> in(kSamples);
    for (int i = 0; i < kSamples; ++i) in[i] = contains(body, x + unit_vector(kTwoPi * i / kSamples) * r);
    auto refine = [&](double lo, double hi, bool lo_in) {
        for (int it = 0; it < 60; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (static_cast<bool>(contains(body, x + unit_vector(mid) * r)) == lo_in) lo = mid; else hi = mid;
        }
        return 0.5 * (lo + hi);
    };
    std::vector<std::pair<double, bool>> transitions;  // angle, entering
    for (int i = 0; i < kSamples; ++i) {
        const int j = (i + 1) % kSamples;
        if (in[i] != in[j]) {
            const double lo = kTwoPi * i / kSamples;
            transitions.emplace_back(wrap_angle(refine(lo, lo + kTwoPi / kSamples, in[i])), !in[i]);
        }
    }
    if (transitions.empty()) {
        if (in[0]) out.arcs.push_back({0.0, kTwoPi});
        return out;
    }
    std::sort(transitions.begin(), transitions.end());
    // Rotate so the list starts with an entering transition.
    auto first_enter = std::find_if(transitions.begin(), transitions.end(), [](auto& t) { return t.second; });
    std::rotate(transitions.begin(), first_enter, transitions.end());
    for (std::size_t i = 0; i + 1 < transitions.size(); i += 2) {
        double b = transitions[i].first;
        double e = transitions[i + 1].first;
        if (e <= b) e += kTwoPi;
        out.arcs.push_back({b, e});
    }
    std::sort(out.arcs.begin(), out.arcs.end(), [](const Arc& a, const Arc& b) { return a.begin < b.begin; });
    return out;
}

ArcSet clip_polygon(const Polygon& poly, const Point& x, double r) {
    ArcSet out{x, r, {}};
    std::vector<double> angles;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point a = poly[i];
        const Vec2 d = poly[i + 1] - a;
        const Vec2 f = a - x;
        const double A = dot(d, d);
        const double B = 2 * dot(f, d);
        const double C = dot(f, f) - r * r;
        const double disc = B * B - 4 * A * C;
        if (disc < 0) continue;
        const double sq = std::sqrt(disc);
        for (double t : {(-B - sq) / (2 * A), (-B + sq) / (2 * A)}) {
            if (t < -1e-14 || t > 1 + 1e-14) continue;
            const Vec2 p = f + d * t;
            angles.push_back(wrap_angle(std::atan2(p.y, p.x)));
        }
        // Vertex directions too: near-vertex crossings can lose both edge roots to rounding.
        if (norm(f) > 0) angles.push_back(wrap_angle(std::atan2(f.y, f.x)));
    }
    std::sort(angles.begin(), angles.end());
    std::vector<double> uniq;
    for (double a : angles)
        if (uniq.empty() || a - uniq.back() > kArcDedup) uniq.push_back(a);
    if (uniq.size() > 1 && uniq.front() + kTwoPi - uniq.back() <= kArcDedup) uniq.pop_back();

    auto inside_strict = [&](const Point& p) {
        return poly.contains(p);
    };
    if (uniq.empty()) {
        if (inside_strict(x + Vec2{r, 0.0})) out.arcs.push_back({0.0, kTwoPi});
        return out;
    }
    if (uniq.size() == 1) {
        // Tangential contact only: the rest of the circle is on one side.
        const double opposite = uniq[0] + kPi;
        if (inside_strict(x + unit_vector(opposite) * r)) out.arcs.push_back({0.0, kTwoPi});
        return out;
    }
    std::vector<Arc> raw;
    std::vector<bool> flags;
    for (std::size_t i = 0; i < uniq.size(); ++i) {
        const double b = uniq[i];
        const double e = (i + 1 < uniq.size()) ? uniq[i + 1] : uniq[0] + kTwoPi;
        const bool in = inside_strict(x + unit_vector(0.5 * (b + e)) * r);
        raw.push_back({b, e});
        flags.push_back(in);
    }
    if (std::all_of(flags.begin(), flags.end(), [](bool f) { return f; })) {
        out.arcs.push_back({0.0, kTwoPi});
        return out;
    }
    // Merge runs of included pieces separated only by tangential touches.
    const std::size_t m = raw.size();
    std::size_t start = 0;
    while (flags[start]) ++start;  // an excluded piece exists
    std::size_t i = (start + 1) % m;
    for (std::size_t count = 0; count < m;) {
        if (!flags[i]) { i = (i + 1) % m; ++count; continue; }
        double b = raw[i].begin;
        double e = raw[i].end;
        double offset = 0.0;
        std::size_t j = (i + 1) % m;
        ++count;
        while (flags[j] && count < m) {
            if (j == 0) offset = kTwoPi;
            e = raw[j].end + offset;
            j = (j + 1) % m;
            ++count;
        }
        const double nb = wrap_angle(b);
        out.arcs.push_back({nb, nb + (e - b)});
        i = j;
    }
    std::sort(out.arcs.begin(), out.arcs.end(), [](const Arc& a, const Arc& b) { return a.begin < b.begin; });
    return out;
}

ArcSet clip_disk(const Disk& disk, const Point& x, double r) {
    ArcSet out{x, r, {}};
    const double d = distance(disk.center, x);
    const double R = disk.radius;
    if (d + r <= R * (1 + 1e-15)) {
        out.arcs.push_back({0.0, kTwoPi});
        return out;
    }
    if (d >= r + R || r >= d + R) return out;
    const double cosw = std::clamp((d * d + r * r - R * R) / (2 * d * r), -1.0, 1.0);
    const double half = std::acos(cosw);
    const Vec2 toward = disk.center - x;
    const double mid = std::atan2(toward.y, toward.x);
    const double b = wrap_angle(mid - half);
    out.arcs.push_back({b, b + 2 * half});
    return out;
}

ArcSet clip_radial(const RadialArcBody& body, const Point& x, double r) {
    if (norm(x) > 1e-14) return clip_by_membership(Body{body}, x, r);
    ArcSet out{x, r, {}};
    if (r <= 1.0) {
        out.arcs.push_back({0.0, kTwoPi});
        return out;
    }
    for (int d = 0; d < 3; ++d) {
        const double a = body.half_width(d, r);
        if (a <= 0) continue;
        const double b = wrap_angle(body.direction_angles()[d] - a);
        out.arcs.push_back({b, b + 2 * a});
    }
    std::sort(out.arcs.begin(), out.arcs.end(), [](const Arc& a, const Arc& b) { return a.begin < b.begin; });
    return out;
}

bool reflected_cap_inside(const Polygon& poly, std::span<const Point> cap, const Vec2& v, double b, double slack) {
    if (cap.size() < 3) return true;
    std::vector<Point> refl(cap.size());
    for (std::size_t i = 0; i < cap.size(); ++i) refl[i] = cap[i] - v * (2 * (dot(cap[i], v) - b));
    const std::size_t n = poly.size();
    auto half_plane_ok = [&](const Point& q) {
        for (std::size_t i = 0; i < n; ++i) {
            const Vec2 e = poly[i + 1] - poly[i];
            if (cross(e, q - poly[i]) < -slack * norm(e)) return false;
        }
        return true;
    };
    if (poly.is_convex()) return std::all_of(refl.begin(), refl.end(), half_plane_ok);

    auto near_inside = [&](const Point& q) { return poly.contains(q) || poly.boundary_distance(q) <= slack; };
    for (std::size_t i = 0; i < refl.size(); ++i) {
        const Point& p = refl[i];
        const Point& q = refl[(i + 1) % refl.size()];
        if (!near_inside(p) || !near_inside((p + q) * 0.5)) return false;
        const bool on_cut = std::abs(dot(p, v) - b) <= slack && std::abs(dot(q, v) - b) <= slack;
        if (on_cut) continue;
        for (std::size_t k = 0; k < n; ++k)
            if (segments_cross_properly(p, q, poly[k], poly[k + 1], 1e-9)) return false;
    }
    return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// Polygon

double signed_area(std::span<const Point> pts) {
    double s = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) s += cross(pts[i], pts[(i + 1) % pts.size()]);
    return 0.5 * s;
}

bool point_in_polygon(std::span<const Point> pts, const Point& p) {
    bool inside = false;
    const std::size_t n = pts.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const Point& a = pts[i];
        const Point& b = pts[j];
        if ((a.y > p.y) != (b.y > p.y)) {
            const double xint = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
            if (p.x < xint) inside = !inside;
        }
    }
    return inside;
}

double segment_distance(const Point& p, const Point& a, const Point& b) {
    const Vec2 d = b - a;
    const double len2 = dot(d, d);
    const double t = len2 > 0 ? std::clamp(dot(p - a, d) / len2, 0.0, 1.0) : 0.0;
    return distance(p, a + d * t);
}

std::vector<Point> convex_hull(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
    pts.erase(std::unique(pts.begin(), pts.end(), [](const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }), pts.end());
    if (pts.size() < 3) return pts;
    std::vector<Point> hull(2 * pts.size());
    std::size_t k = 0;
    for (const Point& p : pts) {
        while (k >= 2 && cross(hull[k - 1] - hull[k - 2], p - hull[k - 2]) <= 0) --k;
        hull[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

std::vector<Point> clip_half_plane(std::span<const Point> pts, const Vec2& n, double offset) {
    std::vector<Point> out;
    const std::size_t m = pts.size();
    for (std::size_t i = 0; i < m; ++i) {
        const Point& p = pts[i];
        const Point& q = pts[(i + 1) % m];
        const double dp = dot(p, n) - offset;
        const double dq = dot(q, n) - offset;
        if (dp <= 0) out.push_back(p);
        if ((dp < 0 && dq > 0) || (dp > 0 && dq < 0)) out.push_back(p + (q - p) * (dp / (dp - dq)));
    }
    return out;
}

Polygon::Polygon(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
    const std::size_t n = vertices_.size();
    if (n < 3) throw Error(ErrorCode::InvalidBody, "polygon needs at least 3 vertices");
    for (const Point& p : vertices_)
        if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw Error(ErrorCode::InvalidBody, "non-finite vertex");
    diameter_ = max_pairwise_distance(vertices_);
    if (!(diameter_ > 0)) throw Error(ErrorCode::InvalidBody, "degenerate polygon");
    for (std::size_t i = 0; i < n; ++i)
        if (distance(vertices_[i], vertices_[(i + 1) % n]) <= 1e-14 * diameter_)
            throw Error(ErrorCode::InvalidBody, "repeated consecutive vertex");
    if (signed_area(vertices_) < 0) std::reverse(vertices_.begin(), vertices_.end());
    area_ = signed_area(vertices_);
    if (!(area_ > 1e-14 * diameter_ * diameter_)) throw Error(ErrorCode::InvalidBody, "polygon has no area");

    bool all_left = true;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 e1 = (*this)[i + 1] - (*this)[i];
        const Vec2 e2 = (*this)[i + 2] - (*this)[i + 1];
        const double c = cross(e1, e2);
        if (std::abs(c) <= 1e-12 * norm(e1) * norm(e2)) throw Error(ErrorCode::InvalidBody, "collinear consecutive vertices");
        if (c < 0) all_left = false;
    }
    convex_ = all_left;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1) continue;
            if (segments_cross((*this)[i], (*this)[i + 1], (*this)[j], (*this)[j + 1], 1e-12))
                throw Error(ErrorCode::InvalidBody, "polygon is self-intersecting");
        }
    }
    if (convex_) {
        // Convex turns everywhere can still wind more than once.
        double turn = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const Vec2 e1 = (*this)[i + 1] - (*this)[i];
            const Vec2 e2 = (*this)[i + 2] - (*this)[i + 1];
            turn += std::atan2(cross(e1, e2), dot(e1, e2));
        }
        if (std::abs(turn - kTwoPi) > 1e-6) throw Error(ErrorCode::InvalidBody, "polygon winds more than once");
    }
    double cx = 0, cy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point& p = vertices_[i];
        const Point& q = vertices_[(i + 1) % n];
        const double w = cross(p, q);
        cx += (p.x + q.x) * w;
        cy += (p.y + q.y) * w;
    }
    centroid_ = {cx / (6 * area_), cy / (6 * area_)};
}

bool Polygon::contains(const Point& p) const {
    if (boundary_distance(p) <= 1e-12 * diameter_) return true;
    return point_in_polygon(vertices_, p);
}

double Polygon::boundary_distance(const Point& p) const {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < size(); ++i) best = std::min(best, segment_distance(p, (*this)[i], (*this)[i + 1]));
    return best;
}

Disk::Disk(Point c, double r) : center(c), radius(r) {
    if (!(r > 0) || !std::isfinite(r) || !std::isfinite(c.x) || !std::isfinite(c.y))
        throw Error(ErrorCode::InvalidBody, "disk radius must be positive and finite");
}

// ---------------------------------------------------------------------------
// RadialArcBody

RadialArcBody::RadialArcBody(double r_max, std::array<double, 3> direction_angles, std::vector<double> knots,
                             std::array<std::vector<double>, 3> sine_profiles)
    : r_max_(r_max), angles_(direction_angles), knots_(std::move(knots)), sines_(std::move(sine_profiles)) {
    if (!(r_max_ > 1.0)) throw Error(ErrorCode::InvalidBody, "r_max must exceed 1");
    if (knots_.size() < 2 || knots_.front() != 1.0 || std::abs(knots_.back() - r_max_) > 1e-15 * r_max_)
        throw Error(ErrorCode::InvalidBody, "profile knots must span [1, r_max]");
    for (std::size_t k = 1; k < knots_.size(); ++k)
        if (!(knots_[k] > knots_[k - 1])) throw Error(ErrorCode::InvalidBody, "profile knots must increase");
    const double smax = std::sin(kPi / 3);
    for (int d = 0; d < 3; ++d) {
        const auto& s = sines_[d];
        if (s.size() != knots_.size()) throw Error(ErrorCode::InvalidBody, "profile length mismatch");
        if (s.back() != 0.0) throw Error(ErrorCode::InvalidBody, "profile must vanish at r_max");
        if (!(s.front() > 0) || s.front() > smax + 1e-15) throw Error(ErrorCode::InvalidBody, "half-width outside (0, π/3]");
        for (std::size_t k = 1; k < s.size(); ++k)
            if (!(s[k] < s[k - 1])) throw Error(ErrorCode::InvalidBody, "profile must strictly decrease");
        angles_[d] = wrap_angle(angles_[d]);
    }
    for (int d = 0; d < 3; ++d)
        for (int e = d + 1; e < 3; ++e)
            if (half_width(d, 1.0 + 1e-300) + half_width(e, 1.0 + 1e-300) >= angular_distance(angles_[d], angles_[e]))
                throw Error(ErrorCode::InvalidBody, "caps overlap");

    // Area and centroid by the polar formulas, split at the profile's corner angles.
    std::vector<double> breaks;
    for (const Point& p : corner_points()) breaks.push_back(wrap_angle(std::atan2(p.y, p.x)));
    breaks.push_back(0.0);
    breaks.push_back(kTwoPi);
    std::sort(breaks.begin(), breaks.end());
    using GK = boost::math::quadrature::gauss_kronrod<double, 31>;
    double a2 = 0, mx = 0, my = 0;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        const double lo = breaks[i], hi = breaks[i + 1];
        if (hi - lo <= 0) continue;
        a2 += GK::integrate([&](double t) { const double r = radial_function(t); return r * r / 2; }, lo, hi, 6, 1e-15);
        mx += GK::integrate([&](double t) { const double r = radial_function(t); return r * r * r / 3 * std::cos(t); }, lo, hi, 6, 1e-15);
        my += GK::integrate([&](double t) { const double r = radial_function(t); return r * r * r / 3 * std::sin(t); }, lo, hi, 6, 1e-15);
    }
    area_ = a2;
    centroid_ = {mx / a2, my / a2};
    const auto pts = outline(720);
    diameter_ = max_pairwise_distance(pts);
}

double RadialArcBody::half_width_sine(int d, double r) const {
    if (r <= 1.0 || r >= r_max_) return r <= 1.0 ? sines_[d].front() : 0.0;
    const auto it = std::upper_bound(knots_.begin(), knots_.end(), r);
    const std::size_t k = static_cast<std::size_t>(it - knots_.begin());
    const double r0 = knots_[k - 1], r1 = knots_[k];
    const double t = (r - r0) / (r1 - r0);
    return sines_[d][k - 1] + t * (sines_[d][k] - sines_[d][k - 1]);
}

double RadialArcBody::half_width(int d, double r) const { return std::asin(half_width_sine(d, r)); }

double RadialArcBody::radial_function(double theta) const {
    double rho = 1.0;
    for (int d = 0; d < 3; ++d) {
        const double dth = angular_distance(theta, angles_[d]);
        if (dth >= kPi / 2) continue;
        const double s = std::sin(dth);
        const auto& sp = sines_[d];
        if (s >= sp.front()) continue;
        // sp is decreasing: find k with sp[k] > s >= sp[k+1].
        std::size_t lo = 0, hi = sp.size() - 1;
        while (hi - lo > 1) {
            const std::size_t mid = (lo + hi) / 2;
            if (sp[mid] > s) lo = mid; else hi = mid;
        }
        const double t = (sp[lo] - s) / (sp[lo] - sp[hi]);
        rho = std::max(rho, knots_[lo] + t * (knots_[hi] - knots_[lo]));
    }
    return rho;
}

bool RadialArcBody::contains(const Point& p) const {
    const double r = norm(p);
    if (r <= 1.0 + 1e-15) return true;
    if (r > r_max_) return false;
    const double th = std::atan2(p.y, p.x);
    for (int d = 0; d < 3; ++d) {
        const double dth = angular_distance(th, angles_[d]);
        if (dth < kPi / 2 && std::sin(dth) <= half_width_sine(d, r)) return true;
    }
    return false;
}

std::vector<double> RadialArcBody::junction_angles() const {
    std::vector<double> out;
    for (int d = 0; d < 3; ++d) {
        const double a = std::asin(sines_[d].front());
        out.push_back(wrap_angle(angles_[d] - a));
        out.push_back(wrap_angle(angles_[d] + a));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Point> RadialArcBody::corner_points() const {
    std::vector<Point> pts;
    for (int d = 0; d < 3; ++d) {
        for (std::size_t k = 0; k < knots_.size(); ++k) {
            const double a = std::asin(sines_[d][k]);
            pts.push_back(unit_vector(angles_[d] - a) * knots_[k]);
            if (a > 0) pts.push_back(unit_vector(angles_[d] + a) * knots_[k]);
        }
    }
    return pts;
}

std::vector<Point> RadialArcBody::outline(int n) const {
    std::vector<Point> pts(n);
    for (int i = 0; i < n; ++i) {
        const double th = kTwoPi * i / n;
        pts[i] = unit_vector(th) * radial_function(th);
    }
    return pts;
}

// ---------------------------------------------------------------------------
// Arc sets and unfolded regions

double ArcSet::measure() const {
    double s = 0.0;
    for (const Arc& a : arcs) s += a.length();
    return s;
}

bool ArcSet::is_full() const { return measure() >= kTwoPi - 1e-12; }

ArcSet ArcSet::complement() const {
    ArcSet out{center, radius, {}};
    if (arcs.empty()) {
        out.arcs.push_back({0.0, kTwoPi});
        return out;
    }
    if (is_full()) return out;
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        const double b = arcs[i].end;
        const double e = (i + 1 < arcs.size()) ? arcs[i + 1].begin : arcs[0].begin + kTwoPi;
        if (e - b <= kArcDedup) continue;
        const double nb = wrap_angle(b);
        out.arcs.push_back({nb, nb + (e - b)});
    }
    std::sort(out.arcs.begin(), out.arcs.end(), [](const Arc& a, const Arc& b) { return a.begin < b.begin; });
    return out;
}

bool UnfoldedRegion::contains(const Point& p, double tol) const {
    for (std::size_t i = 0; i < directions.size(); ++i)
        if (dot(p, directions[i]) > offsets[i] + tol) return false;
    return true;
}

double UnfoldedRegion::diameter() const { return max_pairwise_distance(outline); }

// ---------------------------------------------------------------------------
// Body-level queries

double area(const Body& body) {
    return std::visit([](const auto& b) -> double {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, Disk>) return kPi * b.radius * b.radius;
        else return b.area();
    }, body);
}

Point centroid(const Body& body) {
    return std::visit([](const auto& b) -> Point {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, Disk>) return b.center;
        else return b.centroid();
    }, body);
}

double diameter(const Body& body) {
    return std::visit([](const auto& b) -> double {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, Disk>) return 2 * b.radius;
        else return b.diameter();
    }, body);
}

bool contains(const Body& body, const Point& p) {
    return std::visit([&](const auto& b) -> bool {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, Disk>) return distance(p, b.center) <= b.radius * (1 + 1e-15);
        else return b.contains(p);
    }, body);
}

double boundary_distance(const Body& body, const Point& p) {
    return std::visit([&](const auto& b) -> double {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, Disk>) {
            return std::abs(b.radius - distance(p, b.center));
        } else if constexpr (std::is_same_v<T, Polygon>) {
            return b.boundary_distance(p);
        } else {
            const auto pts = b.outline(8192);
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < pts.size(); ++i)
                best = std::min(best, segment_distance(p, pts[i], pts[(i + 1) % pts.size()]));
            return best;
        }
    }, body);
}

bool is_convex(const Body& body) {
    return std::visit([](const auto& b) -> bool {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, Disk>) return true;
        else if constexpr (std::is_same_v<T, Polygon>) return b.is_convex();
        else {
            const auto pts = b.outline(4096);
            const std::size_t n = pts.size();
            for (std::size_t i = 0; i < n; ++i) {
                const Vec2 e1 = pts[(i + 1) % n] - pts[i];
                const Vec2 e2 = pts[(i + 2) % n] - pts[(i + 1) % n];
                if (cross(e1, e2) / (norm(e1) * norm(e2)) < -1e-12) return false;
            }
            return true;
        }
    }, body);
}

Circle circumcenter(const Body& body) {
    return std::visit([](const auto& b) -> Circle {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, Disk>) return {b.center, b.radius};
        else if constexpr (std::is_same_v<T, Polygon>) return welzl({b.vertices().begin(), b.vertices().end()});
        else return welzl(b.outline(8192));
    }, body);
}

Incircle incenter(const Body& body) {
    return std::visit([](const auto& b) -> Incircle {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, Disk>) {
            return {b.center, b.radius, false};
        } else if constexpr (std::is_same_v<T, Polygon>) {
            if (b.is_convex()) return convex_polygon_incircle(b);
            // Grid seeds, best few refined.
            double minx = b[0].x, maxx = minx, miny = b[0].y, maxy = miny;
            for (const Point& p : b.vertices()) {
                minx = std::min(minx, p.x); maxx = std::max(maxx, p.x);
                miny = std::min(miny, p.y); maxy = std::max(maxy, p.y);
            }
            std::vector<std::pair<double, Point>> cands;
            constexpr int kGrid = 48;
            for (int i = 0; i < kGrid; ++i)
                for (int j = 0; j < kGrid; ++j) {
                    const Point p{minx + (maxx - minx) * (i + 0.5) / kGrid, miny + (maxy - miny) * (j + 0.5) / kGrid};
                    if (point_in_polygon(b.vertices(), p)) cands.emplace_back(b.boundary_distance(p), p);
                }
            if (cands.empty()) throw Error(ErrorCode::InvalidBody, "no interior grid point");
            std::sort(cands.begin(), cands.end(), [](auto& a, auto& c) { return a.first > c.first; });
            std::vector<Point> seeds;
            for (std::size_t k = 0; k < std::min<std::size_t>(8, cands.size()); ++k) seeds.push_back(cands[k].second);
            return compass_incircle([&](const Point& p) { return point_in_polygon(b.vertices(), p); },
                                    [&](const Point& p) { return b.boundary_distance(p); }, seeds, b.diameter());
        } else {
            const auto pts = b.outline(8192);
            Incircle ic = compass_incircle(
                [&](const Point& p) { return b.contains(p); },
                [&](const Point& p) {
                    double best = std::numeric_limits<double>::infinity();
                    for (std::size_t i = 0; i < pts.size(); ++i)
                        best = std::min(best, segment_distance(p, pts[i], pts[(i + 1) % pts.size()]));
                    return best;
                },
                {b.centroid()}, b.diameter());
            ic.possibly_non_unique = false;
            return ic;
        }
    }, body);
}

double radial_function(const Body& body, const Point& x, double theta) {
    const Vec2 u = unit_vector(theta);
    return std::visit([&](const auto& b) -> double {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, Disk>) {
            const Vec2 f = x - b.center;
            const double pu = dot(f, u);
            const double disc = pu * pu - (dot(f, f) - b.radius * b.radius);
            if (disc < 0) throw Error(ErrorCode::NotInterior, "ray misses the disk");
            return std::max(0.0, -pu + std::sqrt(disc));
        } else if constexpr (std::is_same_v<T, Polygon>) {
            std::vector<double> hits;
            for (std::size_t i = 0; i < b.size(); ++i) {
                const Point a = b[i];
                const Vec2 e = b[i + 1] - a;
                const double den = cross(u, e);
                if (std::abs(den) < 1e-300) continue;
                const double t = cross(a - x, e) / den;   // along the ray
                const double s = cross(a - x, u) / den;   // along the edge
                if (t > 0 && s >= -1e-14 && s <= 1 + 1e-14) hits.push_back(t);
            }
            if (hits.empty()) throw Error(ErrorCode::NotInterior, "ray does not leave the polygon");
            std::sort(hits.begin(), hits.end());
            const double first = hits.front();
            const double tol = 1e-12 * b.diameter();
            for (std::size_t k = 1; k < hits.size(); ++k) {
                if (hits[k] - hits[k - 1] <= tol) continue;
                const double mid = 0.5 * (hits[k] + hits[k - 1]);
                if (point_in_polygon(b.vertices(), x + u * mid))
                    throw Error(ErrorCode::NotStarShaped, "ray re-enters the polygon");
            }
            return first;
        } else {
            if (norm(x) < 1e-14) return b.radial_function(theta);
            if (!b.contains(x)) throw Error(ErrorCode::NotInterior, "base point outside body");
            double lo = 0.0, hi = 2 * b.r_max() + norm(x);
            for (int it = 0; it < 200 && hi - lo > 1e-16 * hi; ++it) {
                const double mid = 0.5 * (lo + hi);
                if (b.contains(x + u * mid)) lo = mid; else hi = mid;
            }
            return 0.5 * (lo + hi);
        }
    }, body);
}

ArcSet circle_clip(const Body& body, const Point& x, double r) {
    if (!(r > 0)) throw Error(ErrorCode::InvalidArgument, "radius must be positive");
    return std::visit([&](const auto& b) -> ArcSet {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, Disk>) return clip_disk(b, x, r);
        else if constexpr (std::is_same_v<T, Polygon>) return clip_polygon(b, x, r);
        else return clip_radial(b, x, r);
    }, body);
}

double maximal_folding(const Polygon& poly, const Vec2& v_in) {
    const Vec2 v = v_in / norm(v_in);
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (const Point& p : poly.vertices()) {
        lo = std::min(lo, dot(p, v));
        hi = std::max(hi, dot(p, v));
    }
    const double slack = 1e-12 * poly.diameter();
    auto good = [&](double b) {
        const auto cap = clip_half_plane(poly.vertices(), -v, -b);
        return reflected_cap_inside(poly, cap, v, b, slack);
    };
    constexpr int kScan = 256;
    double prev = hi;
    for (int k = 1; k <= kScan; ++k) {
        const double b = hi - (hi - lo) * k / kScan;
        if (!good(b)) {
            double g = prev, f = b;  // good at g, fails at f
            for (int it = 0; it < 60; ++it) {
                const double mid = 0.5 * (g + f);
                if (good(mid)) g = mid; else f = mid;
            }
            return g;
        }
        prev = b;
    }
    return lo;
}

UnfoldedRegion unfolded_region(const Polygon& poly, int n_dirs) {
    if (n_dirs < 8) throw Error(ErrorCode::InvalidArgument, "n_dirs must be at least 8");
    UnfoldedRegion region;
    const Point g = poly.centroid();
    const double L = 4 * poly.diameter();
    std::vector<Point> box{g + Vec2{-L, -L}, g + Vec2{L, -L}, g + Vec2{L, L}, g + Vec2{-L, L}};
    for (int k = 0; k < n_dirs; ++k) {
        const Vec2 v = unit_vector(kTwoPi * k / n_dirs);
        const double l = maximal_folding(poly, v);
        region.directions.push_back(v);
        region.offsets.push_back(l);
        box = clip_half_plane(box, v, l);
    }
    region.outline = std::move(box);
    return region;
}

std::vector<Point> boundary_samples(const Body& body, int n) {
    return std::visit([&](const auto& b) -> std::vector<Point> {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, Disk>) {
            std::vector<Point> pts(n);
            for (int i = 0; i < n; ++i) pts[i] = b.center + unit_vector(kTwoPi * i / n) * b.radius;
            return pts;
        } else if constexpr (std::is_same_v<T, Polygon>) {
            return {b.vertices().begin(), b.vertices().end()};
        } else {
            return b.outline(n);
        }
    }, body);
}

Polygon transformed(const Polygon& poly, double rotation, const Vec2& translation, double scale) {
    std::vector<Point> pts;
    for (const Point& p : poly.vertices()) pts.push_back(rotate(p, rotation) * scale + translation);
    return Polygon(std::move(pts));
}

Disk transformed(const Disk& disk, double rotation, const Vec2& translation, double scale) {
    return Disk(rotate(disk.center, rotation) * scale + translation, disk.radius * scale);
}

}  // namespace radcen
