#pragma once

// Independent reference computations for the tests. None of these call the
// library's quadrature, clipping or potential code.

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "radcen/geometry.hpp"

namespace radcen::oracle {

// Composite Gauss-Legendre on [a,b]: `panels` panels of the 8-point rule.
inline double gauss(const std::function<double(double)>& f, double a, double b, int panels = 64) {
    static const double xs[4] = {0.1834346424956498, 0.5255324099163290, 0.7966664774136267, 0.9602898564975363};
    static const double ws[4] = {0.3626837833783620, 0.3137066458778873, 0.2223810344533745, 0.1012285362903763};
    const double h = (b - a) / panels;
    double s = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double m = a + (p + 0.5) * h, r = 0.5 * h;
        for (int k = 0; k < 4; ++k) s += ws[k] * r * (f(m - r * xs[k]) + f(m + r * xs[k]));
    }
    return s;
}

// Riesz potential via the Duffy map y = x + u(a + v(b−a)) on the signed triangles
// (x, v_i, v_{i+1}); the u-integral is done in closed form (finite part for α <= 0).
inline double riesz_duffy(const std::vector<Point>& poly, const Point& x, double alpha, int panels = 256) {
    double total = 0.0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Vec2 a = poly[i] - x, b = poly[(i + 1) % poly.size()] - x;
        const double c = a.x * b.y - a.y * b.x;
        if (c == 0.0) continue;
        auto len = [&](double v) { return std::hypot(a.x + v * (b.x - a.x), a.y + v * (b.y - a.y)); };
        std::function<double(double)> g;
        if (alpha == 2.0) g = [&](double v) { return -(std::log(len(v)) / 2 - 0.25); };
        else if (alpha == 0.0) g = [&](double v) { const double d = len(v); return std::log(d) / (d * d); };
        else {
            const double sign = alpha > 2 ? -1.0 : 1.0;
            g = [&, sign](double v) { return sign * std::pow(len(v), alpha - 2) / alpha; };
        }
        total += c * gauss(g, 0.0, 1.0, panels);
    }
    return total;
}

// ∫_Ω k(|x−y|) dy with the same Duffy map, u-integral by Gauss as well.
inline double radial_duffy(const std::vector<Point>& poly, const Point& x, const std::function<double(double)>& k,
                           int panels = 64) {
    double total = 0.0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Vec2 a = poly[i] - x, b = poly[(i + 1) % poly.size()] - x;
        const double c = a.x * b.y - a.y * b.x;
        if (c == 0.0) continue;
        total += c * gauss([&](double v) {
            const double d = std::hypot(a.x + v * (b.x - a.x), a.y + v * (b.y - a.y));
            return gauss([&](double u) { return u * k(u * d); }, 0.0, 1.0, panels);
        }, 0.0, 1.0, panels);
    }
    return total;
}

inline double poisson_duffy(const std::vector<Point>& poly, const Point& x, double h) {
    return radial_duffy(poly, x, [h](double r) { return h / (2 * kPi * std::pow(r * r + h * h, 1.5)); });
}

inline double heat_duffy(const std::vector<Point>& poly, const Point& x, double t) {
    return radial_duffy(poly, x, [t](double r) { return std::exp(-r * r / (4 * t)) / (4 * kPi * t); });
}

template <class F>
Vec2 fd_gradient(const F& f, const Point& x, double step) {
    return {(f(x + Vec2{step, 0}) - f(x - Vec2{step, 0})) / (2 * step),
            (f(x + Vec2{0, step}) - f(x - Vec2{0, step})) / (2 * step)};
}

inline bool inside_polygon(const std::vector<Point>& poly, const Point& p) {
    bool in = false;
    for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
        const Point& a = poly[i];
        const Point& b = poly[j];
        if ((a.y > p.y) != (b.y > p.y) && p.x < (b.x - a.x) * (p.y - a.y) / (b.y - a.y) + a.x) in = !in;
    }
    return in;
}

// Arc measure and first moment of the circle inside the body from n equally spaced samples.
struct CircleSample {
    double measure = 0.0;
    Vec2 moment;
};

inline CircleSample sample_circle(const std::function<bool(const Point&)>& inside, const Point& x, double r, int n) {
    CircleSample s;
    const double dt = kTwoPi / n;
    for (int k = 0; k < n; ++k) {
        const double t = (k + 0.5) * dt;
        if (inside(x + Vec2{std::cos(t), std::sin(t)} * r)) {
            s.measure += dt;
            s.moment += Vec2{std::cos(t), std::sin(t)} * (r * dt);
        }
    }
    return s;
}

inline double shoelace(const std::vector<Point>& p) {
    double s = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) s += p[i].x * p[(i + 1) % p.size()].y - p[(i + 1) % p.size()].x * p[i].y;
    return 0.5 * s;
}

inline Point centroid_of(const std::vector<Point>& p) {
    double a = 0, cx = 0, cy = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const Point& u = p[i];
        const Point& v = p[(i + 1) % p.size()];
        const double c = u.x * v.y - v.x * u.y;
        a += c;
        cx += (u.x + v.x) * c;
        cy += (u.y + v.y) * c;
    }
    return {cx / (3 * a), cy / (3 * a)};
}

// Smallest enclosing circle by checking every pair and triple.
inline Circle brute_enclosing(const std::vector<Point>& p) {
    Circle best{{0, 0}, 1e300};
    auto covers = [&](const Point& c, double r) {
        return std::all_of(p.begin(), p.end(), [&](const Point& q) { return std::hypot(q.x - c.x, q.y - c.y) <= r * (1 + 1e-12) + 1e-14; });
    };
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            const Point c{(p[i].x + p[j].x) / 2, (p[i].y + p[j].y) / 2};
            const double r = std::hypot(p[i].x - c.x, p[i].y - c.y);
            if (r < best.radius && covers(c, r)) best = {c, r};
            for (std::size_t k = j + 1; k < p.size(); ++k) {
                const Point a = p[i], b = p[j], d = p[k];
                const double D = 2 * (a.x * (b.y - d.y) + b.x * (d.y - a.y) + d.x * (a.y - b.y));
                if (std::abs(D) < 1e-14) continue;
                const double a2 = a.x * a.x + a.y * a.y, b2 = b.x * b.x + b.y * b.y, d2 = d.x * d.x + d.y * d.y;
                const Point cc{(a2 * (b.y - d.y) + b2 * (d.y - a.y) + d2 * (a.y - b.y)) / D,
                               (a2 * (d.x - b.x) + b2 * (a.x - d.x) + d2 * (b.x - a.x)) / D};
                const double rr = std::hypot(a.x - cc.x, a.y - cc.y);
                if (rr < best.radius && covers(cc, rr)) best = {cc, rr};
            }
        }
    return best;
}

// Distance from p to the nearest edge of a polygon (no sign).
inline double edge_distance(const std::vector<Point>& poly, const Point& p) {
    double best = 1e300;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Point a = poly[i], b = poly[(i + 1) % poly.size()];
        const Vec2 e{b.x - a.x, b.y - a.y};
        const double t = std::clamp(((p.x - a.x) * e.x + (p.y - a.y) * e.y) / (e.x * e.x + e.y * e.y), 0.0, 1.0);
        best = std::min(best, std::hypot(p.x - a.x - t * e.x, p.y - a.y - t * e.y));
    }
    return best;
}

// Inscribed radius of a convex polygon: best feasible circle tangent to three edge lines.
inline double brute_inradius(const std::vector<Point>& poly) {
    const std::size_t n = poly.size();
    std::vector<Vec2> nrm(n);
    std::vector<double> off(n);
    const double orient = shoelace(poly) > 0 ? 1.0 : -1.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point a = poly[i], b = poly[(i + 1) % n];
        const double l = std::hypot(b.x - a.x, b.y - a.y);
        nrm[i] = Vec2{(b.y - a.y) / l, -(b.x - a.x) / l} * orient;  // outward
        off[i] = nrm[i].x * a.x + nrm[i].y * a.y;
    }
    double best = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                // n·x + r = off for the three lines; Cramer on the 3x3 system.
                const double m[3][4] = {{nrm[i].x, nrm[i].y, 1, off[i]}, {nrm[j].x, nrm[j].y, 1, off[j]}, {nrm[k].x, nrm[k].y, 1, off[k]}};
                auto det3 = [](double a, double b, double c, double d, double e, double f, double g, double h, double q) {
                    return a * (e * q - f * h) - b * (d * q - f * g) + c * (d * h - e * g);
                };
                const double D = det3(m[0][0], m[0][1], m[0][2], m[1][0], m[1][1], m[1][2], m[2][0], m[2][1], m[2][2]);
                if (std::abs(D) < 1e-14) continue;
                const double x = det3(m[0][3], m[0][1], m[0][2], m[1][3], m[1][1], m[1][2], m[2][3], m[2][1], m[2][2]) / D;
                const double y = det3(m[0][0], m[0][3], m[0][2], m[1][0], m[1][3], m[1][2], m[2][0], m[2][3], m[2][2]) / D;
                const double r = det3(m[0][0], m[0][1], m[0][3], m[1][0], m[1][1], m[1][3], m[2][0], m[2][1], m[2][3]) / D;
                bool feasible = r > 0;
                for (std::size_t e = 0; e < n && feasible; ++e) feasible = off[e] - (nrm[e].x * x + nrm[e].y * y) >= r - 1e-12;
                if (feasible) best = std::max(best, r);
            }
    return best;
}

// --- random bodies -------------------------------------------------------

inline std::vector<Point> hull(std::vector<Point> p) {
    std::sort(p.begin(), p.end(), [](const Point& a, const Point& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
    std::vector<Point> h(2 * p.size());
    std::size_t k = 0;
    auto turn = [](const Point& o, const Point& a, const Point& b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); };
    for (std::size_t i = 0; i < p.size(); ++i) {
        while (k >= 2 && turn(h[k - 2], h[k - 1], p[i]) <= 1e-9) --k;
        h[k++] = p[i];
    }
    for (std::size_t i = p.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && turn(h[k - 2], h[k - 1], p[i]) <= 1e-9) --k;
        h[k++] = p[i];
    }
    h.resize(k - 1);
    return h;
}

// Convex polygon with 3..max_vertices vertices, well away from degenerate.
inline std::vector<Point> random_convex(std::mt19937_64& rng, int max_vertices = 8) {
    std::uniform_real_distribution<double> u(-1.0, 1.0), s(0.5, 3.0), off(-2.0, 2.0);
    std::uniform_int_distribution<int> n(3, max_vertices);
    for (;;) {
        const int count = n(rng);
        std::vector<Point> pts;
        for (int i = 0; i < count + 2; ++i) pts.push_back({u(rng), u(rng)});
        auto h = hull(pts);
        if (h.size() < 3 || std::abs(shoelace(h)) < 0.3) continue;
        // Reject short edges.
        bool ok = true;
        for (std::size_t i = 0; i < h.size(); ++i)
            if (std::hypot(h[i].x - h[(i + 1) % h.size()].x, h[i].y - h[(i + 1) % h.size()].y) < 0.05) ok = false;
        if (!ok) continue;
        const double sc = s(rng), ox = off(rng), oy = off(rng);
        for (Point& p : h) p = {p.x * sc + ox, p.y * sc + oy};
        return h;
    }
}

inline std::vector<Point> random_triangle(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (;;) {
        std::vector<Point> t{{u(rng), u(rng)}, {u(rng), u(rng)}, {u(rng), u(rng)}};
        if (std::abs(shoelace(t)) > 0.1) {
            if (shoelace(t) < 0) std::swap(t[1], t[2]);
            return t;
        }
    }
}

inline std::vector<Point> random_parallelogram(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> ang(0.0, kTwoPi), len(0.5, 2.0), open(0.4, 2.7), off(-1.0, 1.0);
    const double t = ang(rng), la = len(rng), lb = len(rng), phi = open(rng);
    const Vec2 a{la * std::cos(t), la * std::sin(t)};
    const Vec2 b{lb * std::cos(t + phi), lb * std::sin(t + phi)};
    const Point o{off(rng), off(rng)};
    return {o, o + a, o + a + b, o + b};
}

// Regular polygon of n sides, rotated and scaled.
inline std::vector<Point> regular(int n, double radius = 1.0, double rotation = 0.0, Point center = {0, 0}) {
    std::vector<Point> v;
    for (int k = 0; k < n; ++k)
        v.push_back({center.x + radius * std::cos(rotation + kTwoPi * k / n), center.y + radius * std::sin(rotation + kTwoPi * k / n)});
    return v;
}

}  // namespace radcen::oracle
