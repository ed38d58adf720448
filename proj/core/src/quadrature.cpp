#include "radcen/quadrature.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace radcen {

namespace detail {

const KronrodTable& kronrod_table() {
    static const KronrodTable table = [] {
        using boost::math::quadrature::gauss;
        using boost::math::quadrature::gauss_kronrod;
        KronrodTable t{};
        const auto& xk = gauss_kronrod<double, 15>::abscissa();
        const auto& wk = gauss_kronrod<double, 15>::weights();
        const auto& wg = gauss<double, 7>::weights();
        for (int i = 0; i < 8; ++i) {
            t.nodes[i] = xk[i];
            t.kronrod[i] = wk[i];
        }
        for (int i = 0; i < 4; ++i) t.gauss[i] = wg[i];
        return t;
    }();
    return table;
}

}  // namespace detail

namespace {

// (-π, π]
double wrap_signed(double a) {
    a = std::remainder(a, kTwoPi);
    return a <= -kPi ? a + kTwoPi : a;
}

double wrap_positive(double a) {
    a = std::fmod(a, kTwoPi);
    return a < 0 ? a + kTwoPi : a;
}

QuadratureConfig edge_config(const QuadratureConfig& cfg, std::size_t edges) {
    QuadratureConfig c = cfg;
    c.max_subdivisions = std::max(16, cfg.max_subdivisions / static_cast<int>(std::max<std::size_t>(edges, 1)));
    return c;
}

// Integrates f(φ) over φ0 + s·[0, |Δ|] with a break at φ = 0; returns s·∫.
template <class T, class F>
QuadResult<T> fan_edge(F&& f, const EdgeFan& fan, const QuadratureConfig& cfg) {
    const double s = fan.delta >= 0 ? 1.0 : -1.0;
    const double len = std::abs(fan.delta);
    const double phi0 = wrap_signed(fan.theta0 - fan.psi);
    std::vector<double> br{0.0};
    const double t0 = -phi0 * s;
    if (t0 > 1e-12 * len && t0 < len * (1 - 1e-12)) br.push_back(t0);
    br.push_back(len);
    auto g = [&](double t) { return f(phi0 + s * t); };
    auto r = integrate_adaptive<T>(g, std::span<const double>(br), cfg);
    r.value = r.value * s;
    return r;
}

template <class T>
void accumulate(QuadResult<T>& total, detail::CompensatedSum<T>& sum, const QuadResult<T>& part) {
    sum.add(part.value);
    total.error += part.error;
    total.intervals += part.intervals;
    total.converged = total.converged && part.converged;
}

// Barycentric-free point-in-triangle with a small tolerance, used by ear clipping.
bool in_triangle(const Point& p, const Point& a, const Point& b, const Point& c) {
    const double d1 = cross(b - a, p - a);
    const double d2 = cross(c - b, p - b);
    const double d3 = cross(a - c, p - c);
    return d1 >= 0 && d2 >= 0 && d3 >= 0;
}

struct GaussUnit {
    std::array<double, 10> x;
    std::array<double, 10> w;
};

const GaussUnit& gauss_unit() {
    static const GaussUnit g = [] {
        using boost::math::quadrature::gauss;
        const auto& xa = gauss<double, 10>::abscissa();
        const auto& wa = gauss<double, 10>::weights();
        GaussUnit u{};
        for (int i = 0; i < 5; ++i) {
            u.x[2 * i] = 0.5 * (1 - xa[i]);
            u.x[2 * i + 1] = 0.5 * (1 + xa[i]);
            u.w[2 * i] = u.w[2 * i + 1] = 0.5 * wa[i];
        }
        return u;
    }();
    return g;
}

std::array<std::array<Point, 3>, 4> split4(const std::array<Point, 3>& t) {
    const Point ab = (t[0] + t[1]) * 0.5, bc = (t[1] + t[2]) * 0.5, ca = (t[2] + t[0]) * 0.5;
    return {{{t[0], ab, ca}, {ab, t[1], bc}, {ca, bc, t[2]}, {ab, bc, ca}}};
}

}  // namespace

void QuadratureConfig::validate() const {
    if (!(rel_tol > 0) || !(abs_tol > 0)) throw Error(ErrorCode::InvalidArgument, "quadrature tolerances must be positive");
    if (max_subdivisions < 16) throw Error(ErrorCode::InvalidArgument, "max_subdivisions must be at least 16");
}

std::vector<EdgeFan> edge_fans(const Polygon& poly, const Point& x) {
    std::vector<EdgeFan> fans;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Point a = poly[i];
        const Vec2 e = poly[i + 1] - a;
        const Vec2 A = a - x;
        const Vec2 B = poly[i + 1] - x;
        const double delta = std::atan2(cross(A, B), dot(A, B));
        const double len = norm(e);
        const double h = std::abs(cross(A, e)) / len;
        if (h <= 1e-14 * (norm(A) + norm(B)) || delta == 0.0) continue;
        const Point foot = a + e * (dot(x - a, e) / (len * len));
        const Vec2 f = foot - x;
        fans.push_back({h, std::atan2(f.y, f.x), std::atan2(A.y, A.x), delta, i});
    }
    return fans;
}

QuadResult<double> fan_sum(const Polygon& poly, const Point& x, const RadialProfile& F, const QuadratureConfig& cfg) {
    const auto fans = edge_fans(poly, x);
    const QuadratureConfig ec = edge_config(cfg, fans.size());
    QuadResult<double> total;
    detail::CompensatedSum<double> sum;
    for (const EdgeFan& fan : fans) {
        const double h = fan.h;
        accumulate(total, sum, fan_edge<double>([&](double phi) { return F(h / std::cos(phi)); }, fan, ec));
    }
    total.value = sum.value();
    return total;
}

QuadResult<Vec2> fan_sum_vector(const Polygon& poly, const Point& x, const RadialProfile& G, const QuadratureConfig& cfg) {
    const auto fans = edge_fans(poly, x);
    const QuadratureConfig ec = edge_config(cfg, fans.size());
    QuadResult<Vec2> total;
    detail::CompensatedSum<Vec2> sum;
    for (const EdgeFan& fan : fans) {
        const double h = fan.h;
        const double psi = fan.psi;
        auto f = [&](double phi) { return unit_vector(psi + phi) * G(h / std::cos(phi)); };
        accumulate(total, sum, fan_edge<Vec2>(f, fan, ec));
    }
    total.value = sum.value();
    return total;
}

QuadResult<Vec2> boundary_flux(const Polygon& poly, const Point& x, const RadialProfile& g, const QuadratureConfig& cfg) {
    const QuadratureConfig ec = edge_config(cfg, poly.size());
    QuadResult<Vec2> total;
    detail::CompensatedSum<Vec2> sum;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Point a = poly[i];
        const Vec2 e = poly[i + 1] - a;
        const double len = norm(e);
        const Vec2 n{e.y / len, -e.x / len};
        const double h = std::abs(cross(a - x, e)) / len;
        const double s_foot = dot(x - a, e) / len;
        std::vector<double> br{0.0};
        if (s_foot > 1e-12 * len && s_foot < len * (1 - 1e-12)) br.push_back(s_foot);
        br.push_back(len);
        auto f = [&](double s) { return g(std::hypot(h, s - s_foot)); };
        auto r = integrate_adaptive<double>(f, std::span<const double>(br), ec);
        QuadResult<Vec2> part{n * r.value, r.error, r.intervals, r.converged};
        accumulate(total, sum, part);
    }
    total.value = sum.value();
    return total;
}

std::vector<double> angular_breakpoints(const Body& body, const Point& x) {
    std::vector<double> br{0.0, kTwoPi};
    auto add_point = [&](const Point& p) {
        const Vec2 d = p - x;
        if (norm(d) > 0) br.push_back(wrap_positive(std::atan2(d.y, d.x)));
    };
    if (const auto* poly = std::get_if<Polygon>(&body)) {
        for (const Point& p : poly->vertices()) add_point(p);
    } else if (const auto* rb = std::get_if<RadialArcBody>(&body)) {
        for (const Point& p : rb->corner_points()) add_point(p);
    }
    std::sort(br.begin(), br.end());
    br.erase(std::unique(br.begin(), br.end(), [](double a, double b) { return b - a < 1e-14; }), br.end());
    if (br.back() < kTwoPi) br.back() = kTwoPi;
    return br;
}

QuadResult<double> integrate_angular_report(const Body& body, const Point& x, const RadialProfile& profile,
                                            const QuadratureConfig& cfg) {
    cfg.validate();
    if (!contains(body, x)) throw Error(ErrorCode::NotInterior, "polar integration needs an interior base point");
    if (const auto* poly = std::get_if<Polygon>(&body)) {
        for (const EdgeFan& f : edge_fans(*poly, x))
            if (f.delta < -1e-14) throw Error(ErrorCode::NotStarShaped, "polygon is not star-shaped about x");
        return fan_sum(*poly, x, profile, cfg);
    }
    const auto br = angular_breakpoints(body, x);
    return integrate_adaptive<double>([&](double t) { return profile(radial_function(body, x, t)); },
                                      std::span<const double>(br), cfg);
}

double integrate_angular(const Body& body, const Point& x, const RadialProfile& profile, const QuadratureConfig& cfg) {
    const auto r = integrate_angular_report(body, x, profile, cfg);
    if (!r.converged) throw Error(ErrorCode::ToleranceNotMet, "angular quadrature budget exhausted");
    return r.value;
}

QuadResult<Vec2> integrate_angular_vector(const Body& body, const Point& x, const RadialProfile& G,
                                          const QuadratureConfig& cfg) {
    cfg.validate();
    if (!contains(body, x)) throw Error(ErrorCode::NotInterior, "polar integration needs an interior base point");
    if (const auto* poly = std::get_if<Polygon>(&body)) {
        for (const EdgeFan& f : edge_fans(*poly, x))
            if (f.delta < -1e-14) throw Error(ErrorCode::NotStarShaped, "polygon is not star-shaped about x");
        return fan_sum_vector(*poly, x, G, cfg);
    }
    const auto br = angular_breakpoints(body, x);
    return integrate_adaptive<Vec2>([&](double t) { return unit_vector(t) * G(radial_function(body, x, t)); },
                                    std::span<const double>(br), cfg);
}

std::vector<std::array<Point, 3>> triangulate(const Polygon& poly) {
    std::vector<Point> v(poly.vertices().begin(), poly.vertices().end());
    std::vector<std::array<Point, 3>> tris;
    while (v.size() > 3) {
        const std::size_t n = v.size();
        bool clipped = false;
        for (std::size_t i = 0; i < n && !clipped; ++i) {
            const Point& a = v[(i + n - 1) % n];
            const Point& b = v[i];
            const Point& c = v[(i + 1) % n];
            if (cross(b - a, c - b) <= 0) continue;
            bool ear = true;
            for (std::size_t j = 0; j < n && ear; ++j) {
                if (j == i || j == (i + n - 1) % n || j == (i + 1) % n) continue;
                if (in_triangle(v[j], a, b, c)) ear = false;
            }
            if (!ear) continue;
            tris.push_back({a, b, c});
            v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
            clipped = true;
        }
        if (!clipped) throw Error(ErrorCode::InvalidBody, "triangulation failed");
    }
    tris.push_back({v[0], v[1], v[2]});
    return tris;
}

double triangle_rule(const std::function<double(const Point&)>& f, const std::array<Point, 3>& tri) {
    const GaussUnit& g = gauss_unit();
    const Vec2 e1 = tri[1] - tri[0];
    const Vec2 e2 = tri[2] - tri[1];
    const double jac = std::abs(cross(e1, e2));
    detail::Compensated s;
    for (int i = 0; i < 10; ++i) {
        const double u = g.x[i];
        for (int j = 0; j < 10; ++j) {
            const double v = g.x[j];
            s.add(g.w[i] * g.w[j] * u * f(tri[0] + e1 * u + e2 * (u * v)));
        }
    }
    return s.value() * jac;
}

QuadResult<double> integrate_polygon_report(const std::function<double(const Point&)>& f, const Polygon& poly,
                                            const QuadratureConfig& cfg) {
    cfg.validate();
    struct Item {
        std::array<Point, 3> tri;
        double fine;
        double error;
        bool operator<(const Item& o) const { return error < o.error; }
    };
    auto make = [&](const std::array<Point, 3>& t, double coarse) {
        double fine = 0.0;
        for (const auto& c : split4(t)) fine += triangle_rule(f, c);
        return Item{t, fine, std::abs(fine - coarse)};
    };
    std::priority_queue<Item> heap;
    double value = 0.0, err = 0.0;
    for (const auto& t : triangulate(poly)) {
        auto it = make(t, triangle_rule(f, t));
        value += it.fine;
        err += it.error;
        heap.push(it);
    }
    QuadResult<double> out;
    int count = static_cast<int>(heap.size());
    while (err > std::max(cfg.abs_tol, cfg.rel_tol * std::abs(value))) {
        if (count + 3 > cfg.max_subdivisions) { out.converged = false; break; }
        const Item worst = heap.top();
        heap.pop();
        value -= worst.fine;
        err -= worst.error;
        for (const auto& c : split4(worst.tri)) {
            auto it = make(c, triangle_rule(f, c));
            value += it.fine;
            err += it.error;
            heap.push(it);
        }
        count += 3;
    }
    detail::Compensated s;
    double e = 0.0;
    while (!heap.empty()) { s.add(heap.top().fine); e += heap.top().error; heap.pop(); }
    out.value = s.value();
    out.error = e;
    out.intervals = count;
    return out;
}

double integrate_polygon(const std::function<double(const Point&)>& f, const Polygon& poly, const QuadratureConfig& cfg) {
    const auto r = integrate_polygon_report(f, poly, cfg);
    if (!r.converged) throw Error(ErrorCode::ToleranceNotMet, "polygon quadrature budget exhausted");
    return r.value;
}

}  // namespace radcen
