#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <span>
#include <vector>

#include "radcen/geometry.hpp"

namespace radcen {

struct QuadratureConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    int max_subdivisions = 1 << 16;

    /// Throws InvalidArgument when the invariants fail.
    void validate() const;
};

template <class T>
struct QuadResult {
    T value{};
    double error = 0.0;
    int intervals = 0;
    bool converged = true;
};

/// r ↦ antiderivative of a radial kernel (times r^{m-1}), evaluated at the boundary distance.
using RadialProfile = std::function<double(double)>;

namespace detail {

inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(const Vec2& v) { return norm(v); }

// Neumaier summation, componentwise for vectors.
struct Compensated {
    double sum = 0.0, c = 0.0;
    void add(double v) {
        const double t = sum + v;
        if (std::abs(sum) >= std::abs(v)) c += (sum - t) + v; else c += (v - t) + sum;
        sum = t;
    }
    double value() const { return sum + c; }
};

template <class T>
struct CompensatedSum;
template <>
struct CompensatedSum<double> {
    Compensated s;
    void add(double v) { s.add(v); }
    double value() const { return s.value(); }
};
template <>
struct CompensatedSum<Vec2> {
    Compensated x, y;
    void add(const Vec2& v) { x.add(v.x); y.add(v.y); }
    Vec2 value() const { return {x.value(), y.value()}; }
};

struct KronrodTable {
    std::array<double, 8> nodes;     // nodes[0] = 0, increasing
    std::array<double, 8> kronrod;   // weights
    std::array<double, 4> gauss;     // weights of nodes[0], nodes[2], nodes[4], nodes[6]
};
const KronrodTable& kronrod_table();

template <class T>
struct Segment {
    double a, b;
    T value;
    double error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

template <class T, class F>
Segment<T> gk15(F& f, double a, double b) {
    const KronrodTable& tab = kronrod_table();
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const T fc = f(c);
    T k = fc * tab.kronrod[0];
    T g = fc * tab.gauss[0];
    double abs_k = magnitude(fc) * tab.kronrod[0];
    std::array<T, 15> vals;
    vals[0] = fc;
    for (int i = 1; i < 8; ++i) {
        const T f1 = f(c - h * tab.nodes[i]);
        const T f2 = f(c + h * tab.nodes[i]);
        vals[2 * i - 1] = f1;
        vals[2 * i] = f2;
        k = k + (f1 + f2) * tab.kronrod[i];
        abs_k += (magnitude(f1) + magnitude(f2)) * tab.kronrod[i];
        if (i % 2 == 0) g = g + (f1 + f2) * tab.gauss[i / 2];
    }
    const T mean = k * 0.5;
    double asc = magnitude(fc - mean) * tab.kronrod[0];
    for (int i = 1; i < 8; ++i)
        asc += (magnitude(vals[2 * i - 1] - mean) + magnitude(vals[2 * i] - mean)) * tab.kronrod[i];
    asc *= std::abs(h);
    double err = magnitude(k - g) * std::abs(h);
    if (asc != 0.0 && err != 0.0) err = asc * std::min(1.0, std::pow(200.0 * err / asc, 1.5));
    const double round = 50.0 * std::numeric_limits<double>::epsilon() * abs_k * std::abs(h);
    if (round > err) err = round;
    return {a, b, k * h, err};
}

}  // namespace detail

/// Adaptive Gauss-Kronrod (7/15) over [breaks.front(), breaks.back()], split a priori at every break.
template <class T, class F>
QuadResult<T> integrate_adaptive(F&& f, std::span<const double> breaks, const QuadratureConfig& cfg) {
    std::priority_queue<detail::Segment<T>> heap;
    double total_err = 0.0;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        if (!(breaks[i + 1] > breaks[i])) continue;
        auto seg = detail::gk15<T>(f, breaks[i], breaks[i + 1]);
        total_err += seg.error;
        heap.push(seg);
    }
    auto current_value = [&heap]() {
        auto copy = heap;
        detail::CompensatedSum<T> s;
        while (!copy.empty()) { s.add(copy.top().value); copy.pop(); }
        return s.value();
    };
    QuadResult<T> out;
    if (heap.empty()) return out;
    T value = current_value();
    int count = static_cast<int>(heap.size());
    while (true) {
        const double target = std::max(cfg.abs_tol, cfg.rel_tol * detail::magnitude(value));
        if (total_err <= target) break;
        if (count >= cfg.max_subdivisions) { out.converged = false; break; }
        const auto worst = heap.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) { out.converged = false; break; }
        heap.pop();
        auto left = detail::gk15<T>(f, worst.a, mid);
        auto right = detail::gk15<T>(f, mid, worst.b);
        total_err += left.error + right.error - worst.error;
        value = value + (left.value + right.value - worst.value);
        heap.push(left);
        heap.push(right);
        ++count;
        // Periodic resummation keeps the running totals honest.
        if (count % 256 == 0) {
            value = current_value();
            auto copy = heap;
            total_err = 0.0;
            while (!copy.empty()) { total_err += copy.top().error; copy.pop(); }
        }
    }
    out.value = current_value();
    out.error = total_err;
    out.intervals = count;
    return out;
}

template <class T, class F>
QuadResult<T> integrate_adaptive(F&& f, double a, double b, const QuadratureConfig& cfg) {
    const std::array<double, 2> br{a, b};
    return integrate_adaptive<T>(std::forward<F>(f), std::span<const double>(br), cfg);
}

/// One polygon edge seen from x: along θ ∈ θ0 + [0, Δ] (Δ signed) the edge's distance is
/// h / cos(θ − ψ), with h > 0 the distance to the edge's supporting line.
struct EdgeFan {
    double h = 0.0;
    double psi = 0.0;
    double theta0 = 0.0;
    double delta = 0.0;
    std::size_t edge = 0;
};

/// Edges that contribute a nonzero angle; edges whose line passes through x are skipped.
std::vector<EdgeFan> edge_fans(const Polygon& poly, const Point& x);

/// Σ_edges signed ∫ F(ρ_e(θ)) dθ. For x interior and star-visible this is ∫₀^{2π} F(ρ(x,θ)) dθ.
QuadResult<double> fan_sum(const Polygon& poly, const Point& x, const RadialProfile& F, const QuadratureConfig& cfg);
/// Σ_edges signed ∫ G(ρ_e(θ)) (cos θ, sin θ) dθ.
QuadResult<Vec2> fan_sum_vector(const Polygon& poly, const Point& x, const RadialProfile& G, const QuadratureConfig& cfg);
/// Σ_edges n_e ∫_e g(|x − y|) dσ(y), n_e the outward unit normal.
QuadResult<Vec2> boundary_flux(const Polygon& poly, const Point& x, const RadialProfile& g, const QuadratureConfig& cfg);

/// Angular breakpoints for polar integration about x (vertex or cap-junction directions), sorted in [0, 2π].
std::vector<double> angular_breakpoints(const Body& body, const Point& x);

/// ∫₀^{2π} profile(ρ(x,θ)) dθ. Throws NotStarShaped / NotInterior, ToleranceNotMet on budget exhaustion.
double integrate_angular(const Body& body, const Point& x, const RadialProfile& profile, const QuadratureConfig& cfg = {});
QuadResult<double> integrate_angular_report(const Body& body, const Point& x, const RadialProfile& profile,
                                            const QuadratureConfig& cfg = {});
/// ∫₀^{2π} G(ρ(x,θ)) (cos θ, sin θ) dθ.
QuadResult<Vec2> integrate_angular_vector(const Body& body, const Point& x, const RadialProfile& G,
                                          const QuadratureConfig& cfg = {});

/// Ear-clipping triangulation; triangles as vertex triples, counterclockwise.
std::vector<std::array<Point, 3>> triangulate(const Polygon& poly);

/// Collapsed Gauss-Legendre (10×10) rule on one triangle; exact through total degree 18.
double triangle_rule(const std::function<double(const Point&)>& f, const std::array<Point, 3>& tri);

/// ∫_poly f, adaptive 4-way subdivision of a triangulation. Throws ToleranceNotMet.
double integrate_polygon(const std::function<double(const Point&)>& f, const Polygon& poly, const QuadratureConfig& cfg = {});
QuadResult<double> integrate_polygon_report(const std::function<double(const Point&)>& f, const Polygon& poly,
                                            const QuadratureConfig& cfg = {});

}  // namespace radcen
