#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "radcen/centers.hpp"
#include "radcen/geometry.hpp"

namespace radcen {

/// Exponent may be ±infinity or 0.
struct PowerMeanSpec {
    double alpha = 1.0;
    double lambda = 0.5;

    /// Throws InvalidArgument when lambda ∉ [0,1] or alpha is NaN.
    void validate() const;
    /// α/(1 + mα); 1/m at α = ±∞. Throws InvalidArgument at α = −1/m.
    double gamma(int m = 2) const;
};

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// ((1−λ)a^α + λb^α)^{1/α}, with max / geometric / min at α = +∞ / 0 / −∞ and 0 when ab = 0 and α <= 0.
double power_mean(double a, double b, const PowerMeanSpec& spec);

using ScalarField = std::function<double(const Point&)>;

struct SegmentReport {
    std::vector<double> lambdas;
    std::vector<double> slacks;   // f((1−λ)x1+λx2) − M_α(f(x1), f(x2); λ)
    double min_slack = 0.0;
    bool concave = false;         // min_slack >= −tolerance
    bool strict = false;          // min_slack > strict_margin
    double strict_margin = 1e-12;
};

/// Samples λ = k/(n+1), k = 1..n. α = 1 allows any sign; otherwise throws NonPositiveValue.
SegmentReport segment_concavity(const ScalarField& f, const Point& x1, const Point& x2, double alpha, int n = 16,
                                double tolerance = 1e-12);

/// f·∂²f/∂v² + (α−1)(∂f/∂v)² by central differences with the given step.
double second_derivative_criterion(const ScalarField& f, const Point& x, const Vec2& v, double alpha, double step);

/// Deterministic random segments with both ends at distance >= margin inside a convex body.
std::vector<std::pair<Point, Point>> interior_segments(const Body& body, int count, double margin, std::uint64_t seed);
/// Random segments in the square of side 2·diam about the centroid.
std::vector<std::pair<Point, Point>> box_segments(const Body& body, int count, std::uint64_t seed);

struct ConcavityRow {
    std::string check;
    double param = 0.0;
    int samples = 0;
    double worst = 0.0;   // min slack, or endpoint spread for uniqueness rows
    bool passed = false;
};

struct ConcavityOptions {
    int segments = 100;
    int points_per_segment = 16;
    double poisson_h = 0.5;
    double heat_t = 0.1;
    std::vector<double> interior_alphas{-1.0, 0.0, 0.5, 1.0};
    std::vector<double> global_alphas{3.0, 5.0};
    std::uint64_t seed = 20240601;
    double uniqueness_tol = 1e-7;  // relative to diam
};

/// Segment checks for P, W and V plus multistart agreement in the concave regimes. Convex polygons only.
std::vector<ConcavityRow> concavity_suite(const Polygon& poly, const ConcavityOptions& opts = {});

}  // namespace radcen
