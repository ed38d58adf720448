#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "radcen/geometry.hpp"

namespace radcen {

/// r·∫ (cos θ, sin θ) dθ over the arcs of S_r(x) lying in the body.
Vec2 vector_residual(const Body& body, const Point& x, double r);
Vec2 arc_moment(const ArcSet& arcs);

struct BalanceReport {
    Point candidate;
    std::vector<double> radii;
    std::vector<Vec2> residual_vectors;
    double sup_residual = 0.0;  // max |residual| / (2πr)
    bool balanced = false;
    double tolerance = 1e-8;
};

/// Residuals on n_radii log-spaced radii up to the farthest boundary point, plus exact breakpoints.
BalanceReport balance_report(const Body& body, const Point& x, int n_radii = 256, double tolerance = 1e-8);
/// Radii where arcs appear or vanish (vertex and edge distances, cap knots).
std::vector<double> contact_radii(const Body& body, const Point& x);

struct WeightedBodyFunction {
    std::vector<std::pair<double, Body>> terms;

    double mass() const;
    Vec2 first_moment() const;
    /// Σ |w| Vol, the magnitude used for near-zero tests.
    double magnitude() const;
};

/// Σ w_i · r · |circle_clip(Ω_i, x, r)|.
double scalar_residual(const WeightedBodyFunction& f, const Point& x, double r);

struct EquivalenceReport {
    std::vector<double> radii;
    std::vector<double> split_radii;
    double complement_defect = 0.0;  // max |res(Ω) + res(Ω^c)|
    double split_defect = 0.0;       // max |res(Ω∩ρB) + res(Ω∖ρB) − res(Ω)|
    bool holds = false;
};

EquivalenceReport equivalence_check(const Body& body, const Point& x, double tolerance = 1e-9);

struct ContactSet {
    double r_star = 0.0;
    std::vector<Point> points;
    Vec2 sum;  // Σ (p_j − x)
};

/// Nearest boundary points of a convex body. Throws NotInterior, ContinuumContact.
ContactSet contact_points(const Body& body, const Point& x);

struct NoneExists {};
struct Indeterminate {};
using StationaryCandidate = std::variant<Point, NoneExists, Indeterminate>;

StationaryCandidate stationary_candidate(const WeightedBodyFunction& f);

enum class Classification { BalancedEquilateral, BalancedParallelogram, NotBalanced };
std::string_view to_string(Classification c);

/// Balance test at the centroid of a convex triangle or quadrangle. Throws TheoremViolation.
Classification classify_polygon(const Polygon& poly);

struct GeneratorOptions {
    double r_max = 1.05;
    /// sin a_u(r) on (1, r_max]; default sin(π/6)·(1 − √((r²−1)/(R²−1)))/r.
    std::function<double(double)> seed_sine;
    std::array<double, 3> direction_degrees{0.0, 137.0, 251.0};
    int n_knots = 400;
    int max_retries = 20;
    double shrink = 0.8;
};

/// Solves c_v v + c_w w = −u for the frame.
std::array<double, 3> balance_coefficients(const std::array<double, 3>& direction_angles);

/// Convex balanced body without symmetries. Throws ConstructionFailed.
RadialArcBody generate_asymmetric_balanced(const GeneratorOptions& opts = {});

struct Isometry {
    enum class Kind { Rotation, Reflection };
    Kind kind = Kind::Rotation;
    double angle = 0.0;  // rotation angle, or direction of the reflection axis
    Point center;
};

/// Non-identity rotations and reflections about the centroid mapping the body to itself.
std::vector<Isometry> symmetry_search(const Body& body, double rel_tol = 1e-6);

}  // namespace radcen
