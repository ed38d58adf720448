#pragma once

#include <array>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "radcen/types.hpp"

namespace radcen {

/// Simple polygon with counterclockwise vertices.
///
/// Construction validates the body: at least three vertices, no repeated
/// consecutive vertices, no collinear triples, no self-intersection, positive
/// area. Clockwise input is reversed.
class Polygon {
public:
    explicit Polygon(std::vector<Point> vertices);

    std::span<const Point> vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }
    const Point& operator[](std::size_t i) const { return vertices_[i % vertices_.size()]; }

    double area() const { return area_; }
    Point centroid() const { return centroid_; }
    double diameter() const { return diameter_; }
    bool is_convex() const { return convex_; }

    bool contains(const Point& p) const;
    /// Unsigned distance from p to the boundary.
    double boundary_distance(const Point& p) const;

private:
    std::vector<Point> vertices_;
    double area_ = 0.0;
    Point centroid_;
    double diameter_ = 0.0;
    bool convex_ = false;
};

struct Disk {
    Point center;
    double radius = 1.0;

    Disk(Point c, double r);
};

/// Unit disk with three arc caps attached along fixed directions.
///
/// For 1 < r <= r_max the circle of radius r meets the body in three arcs
/// centered on the directions, each with half-width a_d(r) where
/// sin a_d(r) is piecewise linear in r over `knots`. Body is star-shaped about
/// the origin.
class RadialArcBody {
public:
    RadialArcBody(double r_max, std::array<double, 3> direction_angles, std::vector<double> knots,
                  std::array<std::vector<double>, 3> sine_profiles);

    double r_max() const { return r_max_; }
    const std::array<double, 3>& direction_angles() const { return angles_; }
    Vec2 direction(int d) const { return unit_vector(angles_[d]); }
    std::span<const double> knots() const { return knots_; }
    std::span<const double> sine_profile(int d) const { return sines_[d]; }

    /// sin a_d(r); zero outside (1, r_max).
    double half_width_sine(int d, double r) const;
    double half_width(int d, double r) const;

    /// Radial function about the origin.
    double radial_function(double theta) const;
    bool contains(const Point& p) const;

    /// Angles (mod 2π) where a cap meets the unit circle, sorted.
    std::vector<double> junction_angles() const;

    /// Boundary points where the boundary is only piecewise smooth (profile knots, apexes, junctions).
    std::vector<Point> corner_points() const;

    /// Closed boundary polygon sampled at n equally spaced angles about the origin.
    std::vector<Point> outline(int n) const;

    double area() const { return area_; }
    Point centroid() const { return centroid_; }
    double diameter() const { return diameter_; }

private:
    double r_max_;
    std::array<double, 3> angles_;
    std::vector<double> knots_;
    std::array<std::vector<double>, 3> sines_;
    double area_ = 0.0;
    Point centroid_;
    double diameter_ = 0.0;
};

using Body = std::variant<Polygon, Disk, RadialArcBody>;

/// Angular interval [begin, end) on a circle, begin in [0, 2π).
struct Arc {
    double begin = 0.0;
    double end = 0.0;
    double length() const { return end - begin; }
};

/// Portion of the circle S_r(center) lying in a body.
struct ArcSet {
    Point center;
    double radius = 0.0;
    std::vector<Arc> arcs;  // sorted by begin, disjoint

    double measure() const;
    bool is_full() const;
    /// Arcs of the circle not in this set.
    ArcSet complement() const;
};

struct Circle {
    Point center;
    double radius = 0.0;
};

struct Incircle {
    Point center;
    double radius = 0.0;
    /// Set for non-convex bodies, where several maximal balls may exist.
    bool possibly_non_unique = false;
};

/// Intersection of half-planes {z : z·v <= l(v)} over sampled directions.
struct UnfoldedRegion {
    std::vector<Vec2> directions;
    std::vector<double> offsets;
    std::vector<Point> outline;  // vertices of the half-plane intersection (may be degenerate)

    bool contains(const Point& p, double tol) const;
    double diameter() const;
};

double area(const Body& body);
Point centroid(const Body& body);
double diameter(const Body& body);
bool contains(const Body& body, const Point& p);
double boundary_distance(const Body& body, const Point& p);
bool is_convex(const Body& body);

/// Minimal enclosing disk.
Circle circumcenter(const Body& body);
/// A maximal inscribed disk.
Incircle incenter(const Body& body);

/// max{λ >= 0 : x + λ(cos θ, sin θ) ∈ Ω}. Throws NotStarShaped when the ray re-enters.
double radial_function(const Body& body, const Point& x, double theta);

/// Arcs of the circle of radius r about x contained in the body.
ArcSet circle_clip(const Body& body, const Point& x, double r);

double maximal_folding(const Polygon& poly, const Vec2& v);
UnfoldedRegion unfolded_region(const Polygon& poly, int n_dirs);

// Lower-level polygon helpers shared by other modules.
double signed_area(std::span<const Point> pts);
bool point_in_polygon(std::span<const Point> pts, const Point& p);
double segment_distance(const Point& p, const Point& a, const Point& b);
std::vector<Point> convex_hull(std::vector<Point> pts);
/// Keeps the part of the polygon where dot(z, n) <= offset.
std::vector<Point> clip_half_plane(std::span<const Point> pts, const Vec2& n, double offset);
/// Boundary points of a body at which a reflection symmetry test is meaningful.
std::vector<Point> boundary_samples(const Body& body, int n);

Polygon transformed(const Polygon& poly, double rotation, const Vec2& translation, double scale = 1.0);
Disk transformed(const Disk& disk, double rotation, const Vec2& translation, double scale = 1.0);

}  // namespace radcen
