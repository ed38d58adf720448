#pragma once

#include <string_view>
#include <variant>

#include "radcen/geometry.hpp"
#include "radcen/quadrature.hpp"

namespace radcen {

struct Riesz {
    double alpha = 1.0;
};
struct Poisson {
    double h = 1.0;
};
struct Heat {
    double t = 1.0;
};

using PotentialFamily = std::variant<Riesz, Poisson, Heat>;

struct PotentialSpec {
    PotentialFamily family;
    int m = 2;  // ambient dimension; planar bodies require 2

    static PotentialSpec riesz(double alpha) { return {Riesz{alpha}, 2}; }
    static PotentialSpec poisson(double h) { return {Poisson{h}, 2}; }
    static PotentialSpec heat(double t) { return {Heat{t}, 2}; }

    /// Throws InvalidArgument on h <= 0, t <= 0, m < 1 or non-finite parameters.
    void validate() const;
    /// Family name: "riesz", "poisson" or "heat".
    std::string_view name() const;
    double parameter() const;
};

enum class Regime { AlphaPositiveNeM, AlphaEqM, AlphaZeroFinitePart, AlphaNegative, Poisson, Heat };
enum class Location { Interior, Exterior, Boundary };

std::string_view to_string(Regime r);
std::string_view to_string(Location l);

struct PotentialValue {
    double value = 0.0;
    Regime regime = Regime::AlphaPositiveNeM;
    Location location = Location::Interior;
};

/// Boundary band used to classify locations: 1e-9·diam.
Location classify_location(const Body& body, const Point& x);
Regime riesz_regime(double alpha, int m = 2);

enum class GradientRoute { Auto, Volume, Boundary, Annulus, Complement };

// Riesz potential r^{α-2} in the plane, finite parts for α <= 0.
PotentialValue riesz_value(const Body& body, const Point& x, const Riesz& spec, const QuadratureConfig& cfg = {});
Vec2 riesz_gradient(const Body& body, const Point& x, const Riesz& spec, const QuadratureConfig& cfg = {});
/// Explicit gradient formula. `eps` is the excluded radius of the annulus route (0 picks dist(x,∂Ω)/2).
Vec2 riesz_gradient(const Body& body, const Point& x, const Riesz& spec, GradientRoute route,
                    const QuadratureConfig& cfg = {}, double eps = 0.0);
/// Finite part for α <= 0 at interior x from ∫_{Ω∖B_ε} plus the explicit correction.
double riesz_value_excised(const Body& body, const Point& x, double alpha, double eps, const QuadratureConfig& cfg = {});
/// −∫_{Ω^c} |x−y|^{α−2} dy for α < 0 at interior x.
double riesz_value_complement(const Body& body, const Point& x, double alpha, const QuadratureConfig& cfg = {});

/// Surface measure of the unit sphere S^n ⊂ R^{n+1}.
double sphere_measure(int n);
/// Poisson kernel (2/σ_m(S^m))·h/(|z|²+h²)^{(m+1)/2}, |z| given.
double poisson_kernel(double z_norm, double h, int m = 2);
double poisson_kernel(const Vec2& z, double h);
/// (2/(π^{(m+1)/2} h^m)) ∫₀^∞ s^m exp(−(|z|²+h²)s²/h²) ds, by quadrature.
double poisson_kernel_gaussian(double z_norm, double h, int m = 2);
double heat_kernel(double r, double t, int m = 2);

PotentialValue poisson_value(const Body& body, const Point& x, const Poisson& spec, const QuadratureConfig& cfg = {});
Vec2 poisson_gradient(const Body& body, const Point& x, const Poisson& spec, const QuadratureConfig& cfg = {});
/// Volume (polar) route for the Poisson gradient, polygons only.
Vec2 poisson_gradient_volume(const Polygon& poly, const Point& x, const Poisson& spec, const QuadratureConfig& cfg = {});

PotentialValue heat_value(const Body& body, const Point& x, const Heat& spec, const QuadratureConfig& cfg = {});
Vec2 heat_gradient(const Body& body, const Point& x, const Heat& spec, const QuadratureConfig& cfg = {});
Vec2 heat_gradient_volume(const Polygon& poly, const Point& x, const Heat& spec, const QuadratureConfig& cfg = {});

/// 1 − P_Ω(x,h), accurate when P is close to 1.
double poisson_complement(const Body& body, const Point& x, const Poisson& spec, const QuadratureConfig& cfg = {});
/// 1 − W_Ω(x,t), accurate when W is close to 1.
double heat_complement(const Body& body, const Point& x, const Heat& spec, const QuadratureConfig& cfg = {});

PotentialValue potential(const Body& body, const Point& x, const PotentialSpec& spec, const QuadratureConfig& cfg = {});
Vec2 potential_gradient(const Body& body, const Point& x, const PotentialSpec& spec, const QuadratureConfig& cfg = {});

// Values at the center of a ball of radius R in R^m (closed forms).
double ball_center_riesz(int m, double radius, double alpha);
double ball_center_poisson(int m, double radius, double h);
double ball_center_heat(int m, double radius, double t);

}  // namespace radcen
