#include "radcen/potentials.hpp"

#include <boost/math/special_functions/gamma.hpp>

namespace radcen {

namespace {

bool is_riesz_log(double alpha) { return alpha == 2.0; }

void require_planar(int m) {
    if (m != 2) throw Error(ErrorCode::InvalidArgument, "planar bodies need m = 2");
}

double disk_exit(const Disk& d, const Point& x, const Vec2& u) {
    const Vec2 f = x - d.center;
    const double pu = dot(f, u);
    return -pu + std::sqrt(std::max(0.0, pu * pu - dot(f, f) + d.radius * d.radius));
}

// Exterior point of a disk: chord endpoints along directions φ in the visible cone.
struct Cone {
    double dir, beta, dist;
};
Cone disk_cone(const Disk& d, const Point& x) {
    const Vec2 to = d.center - x;
    const double dist = norm(to);
    return {std::atan2(to.y, to.x), std::asin(std::min(1.0, d.radius / dist)), dist};
}

void check_converged(bool ok) {
    if (!ok) throw Error(ErrorCode::ToleranceNotMet, "quadrature budget exhausted");
}

void radial_interior_only(const RadialArcBody& b, const Point& x) {
    if (!b.contains(x)) throw Error(ErrorCode::InvalidArgument, "radial-arc bodies support interior evaluation only");
}

// Σ over the body of F(ρ) dθ in the signed polar sense.
double polar_scalar(const Body& body, const Point& x, const RadialProfile& F, const QuadratureConfig& cfg) {
    if (const auto* poly = std::get_if<Polygon>(&body)) {
        const auto r = fan_sum(*poly, x, F, cfg);
        check_converged(r.converged);
        return r.value;
    }
    if (const auto* d = std::get_if<Disk>(&body)) {
        if (distance(x, d->center) < d->radius) {
            const auto r = integrate_adaptive<double>([&](double t) { return F(disk_exit(*d, x, unit_vector(t))); },
                                                      0.0, kTwoPi, cfg);
            check_converged(r.converged);
            return r.value;
        }
        const Cone c = disk_cone(*d, x);
        const double R = d->radius;
        auto f = [&](double s) {
            const double phi = c.beta * std::sin(s);
            const double along = c.dist * std::cos(phi);
            const double half = std::sqrt(std::max(0.0, R * R - c.dist * c.dist * std::sin(phi) * std::sin(phi)));
            return (F(along + half) - F(std::max(along - half, 1e-300))) * c.beta * std::cos(s);
        };
        const auto r = integrate_adaptive<double>(f, -kPi / 2, kPi / 2, cfg);
        check_converged(r.converged);
        return r.value;
    }
    const auto& rb = std::get<RadialArcBody>(body);
    radial_interior_only(rb, x);
    return integrate_angular(body, x, F, cfg);
}

Vec2 polar_vector(const Body& body, const Point& x, const RadialProfile& G, const QuadratureConfig& cfg) {
    if (const auto* poly = std::get_if<Polygon>(&body)) {
        const auto r = fan_sum_vector(*poly, x, G, cfg);
        check_converged(r.converged);
        return r.value;
    }
    if (const auto* d = std::get_if<Disk>(&body)) {
        if (distance(x, d->center) < d->radius) {
            const auto r = integrate_adaptive<Vec2>(
                [&](double t) { const Vec2 u = unit_vector(t); return u * G(disk_exit(*d, x, u)); }, 0.0, kTwoPi, cfg);
            check_converged(r.converged);
            return r.value;
        }
        const Cone c = disk_cone(*d, x);
        const double R = d->radius;
        auto f = [&](double s) {
            const double phi = c.beta * std::sin(s);
            const double along = c.dist * std::cos(phi);
            const double half = std::sqrt(std::max(0.0, R * R - c.dist * c.dist * std::sin(phi) * std::sin(phi)));
            return unit_vector(c.dir + phi) * ((G(along + half) - G(std::max(along - half, 1e-300))) * c.beta * std::cos(s));
        };
        const auto r = integrate_adaptive<Vec2>(f, -kPi / 2, kPi / 2, cfg);
        check_converged(r.converged);
        return r.value;
    }
    const auto& rb = std::get<RadialArcBody>(body);
    radial_interior_only(rb, x);
    const auto r = integrate_angular_vector(body, x, G, cfg);
    check_converged(r.converged);
    return r.value;
}

// Σ n ∫ g(|x − y|) dσ over the boundary.
Vec2 boundary_vector(const Body& body, const Point& x, const RadialProfile& g, const QuadratureConfig& cfg) {
    if (const auto* poly = std::get_if<Polygon>(&body)) {
        const auto r = boundary_flux(*poly, x, g, cfg);
        check_converged(r.converged);
        return r.value;
    }
    if (const auto* d = std::get_if<Disk>(&body)) {
        const Vec2 f = x - d->center;
        std::vector<double> br{0.0, kTwoPi};
        if (norm(f) > 0) {
            double a = std::atan2(f.y, f.x);
            if (a < 0) a += kTwoPi;
            if (a > 0 && a < kTwoPi) br.insert(br.begin() + 1, a);
        }
        const auto r = integrate_adaptive<Vec2>(
            [&](double t) {
                const Vec2 n = unit_vector(t);
                return n * (g(distance(x, d->center + n * d->radius)) * d->radius);
            },
            std::span<const double>(br), cfg);
        check_converged(r.converged);
        return r.value;
    }
    throw Error(ErrorCode::InvalidArgument, "boundary route is not available for radial-arc bodies");
}

// ∫_a^b c·r^{p} dr with r = a·(b/a)^s; smooth in s for any real p.
double log_power_integral(double a, double b, double p, const QuadratureConfig& cfg) {
    const double L = std::log(b / a);
    auto f = [&](double s) { const double r = a * std::exp(s * L); return std::pow(r, p + 1) * L; };
    const auto r = integrate_adaptive<double>(f, 0.0, 1.0, cfg);
    return r.value;
}

}  // namespace

void PotentialSpec::validate() const {
    if (m < 1) throw Error(ErrorCode::InvalidArgument, "dimension must be positive");
    std::visit([](const auto& f) {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Riesz>) {
            if (!std::isfinite(f.alpha)) throw Error(ErrorCode::InvalidArgument, "alpha must be finite");
        } else if constexpr (std::is_same_v<T, Poisson>) {
            if (!(f.h > 0) || !std::isfinite(f.h)) throw Error(ErrorCode::InvalidArgument, "h must be positive");
        } else {
            if (!(f.t > 0) || !std::isfinite(f.t)) throw Error(ErrorCode::InvalidArgument, "t must be positive");
        }
    }, family);
}

std::string_view PotentialSpec::name() const {
    switch (family.index()) {
        case 0: return "riesz";
        case 1: return "poisson";
        default: return "heat";
    }
}

double PotentialSpec::parameter() const {
    return std::visit([](const auto& f) -> double {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Riesz>) return f.alpha;
        else if constexpr (std::is_same_v<T, Poisson>) return f.h;
        else return f.t;
    }, family);
}

std::string_view to_string(Regime r) {
    switch (r) {
        case Regime::AlphaPositiveNeM: return "alpha_positive_ne_m";
        case Regime::AlphaEqM: return "alpha_eq_m";
        case Regime::AlphaZeroFinitePart: return "alpha_zero_finite_part";
        case Regime::AlphaNegative: return "alpha_negative";
        case Regime::Poisson: return "poisson";
        case Regime::Heat: return "heat";
    }
    return "unknown";
}

std::string_view to_string(Location l) {
    switch (l) {
        case Location::Interior: return "interior";
        case Location::Exterior: return "exterior";
        case Location::Boundary: return "boundary";
    }
    return "unknown";
}

Location classify_location(const Body& body, const Point& x) {
    if (boundary_distance(body, x) <= 1e-9 * diameter(body)) return Location::Boundary;
    return contains(body, x) ? Location::Interior : Location::Exterior;
}

Regime riesz_regime(double alpha, int m) {
    if (alpha == static_cast<double>(m)) return Regime::AlphaEqM;
    if (alpha == 0.0) return Regime::AlphaZeroFinitePart;
    if (alpha < 0.0) return Regime::AlphaNegative;
    return Regime::AlphaPositiveNeM;
}

// ---------------------------------------------------------------------------
// Riesz

PotentialValue riesz_value(const Body& body, const Point& x, const Riesz& spec, const QuadratureConfig& cfg) {
    const double a = spec.alpha;
    if (!std::isfinite(a)) throw Error(ErrorCode::InvalidArgument, "alpha must be finite");
    const Location loc = classify_location(body, x);
    if (a <= 0 && loc == Location::Boundary)
        throw Error(ErrorCode::BoundaryPoint, "finite-part potential is undefined on the boundary");
    RadialProfile F;
    double coef = 1.0;
    if (a == 0.0) {
        F = [](double r) { return std::log(r); };
    } else if (is_riesz_log(a)) {
        F = [](double r) { return r * r * (0.25 - 0.5 * std::log(r)); };
    } else {
        F = [a](double r) { return std::pow(r, a) / a; };
        if (a > 2) coef = -1.0;
    }
    return {coef * polar_scalar(body, x, F, cfg), riesz_regime(a), loc};
}

double riesz_value_excised(const Body& body, const Point& x, double alpha, double eps, const QuadratureConfig& cfg) {
    if (!(alpha <= 0)) throw Error(ErrorCode::InvalidArgument, "excised evaluation applies to alpha <= 0");
    if (classify_location(body, x) != Location::Interior) throw Error(ErrorCode::NotInterior, "x must be interior");
    const double d = boundary_distance(body, x);
    if (!(eps > 0) || !(eps < d)) throw Error(ErrorCode::InvalidArgument, "need 0 < eps < dist(x, boundary)");
    QuadratureConfig inner = cfg;
    inner.rel_tol = cfg.rel_tol * 1e-2;
    const RadialProfile H = [&](double rho) { return log_power_integral(eps, rho, alpha - 1, inner); };
    const double annulus = polar_scalar(body, x, H, cfg);
    const double correction = alpha == 0.0 ? kTwoPi * std::log(1 / eps) : kTwoPi * std::pow(eps, alpha) / (-alpha);
    return annulus - correction;
}

double riesz_value_complement(const Body& body, const Point& x, double alpha, const QuadratureConfig& cfg) {
    if (!(alpha < 0)) throw Error(ErrorCode::InvalidArgument, "complement identity applies to alpha < 0");
    if (classify_location(body, x) != Location::Interior) throw Error(ErrorCode::NotInterior, "x must be interior");
    QuadratureConfig inner = cfg;
    inner.rel_tol = cfg.rel_tol * 1e-2;
    // ∫_ρ^∞ r^{α−1} dr with r = ρ/σ², σ ∈ (0, 1].
    const RadialProfile T = [&](double rho) {
        auto f = [&](double s) { return 2 * std::pow(s, -2 * alpha - 1); };
        return std::pow(rho, alpha) * integrate_adaptive<double>(f, 0.0, 1.0, inner).value;
    };
    return -polar_scalar(body, x, T, cfg);
}

Vec2 riesz_gradient(const Body& body, const Point& x, const Riesz& spec, GradientRoute route,
                    const QuadratureConfig& cfg, double eps) {
    const double a = spec.alpha;
    if (!std::isfinite(a)) throw Error(ErrorCode::InvalidArgument, "alpha must be finite");
    const Location loc = classify_location(body, x);
    if (a <= 1 && loc == Location::Boundary)
        throw Error(ErrorCode::BoundaryPoint, "potential is not differentiable on the boundary");
    if (route == GradientRoute::Auto) {
        if (a > 1) route = GradientRoute::Volume;
        else if (loc == Location::Exterior) route = GradientRoute::Boundary;
        else if (a >= 0) route = GradientRoute::Annulus;
        else route = GradientRoute::Complement;
    }
    const double c2 = std::abs(a - 2);
    switch (route) {
        case GradientRoute::Volume: {
            RadialProfile G;
            if (is_riesz_log(a)) G = [](double r) { return r; };
            else if (a == 1.0) G = [](double r) { return std::log(r); };
            else G = [a, c2](double r) { return c2 * std::pow(r, a - 1) / (a - 1); };
            return polar_vector(body, x, G, cfg);
        }
        case GradientRoute::Boundary: {
            RadialProfile g;
            if (is_riesz_log(a)) g = [](double r) { return std::log(r); };
            else {
                const double s = a < 2 ? -1.0 : 1.0;
                g = [a, s](double r) { return s * std::pow(r, a - 2); };
            }
            return boundary_vector(body, x, g, cfg);
        }
        case GradientRoute::Annulus: {
            if (loc != Location::Interior) throw Error(ErrorCode::NotInterior, "annulus route needs an interior point");
            const double d = boundary_distance(body, x);
            if (eps <= 0) eps = 0.5 * d;
            if (!(eps < d)) throw Error(ErrorCode::InvalidArgument, "need 0 < eps < dist(x, boundary)");
            QuadratureConfig inner = cfg;
            inner.rel_tol = cfg.rel_tol * 1e-2;
            const RadialProfile G = [&](double rho) {
                if (is_riesz_log(a)) return rho - eps;
                return c2 * log_power_integral(eps, rho, a - 2, inner);
            };
            return polar_vector(body, x, G, cfg);
        }
        case GradientRoute::Complement: {
            if (!(a < 0)) throw Error(ErrorCode::InvalidArgument, "complement route applies to alpha < 0");
            if (loc != Location::Interior) throw Error(ErrorCode::NotInterior, "complement route needs an interior point");
            QuadratureConfig inner = cfg;
            inner.rel_tol = cfg.rel_tol * 1e-2;
            // ∫_ρ^∞ k'(r) r dr with k = r^{α−2}, substituting r = ρ/s.
            const RadialProfile G = [&](double rho) {
                auto f = [&](double s) { return std::pow(s, -a); };
                return (a - 2) * std::pow(rho, a - 1) * integrate_adaptive<double>(f, 0.0, 1.0, inner).value;
            };
            return polar_vector(body, x, G, cfg);
        }
        case GradientRoute::Auto: break;
    }
    throw Error(ErrorCode::InvalidArgument, "unknown gradient route");
}

Vec2 riesz_gradient(const Body& body, const Point& x, const Riesz& spec, const QuadratureConfig& cfg) {
    return riesz_gradient(body, x, spec, GradientRoute::Auto, cfg);
}

// ---------------------------------------------------------------------------
// Kernels

double sphere_measure(int n) {
    if (n < 0) throw Error(ErrorCode::InvalidArgument, "sphere dimension must be non-negative");
    const double k = 0.5 * (n + 1);
    return 2 * std::pow(kPi, k) / std::tgamma(k);
}

double poisson_kernel(double z_norm, double h, int m) {
    if (!(h > 0)) throw Error(ErrorCode::InvalidArgument, "h must be positive");
    return 2 / sphere_measure(m) * h / std::pow(z_norm * z_norm + h * h, 0.5 * (m + 1));
}

double poisson_kernel(const Vec2& z, double h) { return poisson_kernel(norm(z), h, 2); }

double poisson_kernel_gaussian(double z_norm, double h, int m) {
    if (!(h > 0)) throw Error(ErrorCode::InvalidArgument, "h must be positive");
    const double c = (z_norm * z_norm + h * h) / (h * h);
    // s = u/(1−u) maps [0, ∞) onto [0, 1).
    auto f = [&](double u) {
        const double s = u / (1 - u);
        return std::pow(s, m) * std::exp(-c * s * s) / ((1 - u) * (1 - u));
    };
    QuadratureConfig cfg;
    cfg.rel_tol = 1e-13;
    cfg.abs_tol = 1e-300;
    const double I = integrate_adaptive<double>(f, 0.0, 1.0, cfg).value;
    return 2 / (std::pow(kPi, 0.5 * (m + 1)) * std::pow(h, m)) * I;
}

double heat_kernel(double r, double t, int m) {
    if (!(t > 0)) throw Error(ErrorCode::InvalidArgument, "t must be positive");
    return std::pow(4 * kPi * t, -0.5 * m) * std::exp(-r * r / (4 * t));
}

// ---------------------------------------------------------------------------
// Poisson

PotentialValue poisson_value(const Body& body, const Point& x, const Poisson& spec, const QuadratureConfig& cfg) {
    const double h = spec.h;
    if (!(h > 0)) throw Error(ErrorCode::InvalidArgument, "h must be positive");
    const RadialProfile F = [h](double r) {
        const double q = std::hypot(r, h);
        return r * r / (q * (q + h)) / kTwoPi;
    };
    return {polar_scalar(body, x, F, cfg), Regime::Poisson, classify_location(body, x)};
}

Vec2 poisson_gradient(const Body& body, const Point& x, const Poisson& spec, const QuadratureConfig& cfg) {
    const double h = spec.h;
    if (!(h > 0)) throw Error(ErrorCode::InvalidArgument, "h must be positive");
    if (std::holds_alternative<RadialArcBody>(body)) {
        const RadialProfile G = [h](double r) { const double q = std::hypot(r, h); return r * r * r / (kTwoPi * h * q * q * q); };
        return polar_vector(body, x, G, cfg);
    }
    return boundary_vector(body, x, [h](double r) { return -poisson_kernel(r, h, 2); }, cfg);
}

Vec2 poisson_gradient_volume(const Polygon& poly, const Point& x, const Poisson& spec, const QuadratureConfig& cfg) {
    const double h = spec.h;
    const RadialProfile G = [h](double r) { const double q = std::hypot(r, h); return r * r * r / (kTwoPi * h * q * q * q); };
    return polar_vector(Body{poly}, x, G, cfg);
}

// ---------------------------------------------------------------------------
// Heat

namespace {

// ∫₀^ρ r² e^{−a r²} dr
double heat_moment(double rho, double a) {
    const double z = a * rho * rho;
    if (z < 1.0) {
        double term = 1.0, sum = 1.0 / 3.0;
        for (int k = 1; k < 40; ++k) {
            term *= -z / k;
            const double add = term / (2 * k + 3);
            sum += add;
            if (std::abs(add) < 1e-17 * std::abs(sum)) break;
        }
        return rho * rho * rho * sum;
    }
    return std::sqrt(kPi) / (4 * std::pow(a, 1.5)) * std::erf(std::sqrt(a) * rho) - rho * std::exp(-z) / (2 * a);
}

}  // namespace

PotentialValue heat_value(const Body& body, const Point& x, const Heat& spec, const QuadratureConfig& cfg) {
    const double t = spec.t;
    if (!(t > 0)) throw Error(ErrorCode::InvalidArgument, "t must be positive");
    const RadialProfile F = [t](double r) { return -std::expm1(-r * r / (4 * t)) / kTwoPi; };
    return {polar_scalar(body, x, F, cfg), Regime::Heat, classify_location(body, x)};
}

double heat_complement(const Body& body, const Point& x, const Heat& spec, const QuadratureConfig& cfg) {
    const double t = spec.t;
    if (!(t > 0)) throw Error(ErrorCode::InvalidArgument, "t must be positive");
    if (classify_location(body, x) != Location::Interior) return 1.0 - heat_value(body, x, spec, cfg).value;
    // Tail of the kernel beyond ρ(θ).
    return polar_scalar(body, x, [t](double r) { return std::exp(-r * r / (4 * t)) / kTwoPi; }, cfg);
}

double poisson_complement(const Body& body, const Point& x, const Poisson& spec, const QuadratureConfig& cfg) {
    const double h = spec.h;
    if (!(h > 0)) throw Error(ErrorCode::InvalidArgument, "h must be positive");
    if (classify_location(body, x) != Location::Interior) return 1.0 - poisson_value(body, x, spec, cfg).value;
    return polar_scalar(body, x, [h](double r) { return h / (kTwoPi * std::hypot(r, h)); }, cfg);
}

Vec2 heat_gradient(const Body& body, const Point& x, const Heat& spec, const QuadratureConfig& cfg) {
    const double t = spec.t;
    if (!(t > 0)) throw Error(ErrorCode::InvalidArgument, "t must be positive");
    if (std::holds_alternative<RadialArcBody>(body)) {
        const double a = 1 / (4 * t);
        const RadialProfile G = [a, t](double r) { return heat_moment(r, a) / (8 * kPi * t * t); };
        return polar_vector(body, x, G, cfg);
    }
    return boundary_vector(body, x, [t](double r) { return -heat_kernel(r, t, 2); }, cfg);
}

Vec2 heat_gradient_volume(const Polygon& poly, const Point& x, const Heat& spec, const QuadratureConfig& cfg) {
    const double t = spec.t;
    const double a = 1 / (4 * t);
    const RadialProfile G = [a, t](double r) { return heat_moment(r, a) / (8 * kPi * t * t); };
    return polar_vector(Body{poly}, x, G, cfg);
}

// ---------------------------------------------------------------------------
// Dispatch

PotentialValue potential(const Body& body, const Point& x, const PotentialSpec& spec, const QuadratureConfig& cfg) {
    spec.validate();
    require_planar(spec.m);
    return std::visit([&](const auto& f) -> PotentialValue {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Riesz>) return riesz_value(body, x, f, cfg);
        else if constexpr (std::is_same_v<T, Poisson>) return poisson_value(body, x, f, cfg);
        else return heat_value(body, x, f, cfg);
    }, spec.family);
}

Vec2 potential_gradient(const Body& body, const Point& x, const PotentialSpec& spec, const QuadratureConfig& cfg) {
    spec.validate();
    require_planar(spec.m);
    return std::visit([&](const auto& f) -> Vec2 {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Riesz>) return riesz_gradient(body, x, f, cfg);
        else if constexpr (std::is_same_v<T, Poisson>) return poisson_gradient(body, x, f, cfg);
        else return heat_gradient(body, x, f, cfg);
    }, spec.family);
}

// ---------------------------------------------------------------------------
// Balls in R^m

double ball_center_riesz(int m, double radius, double alpha) {
    if (m < 1 || !(radius > 0)) throw Error(ErrorCode::InvalidArgument, "need m >= 1 and radius > 0");
    const double s = sphere_measure(m - 1);
    const double R = radius;
    if (alpha == 0.0) return s * std::log(R);
    if (alpha == static_cast<double>(m)) {
        const double Rm = std::pow(R, m);
        return -s * (Rm * std::log(R) / m - Rm / (static_cast<double>(m) * m));
    }
    const double v = s * std::pow(R, alpha) / alpha;
    return alpha > m ? -v : v;
}

double ball_center_poisson(int m, double radius, double h) {
    if (m < 1 || !(radius > 0) || !(h > 0)) throw Error(ErrorCode::InvalidArgument, "need m >= 1, radius > 0, h > 0");
    // ∫₀^Φ sin^{m−1} φ dφ with Φ = atan(R/h), by the reduction formula.
    const double phi = std::atan2(radius, h);
    const double sn = std::sin(phi), cs = std::cos(phi);
    const int n = m - 1;
    double i0 = phi, i1 = 1 - cs;
    double in = n == 0 ? i0 : i1;
    for (int k = 2; k <= n; ++k) {
        const double ik = -std::pow(sn, k - 1) * cs / k + (k - 1.0) / k * i0;
        i0 = i1;
        i1 = ik;
        in = ik;
    }
    return 2 / sphere_measure(m) * sphere_measure(m - 1) * in;
}

double ball_center_heat(int m, double radius, double t) {
    if (m < 1 || !(radius > 0) || !(t > 0)) throw Error(ErrorCode::InvalidArgument, "need m >= 1, radius > 0, t > 0");
    return boost::math::gamma_p(0.5 * m, radius * radius / (4 * t));
}

}  // namespace radcen
