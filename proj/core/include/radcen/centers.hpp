#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "radcen/geometry.hpp"
#include "radcen/potentials.hpp"

namespace radcen {

enum class CenterRegime { ConcaveInterior, ConcaveGlobal, Multistart };
std::string_view to_string(CenterRegime r);

struct CenterOptions {
    int max_iterations = 500;
    double grad_tol = 1e-9;       // relative to max(|V(start)|, 1)
    std::optional<Point> start;   // overrides the default start / seed set
    bool force_multistart = false;
    int n_seeds = 12;
    QuadratureConfig quad;
};

struct CenterResult {
    Point point;
    double value = 0.0;
    double grad_norm = 0.0;
    int iterations = 0;
    CenterRegime regime = CenterRegime::Multistart;
    bool uniqueness_guaranteed = false;
    /// Local maxima reached from each seed (multistart only).
    std::vector<Point> seed_endpoints;
};

/// Regime implied by body convexity and the potential family.
CenterRegime center_regime(const Body& body, const PotentialSpec& spec);

/// Deterministic interior seeds: centroid, incenter, circumcenter when interior, then Halton points.
std::vector<Point> multistart_seeds(const Body& body, int n, double interior_band);

/// Single ascent run (gradient steps, damped Newton near a concave maximum).
CenterResult local_ascent(const Body& body, const PotentialSpec& spec, const Point& start, const CenterOptions& opts = {});

/// Maximizer of the potential. Throws NoInteriorSeed or NonConvergence.
CenterResult find_center(const Body& body, const PotentialSpec& spec, const CenterOptions& opts = {});

struct LocusTrace {
    std::string family;
    std::vector<double> params;
    std::vector<Point> points;
    std::vector<double> grad_norms;
    bool truncated = false;
    std::string diagnostic;
};

/// Continuation of the center over [lo, hi] on a log grid (linear when lo <= 0).
LocusTrace trace_locus(const Body& body, std::string_view family, double lo, double hi, int n_steps,
                       const CenterOptions& opts = {});

struct LimitRow {
    std::string family;
    double param = 0.0;
    std::string limit;  // "circumcenter" | "centroid" | "incenter"
    Point center;
    double distance = 0.0;
};

struct LimitReport {
    Point circumcenter, centroid, incenter;
    std::vector<LimitRow> rows;
    bool monotone = true;   // distances non-increasing along each escalating sequence
};

LimitReport limit_diagnostics(const Body& body, const CenterOptions& opts = {});

/// Potential family from its name and parameter.
PotentialSpec make_spec(std::string_view family, double param);

}  // namespace radcen
