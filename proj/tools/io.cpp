#include "io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace radcen::io {

namespace {

double number(const json& j, const char* what) {
    if (!j.is_number()) throw ParseError(std::string("expected a number for ") + what);
    return j.get<double>();
}

std::vector<double> numbers(const json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string("expected an array for ") + what);
    std::vector<double> out;
    for (const auto& v : j) out.push_back(number(v, what));
    return out;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string svg_points(const std::vector<Point>& pts) {
    std::string s;
    for (const Point& p : pts) {
        if (!s.empty()) s += ' ';
        s += fmt(p.x) + "," + fmt(-p.y);
    }
    return s;
}

std::vector<Point> outline_of(const Body& body) {
    if (const auto* poly = std::get_if<Polygon>(&body)) return {poly->vertices().begin(), poly->vertices().end()};
    return boundary_samples(body, 720);
}

struct Frame {
    double x0, y0, w, h;
};

Frame frame_of(const std::vector<Point>& pts) {
    double lx = pts.front().x, hx = lx, ly = pts.front().y, hy = ly;
    for (const Point& p : pts) {
        lx = std::min(lx, p.x); hx = std::max(hx, p.x);
        ly = std::min(ly, p.y); hy = std::max(hy, p.y);
    }
    const double pad = 0.05 * std::max(hx - lx, hy - ly);
    return {lx - pad, -hy - pad, hx - lx + 2 * pad, hy - ly + 2 * pad};
}

}  // namespace

Point point_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) throw ParseError("point must be [x, y]");
    return {number(j[0], "x"), number(j[1], "y")};
}

Body body_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("body must be a JSON object");
    const std::string type = j.value("type", std::string("polygon"));
    if (type == "polygon") {
        if (!j.contains("vertices") || !j["vertices"].is_array()) throw ParseError("polygon needs \"vertices\"");
        std::vector<Point> v;
        for (const auto& p : j["vertices"]) v.push_back(point_from_json(p));
        return Polygon(std::move(v));
    }
    if (type == "disk") {
        if (!j.contains("center") || !j.contains("radius")) throw ParseError("disk needs \"center\" and \"radius\"");
        return Disk(point_from_json(j["center"]), number(j["radius"], "radius"));
    }
    if (type == "radial_arc") {
        for (const char* key : {"R_max", "directions", "knots", "profiles"})
            if (!j.contains(key)) throw ParseError(std::string("radial_arc needs \"") + key + "\"");
        const auto dirs = numbers(j["directions"], "directions");
        const auto& prof = j["profiles"];
        if (dirs.size() != 3 || !prof.is_array() || prof.size() != 3)
            throw ParseError("radial_arc needs three directions and three profiles");
        std::array<std::vector<double>, 3> sines;
        for (int d = 0; d < 3; ++d) sines[d] = numbers(prof[d], "profiles");
        return RadialArcBody(number(j["R_max"], "R_max"), {dirs[0], dirs[1], dirs[2]}, numbers(j["knots"], "knots"),
                             std::move(sines));
    }
    throw ParseError("unknown body type '" + type + "'");
}

Body load_body(const std::string& source) {
    std::string text;
    const auto first = source.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && source[first] == '{') {
        text = source;
    } else {
        std::ifstream in(source);
        if (!in) throw ParseError("cannot open body file '" + source + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("body JSON: ") + e.what());
    }
    return body_from_json(j);
}

json to_json(const Point& p) { return json::array({p.x, p.y}); }

json to_json(const Polygon& poly) {
    json v = json::array();
    for (const Point& p : poly.vertices()) v.push_back(to_json(p));
    return {{"type", "polygon"}, {"vertices", v}};
}

json to_json(const Disk& disk) { return {{"type", "disk"}, {"center", to_json(disk.center)}, {"radius", disk.radius}}; }

json to_json(const RadialArcBody& body, int outline_samples) {
    json prof = json::array();
    for (int d = 0; d < 3; ++d) {
        const auto s = body.sine_profile(d);
        prof.push_back(std::vector<double>(s.begin(), s.end()));
    }
    const auto& a = body.direction_angles();
    json j{{"type", "radial_arc"},
           {"R_max", body.r_max()},
           {"directions", {a[0], a[1], a[2]}},
           {"knots", std::vector<double>(body.knots().begin(), body.knots().end())},
           {"profiles", prof}};
    if (outline_samples > 0) {
        json o = json::array();
        for (const Point& p : body.outline(outline_samples)) o.push_back(to_json(p));
        j["outline"] = o;
    }
    return j;
}

json to_json(const Body& body) {
    return std::visit([](const auto& b) -> json { return to_json(b); }, body);
}

json to_json(const ArcSet& arcs) {
    json a = json::array();
    for (const Arc& arc : arcs.arcs) a.push_back({arc.begin, arc.end});
    return {{"center", to_json(arcs.center)}, {"radius", arcs.radius}, {"arcs", a}, {"measure", arcs.measure()}};
}

json to_json(const UnfoldedRegion& region) {
    json dirs = json::array(), outline = json::array();
    for (const Vec2& v : region.directions) dirs.push_back(to_json(v));
    for (const Point& p : region.outline) outline.push_back(to_json(p));
    return {{"directions", dirs}, {"offsets", region.offsets}, {"outline", outline}};
}

json to_json(const BalanceReport& rep) {
    json res = json::array();
    for (const Vec2& v : rep.residual_vectors) res.push_back(to_json(v));
    return {{"candidate", to_json(rep.candidate)}, {"balanced", rep.balanced},     {"sup_residual", rep.sup_residual},
            {"tolerance", rep.tolerance},          {"radii", rep.radii},           {"residuals", res}};
}

json to_json(const CenterResult& res) {
    json j{{"point", to_json(res.point)},
           {"value", res.value},
           {"grad_norm", res.grad_norm},
           {"iterations", res.iterations},
           {"regime", std::string(to_string(res.regime))},
           {"uniqueness_guaranteed", res.uniqueness_guaranteed}};
    if (!res.seed_endpoints.empty()) {
        json e = json::array();
        for (const Point& p : res.seed_endpoints) e.push_back(to_json(p));
        j["seed_endpoints"] = e;
    }
    return j;
}

json to_json(const LocusTrace& trace) {
    json pts = json::array();
    for (const Point& p : trace.points) pts.push_back(to_json(p));
    return {{"family", trace.family},     {"params", trace.params},       {"points", pts},
            {"grad_norms", trace.grad_norms}, {"truncated", trace.truncated}, {"diagnostic", trace.diagnostic}};
}

json to_json(const LimitReport& rep) {
    json rows = json::array();
    for (const LimitRow& r : rep.rows)
        rows.push_back({{"family", r.family},
                        {"param", r.param},
                        {"limit", r.limit},
                        {"center", to_json(r.center)},
                        {"distance", r.distance}});
    return {{"circumcenter", to_json(rep.circumcenter)},
            {"centroid", to_json(rep.centroid)},
            {"incenter", to_json(rep.incenter)},
            {"rows", rows},
            {"monotone", rep.monotone}};
}

json to_json(const ContactSet& cs) {
    json pts = json::array();
    for (const Point& p : cs.points) pts.push_back(to_json(p));
    return {{"r_star", cs.r_star}, {"points", pts}, {"sum", to_json(cs.sum)}};
}

json to_json(const Isometry& iso) {
    return {{"kind", iso.kind == Isometry::Kind::Rotation ? "rotation" : "reflection"},
            {"angle", iso.angle},
            {"center", to_json(iso.center)}};
}

json to_json(const std::vector<ConcavityRow>& rows) {
    json out = json::array();
    bool all = true;
    for (const ConcavityRow& r : rows) {
        out.push_back({{"check", r.check}, {"param", r.param}, {"samples", r.samples}, {"worst", r.worst}, {"passed", r.passed}});
        all = all && r.passed;
    }
    return {{"rows", out}, {"passed", all}};
}

std::string locus_csv(const LocusTrace& trace) {
    std::ostringstream s;
    s.precision(17);
    s << "param,x,y,grad_norm\n";
    for (std::size_t i = 0; i < trace.points.size(); ++i)
        s << trace.params[i] << ',' << trace.points[i].x << ',' << trace.points[i].y << ',' << trace.grad_norms[i] << '\n';
    return s.str();
}

std::string balance_csv(const BalanceReport& rep) {
    std::ostringstream s;
    s.precision(17);
    s << "radius,residual_x,residual_y,normalized\n";
    for (std::size_t i = 0; i < rep.radii.size(); ++i) {
        const Vec2 v = rep.residual_vectors[i];
        s << rep.radii[i] << ',' << v.x << ',' << v.y << ',' << norm(v) / (kTwoPi * rep.radii[i]) << '\n';
    }
    return s.str();
}

std::string svg_body(const Body& body, const std::vector<Point>& overlay) {
    const auto outline = outline_of(body);
    std::vector<Point> all = outline;
    all.insert(all.end(), overlay.begin(), overlay.end());
    const Frame f = frame_of(all);
    const double stroke = 0.004 * std::max(f.w, f.h);
    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt(f.x0) << ' ' << fmt(f.y0) << ' ' << fmt(f.w) << ' '
      << fmt(f.h) << "\">\n";
    s << "<polygon points=\"" << svg_points(outline) << "\" fill=\"#dde6f0\" stroke=\"#1f3b57\" stroke-width=\""
      << fmt(stroke) << "\"/>\n";
    if (!overlay.empty()) {
        s << "<polyline points=\"" << svg_points(overlay) << "\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\""
          << fmt(stroke) << "\"/>\n";
        s << "<circle cx=\"" << fmt(overlay.back().x) << "\" cy=\"" << fmt(-overlay.back().y) << "\" r=\""
          << fmt(2 * stroke) << "\" fill=\"#c0392b\"/>\n";
    }
    s << "</svg>\n";
    return s.str();
}

std::string svg_balance(const Body& body, const BalanceReport& rep) {
    const auto outline = outline_of(body);
    const Frame f = frame_of(outline);
    const double stroke = 0.004 * std::max(f.w, f.h);
    const double strip = 0.3 * f.h;
    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt(f.x0) << ' ' << fmt(f.y0) << ' ' << fmt(f.w) << ' '
      << fmt(f.h + strip) << "\">\n";
    s << "<polygon points=\"" << svg_points(outline) << "\" fill=\"#dde6f0\" stroke=\"#1f3b57\" stroke-width=\""
      << fmt(stroke) << "\"/>\n";
    s << "<circle cx=\"" << fmt(rep.candidate.x) << "\" cy=\"" << fmt(-rep.candidate.y) << "\" r=\"" << fmt(2 * stroke)
      << "\" fill=\"#c0392b\"/>\n";
    if (!rep.radii.empty()) {
        // Bar height: normalized residual on a log scale from 1e-16 to 1.
        const double base = f.y0 + f.h + strip;
        const double bw = f.w / rep.radii.size();
        for (std::size_t i = 0; i < rep.radii.size(); ++i) {
            const double r = norm(rep.residual_vectors[i]) / (kTwoPi * rep.radii[i]);
            const double level = std::clamp((std::log10(std::max(r, 1e-16)) + 16.0) / 16.0, 0.0, 1.0);
            const double hgt = std::max(level * 0.9 * strip, 1e-3 * strip);
            s << "<rect x=\"" << fmt(f.x0 + i * bw) << "\" y=\"" << fmt(base - hgt) << "\" width=\"" << fmt(bw)
              << "\" height=\"" << fmt(hgt) << "\" fill=\"" << (r < rep.tolerance ? "#27ae60" : "#c0392b") << "\"/>\n";
        }
    }
    s << "</svg>\n";
    return s.str();
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write '" + tmp.string() + "'");
        out << content;
        if (!out.flush()) throw std::runtime_error("write failed for '" + tmp.string() + "'");
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace radcen::io
