#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "io.hpp"
#include "radcen/potentials.hpp"

using namespace radcen;
using io::json;

namespace {

struct Args {
    std::string body;
    std::string family = "riesz";
    double param = 4.0;
    std::string at = "centroid";
    std::string range;
    std::string out;
    std::string format = "json";
    std::optional<double> tol;
};

Point parse_at(const std::string& s, const Body& body) {
    if (s == "centroid") return centroid(body);
    if (s == "incenter") return incenter(body).center;
    if (s == "circumcenter") return circumcenter(body).center;
    const auto comma = s.find(',');
    if (comma == std::string::npos) throw io::ParseError("--at expects x,y or centroid");
    try {
        std::size_t n1 = 0, n2 = 0;
        const std::string xs = s.substr(0, comma), ys = s.substr(comma + 1);
        const double x = std::stod(xs, &n1), y = std::stod(ys, &n2);
        if (n1 != xs.size() || n2 != ys.size()) throw std::invalid_argument("trailing");
        return {x, y};
    } catch (const std::logic_error&) {
        throw io::ParseError("--at expects x,y or centroid");
    }
}

struct Range {
    double lo, hi;
    int n;
};

Range parse_range(const std::string& s) {
    Range r{};
    char tail = 0;
    if (std::sscanf(s.c_str(), "%lf:%lf:%d%c", &r.lo, &r.hi, &r.n, &tail) != 3)
        throw io::ParseError("--range expects lo:hi:n");
    return r;
}

void emit(const Args& a, const std::string& text) {
    if (a.out.empty()) std::cout << text;
    else io::write_atomic(a.out, text);
}

void emit_json(const Args& a, const json& j) { emit(a, j.dump(2) + "\n"); }

void need_format(const Args& a, std::initializer_list<const char*> allowed) {
    for (const char* f : allowed)
        if (a.format == f) return;
    throw io::ParseError("format '" + a.format + "' not supported by this command");
}

void add_body(CLI::App* cmd, Args& a) { cmd->add_option("--body", a.body, "Body JSON file or inline JSON")->required(); }
void add_family(CLI::App* cmd, Args& a) {
    cmd->add_option("--family", a.family, "Potential family")->check(CLI::IsMember({"riesz", "poisson", "heat"}));
    cmd->add_option("--param", a.param, "alpha, h or t");
}
void add_output(CLI::App* cmd, Args& a, const std::string& formats) {
    cmd->add_option("--out", a.out, "Output path (stdout when omitted)");
    cmd->add_option("--format", a.format, "Output format: " + formats);
}

int fail(int code, std::string_view kind, const std::string& message) {
    std::cerr << json{{"error", kind}, {"message", message}}.dump() << "\n";
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"radcen: potential centers, balance laws and concavity checks for planar bodies"};
    app.require_subcommand(1);
    Args a;

    auto* pot = app.add_subcommand("potential", "Potential value and gradient at a point");
    add_body(pot, a);
    add_family(pot, a);
    pot->add_option("--at", a.at, "x,y | centroid | incenter | circumcenter");
    add_output(pot, a, "json");

    auto* cen = app.add_subcommand("center", "Maximizer of the potential");
    add_body(cen, a);
    add_family(cen, a);
    cen->add_option("--tol", a.tol, "Gradient tolerance relative to max(|V|,1)");
    add_output(cen, a, "json");

    auto* loc = app.add_subcommand("locus", "Center as the parameter runs over a range");
    add_body(loc, a);
    add_family(loc, a);
    loc->add_option("--range", a.range, "lo:hi:n (log spaced when lo > 0)")->required();
    loc->add_option("--tol", a.tol, "Gradient tolerance relative to max(|V|,1)");
    add_output(loc, a, "json|csv|svg");

    auto* bal = app.add_subcommand("balance", "Balance-law residuals about a point");
    add_body(bal, a);
    bal->add_option("--at", a.at, "x,y | centroid | incenter | circumcenter");
    bal->add_option("--tol", a.tol, "Balanced when the normalized sup residual is below this");
    add_output(bal, a, "json|csv|svg");

    auto* cls = app.add_subcommand("classify", "Balance classification of a convex triangle or quadrangle");
    add_body(cls, a);
    add_output(cls, a, "json");

    auto* gen = app.add_subcommand("generate-asym", "Convex balanced body without symmetries");
    add_output(gen, a, "json|svg");

    auto* lim = app.add_subcommand("limits", "Centers along escalating parameters against their limit points");
    add_body(lim, a);
    add_output(lim, a, "json");

    auto* con = app.add_subcommand("concavity-check", "Power-concavity checks on random segments");
    add_body(con, a);
    con->add_option("--tol", a.tol, "Multistart agreement tolerance relative to diam");
    add_output(con, a, "json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (pot->parsed()) {
            need_format(a, {"json"});
            const Body body = io::load_body(a.body);
            const Point x = parse_at(a.at, body);
            const PotentialSpec spec = make_spec(a.family, a.param);
            const PotentialValue v = potential(body, x, spec);
            json j{{"family", a.family},
                   {"param", a.param},
                   {"at", io::to_json(x)},
                   {"value", v.value},
                   {"regime", std::string(to_string(v.regime))},
                   {"location", std::string(to_string(v.location))}};
            try {
                j["gradient"] = io::to_json(potential_gradient(body, x, spec));
            } catch (const Error& e) {
                if (e.code() != ErrorCode::BoundaryPoint) throw;
                j["gradient"] = nullptr;
            }
            emit_json(a, j);
        } else if (cen->parsed()) {
            need_format(a, {"json"});
            const Body body = io::load_body(a.body);
            CenterOptions o;
            if (a.tol) o.grad_tol = *a.tol;
            emit_json(a, io::to_json(find_center(body, make_spec(a.family, a.param), o)));
        } else if (loc->parsed()) {
            need_format(a, {"json", "csv", "svg"});
            const Range r = parse_range(a.range);
            const Body body = io::load_body(a.body);
            CenterOptions o;
            if (a.tol) o.grad_tol = *a.tol;
            const LocusTrace t = trace_locus(body, a.family, r.lo, r.hi, r.n, o);
            if (a.format == "csv") emit(a, io::locus_csv(t));
            else if (a.format == "svg") emit(a, io::svg_body(body, t.points));
            else emit_json(a, io::to_json(t));
        } else if (bal->parsed()) {
            need_format(a, {"json", "csv", "svg"});
            const Body body = io::load_body(a.body);
            const BalanceReport rep = balance_report(body, parse_at(a.at, body), 256, a.tol.value_or(1e-8));
            if (a.format == "csv") emit(a, io::balance_csv(rep));
            else if (a.format == "svg") emit(a, io::svg_balance(body, rep));
            else emit_json(a, io::to_json(rep));
        } else if (cls->parsed()) {
            need_format(a, {"json"});
            const Body body = io::load_body(a.body);
            const auto* poly = std::get_if<Polygon>(&body);
            if (!poly) throw Error(ErrorCode::InvalidArgument, "classify needs a polygon");
            emit_json(a, {{"classification", std::string(to_string(classify_polygon(*poly)))}});
        } else if (gen->parsed()) {
            need_format(a, {"json", "svg"});
            const RadialArcBody b = generate_asymmetric_balanced();
            if (a.format == "svg") emit(a, io::svg_body(Body{b}));
            else emit_json(a, io::to_json(b, 720));
        } else if (lim->parsed()) {
            need_format(a, {"json"});
            emit_json(a, io::to_json(limit_diagnostics(io::load_body(a.body))));
        } else if (con->parsed()) {
            need_format(a, {"json"});
            const Body body = io::load_body(a.body);
            const auto* poly = std::get_if<Polygon>(&body);
            if (!poly) throw Error(ErrorCode::InvalidArgument, "concavity-check needs a polygon");
            ConcavityOptions o;
            if (a.tol) o.uniqueness_tol = *a.tol;
            emit_json(a, io::to_json(concavity_suite(*poly, o)));
        }
    } catch (const io::ParseError& e) {
        return fail(2, "ParseError", e.what());
    } catch (const Error& e) {
        return fail(1, to_string(e.code()), e.what());
    } catch (const std::exception& e) {
        return fail(1, "Failure", e.what());
    }
    return 0;
}
