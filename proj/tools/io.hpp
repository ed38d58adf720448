#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "radcen/balance.hpp"
#include "radcen/centers.hpp"
#include "radcen/concavity.hpp"
#include "radcen/geometry.hpp"

namespace radcen::io {

using json = nlohmann::ordered_json;

/// Malformed input text or schema (as opposed to an invalid body).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Accepts {"vertices": [[x,y],...]}, {"type":"disk","center":[x,y],"radius":r}
/// and the radial_arc layout written by to_json(RadialArcBody).
Body body_from_json(const json& j);
/// Inline JSON when the text starts with '{', otherwise a file path.
Body load_body(const std::string& source);
Point point_from_json(const json& j);

json to_json(const Point& p);
json to_json(const Polygon& poly);
json to_json(const Disk& disk);
json to_json(const RadialArcBody& body, int outline_samples = 0);
json to_json(const Body& body);
json to_json(const ArcSet& arcs);
json to_json(const UnfoldedRegion& region);
json to_json(const BalanceReport& rep);
json to_json(const CenterResult& res);
json to_json(const LocusTrace& trace);
json to_json(const LimitReport& rep);
json to_json(const ContactSet& cs);
json to_json(const Isometry& iso);
json to_json(const std::vector<ConcavityRow>& rows);

/// Columns: param,x,y,grad_norm
std::string locus_csv(const LocusTrace& trace);
/// Columns: radius,residual_x,residual_y,normalized
std::string balance_csv(const BalanceReport& rep);

/// Body outline with an optional polyline overlay.
std::string svg_body(const Body& body, const std::vector<Point>& overlay = {});
/// Normalized residual against log radius as a bar strip under the outline.
std::string svg_balance(const Body& body, const BalanceReport& rep);

/// Writes through a sibling temporary file and rename.
void write_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace radcen::io
