#pragma once

#include <string_view>

#include <json.hpp>

#include "postulatum/axiom_framework.hpp"
#include "postulatum/monte_carlo.hpp"
#include "postulatum/sphere_plane_model.hpp"
#include "postulatum/square_model.hpp"
#include "postulatum/zone_map.hpp"

namespace postulatum::io {

using Json = nlohmann::ordered_json;

// Input grammar. Components are rationals `p` or `p/q`; decimals are
// rejected. All parsers throw GeometryError(Parse) naming the bad token.

/// `x,y`
Point2 parse_point(std::string_view text);
/// `x1,y1:x2,y2`; validity of the chord is checked separately (domain error).
std::pair<Point2, Point2> parse_segment(std::string_view text);
/// `x1,y1:x2,y2` validated as a chord of the square.
square::Chord parse_chord(std::string_view text);
/// `x,y,z`
sphere::Triple parse_triple(std::string_view text);
/// `a,b,c` for a x + b y + c = 0
sphere::PlanarLine parse_planar_line(std::string_view text);

std::string chord_text(const square::Chord& c);

Json to_json(const Rational& r);
Json to_json(const Point2& p);
Json to_json(const Direction& d);
Json to_json(const square::Chord& c);
Json to_json(const DirectionSet& s);
Json to_json(const square::Classification& c);
Json to_json(const square::ZoneMap& z);
Json to_json(const square::DegreeOfNegation& d);
Json to_json(const square::McEstimate& m);
Json to_json(const axiom::DenialVerdict& v);

}  // namespace postulatum::io
