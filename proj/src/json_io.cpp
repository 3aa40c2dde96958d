#include "postulatum/json_io.hpp"

#include <vector>

#include "postulatum/errors.hpp"

namespace postulatum::io {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

std::vector<Rational> parse_components(std::string_view text, std::size_t expected, const char* what) {
  const auto parts = split(text, ',');
  if (parts.size() != expected) {
    throw GeometryError(ErrorCode::Parse, "'" + std::string(text) + "' is not a " + what + " (expected " +
                                              std::to_string(expected) + " comma-separated rationals)");
  }
  std::vector<Rational> out;
  for (const auto part : parts) out.push_back(parse_rational(part));
  return out;
}

Json optional_kind(const std::optional<ParallelKind>& k) { return k ? Json(to_string(*k)) : Json(nullptr); }

}  // namespace

Point2 parse_point(std::string_view text) {
  const auto c = parse_components(text, 2, "point");
  return {c[0], c[1]};
}

std::pair<Point2, Point2> parse_segment(std::string_view text) {
  const auto parts = split(text, ':');
  if (parts.size() != 2) {
    throw GeometryError(ErrorCode::Parse, "'" + std::string(text) + "' is not a line of the form x1,y1:x2,y2");
  }
  return {parse_point(parts[0]), parse_point(parts[1])};
}

square::Chord parse_chord(std::string_view text) {
  const auto [a, b] = parse_segment(text);
  return square::chord_validate(a, b);
}

sphere::Triple parse_triple(std::string_view text) {
  const auto c = parse_components(text, 3, "triple");
  return {c[0], c[1], c[2]};
}

sphere::PlanarLine parse_planar_line(std::string_view text) {
  const auto c = parse_components(text, 3, "planar line a,b,c");
  return sphere::PlanarLine::from_coefficients(c[0], c[1], c[2]);
}

std::string chord_text(const square::Chord& c) { return to_string(c.q1()) + ":" + to_string(c.q2()); }

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const Point2& p) { return Json::array({to_string(p.x), to_string(p.y)}); }

Json to_json(const Direction& d) { return Json::array({d.dx().get_str(), d.dy().get_str()}); }

Json to_json(const square::Chord& c) { return Json::array({to_json(c.q1()), to_json(c.q2())}); }

Json to_json(const DirectionSet& s) {
  Json arcs = Json::array();
  for (const Arc& a : s.arcs()) {
    arcs.push_back({{"start", to_json(a.start)},
                    {"end", to_json(a.end)},
                    {"start_closed", a.start_closed},
                    {"end_closed", a.end_closed}});
  }
  Json iso = Json::array();
  for (const Direction& d : s.isolated()) iso.push_back(to_json(d));
  return {{"arcs", arcs}, {"isolated", iso}};
}

Json to_json(const square::Classification& c) {
  Json out;
  out["kind"] = tag_name(c.kind.tag());
  if (c.kind.tag() == ParallelKind::Tag::FiniteMany) out["k"] = c.kind.count();
  out["parallels"] = to_json(c.parallels);
  Json w = Json::object();
  if (c.witnesses.unique_parallel) w["unique_parallel"] = to_json(*c.witnesses.unique_parallel);
  if (c.witnesses.bounding_pencil) {
    w["bounding_pencil"] = {{"u", to_json(c.witnesses.bounding_pencil->first)},
                            {"v", to_json(c.witnesses.bounding_pencil->second)}};
  }
  if (!c.witnesses.blocking_samples.empty()) {
    Json samples = Json::array();
    for (const auto& s : c.witnesses.blocking_samples) {
      samples.push_back({{"direction", to_json(s.direction)}, {"hit", to_json(s.hit)}});
    }
    w["blocking_samples"] = samples;
  }
  out["witnesses"] = w;
  return out;
}

Json to_json(const square::ZoneMap& z) {
  Json cells = Json::array();
  for (const auto& c : z.cells) {
    Json poly = Json::array();
    for (const Point2& v : c.polygon) poly.push_back(to_json(v));
    cells.push_back({{"polygon", poly}, {"kind", to_string(c.kind)}, {"area", to_string(square::polygon_area(c.polygon))}});
  }
  Json boundary = Json::array();
  for (square::Side side : square::kSides) {
    Json pieces = Json::array();
    for (const auto& p : z.boundary[static_cast<std::size_t>(side)]) {
      if (p.is_point()) {
        pieces.push_back({{"at", to_json(p.from)}, {"kind", optional_kind(p.kind)}});
      } else {
        pieces.push_back({{"from", to_json(p.from)}, {"to", to_json(p.to)}, {"kind", optional_kind(p.kind)}});
      }
    }
    boundary.push_back({{"side", square::side_name(side)}, {"pieces", pieces}});
  }
  Json corners = Json::object();
  for (square::Corner c : square::kCorners) {
    corners[square::corner_name(c)] = optional_kind(z.corner_kinds[static_cast<std::size_t>(c)]);
  }
  return {{"line", to_json(z.line)}, {"cells", cells}, {"boundary", boundary}, {"corners", corners}};
}

Json to_json(const square::DegreeOfNegation& d) {
  Json area = Json::object();
  for (const auto& [k, v] : d.area_fraction) area[to_string(k)] = to_string(v);
  Json boundary = Json::object();
  for (const auto& [k, v] : d.boundary_length_fraction) boundary[to_string(k)] = to_string(v);
  Json corners = Json::object();
  for (square::Corner c : square::kCorners) {
    corners[square::corner_name(c)] = optional_kind(d.corner_kinds[static_cast<std::size_t>(c)]);
  }
  return {{"area", area},
          {"boundary", boundary},
          {"corners", corners},
          {"negation_degree_area", to_string(d.negation_degree_area)}};
}

Json to_json(const square::McEstimate& m) {
  Json kinds = Json::object();
  for (const auto& [k, e] : m.kinds) {
    kinds[to_string(k)] = {{"count", e.count},
                           {"frequency", e.frequency},
                           {"wilson99", Json::array({e.interval.low, e.interval.high})}};
  }
  return {{"samples", m.samples}, {"seed", m.seed}, {"kinds", kinds}};
}

Json to_json(const axiom::DenialVerdict& v) {
  Json behaviors = Json::array();
  for (const auto& k : v.behaviors_seen) behaviors.push_back(to_string(k));
  Json witnesses = Json::object();
  for (const auto& [k, inst] : v.witnesses) {
    witnesses[to_string(k)] = {{"model", inst.model}, {"point", axiom::point_text(inst)}, {"line", axiom::line_text(inst)}};
  }
  return {{"model", v.model},
          {"denied", v.denied},
          {"analytic", v.analytic},
          {"behaviors", behaviors},
          {"witnesses", witnesses},
          {"instances_examined", v.instances_examined}};
}

}  // namespace postulatum::io
