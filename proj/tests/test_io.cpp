#include <doctest.h>

#include <random>
#include <regex>
#include <vector>

#include "postulatum/errors.hpp"
#include "postulatum/json_io.hpp"
#include "postulatum/svg.hpp"

using namespace postulatum;
using namespace postulatum::io;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const GeometryError& e) {
    return e.code();
  }
  FAIL("expected a GeometryError");
  return ErrorCode::Parse;
}

std::size_t count_of(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

// Minimal well-formedness: tags nest and close, attributes are quoted.
bool well_formed(const std::string& xml) {
  static const std::regex tag(R"(<(/?)([A-Za-z][\w:-]*)((?:\s+[\w:-]+="[^"<]*")*)\s*(/?)>)");
  std::vector<std::string> stack;
  std::size_t pos = 0;
  while ((pos = xml.find('<', pos)) != std::string::npos) {
    if (xml.compare(pos, 2, "<?") == 0) {
      pos = xml.find("?>", pos);
      if (pos == std::string::npos) return false;
      continue;
    }
    std::smatch m;
    const std::string rest = xml.substr(pos);
    if (!std::regex_search(rest, m, tag, std::regex_constants::match_continuous)) return false;
    if (m[1] == "/") {
      if (stack.empty() || stack.back() != m[2]) return false;
      stack.pop_back();
    } else if (m[4] != "/") {
      stack.push_back(m[2]);
    }
    pos += m.length(0);
  }
  return stack.empty();
}

}  // namespace

TEST_CASE("rational grammar") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-2/4") == Rational(-1, 2));
  CHECK(to_string(parse_rational("6/8")) == "3/4");
  CHECK(code_of([] { parse_rational("0.5"); }) == ErrorCode::Parse);
  CHECK(code_of([] { parse_rational("1e3"); }) == ErrorCode::Parse);
  CHECK(code_of([] { parse_rational("1/0"); }) == ErrorCode::Parse);
  CHECK(code_of([] { parse_rational("1/-2"); }) == ErrorCode::Parse);
  CHECK(code_of([] { parse_rational(""); }) == ErrorCode::Parse);
  CHECK(code_of([] { parse_rational("x"); }) == ErrorCode::Parse);
  try {
    parse_rational("0.25");
  } catch (const GeometryError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("0.25") != std::string::npos);
    CHECK(msg.find("p/q") != std::string::npos);
  }
}

TEST_CASE("rationals round-trip through text") {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 500; ++i) {
    const Rational r = ratio(static_cast<long>(rng() % 2001) - 1000, static_cast<long>(rng() % 97) + 1);
    CHECK(parse_rational(to_string(r)) == r);
    CHECK(parse_rational(to_json(r).get<std::string>()) == r);
  }
}

TEST_CASE("point, chord and triple specs") {
  CHECK(parse_point("1/2,0") == Point2{Rational(1, 2), 0});
  CHECK(code_of([] { parse_point("1/2"); }) == ErrorCode::Parse);
  CHECK(code_of([] { parse_point("1,2,3"); }) == ErrorCode::Parse);
  const square::Chord ce = parse_chord("1,1:0,1/2");
  CHECK(ce == square::line_ce());
  CHECK(parse_chord(chord_text(ce)) == ce);
  CHECK(code_of([] { parse_chord("1,1;0,1/2"); }) == ErrorCode::Parse);
  CHECK(code_of([] { parse_chord("1/2,0:1,1/2"); }) == ErrorCode::AdjacentSidesOnly);
  CHECK(parse_triple("1,-2/3,0") == sphere::Triple{1, Rational(-2, 3), 0});
  CHECK(code_of([] { parse_triple("1,2"); }) == ErrorCode::Parse);
  CHECK(parse_planar_line("2,3,-6") == sphere::PlanarLine::from_coefficients(2, 3, -6));
}

TEST_CASE("classification JSON") {
  const auto c = square::classify({Rational(1, 2), 0}, square::line_ce());
  const Json j = to_json(c);
  CHECK(j["kind"] == "Euclidean");
  CHECK(j.contains("parallels"));
  CHECK(j.contains("witnesses"));
  CHECK(j.dump() == to_json(c).dump());
}

TEST_CASE("zone map JSON and SVG") {
  const square::ZoneMap z = square::exact_zone_map(square::line_ce());
  const Json j = to_json(z);
  REQUIRE(j.contains("cells"));
  CHECK(j["cells"].size() == z.cells.size());
  CHECK(j.contains("boundary"));
  CHECK(j.contains("corners"));

  const std::string svg = svg::render_zone_map(z);
  CHECK(count_of(svg, "<polygon") == z.cells.size());
  CHECK(well_formed(svg));
  // Legend lists only kinds present: Euclidean appears on the boundary, no
  // FiniteMany anywhere.
  CHECK(svg.find(svg::kind_color(ParallelKind::Tag::Elliptic)) != std::string::npos);
  CHECK(svg.find(svg::kind_color(ParallelKind::Tag::Hyperbolic)) != std::string::npos);
  CHECK(svg.find(svg::kind_color(ParallelKind::Tag::Euclidean)) != std::string::npos);
  CHECK(svg.find("FiniteMany") == std::string::npos);
  CHECK(svg == svg::render_zone_map(z));

  std::mt19937_64 rng(62);
  for (const char* text : {"1/2,0:1/2,1", "0,0:1,1", "0,1/3:1,2/3", "1/4,0:3/5,1"}) {
    const square::ZoneMap m = square::exact_zone_map(parse_chord(text));
    const std::string s = svg::render_zone_map(m);
    CHECK(count_of(s, "<polygon") == m.cells.size());
    CHECK(well_formed(s));
  }
}

TEST_CASE("kind colours are fixed and distinct") {
  std::set<std::string> colours;
  for (auto t : {ParallelKind::Tag::Elliptic, ParallelKind::Tag::Euclidean, ParallelKind::Tag::FiniteMany,
                 ParallelKind::Tag::CountablyInfinite, ParallelKind::Tag::Hyperbolic}) {
    colours.insert(svg::kind_color(t));
  }
  CHECK(colours.size() == 5);
  CHECK(svg::kind_color(ParallelKind::Tag::Elliptic) == "#d95f02");
}

TEST_CASE("Monte Carlo estimates") {
  const auto one = square::zone_measures_mc(square::line_ce(), 1, 5);
  REQUIRE(one.kinds.size() == 1);
  CHECK(one.kinds.begin()->second.frequency == 1.0);

  const auto a = square::zone_measures_mc(square::line_ce(), 10000, 7, 1);
  const auto b = square::zone_measures_mc(square::line_ce(), 10000, 7, 3);
  CHECK(to_json(a).dump() == to_json(b).dump());
  std::uint64_t total = 0;
  for (const auto& [k, e] : a.kinds) total += e.count;
  CHECK(total == 10000);

  const auto w = square::wilson_interval(25, 100);
  CHECK(w.low < 0.25);
  CHECK(w.high > 0.25);
  CHECK(w.low > 0.13);
  CHECK(w.high < 0.39);
}

TEST_CASE("denial verdict JSON") {
  const Json j = to_json(axiom::evaluate_registered("sphere", 10, 1));
  CHECK(j["model"] == "sphere");
  CHECK(j["denied"] == false);
  CHECK(j["behaviors"] == Json::array({"Elliptic"}));
  CHECK(j.contains("witnesses"));
  CHECK(j.contains("instances_examined"));
}
