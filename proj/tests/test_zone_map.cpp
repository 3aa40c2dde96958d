#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "postulatum/zone_map.hpp"

using namespace postulatum;
using namespace postulatum::square;

namespace {

Point2 pt(Rational x, Rational y) { return {std::move(x), std::move(y)}; }

bool strictly_inside(const Point2& p, const Polygon& poly) {
  for (std::size_t i = 0; i < poly.size(); ++i) {
    if (orient(poly[i], poly[(i + 1) % poly.size()], p) <= 0) return false;
  }
  return true;
}

bool is_convex_ccw(const Polygon& poly) {
  if (poly.size() < 3) return false;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    if (orient(poly[i], poly[(i + 1) % poly.size()], poly[(i + 2) % poly.size()]) <= 0) return false;
  }
  return true;
}

Rational sum(const std::map<ParallelKind, Rational>& m) {
  Rational s(0);
  for (const auto& [k, v] : m) s += v;
  return s;
}

}  // namespace

TEST_CASE("cells of CE tile the square and are convex") {
  const ZoneMap z = exact_zone_map(line_ce());
  Rational total(0);
  std::set<ParallelKind> kinds;
  for (const Cell& c : z.cells) {
    CHECK(is_convex_ccw(c.polygon));
    total += polygon_area(c.polygon);
    kinds.insert(c.kind);
  }
  CHECK(total == 1);
  CHECK(kinds.count(ParallelKind::finite_many(2)) == 0);
  CHECK(kinds.count(ParallelKind::countably_infinite()) == 0);

  Rational unmerged(0);
  for (const Polygon& p : arrangement_cells(line_ce())) unmerged += polygon_area(p);
  CHECK(unmerged == 1);
}

TEST_CASE("cell labels are constant inside each cell") {
  const Chord l = line_ce();
  const ZoneMap z = exact_zone_map(l);
  std::mt19937_64 rng(41);
  for (const Cell& c : z.cells) {
    for (int i = 0; i < 100; ++i) {
      const Point2 p = random_interior_point(c.polygon, rng);
      REQUIRE(strictly_inside(p, c.polygon));
      CHECK(classify(p, l).kind == c.kind);
    }
  }
}

TEST_CASE("a point grid lands in cells of its own kind") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 4; ++trial) {
    const Chord l = trial == 0 ? line_ce() : oracle::random_chord(rng, 6);
    const ZoneMap z = exact_zone_map(l);
    for (long i = 0; i < 24; ++i) {
      for (long j = 0; j < 24; ++j) {
        const Point2 p = pt(ratio(2 * i + 1, 48), ratio(2 * j + 1, 48));
        if (on_segment(p, l.segment())) continue;
        int hits = 0;
        for (const Cell& c : z.cells) {
          if (!strictly_inside(p, c.polygon)) continue;
          ++hits;
          CHECK(classify(p, l).kind == c.kind);
        }
        CHECK(hits <= 1);
      }
    }
  }
}

TEST_CASE("bottom side of CE") {
  const ZoneMap z = exact_zone_map(line_ce());
  CHECK(z.corner_kinds[static_cast<std::size_t>(Corner::A)] == ParallelKind::hyperbolic());
  CHECK(z.corner_kinds[static_cast<std::size_t>(Corner::B)] == ParallelKind::hyperbolic());
  CHECK(z.corner_kinds[static_cast<std::size_t>(Corner::D)] == ParallelKind::elliptic());
  CHECK_FALSE(z.corner_kinds[static_cast<std::size_t>(Corner::C)].has_value());
  for (const BoundaryPiece& piece : z.boundary[static_cast<std::size_t>(Side::Bottom)]) {
    if (piece.is_point()) continue;
    CHECK(piece.kind == ParallelKind::euclidean());
  }
  // Boundary pieces cover each side exactly once.
  for (const auto& side : z.boundary) {
    Rational covered(0);
    for (const BoundaryPiece& piece : side) {
      if (piece.is_point()) continue;
      covered += piece.from.x == piece.to.x ? abs(piece.to.y - piece.from.y) : abs(piece.to.x - piece.from.x);
    }
    CHECK(covered == 1);
  }
}

TEST_CASE("boundary pieces classify like their interior points") {
  const Chord l = line_ce();
  const ZoneMap z = exact_zone_map(l);
  std::mt19937_64 rng(43);
  for (const auto& side : z.boundary) {
    for (const BoundaryPiece& piece : side) {
      if (piece.is_point()) {
        if (piece.kind) CHECK(classify(piece.from, l).kind == *piece.kind);
        continue;
      }
      for (int i = 0; i < 10; ++i) {
        const Rational t = ratio(static_cast<long>(rng() % 999) + 1, 1000);
        const Point2 p = piece.from + t * (piece.to - piece.from);
        if (on_segment(p, l.segment())) {
          CHECK_FALSE(piece.kind.has_value());
        } else {
          REQUIRE(piece.kind);
          CHECK(classify(p, l).kind == *piece.kind);
        }
      }
    }
  }
}

TEST_CASE("degree of negation for CE") {
  const DegreeOfNegation d = degree_of_negation(line_ce());
  CHECK(sum(d.area_fraction) == 1);
  CHECK(sum(d.boundary_length_fraction) == 1);
  for (const auto* m : {&d.area_fraction, &d.boundary_length_fraction}) {
    for (const auto& [k, v] : *m) {
      CHECK(v >= 0);
      CHECK(v <= 1);
    }
  }
  CHECK(d.area_fraction.at(ParallelKind::euclidean()) == 0);
  CHECK(d.boundary_length_fraction.at(ParallelKind::euclidean()) > 0);
  CHECK(d.negation_degree_area == 1);
}

TEST_CASE("the vertical center chord gives a mirror-symmetric map") {
  const Chord l = chord_validate(pt(Rational(1, 2), 0), pt(Rational(1, 2), 1));
  const ZoneMap z = exact_zone_map(l);
  const auto mirror = [](const Point2& p) { return pt(1 - p.x, p.y); };
  for (const Cell& c : z.cells) {
    // The mirrored polygon, reversed back to counterclockwise order.
    Polygon m(c.polygon.rbegin(), c.polygon.rend());
    for (Point2& p : m) p = mirror(p);
    bool found = false;
    for (const Cell& other : z.cells) {
      if (other.kind != c.kind || other.polygon.size() != m.size()) continue;
      for (std::size_t shift = 0; shift < m.size() && !found; ++shift) {
        bool same = true;
        for (std::size_t i = 0; i < m.size() && same; ++i) same = other.polygon[(i + shift) % m.size()] == m[i];
        found = same;
      }
    }
    CHECK(found);
  }
  const DegreeOfNegation d = degree_of_negation(z);
  CHECK(sum(d.area_fraction) == 1);
  CHECK(z.corner_kinds[0] == z.corner_kinds[1]);
  CHECK(z.corner_kinds[2] == z.corner_kinds[3]);
}

TEST_CASE("random chords: tiling and measure partition") {
  std::mt19937_64 rng(44);
  for (int i = 0; i < 30; ++i) {
    const Chord l = oracle::random_chord(rng, 7);
    const ZoneMap z = exact_zone_map(l);
    Rational total(0);
    for (const Cell& c : z.cells) total += polygon_area(c.polygon);
    CHECK(total == 1);
    const DegreeOfNegation d = degree_of_negation(z);
    CHECK(sum(d.area_fraction) == 1);
    CHECK(sum(d.boundary_length_fraction) == 1);
  }
}
