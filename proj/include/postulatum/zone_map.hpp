#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "postulatum/square_model.hpp"

namespace postulatum::square {

/// Counterclockwise convex polygon with rational vertices.
using Polygon = std::vector<Point2>;

/// Signed shoelace area, positive for counterclockwise vertex order.
Rational polygon_area(const Polygon& poly);

struct Cell {
  Polygon polygon;
  ParallelKind kind;
};

/// A classified piece of one side: an open sub-segment, or a single point
/// when from == to. `kind` is empty for points lying on the line itself.
struct BoundaryPiece {
  Point2 from;
  Point2 to;
  std::optional<ParallelKind> kind;

  bool is_point() const { return from == to; }
};

struct ZoneMap {
  Chord line;
  std::vector<Cell> cells;
  /// Indexed by Side; pieces ordered along the side's orientation (A->B->C->D->A).
  std::array<std::vector<BoundaryPiece>, 4> boundary;
  /// Indexed by Corner; empty when the corner lies on the line.
  std::array<std::optional<ParallelKind>, 4> corner_kinds;
};

/// Lines of the arrangement: sides, diagonals, the supporting line of l, and
/// every corner-to-endpoint line. Each entry is a pair of distinct points.
std::vector<Segment> critical_lines(const Chord& l);

/// Convex cells of the critical-line arrangement, unclassified.
std::vector<Polygon> arrangement_cells(const Chord& l);

/// Exact partition of the closed square by ParallelKind. Cells are convex and
/// interior-disjoint; adjacent same-kind cells are merged whenever the union
/// stays convex.
ZoneMap exact_zone_map(const Chord& l);

struct DegreeOfNegation {
  std::map<ParallelKind, Rational> area_fraction;
  std::map<ParallelKind, Rational> boundary_length_fraction;
  std::array<std::optional<ParallelKind>, 4> corner_kinds;
  Rational negation_degree_area;
};

DegreeOfNegation degree_of_negation(const ZoneMap& zones);
DegreeOfNegation degree_of_negation(const Chord& l);

/// Strictly interior point of a convex polygon: a random positive rational
/// combination of its vertices.
template <typename Rng>
Point2 random_interior_point(const Polygon& poly, Rng& rng) {
  std::vector<Rational> w(poly.size());
  Rational total(0);
  for (auto& wi : w) {
    wi = Rational(static_cast<long>(rng() % 1000 + 1));
    total += wi;
  }
  Point2 out{0, 0};
  for (std::size_t i = 0; i < poly.size(); ++i) out = out + (w[i] / total) * poly[i];
  return out;
}

}  // namespace postulatum::square
