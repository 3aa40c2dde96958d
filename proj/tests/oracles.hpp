#pragma once

// Reference computations written independently of the library's algorithms.
// They are slow and straightforward on purpose.

#include <optional>
#include <random>
#include <vector>

#include "postulatum/square_model.hpp"

namespace oracle {

using postulatum::Direction;
using postulatum::Point2;
using postulatum::Rational;
using postulatum::Segment;

// Cramer's rule on s1.p + t (s1.q - s1.p) = s2.p + u (s2.q - s2.p).
inline std::optional<Point2> linear_solve_intersection(const Segment& s1, const Segment& s2) {
  const Rational a = s1.q.x - s1.p.x, b = -(s2.q.x - s2.p.x), e = s2.p.x - s1.p.x;
  const Rational c = s1.q.y - s1.p.y, d = -(s2.q.y - s2.p.y), f = s2.p.y - s1.p.y;
  const Rational det = a * d - b * c;
  if (det == 0) return std::nullopt;
  const Rational t = (e * d - b * f) / det;
  const Rational u = (a * f - e * c) / det;
  if (t < 0 || t > 1 || u < 0 || u > 1) return std::nullopt;
  return Point2{s1.p.x + t * a, s1.p.y + t * c};
}

struct Clip {
  Point2 lo;
  Point2 hi;
};

// Intersections of the line p + t d with the four side lines that land in
// the closed square; the extreme two bound the clipped segment.
inline std::optional<Clip> clip_to_square(const Point2& p, const Direction& d) {
  const Rational dx(d.dx()), dy(d.dy());
  std::vector<Rational> ts;
  for (int bound = 0; bound <= 1; ++bound) {
    if (dx != 0) ts.push_back((bound - p.x) / dx);
    if (dy != 0) ts.push_back((bound - p.y) / dy);
  }
  std::optional<Rational> lo, hi;
  for (const Rational& t : ts) {
    const Rational x = p.x + t * dx, y = p.y + t * dy;
    if (x < 0 || x > 1 || y < 0 || y > 1) continue;
    if (!lo || t < *lo) lo = t;
    if (!hi || t > *hi) hi = t;
  }
  if (!lo || *lo == *hi) return std::nullopt;
  return Clip{{p.x + *lo * dx, p.y + *lo * dy}, {p.x + *hi * dx, p.y + *hi * dy}};
}

// A clipped segment is a chord iff it joins x = 0 to x = 1 or y = 0 to y = 1.
inline bool joins_opposite_sides(const Clip& c) {
  const auto touches = [](const Point2& a, const Point2& b, auto coord, int v0, int v1) {
    return (coord(a) == v0 && coord(b) == v1) || (coord(a) == v1 && coord(b) == v0);
  };
  const auto x = [](const Point2& q) { return q.x; };
  const auto y = [](const Point2& q) { return q.y; };
  return touches(c.lo, c.hi, x, 0, 1) || touches(c.lo, c.hi, y, 0, 1);
}

// n directions evenly indexed along the path (1,0) -> (1,1) -> (-1,1) -> (-1,0),
// which sweeps the half-turn [0, pi) once.
inline std::vector<Direction> sweep_directions(long n) {
  std::vector<Direction> out;
  out.reserve(n);
  for (long i = 0; i < n; ++i) {
    const Rational s = postulatum::ratio(4 * i, n);
    if (s < 1) out.push_back(Direction::from(1, s));
    else if (s < 3) out.push_back(Direction::from(2 - s, 1));
    else out.push_back(Direction::from(-1, 4 - s));
  }
  return out;
}

struct SweepResult {
  long oracle_parallels = 0;
  long disagreements = 0;
};

// Membership-level comparison of a computed parallel set against
// chord_through + is_parallel at each sweep direction.
inline SweepResult sweep_compare(const Point2& p, const postulatum::square::Chord& l,
                                 const postulatum::DirectionSet& parallels, const std::vector<Direction>& dirs) {
  SweepResult r;
  for (const Direction& d : dirs) {
    const auto chord = postulatum::square::chord_through(p, d);
    const bool par = chord && postulatum::square::is_parallel(*chord, l);
    r.oracle_parallels += par;
    if (par != parallels.contains(d)) ++r.disagreements;
  }
  return r;
}

inline Rational random_unit_rational(std::mt19937_64& rng, long max_den) {
  const long q = static_cast<long>(rng() % max_den) + 1;
  const long p = static_cast<long>(rng() % (q + 1));
  return postulatum::ratio(p, q);
}

// Random chord joining two opposite sides; endpoints may be corners.
inline postulatum::square::Chord random_chord(std::mt19937_64& rng, long max_den) {
  for (;;) {
    const Rational a = random_unit_rational(rng, max_den);
    const Rational b = random_unit_rational(rng, max_den);
    const Point2 q1 = rng() % 2 ? Point2{a, 0} : Point2{0, a};
    const Point2 q2 = q1.y == 0 ? Point2{b, 1} : Point2{1, b};
    if (q1 != q2) return postulatum::square::chord_validate(q1, q2);
  }
}

// Random point of the closed square, on the boundary one time in four.
inline Point2 random_square_point(std::mt19937_64& rng, long max_den) {
  Point2 p{random_unit_rational(rng, max_den), random_unit_rational(rng, max_den)};
  switch (rng() % 8) {
    case 0: p.x = 0; break;
    case 1: p.y = 1; break;
    default: break;
  }
  return p;
}

}  // namespace oracle
