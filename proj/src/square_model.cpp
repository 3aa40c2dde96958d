#include "postulatum/square_model.hpp"

#include <algorithm>

#include "postulatum/errors.hpp"

namespace postulatum::square {

namespace {

SideMask bit(Side s) { return 1u << static_cast<unsigned>(s); }

}  // namespace

Side opposite(Side s) {
  switch (s) {
    case Side::Bottom: return Side::Top;
    case Side::Right: return Side::Left;
    case Side::Top: return Side::Bottom;
    case Side::Left: return Side::Right;
  }
  return s;
}

const char* side_name(Side s) {
  switch (s) {
    case Side::Bottom: return "Bottom";
    case Side::Right: return "Right";
    case Side::Top: return "Top";
    case Side::Left: return "Left";
  }
  return "?";
}

const char* corner_name(Corner c) {
  switch (c) {
    case Corner::A: return "A";
    case Corner::B: return "B";
    case Corner::C: return "C";
    case Corner::D: return "D";
  }
  return "?";
}

Point2 corner_point(Corner c) {
  switch (c) {
    case Corner::A: return {0, 0};
    case Corner::B: return {1, 0};
    case Corner::C: return {1, 1};
    case Corner::D: return {0, 1};
  }
  return {0, 0};
}

Segment side_segment(Side s) {
  switch (s) {
    case Side::Bottom: return {corner_point(Corner::A), corner_point(Corner::B)};
    case Side::Right: return {corner_point(Corner::B), corner_point(Corner::C)};
    case Side::Top: return {corner_point(Corner::C), corner_point(Corner::D)};
    case Side::Left: return {corner_point(Corner::D), corner_point(Corner::A)};
  }
  return {};
}

bool in_square(const Point2& p) { return p.x >= 0 && p.x <= 1 && p.y >= 0 && p.y <= 1; }

SideMask sides_of(const Point2& p) {
  if (!in_square(p)) return 0;
  SideMask m = 0;
  if (p.y == 0) m |= bit(Side::Bottom);
  if (p.x == 1) m |= bit(Side::Right);
  if (p.y == 1) m |= bit(Side::Top);
  if (p.x == 0) m |= bit(Side::Left);
  return m;
}

bool opposite_assignable(SideMask a, SideMask b) {
  for (Side s : kSides) {
    if ((a & bit(s)) && (b & bit(opposite(s)))) return true;
  }
  return false;
}

Chord chord_validate(const Point2& q1, const Point2& q2) {
  if (q1 == q2) throw GeometryError(ErrorCode::DegenerateChord, "endpoints coincide at " + to_string(q1));
  const SideMask m1 = sides_of(q1);
  const SideMask m2 = sides_of(q2);
  if (m1 == 0 || m2 == 0) {
    throw GeometryError(ErrorCode::NotOnBoundary,
                        to_string(m1 == 0 ? q1 : q2) + " is not on the boundary of the square");
  }
  if (!opposite_assignable(m1, m2)) {
    throw GeometryError(ErrorCode::AdjacentSidesOnly,
                        to_string(q1) + " and " + to_string(q2) + " do not lie on opposite sides");
  }
  return Chord(q1, q2);
}

Chord line_ce(const Rational& e) { return chord_validate({1, 1}, {0, e}); }

bool is_parallel(const Chord& l1, const Chord& l2) { return !segments_intersect(l1.segment(), l2.segment()); }

namespace {

// Exit parameter num / den along d, in units of 1 / scale.
struct Exit {
  Integer num;
  Integer den;
};

// Smaller of two exits; den is positive, den == 0 means unbounded.
const Exit& nearer(const Exit& a, const Exit& b) {
  if (a.den == 0) return b;
  if (b.den == 0) return a;
  return a.num * b.den <= b.num * a.den ? a : b;
}

Point2 point_at(const Integer& x, const Integer& y, const Integer& scale, const Direction& d, const Exit& t,
                int sign) {
  const Integer den = t.den * scale;
  return {ratio(x * t.den + sign * t.num * d.dx(), den), ratio(y * t.den + sign * t.num * d.dy(), den)};
}

}  // namespace

std::optional<Chord> chord_through(const Point2& p, const Direction& d) {
  if (!in_square(p)) return std::nullopt;
  // Work on the integer grid p = (x, y) / scale; t = 0 is inside the square.
  Integer scale;
  mpz_lcm(scale.get_mpz_t(), p.x.get_den_mpz_t(), p.y.get_den_mpz_t());
  const Integer x = p.x.get_num() * (scale / p.x.get_den());
  const Integer y = p.y.get_num() * (scale / p.y.get_den());
  const Integer& dx = d.dx();
  const Integer& dy = d.dy();  // never negative
  const Exit none{0, 0};
  Exit fx = none;
  Exit bx = none;
  if (dx > 0) {
    fx = {scale - x, dx};
    bx = {x, dx};
  } else if (dx < 0) {
    fx = {x, -dx};
    bx = {scale - x, -dx};
  }
  Exit fy = none;
  Exit by = none;
  if (dy > 0) {
    fy = {scale - y, dy};
    by = {y, dy};
  }
  const Exit& fwd = nearer(fx, fy);
  const Exit& bwd = nearer(bx, by);
  if (fwd.num == 0 && bwd.num == 0) return std::nullopt;
  Point2 e0 = point_at(x, y, scale, d, bwd, -1);
  Point2 e1 = point_at(x, y, scale, d, fwd, 1);
  if (!opposite_assignable(sides_of(e0), sides_of(e1))) return std::nullopt;
  return Chord(std::move(e0), std::move(e1));
}

DirectionSet valid_directions(const Point2& p) {
  if (!in_square(p)) throw GeometryError(ErrorCode::PointOutsideSpace, to_string(p) + " is outside the square");
  std::vector<Direction> cuts;
  for (Corner c : kCorners) {
    if (corner_point(c) != p) cuts.push_back(direction_between(p, corner_point(c)));
  }
  return DirectionSet::from_predicate(std::move(cuts),
                                      [&](const Direction& d) { return chord_through(p, d).has_value(); });
}

DirectionSet blocked_directions(const Point2& p, const Chord& l, Semantics semantics) {
  if (on_segment(p, l.segment())) {
    throw GeometryError(ErrorCode::PointOnLine, to_string(p) + " lies on the line");
  }
  const Point2 to1 = l.q1() - p;
  const Point2 to2 = l.q2() - p;
  return DirectionSet::from_predicate(
      {Direction::from(to1), Direction::from(to2)}, [&](const Direction& d) {
        const Point2 v = d.vector();
        const int s1 = sgn(cross(v, to1));
        const int s2 = sgn(cross(v, to2));
        if (semantics == Semantics::Open) return s1 * s2 < 0 || (s1 == 0 && s2 == 0);
        return s1 * s2 <= 0;
      });
}

Classification classify(const Point2& p, const Chord& l, Semantics semantics) {
  if (!in_square(p)) throw GeometryError(ErrorCode::PointOutsideSpace, to_string(p) + " is outside the square");
  Classification out;
  out.parallels = dirset_subtract(valid_directions(p), blocked_directions(p, l, semantics));
  out.kind = dirset_classify(out.parallels);
  out.witnesses = witnesses(p, l, out.parallels);
  return out;
}

namespace {

// Pencil extremes of the first parallel arc, joining the two pieces split at
// the cut when they belong to one circular arc.
std::pair<Direction, Direction> extremal_directions(const DirectionSet& parallels) {
  const auto& arcs = parallels.arcs();
  const Arc& first = arcs.front();
  const Arc& last = arcs.back();
  if (arcs.size() >= 2 && first.start == Direction::horizontal() && first.start_closed && last.reaches_cut()) {
    return {last.start, first.end};
  }
  return {first.start, first.end};
}

Point2 hit_point(const Chord& chord, const Chord& l) {
  const SegmentIntersection hit = segment_intersection_point(chord.segment(), l.segment());
  if (const auto* pt = std::get_if<Point2>(&hit)) return *pt;
  if (const auto* ov = std::get_if<Overlap>(&hit)) return ov->shared.p;
  throw std::logic_error("blocking sample does not meet the line");
}

}  // namespace

WitnessBundle witnesses(const Point2& p, const Chord& l, const DirectionSet& parallels) {
  WitnessBundle out;
  const ParallelKind kind = dirset_classify(parallels);
  switch (kind.tag()) {
    case ParallelKind::Tag::Euclidean:
      out.unique_parallel = chord_through(p, parallels.isolated().front());
      break;
    case ParallelKind::Tag::Hyperbolic: {
      const auto [lo, hi] = extremal_directions(parallels);
      Direction d1 = direction_between(p, l.q1());
      Direction d2 = direction_between(p, l.q2());
      // u is the bound met first when sweeping counterclockwise from the
      // start of the parallel pencil.
      const auto offset_rank = [&](const Direction& d) { return angle_compare(d, lo) >= 0 ? 0 : 1; };
      const int r1 = offset_rank(d1);
      const int r2 = offset_rank(d2);
      if (r2 < r1 || (r1 == r2 && angle_compare(d2, d1) < 0)) std::swap(d1, d2);
      auto u = chord_through(p, d1);
      auto v = chord_through(p, d2);
      if (!u || !v) {
        u = chord_through(p, lo);
        v = chord_through(p, hi);
      }
      if (u && v) out.bounding_pencil.emplace(*u, *v);
      break;
    }
    case ParallelKind::Tag::Elliptic: {
      const DirectionSet valid = valid_directions(p);
      std::vector<Direction> dirs = valid.isolated();
      if (!valid.arcs().empty()) {
        const std::size_t per_arc = (8 + valid.arcs().size() - 1) / valid.arcs().size();
        for (const Arc& arc : valid.arcs()) {
          const auto s = arc_samples(arc, per_arc);
          dirs.insert(dirs.end(), s.begin(), s.end());
        }
      }
      sort_directions(dirs);
      for (const Direction& d : dirs) {
        if (auto chord = chord_through(p, d)) out.blocking_samples.push_back({d, hit_point(*chord, l)});
      }
      break;
    }
    case ParallelKind::Tag::FiniteMany:
    case ParallelKind::Tag::CountablyInfinite:
      break;
  }
  return out;
}

}  // namespace postulatum::square
