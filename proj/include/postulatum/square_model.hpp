#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "postulatum/direction_set.hpp"
#include "postulatum/exact_geom.hpp"
#include "postulatum/parallel_kind.hpp"

namespace postulatum::square {

// The closed unit square with A=(0,0), B=(1,0), C=(1,1), D=(0,1).
// Lines are chords joining two opposite sides; lines are parallel when the
// closed chords are disjoint.

enum class Side { Bottom, Right, Top, Left };

enum class Corner { A, B, C, D };

Side opposite(Side s);
const char* side_name(Side s);
const char* corner_name(Corner c);
Point2 corner_point(Corner c);
/// Bottom: A->B, Right: B->C, Top: C->D, Left: D->A.
Segment side_segment(Side s);

inline constexpr std::array<Side, 4> kSides{Side::Bottom, Side::Right, Side::Top, Side::Left};
inline constexpr std::array<Corner, 4> kCorners{Corner::A, Corner::B, Corner::C, Corner::D};

/// Bit set over Side; bit i set for Side(i).
using SideMask = unsigned;

bool in_square(const Point2& p);
/// Sides the point lies on; 0 for interior or outside points.
SideMask sides_of(const Point2& p);
/// True iff some s1 in a and s2 in b satisfy s2 == opposite(s1).
bool opposite_assignable(SideMask a, SideMask b);

/// A line of the model. Construct through chord_validate.
class Chord {
 public:
  const Point2& q1() const { return q1_; }
  const Point2& q2() const { return q2_; }
  Segment segment() const { return {q1_, q2_}; }

  /// Same point set, regardless of endpoint order.
  friend bool operator==(const Chord& a, const Chord& b) {
    return (a.q1_ == b.q1_ && a.q2_ == b.q2_) || (a.q1_ == b.q2_ && a.q2_ == b.q1_);
  }

 private:
  friend Chord chord_validate(const Point2& q1, const Point2& q2);
  friend std::optional<Chord> chord_through(const Point2& p, const Direction& d);
  Chord(Point2 q1, Point2 q2) : q1_(std::move(q1)), q2_(std::move(q2)) {}
  Point2 q1_;
  Point2 q2_;
};

/// Errors: DegenerateChord, NotOnBoundary, AdjacentSidesOnly.
Chord chord_validate(const Point2& q1, const Point2& q2);

/// The maximal clip of the line through p along d, when it joins opposite sides.
std::optional<Chord> chord_through(const Point2& p, const Direction& d);

/// The classical configuration: line CE with E = (0, e) on side DA.
Chord line_ce(const Rational& e = Rational(1, 2));

bool is_parallel(const Chord& l1, const Chord& l2);

/// Directions d through p for which chord_through(p, d) exists.
/// Throws PointOutsideSpace.
DirectionSet valid_directions(const Point2& p);

/// Closed (the model) or open (mutation testing only) touching rule.
enum class Semantics { Closed, Open };

/// Directions whose line through p meets l. Throws PointOnLine.
DirectionSet blocked_directions(const Point2& p, const Chord& l, Semantics semantics = Semantics::Closed);

struct BlockingSample {
  Direction direction;
  Point2 hit;
};

struct WitnessBundle {
  std::optional<Chord> unique_parallel;
  std::optional<std::pair<Chord, Chord>> bounding_pencil;
  std::vector<BlockingSample> blocking_samples;
};

struct Classification {
  ParallelKind kind = ParallelKind::elliptic();
  DirectionSet parallels;
  WitnessBundle witnesses;
};

/// parallels = valid \ blocked, kind = dirset_classify(parallels).
/// Throws PointOutsideSpace or PointOnLine.
Classification classify(const Point2& p, const Chord& l, Semantics semantics = Semantics::Closed);

WitnessBundle witnesses(const Point2& p, const Chord& l, const DirectionSet& parallels);

/// Kind only, computed on integer-scaled coordinates without building
/// direction sets. Agrees with classify(p, l).kind; used for bulk sampling.
ParallelKind classify_kind(const Point2& p, const Chord& l);

}  // namespace postulatum::square
