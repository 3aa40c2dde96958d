#pragma once

#include <string>
#include <variant>

#include "postulatum/rational.hpp"

namespace postulatum {

struct Point2 {
  Rational x;
  Rational y;

  friend bool operator==(const Point2&, const Point2&) = default;
};

inline Point2 operator+(const Point2& a, const Point2& b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(const Point2& a, const Point2& b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(const Rational& s, const Point2& a) { return {s * a.x, s * a.y}; }

inline Rational cross(const Point2& a, const Point2& b) { return a.x * b.y - a.y * b.x; }
inline Rational dot(const Point2& a, const Point2& b) { return a.x * b.x + a.y * b.y; }

/// Closed segment between two points. Functions below also accept p == q.
struct Segment {
  Point2 p;
  Point2 q;

  friend bool operator==(const Segment&, const Segment&) = default;
};

/// Undirected direction, stored as a primitive integer vector with dy > 0,
/// or dy == 0 and dx > 0. (dx, dy) and (-dx, -dy) canonicalize identically,
/// as do all positive multiples.
class Direction {
 public:
  /// Throws DegenerateDirection for the zero vector.
  static Direction from(const Rational& dx, const Rational& dy);
  static Direction from(const Point2& v) { return from(v.x, v.y); }
  static Direction horizontal() { return Direction(Integer(1), Integer(0)); }

  const Integer& dx() const { return dx_; }
  const Integer& dy() const { return dy_; }
  Point2 vector() const { return {Rational(dx_), Rational(dy_)}; }

  friend bool operator==(const Direction&, const Direction&) = default;

 private:
  Direction(Integer dx, Integer dy) : dx_(std::move(dx)), dy_(std::move(dy)) {}
  Integer dx_;
  Integer dy_;
};

/// Angular order on the half-turn [0, pi) starting at the horizontal:
/// negative when a precedes b, zero when equal. Decided by a cross product.
int angle_compare(const Direction& a, const Direction& b);

/// Sign of (b - a) x (c - a).
int orient(const Point2& a, const Point2& b, const Point2& c);

/// True iff the closed segments share at least one point.
bool segments_intersect(const Segment& s1, const Segment& s2);

struct Disjoint {
  friend bool operator==(const Disjoint&, const Disjoint&) = default;
};
struct Overlap {
  Segment shared;
  friend bool operator==(const Overlap&, const Overlap&) = default;
};
using SegmentIntersection = std::variant<Disjoint, Point2, Overlap>;

/// The unique common point, Disjoint, or the shared sub-segment when the
/// segments are collinear and overlap in more than one point.
SegmentIntersection segment_intersection_point(const Segment& s1, const Segment& s2);

/// Canonical undirected direction of b - a. Throws DegenerateDirection if a == b.
Direction direction_between(const Point2& a, const Point2& b);

/// True iff p lies on the closed segment s.
bool on_segment(const Point2& p, const Segment& s);

std::string to_string(const Point2& p);
std::string to_string(const Direction& d);

}  // namespace postulatum
