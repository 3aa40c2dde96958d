#include "postulatum/exact_geom.hpp"

#include <algorithm>
#include <vector>

#include "postulatum/errors.hpp"

namespace postulatum {

Direction Direction::from(const Rational& dx, const Rational& dy) {
  if (dx == 0 && dy == 0) {
    throw GeometryError(ErrorCode::DegenerateDirection, "zero direction vector");
  }
  // Clear denominators, then divide out the content.
  Integer scale;
  mpz_lcm(scale.get_mpz_t(), dx.get_den_mpz_t(), dy.get_den_mpz_t());
  Integer x = dx.get_num() * (scale / dx.get_den());
  Integer y = dy.get_num() * (scale / dy.get_den());
  Integer g;
  mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  x /= g;
  y /= g;
  if (y < 0 || (y == 0 && x < 0)) {
    x = -x;
    y = -y;
  }
  return Direction(std::move(x), std::move(y));
}

int angle_compare(const Direction& a, const Direction& b) {
  const Integer c = a.dx() * b.dy() - a.dy() * b.dx();
  return -sgn(c);
}

namespace {

// For p already known to be collinear with s.
bool in_box(const Point2& p, const Segment& s) {
  const auto between = [](const Rational& v, const Rational& a, const Rational& b) {
    return a <= b ? (a <= v && v <= b) : (b <= v && v <= a);
  };
  return between(p.x, s.p.x, s.q.x) && between(p.y, s.p.y, s.q.y);
}

}  // namespace

int orient(const Point2& a, const Point2& b, const Point2& c) {
  const Rational lhs = (b.x - a.x) * (c.y - a.y);
  const Rational rhs = (b.y - a.y) * (c.x - a.x);
  const int r = cmp(lhs, rhs);
  return (r > 0) - (r < 0);
}

bool on_segment(const Point2& p, const Segment& s) { return orient(s.p, s.q, p) == 0 && in_box(p, s); }

bool segments_intersect(const Segment& s1, const Segment& s2) {
  const int o1 = orient(s1.p, s1.q, s2.p);
  const int o2 = orient(s1.p, s1.q, s2.q);
  if (o1 != 0 && o1 == o2) return false;
  const int o3 = orient(s2.p, s2.q, s1.p);
  const int o4 = orient(s2.p, s2.q, s1.q);
  if (o1 != o2 && o3 != o4) return true;
  return (o1 == 0 && in_box(s2.p, s1)) || (o2 == 0 && in_box(s2.q, s1)) || (o3 == 0 && in_box(s1.p, s2)) ||
         (o4 == 0 && in_box(s1.q, s2));
}

SegmentIntersection segment_intersection_point(const Segment& s1, const Segment& s2) {
  if (!segments_intersect(s1, s2)) return Disjoint{};
  const Point2 r = s1.q - s1.p;
  const Point2 s = s2.q - s2.p;
  const Rational denom = cross(r, s);
  if (denom != 0) {
    const Rational t = cross(s2.p - s1.p, s) / denom;
    return s1.p + t * r;
  }
  // Parallel supporting lines that still touch: collinear. Collect the
  // endpoints lying on the other segment and take the extreme pair.
  std::vector<Point2> shared;
  for (const Point2* c : {&s1.p, &s1.q}) {
    if (on_segment(*c, s2)) shared.push_back(*c);
  }
  for (const Point2* c : {&s2.p, &s2.q}) {
    if (on_segment(*c, s1)) shared.push_back(*c);
  }
  const auto less = [](const Point2& a, const Point2& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); };
  const auto [lo, hi] = std::minmax_element(shared.begin(), shared.end(), less);
  if (*lo == *hi) return *lo;
  return Overlap{{*lo, *hi}};
}

Direction direction_between(const Point2& a, const Point2& b) {
  if (a == b) {
    throw GeometryError(ErrorCode::DegenerateDirection, "points coincide at " + to_string(a));
  }
  return Direction::from(b - a);
}

std::string to_string(const Point2& p) { return to_string(p.x) + "," + to_string(p.y); }

std::string to_string(const Direction& d) { return d.dx().get_str() + "," + d.dy().get_str(); }

}  // namespace postulatum
