#pragma once

#include <array>
#include <string>
#include <variant>

#include "postulatum/exact_geom.hpp"
#include "postulatum/parallel_kind.hpp"

namespace postulatum::sphere {

// Exact model of a Euclidean plane z = 0 cutting the unit sphere along the
// equator. Sphere points are rational rays, never normalized: incidence and
// antipodality are scale-invariant sign tests.

using Triple = std::array<Rational, 3>;

Triple cross(const Triple& a, const Triple& b);
Rational dot(const Triple& a, const Triple& b);
bool is_zero(const Triple& a);

/// Great circle with the given normal. Canonical form: primitive integer
/// normal whose first nonzero component is positive.
class GreatCircle {
 public:
  /// Throws DegenerateDirection for the zero normal.
  static GreatCircle from_normal(const Triple& normal);
  const Triple& normal() const { return n_; }
  friend bool operator==(const GreatCircle&, const GreatCircle&) = default;

 private:
  explicit GreatCircle(Triple n) : n_(std::move(n)) {}
  Triple n_;
};

/// Point of the unit sphere in the direction of `ray`. Canonical form:
/// primitive integer ray with the sign preserved, so antipodes stay distinct.
class SpherePoint {
 public:
  /// Throws DegenerateDirection for the zero ray.
  static SpherePoint from_ray(const Triple& ray);
  const Triple& ray() const { return r_; }
  SpherePoint antipode() const;
  friend bool operator==(const SpherePoint&, const SpherePoint&) = default;

 private:
  explicit SpherePoint(Triple r) : r_(std::move(r)) {}
  Triple r_;
};

/// Line a x + b y + c = 0 of the plane, canonical: primitive integers with
/// the first nonzero of (a, b) positive.
class PlanarLine {
 public:
  /// Throws DegenerateDirection when a == b == 0.
  static PlanarLine from_coefficients(const Rational& a, const Rational& b, const Rational& c);
  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }
  Rational evaluate(const Point2& p) const { return a_ * p.x + b_ * p.y + c_; }
  friend bool operator==(const PlanarLine&, const PlanarLine&) = default;

 private:
  PlanarLine(Rational a, Rational b, Rational c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {}
  Rational a_;
  Rational b_;
  Rational c_;
};

/// The fixed model: plane z = 0, unit sphere, equator C.
struct ModelM {
  Triple plane_normal{0, 0, 1};
  GreatCircle equator = GreatCircle::from_normal({0, 0, 1});
};

struct Identical {
  friend bool operator==(const Identical&, const Identical&) = default;
};
struct TwoPoints {
  SpherePoint p;
  SpherePoint antipode;
  friend bool operator==(const TwoPoints&, const TwoPoints&) = default;
};
using CircleMeeting = std::variant<Identical, TwoPoints>;

/// Identical for parallel normals; otherwise the points along +-(n1 x n2).
CircleMeeting great_circles_meet(const GreatCircle& c1, const GreatCircle& c2);

bool on_circle(const SpherePoint& p, const GreatCircle& l);

/// Always Elliptic. Throws PointOnLine when p lies on l.
ParallelKind classify_sphere(const SpherePoint& p, const GreatCircle& l);

struct PlaneClassification {
  ParallelKind kind;
  PlanarLine parallel;
};

/// Always Euclidean with the unique parallel through p. Throws PointOnLine.
PlaneClassification classify_plane(const Point2& p, const PlanarLine& l);

struct DualStatus {
  bool is_line_on_sphere = false;
  bool is_line_in_plane = false;
  std::array<Point2, 3> witnesses;
};

/// C is a great circle of the sphere, but in the plane it is the unit circle:
/// three of its points are not collinear.
DualStatus dual_status_of_C(const ModelM& m = {});

struct DualRepresentation {
  PlanarLine planar;
  GreatCircle spherical;
  SpherePoint shared_a;
  SpherePoint shared_b;
};

/// The line through a and b read in both geometries. Both points must lie on
/// C at rational positions of the unit circle.
/// Errors: NotOnC, IrrationalOnC, CoincidentPoints, AntipodalPair.
DualRepresentation dual_representation_of_AB(const SpherePoint& a, const SpherePoint& b);

/// The rational point of C that a ray with z = 0 denotes. Throws NotOnC or
/// IrrationalOnC.
Point2 point_on_C(const SpherePoint& p);

std::string to_string(const Triple& t);

}  // namespace postulatum::sphere
