#include "postulatum/sphere_plane_model.hpp"

#include "postulatum/errors.hpp"

namespace postulatum::sphere {

namespace {

// Scales a nonzero rational vector to primitive integers, sign preserved.
template <std::size_t N>
std::array<Rational, N> primitive(const std::array<Rational, N>& v) {
  Integer scale(1);
  for (const Rational& r : v) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), r.get_den_mpz_t());
  std::array<Integer, N> ints;
  Integer g(0);
  for (std::size_t i = 0; i < N; ++i) {
    ints[i] = v[i].get_num() * (scale / v[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
  }
  std::array<Rational, N> out;
  for (std::size_t i = 0; i < N; ++i) out[i] = Rational(ints[i] / g);
  return out;
}

template <std::size_t N>
void make_leading_positive(std::array<Rational, N>& v, std::size_t among) {
  for (std::size_t i = 0; i < among; ++i) {
    if (v[i] == 0) continue;
    if (v[i] < 0) {
      for (Rational& r : v) r = -r;
    }
    return;
  }
}

}  // namespace

Triple cross(const Triple& a, const Triple& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Rational dot(const Triple& a, const Triple& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

bool is_zero(const Triple& a) { return a[0] == 0 && a[1] == 0 && a[2] == 0; }

GreatCircle GreatCircle::from_normal(const Triple& normal) {
  if (is_zero(normal)) throw GeometryError(ErrorCode::DegenerateDirection, "zero normal");
  Triple n = primitive(normal);
  make_leading_positive(n, 3);
  return GreatCircle(std::move(n));
}

SpherePoint SpherePoint::from_ray(const Triple& ray) {
  if (is_zero(ray)) throw GeometryError(ErrorCode::DegenerateDirection, "zero ray");
  return SpherePoint(primitive(ray));
}

SpherePoint SpherePoint::antipode() const { return SpherePoint({-r_[0], -r_[1], -r_[2]}); }

PlanarLine PlanarLine::from_coefficients(const Rational& a, const Rational& b, const Rational& c) {
  if (a == 0 && b == 0) throw GeometryError(ErrorCode::DegenerateDirection, "line with a = b = 0");
  std::array<Rational, 3> v = primitive(std::array<Rational, 3>{a, b, c});
  make_leading_positive(v, 2);
  return PlanarLine(v[0], v[1], v[2]);
}

CircleMeeting great_circles_meet(const GreatCircle& c1, const GreatCircle& c2) {
  const Triple x = cross(c1.normal(), c2.normal());
  if (is_zero(x)) return Identical{};
  const SpherePoint p = SpherePoint::from_ray(x);
  return TwoPoints{p, p.antipode()};
}

bool on_circle(const SpherePoint& p, const GreatCircle& l) { return dot(p.ray(), l.normal()) == 0; }

ParallelKind classify_sphere(const SpherePoint& p, const GreatCircle& l) {
  if (on_circle(p, l)) {
    throw GeometryError(ErrorCode::PointOnLine, to_string(p.ray()) + " lies on the great circle");
  }
  // Any great circle through p meets l in two points: no parallel exists.
  return ParallelKind::elliptic();
}

PlaneClassification classify_plane(const Point2& p, const PlanarLine& l) {
  if (l.evaluate(p) == 0) throw GeometryError(ErrorCode::PointOnLine, to_string(p) + " lies on the line");
  const Rational c = -(l.a() * p.x + l.b() * p.y);
  return {ParallelKind::euclidean(), PlanarLine::from_coefficients(l.a(), l.b(), c)};
}

DualStatus dual_status_of_C(const ModelM& m) {
  DualStatus out;
  out.witnesses = {Point2{1, 0}, Point2{0, 1}, Point2{-1, 0}};
  // A great circle is exactly a plane section through the centre.
  out.is_line_on_sphere = !is_zero(m.equator.normal());
  const Triple& n = m.equator.normal();
  for (const Point2& w : out.witnesses) {
    if (dot({w.x, w.y, 0}, n) != 0 || w.x * w.x + w.y * w.y != 1) {
      throw std::logic_error("witness is not on C");
    }
  }
  out.is_line_in_plane = orient(out.witnesses[0], out.witnesses[1], out.witnesses[2]) == 0;
  return out;
}

Point2 point_on_C(const SpherePoint& p) {
  const Triple& r = p.ray();
  if (r[2] != 0) throw GeometryError(ErrorCode::NotOnC, to_string(r) + " has z != 0");
  const Integer norm2 = r[0].get_num() * r[0].get_num() + r[1].get_num() * r[1].get_num();
  if (!mpz_perfect_square_p(norm2.get_mpz_t())) {
    throw GeometryError(ErrorCode::IrrationalOnC, to_string(r) + " does not meet C at a rational point");
  }
  const Integer norm = sqrt(norm2);
  return {ratio(r[0].get_num(), norm), ratio(r[1].get_num(), norm)};
}

DualRepresentation dual_representation_of_AB(const SpherePoint& a, const SpherePoint& b) {
  const Point2 pa = point_on_C(a);
  const Point2 pb = point_on_C(b);
  if (a == b) throw GeometryError(ErrorCode::CoincidentPoints, "A and B coincide");
  if (a == b.antipode()) {
    throw GeometryError(ErrorCode::AntipodalPair, "A and B are antipodal; the great circle is not unique");
  }
  const PlanarLine line = PlanarLine::from_coefficients(pa.y - pb.y, pb.x - pa.x, pa.x * pb.y - pb.x * pa.y);

  // Along A + t (B - A): |B-A|^2 t^2 + 2 A.(B-A) t + (|A|^2 - 1) = 0. With A
  // on C the constant term vanishes, so the roots are 0 and -2 A.(B-A) / |B-A|^2.
  const Point2 d = pb - pa;
  const Rational qa = postulatum::dot(d, d);
  const Rational qb = 2 * postulatum::dot(pa, d);
  const Rational qc = postulatum::dot(pa, pa) - 1;
  if (qc != 0 || -qb / qa != 1) throw std::logic_error("chord AB does not meet C exactly at A and B");

  return {line, GreatCircle::from_normal(cross(a.ray(), b.ray())), a, b};
}

std::string to_string(const Triple& t) {
  return postulatum::to_string(t[0]) + "," + postulatum::to_string(t[1]) + "," + postulatum::to_string(t[2]);
}

}  // namespace postulatum::sphere
