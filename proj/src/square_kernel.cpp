// Kind-only classifier on integer coordinates. The square is scaled to
// [0, S]^2 with S the common denominator of the inputs, so every predicate
// becomes an integer sign test. Small inputs run on __int128; anything
// larger falls back to mpz.

#include <array>
#include <vector>

#include "square_kernel.hpp"

#include "postulatum/errors.hpp"

namespace postulatum::square {

namespace {

template <typename Int>
struct Vec {
  Int x;
  Int y;
};

template <typename Int>
int sign_of(const Int& v) {
  return (v > 0) - (v < 0);
}

template <typename Int>
Int cross(const Vec<Int>& a, const Vec<Int>& b) {
  return Int(a.x * b.y) - Int(a.y * b.x);
}

template <typename Int>
Vec<Int> canonical(Vec<Int> v) {
  if (v.y < 0 || (v.y == 0 && v.x < 0)) {
    v.x = -v.x;
    v.y = -v.y;
  }
  return v;
}

template <typename Int>
class Kernel {
 public:
  Kernel(Int side, Vec<Int> p, Vec<Int> q1, Vec<Int> q2) : side_(side), p_(p), q1_(q1), q2_(q2) {}

  ParallelKind kind() const {
    std::array<Vec<Int>, 7> cuts;
    std::size_t ncuts = 0;
    cuts[ncuts++] = {Int(1), Int(0)};
    const std::array<Vec<Int>, 6> targets{Vec<Int>{Int(0), Int(0)}, Vec<Int>{side_, Int(0)},
                                          Vec<Int>{side_, side_},    Vec<Int>{Int(0), side_},
                                          q1_,                       q2_};
    for (const auto& t : targets) {
      Vec<Int> v{Int(t.x - p_.x), Int(t.y - p_.y)};
      if (v.x != 0 || v.y != 0) cuts[ncuts++] = canonical(v);
    }
    // Insertion sort by angle; at most seven entries.
    for (std::size_t i = 1; i < ncuts; ++i) {
      for (std::size_t j = i; j > 0 && cross(cuts[j], cuts[j - 1]) > 0; --j) std::swap(cuts[j], cuts[j - 1]);
    }
    std::array<Vec<Int>, 7> uniq;
    std::size_t n = 0;
    for (std::size_t i = 0; i < ncuts; ++i) {
      if (n == 0 || cross(uniq[n - 1], cuts[i]) != 0) uniq[n++] = cuts[i];
    }

    std::size_t isolated = 0;
    for (std::size_t i = 0; i < n; ++i) {
      Vec<Int> gap;
      if (i + 1 < n) {
        gap = {Int(uniq[i].x + uniq[i + 1].x), Int(uniq[i].y + uniq[i + 1].y)};
      } else if (n > 1) {
        gap = {Int(uniq[i].x - 1), uniq[i].y};
      } else {
        gap = {Int(0), Int(1)};
      }
      if (member(gap)) return ParallelKind::hyperbolic();
      if (member(uniq[i])) ++isolated;
    }
    if (isolated == 0) return ParallelKind::elliptic();
    if (isolated == 1) return ParallelKind::euclidean();
    return ParallelKind::finite_many(isolated);
  }

 private:
  bool member(const Vec<Int>& d) const { return valid(d) && !blocked(d); }

  bool blocked(const Vec<Int>& d) const {
    const Vec<Int> a{Int(q1_.x - p_.x), Int(q1_.y - p_.y)};
    const Vec<Int> b{Int(q2_.x - p_.x), Int(q2_.y - p_.y)};
    return sign_of(cross(d, a)) * sign_of(cross(d, b)) <= 0;
  }

  // Parameter of the exit along one axis as num/den with den > 0; den == 0
  // means the axis never constrains the ray.
  struct Param {
    Int num;
    Int den;
  };

  Param axis_exit(const Int& origin, const Int& step) const {
    if (step > 0) return {Int(side_ - origin), step};
    if (step < 0) return {origin, Int(-step)};
    return {Int(0), Int(0)};
  }

  unsigned exit_sides(const Vec<Int>& d) const {
    const Param tx = axis_exit(p_.x, d.x);
    const Param ty = axis_exit(p_.y, d.y);
    Param t = tx;
    if (tx.den == 0 || (ty.den != 0 && Int(ty.num * tx.den) < Int(tx.num * ty.den))) t = ty;
    // exit point times t.den: origin * den + num * step
    const Int ex = Int(p_.x * t.den) + Int(t.num * d.x);
    const Int ey = Int(p_.y * t.den) + Int(t.num * d.y);
    const Int far = side_ * t.den;
    unsigned m = 0;
    if (ey == 0) m |= 1u << static_cast<unsigned>(Side::Bottom);
    if (ex == far) m |= 1u << static_cast<unsigned>(Side::Right);
    if (ey == far) m |= 1u << static_cast<unsigned>(Side::Top);
    if (ex == 0) m |= 1u << static_cast<unsigned>(Side::Left);
    return t.num == 0 ? (m | 0x100u) : m;
  }

  bool valid(const Vec<Int>& d) const {
    const unsigned fwd = exit_sides(d);
    const unsigned bwd = exit_sides(Vec<Int>{Int(-d.x), Int(-d.y)});
    if ((fwd & 0x100u) && (bwd & 0x100u)) return false;
    return opposite_assignable(fwd & 0xFu, bwd & 0xFu);
  }

  Int side_;
  Vec<Int> p_;
  Vec<Int> q1_;
  Vec<Int> q2_;
};

}  // namespace

namespace detail {

ParallelKind kernel_kind(__int128 side, __int128 px, __int128 py, const ScaledChord& l) {
  return Kernel<__int128>(side, {px, py}, {l.q1x, l.q1y}, {l.q2x, l.q2y}).kind();
}

std::optional<ScaledChord> scale_chord(const Chord& l, const Integer& point_denominator, __int128& side) {
  Integer scale = point_denominator;
  const std::array<const Rational*, 4> coords{&l.q1().x, &l.q1().y, &l.q2().x, &l.q2().y};
  for (const Rational* r : coords) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), r->get_den_mpz_t());
  if (mpz_sizeinbase(scale.get_mpz_t(), 2) > kKernelBits) return std::nullopt;
  std::array<__int128, 4> v;
  for (std::size_t i = 0; i < 4; ++i) {
    const Integer z = coords[i]->get_num() * (scale / coords[i]->get_den());
    v[i] = static_cast<__int128>(mpz_get_si(z.get_mpz_t()));
  }
  side = static_cast<__int128>(mpz_get_si(scale.get_mpz_t()));
  return ScaledChord{v[0], v[1], v[2], v[3]};
}

bool kernel_on_line(__int128 px, __int128 py, const ScaledChord& l) {
  const __int128 c = (l.q2x - l.q1x) * (py - l.q1y) - (l.q2y - l.q1y) * (px - l.q1x);
  if (c != 0) return false;
  const auto between = [](__int128 v, __int128 a, __int128 b) { return a <= b ? (a <= v && v <= b) : (b <= v && v <= a); };
  return between(px, l.q1x, l.q2x) && between(py, l.q1y, l.q2y);
}

}  // namespace detail

ParallelKind classify_kind(const Point2& p, const Chord& l) {
  if (!in_square(p)) throw GeometryError(ErrorCode::PointOutsideSpace, to_string(p) + " is outside the square");
  if (on_segment(p, l.segment())) throw GeometryError(ErrorCode::PointOnLine, to_string(p) + " lies on the line");

  const std::array<const Rational*, 6> coords{&p.x, &p.y, &l.q1().x, &l.q1().y, &l.q2().x, &l.q2().y};
  Integer scale(1);
  for (const Rational* r : coords) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), r->get_den_mpz_t());
  std::array<Integer, 6> ints;
  for (std::size_t i = 0; i < coords.size(); ++i) ints[i] = coords[i]->get_num() * (scale / coords[i]->get_den());

  // Products in the kernel stay below 2^(2*56 + 8), well inside __int128.
  if (mpz_sizeinbase(scale.get_mpz_t(), 2) <= detail::kKernelBits) {
    using I = __int128;
    const auto s = [&](std::size_t i) { return static_cast<I>(mpz_get_si(ints[i].get_mpz_t())); };
    const Kernel<I> k(static_cast<I>(mpz_get_si(scale.get_mpz_t())), {s(0), s(1)}, {s(2), s(3)}, {s(4), s(5)});
    return k.kind();
  }
  const Kernel<Integer> k(scale, {ints[0], ints[1]}, {ints[2], ints[3]}, {ints[4], ints[5]});
  return k.kind();
}

}  // namespace postulatum::square
