#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "postulatum/errors.hpp"
#include "postulatum/square_model.hpp"

using namespace postulatum;
using namespace postulatum::square;

namespace {

Point2 pt(Rational x, Rational y) { return {std::move(x), std::move(y)}; }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const GeometryError& e) {
    return e.code();
  }
  FAIL("expected a GeometryError");
  return ErrorCode::Parse;
}

const Chord kCE = line_ce();
const Point2 kN = pt(Rational(1, 2), Rational(1, 4));
const Point2 kM = pt(Rational(1, 2), 0);
const Point2 kD = pt(0, 1);
const Chord kAB = chord_validate(pt(0, 0), pt(1, 0));

}  // namespace

TEST_CASE("chord_validate") {
  CHECK_NOTHROW(chord_validate(pt(1, 1), pt(0, Rational(1, 2))));
  CHECK_NOTHROW(chord_validate(pt(0, 0), pt(1, 0)));
  CHECK(code_of([] { chord_validate(pt(Rational(1, 2), 0), pt(1, Rational(1, 2))); }) ==
        ErrorCode::AdjacentSidesOnly);
  CHECK(code_of([] { chord_validate(pt(0, 0), pt(0, 0)); }) == ErrorCode::DegenerateChord);
  CHECK(code_of([] { chord_validate(pt(Rational(1, 2), Rational(1, 2)), pt(1, 0)); }) == ErrorCode::NotOnBoundary);
  CHECK(code_of([] { chord_validate(pt(2, 0), pt(0, 1)); }) == ErrorCode::NotOnBoundary);
  // Two corners of one side: assignable to the two sides touching it.
  CHECK_NOTHROW(chord_validate(pt(1, 0), pt(1, 1)));
  CHECK(chord_validate(pt(1, 0), pt(0, 0)) == kAB);
}

TEST_CASE("is_parallel") {
  CHECK(is_parallel(kAB, kCE));
  CHECK_FALSE(is_parallel(chord_validate(pt(1, 1), pt(0, 1)), kCE));
  CHECK_FALSE(is_parallel(kCE, kCE));
  std::mt19937_64 rng(31);
  for (int i = 0; i < 300; ++i) {
    const Chord a = oracle::random_chord(rng, 12);
    const Chord b = oracle::random_chord(rng, 12);
    CHECK(is_parallel(a, b) == is_parallel(b, a));
    CHECK_FALSE(is_parallel(a, a));
  }
}

TEST_CASE("chord_through examples") {
  const auto m = chord_through(kM, Direction::horizontal());
  REQUIRE(m);
  CHECK(*m == kAB);
  // Leaves along Right at (1, 1/2): Bottom and Right are adjacent.
  CHECK_FALSE(chord_through(kM, Direction::from(1, 1)));
  const auto v = chord_through(pt(Rational(1, 2), Rational(1, 2)), Direction::from(0, 1));
  REQUIRE(v);
  CHECK(*v == chord_validate(pt(Rational(1, 2), 0), pt(Rational(1, 2), 1)));

  const auto clip = oracle::clip_to_square(kM, Direction::from(1, 1));
  REQUIRE(clip);
  CHECK(clip->hi == pt(1, Rational(1, 2)));
  CHECK_FALSE(oracle::joins_opposite_sides(*clip));

  // x = 1/2 + t, y = 2t leaves exactly through corner C, which lies on Top,
  // so this one is a Bottom-to-Top chord.
  const auto steep = oracle::clip_to_square(kM, Direction::from(1, 2));
  REQUIRE(steep);
  CHECK(steep->hi == pt(1, 1));
  CHECK(oracle::joins_opposite_sides(*steep));
  const auto through_c = chord_through(kM, Direction::from(1, 2));
  REQUIRE(through_c);
  CHECK(*through_c == chord_validate(kM, pt(1, 1)));
}

TEST_CASE("chord_through agrees with the clipping oracle") {
  std::mt19937_64 rng(32);
  const auto dirs = oracle::sweep_directions(97);
  for (int i = 0; i < 150; ++i) {
    const Point2 p = oracle::random_square_point(rng, 9);
    for (const Direction& d : dirs) {
      const auto got = chord_through(p, d);
      const auto clip = oracle::clip_to_square(p, d);
      const bool expect = clip && oracle::joins_opposite_sides(*clip);
      REQUIRE(got.has_value() == expect);
      if (got) CHECK(*got == chord_validate(clip->lo, clip->hi));
    }
  }
}

TEST_CASE("valid_directions against the sweep oracle") {
  const auto dirs = oracle::sweep_directions(10000);
  const auto check_sweep = [&](const Point2& p) {
    const DirectionSet valid = valid_directions(p);
    long wrong = 0;
    for (const Direction& d : dirs) wrong += valid.contains(d) != chord_through(p, d).has_value();
    CHECK(wrong == 0);
    return valid;
  };

  SUBCASE("center") {
    const DirectionSet v = check_sweep(pt(Rational(1, 2), Rational(1, 2)));
    for (const auto& [x, y] : std::vector<std::pair<long, long>>{{1, 1}, {-1, 1}}) {
      CHECK(v.contains(Direction::from(x, y)));
    }
    CHECK(v.isolated().empty());
  }
  SUBCASE("side interior") {
    const DirectionSet v = check_sweep(kM);
    REQUIRE(v.arcs().size() == 1);
    CHECK(v.arcs()[0] == Arc{Direction::from(1, 2), Direction::from(-1, 2), true, true});
    REQUIRE(v.isolated().size() == 1);
    CHECK(v.isolated()[0] == Direction::horizontal());
  }
  SUBCASE("corner") {
    const DirectionSet v = check_sweep(pt(0, 0));
    REQUIRE(v.arcs().size() == 1);
    CHECK(v.arcs()[0] == Arc{Direction::horizontal(), Direction::from(0, 1), true, true});
  }
  SUBCASE("random") {
    std::mt19937_64 rng(33);
    for (int i = 0; i < 10; ++i) check_sweep(oracle::random_square_point(rng, 16));
  }
  CHECK(code_of([] { valid_directions(pt(2, 0)); }) == ErrorCode::PointOutsideSpace);
}

TEST_CASE("blocked_directions") {
  const DirectionSet m = blocked_directions(kM, kCE);
  REQUIRE(m.arcs().size() == 1);
  // (1,2) toward C through the vertical to (-1,1) toward E.
  CHECK(m.arcs()[0].start == Direction::from(1, 2));
  CHECK(m.arcs()[0].end == Direction::from(-1, 1));
  CHECK(m.contains(Direction::from(0, 1)));

  const DirectionSet n = blocked_directions(kN, kCE);
  REQUIRE(n.arcs().size() == 1);
  CHECK(n.arcs()[0].start == Direction::from(2, 3));
  CHECK(n.arcs()[0].end == Direction::from(-2, 1));

  CHECK(code_of([] { blocked_directions(pt(Rational(1, 5), Rational(3, 5)), line_ce()); }) == ErrorCode::PointOnLine);
}

TEST_CASE("blocked_directions is a single direction for collinear points") {
  // Inside the square a chord is the whole clip of its line, so the collinear
  // case needs a point beyond the square.
  const DirectionSet s = blocked_directions(pt(2, 2), chord_validate(pt(0, 0), pt(1, 1)));
  CHECK(s.arcs().empty());
  REQUIRE(s.isolated().size() == 1);
  CHECK(s.isolated()[0] == Direction::from(1, 1));
}

TEST_CASE("classify the classical points") {
  const Classification n = classify(kN, kCE);
  CHECK(n.kind == ParallelKind::hyperbolic());
  REQUIRE(n.witnesses.bounding_pencil);
  const auto& [u, v] = *n.witnesses.bounding_pencil;
  CHECK(on_segment(pt(0, Rational(1, 2)), u.segment()));
  CHECK(on_segment(kN, u.segment()));
  CHECK(on_segment(pt(1, 1), v.segment()));
  CHECK(on_segment(kN, v.segment()));
  CHECK(is_parallel(u, kCE) == false);

  const Classification m = classify(kM, kCE);
  CHECK(m.kind == ParallelKind::euclidean());
  REQUIRE(m.witnesses.unique_parallel);
  CHECK(*m.witnesses.unique_parallel == kAB);

  const Classification d = classify(kD, kCE);
  CHECK(d.kind == ParallelKind::elliptic());
  CHECK(d.witnesses.blocking_samples.size() >= 8);
  for (const BlockingSample& s : d.witnesses.blocking_samples) {
    CHECK(on_segment(s.hit, kCE.segment()));
    const auto chord = chord_through(kD, s.direction);
    REQUIRE(chord);
    CHECK(segment_intersection_point(chord->segment(), kCE.segment()) == SegmentIntersection{s.hit});
  }

  const Classification a = classify(pt(0, 0), kCE);
  CHECK(a.kind == ParallelKind::hyperbolic());
  // Chords from A to (1, t) stay below CE for every t < 1; t = 1 meets C,
  // and chords from A to Top cross CE.
  CHECK(a.parallels.contains(Direction::from(1, Rational(1, 4))));
  CHECK(a.parallels.contains(Direction::from(1, Rational(1, 2))));
  CHECK(a.parallels.contains(Direction::from(1, Rational(3, 4))));
  CHECK_FALSE(a.parallels.contains(Direction::from(1, 1)));
  CHECK_FALSE(a.parallels.contains(Direction::from(1, 2)));

  CHECK(code_of([] { classify(pt(Rational(1, 5), Rational(3, 5)), line_ce()); }) == ErrorCode::PointOnLine);
  CHECK(code_of([] { classify(pt(Rational(3, 2), 0), line_ce()); }) == ErrorCode::PointOutsideSpace);
}

TEST_CASE("every interior point of AB is Euclidean with parallel AB") {
  for (long i = 1; i <= 100; ++i) {
    const Classification c = classify(pt(ratio(i, 101), 0), kCE);
    CHECK(c.kind == ParallelKind::euclidean());
    REQUIRE(c.witnesses.unique_parallel);
    CHECK(*c.witnesses.unique_parallel == kAB);
  }
}

TEST_CASE("classify agrees with the sweep oracle on random instances") {
  std::mt19937_64 rng(34);
  const auto dirs = oracle::sweep_directions(2000);
  int checked = 0;
  while (checked < 60) {
    const Chord l = oracle::random_chord(rng, 10);
    const Point2 p = oracle::random_square_point(rng, 12);
    if (on_segment(p, l.segment())) continue;
    ++checked;
    const Classification c = classify(p, l);
    const auto r = oracle::sweep_compare(p, l, c.parallels, dirs);
    CHECK(r.disagreements == 0);
    if (c.kind == ParallelKind::elliptic()) CHECK(r.oracle_parallels == 0);
  }
}

TEST_CASE("the fast kernel agrees with classify") {
  std::mt19937_64 rng(35);
  int checked = 0;
  while (checked < 2000) {
    const Chord l = oracle::random_chord(rng, 8);
    const Point2 p = oracle::random_square_point(rng, 8);
    if (on_segment(p, l.segment())) {
      CHECK(code_of([&] { classify_kind(p, l); }) == ErrorCode::PointOnLine);
      continue;
    }
    ++checked;
    CHECK(classify_kind(p, l) == classify(p, l).kind);
  }
  // Denominators too large for the fixed-width path.
  const Rational big(1, Integer("1000000000000000000000007"));
  const Chord l = chord_validate(pt(big, 0), pt(1 - big, 1));
  for (const Point2& p : {pt(0, 0), pt(Rational(1, 3), Rational(2, 3)), pt(1, big), kD}) {
    CHECK(classify_kind(p, l) == classify(p, l).kind);
  }
}

TEST_CASE("open touching semantics loses the D claim") {
  const Classification d = classify(kD, kCE, Semantics::Open);
  CHECK(d.kind != ParallelKind::elliptic());
}
