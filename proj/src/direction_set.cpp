#include "postulatum/direction_set.hpp"

#include <algorithm>

namespace postulatum {

namespace {

// Compares d with an arc end, reading a horizontal end as pi.
int compare_with_end(const Direction& d, const Arc& arc) {
  if (arc.reaches_cut()) return -1;
  return angle_compare(d, arc.end);
}

Direction sum(const Direction& a, const Point2& b) { return Direction::from(a.vector() + b); }

}  // namespace

void sort_directions(std::vector<Direction>& dirs) {
  std::sort(dirs.begin(), dirs.end(),
            [](const Direction& a, const Direction& b) { return angle_compare(a, b) < 0; });
  dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());
}

DirectionSet DirectionSet::full() {
  DirectionSet s;
  s.arcs_.push_back({Direction::horizontal(), Direction::horizontal(), true, false});
  return s;
}

DirectionSet DirectionSet::single(const Direction& d) {
  DirectionSet s;
  s.isolated_.push_back(d);
  return s;
}

DirectionSet DirectionSet::closed_arc(const Direction& from, const Direction& to) {
  if (from == to) return single(from);
  const int order = angle_compare(from, to);
  return from_predicate({from, to}, [&](const Direction& d) {
    const int a = angle_compare(from, d);
    const int b = angle_compare(d, to);
    if (order < 0) return a <= 0 && b <= 0;
    return a <= 0 || b <= 0;
  });
}

DirectionSet DirectionSet::from_predicate(std::vector<Direction> breakpoints,
                                          const std::function<bool(const Direction&)>& member) {
  breakpoints.push_back(Direction::horizontal());
  sort_directions(breakpoints);

  const std::size_t n = breakpoints.size();
  std::vector<bool> in_point(n);
  std::vector<bool> in_gap(n);
  for (std::size_t i = 0; i < n; ++i) {
    in_point[i] = member(breakpoints[i]);
    Direction probe = Direction::from(Rational(0), Rational(1));
    if (i + 1 < n) {
      probe = sum(breakpoints[i], breakpoints[i + 1].vector());
    } else if (n > 1) {
      probe = sum(breakpoints[i], Point2{Rational(-1), Rational(0)});
    }
    in_gap[i] = member(probe);
  }

  DirectionSet out;
  bool open = false;
  Direction start = Direction::horizontal();
  bool start_closed = false;
  for (std::size_t i = 0; i < n; ++i) {
    const Direction& c = breakpoints[i];
    if (open) {
      if (!in_point[i]) {
        out.arcs_.push_back({start, c, start_closed, false});
        open = false;
      } else if (!in_gap[i]) {
        out.arcs_.push_back({start, c, start_closed, true});
        open = false;
        continue;
      } else {
        continue;
      }
    }
    if (in_gap[i]) {
      open = true;
      start = c;
      start_closed = in_point[i];
    } else if (in_point[i]) {
      out.isolated_.push_back(c);
    }
  }
  if (open) out.arcs_.push_back({start, Direction::horizontal(), start_closed, false});
  return out;
}

bool DirectionSet::contains(const Direction& d) const {
  if (std::find(isolated_.begin(), isolated_.end(), d) != isolated_.end()) return true;
  for (const Arc& arc : arcs_) {
    const int s = angle_compare(d, arc.start);
    if (s < 0 || (s == 0 && !arc.start_closed)) continue;
    const int e = compare_with_end(d, arc);
    if (e < 0 || (e == 0 && arc.end_closed)) return true;
  }
  return false;
}

std::vector<Direction> DirectionSet::breakpoints() const {
  std::vector<Direction> out = isolated_;
  for (const Arc& arc : arcs_) {
    out.push_back(arc.start);
    out.push_back(arc.end);
  }
  return out;
}

DirectionSet dirset_subtract(const DirectionSet& a, const DirectionSet& b) {
  std::vector<Direction> cuts = a.breakpoints();
  const std::vector<Direction> more = b.breakpoints();
  cuts.insert(cuts.end(), more.begin(), more.end());
  return DirectionSet::from_predicate(std::move(cuts),
                                      [&](const Direction& d) { return a.contains(d) && !b.contains(d); });
}

ParallelKind dirset_classify(const DirectionSet& s) {
  if (!s.arcs().empty()) return ParallelKind::hyperbolic();
  switch (s.isolated().size()) {
    case 0: return ParallelKind::elliptic();
    case 1: return ParallelKind::euclidean();
    default: return ParallelKind::finite_many(s.isolated().size());
  }
}

std::vector<Direction> arc_samples(const Arc& arc, std::size_t count) {
  std::vector<Direction> out;
  out.reserve(count);
  const Rational steps(static_cast<long>(count + 1));
  const bool whole = arc.start == Direction::horizontal() && arc.reaches_cut();
  const Point2 from = arc.start.vector();
  const Point2 to = arc.reaches_cut() ? Point2{Rational(-1), Rational(0)} : arc.end.vector();
  for (std::size_t j = 1; j <= count; ++j) {
    const Rational t = Rational(static_cast<long>(j)) / steps;
    if (whole) {
      // Walk (1,0) -> (0,1) -> (-1,0); a straight lerp would pass through zero.
      const Rational u = 2 * t;
      out.push_back(u <= 1 ? Direction::from(1 - u, u) : Direction::from(1 - u, 2 - u));
    } else {
      out.push_back(Direction::from((1 - t) * from + t * to));
    }
  }
  return out;
}

}  // namespace postulatum
