#include "postulatum/zone_map.hpp"

#include <algorithm>

#include "postulatum/errors.hpp"

namespace postulatum::square {

namespace {

bool same_line(const Segment& a, const Segment& b) {
  return orient(a.p, a.q, b.p) == 0 && orient(a.p, a.q, b.q) == 0;
}

// Signed offset of v from the directed line, up to a positive factor.
Rational side_value(const Segment& line, const Point2& v) { return cross(line.q - line.p, v - line.p); }

Point2 crossing(const Segment& line, const Point2& a, const Point2& b) {
  const Rational fa = side_value(line, a);
  const Rational fb = side_value(line, b);
  const Rational t = fa / (fa - fb);
  return a + t * (b - a);
}

std::vector<Polygon> split(const Polygon& poly, const Segment& line) {
  std::vector<int> s(poly.size());
  bool pos = false;
  bool neg = false;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    s[i] = sgn(side_value(line, poly[i]));
    pos |= s[i] > 0;
    neg |= s[i] < 0;
  }
  if (!pos || !neg) return {poly};
  Polygon left;
  Polygon right;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const std::size_t j = (i + 1) % poly.size();
    if (s[i] >= 0) left.push_back(poly[i]);
    if (s[i] <= 0) right.push_back(poly[i]);
    if (s[i] * s[j] < 0) {
      const Point2 x = crossing(line, poly[i], poly[j]);
      left.push_back(x);
      right.push_back(x);
    }
  }
  return {left, right};
}

Polygon drop_collinear(const Polygon& poly) {
  Polygon out;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (orient(poly[(i + n - 1) % n], poly[i], poly[(i + 1) % n]) != 0) out.push_back(poly[i]);
  }
  return out;
}

// Monotone chain hull, counterclockwise, without collinear vertices.
Polygon convex_hull(std::vector<Point2> pts) {
  const auto less = [](const Point2& a, const Point2& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); };
  std::sort(pts.begin(), pts.end(), less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  Polygon h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && orient(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && orient(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

// True when the polygons share a boundary piece of positive length.
bool share_edge(const Polygon& a, const Polygon& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Segment ea{a[i], a[(i + 1) % a.size()]};
    for (std::size_t j = 0; j < b.size(); ++j) {
      const Segment eb{b[j], b[(j + 1) % b.size()]};
      if (!same_line(ea, eb)) continue;
      if (std::holds_alternative<Overlap>(segment_intersection_point(ea, eb))) return true;
    }
  }
  return false;
}

Point2 vertex_average(const Polygon& poly) {
  Point2 sum{0, 0};
  for (const Point2& v : poly) sum = sum + v;
  return Rational(1, static_cast<unsigned long>(poly.size())) * sum;
}

std::optional<ParallelKind> kind_at(const Point2& p, const Chord& l) {
  if (on_segment(p, l.segment())) return std::nullopt;
  return classify(p, l).kind;
}

Rational length(const Point2& a, const Point2& b) { return abs(b.x - a.x) + abs(b.y - a.y); }

}  // namespace

Rational polygon_area(const Polygon& poly) {
  Rational twice(0);
  for (std::size_t i = 0; i < poly.size(); ++i) twice += cross(poly[i], poly[(i + 1) % poly.size()]);
  return twice / 2;
}

std::vector<Segment> critical_lines(const Chord& l) {
  std::vector<Segment> candidates;
  for (Side s : kSides) candidates.push_back(side_segment(s));
  candidates.push_back({corner_point(Corner::A), corner_point(Corner::C)});
  candidates.push_back({corner_point(Corner::B), corner_point(Corner::D)});
  candidates.push_back(l.segment());
  for (Corner c : kCorners) {
    for (const Point2* q : {&l.q1(), &l.q2()}) {
      if (corner_point(c) != *q) candidates.push_back({corner_point(c), *q});
    }
  }
  std::vector<Segment> out;
  for (const Segment& s : candidates) {
    if (std::none_of(out.begin(), out.end(), [&](const Segment& o) { return same_line(o, s); })) out.push_back(s);
  }
  return out;
}

std::vector<Polygon> arrangement_cells(const Chord& l) {
  std::vector<Polygon> cells{
      {corner_point(Corner::A), corner_point(Corner::B), corner_point(Corner::C), corner_point(Corner::D)}};
  for (const Segment& line : critical_lines(l)) {
    std::vector<Polygon> next;
    for (const Polygon& cell : cells) {
      for (Polygon& piece : split(cell, line)) {
        if (polygon_area(piece) != 0) next.push_back(std::move(piece));
      }
    }
    cells = std::move(next);
  }
  return cells;
}

ZoneMap exact_zone_map(const Chord& l) {
  ZoneMap zm{l, {}, {}, {}};

  struct Work {
    Polygon polygon;
    Rational area;
    ParallelKind kind;
  };
  std::vector<Work> work;
  for (Polygon& poly : arrangement_cells(l)) {
    const Point2 sample = vertex_average(poly);
    ParallelKind kind = classify(sample, l).kind;
    Rational area = polygon_area(poly);
    work.push_back({std::move(poly), std::move(area), kind});
  }

  // Greedy convex merge: two cells join when the hull of their union has
  // exactly the sum of their areas.
  for (bool merged = true; merged;) {
    merged = false;
    for (std::size_t i = 0; i < work.size(); ++i) {
      for (std::size_t j = i + 1; j < work.size();) {
        if (work[i].kind == work[j].kind && share_edge(work[i].polygon, work[j].polygon)) {
          std::vector<Point2> pts = work[i].polygon;
          pts.insert(pts.end(), work[j].polygon.begin(), work[j].polygon.end());
          Polygon hull = convex_hull(std::move(pts));
          const Rational total = work[i].area + work[j].area;
          if (polygon_area(hull) == total) {
            work[i].polygon = std::move(hull);
            work[i].area = total;
            work.erase(work.begin() + static_cast<std::ptrdiff_t>(j));
            merged = true;
            j = i + 1;
            continue;
          }
        }
        ++j;
      }
    }
  }
  for (Work& w : work) zm.cells.push_back({drop_collinear(w.polygon), w.kind});

  const std::vector<Segment> lines = critical_lines(l);
  for (Side side : kSides) {
    const Segment seg = side_segment(side);
    std::vector<Rational> ts{0, 1};
    for (const Segment& line : lines) {
      if (same_line(line, seg)) continue;
      const Rational fa = side_value(line, seg.p);
      const Rational fb = side_value(line, seg.q);
      if (sgn(fa) * sgn(fb) <= 0 && fa != fb) ts.push_back(fa / (fa - fb));
    }
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

    auto& pieces = zm.boundary[static_cast<std::size_t>(side)];
    const auto at = [&](const Rational& t) { return seg.p + t * (seg.q - seg.p); };
    for (std::size_t i = 0; i < ts.size(); ++i) {
      const Point2 p = at(ts[i]);
      pieces.push_back({p, p, kind_at(p, l)});
      if (i + 1 < ts.size()) {
        const Point2 mid = at((ts[i] + ts[i + 1]) / 2);
        pieces.push_back({p, at(ts[i + 1]), kind_at(mid, l)});
      }
    }
  }
  for (Corner c : kCorners) zm.corner_kinds[static_cast<std::size_t>(c)] = kind_at(corner_point(c), l);
  return zm;
}

DegreeOfNegation degree_of_negation(const ZoneMap& zones) {
  DegreeOfNegation out;
  std::map<ParallelKind, Rational> area;
  std::map<ParallelKind, Rational> len;
  Rational total_area(0);
  Rational total_len(0);
  for (const Cell& c : zones.cells) {
    const Rational a = polygon_area(c.polygon);
    area[c.kind] += a;
    total_area += a;
    len.try_emplace(c.kind, 0);
  }
  for (const auto& side : zones.boundary) {
    for (const BoundaryPiece& piece : side) {
      if (!piece.kind) continue;
      area.try_emplace(*piece.kind, 0);
      const Rational d = length(piece.from, piece.to);
      len[*piece.kind] += d;
      total_len += d;
    }
  }
  for (const auto& k : zones.corner_kinds) {
    if (!k) continue;
    area.try_emplace(*k, 0);
    len.try_emplace(*k, 0);
  }
  for (auto& [kind, a] : area) out.area_fraction[kind] = a / total_area;
  for (auto& [kind, d] : len) out.boundary_length_fraction[kind] = total_len == 0 ? Rational(0) : d / total_len;
  out.corner_kinds = zones.corner_kinds;
  const auto euclid = out.area_fraction.find(ParallelKind::euclidean());
  out.negation_degree_area = 1 - (euclid == out.area_fraction.end() ? Rational(0) : euclid->second);
  return out;
}

DegreeOfNegation degree_of_negation(const Chord& l) { return degree_of_negation(exact_zone_map(l)); }

}  // namespace postulatum::square
