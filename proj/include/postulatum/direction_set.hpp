#pragma once

#include <functional>
#include <span>
#include <vector>

#include "postulatum/exact_geom.hpp"
#include "postulatum/parallel_kind.hpp"

namespace postulatum {

/// Counterclockwise arc of undirected directions. The half-turn is cut at
/// the horizontal: an arc whose `end` is the horizontal direction runs up to
/// (but never includes) angle pi, and then `end_closed` is false.
struct Arc {
  Direction start;
  Direction end;
  bool start_closed = true;
  bool end_closed = true;

  bool reaches_cut() const { return end == Direction::horizontal(); }
  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Exact subset of the undirected directions through a point: a finite union
/// of maximal disjoint arcs plus isolated directions outside every arc, both
/// lists sorted by angle.
class DirectionSet {
 public:
  DirectionSet() = default;

  static DirectionSet full();
  static DirectionSet single(const Direction& d);
  /// Closed arc swept counterclockwise from `from` to `to` (may cross the cut).
  static DirectionSet closed_arc(const Direction& from, const Direction& to);

  /// Builds the set {d : member(d)} given every direction where membership
  /// may change. `member` must be constant on each open gap between
  /// consecutive breakpoints; it is evaluated once per breakpoint and once per gap.
  static DirectionSet from_predicate(std::vector<Direction> breakpoints,
                                     const std::function<bool(const Direction&)>& member);

  const std::vector<Arc>& arcs() const { return arcs_; }
  const std::vector<Direction>& isolated() const { return isolated_; }
  bool empty() const { return arcs_.empty() && isolated_.empty(); }
  bool contains(const Direction& d) const;

  /// Every endpoint and isolated direction, unsorted.
  std::vector<Direction> breakpoints() const;

  friend bool operator==(const DirectionSet&, const DirectionSet&) = default;

 private:
  std::vector<Arc> arcs_;
  std::vector<Direction> isolated_;
};

/// Set difference a \ b with exact endpoint flags.
DirectionSet dirset_subtract(const DirectionSet& a, const DirectionSet& b);

/// Empty -> Elliptic; one isolated direction -> Euclidean; k >= 2 isolated
/// -> FiniteMany(k); any arc -> Hyperbolic. Never CountablyInfinite: a
/// DirectionSet cannot represent a countably infinite set.
ParallelKind dirset_classify(const DirectionSet& s);

/// `count` distinct directions strictly inside the arc, in angular order.
std::vector<Direction> arc_samples(const Arc& arc, std::size_t count);

/// Sorts by angle and removes duplicates.
void sort_directions(std::vector<Direction>& dirs);

}  // namespace postulatum
