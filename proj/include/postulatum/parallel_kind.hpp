#pragma once

#include <compare>
#include <cstddef>
#include <string>

namespace postulatum {

/// How many parallels pass through a point exterior to a line.
class ParallelKind {
 public:
  enum class Tag { Elliptic, Euclidean, FiniteMany, CountablyInfinite, Hyperbolic };

  static ParallelKind elliptic() { return ParallelKind(Tag::Elliptic, 0); }
  static ParallelKind euclidean() { return ParallelKind(Tag::Euclidean, 1); }
  /// Requires count >= 2.
  static ParallelKind finite_many(std::size_t count);
  static ParallelKind countably_infinite() { return ParallelKind(Tag::CountablyInfinite, 0); }
  static ParallelKind hyperbolic() { return ParallelKind(Tag::Hyperbolic, 0); }

  Tag tag() const { return tag_; }
  /// Exact parallel count for FiniteMany; 1 for Euclidean; 0 otherwise.
  std::size_t count() const { return count_; }

  friend bool operator==(const ParallelKind&, const ParallelKind&) = default;
  friend auto operator<=>(const ParallelKind&, const ParallelKind&) = default;

 private:
  ParallelKind(Tag tag, std::size_t count) : tag_(tag), count_(count) {}
  Tag tag_;
  std::size_t count_;
};

/// "Elliptic", "Euclidean", "FiniteMany(3)", "CountablyInfinite", "Hyperbolic".
std::string to_string(const ParallelKind& kind);
/// Name without the count: "FiniteMany" for every k.
std::string tag_name(ParallelKind::Tag tag);
/// Inverse of to_string; throws GeometryError(Parse) on unknown names.
ParallelKind parse_parallel_kind(const std::string& text);

}  // namespace postulatum
