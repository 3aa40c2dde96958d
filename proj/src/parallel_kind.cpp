#include "postulatum/parallel_kind.hpp"

#include "postulatum/errors.hpp"

namespace postulatum {

ParallelKind ParallelKind::finite_many(std::size_t count) {
  if (count < 2) {
    throw std::invalid_argument("FiniteMany requires at least two parallels");
  }
  return ParallelKind(Tag::FiniteMany, count);
}

std::string tag_name(ParallelKind::Tag tag) {
  switch (tag) {
    case ParallelKind::Tag::Elliptic: return "Elliptic";
    case ParallelKind::Tag::Euclidean: return "Euclidean";
    case ParallelKind::Tag::FiniteMany: return "FiniteMany";
    case ParallelKind::Tag::CountablyInfinite: return "CountablyInfinite";
    case ParallelKind::Tag::Hyperbolic: return "Hyperbolic";
  }
  return "?";
}

std::string to_string(const ParallelKind& kind) {
  if (kind.tag() == ParallelKind::Tag::FiniteMany) {
    return "FiniteMany(" + std::to_string(kind.count()) + ")";
  }
  return tag_name(kind.tag());
}

ParallelKind parse_parallel_kind(const std::string& text) {
  if (text == "Elliptic") return ParallelKind::elliptic();
  if (text == "Euclidean") return ParallelKind::euclidean();
  if (text == "CountablyInfinite") return ParallelKind::countably_infinite();
  if (text == "Hyperbolic") return ParallelKind::hyperbolic();
  const std::string prefix = "FiniteMany(";
  if (text.rfind(prefix, 0) == 0 && text.back() == ')') {
    const std::string digits = text.substr(prefix.size(), text.size() - prefix.size() - 1);
    if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos) {
      const auto k = std::stoul(digits);
      if (k >= 2) return ParallelKind::finite_many(k);
    }
  }
  throw GeometryError(ErrorCode::Parse, "unknown parallel kind '" + text + "'");
}

}  // namespace postulatum
