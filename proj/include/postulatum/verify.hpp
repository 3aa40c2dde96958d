#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "postulatum/square_model.hpp"

namespace postulatum {

struct VerifyOptions {
  /// E = (0, e) on side DA; any 0 < e < 1.
  Rational e{1, 2};
  square::Semantics semantics = square::Semantics::Closed;
  std::size_t side_samples = 100;
  std::size_t sphere_pairs = 1000;
  std::size_t denial_budget = 200;
  std::uint64_t seed = 1;
};

struct ClaimResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// The pinned claim suite, in fixed order:
///   N = (1/2, e/2) is Hyperbolic with a pencil through E and C;
///   interior points of AB are Euclidean with AB as the unique parallel;
///   D is Elliptic with at least 8 blocking samples, all on CE;
///   random great-circle pairs always meet in two antipodal points;
///   C is a line of the sphere but not of the plane;
///   denial verdicts of the four registered models.
std::vector<ClaimResult> run_claim_suite(const VerifyOptions& options = {});

}  // namespace postulatum
