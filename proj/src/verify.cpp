#include "postulatum/verify.hpp"

#include <random>
#include <sstream>

#include "postulatum/axiom_framework.hpp"
#include "postulatum/errors.hpp"
#include "postulatum/sphere_plane_model.hpp"

namespace postulatum {

namespace {

using square::Chord;

ClaimResult claim_n(const Chord& ce, const Rational& e, square::Semantics sem) {
  ClaimResult r{"N hyperbolic", false, ""};
  const Point2 n{Rational(1, 2), e / 2};
  const auto c = square::classify(n, ce, sem);
  std::ostringstream os;
  os << "N=(" << to_string(n) << ") kind " << to_string(c.kind);
  if (c.kind == ParallelKind::hyperbolic() && c.witnesses.bounding_pencil) {
    const auto& [u, v] = *c.witnesses.bounding_pencil;
    const bool through = on_segment(ce.q2(), u.segment()) && on_segment(ce.q1(), v.segment()) &&
                         on_segment(n, u.segment()) && on_segment(n, v.segment());
    os << (through ? ", pencil through E and C" : ", pencil misses E or C");
    r.passed = through;
  }
  r.detail = os.str();
  return r;
}

ClaimResult claim_m(const Chord& ce, std::size_t samples, square::Semantics sem) {
  ClaimResult r{"M on AB euclidean", true, ""};
  const Chord ab = square::chord_validate({0, 0}, {1, 0});
  std::size_t ok = 0;
  for (std::size_t i = 1; i <= samples; ++i) {
    const Point2 m{ratio(static_cast<long>(i), static_cast<long>(samples + 1)), 0};
    const auto c = square::classify(m, ce, sem);
    if (c.kind == ParallelKind::euclidean() && c.witnesses.unique_parallel == ab) {
      ++ok;
    } else if (r.passed) {
      r.passed = false;
      r.detail = "first failure at M=(" + to_string(m) + "): " + to_string(c.kind) + "; ";
    }
  }
  r.detail += std::to_string(ok) + "/" + std::to_string(samples) + " points with unique parallel AB";
  return r;
}

ClaimResult claim_d(const Chord& ce, square::Semantics sem) {
  ClaimResult r{"D elliptic", false, ""};
  const Point2 d{0, 1};
  const auto c = square::classify(d, ce, sem);
  std::size_t confirmed = 0;
  for (const auto& s : c.witnesses.blocking_samples) {
    const auto chord = square::chord_through(d, s.direction);
    if (chord && on_segment(s.hit, ce.segment()) && on_segment(s.hit, chord->segment())) ++confirmed;
  }
  const std::size_t total = c.witnesses.blocking_samples.size();
  r.passed = c.kind == ParallelKind::elliptic() && total >= 8 && confirmed == total;
  r.detail = "kind " + to_string(c.kind) + ", " + std::to_string(confirmed) + "/" + std::to_string(total) +
             " blocking samples on CE";
  return r;
}

ClaimResult claim_sphere(std::size_t pairs, std::uint64_t seed) {
  ClaimResult r{"great circles meet", true, ""};
  std::mt19937_64 rng(seed);
  const auto comp = [&] { return Rational(static_cast<long>(rng() % 41) - 20); };
  std::size_t met = 0;
  std::size_t identical = 0;
  for (std::size_t i = 0; i < pairs; ++i) {
    sphere::Triple n1{comp(), comp(), comp()};
    sphere::Triple n2{comp(), comp(), comp()};
    if (sphere::is_zero(n1) || sphere::is_zero(n2)) {
      --i;
      continue;
    }
    const auto c1 = sphere::GreatCircle::from_normal(n1);
    const auto c2 = sphere::GreatCircle::from_normal(n2);
    const auto meet = sphere::great_circles_meet(c1, c2);
    if (std::holds_alternative<sphere::Identical>(meet)) {
      ++identical;
      continue;
    }
    const auto& tp = std::get<sphere::TwoPoints>(meet);
    if (tp.antipode == tp.p.antipode() && sphere::on_circle(tp.p, c1) && sphere::on_circle(tp.p, c2) &&
        sphere::on_circle(tp.antipode, c1) && sphere::on_circle(tp.antipode, c2)) {
      ++met;
    } else {
      r.passed = false;
    }
  }
  r.detail = std::to_string(met) + " pairs met in two antipodal points, " + std::to_string(identical) + " identical";
  return r;
}

ClaimResult claim_dual() {
  const auto s = sphere::dual_status_of_C();
  return {"C dual status", s.is_line_on_sphere && !s.is_line_in_plane,
          std::string("line on sphere: ") + (s.is_line_on_sphere ? "yes" : "no") +
              ", line in plane: " + (s.is_line_in_plane ? "yes" : "no")};
}

ClaimResult claim_denial(std::size_t budget, std::uint64_t seed) {
  ClaimResult r{"denial verdicts", true, ""};
  const std::vector<std::pair<std::string, bool>> expected{
      {"square", true}, {"sphere", false}, {"euclidean-plane", false}, {"sphere-plane", true}};
  for (const auto& [name, denied] : expected) {
    const auto v = axiom::evaluate_registered(name, budget, seed);
    r.passed = r.passed && v.denied == denied;
    r.detail += name + (v.denied ? " denied" : " not denied") + " (" + std::to_string(v.behaviors_seen.size()) +
                " behaviors); ";
  }
  r.detail.resize(r.detail.size() - 2);
  return r;
}

}  // namespace

std::vector<ClaimResult> run_claim_suite(const VerifyOptions& options) {
  if (options.e <= 0 || options.e >= 1) {
    throw GeometryError(ErrorCode::NotOnBoundary, "E must lie strictly inside side DA (0 < e < 1)");
  }
  const Chord ce = square::line_ce(options.e);
  return {claim_n(ce, options.e, options.semantics),
          claim_m(ce, options.side_samples, options.semantics),
          claim_d(ce, options.semantics),
          claim_sphere(options.sphere_pairs, options.seed),
          claim_dual(),
          claim_denial(options.denial_budget, options.seed)};
}

}  // namespace postulatum
