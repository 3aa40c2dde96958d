#include "postulatum/axiom_framework.hpp"

#include <random>

#include "postulatum/errors.hpp"

namespace postulatum::axiom {

namespace {

constexpr unsigned kDyadicBits = 20;

Rational random_unit(std::mt19937_64& rng, bool open) {
  const std::uint64_t range = 1ull << kDyadicBits;
  std::uint64_t k = rng() % (range + 1);
  if (open) {
    while (k == 0 || k == range) k = rng() % (range + 1);
  }
  Rational r(static_cast<unsigned long>(k), 1ul);
  mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), kDyadicBits);
  return r;
}

long small_int(std::mt19937_64& rng, long bound) {
  return static_cast<long>(rng() % static_cast<std::uint64_t>(2 * bound + 1)) - bound;
}

Rational small_rational(std::mt19937_64& rng) {
  const long den = static_cast<long>(rng() % 16) + 1;
  return ratio(small_int(rng, 64), den);
}

sphere::Triple random_triple(std::mt19937_64& rng) {
  for (;;) {
    sphere::Triple t{small_rational(rng), small_rational(rng), small_rational(rng)};
    if (!sphere::is_zero(t)) return t;
  }
}

}  // namespace

std::string point_text(const Instance& inst) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, SphereInstance>) {
          return sphere::to_string(v.point.ray());
        } else {
          return to_string(v.point);
        }
      },
      inst.payload);
}

std::string line_text(const Instance& inst) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, SquareInstance>) {
          return to_string(v.line.q1()) + ":" + to_string(v.line.q2());
        } else if constexpr (std::is_same_v<T, SphereInstance>) {
          return sphere::to_string(v.line.normal());
        } else {
          return to_string(v.line.a()) + "," + to_string(v.line.b()) + "," + to_string(v.line.c());
        }
      },
      inst.payload);
}

SquareModel::SquareModel(square::Chord line) : line_(std::move(line)) {}

std::vector<Instance> SquareModel::sample_instances(std::size_t count, std::uint64_t seed) const {
  std::mt19937_64 rng(seed);
  std::vector<Instance> out;
  out.reserve(count);
  while (out.size() < count) {
    Point2 p;
    if (out.size() % 8 == 7) {
      // Every eighth sample sits on the boundary.
      const auto side = square::kSides[rng() % 4];
      const Segment s = square::side_segment(side);
      const Rational t = random_unit(rng, false);
      p = s.p + t * (s.q - s.p);
    } else {
      p = {random_unit(rng, true), random_unit(rng, true)};
    }
    if (on_segment(p, line_.segment())) continue;
    out.push_back({name(), SquareInstance{p, line_}});
  }
  return out;
}

std::vector<Instance> SquareModel::critical_instances() const {
  std::vector<Point2> pts{{Rational(1, 2), Rational(1, 4)}, {Rational(1, 2), 0}, {0, 1}};
  for (square::Corner c : square::kCorners) pts.push_back(square::corner_point(c));
  for (square::Side s : square::kSides) {
    const Segment seg = square::side_segment(s);
    pts.push_back(Rational(1, 2) * (seg.p + seg.q));
  }
  std::vector<Instance> out;
  for (const Point2& p : pts) {
    if (!on_segment(p, line_.segment())) out.push_back({name(), SquareInstance{p, line_}});
  }
  return out;
}

ParallelKind SquareModel::behavior(const Instance& inst) const {
  const auto& v = std::get<SquareInstance>(inst.payload);
  return square::classify(v.point, v.line).kind;
}

std::vector<Instance> EuclideanPlaneModel::sample_instances(std::size_t count, std::uint64_t seed) const {
  std::mt19937_64 rng(seed);
  std::vector<Instance> out;
  out.reserve(count);
  while (out.size() < count) {
    const Rational a = small_rational(rng);
    const Rational b = small_rational(rng);
    if (a == 0 && b == 0) continue;
    const auto line = sphere::PlanarLine::from_coefficients(a, b, small_rational(rng));
    const Point2 p{small_rational(rng), small_rational(rng)};
    if (line.evaluate(p) == 0) continue;
    out.push_back({name(), PlaneInstance{p, line}});
  }
  return out;
}

ParallelKind EuclideanPlaneModel::behavior(const Instance& inst) const {
  const auto& v = std::get<PlaneInstance>(inst.payload);
  return sphere::classify_plane(v.point, v.line).kind;
}

std::vector<Instance> SphereModel::sample_instances(std::size_t count, std::uint64_t seed) const {
  std::mt19937_64 rng(seed);
  std::vector<Instance> out;
  out.reserve(count);
  while (out.size() < count) {
    const auto line = sphere::GreatCircle::from_normal(random_triple(rng));
    const auto p = sphere::SpherePoint::from_ray(random_triple(rng));
    if (sphere::on_circle(p, line)) continue;
    out.push_back({name(), SphereInstance{p, line}});
  }
  return out;
}

ParallelKind SphereModel::behavior(const Instance& inst) const {
  const auto& v = std::get<SphereInstance>(inst.payload);
  return sphere::classify_sphere(v.point, v.line);
}

MultiSpace::MultiSpace(std::string name, std::vector<std::shared_ptr<const GeometryModel>> parts)
    : name_(std::move(name)), parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("a multi-space needs at least one model");
}

namespace {

void examine(const GeometryModel& m, const Instance& inst, DenialVerdict& v) {
  const ParallelKind kind = m.behavior(inst);
  v.behaviors_seen.insert(kind);
  v.witnesses.try_emplace(kind, inst);
  ++v.instances_examined;
}

}  // namespace

DenialVerdict smarandachely_denied(const GeometryModel& m, std::size_t budget, std::uint64_t seed) {
  DenialVerdict v;
  v.model = m.name();
  v.analytic = m.analytic();
  for (const Instance& inst : m.critical_instances()) examine(m, inst, v);
  for (const Instance& inst : m.sample_instances(budget, seed)) examine(m, inst, v);
  v.denied = v.behaviors_seen.size() >= 2;
  return v;
}

DenialVerdict multispace_denied(const MultiSpace& ms, std::size_t budget, std::uint64_t seed) {
  DenialVerdict v;
  v.model = ms.name();
  v.analytic = true;
  const std::size_t share = std::max<std::size_t>(1, budget / ms.parts().size());
  for (std::size_t i = 0; i < ms.parts().size(); ++i) {
    const DenialVerdict part = smarandachely_denied(*ms.parts()[i], share, seed + i);
    v.analytic = v.analytic && part.analytic;
    v.instances_examined += part.instances_examined;
    v.behaviors_seen.insert(part.behaviors_seen.begin(), part.behaviors_seen.end());
    for (const auto& [kind, inst] : part.witnesses) v.witnesses.try_emplace(kind, inst);
  }
  v.denied = v.behaviors_seen.size() >= 2;
  return v;
}

std::vector<std::string> registered_models() { return {"square", "sphere", "euclidean-plane", "sphere-plane"}; }

DenialVerdict evaluate_registered(const std::string& name, std::size_t budget, std::uint64_t seed) {
  if (name == "square") return smarandachely_denied(SquareModel(), budget, seed);
  if (name == "sphere") return smarandachely_denied(SphereModel(), budget, seed);
  if (name == "euclidean-plane") return smarandachely_denied(EuclideanPlaneModel(), budget, seed);
  if (name == "sphere-plane") {
    const MultiSpace ms("sphere-plane", {std::make_shared<EuclideanPlaneModel>(), std::make_shared<SphereModel>()});
    return multispace_denied(ms, budget, seed);
  }
  throw GeometryError(ErrorCode::UnknownModel, "'" + name + "' is not a registered model");
}

}  // namespace postulatum::axiom
