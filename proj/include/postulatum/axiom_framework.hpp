#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "postulatum/parallel_kind.hpp"
#include "postulatum/sphere_plane_model.hpp"
#include "postulatum/square_model.hpp"

namespace postulatum::axiom {

// Whether the parallel postulate behaves in at least two different ways in
// one space, decided by sampling (point, line) instances of a model.

struct SquareInstance {
  Point2 point;
  square::Chord line;
};
struct SphereInstance {
  sphere::SpherePoint point;
  sphere::GreatCircle line;
};
struct PlaneInstance {
  Point2 point;
  sphere::PlanarLine line;
};

struct Instance {
  std::string model;
  std::variant<SquareInstance, SphereInstance, PlaneInstance> payload;
};

/// Text forms of the instance's point and line, in the CLI input grammar.
std::string point_text(const Instance& inst);
std::string line_text(const Instance& inst);

class GeometryModel {
 public:
  virtual ~GeometryModel() = default;

  virtual std::string name() const = 0;
  /// Deterministic for a given (count, seed); a larger count extends the
  /// smaller one's sequence.
  virtual std::vector<Instance> sample_instances(std::size_t count, std::uint64_t seed) const = 0;
  /// Instances always examined, whatever the budget.
  virtual std::vector<Instance> critical_instances() const { return {}; }
  virtual ParallelKind behavior(const Instance& inst) const = 0;
  /// True when the behaviour is constant by theorem rather than by sampling.
  virtual bool analytic() const { return false; }
};

struct DenialVerdict {
  std::string model;
  bool denied = false;
  bool analytic = false;
  std::set<ParallelKind> behaviors_seen;
  std::map<ParallelKind, Instance> witnesses;
  std::size_t instances_examined = 0;
};

/// Square model with a fixed line (CE with E = (0, 1/2) by default). Critical
/// instances: N, M and D of the classical example plus every corner and side
/// midpoint not on the line.
class SquareModel : public GeometryModel {
 public:
  explicit SquareModel(square::Chord line = square::line_ce());
  std::string name() const override { return "square"; }
  std::vector<Instance> sample_instances(std::size_t count, std::uint64_t seed) const override;
  std::vector<Instance> critical_instances() const override;
  ParallelKind behavior(const Instance& inst) const override;

 private:
  square::Chord line_;
};

class EuclideanPlaneModel : public GeometryModel {
 public:
  std::string name() const override { return "euclidean-plane"; }
  std::vector<Instance> sample_instances(std::size_t count, std::uint64_t seed) const override;
  ParallelKind behavior(const Instance& inst) const override;
  bool analytic() const override { return true; }
};

class SphereModel : public GeometryModel {
 public:
  std::string name() const override { return "sphere"; }
  std::vector<Instance> sample_instances(std::size_t count, std::uint64_t seed) const override;
  ParallelKind behavior(const Instance& inst) const override;
  bool analytic() const override { return true; }
};

/// Named models evaluated as one heterogeneous space. Never empty.
class MultiSpace {
 public:
  MultiSpace(std::string name, std::vector<std::shared_ptr<const GeometryModel>> parts);
  const std::string& name() const { return name_; }
  const std::vector<std::shared_ptr<const GeometryModel>>& parts() const { return parts_; }

 private:
  std::string name_;
  std::vector<std::shared_ptr<const GeometryModel>> parts_;
};

/// Examines every critical instance plus `budget` samples. denied iff at
/// least two distinct kinds were seen; each kind keeps its first witness.
DenialVerdict smarandachely_denied(const GeometryModel& m, std::size_t budget, std::uint64_t seed);

/// Union over the parts, with the budget split evenly (at least one each).
DenialVerdict multispace_denied(const MultiSpace& ms, std::size_t budget, std::uint64_t seed);

/// Registry: "square", "sphere", "euclidean-plane", "sphere-plane".
std::vector<std::string> registered_models();

/// Throws GeometryError(UnknownModel) for other names.
DenialVerdict evaluate_registered(const std::string& name, std::size_t budget, std::uint64_t seed);

}  // namespace postulatum::axiom
