// postulatum: command-line driver for the square, sphere and plane models.
//
// Exit codes: 0 ok, 1 verification failure, 2 parse/usage, 3 domain
// precondition, 4 I/O.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <thread>

#include <CLI11.hpp>

#include "postulatum/axiom_framework.hpp"
#include "postulatum/errors.hpp"
#include "postulatum/json_io.hpp"
#include "postulatum/monte_carlo.hpp"
#include "postulatum/svg.hpp"
#include "postulatum/verify.hpp"
#include "postulatum/zone_map.hpp"

namespace {

using namespace postulatum;
using io::Json;

constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitIo = 4;

const char* kDefaultLine = "1,1:0,1/2";

struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string config_path;
  std::string model = "square";
  std::string line;
  std::string point;
  std::string mode = "exact";
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::string json_path;
  std::string svg_path;
  std::string e = "1/2";
  unsigned workers = 1;
  std::size_t budget = 1000;
  std::size_t instances = 2000;
  bool json_flag = false;
  bool witness = false;
};

// Fills every option the command line left unset from the --config file, then
// resolves the seed as flag > config > POSTULATUM_SEED > 1.
void apply_config(CLI::App& sub, RunConfig& cfg) {
  Json file = Json::object();
  if (!cfg.config_path.empty()) {
    std::ifstream in(cfg.config_path);
    if (!in) throw IoFailure("cannot read config file " + cfg.config_path);
    try {
      file = Json::parse(in);
    } catch (const Json::parse_error& e) {
      throw GeometryError(ErrorCode::Parse, "config file " + cfg.config_path + ": " + e.what());
    }
  }
  const auto given = [&](const std::string& flag) {
    try {
      return sub.get_option("--" + flag)->count() > 0;
    } catch (const CLI::OptionNotFound&) {
      return true;
    }
  };
  const auto take = [&](const std::string& key, auto& var) {
    if (!file.contains(key) || given(key)) return;
    const Json& v = file[key];
    using T = std::decay_t<decltype(var)>;
    if constexpr (std::is_same_v<T, std::string>) {
      var = v.is_string() ? v.get<std::string>() : v.dump();
    } else {
      var = v.get<T>();
    }
  };
  take("model", cfg.model);
  take("line", cfg.line);
  take("point", cfg.point);
  take("mode", cfg.mode);
  take("samples", cfg.samples);
  if (sub.get_name() != "verify") take("json", cfg.json_path);
  take("svg", cfg.svg_path);
  take("e", cfg.e);
  take("workers", cfg.workers);
  take("budget", cfg.budget);
  take("instances", cfg.instances);

  bool seed_given = false;
  try {
    seed_given = sub.get_option("--seed")->count() > 0;
  } catch (const CLI::OptionNotFound&) {
  }
  if (seed_given) return;
  if (file.contains("seed")) {
    cfg.seed = file["seed"].get<std::uint64_t>();
  } else if (const char* env = std::getenv("POSTULATUM_SEED")) {
    try {
      cfg.seed = std::stoull(env);
    } catch (const std::exception&) {
      throw GeometryError(ErrorCode::Parse, "POSTULATUM_SEED='" + std::string(env) + "' is not an integer");
    }
  } else {
    cfg.seed = 1;
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text) || !out.flush()) throw IoFailure("cannot write " + path);
}

void emit(const Json& doc, const RunConfig& cfg) {
  const std::string text = doc.dump(2) + "\n";
  std::cout << text;
  if (!cfg.json_path.empty()) write_file(cfg.json_path, text);
}

Json classify_command(const RunConfig& cfg) {
  if (cfg.point.empty()) throw GeometryError(ErrorCode::Parse, "--point is required");
  Json out;
  out["model"] = cfg.model;
  if (cfg.model == "square") {
    const square::Chord l = io::parse_chord(cfg.line.empty() ? kDefaultLine : cfg.line);
    const Point2 p = io::parse_point(cfg.point);
    out["line"] = io::chord_text(l);
    out["point"] = to_string(p);
    const Json body = io::to_json(square::classify(p, l));
    for (const auto& [k, v] : body.items()) out[k] = v;
  } else if (cfg.model == "sphere") {
    const auto l = sphere::GreatCircle::from_normal(io::parse_triple(cfg.line.empty() ? "0,0,1" : cfg.line));
    const auto p = sphere::SpherePoint::from_ray(io::parse_triple(cfg.point));
    out["line"] = sphere::to_string(l.normal());
    out["point"] = sphere::to_string(p.ray());
    out["kind"] = to_string(sphere::classify_sphere(p, l));
  } else if (cfg.model == "euclidean-plane") {
    if (cfg.line.empty()) throw GeometryError(ErrorCode::Parse, "--line a,b,c is required for euclidean-plane");
    const auto l = io::parse_planar_line(cfg.line);
    const Point2 p = io::parse_point(cfg.point);
    const auto c = sphere::classify_plane(p, l);
    out["line"] = to_string(l.a()) + "," + to_string(l.b()) + "," + to_string(l.c());
    out["point"] = to_string(p);
    out["kind"] = to_string(c.kind);
    out["parallel"] = to_string(c.parallel.a()) + "," + to_string(c.parallel.b()) + "," + to_string(c.parallel.c());
  } else {
    throw GeometryError(ErrorCode::UnknownModel, "classify supports square, sphere, euclidean-plane; got '" +
                                                     cfg.model + "'");
  }
  return out;
}

Json zones_command(const RunConfig& cfg) {
  const square::Chord l = io::parse_chord(cfg.line.empty() ? kDefaultLine : cfg.line);
  Json out;
  out["line"] = io::chord_text(l);
  out["mode"] = cfg.mode;
  if (cfg.mode == "exact") {
    const auto zones = square::exact_zone_map(l);
    out["zone_map"] = io::to_json(zones);
    out["degree_of_negation"] = io::to_json(square::degree_of_negation(zones));
    if (!cfg.svg_path.empty()) write_file(cfg.svg_path, svg::render_zone_map(zones));
  } else if (cfg.mode == "mc") {
    const std::uint64_t n = cfg.samples ? cfg.samples : 100000;
    const square::McEstimate est = square::zone_measures_mc(l, n, cfg.seed, cfg.workers);
    out["estimate"] = io::to_json(est);
    // Cross-check against the exact area fractions.
    const auto exact = square::degree_of_negation(l).area_fraction;
    Json check = Json::object();
    bool all = true;
    for (const auto& [kind, fraction] : exact) {
      const auto it = est.kinds.find(kind);
      const std::uint64_t count = it == est.kinds.end() ? 0 : it->second.count;
      const bool inside = square::wilson_interval(count, est.samples).contains(fraction.get_d());
      all = all && inside;
      check[to_string(kind)] = {{"exact_area_fraction", to_string(fraction)}, {"within_exact", inside}};
    }
    out["exact_check"] = check;
    out["all_within_exact"] = all;
    if (!cfg.svg_path.empty()) write_file(cfg.svg_path, svg::render_zone_map(square::exact_zone_map(l)));
  } else if (cfg.mode == "grid") {
    const long g = cfg.samples ? static_cast<long>(cfg.samples) : 64;
    std::map<ParallelKind, long> counts;
    long total = 0;
    for (long i = 0; i < g; ++i) {
      for (long j = 0; j < g; ++j) {
        const Point2 p{ratio(2 * i + 1, 2 * g), ratio(2 * j + 1, 2 * g)};
        if (on_segment(p, l.segment())) continue;
        ++counts[square::classify_kind(p, l)];
        ++total;
      }
    }
    Json fr = Json::object();
    for (const auto& [k, c] : counts) {
      fr[to_string(k)] = to_string(ratio(c, total));
    }
    out["resolution"] = g;
    out["points"] = total;
    out["fractions"] = fr;
  } else {
    throw GeometryError(ErrorCode::Parse, "--mode must be exact, mc or grid; got '" + cfg.mode + "'");
  }
  return out;
}

int verify_command(const RunConfig& cfg) {
  VerifyOptions opt;
  opt.e = parse_rational(cfg.e);
  opt.seed = cfg.seed;
  const auto results = run_claim_suite(opt);
  bool all = true;
  for (const auto& r : results) all = all && r.passed;
  if (cfg.json_flag) {
    Json rows = Json::array();
    for (const auto& r : results) rows.push_back({{"claim", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    emit({{"e", to_string(opt.e)}, {"passed", all}, {"claims", rows}}, cfg);
  } else {
    for (const auto& r : results) {
      std::cout << (r.passed ? "PASS  " : "FAIL  ") << r.name;
      for (std::size_t pad = r.name.size(); pad < 22; ++pad) std::cout << ' ';
      std::cout << r.detail << "\n";
    }
    std::cout << (all ? "all claims hold" : "verification failed") << "\n";
  }
  if (!all) {
    for (const auto& r : results) {
      if (!r.passed) std::cerr << "failed claim: " << r.name << "\n";
    }
  }
  return all ? 0 : kExitVerify;
}

Json explore_command(const RunConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  const auto boundary_point = [&]() {
    const auto side = square::kSides[rng() % 4];
    const Segment s = square::side_segment(side);
    const Rational t = ratio(static_cast<long>(rng() % 17), 16);
    return s.p + t * (s.q - s.p);
  };
  std::map<ParallelKind, std::uint64_t> counts;
  Json found = Json::array();
  std::uint64_t examined = 0;
  std::size_t lines = 0;
  while (lines < cfg.instances) {
    square::Chord l = square::line_ce();
    try {
      l = square::chord_validate(boundary_point(), boundary_point());
    } catch (const GeometryError&) {
      continue;
    }
    ++lines;
    // FiniteMany can only appear where critical directions coincide, so the
    // search covers every arrangement vertex and boundary breakpoint as well
    // as a few generic points.
    std::vector<Point2> pts;
    for (const auto& cell : square::arrangement_cells(l)) pts.insert(pts.end(), cell.begin(), cell.end());
    for (int i = 0; i < 4; ++i) {
      pts.push_back({ratio(static_cast<long>(rng() % 1023 + 1), 1024), ratio(static_cast<long>(rng() % 1023 + 1), 1024)});
      pts.push_back(boundary_point());
    }
    std::sort(pts.begin(), pts.end(), [](const Point2& a, const Point2& b) {
      return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    for (const Point2& p : pts) {
      if (on_segment(p, l.segment())) continue;
      const ParallelKind k = square::classify_kind(p, l);
      ++counts[k];
      ++examined;
      if (k.tag() == ParallelKind::Tag::FiniteMany && found.size() < 20) {
        found.push_back({{"point", to_string(p)}, {"line", io::chord_text(l)}, {"k", k.count()}});
      }
    }
  }
  Json kinds = Json::object();
  for (const auto& [k, c] : counts) kinds[to_string(k)] = c;
  return {{"lines", lines},
          {"instances_examined", examined},
          {"seed", cfg.seed},
          {"kinds", kinds},
          {"finite_many_found", found},
          {"conclusion", found.empty() ? "no FiniteMany instance found" : "FiniteMany instances found"}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"postulatum: exact parallel-postulate classification in mixed geometries"};
  app.require_subcommand(1);
  RunConfig cfg;

  const auto common = [&](CLI::App* sub) {
    sub->add_option("--config", cfg.config_path, "JSON file with defaults for any flag");
    sub->add_option("--json", cfg.json_path, "also write the JSON output to this file");
  };

  auto* classify = app.add_subcommand("classify", "classify one (point, line) instance");
  classify->add_option("--model", cfg.model, "square | sphere | euclidean-plane");
  classify->add_option("--line", cfg.line, "x1,y1:x2,y2 (square), normal x,y,z (sphere), a,b,c (plane)");
  classify->add_option("--point", cfg.point, "x,y or ray x,y,z (sphere)");
  common(classify);

  auto* zones = app.add_subcommand("zones", "zone map and degree of negation of a square-model line");
  zones->add_option("--line", cfg.line, "x1,y1:x2,y2 (default CE = 1,1:0,1/2)");
  zones->add_option("--mode", cfg.mode, "exact | mc | grid");
  zones->add_option("--samples", cfg.samples, "mc sample count, or grid resolution per axis");
  zones->add_option("--seed", cfg.seed, "mc seed (default POSTULATUM_SEED or 1)");
  zones->add_option("--workers", cfg.workers, "mc worker threads (does not change results)");
  zones->add_option("--svg", cfg.svg_path, "write an SVG rendering of the exact zone map");
  common(zones);

  auto* verify = app.add_subcommand("verify", "run the pinned claim suite");
  verify->add_option("--e", cfg.e, "E = (0, e) on side DA, 0 < e < 1");
  verify->add_option("--seed", cfg.seed, "sampling seed");
  verify->add_flag("--json", cfg.json_flag, "machine-readable results");
  verify->add_option("--config", cfg.config_path, "JSON file with defaults for any flag");

  auto* sdenied = app.add_subcommand("sdenied", "decide whether the parallel postulate is Smarandachely denied");
  sdenied->add_option("--model", cfg.model, "square | sphere | euclidean-plane | sphere-plane");
  sdenied->add_option("--budget", cfg.budget, "sampled instances");
  sdenied->add_option("--seed", cfg.seed, "sampling seed");
  common(sdenied);

  auto* explore = app.add_subcommand("explore-finite", "search the square model for FiniteMany instances");
  explore->add_option("--instances", cfg.instances, "number of random lines");
  explore->add_option("--seed", cfg.seed, "sampling seed");
  common(explore);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    apply_config(*sub, cfg);
    if (sub == classify) {
      emit(classify_command(cfg), cfg);
    } else if (sub == zones) {
      emit(zones_command(cfg), cfg);
    } else if (sub == verify) {
      return verify_command(cfg);
    } else if (sub == sdenied) {
      Json out = io::to_json(axiom::evaluate_registered(cfg.model, cfg.budget, cfg.seed));
      out["budget"] = cfg.budget;
      out["seed"] = cfg.seed;
      emit(out, cfg);
    } else if (sub == explore) {
      emit(explore_command(cfg), cfg);
    }
  } catch (const GeometryError& e) {
    std::cerr << "error: " << e.what() << "\n";
    const bool usage = e.code() == ErrorCode::Parse || e.code() == ErrorCode::UnknownModel;
    return usage ? kExitUsage : kExitDomain;
  } catch (const IoFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: config: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
