#include "rss/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "rss/bounds.hpp"
#include "rss/experiments.hpp"
#include "rss/json_io.hpp"
#include "rss/matrix_io.hpp"
#include "rss/nne.hpp"
#include "rss/rng.hpp"
#include "rss/sampler.hpp"
#include "rss/walks.hpp"

namespace rss {

namespace {

using nlohmann::json;

const std::vector<std::string> kCommands = {"sample", "bounds", "solve",    "cover",
                                            "moments", "joint", "sweep",    "claims",
                                            "nne-demo", "walk"};

void check_keys(const json& obj, const std::vector<std::string>& allowed,
                const std::string& context) {
  if (!obj.is_object()) throw ConfigError(context + ": expected an object");
  for (const auto& [key, _] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw ConfigError(context + ": unknown key '" + key + "'");
    }
  }
}

template <class T>
T require(const json& obj, const std::string& key, const std::string& context) {
  if (!obj.contains(key)) throw ConfigError(context + ": missing required key '" + key + "'");
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError(context + ": key '" + key + "' has the wrong type");
  }
}

template <class T>
T value_or(const json& obj, const std::string& key, T fallback, const std::string& context) {
  if (!obj.contains(key)) return fallback;
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError(context + ": key '" + key + "' has the wrong type");
  }
}

std::vector<double> require_vector(const json& obj, const std::string& key,
                                   const std::string& context) {
  const json& v = obj.contains(key) ? obj.at(key) : json();
  if (!v.is_array()) throw ConfigError(context + ": key '" + key + "' must be an array");
  std::vector<double> out;
  for (const auto& e : v) {
    if (!e.is_number()) throw ConfigError(context + ": key '" + key + "' must hold numbers");
    out.push_back(e.get<double>());
  }
  return out;
}

Engine resolve_engine(const json& params, long n, int d, bool coverage,
                      const std::string& context) {
  const std::string name = value_or<std::string>(params, "engine", "auto", context);
  if (name == "auto") return auto_engine(n, d, coverage);
  const Engine e = engine_from_name(name);
  if (e == Engine::frontier && !coverage) {
    throw ConfigError(context + ": engine 'frontier' is only available for coverage");
  }
  return e;
}

void write_text_atomic(const std::string& path, const std::string& body) {
  if (path.empty()) {
    std::cout << body;
    return;
  }
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw std::ios_base::failure("cannot open for writing: " + tmp);
    out << body;
    if (!out) throw std::ios_base::failure("write failed: " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string trial_csv(const std::vector<TrialSummary>& summaries) {
  std::ostringstream out;
  if (summaries.empty()) return "";
  out << "experiment,trials,estimate,stderr,ci_halfwidth,bound_lower,bound_upper,verdict";
  for (const auto& [key, _] : summaries.front().params) out << ',' << key;
  out << '\n';
  for (const auto& s : summaries) {
    out << s.experiment << ',' << s.trials << ',' << fmt_double(s.estimate) << ','
        << fmt_double(s.std_error) << ',' << fmt_double(s.ci_halfwidth) << ','
        << (s.bound_lower ? fmt_double(*s.bound_lower) : "") << ','
        << (s.bound_upper ? fmt_double(*s.bound_upper) : "") << ',' << verdict_name(s.verdict);
    for (const auto& [_, v] : s.params) out << ',' << fmt_double(v);
    out << '\n';
  }
  return out.str();
}

bool verdict_failed(const TrialSummary& s) {
  return s.verdict == Verdict::above_upper || s.verdict == Verdict::below_lower;
}

struct CommandOutput {
  json result;                        // JSON payload
  std::string csv;                    // CSV payload (empty = unsupported)
  std::vector<TrialSummary> trials;   // for exit-code verdicts
};

ContainmentSpec parse_containment(const json& dist, int d, const std::string& context) {
  check_keys(dist, {"type", "p", "inner_mean", "inner_sigma", "outlier"}, context);
  ContainmentSpec spec;
  spec.p = require<double>(dist, "p", context);
  spec.inner_sigma = value_or<double>(dist, "inner_sigma", 1.0, context);
  if (dist.contains("inner_mean")) spec.inner_mean = require_vector(dist, "inner_mean", context);
  if (dist.contains("outlier")) {
    const json& o = dist.at("outlier");
    check_keys(o, {"type", "halfwidth", "point", "scale"}, context + ".outlier");
    const std::string type = require<std::string>(o, "type", context + ".outlier");
    if (type == "uniform_box") {
      spec.outlier = OutlierKind::uniform_box;
      spec.outlier_scale = require<double>(o, "halfwidth", context + ".outlier");
    } else if (type == "point_mass") {
      spec.outlier = OutlierKind::point_mass;
      spec.outlier_point = require_vector(o, "point", context + ".outlier");
    } else if (type == "heavy_tail") {
      spec.outlier = OutlierKind::heavy_tail;
      spec.outlier_scale = require<double>(o, "scale", context + ".outlier");
    } else {
      throw ConfigError(context + ".outlier: unknown type '" + type + "'");
    }
  }
  const auto issues = spec.validate(d);
  if (!issues.empty()) {
    throw ConfigError(context + ": invalid field '" + issues.front().field +
                      "': " + issues.front().reason);
  }
  return spec;
}

CommandOutput cmd_sample(const RunConfig& cfg) {
  const std::string ctx = "sample.params";
  check_keys(cfg.params, {"n", "d", "dist", "quantize_delta", "binary_out"}, ctx);
  const long n = require<long>(cfg.params, "n", ctx);
  const int d = require<int>(cfg.params, "d", ctx);

  SampleMatrix m;
  if (!cfg.params.contains("dist")) {
    m = sample_standard_normal(n, d, cfg.master_seed);
  } else {
    const json& dist = cfg.params.at("dist");
    const std::string type = require<std::string>(dist, "type", ctx + ".dist");
    if (type == "standard_normal") {
      check_keys(dist, {"type"}, ctx + ".dist");
      m = sample_standard_normal(n, d, cfg.master_seed);
    } else if (type == "affine_normal") {
      check_keys(dist, {"type", "mean", "sigma"}, ctx + ".dist");
      const auto mean = dist.contains("mean") ? require_vector(dist, "mean", ctx + ".dist")
                                              : std::vector<double>(d, 0.0);
      m = sample_affine_normal(n, d, mean, require<double>(dist, "sigma", ctx + ".dist"),
                               cfg.master_seed);
    } else if (type == "containment") {
      m = sample_containment(n, d, parse_containment(dist, d, ctx + ".dist"), cfg.master_seed);
    } else {
      throw ConfigError(ctx + ".dist: unknown type '" + type + "'");
    }
  }
  if (cfg.params.contains("quantize_delta")) {
    m = quantize(m, require<double>(cfg.params, "quantize_delta", ctx));
  }
  if (cfg.params.contains("binary_out")) {
    write_matrix_binary_file(m, require<std::string>(cfg.params, "binary_out", ctx));
  }

  CommandOutput out;
  out.result = to_json(m);
  std::ostringstream csv;
  write_matrix_csv(m, csv);
  out.csv = csv.str();
  return out;
}

CommandOutput cmd_bounds(const RunConfig& cfg) {
  const std::string ctx = "bounds.params";
  check_keys(cfg.params, {"d", "n", "alpha", "epsilon", "log2_family_size", "c_const"}, ctx);
  const int d = require<int>(cfg.params, "d", ctx);
  const long n = require<long>(cfg.params, "n", ctx);
  const double alpha = require<double>(cfg.params, "alpha", ctx);
  const double epsilon = require<double>(cfg.params, "epsilon", ctx);
  const auto issues = ProblemParams::validate(d, n, epsilon, alpha);
  if (!issues.empty()) {
    throw ConfigError(ctx + ": invalid field '" + issues.front().field +
                      "': " + issues.front().reason);
  }
  const ProblemParams p{d, n, epsilon, alpha};
  const double lfs = value_or<double>(cfg.params, "log2_family_size", 0.0, ctx);
  const double c_const = value_or<double>(cfg.params, "c_const", kDefaultC, ctx);
  const BoundReport rep = make_bound_report(p, lfs, c_const);

  CommandOutput out;
  out.result = to_json(rep);
  std::ostringstream csv;
  csv << "entry,value,scale\n";
  for (const auto& [name, e] : rep.entries) {
    csv << name << ',' << fmt_double(e.value) << ',' << (e.log2_scale ? "log2" : "linear") << '\n';
  }
  out.csv = csv.str();
  return out;
}

CommandOutput cmd_solve(const RunConfig& cfg) {
  const std::string ctx = "solve.params";
  check_keys(cfg.params, {"instance", "z", "epsilon", "engine", "cardinality"}, ctx);
  const SampleMatrix m = read_matrix_file(require<std::string>(cfg.params, "instance", ctx));
  const std::vector<double> z = require_vector(cfg.params, "z", ctx);
  const double epsilon = require<double>(cfg.params, "epsilon", ctx);
  std::optional<int> cardinality;
  if (cfg.params.contains("cardinality")) {
    cardinality = require<int>(cfg.params, "cardinality", ctx);
  }
  const Engine engine = resolve_engine(cfg.params, m.n, m.d, false, ctx);
  const SearchResult r = engine == Engine::exhaustive
                             ? enumerate_exhaustive(m, z, epsilon, cardinality)
                             : meet_in_middle(m, z, epsilon, cardinality);

  CommandOutput out;
  out.result = to_json(r);
  std::ostringstream csv;
  csv << "found,error,engine,subset\n"
      << (r.found ? 1 : 0) << ',' << fmt_double(r.error) << ',' << engine_name(r.engine) << ',';
  for (std::size_t i = 0; i < r.subset.size(); ++i) {
    csv << (i ? "|" : "") << (r.subset[i] + 1);
  }
  csv << '\n';
  out.csv = csv.str();
  return out;
}

CommandOutput cmd_cover(const RunConfig& cfg) {
  const std::string ctx = "cover.params";
  check_keys(cfg.params, {"instance", "n", "d", "epsilon", "engine", "range_halfwidth"}, ctx);
  SampleMatrix m;
  if (cfg.params.contains("instance")) {
    m = read_matrix_file(require<std::string>(cfg.params, "instance", ctx));
  } else {
    m = sample_standard_normal(require<long>(cfg.params, "n", ctx),
                               require<int>(cfg.params, "d", ctx), cfg.master_seed);
  }
  const double epsilon = require<double>(cfg.params, "epsilon", ctx);
  const double halfwidth = value_or<double>(cfg.params, "range_halfwidth", 1.0, ctx);
  const Engine engine = resolve_engine(cfg.params, m.n, m.d, true, ctx);
  const CoverageReport rep = cover_grid(m, epsilon, engine, halfwidth);

  CommandOutput out;
  out.result = to_json(rep);
  std::ostringstream csv;
  csv << "point_index,error,covered\n";
  for (std::size_t i = 0; i < rep.per_point_errors.size(); ++i) {
    csv << i << ',' << fmt_double(rep.per_point_errors[i]) << ','
        << (rep.per_point_errors[i] <= epsilon ? 1 : 0) << '\n';
  }
  out.csv = csv.str();
  return out;
}

CommandOutput cmd_moments(const RunConfig& cfg) {
  const std::string ctx = "moments.params";
  check_keys(cfg.params,
             {"d", "n", "alpha", "epsilon", "family_size", "trials", "z", "max_attempts"}, ctx);
  const ProblemParams p = ProblemParams::checked(
      require<int>(cfg.params, "d", ctx), require<long>(cfg.params, "n", ctx),
      require<double>(cfg.params, "epsilon", ctx), require<double>(cfg.params, "alpha", ctx));
  const long family_size = require<long>(cfg.params, "family_size", ctx);
  const long trials = require<long>(cfg.params, "trials", ctx);
  const long max_attempts = value_or<long>(cfg.params, "max_attempts", 1000L, ctx);
  std::vector<double> z(static_cast<std::size_t>(p.d), 0.0);
  if (cfg.params.contains("z")) z = require_vector(cfg.params, "z", ctx);

  const SubsetFamily fam =
      build_family(p.n, p.alpha, family_size, derive_seed(cfg.master_seed, 1), max_attempts);
  const auto [mean_s, var_s] =
      estimate_moments(p, fam, z, trials, derive_seed(cfg.master_seed, 2), cfg.workers);

  CommandOutput out;
  out.result = json{{"mean", to_json(mean_s)},
                    {"variance", to_json(var_s)},
                    {"family",
                     {{"size", fam.size()},
                      {"member_size", fam.member_size},
                      {"certified_max_intersection", fam.certified_max_intersection},
                      {"attempts", fam.build_stats.attempts}}}};
  out.csv = trial_csv({mean_s, var_s});
  out.trials = {mean_s, var_s};
  return out;
}

CommandOutput cmd_joint(const RunConfig& cfg) {
  const std::string ctx = "joint.params";
  check_keys(cfg.params, {"d", "n", "alpha", "epsilon", "intersection", "z", "trials"}, ctx);
  const int d = require<int>(cfg.params, "d", ctx);
  const long n = require<long>(cfg.params, "n", ctx);
  const double alpha = require<double>(cfg.params, "alpha", ctx);
  const double epsilon = require<double>(cfg.params, "epsilon", ctx);
  const long intersection = require<long>(cfg.params, "intersection", ctx);
  const long trials = require<long>(cfg.params, "trials", ctx);
  std::vector<double> z(static_cast<std::size_t>(d), 0.0);
  if (cfg.params.contains("z")) z = require_vector(cfg.params, "z", ctx);

  const TrialSummary s = estimate_joint_prob(d, n, alpha, epsilon, intersection, z, trials,
                                             cfg.master_seed, cfg.workers);
  CommandOutput out;
  out.result = to_json(s);
  out.csv = trial_csv({s});
  out.trials = {s};
  return out;
}

CommandOutput cmd_sweep(const RunConfig& cfg) {
  const std::string ctx = "sweep.params";
  check_keys(cfg.params,
             {"axis", "grid", "d", "n", "alpha", "epsilon", "trials", "experiment", "engine"},
             ctx);
  const SweepAxis axis = sweep_axis_from_name(require<std::string>(cfg.params, "axis", ctx));
  const std::vector<double> grid = require_vector(cfg.params, "grid", ctx);
  const ProblemParams base = ProblemParams::checked(
      require<int>(cfg.params, "d", ctx), require<long>(cfg.params, "n", ctx),
      require<double>(cfg.params, "epsilon", ctx), require<double>(cfg.params, "alpha", ctx));
  const long trials = require<long>(cfg.params, "trials", ctx);
  const std::string experiment = value_or<std::string>(cfg.params, "experiment", "coverage", ctx);
  SweepExperiment exp;
  if (experiment == "coverage") {
    exp = SweepExperiment::coverage;
  } else if (experiment == "single_subset") {
    exp = SweepExperiment::single_subset;
  } else {
    throw ConfigError(ctx + ": unknown experiment '" + experiment + "'");
  }
  std::optional<Engine> engine;
  if (cfg.params.contains("engine") &&
      cfg.params.at("engine").get<std::string>() != "auto") {
    engine = engine_from_name(cfg.params.at("engine").get<std::string>());
  }

  const auto summaries =
      sweep(axis, grid, base, trials, cfg.master_seed, exp, engine, cfg.workers);
  CommandOutput out;
  out.result = json::array();
  for (const auto& s : summaries) out.result.push_back(to_json(s));
  out.csv = trial_csv(summaries);
  out.trials = summaries;
  return out;
}

CommandOutput cmd_claims(const RunConfig& cfg) {
  const std::string ctx = "claims.params";
  check_keys(cfg.params, {"draws", "quadrature_points"}, ctx);
  const long draws = require<long>(cfg.params, "draws", ctx);
  const int qp = value_or<int>(cfg.params, "quadrature_points", 32, ctx);
  const auto reports = verify_appendix_claims(draws, cfg.master_seed, qp, cfg.workers);

  CommandOutput out;
  out.result = json::array();
  std::ostringstream csv;
  csv << "claim_id,draws,violations,worst_margin\n";
  for (const auto& r : reports) {
    out.result.push_back(to_json(r));
    csv << r.claim_id << ',' << r.draws << ',' << r.violations << ','
        << fmt_double(r.worst_margin) << '\n';
  }
  out.csv = csv.str();
  return out;
}

CommandOutput cmd_nne_demo(const RunConfig& cfg) {
  const std::string ctx = "nne-demo.params";
  check_keys(cfg.params, {"n", "layers", "width", "epsilon", "engine", "inputs", "target"}, ctx);
  const long n = require<long>(cfg.params, "n", ctx);
  const int layers = require<int>(cfg.params, "layers", ctx);
  const int width = require<int>(cfg.params, "width", ctx);
  const double epsilon = require<double>(cfg.params, "epsilon", ctx);

  const GeneBank bank = sample_genes(n, layers, width, cfg.master_seed);
  NetTensor target;
  target.layers = layers;
  target.width = width;
  const std::size_t entry_count = bank.gene_size();
  if (cfg.params.contains("target")) {
    target.entries = require_vector(cfg.params, "target", ctx);
    if (target.entries.size() != entry_count) {
      throw ConfigError(ctx + ": key 'target' must hold layers*width*width entries");
    }
  } else {
    Xoshiro256pp rng(derive_seed(cfg.master_seed, 1));
    target.entries.resize(entry_count);
    for (auto& v : target.entries) v = 2.0 * rng.next_double() - 1.0;
  }

  const std::string engine_nm = value_or<std::string>(cfg.params, "engine", "auto", ctx);
  const Engine engine = engine_nm == "auto" ? auto_engine(n, static_cast<int>(entry_count), false)
                                            : engine_from_name(engine_nm);
  const GenotypeResult res = find_genotype(bank, target, epsilon, engine);
  const NetTensor approx = genotype_tensor(bank, res.genotype);

  std::vector<std::vector<double>> inputs;
  if (cfg.params.contains("inputs")) {
    for (const auto& row : cfg.params.at("inputs")) {
      std::vector<double> y;
      for (const auto& v : row) y.push_back(v.get<double>());
      if (y.size() != static_cast<std::size_t>(width)) {
        throw ConfigError(ctx + ": each input must have 'width' coordinates");
      }
      inputs.push_back(std::move(y));
    }
  } else {
    inputs.push_back(std::vector<double>(static_cast<std::size_t>(width), 1.0));
  }

  json comparisons = json::array();
  for (const auto& y : inputs) {
    const auto target_out = forward(target, y);
    const auto approx_out = forward(approx, y);
    comparisons.push_back(
        {{"input", y},
         {"target_output", target_out},
         {"genotype_output", approx_out},
         {"max_output_diff", linf_distance(target_out, approx_out)},
         {"propagated_bound", forward_error_bound(approx, y, res.max_entry_error)}});
  }

  CommandOutput out;
  out.result = json{{"genotype", to_json(res)},
                    {"tolerance", 2.0 * epsilon},
                    {"target_max_abs_entry", target.max_abs_entry()},
                    {"required_genes_at_scale", required_genes(layers, width, epsilon)},
                    {"forward_comparisons", std::move(comparisons)}};
  return out;
}

CommandOutput cmd_walk(const RunConfig& cfg) {
  const std::string ctx = "walk.params";
  check_keys(cfg.params, {"d", "steps", "dedup_cell", "targets", "budget"}, ctx);
  const int d = require<int>(cfg.params, "d", ctx);
  const int steps = require<int>(cfg.params, "steps", ctx);
  const double dedup_cell = value_or<double>(cfg.params, "dedup_cell", 0.0, ctx);
  const std::size_t budget =
      static_cast<std::size_t>(value_or<long>(cfg.params, "budget", 1L << 24, ctx));
  std::vector<std::vector<double>> targets;
  if (cfg.params.contains("targets")) {
    for (const auto& row : cfg.params.at("targets")) {
      std::vector<double> t;
      for (const auto& v : row) t.push_back(v.get<double>());
      if (t.size() != static_cast<std::size_t>(d)) {
        throw ConfigError(ctx + ": each target must have d coordinates");
      }
      targets.push_back(std::move(t));
    }
  }

  const WalkTrajectory traj = run_walk(d, steps, cfg.master_seed, dedup_cell, targets, budget);
  CommandOutput out;
  out.result = to_json(traj);
  std::ostringstream csv;
  csv << "t,frontier_size";
  for (std::size_t k = 0; k < targets.size(); ++k) csv << ",dist_target_" << k;
  csv << '\n';
  for (std::size_t t = 0; t < traj.frontier_size.size(); ++t) {
    csv << (t + 1) << ',' << traj.frontier_size[t];
    for (std::size_t k = 0; k < targets.size(); ++k) {
      csv << ',' << fmt_double(traj.min_distance[k][t]);
    }
    csv << '\n';
  }
  out.csv = csv.str();
  return out;
}

}  // namespace

json RunConfig::resolved() const {
  return json{{"command", command},
              {"params", params},
              {"seed", master_seed},
              {"out", output_path},
              {"format", format},
              {"workers", workers}};
}

RunConfig parse_config(const json& j) {
  check_keys(j, {"command", "params", "seed", "out", "format", "workers"}, "config");
  RunConfig cfg;
  cfg.command = require<std::string>(j, "command", "config");
  if (std::find(kCommands.begin(), kCommands.end(), cfg.command) == kCommands.end()) {
    throw ConfigError("config: unknown command '" + cfg.command + "'");
  }
  if (j.contains("params")) {
    if (!j.at("params").is_object()) throw ConfigError("config: 'params' must be an object");
    cfg.params = j.at("params");
  }
  cfg.master_seed = value_or<std::uint64_t>(j, "seed", 0, "config");
  cfg.output_path = value_or<std::string>(j, "out", "", "config");
  cfg.format = value_or<std::string>(j, "format", "json", "config");
  if (cfg.format != "json" && cfg.format != "csv") {
    throw ConfigError("config: 'format' must be 'csv' or 'json'");
  }
  cfg.workers = value_or<int>(j, "workers", 1, "config");
  if (cfg.workers < 1) throw ConfigError("config: 'workers' must be >= 1");
  return cfg;
}

int run(const RunConfig& cfg) {
  CommandOutput out;
  try {
    if (cfg.command == "sample") {
      out = cmd_sample(cfg);
    } else if (cfg.command == "bounds") {
      out = cmd_bounds(cfg);
    } else if (cfg.command == "solve") {
      out = cmd_solve(cfg);
    } else if (cfg.command == "cover") {
      out = cmd_cover(cfg);
    } else if (cfg.command == "moments") {
      out = cmd_moments(cfg);
    } else if (cfg.command == "joint") {
      out = cmd_joint(cfg);
    } else if (cfg.command == "sweep") {
      out = cmd_sweep(cfg);
    } else if (cfg.command == "claims") {
      out = cmd_claims(cfg);
    } else if (cfg.command == "nne-demo") {
      out = cmd_nne_demo(cfg);
    } else if (cfg.command == "walk") {
      out = cmd_walk(cfg);
    } else {
      throw ConfigError("config: unknown command '" + cfg.command + "'");
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::runtime_error& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitIo;
  }

  std::string body;
  if (cfg.format == "json") {
    const json doc{{"config", cfg.resolved()}, {"result", out.result}};
    body = doc.dump(2);
    body.push_back('\n');
  } else {
    if (out.csv.empty()) {
      std::cerr << "config error: command '" << cfg.command << "' has no csv format\n";
      return kExitConfig;
    }
    body = "# config: " + cfg.resolved().dump() + "\n" + out.csv;
  }

  try {
    write_text_atomic(cfg.output_path, body);
  } catch (const std::exception& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitIo;
  }

  for (const auto& s : out.trials) {
    if (verdict_failed(s)) return kExitVerdict;
  }
  return kExitOk;
}

int run_config_file(const std::string& path, const CliOverrides& overrides) {
  json doc;
  {
    std::ifstream in(path);
    if (!in) {
      std::cerr << "io error: cannot open config file: " << path << "\n";
      return kExitIo;
    }
    try {
      in >> doc;
    } catch (const json::exception& e) {
      std::cerr << "config error: invalid JSON in " << path << ": " << e.what() << "\n";
      return kExitConfig;
    }
  }
  RunConfig cfg;
  try {
    cfg = parse_config(doc);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  }
  if (overrides.seed) cfg.master_seed = *overrides.seed;
  if (overrides.out) cfg.output_path = *overrides.out;
  if (overrides.format) {
    cfg.format = *overrides.format;
    if (cfg.format != "json" && cfg.format != "csv") {
      std::cerr << "config error: 'format' must be 'csv' or 'json'\n";
      return kExitConfig;
    }
  }
  if (overrides.workers) cfg.workers = *overrides.workers;
  return run(cfg);
}

}  // namespace rss
