#include "rss/json_io.hpp"

#include "rss/matrix_io.hpp"

namespace rss {

namespace {

json subsets_1based(const std::vector<std::vector<std::int32_t>>& subsets) {
  json arr = json::array();
  for (const auto& s : subsets) {
    json row = json::array();
    for (const auto i : s) row.push_back(i + 1);
    arr.push_back(std::move(row));
  }
  return arr;
}

}  // namespace

std::string engine_name(Engine e) {
  switch (e) {
    case Engine::exhaustive: return "exhaustive";
    case Engine::meet_in_middle: return "mim";
    case Engine::frontier: return "frontier";
  }
  return "unknown";
}

Engine engine_from_name(const std::string& name) {
  if (name == "exhaustive") return Engine::exhaustive;
  if (name == "mim" || name == "meet_in_middle") return Engine::meet_in_middle;
  if (name == "frontier") return Engine::frontier;
  throw std::invalid_argument("unknown engine: " + name);
}

json to_json(const ProblemParams& p) {
  return json{{"d", p.d},
              {"n", p.n},
              {"epsilon", p.epsilon},
              {"alpha", p.alpha},
              {"subset_size", p.subset_size()},
              {"intersection_cap", p.intersection_cap()}};
}

json to_json(const SampleMatrix& m, bool include_values) {
  json j{{"n", m.n}, {"d", m.d}, {"seed", m.seed}, {"tag", dist_kind_name(m.tag.kind)}};
  if (m.tag.kind == DistKind::affine_normal) {
    j["mean"] = m.tag.mean;
    j["sigma"] = m.tag.sigma;
  }
  if (m.tag.kind == DistKind::quantized) {
    j["source_tag"] = dist_kind_name(m.tag.source_kind);
    j["delta"] = m.tag.delta;
  }
  if (include_values) j["values"] = m.values;
  if (!m.inner_rows.empty()) {
    long inner = 0;
    for (const auto b : m.inner_rows) inner += b;
    j["inner_row_count"] = inner;
  }
  return j;
}

json to_json(const SubsetFamily& f) {
  return json{{"n", f.n},
              {"member_size", f.member_size},
              {"certified_max_intersection", f.certified_max_intersection},
              {"subsets", subsets_1based(f.subsets)},
              {"build_stats",
               {{"attempts", f.build_stats.attempts},
                {"rejected_pairs", f.build_stats.rejected_pairs}}}};
}

SubsetFamily family_from_json(const json& j) {
  SubsetFamily f;
  f.n = j.at("n").get<long>();
  f.member_size = j.at("member_size").get<long>();
  f.certified_max_intersection = j.at("certified_max_intersection").get<long>();
  for (const auto& row : j.at("subsets")) {
    std::vector<std::int32_t> s;
    for (const auto& v : row) s.push_back(v.get<std::int32_t>() - 1);
    f.subsets.push_back(std::move(s));
  }
  if (j.contains("build_stats")) {
    f.build_stats.attempts = j["build_stats"].value("attempts", 0L);
    f.build_stats.rejected_pairs = j["build_stats"].value("rejected_pairs", 0L);
  }
  return f;
}

json to_json(const SearchResult& r) {
  json subset = json::array();
  for (const auto i : r.subset) subset.push_back(i + 1);
  return json{{"found", r.found},
              {"subset", std::move(subset)},
              {"achieved", r.achieved},
              {"error", r.error},
              {"engine", engine_name(r.engine)},
              {"stats", {{"candidates_examined", r.stats.candidates_examined}}}};
}

json to_json(const CoverageReport& r) {
  json j{{"grid_step", r.grid_step},
         {"total_points", r.total_points},
         {"covered_points", r.covered_points},
         {"fully_covered", r.fully_covered()},
         {"axis", r.axis},
         {"max_error", r.max_error()},
         {"per_point_errors", r.per_point_errors}};
  if (r.first_uncovered) {
    j["first_uncovered"] = *r.first_uncovered;
  } else {
    j["first_uncovered"] = nullptr;
  }
  return j;
}

json to_json(const TrialSummary& s) {
  json j{{"experiment", s.experiment},
         {"params", s.params},
         {"trials", s.trials},
         {"estimate", s.estimate},
         {"stderr", s.std_error},
         {"ci_halfwidth", s.ci_halfwidth},
         {"bounds_scale", "linear"},
         {"verdict", verdict_name(s.verdict)}};
  j["bound_lower"] = s.bound_lower ? json(*s.bound_lower) : json(nullptr);
  j["bound_upper"] = s.bound_upper ? json(*s.bound_upper) : json(nullptr);
  return j;
}

json to_json(const BoundReport& r) {
  json entries = json::object();
  for (const auto& [name, e] : r.entries) {
    entries[name] = {{"value", e.value}, {"scale", e.log2_scale ? "log2" : "linear"}};
  }
  json flags = json::object();
  for (const auto& [name, f] : r.hypothesis_flags) {
    flags[name] = {{"satisfied", f.satisfied},
                   {"margin", f.margin},
                   {"failed_conditions", f.failed_conditions}};
  }
  return json{{"params", to_json(r.params)},
              {"log2_family_size", r.log2_family_size},
              {"entries", std::move(entries)},
              {"hypothesis_flags", std::move(flags)}};
}

json to_json(const ClaimCheckReport& r) {
  json ranges = json::object();
  for (const auto& [name, range] : r.parameter_ranges) {
    ranges[name] = {range.first, range.second};
  }
  return json{{"claim_id", r.claim_id},
              {"draws", r.draws},
              {"violations", r.violations},
              {"worst_margin", r.worst_margin},
              {"parameter_ranges", std::move(ranges)}};
}

json to_json(const WalkTrajectory& t) {
  return json{{"frontier_size", t.frontier_size}, {"min_distance", t.min_distance}};
}

json to_json(const GenotypeResult& g) {
  json bits = json::array();
  for (const auto b : g.genotype.bits) bits.push_back(static_cast<int>(b));
  return json{{"found", g.found},
              {"genotype", std::move(bits)},
              {"max_entry_error", g.max_entry_error},
              {"candidates_examined", g.raw.stats.candidates_examined}};
}

}  // namespace rss
