// JSON serialization of library types. Index sets are serialized 1-based
// (ground set {1, ..., n}); in-memory representations are 0-based.

#ifndef RSS_JSON_IO_HPP
#define RSS_JSON_IO_HPP

#include <json.hpp>

#include "rss/bounds.hpp"
#include "rss/core.hpp"
#include "rss/experiments.hpp"
#include "rss/family.hpp"
#include "rss/nne.hpp"
#include "rss/search.hpp"
#include "rss/walks.hpp"

namespace rss {

using json = nlohmann::json;

json to_json(const ProblemParams& p);
json to_json(const SampleMatrix& m, bool include_values = true);
json to_json(const SubsetFamily& f);
SubsetFamily family_from_json(const json& j);
json to_json(const SearchResult& r);
json to_json(const CoverageReport& r);
json to_json(const TrialSummary& s);
json to_json(const BoundReport& r);
json to_json(const ClaimCheckReport& r);
json to_json(const WalkTrajectory& t);
json to_json(const GenotypeResult& g);

std::string engine_name(Engine e);
Engine engine_from_name(const std::string& name);

}  // namespace rss

#endif  // RSS_JSON_IO_HPP
