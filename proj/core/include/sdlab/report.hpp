#pragma once

#include <nlohmann/json.hpp>

#include "sdlab/depth.hpp"
#include "sdlab/hilbert.hpp"
#include "sdlab/poset.hpp"
#include "sdlab/sdepth.hpp"
#include "sdlab/surgery.hpp"
#include "sdlab/verdicts.hpp"

namespace sdlab {

using nlohmann::json;

json to_json(const QuotientPair& q);
json to_json(const StrataReport& st);
json to_json(const Partition& p);
json to_json(const SdepthResult& r);
json to_json(const DepthResult& r);
json to_json(const HdepthResult& r);
json to_json(const Verdict& v);
json to_json(const std::vector<Verdict>& vs);
json to_json(const AuditRecord& rec);
json to_json(const SurgeryOutcome& outcome);
json to_json(const DriverRun& run);

/// Full analysis of one instance: strata, sdepth, depth, hdepth1, verdicts,
/// audit and the sdepth ≥ depth observation.
json analyze_report(const QuotientPair& q, const SearchLimits& limits = {});

/// Text rendering of analyze_report.
std::string render_text(const json& report);

}  // namespace sdlab
