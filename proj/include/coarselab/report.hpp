#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "coarselab/boundary.hpp"
#include "coarselab/centroids.hpp"
#include "coarselab/filling.hpp"
#include "coarselab/hyperbolicity.hpp"
#include "coarselab/rich.hpp"
#include "coarselab/rigidity.hpp"

namespace coarselab {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// A fresh report object whose first key is "schema".
Json report_root();

/// Reals as JSON numbers; infinities as the string "inf".
Json real_json(double value);
Json matrix_json(const SquareMatrix& m);

Json to_json(const SampleSpec& spec);
Json to_json(const HyperbolicityReport& report);
Json filling_sidecar(const FillingGraph& filling);
Json to_json(const PerfectnessProfile& profile, const std::vector<std::string>& labels);
Json to_json(const CoverageReport& report);
Json to_json(const QiFit& fit);
Json to_json(const SegmentSchedule& schedule);
Json to_json(const RigidityReport& report);
Json to_json(const RichConstants& constants);
Json to_json(const RichWitnessReport& report, std::size_t failure_limit = 100);

/// Two-space indented text with a trailing newline.
std::string dump(const Json& json);

}  // namespace coarselab
