#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "tverberg/ray_config.hpp"
#include "tverberg/search.hpp"
#include "tverberg/verifier.hpp"

namespace tverberg {

// Ordered keys end to end, rational values as canonical "p/q" strings and
// never floating point, so equal inputs dump to identical bytes.
using Json = nlohmann::ordered_json;

Json rvector_to_json(const RVector& v);
RVector rvector_from_json(const Json& j);

Json frame_to_json(const SimplexFrame& frame);
SimplexFrame frame_from_json(const Json& j);

// Configuration files fix the standard frame; serializing a configuration
// built on any other frame throws.
Json config_to_json(const RayConfiguration& config);
RayConfiguration config_from_json(const Json& j);

Json cloud_to_json(const PointCloud& cloud);
PointCloud cloud_from_json(const Json& j);

Json certificate_to_json(const IntersectionCertificate& cert);
IntersectionCertificate certificate_from_json(const Json& j);

Json report_to_json(const VerificationReport& report, const Json& manifest);

Json search_result_to_json(const SearchResult& result, int r, int k,
                           const Json& manifest);

Json audit_to_json(const WeightAudit& audit, const RayConfiguration& config,
                   int k, const Json& manifest);

std::string canonical_dump(const Json& j);

std::string fnv1a64_hex(std::string_view data);

// Digest of the canonical configuration JSON; shard reports with different
// hashes refuse to merge.
std::string config_hash(const RayConfiguration& config);

Json make_manifest(
    const std::string& command,
    const std::vector<std::pair<std::string, std::string>>& input_hashes,
    std::optional<std::uint64_t> seed, const std::string& shard, int jobs,
    bool deterministic_timestamp);

// Combines a complete set of shard reports (all of 0/N .. N-1/N, same
// config hash, r and k) into one full report.  Throws on any mismatch.
Json merge_reports(const std::vector<Json>& reports, const Json& manifest);

}  // namespace tverberg
