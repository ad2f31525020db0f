#include "tverberg/json_io.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <set>
#include <stdexcept>

namespace tverberg {

namespace {

std::vector<Rational> rationals_from_json(const Json& j) {
  std::vector<Rational> out;
  for (const auto& v : j) out.push_back(parse_rational(v.get<std::string>()));
  return out;
}

Json rationals_to_json(const std::vector<Rational>& values) {
  Json j = Json::array();
  for (const auto& v : values) j.push_back(to_string(v));
  return j;
}

}  // namespace

Json rvector_to_json(const RVector& v) {
  Json j = Json::array();
  for (const auto& c : v) j.push_back(to_string(c));
  return j;
}

RVector rvector_from_json(const Json& j) {
  RVector v(j.size());
  std::size_t i = 0;
  for (const auto& c : j) v[i++] = parse_rational(c.get<std::string>());
  return v;
}

Json frame_to_json(const SimplexFrame& frame) {
  Json j;
  j["d"] = frame.dimension();
  Json vertices = Json::array();
  for (const auto& v : frame.vertices()) vertices.push_back(rvector_to_json(v));
  j["vertices"] = vertices;
  return j;
}

SimplexFrame frame_from_json(const Json& j) {
  std::vector<RVector> vertices;
  for (const auto& v : j.at("vertices")) vertices.push_back(rvector_from_json(v));
  SimplexFrame frame(std::move(vertices));
  if (frame.dimension() != j.at("d").get<int>())
    throw std::invalid_argument("frame dimension disagrees with vertices");
  return frame;
}

Json config_to_json(const RayConfiguration& config) {
  if (config.frame() != SimplexFrame::standard(config.dimension()))
    throw std::invalid_argument(
        "configuration files require the standard frame");
  Json j;
  j["d"] = config.dimension();
  j["r"] = config.r();
  Json heights = Json::array();
  for (const auto& ray : config.heights())
    heights.push_back(rationals_to_json(ray));
  j["heights"] = heights;
  Json offsets = Json::array();
  for (int i = 0; i < config.point_count(); ++i) {
    if (!config.perturbed(i)) continue;
    const PointId id = config.id_of(i);
    Json entry;
    entry["ray"] = id.ray;
    entry["level"] = id.level;
    entry["offset"] = rvector_to_json(config.offset(i));
    offsets.push_back(entry);
  }
  j["offsets"] = offsets;
  if (config.seed()) j["seed"] = *config.seed();
  return j;
}

RayConfiguration config_from_json(const Json& j) {
  const int d = j.at("d").get<int>();
  const int r = j.at("r").get<int>();
  std::vector<std::vector<Rational>> heights;
  for (const auto& ray : j.at("heights"))
    heights.push_back(rationals_from_json(ray));
  RayConfiguration config(SimplexFrame::standard(d), r, std::move(heights));
  if (j.contains("offsets")) {
    for (const auto& entry : j.at("offsets")) {
      PerturbationMove move;
      move.target = PointId{entry.at("ray").get<int>(),
                            entry.at("level").get<int>()};
      move.direction = rvector_from_json(entry.at("offset"));
      move.magnitude = 1;
      config = config.apply_move(move);
    }
  }
  if (j.contains("seed")) config.set_seed(j.at("seed").get<std::uint64_t>());
  return config;
}

Json cloud_to_json(const PointCloud& cloud) {
  Json j;
  j["d"] = cloud.d;
  Json points = Json::array();
  for (const auto& p : cloud.points) points.push_back(rvector_to_json(p));
  j["points"] = points;
  return j;
}

PointCloud cloud_from_json(const Json& j) {
  PointCloud cloud;
  cloud.d = j.at("d").get<int>();
  for (const auto& p : j.at("points")) {
    cloud.points.push_back(rvector_from_json(p));
    if (cloud.points.back().size() != static_cast<std::size_t>(cloud.d))
      throw std::invalid_argument("point dimension mismatch in cloud");
  }
  return cloud;
}

Json certificate_to_json(const IntersectionCertificate& cert) {
  Json j;
  if (cert.verdict == Verdict::nonempty) {
    j["verdict"] = "nonempty";
    j["point"] = rvector_to_json(cert.common_point);
    Json coeffs = Json::array();
    for (const auto& set : cert.coefficients)
      coeffs.push_back(rationals_to_json(set));
    j["coefficients"] = coeffs;
  } else {
    j["verdict"] = "empty";
    j["multipliers"] = rationals_to_json(cert.infeasibility_multipliers);
  }
  return j;
}

IntersectionCertificate certificate_from_json(const Json& j) {
  IntersectionCertificate cert;
  if (j.at("verdict").get<std::string>() == "nonempty") {
    cert.verdict = Verdict::nonempty;
    cert.common_point = rvector_from_json(j.at("point"));
    for (const auto& set : j.at("coefficients"))
      cert.coefficients.push_back(rationals_from_json(set));
  } else {
    cert.verdict = Verdict::empty;
    cert.infeasibility_multipliers =
        rationals_from_json(j.at("multipliers"));
  }
  return cert;
}

Json report_to_json(const VerificationReport& report, const Json& manifest) {
  Json j;
  j["manifest"] = manifest;
  j["config_hash"] = report.config_hash;
  j["r"] = report.r;
  j["k"] = report.k;
  j["shard"] = std::to_string(report.shard_index) + "/" +
               std::to_string(report.shard_total);
  j["total"] = report.total;
  j["good"] = report.good;
  j["bad"] = report.bad;
  Json witnesses = Json::array();
  for (const auto& w : report.bad_witnesses) {
    Json entry;
    entry["partition"] = w.partition;
    entry["tuple"] = w.tuple;
    entry["certificate"] = certificate_to_json(w.certificate);
    witnesses.push_back(entry);
  }
  j["bad_witnesses"] = witnesses;
  Json histogram;
  for (const auto& [key, count] : report.min_empty_k_histogram)
    histogram[key] = count;
  j["min_empty_k_histogram"] = histogram;
  j["genericity_violations"] = report.genericity_violations;
  j["elapsed_ms"] = report.elapsed_ms;
  return j;
}

Json search_result_to_json(const SearchResult& result, int r, int k,
                           const Json& manifest) {
  Json j;
  j["manifest"] = manifest;
  j["r"] = r;
  j["k"] = k;
  j["verdict"] = result.found ? "found" : "none";
  if (result.found) {
    j["partition"] = result.partition->str();
    Json certs = Json::array();
    for (const auto& [tuple, cert] : result.certificates) {
      Json entry;
      entry["tuple"] = tuple;
      entry["certificate"] = certificate_to_json(cert);
      certs.push_back(entry);
    }
    j["certificates"] = certs;
  }
  return j;
}

Json audit_to_json(const WeightAudit& audit, const RayConfiguration& config,
                   int k, const Json& manifest) {
  Json j;
  j["manifest"] = manifest;
  j["config_hash"] = config_hash(config);
  j["r"] = config.r();
  j["k"] = k;
  j["partitions_checked"] = audit.partitions_checked;
  j["tuples_skipped"] = audit.tuples_skipped;
  j["ray_weight_bound"] = to_string(Rational(binomial(config.r() - 1, k)));
  Json per_ray = Json::array();
  for (std::size_t ray = 0; ray < audit.max_ray_weight.size(); ++ray) {
    Json entry;
    entry["ray"] = ray;
    entry["max_weight_sum"] = audit.max_ray_weight[ray];
    per_ray.push_back(entry);
  }
  j["max_ray_weight"] = per_ray;
  Json buba = Json::array();
  for (const auto& [partition, tuple] : audit.buba_violations) {
    Json entry;
    entry["partition"] = partition;
    entry["tuple"] = tuple;
    buba.push_back(entry);
  }
  j["buba_violations"] = buba;
  Json baba = Json::array();
  for (const auto& [partition, ray] : audit.baba_violations) {
    Json entry;
    entry["partition"] = partition;
    entry["ray"] = ray;
    baba.push_back(entry);
  }
  j["baba_violations"] = baba;
  j["elapsed_ms"] = audit.elapsed_ms;
  return j;
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

std::string fnv1a64_hex(std::string_view data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(h));
  return std::string(buf);
}

std::string config_hash(const RayConfiguration& config) {
  return fnv1a64_hex(canonical_dump(config_to_json(config)));
}

Json make_manifest(
    const std::string& command,
    const std::vector<std::pair<std::string, std::string>>& input_hashes,
    std::optional<std::uint64_t> seed, const std::string& shard, int jobs,
    bool deterministic_timestamp) {
  Json manifest;
  manifest["command"] = command;
  Json inputs;
  for (const auto& [path, hash] : input_hashes) inputs[path] = hash;
  manifest["inputs"] = inputs;
  if (seed) manifest["seed"] = *seed;
  manifest["shard"] = shard;
  manifest["jobs"] = jobs;
  manifest["tool_version"] = TVERBERG_VERSION;
  if (deterministic_timestamp) {
    manifest["timestamp"] = "1970-01-01T00:00:00Z";
  } else {
    const std::time_t now =
        std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    manifest["timestamp"] = buf;
  }
  return manifest;
}

Json merge_reports(const std::vector<Json>& reports, const Json& manifest) {
  if (reports.empty()) throw std::invalid_argument("nothing to merge");
  const std::string hash = reports.front().at("config_hash");
  const int r = reports.front().at("r");
  const int k = reports.front().at("k");
  int shard_total = -1;
  std::set<int> seen;
  for (const auto& report : reports) {
    if (report.at("config_hash") != hash)
      throw std::invalid_argument("config hash mismatch between shards");
    if (report.at("r") != r || report.at("k") != k)
      throw std::invalid_argument("r/k mismatch between shards");
    const std::string shard = report.at("shard");
    const auto slash = shard.find('/');
    const int index = std::stoi(shard.substr(0, slash));
    const int total = std::stoi(shard.substr(slash + 1));
    if (shard_total < 0) shard_total = total;
    if (total != shard_total)
      throw std::invalid_argument("shard totals disagree");
    if (!seen.insert(index).second)
      throw std::invalid_argument("duplicate shard");
  }
  if (static_cast<int>(seen.size()) != shard_total ||
      *seen.begin() != 0 || *seen.rbegin() != shard_total - 1)
    throw std::invalid_argument("incomplete shard set");

  Json merged;
  merged["manifest"] = manifest;
  merged["config_hash"] = hash;
  merged["r"] = r;
  merged["k"] = k;
  merged["shard"] = "0/1";
  std::uint64_t total = 0, good = 0, bad = 0, degenerate = 0;
  std::int64_t elapsed = 0;
  std::map<std::string, std::uint64_t> histogram;
  std::vector<Json> witnesses;
  for (const auto& report : reports) {
    total += report.at("total").get<std::uint64_t>();
    good += report.at("good").get<std::uint64_t>();
    bad += report.at("bad").get<std::uint64_t>();
    degenerate += report.at("genericity_violations").get<std::uint64_t>();
    elapsed += report.at("elapsed_ms").get<std::int64_t>();
    for (const auto& [key, count] : report.at("min_empty_k_histogram").items())
      histogram[key] += count.get<std::uint64_t>();
    for (const auto& w : report.at("bad_witnesses")) witnesses.push_back(w);
  }
  std::sort(witnesses.begin(), witnesses.end(),
            [](const Json& a, const Json& b) {
              const auto ka = std::make_pair(a.at("partition").get<std::string>(),
                                             a.at("tuple").get<std::vector<int>>());
              const auto kb = std::make_pair(b.at("partition").get<std::string>(),
                                             b.at("tuple").get<std::vector<int>>());
              return ka < kb;
            });
  merged["total"] = total;
  merged["good"] = good;
  merged["bad"] = bad;
  merged["bad_witnesses"] = witnesses;
  Json hist;
  for (const auto& [key, count] : histogram) hist[key] = count;
  merged["min_empty_k_histogram"] = hist;
  merged["genericity_violations"] = degenerate;
  merged["elapsed_ms"] = elapsed;
  return merged;
}

}  // namespace tverberg
