#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "tverberg/json_io.hpp"

namespace {

using namespace tverberg;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

void emit(const std::optional<std::string>& path, const Json& document) {
  const auto text = canonical_dump(document);
  if (path)
    write_file(*path, text);
  else
    std::cout << text;
}

std::optional<std::uint64_t> env_seed() {
  const char* value = std::getenv("TVERBERG_SEED");
  if (!value || !*value) return std::nullopt;
  return std::strtoull(value, nullptr, 10);
}

struct ShardSpec {
  int index = 0;
  int total = 1;
};

ShardSpec parse_shard(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos)
    throw CLI::ValidationError("--shard", "expected i/N");
  ShardSpec spec;
  spec.index = std::stoi(text.substr(0, slash));
  spec.total = std::stoi(text.substr(slash + 1));
  if (spec.total < 1 || spec.index < 0 || spec.index >= spec.total)
    throw CLI::ValidationError("--shard", "need 0 <= i < N");
  return spec;
}

std::string shard_string(const ShardSpec& spec) {
  return std::to_string(spec.index) + "/" + std::to_string(spec.total);
}

RayConfiguration load_config(const std::string& path) {
  return config_from_json(Json::parse(read_file(path)));
}

int run_construct(int d, int r, const std::string& heights_file,
                  std::optional<std::uint64_t> seed,
                  const std::optional<std::string>& out) {
  if (!seed) seed = env_seed();
  std::vector<std::vector<Rational>> heights;
  if (seed) {
    heights = seeded_heights(d, r, *seed);
  } else if (!heights_file.empty()) {
    for (const auto& ray : Json::parse(read_file(heights_file))) {
      std::vector<Rational> row;
      for (const auto& h : ray) row.push_back(parse_rational(h.get<std::string>()));
      heights.push_back(std::move(row));
    }
  } else {
    heights = default_heights(d, r);
  }
  RayConfiguration config(SimplexFrame::standard(d), r, std::move(heights));
  if (seed) config.set_seed(*seed);
  emit(out, config_to_json(config));
  std::cerr << "config " << config_hash(config) << ": " << config.point_count()
            << " points, d=" << d << ", r=" << r << "\n";
  return 0;
}

int run_perturb(const std::string& in, const std::string& recipe, int k,
                int jobs, const std::optional<std::string>& out) {
  const auto config = load_config(in);
  std::vector<PerturbationMove> moves;
  if (recipe == "342")
    moves = recipe_342(config);
  else if (recipe == "532")
    moves = recipe_532(config);
  else
    throw CLI::ValidationError("--recipe", "known recipes: 342, 532");

  const auto result =
      calibrate_epsilons(config, moves, goodness_classifier(k, jobs));
  Json document = config_to_json(result.configuration);
  Json magnitudes = Json::array();
  for (const auto& m : result.magnitudes) magnitudes.push_back(to_string(m));
  document["recipe"] = Json{{"name", recipe}, {"magnitudes", magnitudes}};
  emit(out, document);
  std::cerr << "calibrated " << result.magnitudes.size() << " move(s)\n";
  return 0;
}

int run_verify(const std::string& in, int k, const std::string& shard_text,
               int jobs, bool deterministic, bool no_witnesses,
               const std::optional<std::string>& out) {
  const auto config = load_config(in);
  const ShardSpec shard = parse_shard(shard_text);

  VerifyOptions options;
  options.k = k;
  options.jobs = jobs;
  options.shard_index = shard.index;
  options.shard_total = shard.total;
  options.collect_witnesses = !no_witnesses;
  auto report = verify_lower_bound(config, options);
  report.config_hash = config_hash(config);
  if (deterministic) report.elapsed_ms = 0;

  const auto manifest =
      make_manifest("verify", {{in, fnv1a64_hex(read_file(in))}},
                    config.seed(), shard_string(shard), jobs, deterministic);
  emit(out, report_to_json(report, manifest));
  std::cerr << "total=" << report.total << " good=" << report.good
            << " bad=" << report.bad << "\n";
  return report.bad == 0 ? 0 : 1;
}

int run_search(const std::string& in, int r, std::optional<int> k,
               bool deterministic, const std::optional<std::string>& out) {
  const auto document = Json::parse(read_file(in));
  const PointCloud cloud = document.contains("heights")
                               ? cloud_from_config(config_from_json(document))
                               : cloud_from_json(document);
  const int kk = k.value_or(r);
  const auto result = find_k_wise_partition(cloud, r, kk);
  const auto manifest =
      make_manifest("search", {{in, fnv1a64_hex(read_file(in))}}, std::nullopt,
                    "0/1", 1, deterministic);
  emit(out, search_result_to_json(result, r, kk, manifest));
  std::cerr << (result.found ? "found" : "none") << "\n";
  return result.found ? 0 : 1;
}

int run_weights(const std::string& in, int k,
                std::optional<std::uint64_t> sample, int jobs,
                bool deterministic, const std::optional<std::string>& out) {
  const auto config = load_config(in);
  auto audit = audit_weights(config, k, sample, jobs);
  if (deterministic) audit.elapsed_ms = 0;
  const auto manifest =
      make_manifest("weights", {{in, fnv1a64_hex(read_file(in))}},
                    config.seed(), "0/1", jobs, deterministic);
  emit(out, audit_to_json(audit, config, k, manifest));
  for (std::size_t ray = 0; ray < audit.max_ray_weight.size(); ++ray)
    std::cerr << "ray " << ray << ": max weight sum "
              << audit.max_ray_weight[ray] << " <= "
              << binomial(config.r() - 1, k) << "\n";
  return audit.buba_violations.empty() && audit.baba_violations.empty() ? 0
                                                                        : 1;
}

int run_merge(const std::vector<std::string>& inputs, bool deterministic,
              const std::optional<std::string>& out) {
  std::vector<Json> reports;
  std::vector<std::pair<std::string, std::string>> hashes;
  for (const auto& path : inputs) {
    const auto text = read_file(path);
    reports.push_back(Json::parse(text));
    hashes.emplace_back(path, fnv1a64_hex(text));
  }
  const auto manifest = make_manifest("report-merge", hashes, std::nullopt,
                                      "0/1", 1, deterministic);
  emit(out, merge_reports(reports, manifest));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of k-wise Tverberg partition bounds"};
  app.require_subcommand(1);
  int exit_code = 0;

  // construct
  auto* construct = app.add_subcommand(
      "construct", "Write a rayed point configuration as JSON");
  int c_d = 0, c_r = 0;
  std::string c_heights;
  std::optional<std::uint64_t> c_seed;
  std::optional<std::string> c_out;
  construct->add_option("--d", c_d, "ambient dimension")
      ->required()
      ->check(CLI::PositiveNumber);
  construct->add_option("--r", c_r, "number of parts")
      ->required()
      ->check(CLI::Range(2, 1000));
  construct->add_option("--heights", c_heights,
                        "JSON file with one height list per ray");
  construct->add_option("--seed", c_seed,
                        "draw distinct pseudo-random heights from this seed");
  construct->add_option("--out", c_out, "output file (default stdout)");
  construct->callback(
      [&] { exit_code = run_construct(c_d, c_r, c_heights, c_seed, c_out); });

  // perturb
  auto* perturb = app.add_subcommand(
      "perturb", "Calibrate and apply a point-moving recipe");
  std::string p_in, p_recipe;
  int p_k = 2, p_jobs = 1;
  std::optional<std::string> p_out;
  perturb->add_option("--in", p_in, "input configuration")->required();
  perturb->add_option("--recipe", p_recipe, "342 or 532")->required();
  perturb->add_option("--k", p_k, "tuple size preserved by calibration");
  perturb->add_option("--jobs", p_jobs, "worker threads");
  perturb->add_option("--out", p_out, "output file (default stdout)");
  perturb->callback(
      [&] { exit_code = run_perturb(p_in, p_recipe, p_k, p_jobs, p_out); });

  // verify
  auto* verify = app.add_subcommand(
      "verify", "Classify every partition of a configuration");
  std::string v_in, v_shard = "0/1";
  int v_k = 0, v_jobs = 1;
  bool v_deterministic = false, v_no_witnesses = false;
  std::optional<std::string> v_out;
  verify->add_option("--in", v_in, "input configuration")->required();
  verify->add_option("--k", v_k, "tuple size to test")->required();
  verify->add_option("--shard", v_shard, "process shard i of N (as i/N)");
  verify->add_option("--jobs", v_jobs, "worker threads");
  verify->add_flag("--deterministic", v_deterministic,
                   "fixed timestamp, zero elapsed time");
  verify->add_flag("--no-witnesses", v_no_witnesses,
                   "omit per-partition certificates from the report");
  verify->add_option("--out", v_out, "report file (default stdout)");
  verify->callback([&] {
    exit_code = run_verify(v_in, v_k, v_shard, v_jobs, v_deterministic,
                           v_no_witnesses, v_out);
  });

  // search
  auto* search = app.add_subcommand(
      "search", "Look for a partition whose hull tuples all intersect");
  std::string s_in;
  int s_r = 0;
  std::optional<int> s_k;
  bool s_deterministic = false;
  std::optional<std::string> s_out;
  search->add_option("--in", s_in, "point cloud or configuration JSON")
      ->required();
  search->add_option("--r", s_r, "number of parts")->required();
  search->add_option("--k", s_k, "tuple size (default r: full common point)");
  search->add_flag("--deterministic", s_deterministic,
                   "fixed timestamp in the manifest");
  search->add_option("--out", s_out, "result file (default stdout)");
  search->callback([&] {
    exit_code = run_search(s_in, s_r, s_k, s_deterministic, s_out);
  });

  // weights
  auto* weights = app.add_subcommand(
      "weights", "Audit the weight inequalities over partitions");
  std::string w_in;
  int w_k = 0, w_jobs = 1;
  std::optional<std::uint64_t> w_sample;
  bool w_deterministic = false;
  std::optional<std::string> w_out;
  weights->add_option("--in", w_in, "input configuration")->required();
  weights->add_option("--k", w_k, "tuple size")->required();
  weights->add_option("--sample", w_sample,
                      "audit an evenly strided sample of this size");
  weights->add_option("--jobs", w_jobs, "worker threads");
  weights->add_flag("--deterministic", w_deterministic,
                    "fixed timestamp, zero elapsed time");
  weights->add_option("--out", w_out, "report file (default stdout)");
  weights->callback([&] {
    exit_code =
        run_weights(w_in, w_k, w_sample, w_jobs, w_deterministic, w_out);
  });

  // report-merge
  auto* merge = app.add_subcommand(
      "report-merge", "Combine a complete set of shard reports");
  std::vector<std::string> m_inputs;
  bool m_deterministic = false;
  std::optional<std::string> m_out;
  merge->add_option("inputs", m_inputs, "shard report files")->required();
  merge->add_flag("--deterministic", m_deterministic,
                  "fixed timestamp in the manifest");
  merge->add_option("--out", m_out, "merged report file (default stdout)");
  merge->callback(
      [&] { exit_code = run_merge(m_inputs, m_deterministic, m_out); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
