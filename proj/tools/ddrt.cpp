// ddrt: confluence prover for first-order term rewrite systems.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "ddrt/prover.hpp"
#include "ddrt/tpdb.hpp"
#include "ddrt/trace.hpp"

namespace fs = std::filesystem;

namespace {

const char* rule_error_name(ddrt::InvalidRule::Kind k) {
  switch (k) {
    case ddrt::InvalidRule::Kind::VariableLhs:
      return "variable-lhs";
    case ddrt::InvalidRule::Kind::ExtraVariableRhs:
      return "extra-variable-rhs";
    case ddrt::InvalidRule::Kind::ArityClash:
      return "arity-clash";
    case ddrt::InvalidRule::Kind::DuplicateIndex:
      return "duplicate-index";
  }
  return "invalid-rule";
}

struct Outcome {
  std::optional<ddrt::Verdict> verdict;
  std::optional<ddrt::Trs> trs;
  std::string error;  // set when the input could not be loaded
};

Outcome run_file(const std::string& path, const ddrt::Config& config) {
  Outcome out;
  std::ifstream in(path);
  if (!in) {
    out.error = "io-error: cannot read " + path;
    return out;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    ddrt::ParsedProblem p = ddrt::parse_trs(buf.str(), path);
    out.verdict = ddrt::prove(p.trs, config);
    out.trs = std::move(p.trs);
  } catch (const ddrt::ParseError& e) {
    out.error = "parse-error: " + path + ":" + e.what();
  } catch (const ddrt::InvalidRule& e) {
    out.error = std::string(rule_error_name(e.kind())) + ": " + path + ": " + e.what();
  }
  return out;
}

std::vector<std::string> batch_files(const std::string& dir) {
  std::vector<std::string> files;
  for (const auto& entry : fs::recursive_directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".trs") files.push_back(entry.path().string());
  std::sort(files.begin(), files.end());
  return files;
}

int run_many(const std::vector<std::string>& files, const ddrt::Config& config, unsigned jobs) {
  std::vector<Outcome> outcomes(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < files.size();) outcomes[i] = run_file(files[i], config);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < std::max(1u, jobs); ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  std::map<std::string, std::size_t> counts{{"YES", 0}, {"NO", 0}, {"MAYBE", 0}, {"ERROR", 0}};
  for (std::size_t i = 0; i < files.size(); ++i) {
    const Outcome& o = outcomes[i];
    if (!o.verdict) {
      ++counts["ERROR"];
      std::cout << files[i] << " ERROR\n";
      std::cerr << "error: " << o.error << "\n";
      continue;
    }
    const char* answer = ddrt::to_string(o.verdict->answer);
    ++counts[answer];
    std::cout << files[i] << " " << answer;
    if (o.verdict->criterion) std::cout << " " << ddrt::to_string(*o.verdict->criterion);
    std::cout << "\n";
  }
  std::cout << "summary: YES " << counts["YES"] << " NO " << counts["NO"] << " MAYBE " << counts["MAYBE"]
            << " ERROR " << counts["ERROR"] << " total " << files.size() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Confluence prover for term rewrite systems in TPDB format"};

  std::string criterion = "auto";
  ddrt::Config config;
  double timeout_s = 60;
  bool proof = false;
  std::string batch_dir;
  std::vector<std::string> files;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());

  app.add_option("--criterion", criterion, "Criterion to run")
      ->check(CLI::IsMember({"auto", "ortho", "kb", "rl", "dd1", "dd2", "dd2x", "nc"}))
      ->capture_default_str();
  app.add_option("--k", config.k, "Join step bound")->capture_default_str();
  app.add_option("--timeout", timeout_s, "Time limit per system in seconds")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--dim-max", config.dim_max, "Largest matrix dimension")
      ->check(CLI::Range(1, 8))
      ->capture_default_str();
  app.add_option("--coef-max", config.coef_max, "Largest matrix entry")->check(CLI::Range(1, 16))->capture_default_str();
  app.add_option("--external-prover", config.external_prover,
                 "Termination tool command (default: $DDRT_EXTERNAL_PROVER)");
  app.add_flag("--proof", proof, "Print a JSON proof trace after the verdict");
  app.add_option("--batch", batch_dir, "Process every .trs file below DIR")->check(CLI::ExistingDirectory);
  app.add_option("--jobs", jobs, "Parallel workers in batch mode")->check(CLI::PositiveNumber);
  app.add_option("files", files, "Input files");

  CLI11_PARSE(app, argc, argv);

  if (files.empty() && batch_dir.empty()) {
    std::cerr << "error: no input files\n" << app.help();
    return 2;
  }
  if (config.external_prover.empty())
    if (const char* env = std::getenv("DDRT_EXTERNAL_PROVER")) config.external_prover = env;
  config.timeout = std::chrono::milliseconds(static_cast<long long>(timeout_s * 1000));
  if (criterion != "auto") config.criteria = {*ddrt::criterion_from_string(criterion)};

  if (!batch_dir.empty()) {
    std::vector<std::string> all = batch_files(batch_dir);
    all.insert(all.end(), files.begin(), files.end());
    return run_many(all, config, jobs);
  }
  if (files.size() > 1) return run_many(files, config, jobs);

  Outcome o = run_file(files.front(), config);
  if (!o.verdict) {
    std::cerr << "error: " << o.error << "\n";
    return 2;
  }
  std::cout << ddrt::to_string(o.verdict->answer) << "\n";
  if (proof) std::cout << ddrt::proof_trace(*o.trs, *o.verdict).dump(2) << "\n";
  return 0;
}
