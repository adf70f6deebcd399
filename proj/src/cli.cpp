#include "cb/cli.hpp"

#include "cb/cbpoint.hpp"
#include "cb/fano.hpp"
#include "cb/newton.hpp"
#include "cb/random.hpp"
#include "cb/service.hpp"
#include "cb/tropical.hpp"
#include "cb/verify.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace cb {

using nlohmann::json;

namespace {

constexpr int kUsageError = 2;
constexpr int kDegenerate = 1;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("CB_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      // fall through to the built-in default
    }
  }
  return 20130101;
}

Triple parse_triple(const std::string& text) {
  std::istringstream in(text);
  Triple t{};
  char c1 = 0, c2 = 0;
  if (!(in >> t.i >> c1 >> t.j >> c2 >> t.k) || c1 != ',' || c2 != ',' || !in.eof()) {
    throw DocumentError("--triple", "expected i,j,k");
  }
  return t;
}

int run_compute(const std::string& path, const std::string& method_text,
                const std::string& triple_text, bool timing, std::ostream& out,
                std::ostream& err) {
  std::ifstream in(path);
  if (!in) {
    err << "error: cannot read points file '" << path << "'\n";
    return kUsageError;
  }
  std::ostringstream body;
  body << in.rdbuf();
  json request;
  try {
    request = json::parse(body.str());
  } catch (const json::parse_error& e) {
    err << "error: " << path << ": invalid JSON: " << e.what() << "\n";
    return kUsageError;
  }
  if (!request.is_object()) {
    err << "error: points: document must be a JSON object\n";
    return kUsageError;
  }
  request["method"] = method_text;
  try {
    if (!triple_text.empty()) {
      const Triple t = parse_triple(triple_text);
      request["triple"] = json::array({t.i, t.j, t.k});
    }
    const auto start = std::chrono::steady_clock::now();
    const ComputeRequest parsed = parse_compute_request(request);
    json result = compute_payload(parsed);
    if (timing) {
      const auto us = std::chrono::duration_cast<std::chrono::microseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
      result = {{"result", result}, {"meta", {{"elapsed_us", us}}}};
      out << result.dump(2) << "\n";
      return result["result"]["status"] == "ok" ? 0 : kDegenerate;
    }
    out << result.dump(2) << "\n";
    return result["status"] == "ok" ? 0 : kDegenerate;
  } catch (const DocumentError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
}

int run_bench(std::uint64_t seed, int configs, std::ostream& out) {
  Rng rng(seed);
  std::vector<Config8> corpus;
  for (int i = 0; i < configs; ++i) corpus.push_back(rng.nondegenerate_config(50));

  using clock = std::chrono::steady_clock;
  auto time_us = [](auto&& f) {
    const auto start = clock::now();
    f();
    return std::chrono::duration_cast<std::chrono::microseconds>(clock::now() - start).count();
  };

  std::uint64_t full_evals = 0, reduced_evals = 0;
  json methods;
  methods["det"] = time_us([&] {
    for (const auto& c : corpus) p9_determinantal(c, default_triple(c));
  });
  methods["reduced"] = time_us([&] {
    for (const auto& c : corpus) p9_reduced(c, default_triple(c));
  });
  methods["crossratio"] = time_us([&] {
    for (const auto& c : corpus) p9_cross_ratio(c);
  });
  methods["fano"] = time_us([&] {
    for (const auto& c : corpus) reduced_evals += p9_fano(c, FanoMode::reduced).evaluations;
  });
  methods["fano-full"] = time_us([&] {
    for (const auto& c : corpus) full_evals += p9_fano(c, FanoMode::full).evaluations;
  });

  json report = {{"seed", seed},
                 {"configs", configs},
                 {"monomial_evaluations_per_config",
                  {{"fano", reduced_evals / configs}, {"fano-full", full_evals / configs}}},
                 {"wall_clock_us", methods}};
  out << report.dump(2) << "\n";
  const bool counts_ok = reduced_evals == 2880u * configs && full_evals == 40320u * configs;
  return counts_ok ? 0 : 1;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Cayley-Bacharach ninth-point engine", "cbpoint"};
  app.require_subcommand(1);

  std::string points_path, method_text = "det", triple_text;
  bool timing = false;
  auto* compute = app.add_subcommand("compute", "Compute and certify the ninth point");
  compute->add_option("--points", points_path, "points document (JSON)")->required();
  compute->add_option("--method", method_text, "det|reduced|fano|fano-full|crossratio")
      ->check(CLI::IsMember({"det", "reduced", "fano", "fano-full", "crossratio"}));
  compute->add_option("--triple", triple_text, "index triple i,j,k for det/reduced");
  compute->add_flag("--timing", timing, "wrap the result with wall-clock metadata");

  std::string which;
  int trials = 100;
  std::uint64_t seed = default_seed();
  std::int64_t bound = 50;
  auto* verify = app.add_subcommand("verify", "Randomized exact identity verification");
  std::string names;
  for (const auto& n : identity_names()) names += (names.empty() ? "" : "|") + n;
  verify->add_option("--which", which, names)->required();
  verify->add_option("--trials", trials)->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed);
  verify->add_option("--bound", bound)->check(CLI::PositiveNumber);

  std::int64_t prime = 2, trop_bound = 3;
  int trop_trials = 100;
  bool details = false;
  auto* trop = app.add_subcommand("trop", "Tropical prediction versus exact p-adic valuations");
  trop->add_option("--prime", prime);
  trop->add_option("--trials", trop_trials)->check(CLI::PositiveNumber);
  trop->add_option("--seed", seed);
  trop->add_option("--bound", trop_bound, "exponent range [-bound, bound]")
      ->check(CLI::NonNegativeNumber);
  trop->add_flag("--details", details, "include per-trial records");

  std::string poly;
  bool with_support = false;
  auto* newton = app.add_subcommand("newton", "Newton polytope support and vertex count");
  newton->add_option("--poly", poly, "Cx|Cy|Cz|Dx|Dy|Dz")
      ->required()
      ->check(CLI::IsMember({"Cx", "Cy", "Cz", "Dx", "Dy", "Dz"}));
  newton->add_flag("--support", with_support, "print the exponent vectors");

  int bench_configs = 5;
  std::uint64_t bench_seed = 7;
  auto* bench = app.add_subcommand("bench", "Evaluation counts and timings on a seeded corpus");
  bench->add_option("--configs", bench_configs)->check(CLI::PositiveNumber);
  bench->add_option("--seed", bench_seed);

  int port = 8080;
  std::string host = "127.0.0.1";
  auto* serve = app.add_subcommand("serve", "Local JSON service");
  serve->add_option("--port", port)->check(CLI::Range(0, 65535));
  serve->add_option("--host", host);

  std::vector<const char*> argv{"cbpoint"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    if (args.empty()) {
      err << app.help();
    } else {
      err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    }
    return kUsageError;
  }

  try {
    if (*compute) return run_compute(points_path, method_text, triple_text, timing, out, err);
    if (*verify) {
      const VerifyReport r = run_identity_suite(which, trials, seed, bound);
      out << to_json(r).dump(2) << "\n";
      return r.passed() ? 0 : 1;
    }
    if (*trop) {
      const ValuationReport r = valuation_agreement(prime, trop_trials, seed, trop_bound);
      json j = to_json(r);
      if (!details) j.erase("details");
      out << j.dump(2) << "\n";
      return r.factor_soundness_violations == 0 && r.unexplained_disagreements == 0 ? 0 : 1;
    }
    if (*newton) {
      const Factor f = *parse_factor(poly);
      const auto support = newton_support(f);
      json j = {{"poly", poly},
                {"support_size", support.size()},
                {"vertices", newton_vertex_count(support)}};
      if (with_support) j["support"] = support;
      out << j.dump(2) << "\n";
      return 0;
    }
    if (*bench) return run_bench(bench_seed, bench_configs, out);
    if (*serve) {
      Server server;
      const int bound_port = server.bind(host, port);
      if (bound_port < 0) {
        err << "error: cannot bind " << host << ":" << port << "\n";
        return kUsageError;
      }
      err << "listening on http://" << host << ":" << bound_port << "\n";
      server.listen();
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace cb
