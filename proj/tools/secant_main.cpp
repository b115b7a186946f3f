// Command-line front end: single-instance queries, grid scans, and the
// named verification suites. All randomness flows from one 64-bit seed,
// echoed in every output, so any published number can be re-derived.

#include <cstdlib>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sv/errors.hpp"
#include "sv/parallel.hpp"
#include "sv/report_io.hpp"
#include "sv/secant.hpp"
#include "sv/suites.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDisagreement = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapBreach = 3;

struct CommonOpts {
  sv::RunConfig config;
  std::string method = "both";
  std::string format = "text";
  int jobs = 1;
  bool seed_given = false;
};

void add_common_options(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--prime", opts.config.prime, "field modulus (prime, 10^6 <= p < 2^32)")
      ->capture_default_str();
  cmd->add_option("--seed", opts.config.seed,
                  "64-bit seed; overrides SECANT_SEED; default from entropy")
      ->each([&opts](const std::string&) { opts.seed_given = true; });
  cmd->add_option("--trials", opts.config.trials, "independent point draws per rank")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--method", opts.method, "direct | reduced | both")
      ->check(CLI::IsMember({"direct", "reduced", "both"}))
      ->capture_default_str();
  cmd->add_option("--size-cap", opts.config.size_cap, "maximum matrix columns")
      ->capture_default_str();
  cmd->add_option("--format", opts.format, "json | csv | text")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  cmd->add_option("--jobs", opts.jobs, "max concurrent cells/cases")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

// --seed flag > SECANT_SEED env > entropy. The chosen value is always
// echoed in the output.
void resolve_seed(CommonOpts& opts) {
  if (opts.seed_given) return;
  if (const char* env = std::getenv("SECANT_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0') {
      throw CLI::ValidationError("SECANT_SEED", "not an unsigned integer");
    }
    opts.config.seed = static_cast<std::uint64_t>(v);
    return;
  }
  std::random_device rd;
  opts.config.seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

int run_dim(const std::vector<int>& factors, const std::vector<int>& degrees, int s,
            CommonOpts& opts) {
  if (opts.format == "csv") {
    std::cerr << "csv output is only available for scan tables\n";
    return kExitUsage;
  }
  const sv::VarietySpec spec{sv::Shape(factors), sv::Multidegree(degrees)};
  const sv::SecantReport report = sv::secant_dimension(spec, s, opts.config);
  if (opts.format == "json") {
    std::cout << sv::to_json(report).dump(2) << "\n";
  } else {
    std::cout << sv::render_text(report);
  }
  return kExitOk;
}

int run_grassmann(const std::vector<int>& factors, const std::vector<int>& degrees, int k,
                  int s, CommonOpts& opts) {
  if (opts.format == "csv") {
    std::cerr << "csv output is only available for scan tables\n";
    return kExitUsage;
  }
  const sv::VarietySpec spec{sv::Shape(factors), sv::Multidegree(degrees)};
  const sv::GrassmannReport report = sv::grassmann_secant_dimension(spec, k, s, opts.config);
  if (opts.format == "json") {
    std::cout << sv::to_json(report).dump(2) << "\n";
  } else {
    std::cout << sv::render_text(report);
  }
  return kExitOk;
}

int run_scan(const std::vector<int>& factors, int degree_max, int s_max, CommonOpts& opts) {
  if (degree_max < 1 || s_max < 1) {
    std::cerr << "scan needs --degree-max >= 1 and --s-max >= 1\n";
    return kExitUsage;
  }
  const sv::Shape shape(factors);
  const int t = shape.count();

  // all degree tuples in [1, degree_max]^t, lexicographically ascending
  std::vector<std::vector<int>> degree_grid;
  std::vector<int> cur(static_cast<std::size_t>(t), 1);
  while (true) {
    degree_grid.push_back(cur);
    int i = t - 1;
    while (i >= 0) {
      if (++cur[static_cast<std::size_t>(i)] <= degree_max) break;
      cur[static_cast<std::size_t>(i)] = 1;
      --i;
    }
    if (i < 0) break;
  }

  std::vector<sv::ScanRow> rows;
  for (const auto& deg : degree_grid) {
    for (int s = 1; s <= s_max; ++s) {
      rows.push_back(sv::ScanRow{shape, sv::Multidegree(deg), s, std::nullopt, ""});
    }
  }

  sv::parallel_for(rows.size(), opts.jobs, [&](std::size_t i) {
    sv::RunConfig cfg = opts.config;
    cfg.seed = sv::derive_seed(opts.config.seed, i);
    try {
      rows[i].report = sv::secant_dimension(
          sv::VarietySpec{rows[i].shape, rows[i].degree}, rows[i].s, cfg);
    } catch (const sv::CapExceededError& e) {
      rows[i].skipped = e.what();
    }
  });

  if (opts.format == "json") {
    sv::Json j = sv::to_json(rows);
    j["seed"] = opts.config.seed;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << sv::scan_csv(rows);
  }
  return kExitOk;
}

int run_verify(const std::string& suite, CommonOpts& opts) {
  if (opts.format == "csv") {
    std::cerr << "csv output is only available for scan tables\n";
    return kExitUsage;
  }
  const sv::SuiteOutcome outcome = sv::run_suite(suite, opts.config, opts.jobs);
  if (opts.format == "json") {
    std::cout << sv::to_json(outcome).dump(2) << "\n";
  } else {
    std::cout << sv::render_text(outcome);
  }
  return outcome.all_pass() ? kExitOk : kExitDisagreement;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dimensions and defects of higher secant varieties of Segre-Veronese "
               "varieties, by exact rank computations over a prime field"};
  app.require_subcommand(1);

  std::vector<int> factors, degrees;
  int s = 1, k = 0, degree_max = 1, s_max = 1;
  std::string suite;

  CommonOpts dim_opts, scan_opts, grassmann_opts, verify_opts;

  CLI::App* dim = app.add_subcommand("dim", "dimension of the s-th secant variety");
  dim->add_option("--factors", factors, "projective factors n_1,...,n_t")
      ->required()
      ->delimiter(',');
  dim->add_option("--degree", degrees, "multidegree a_1,...,a_t")->required()->delimiter(',');
  dim->add_option("--s", s, "number of points spanned")->required()->check(CLI::PositiveNumber);
  add_common_options(dim, dim_opts);

  CLI::App* scan = app.add_subcommand("scan", "table over a degree/s grid");
  scan->add_option("--factors", factors, "projective factors n_1,...,n_t")
      ->required()
      ->delimiter(',');
  scan->add_option("--degree-max", degree_max, "scan degrees 1..max per factor")->required();
  scan->add_option("--s-max", s_max, "scan s = 1..max")->required();
  add_common_options(scan, scan_opts);

  CLI::App* grassmann =
      app.add_subcommand("grassmann", "dimension of the (k, s-1) Grassmann secant variety");
  grassmann->add_option("--factors", factors, "projective factors n_1,...,n_t")
      ->required()
      ->delimiter(',');
  grassmann->add_option("--degree", degrees, "multidegree a_1,...,a_t")
      ->required()
      ->delimiter(',');
  grassmann->add_option("--k", k, "dimension of the moving linear space")->required();
  grassmann->add_option("--s", s, "number of points spanned")
      ->required()
      ->check(CLI::PositiveNumber);
  add_common_options(grassmann, grassmann_opts);

  CLI::App* verify = app.add_subcommand("verify", "run a named verification suite");
  verify->add_option("--suite", suite, "thm2.1 | thm2.5 | prop2.3 | prop3.2 | sec3 | thm1.1 | grassmann")
      ->required()
      ->check(CLI::IsMember(sv::suite_names()));
  add_common_options(verify, verify_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(dim)) {
      resolve_seed(dim_opts);
      dim_opts.config.method = sv::method_from_name(dim_opts.method);
      return run_dim(factors, degrees, s, dim_opts);
    }
    if (app.got_subcommand(scan)) {
      resolve_seed(scan_opts);
      scan_opts.config.method = sv::method_from_name(scan_opts.method);
      return run_scan(factors, degree_max, s_max, scan_opts);
    }
    if (app.got_subcommand(grassmann)) {
      resolve_seed(grassmann_opts);
      grassmann_opts.config.method = sv::method_from_name(grassmann_opts.method);
      return run_grassmann(factors, degrees, k, s, grassmann_opts);
    }
    if (app.got_subcommand(verify)) {
      resolve_seed(verify_opts);
      verify_opts.config.method = sv::method_from_name(verify_opts.method);
      return run_verify(suite, verify_opts);
    }
  } catch (const sv::MethodDisagreementError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDisagreement;
  } catch (const sv::CapExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapBreach;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
