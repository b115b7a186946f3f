#pragma once

#include <string>
#include <vector>

#include "sv/config.hpp"

namespace sv {

// Named verification suites over fixed desk-scale ranges. The ranges are
// frozen constants: "verify" means these exact claims, not an open-ended
// scan. Every case derives its own seed from the configured one, so a suite
// is reproducible bit for bit.
//
//   thm2.1    P^1 x P^1, all degrees up to 8: computed (dim, defect) vs the
//             closed-form classification
//   thm2.5    P^1 x P^1 x P^1, degrees up to 4, vs the classification
//   thm1.1    50 random instances: multigraded rank == reduced rank on
//             identical points
//   prop2.3   P^r x P^k in the (k+1,1) embedding, r,k <= 3: never defective
//   prop3.2   dim V^s = s(n+1)-1 for s <= n_1+1 on small two- and
//             three-factor grids
//   sec3      the ten defective families at small parameters: defect >= 1
//             plus validated split certificates
//   grassmann Grassmann defectivity via the product reduction

struct SuiteCase {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteOutcome {
  std::string suite;
  std::uint64_t prime = 0;
  std::uint64_t seed = 0;
  std::vector<SuiteCase> cases;

  std::size_t passed() const;
  std::size_t failed() const;
  bool all_pass() const { return failed() == 0; }
};

const std::vector<std::string>& suite_names();

// Throws std::invalid_argument for an unknown suite name.
SuiteOutcome run_suite(const std::string& name, const RunConfig& config, int jobs = 1);

}  // namespace sv
