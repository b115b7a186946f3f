#include "sv/suites.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

#include "sv/fatpoints.hpp"
#include "sv/parallel.hpp"
#include "sv/reduction.hpp"
#include "sv/secant.hpp"

namespace sv {

std::size_t SuiteOutcome::passed() const {
  std::size_t n = 0;
  for (const auto& c : cases) n += c.pass ? 1 : 0;
  return n;
}

std::size_t SuiteOutcome::failed() const { return cases.size() - passed(); }

namespace {

using CaseFn = std::function<SuiteCase(const RunConfig&)>;

SuiteOutcome execute(const std::string& suite, const RunConfig& config, int jobs,
                     const std::vector<CaseFn>& cases) {
  SuiteOutcome out{suite, config.prime, config.seed, {}};
  out.cases.resize(cases.size());
  parallel_for(cases.size(), jobs, [&](std::size_t i) {
    RunConfig cfg = config;
    cfg.seed = derive_seed(config.seed, i);
    out.cases[i] = cases[i](cfg);
  });
  return out;
}

std::string join_ints_local(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

std::string spec_label(const std::vector<int>& factors, const std::vector<int>& degrees,
                       int s) {
  std::ostringstream os;
  os << "n=(";
  for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "," : "") << factors[i];
  os << ") a=(";
  for (std::size_t i = 0; i < degrees.size(); ++i) os << (i ? "," : "") << degrees[i];
  os << ") s=" << s;
  return os.str();
}

// computed (dim, defect) against a closed-form prediction
SuiteCase classification_case(const VarietySpec& spec, int s, const Classification& predicted,
                              const RunConfig& cfg) {
  SuiteCase c;
  c.name = spec_label(spec.shape.factors, spec.degree.degrees, s);
  const SecantReport report = secant_dimension(spec, s, cfg);
  c.pass = report.dim_actual == predicted.dim && report.defect == predicted.defect;
  std::ostringstream os;
  os << "dim=" << report.dim_actual << " defect=" << report.defect
     << " predicted dim=" << predicted.dim << " defect=" << predicted.defect;
  c.detail = os.str();
  return c;
}

std::vector<CaseFn> build_thm21() {
  std::vector<CaseFn> cases;
  for (int a1 = 1; a1 <= 8; ++a1) {
    for (int a2 = 1; a2 <= a1; ++a2) {
      const i64 ring = static_cast<i64>(a1 + 1) * (a2 + 1);  // N + 1
      const int smax = static_cast<int>((ring + 2) / 3) + 1;
      for (int s = 1; s <= smax; ++s) {
        cases.push_back([a1, a2, s](const RunConfig& cfg) {
          return classification_case(VarietySpec(Shape({1, 1}), Multidegree({a1, a2})), s,
                                     classify_p1xp1(a1, a2, s), cfg);
        });
      }
    }
  }
  return cases;
}

std::vector<CaseFn> build_thm25() {
  std::vector<CaseFn> cases;
  for (int a1 = 1; a1 <= 4; ++a1) {
    for (int a2 = 1; a2 <= a1; ++a2) {
      for (int a3 = 1; a3 <= a2; ++a3) {
        const i64 ring = static_cast<i64>(a1 + 1) * (a2 + 1) * (a3 + 1);
        const int smax = static_cast<int>((ring + 3) / 4) + 1;
        for (int s = 1; s <= smax; ++s) {
          cases.push_back([a1, a2, a3, s](const RunConfig& cfg) {
            return classification_case(
                VarietySpec(Shape({1, 1, 1}), Multidegree({a1, a2, a3})), s,
                classify_p1cubed(a1, a2, a3, s), cfg);
          });
        }
      }
    }
  }
  return cases;
}

std::vector<CaseFn> build_thm11(const RunConfig& config) {
  // 50 random instances, fixed by the configured seed. Column counts are
  // kept at desk scale so the whole suite stays well under its budget.
  constexpr int kInstances = 50;
  constexpr i64 kColumnCap = 4000;
  SplitMix64 rng(derive_seed(config.seed, 0x7E100ULL));

  std::vector<CaseFn> cases;
  for (int i = 0; i < kInstances; ++i) {
    while (true) {
      const int t = 1 + static_cast<int>(rng.next() % 4);
      std::vector<int> factors, degrees;
      for (int j = 0; j < t; ++j) {
        factors.push_back(1 + static_cast<int>(rng.next() % 3));
        degrees.push_back(1 + static_cast<int>(rng.next() % 3));
      }
      const int s = 1 + static_cast<int>(rng.next() % 8);
      const Shape shape(factors);
      const Multidegree degree(degrees);
      if (multidegree_dimension(shape, degree) > kColumnCap) continue;
      const int mult = (i % 5 == 4) ? 1 : 2;
      cases.push_back([shape, degree, s, mult](const RunConfig& cfg) {
        SuiteCase c;
        c.name = spec_label(shape.factors, degree.degrees, s) +
                 " mult=" + std::to_string(mult);
        const EquivalenceCheck eq = check_method_equivalence(shape, degree, s, mult, cfg);
        c.pass = eq.agree;
        c.detail = "direct=" + std::to_string(eq.direct_rank) +
                   " reduced=" + std::to_string(eq.reduced_rank);
        return c;
      });
      break;
    }
  }
  return cases;
}

std::vector<CaseFn> build_prop23() {
  std::vector<CaseFn> cases;
  for (int r = 1; r <= 3; ++r) {
    for (int k = 1; k <= 3; ++k) {
      const int smax = static_cast<int>(binomial(r + k, k)) + 1;
      for (int s = 1; s <= smax; ++s) {
        cases.push_back([r, k, s](const RunConfig& cfg) {
          SuiteCase c;
          const VarietySpec spec(Shape({r, k}), Multidegree({k + 1, 1}));
          c.name = spec_label(spec.shape.factors, spec.degree.degrees, s);
          const SecantReport report = secant_dimension(spec, s, cfg);
          c.pass = report.defect == 0;
          c.detail = "dim=" + std::to_string(report.dim_actual) +
                     " expected=" + std::to_string(report.dim_expected);
          return c;
        });
      }
    }
  }
  return cases;
}

std::vector<CaseFn> build_prop32() {
  std::vector<CaseFn> cases;
  auto add_case = [&cases](std::vector<int> factors, std::vector<int> degrees, int s) {
    cases.push_back([factors, degrees, s](const RunConfig& cfg) {
      SuiteCase c;
      c.name = spec_label(factors, degrees, s);
      const Shape shape(factors);
      const Multidegree degree(degrees);
      const i64 want = static_cast<i64>(s) * (shape.total_dim() + 1) - 1;
      c.pass = small_s_expected_dimension(shape, degree, s, cfg);
      c.detail = "want dim=" + std::to_string(want);
      return c;
    });
  };

  for (int n1 = 1; n1 <= 3; ++n1) {
    for (int n2 = n1; n2 <= 3; ++n2) {
      for (int a1 = 1; a1 <= 3; ++a1) {
        for (int a2 = 1; a2 <= 3; ++a2) {
          if (a1 == 1 && a2 == 1) continue;  // excluded case
          for (int s = 1; s <= n1 + 1; ++s) add_case({n1, n2}, {a1, a2}, s);
        }
      }
    }
  }
  for (int s = 1; s <= 2; ++s) add_case({1, 2, 2}, {1, 1, 1}, s);
  return cases;
}

SuiteCase defective_family_case(const DefectiveExample& ex, const RunConfig& cfg) {
  SuiteCase c;
  c.name = "family " + std::to_string(ex.family) + ": " +
           spec_label(ex.shape.factors, ex.degree.degrees, ex.s);
  const VarietySpec spec(ex.shape, ex.degree);
  const SecantReport report = secant_dimension(spec, ex.s, cfg);
  std::ostringstream os;
  os << "dim=" << report.dim_actual << " expected=" << report.dim_expected
     << " defect=" << report.defect;

  if (!ex.certificate_expected) {
    // the anomalous 4-fold Segre point count: dimension 13 against expected 14
    c.pass = report.dim_actual == 13 && report.dim_expected == 14;
    c.detail = os.str();
    return c;
  }

  bool ok = report.defect >= 1;
  const bool fills =
      report.dim_expected == spec.ambient_dim();
  if (fills) {
    // independently validate the family's own splitting with fresh points
    RunConfig sub = cfg;
    sub.seed = derive_seed(cfg.seed, 0xB0C1ULL);
    const i64 dim_b = multidegree_dimension(ex.shape, ex.split_b) -
                      hilbert_function(ex.shape, ex.s, 1, ex.split_b, sub).rank;
    sub.seed = derive_seed(cfg.seed, 0xB0C2ULL);
    const i64 dim_c = multidegree_dimension(ex.shape, ex.split_c) -
                      hilbert_function(ex.shape, ex.s, 1, ex.split_c, sub).rank;
    os << " split b=(" << join_ints_local(ex.split_b.degrees) << ") dim_Ib=" << dim_b
       << " c=(" << join_ints_local(ex.split_c.degrees) << ") dim_Ic=" << dim_c;
    ok = ok && dim_b >= 1 && dim_c >= 1;
    ok = ok && report.certificate.has_value() && report.certificate->proves_defect;
  }
  c.pass = ok;
  c.detail = os.str();
  return c;
}

std::vector<CaseFn> build_sec3() {
  std::vector<DefectiveExample> instances;
  for (int k = 1; k <= 2; ++k) {
    for (int m = 1; m <= 3; ++m) instances.push_back(defective_family_instance(1, m, k, 1));
  }
  instances.push_back(defective_family_instance(2, 1, 1, 1));
  for (int m = 1; m <= 3; ++m) instances.push_back(defective_family_instance(3, m, 1, 1));
  for (int k = 1; k <= 2; ++k) {
    for (int m = 1; m <= 3; ++m) instances.push_back(defective_family_instance(4, m, k, 1));
  }
  for (int r = 1; r <= 2; ++r) {
    for (int m = 1; m <= 3; ++m) instances.push_back(defective_family_instance(5, m, 1, r));
  }
  for (int m = 1; m <= 3; ++m) instances.push_back(defective_family_instance(6, m, 1, 1));
  for (int m = 1; m <= 3; ++m) instances.push_back(defective_family_instance(7, m, 1, 1));
  instances.push_back(defective_family_instance(8, 1, 1, 1));
  for (int m = 1; m <= 3; ++m) instances.push_back(defective_family_instance(9, m, 1, 1));
  instances.push_back(defective_family_instance(10, 4, 1, 1));

  std::vector<CaseFn> cases;
  for (const auto& ex : instances) {
    cases.push_back([ex](const RunConfig& cfg) { return defective_family_case(ex, cfg); });
  }
  return cases;
}

SuiteCase grassmann_case(const VarietySpec& base, int k, int s, i64 want_defect,
                         bool exact, const RunConfig& cfg) {
  SuiteCase c;
  std::ostringstream name;
  name << spec_label(base.shape.factors, base.degree.degrees, s) << " k=" << k;
  c.name = name.str();
  const GrassmannReport report = grassmann_secant_dimension(base, k, s, cfg);
  c.pass = exact ? report.defect == want_defect : report.defect >= want_defect;
  std::ostringstream os;
  os << "dim=" << report.dim_actual << " expected=" << report.dim_expected
     << " defect=" << report.defect << " want" << (exact ? "=" : ">=") << want_defect;
  c.detail = os.str();
  return c;
}

std::vector<CaseFn> build_grassmann() {
  std::vector<CaseFn> cases;
  auto add = [&cases](std::vector<int> factors, std::vector<int> degrees, int k, int s,
                      i64 want, bool exact) {
    cases.push_back([=](const RunConfig& cfg) {
      return grassmann_case(VarietySpec(Shape(factors), Multidegree(degrees)), k, s, want,
                            exact, cfg);
    });
  };

  // P^1 x P^1 with degree (2a, 1) is (1, 2a)-defective with defect 1, and
  // only there; nearby s values and nearby degrees stay regular.
  for (int alpha = 1; alpha <= 3; ++alpha) {
    add({1, 1}, {2 * alpha, 1}, 1, 2 * alpha + 1, 1, true);
    add({1, 1}, {2 * alpha, 1}, 1, 2 * alpha, 0, true);
    add({1, 1}, {2 * alpha, 1}, 1, 2 * alpha + 2, 0, true);
  }
  for (int s = 2; s <= 5; ++s) add({1, 1}, {3, 1}, 1, s, 0, true);
  for (int s = 2; s <= 4; ++s) add({1, 1}, {2, 2}, 1, s, 0, true);

  // cubic embedding of P^2: k = 2 planes, never defective, up to filling
  for (int s = 3; s <= 7; ++s) add({2}, {3}, 2, s, 0, true);

  // (m,1,1) embeddings of the threefold Segre: (2m-1, 4m-2)-defective
  add({1, 1, 1}, {1, 1, 1}, 1, 3, 1, true);  // m = 1 meets the anomalous product
  add({1, 1, 1}, {2, 1, 1}, 3, 7, 1, false);
  add({1, 1, 1}, {3, 1, 1}, 5, 11, 1, false);
  return cases;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"thm2.1",  "thm2.5",  "thm1.1", "prop2.3",
                                              "prop3.2", "sec3",    "grassmann"};
  return names;
}

SuiteOutcome run_suite(const std::string& name, const RunConfig& config, int jobs) {
  std::vector<CaseFn> cases;
  if (name == "thm2.1") {
    cases = build_thm21();
  } else if (name == "thm2.5") {
    cases = build_thm25();
  } else if (name == "thm1.1") {
    cases = build_thm11(config);
  } else if (name == "prop2.3") {
    cases = build_prop23();
  } else if (name == "prop3.2") {
    cases = build_prop32();
  } else if (name == "sec3") {
    cases = build_sec3();
  } else if (name == "grassmann") {
    cases = build_grassmann();
  } else {
    throw std::invalid_argument("unknown suite: " + name);
  }
  return execute(name, config, jobs, cases);
}

}  // namespace sv
