#include "sv/report_io.hpp"

#include <sstream>

namespace sv {

namespace {

constexpr const char* kDefectCaveat =
    "dimension is a probabilistic lower bound: the reported defect is exact "
    "or overcounted, never undercounted";

Json certificate_json(const SplitCertificate& cert) {
  Json j;
  j["b"] = cert.b.degrees;
  j["c"] = cert.c.degrees;
  j["dim_Ib"] = cert.dim_Ib;
  j["dim_Ic"] = cert.dim_Ic;
  j["proves_defect"] = cert.proves_defect;
  return j;
}

SplitCertificate certificate_from_json(const Json& j) {
  SplitCertificate cert{Multidegree(j.at("b").get<std::vector<int>>()),
                        Multidegree(j.at("c").get<std::vector<int>>()),
                        j.at("dim_Ib").get<i64>(),
                        j.at("dim_Ic").get<i64>(),
                        j.at("proves_defect").get<bool>()};
  return cert;
}

}  // namespace

std::string join_ints(const std::vector<int>& values, char sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

Json to_json(const SecantReport& report) {
  Json j;
  j["type"] = "secant_report";
  j["factors"] = report.spec.shape.factors;
  j["degree"] = report.spec.degree.degrees;
  j["s"] = report.s;
  j["N"] = report.spec.ambient_dim();
  j["n"] = report.spec.variety_dim();
  j["hilbert"] = report.hilbert;
  j["dim_expected"] = report.dim_expected;
  j["dim_actual"] = report.dim_actual;
  j["defect"] = report.defect;
  j["defective"] = report.defect > 0;
  j["method"] = method_name(report.method);
  j["certificate"] = report.certificate ? certificate_json(*report.certificate) : Json(nullptr);
  if (report.defect > 0) j["caveat"] = kDefectCaveat;
  j["prime"] = report.prime;
  j["seed"] = report.seed;
  j["trials"] = report.trials;
  j["per_trial_ranks"] = report.per_trial_ranks;
  return j;
}

SecantReport secant_report_from_json(const Json& j) {
  SecantReport report{VarietySpec(Shape(j.at("factors").get<std::vector<int>>()),
                                  Multidegree(j.at("degree").get<std::vector<int>>())),
                      j.at("s").get<int>(),
                      j.at("hilbert").get<i64>(),
                      j.at("dim_actual").get<i64>(),
                      j.at("dim_expected").get<i64>(),
                      j.at("defect").get<i64>(),
                      method_from_name(j.at("method").get<std::string>()),
                      std::nullopt,
                      j.at("prime").get<std::uint64_t>(),
                      j.at("seed").get<std::uint64_t>(),
                      j.at("trials").get<int>(),
                      j.at("per_trial_ranks").get<std::vector<i64>>()};
  if (!j.at("certificate").is_null()) {
    report.certificate = certificate_from_json(j.at("certificate"));
  }
  return report;
}

Json to_json(const GrassmannReport& report) {
  Json j;
  j["type"] = "grassmann_report";
  j["factors"] = report.base.shape.factors;
  j["degree"] = report.base.degree.degrees;
  j["k"] = report.k;
  j["s"] = report.s;
  j["product_factors"] = report.product.shape.factors;
  j["product_degree"] = report.product.degree.degrees;
  j["dim_expected"] = report.dim_expected;
  j["dim_actual"] = report.dim_actual;
  j["product_defect"] = report.product_defect;
  j["defect"] = report.defect;
  j["defective"] = report.defect > 0;
  j["product_report"] = to_json(report.product_report);
  return j;
}

GrassmannReport grassmann_report_from_json(const Json& j) {
  GrassmannReport report{VarietySpec(Shape(j.at("factors").get<std::vector<int>>()),
                                     Multidegree(j.at("degree").get<std::vector<int>>())),
                         j.at("k").get<int>(),
                         j.at("s").get<int>(),
                         VarietySpec(Shape(j.at("product_factors").get<std::vector<int>>()),
                                     Multidegree(j.at("product_degree").get<std::vector<int>>())),
                         j.at("dim_expected").get<i64>(),
                         j.at("dim_actual").get<i64>(),
                         j.at("product_defect").get<i64>(),
                         j.at("defect").get<i64>(),
                         secant_report_from_json(j.at("product_report"))};
  return report;
}

Json to_json(const SuiteOutcome& outcome) {
  Json j;
  j["type"] = "suite";
  j["suite"] = outcome.suite;
  j["prime"] = outcome.prime;
  j["seed"] = outcome.seed;
  j["total"] = outcome.cases.size();
  j["passed"] = outcome.passed();
  j["failed"] = outcome.failed();
  j["all_pass"] = outcome.all_pass();
  Json cases = Json::array();
  for (const auto& c : outcome.cases) {
    Json cj;
    cj["name"] = c.name;
    cj["pass"] = c.pass;
    cj["detail"] = c.detail;
    cases.push_back(std::move(cj));
  }
  j["cases"] = std::move(cases);
  return j;
}

std::string render_text(const SecantReport& report) {
  std::ostringstream os;
  os << "variety: factors (" << join_ints(report.spec.shape.factors, ',') << "), degree ("
     << join_ints(report.spec.degree.degrees, ',') << ")\n";
  os << "N=" << report.spec.ambient_dim() << " n=" << report.spec.variety_dim()
     << " s=" << report.s << "\n";
  os << "hilbert=" << report.hilbert << " dim_actual=" << report.dim_actual
     << " dim_expected=" << report.dim_expected << " defect=" << report.defect << "\n";
  if (report.certificate) {
    const auto& cert = *report.certificate;
    os << "certificate: b=(" << join_ints(cert.b.degrees, ',') << ") c=("
       << join_ints(cert.c.degrees, ',') << ") dim_Ib=" << cert.dim_Ib
       << " dim_Ic=" << cert.dim_Ic
       << (cert.proves_defect ? " [proves defect]" : " [not a proof: expected < N]") << "\n";
  } else if (report.defect > 0) {
    os << "certificate: none found\n";
  }
  if (report.defect > 0) os << "note: " << kDefectCaveat << "\n";
  os << "method=" << method_name(report.method) << " prime=" << report.prime
     << " seed=" << report.seed << " trials=" << report.trials << " ranks=[";
  for (std::size_t i = 0; i < report.per_trial_ranks.size(); ++i) {
    if (i > 0) os << ",";
    os << report.per_trial_ranks[i];
  }
  os << "]\n";
  return os.str();
}

std::string render_text(const GrassmannReport& report) {
  std::ostringstream os;
  os << "grassmann secant of factors (" << join_ints(report.base.shape.factors, ',')
     << "), degree (" << join_ints(report.base.degree.degrees, ',') << "), k=" << report.k
     << " s=" << report.s << "\n";
  os << "product: factors (" << join_ints(report.product.shape.factors, ',') << "), degree ("
     << join_ints(report.product.degree.degrees, ',') << ")\n";
  os << "dim_actual=" << report.dim_actual << " dim_expected=" << report.dim_expected
     << " defect=" << report.defect << " (product defect " << report.product_defect << ")\n";
  os << "--- product computation ---\n" << render_text(report.product_report);
  return os.str();
}

std::string render_text(const SuiteOutcome& outcome) {
  std::ostringstream os;
  for (const auto& c : outcome.cases) {
    os << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
    if (!c.detail.empty()) os << " - " << c.detail;
    os << "\n";
  }
  os << "suite " << outcome.suite << ": " << outcome.passed() << "/" << outcome.cases.size()
     << " passed (prime=" << outcome.prime << " seed=" << outcome.seed << ")\n";
  return os.str();
}

Json to_json(const std::vector<ScanRow>& rows) {
  Json j;
  j["type"] = "scan";
  Json arr = Json::array();
  for (const auto& row : rows) {
    Json rj;
    rj["factors"] = row.shape.factors;
    rj["degree"] = row.degree.degrees;
    rj["s"] = row.s;
    if (row.report) {
      rj["report"] = to_json(*row.report);
    } else {
      rj["report"] = nullptr;
      rj["skipped"] = row.skipped;
    }
    arr.push_back(std::move(rj));
  }
  j["rows"] = std::move(arr);
  return j;
}

std::string scan_csv(const std::vector<ScanRow>& rows) {
  std::ostringstream os;
  os << "factors,degree,s,N,dim_expected,dim_actual,defect,certified,prime,seed,trials\n";
  for (const auto& row : rows) {
    os << join_ints(row.shape.factors, 'x') << "," << join_ints(row.degree.degrees, 'x')
       << "," << row.s << ",";
    if (row.report) {
      const auto& r = *row.report;
      const bool certified = r.certificate && r.certificate->proves_defect;
      os << r.spec.ambient_dim() << "," << r.dim_expected << "," << r.dim_actual << ","
         << r.defect << "," << (certified ? "true" : "false") << "," << r.prime << ","
         << r.seed << "," << r.trials;
    } else {
      os << ",,,,skipped,,,";
    }
    os << "\n";
  }
  return os.str();
}

std::string render_text(const std::vector<ScanRow>& rows) { return scan_csv(rows); }

}  // namespace sv
