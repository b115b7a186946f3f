#include "sv/secant.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "sv/fatpoints.hpp"
#include "sv/reduction.hpp"

namespace sv {

namespace {

constexpr std::uint64_t kCertificateStream = 0xCE47F1CA7E000000ULL;

// Rank of the double-point conditions system for one fresh sample, using
// the configured construction(s). With Method::both the two matrices are
// built from the same points and must agree.
i64 sampled_rank(const VarietySpec& spec, int s, const RunConfig& config,
                 const PrimeField& field, std::uint64_t trial_seed) {
  const auto scheme = sample_scheme(spec.shape, s, 2, trial_seed, field);
  switch (config.method) {
    case Method::direct:
      return rank(conditions_matrix(scheme, spec.degree, config.size_cap));
    case Method::reduced:
      return rank(reduced_conditions_matrix(spec.shape, spec.degree, scheme.points, 2,
                                            field, config.size_cap));
    case Method::both: {
      const i64 direct = rank(conditions_matrix(scheme, spec.degree, config.size_cap));
      const i64 reduced = rank(reduced_conditions_matrix(spec.shape, spec.degree,
                                                         scheme.points, 2, field,
                                                         config.size_cap));
      if (direct != reduced) throw MethodDisagreementError(direct, reduced);
      return direct;
    }
  }
  throw std::logic_error("unreachable");
}

RankResult hilbert_with_methods(const VarietySpec& spec, int s, const RunConfig& config) {
  if (config.trials < 1) throw std::invalid_argument("need at least one trial");
  const PrimeField field(config.prime);

  RankResult result;
  result.prime = config.prime;
  result.seed = config.seed;
  for (int t = 0; t < config.trials; ++t) {
    result.per_trial_ranks.push_back(
        sampled_rank(spec, s, config, field, derive_seed(config.seed, t)));
  }
  const auto [lo, hi] =
      std::minmax_element(result.per_trial_ranks.begin(), result.per_trial_ranks.end());
  if (*lo != *hi) {
    result.per_trial_ranks.push_back(
        sampled_rank(spec, s, config, field, derive_seed(config.seed, config.trials)));
  }
  result.trials = static_cast<int>(result.per_trial_ranks.size());
  result.rank = *std::max_element(result.per_trial_ranks.begin(), result.per_trial_ranks.end());
  return result;
}

}  // namespace

SecantReport secant_dimension(const VarietySpec& spec, int s, const RunConfig& config) {
  if (s < 1) throw std::invalid_argument("s must be >= 1");

  const i64 N = spec.ambient_dim();
  const int n = spec.variety_dim();
  const RankResult ranks = hilbert_with_methods(spec, s, config);

  SecantReport report{spec,
                      s,
                      ranks.rank,
                      ranks.rank - 1,
                      expected_secant_dim(N, n, s),
                      0,
                      config.method,
                      std::nullopt,
                      config.prime,
                      config.seed,
                      ranks.trials,
                      ranks.per_trial_ranks};
  report.defect = report.dim_expected - report.dim_actual;
  if (report.defect > 0) {
    report.certificate = find_split_certificate(spec, s, config);
  }
  return report;
}

std::optional<SplitCertificate> find_split_certificate(const VarietySpec& spec, int s,
                                                       const RunConfig& config) {
  if (s < 1) throw std::invalid_argument("s must be >= 1");
  const Multidegree& a = spec.degree;
  const int t = a.count();
  const bool fills = expected_secant_dim(spec.ambient_dim(), spec.variety_dim(), s) ==
                     spec.ambient_dim();

  // dim of the degree-b piece of the ideal of s generic simple points,
  // cached: the same piece shows up as b for one splitting and c for another.
  std::map<std::vector<int>, i64> cache;
  std::uint64_t stream = 0;
  auto ideal_dim = [&](const Multidegree& b) {
    auto it = cache.find(b.degrees);
    if (it != cache.end()) return it->second;
    RunConfig sub = config;
    sub.seed = derive_seed(derive_seed(config.seed, kCertificateStream), stream++);
    const i64 dim = multidegree_dimension(spec.shape, b) -
                    hilbert_function(spec.shape, s, 1, b, sub).rank;
    cache.emplace(b.degrees, dim);
    return dim;
  };

  // odometer over all splittings, first entry slowest; skip b = 0 and c = 0,
  // and visit each unordered pair once by requiring b <= c lexicographically
  std::vector<int> b(static_cast<std::size_t>(t), 0);
  while (true) {
    std::vector<int> c(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) c[static_cast<std::size_t>(i)] = a.degrees[static_cast<std::size_t>(i)] - b[static_cast<std::size_t>(i)];
    const bool b_zero = std::all_of(b.begin(), b.end(), [](int v) { return v == 0; });
    const bool c_zero = std::all_of(c.begin(), c.end(), [](int v) { return v == 0; });
    if (!b_zero && !c_zero && b <= c) {
      const Multidegree db(b), dc(c);
      const i64 dim_b = ideal_dim(db);
      if (dim_b >= 1) {
        const i64 dim_c = ideal_dim(dc);
        if (dim_c >= 1) {
          return SplitCertificate{db, dc, dim_b, dim_c, fills};
        }
      }
    }
    int i = t - 1;
    while (i >= 0) {
      if (++b[static_cast<std::size_t>(i)] <= a.degrees[static_cast<std::size_t>(i)]) break;
      b[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
  }
  return std::nullopt;
}

GrassmannReport grassmann_secant_dimension(const VarietySpec& spec, int k, int s,
                                           const RunConfig& config) {
  if (k < 0) throw std::invalid_argument("k must be >= 0");
  if (s < k + 1) throw std::invalid_argument("need s >= k+1 spanning points");

  // k = 0 asks for the ordinary secant variety; a P^0 factor would change
  // nothing, so the product is the variety itself.
  VarietySpec product = spec;
  if (k >= 1) {
    auto factors = spec.shape.factors;
    auto degrees = spec.degree.degrees;
    factors.push_back(k);
    degrees.push_back(1);
    product = VarietySpec(Shape(factors), Multidegree(degrees));
  }

  GrassmannReport report{spec, k, s, product, 0, 0, 0, 0,
                         secant_dimension(product, s, config)};
  report.dim_expected = expected_grassmann_dim(spec.ambient_dim(), spec.variety_dim(), k, s);
  report.product_defect = report.product_report.defect;
  report.defect = report.product_defect;
  report.dim_actual = report.dim_expected - report.defect;
  return report;
}

Classification classify_p1xp1(int a1, int a2, int s) {
  if (a1 < a2) std::swap(a1, a2);
  if (a2 < 1) throw std::invalid_argument("degrees must be >= 1");
  if (s < 1) throw std::invalid_argument("s must be >= 1");

  const i64 N = checked_mul(a1 + 1, a2 + 1) - 1;
  const i64 expected = expected_secant_dim(N, 2, s);
  if (a1 % 2 == 0 && a1 >= 2 && a2 == 2 && s == a1 + 1) {
    return Classification{3LL * s - 2, 1};
  }
  return Classification{expected, 0};
}

Classification classify_p1cubed(int a1, int a2, int a3, int s) {
  std::vector<int> a{a1, a2, a3};
  std::sort(a.begin(), a.end(), std::greater<int>());
  if (a[2] < 1) throw std::invalid_argument("degrees must be >= 1");
  if (s < 1) throw std::invalid_argument("s must be >= 1");

  const i64 N = checked_mul(checked_mul(a[0] + 1, a[1] + 1), a[2] + 1) - 1;
  const i64 expected = expected_secant_dim(N, 3, s);
  if (a[0] == 2 && a[1] == 2 && a[2] == 2 && s == 7) {
    return Classification{expected - 2, 2};
  }
  if (a[0] % 2 == 0 && a[0] >= 2 && a[1] == 1 && a[2] == 1 && s == a[0] + 1) {
    return Classification{expected - 1, 1};
  }
  return Classification{expected, 0};
}

namespace {

DefectiveExample make_example(int family, std::string name, std::vector<int> shape,
                              std::vector<int> degree, int s, std::vector<int> b,
                              std::vector<int> c) {
  return DefectiveExample{family,          std::move(name),
                          Shape(std::move(shape)), Multidegree(std::move(degree)),
                          s,               Multidegree(std::move(b)),
                          Multidegree(std::move(c)),
                          true};
}

[[noreturn]] void out_of_range(int family, const std::string& what) {
  throw std::domain_error("family " + std::to_string(family) + ": " + what);
}

}  // namespace

DefectiveExample defective_family_instance(int family, int m, int k, int r) {
  switch (family) {
    case 1: {  // P^1 x P^m, degree (2k, 2)
      if (m < 1) out_of_range(family, "needs m >= 1");
      if (k < 1) out_of_range(family, "needs k >= 1");
      const int s = ((2 * k + 1) * (m + 1) + 1) / 2;  // ceil((2k+1)(m+1)/2)
      return make_example(1, "P1 x Pm, degree (2k,2)", {1, m}, {2 * k, 2}, s, {k, 1}, {k, 1});
    }
    case 2:  // P^2 x P^2, degree (2, 2)
      return make_example(2, "P2 x P2, degree (2,2)", {2, 2}, {2, 2}, 8, {1, 1}, {1, 1});
    case 3: {  // P^1 x P^1 x P^m, degree (1, 1, 2)
      if (m < 1) out_of_range(family, "needs m >= 1");
      return make_example(3, "P1 x P1 x Pm, degree (1,1,2)", {1, 1, m}, {1, 1, 2},
                          2 * m + 1, {1, 0, 1}, {0, 1, 1});
    }
    case 4: {  // P^1 x P^m x P^m, degree (2k, 1, 1)
      if (m < 1) out_of_range(family, "needs m >= 1");
      if (k < 1) out_of_range(family, "needs k >= 1");
      return make_example(4, "P1 x Pm x Pm, degree (2k,1,1)", {1, m, m}, {2 * k, 1, 1},
                          k * m + k + m, {k, 1, 0}, {k, 0, 1});
    }
    case 5: {  // P^1 x P^r x P^m, degree (r+m, 1, 1)
      if (m < 1) out_of_range(family, "needs m >= 1");
      if (r < 1) out_of_range(family, "needs r >= 1");
      // each split piece has dimension (r+1)(m+1) = s + 1, so exactly one
      // section survives the s points; pairing the degree-r part with the
      // P^m linear form (and vice versa) is what makes the count work for
      // r != m
      return make_example(5, "P1 x Pr x Pm, degree (r+m,1,1)", {1, r, m}, {r + m, 1, 1},
                          r * m + r + m, {r, 0, 1}, {m, 1, 0});
    }
    case 6: {  // P^1 x P^1 x P^m, degree (2, 2, 2), m <= 3
      if (m < 1 || m > 3) out_of_range(family, "needs 1 <= m <= 3");
      return make_example(6, "P1 x P1 x Pm, degree (2,2,2)", {1, 1, m}, {2, 2, 2},
                          4 * m + 3, {1, 1, 1}, {1, 1, 1});
    }
    case 7: {  // P^2 x P^m x P^m, degree (2, 1, 1)
      if (m < 1) out_of_range(family, "needs m >= 1");
      return make_example(7, "P2 x Pm x Pm, degree (2,1,1)", {2, m, m}, {2, 1, 1},
                          3 * m + 2, {1, 1, 0}, {1, 0, 1});
    }
    case 8:  // P^1 x P^1 x P^2 x P^5, degree (2, 1, 1, 1)
      return make_example(8, "P1 x P1 x P2 x P5, degree (2,1,1,1)", {1, 1, 2, 5},
                          {2, 1, 1, 1}, 11, {1, 1, 1, 0}, {1, 0, 0, 1});
    case 9: {  // P^1 x P^1 x P^1 x P^(2m-1), degree (m, 1, 1, 1)
      if (m < 1) out_of_range(family, "needs m >= 1");
      auto ex = make_example(9, "P1 x P1 x P1 x P(2m-1), degree (m,1,1,1)",
                             {1, 1, 1, 2 * m - 1}, {m, 1, 1, 1}, 4 * m - 1,
                             {m - 1, 1, 1, 0}, {1, 0, 0, 1});
      // m = 1 is defective of a different kind (dim 13, not 14): the
      // expected dimension does not fill the ambient space, so the
      // splitting is no proof there.
      ex.certificate_expected = m > 1;
      return ex;
    }
    case 10: {  // P^1 x P^1 x P^1 x P^(2m), degree (m, 1, 1, 1), m >= 4
      if (m < 4) out_of_range(family, "needs m >= 4");
      return make_example(10, "P1 x P1 x P1 x P(2m), degree (m,1,1,1)", {1, 1, 1, 2 * m},
                          {m, 1, 1, 1}, 4 * m - 1, {m - 1, 1, 1, 0}, {1, 0, 0, 1});
    }
    default:
      throw std::domain_error("family id must be 1..10");
  }
}

std::vector<DefectiveExample> defective_example_table(int m, int k, int r) {
  std::vector<DefectiveExample> out;
  for (int family = 1; family <= 10; ++family) {
    try {
      out.push_back(defective_family_instance(family, m, k, r));
    } catch (const std::domain_error&) {
      // family not defined at these parameters
    }
  }
  return out;
}

bool small_s_expected_dimension(const Shape& shape, const Multidegree& degree, int s,
                                const RunConfig& config) {
  if (shape.count() != degree.count()) {
    throw std::invalid_argument("shape and degree lengths differ");
  }
  const int t = shape.count();

  // sort factors ascending, carrying degrees along
  std::vector<int> order(static_cast<std::size_t>(t));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
    return shape.factors[static_cast<std::size_t>(i)] < shape.factors[static_cast<std::size_t>(j)];
  });
  std::vector<int> sorted_n, sorted_a;
  for (int i : order) {
    sorted_n.push_back(shape.factors[static_cast<std::size_t>(i)]);
    sorted_a.push_back(degree.degrees[static_cast<std::size_t>(i)]);
  }

  if (t == 2 && sorted_a[0] == 1 && sorted_a[1] == 1) {
    throw std::invalid_argument("two factors with degree (1,1) are excluded");
  }
  if (s < 1 || s > sorted_n[0] + 1) {
    throw std::invalid_argument("requires 1 <= s <= n_1 + 1 with n_1 the smallest factor");
  }

  const VarietySpec spec{Shape(sorted_n), Multidegree(sorted_a)};
  const SecantReport report = secant_dimension(spec, s, config);
  return report.dim_actual == static_cast<i64>(s) * (spec.variety_dim() + 1) - 1;
}

}  // namespace sv
