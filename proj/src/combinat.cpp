#include "sv/combinat.hpp"

#include <stdexcept>
#include <string>

namespace sv {

i64 checked_mul(i64 a, i64 b) {
  i64 out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw std::overflow_error("integer overflow in multiplication");
  }
  return out;
}

i64 checked_add(i64 a, i64 b) {
  i64 out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw std::overflow_error("integer overflow in addition");
  }
  return out;
}

i64 binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  i64 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = checked_mul(r, n - k + i);
    r /= i;  // exact at every step
  }
  return r;
}

Shape::Shape(std::vector<int> f) : factors(std::move(f)) {
  if (factors.empty()) throw std::invalid_argument("shape needs at least one factor");
  for (int n : factors) {
    if (n < 1) throw std::invalid_argument("shape entries must be >= 1");
  }
}

int Shape::total_dim() const {
  int n = 0;
  for (int f : factors) n += f;
  return n;
}

Multidegree::Multidegree(std::vector<int> d) : degrees(std::move(d)) {
  if (degrees.empty()) throw std::invalid_argument("multidegree needs at least one entry");
  for (int a : degrees) {
    if (a < 0) throw std::invalid_argument("multidegree entries must be >= 0");
  }
}

int Multidegree::total() const {
  int a = 0;
  for (int d : degrees) a += d;
  return a;
}

VarietySpec::VarietySpec(Shape s, Multidegree d)
    : shape(std::move(s)), degree(std::move(d)) {
  if (shape.count() != degree.count()) {
    throw std::invalid_argument("shape and degree lengths differ");
  }
  for (int a : degree.degrees) {
    if (a < 1) throw std::invalid_argument("embedding degrees must be >= 1");
  }
}

i64 VarietySpec::ring_dim() const { return multidegree_dimension(shape, degree); }

std::vector<int> flatten_exponents(const MultiMonomial& m) {
  std::vector<int> flat;
  std::size_t total = 0;
  for (const auto& row : m.exponents) total += row.size();
  flat.reserve(total);
  for (const auto& row : m.exponents) flat.insert(flat.end(), row.begin(), row.end());
  return flat;
}

i64 multidegree_dimension(const Shape& shape, const Multidegree& degree) {
  if (shape.count() != degree.count()) {
    throw std::invalid_argument("shape and degree lengths differ");
  }
  i64 dim = 1;
  for (int i = 0; i < shape.count(); ++i) {
    dim = checked_mul(dim, binomial(shape.factors[i] + degree.degrees[i], shape.factors[i]));
  }
  return dim;
}

namespace {

// Exponent vectors of the degree-d monomials in `nvars` variables, listed
// lexicographically descending, e.g. (2,0), (1,1), (0,2).
void monomials_of_degree(int nvars, int d, std::vector<int>& cur,
                         std::vector<std::vector<int>>& out) {
  if (nvars == 1) {
    cur.push_back(d);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int e = d; e >= 0; --e) {
    cur.push_back(e);
    monomials_of_degree(nvars - 1, d - e, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<MultiMonomial> enumerate_monomials(const Shape& shape,
                                               const Multidegree& degree,
                                               std::size_t size_cap) {
  const i64 total = multidegree_dimension(shape, degree);
  if (static_cast<std::uint64_t>(total) > size_cap) {
    throw CapExceededError(static_cast<std::size_t>(total), size_cap);
  }

  const int t = shape.count();
  std::vector<std::vector<std::vector<int>>> per_factor(t);
  for (int i = 0; i < t; ++i) {
    std::vector<int> cur;
    monomials_of_degree(shape.factors[i] + 1, degree.degrees[i], cur, per_factor[i]);
  }

  std::vector<MultiMonomial> out;
  out.reserve(static_cast<std::size_t>(total));
  std::vector<std::size_t> idx(t, 0);
  while (true) {
    MultiMonomial m;
    m.exponents.reserve(t);
    for (int i = 0; i < t; ++i) m.exponents.push_back(per_factor[i][idx[i]]);
    out.push_back(std::move(m));
    // odometer, last factor fastest
    int i = t - 1;
    while (i >= 0) {
      if (++idx[i] < per_factor[i].size()) break;
      idx[i] = 0;
      --i;
    }
    if (i < 0) break;
  }
  return out;
}

i64 expected_secant_dim(i64 N, int n, int s) {
  if (s < 1) throw std::invalid_argument("s must be >= 1");
  if (N < n || n < 0) throw std::invalid_argument("need N >= n >= 0");
  const i64 unconstrained = checked_add(checked_mul(static_cast<i64>(s), n), s - 1);
  return std::min(N, unconstrained);
}

i64 expected_grassmann_dim(i64 N, int n, int k, int s) {
  if (k < 0) throw std::invalid_argument("k must be >= 0");
  if (s < k + 1) throw std::invalid_argument("need s >= k+1 spanning points");
  if (N < n || n < 0) throw std::invalid_argument("need N >= n >= 0");
  const i64 lhs = checked_add(checked_mul(static_cast<i64>(s), n),
                              checked_mul(k + 1, static_cast<i64>(s) - k - 1));
  const i64 rhs = checked_mul(k + 1, N - k);
  return std::min(lhs, rhs);
}

}  // namespace sv
