#include "sv/tensor.hpp"

#include <algorithm>
#include <stdexcept>

namespace sv {

namespace {

std::vector<int> make_axis_dims(const Shape& shape, const Multidegree& degree) {
  if (shape.count() != degree.count()) {
    throw std::invalid_argument("shape and degree lengths differ");
  }
  std::vector<int> dims;
  for (int i = 0; i < shape.count(); ++i) {
    for (int l = 0; l < degree.degrees[static_cast<std::size_t>(i)]; ++l) {
      dims.push_back(shape.factors[static_cast<std::size_t>(i)] + 1);
    }
  }
  if (dims.empty()) throw std::invalid_argument("tensor needs total degree >= 1");
  return dims;
}

std::size_t checked_size(const std::vector<int>& axis_dims, std::size_t size_cap) {
  i64 size = 1;
  for (int d : axis_dims) size = checked_mul(size, d);
  if (static_cast<std::uint64_t>(size) > size_cap) {
    throw CapExceededError(static_cast<std::size_t>(size), size_cap);
  }
  return static_cast<std::size_t>(size);
}

// which factor an index position belongs to
std::vector<int> position_factor(const Multidegree& degree) {
  std::vector<int> factor;
  for (int i = 0; i < degree.count(); ++i) {
    for (int l = 0; l < degree.degrees[static_cast<std::size_t>(i)]; ++l) factor.push_back(i);
  }
  return factor;
}

}  // namespace

std::size_t PartialSymTensor::flat_index(const std::vector<int>& idx) const {
  if (idx.size() != axis_dims.size()) throw std::invalid_argument("index arity mismatch");
  std::size_t flat = 0;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (idx[k] < 0 || idx[k] >= axis_dims[k]) throw std::out_of_range("tensor index");
    flat = flat * static_cast<std::size_t>(axis_dims[k]) + static_cast<std::size_t>(idx[k]);
  }
  return flat;
}

PartialSymTensor rank1_tensor(const std::vector<std::vector<std::uint64_t>>& vectors,
                              const Shape& shape, const Multidegree& degree,
                              const PrimeField& field, std::size_t size_cap) {
  if (static_cast<int>(vectors.size()) != shape.count()) {
    throw std::invalid_argument("need one vector per factor");
  }
  for (int i = 0; i < shape.count(); ++i) {
    const auto& v = vectors[static_cast<std::size_t>(i)];
    if (static_cast<int>(v.size()) != shape.factors[static_cast<std::size_t>(i)] + 1) {
      throw std::invalid_argument("vector length must be n_i + 1");
    }
    if (std::all_of(v.begin(), v.end(),
                    [&](std::uint64_t x) { return field.reduce(x) == 0; })) {
      throw std::invalid_argument("zero vector input");
    }
  }

  PartialSymTensor t{shape, degree, field, make_axis_dims(shape, degree), {}};
  const std::size_t size = checked_size(t.axis_dims, size_cap);
  t.entries.assign(size, 0);

  const std::vector<int> factor = position_factor(degree);
  const std::size_t a = t.order();
  std::vector<int> idx(a, 0);
  for (std::size_t flat = 0; flat < size; ++flat) {
    std::uint64_t val = 1;
    for (std::size_t k = 0; k < a; ++k) {
      val = field.mul(val, field.reduce(vectors[static_cast<std::size_t>(factor[k])]
                                               [static_cast<std::size_t>(idx[k])]));
    }
    t.entries[flat] = val;
    // odometer, last axis fastest
    for (std::size_t k = a; k-- > 0;) {
      if (++idx[k] < t.axis_dims[k]) break;
      idx[k] = 0;
    }
  }
  return t;
}

bool is_partially_symmetric(const PartialSymTensor& tensor) {
  const std::size_t a = tensor.order();
  // strides of the row-major layout
  std::vector<std::size_t> stride(a, 1);
  for (std::size_t k = a - 1; k-- > 0;) {
    stride[k] = stride[k + 1] * static_cast<std::size_t>(tensor.axis_dims[k + 1]);
  }
  const std::vector<int> factor = position_factor(tensor.degree);

  std::vector<int> idx(a, 0);
  for (std::size_t flat = 0; flat < tensor.entries.size(); ++flat) {
    for (std::size_t k = 0; k + 1 < a; ++k) {
      if (factor[k] != factor[k + 1] || idx[k] <= idx[k + 1]) continue;
      const std::size_t swapped = flat -
          static_cast<std::size_t>(idx[k]) * stride[k] -
          static_cast<std::size_t>(idx[k + 1]) * stride[k + 1] +
          static_cast<std::size_t>(idx[k]) * stride[k + 1] +
          static_cast<std::size_t>(idx[k + 1]) * stride[k];
      if (tensor.entries[flat] != tensor.entries[swapped]) return false;
    }
    for (std::size_t k = a; k-- > 0;) {
      if (++idx[k] < tensor.axis_dims[k]) break;
      idx[k] = 0;
    }
  }
  return true;
}

PartialSymTensor add(const PartialSymTensor& lhs, const PartialSymTensor& rhs) {
  if (lhs.shape != rhs.shape || lhs.degree != rhs.degree ||
      !(lhs.field == rhs.field)) {
    throw std::invalid_argument("tensor layouts differ");
  }
  PartialSymTensor out = lhs;
  for (std::size_t i = 0; i < out.entries.size(); ++i) {
    out.entries[i] = out.field.add(out.entries[i], rhs.entries[i]);
  }
  return out;
}

EmbeddedPoint embed_point(const PointTuple& pt, const VarietySpec& spec,
                          const PrimeField& field, std::size_t size_cap) {
  for (const auto& b : pt.blocks) {
    if (b.empty() || b[0] != 1) throw std::invalid_argument("point is not chart-normalized");
  }

  EmbeddedPoint out{{}, rank1_tensor(pt.blocks, spec.shape, spec.degree, field, size_cap)};
  const auto monomials = enumerate_monomials(spec.shape, spec.degree, size_cap);
  out.veronese_coords.reserve(monomials.size());
  for (const auto& m : monomials) {
    std::uint64_t val = 1;
    for (int i = 0; i < spec.shape.count(); ++i) {
      const auto& row = m.exponents[static_cast<std::size_t>(i)];
      for (std::size_t j = 0; j < row.size(); ++j) {
        val = field.mul(val, field.pow(pt.blocks[static_cast<std::size_t>(i)][j],
                                       static_cast<std::uint64_t>(row[j])));
      }
    }
    out.veronese_coords.push_back(val);
  }
  return out;
}

i64 flattening_rank(const PartialSymTensor& tensor, const std::vector<int>& row_axes) {
  const std::size_t a = tensor.order();
  std::vector<int> rows_sorted = row_axes;
  std::sort(rows_sorted.begin(), rows_sorted.end());
  if (rows_sorted.empty() || rows_sorted.size() >= a) {
    throw std::invalid_argument("row axes must be a nonempty proper subset");
  }
  for (std::size_t k = 0; k < rows_sorted.size(); ++k) {
    if (rows_sorted[k] < 0 || rows_sorted[k] >= static_cast<int>(a)) {
      throw std::invalid_argument("row axis out of range");
    }
    if (k > 0 && rows_sorted[k] == rows_sorted[k - 1]) {
      throw std::invalid_argument("duplicate row axis");
    }
  }

  std::vector<bool> is_row(a, false);
  for (int ax : rows_sorted) is_row[static_cast<std::size_t>(ax)] = true;
  std::size_t nrows = 1, ncols = 1;
  for (std::size_t k = 0; k < a; ++k) {
    (is_row[k] ? nrows : ncols) *= static_cast<std::size_t>(tensor.axis_dims[k]);
  }

  FpMatrix m(tensor.field, nrows, ncols);
  std::vector<int> idx(a, 0);
  for (std::size_t flat = 0; flat < tensor.entries.size(); ++flat) {
    std::size_t ri = 0, ci = 0;
    for (std::size_t k = 0; k < a; ++k) {
      if (is_row[k]) {
        ri = ri * static_cast<std::size_t>(tensor.axis_dims[k]) + static_cast<std::size_t>(idx[k]);
      } else {
        ci = ci * static_cast<std::size_t>(tensor.axis_dims[k]) + static_cast<std::size_t>(idx[k]);
      }
    }
    m(ri, ci) = tensor.entries[flat];
    for (std::size_t k = a; k-- > 0;) {
      if (++idx[k] < tensor.axis_dims[k]) break;
      idx[k] = 0;
    }
  }
  return rank(std::move(m));
}

}  // namespace sv
