#include "tesseract/tensor.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace tesseract {

std::size_t shape_size(const std::vector<int>& shape) {
  std::size_t n = 1;
  for (int d : shape) {
    if (d <= 0) throw std::invalid_argument("tensor mode sizes must be positive");
    n *= static_cast<std::size_t>(d);
  }
  return n;
}

DenseTensor::DenseTensor(std::vector<int> shape, double fill)
    : shape_(std::move(shape)), data_(shape_size(shape_), fill) {}

DenseTensor::DenseTensor(std::vector<int> shape, std::vector<double> data)
    : shape_(std::move(shape)), data_(std::move(data)) {
  if (data_.size() != shape_size(shape_))
    throw std::invalid_argument("tensor data length does not match shape");
}

std::size_t DenseTensor::flat_index(const MultiIndex& idx) const {
  if (idx.size() != shape_.size())
    throw std::invalid_argument("multi-index order mismatch");
  std::size_t flat = 0;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] < 0 || idx[i] >= shape_[i])
      throw std::out_of_range("multi-index out of range");
    flat = flat * static_cast<std::size_t>(shape_[i]) + static_cast<std::size_t>(idx[i]);
  }
  return flat;
}

MultiIndex DenseTensor::unflatten(std::size_t flat) const {
  MultiIndex idx(shape_.size());
  for (std::size_t i = shape_.size(); i-- > 0;) {
    idx[i] = static_cast<int>(flat % static_cast<std::size_t>(shape_[i]));
    flat /= static_cast<std::size_t>(shape_[i]);
  }
  return idx;
}

bool DenseTensor::all_finite() const {
  for (double v : data_)
    if (!std::isfinite(v)) return false;
  return true;
}

double DenseTensor::max_entry() const {
  double m = -std::numeric_limits<double>::infinity();
  for (double v : data_) m = std::max(m, v);
  return m;
}

double DenseTensor::min_entry() const {
  double m = std::numeric_limits<double>::infinity();
  for (double v : data_) m = std::min(m, v);
  return m;
}

DenseTensor outer_product(const std::vector<std::vector<double>>& vectors) {
  if (vectors.empty()) throw std::invalid_argument("outer_product: no vectors");
  std::vector<int> shape;
  shape.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (v.empty()) throw std::invalid_argument("outer_product: empty vector");
    shape.push_back(static_cast<int>(v.size()));
  }
  DenseTensor out(shape);
  const std::size_t total = out.size();
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t rem = flat;
    double prod = 1.0;
    for (std::size_t i = shape.size(); i-- > 0;) {
      prod *= vectors[i][rem % static_cast<std::size_t>(shape[i])];
      rem /= static_cast<std::size_t>(shape[i]);
    }
    out[flat] = prod;
  }
  return out;
}

DenseTensor contract(const DenseTensor& a, const DenseTensor& b,
                     const std::vector<std::pair<int, int>>& shared_modes) {
  const auto& sa = a.shape();
  const auto& sb = b.shape();
  std::vector<bool> a_shared(sa.size(), false), b_shared(sb.size(), false);
  for (auto [ma, mb] : shared_modes) {
    if (ma < 0 || ma >= static_cast<int>(sa.size()) || mb < 0 ||
        mb >= static_cast<int>(sb.size()))
      throw std::invalid_argument("contract: mode out of range");
    if (a_shared[ma] || b_shared[mb])
      throw std::invalid_argument("contract: repeated mode in pairing");
    if (sa[ma] != sb[mb])
      throw std::invalid_argument("contract: paired mode sizes differ");
    a_shared[ma] = true;
    b_shared[mb] = true;
  }

  std::vector<int> a_free, b_free;
  for (int i = 0; i < static_cast<int>(sa.size()); ++i)
    if (!a_shared[i]) a_free.push_back(i);
  for (int i = 0; i < static_cast<int>(sb.size()); ++i)
    if (!b_shared[i]) b_free.push_back(i);

  std::vector<int> out_shape;
  for (int i : a_free) out_shape.push_back(sa[i]);
  for (int i : b_free) out_shape.push_back(sb[i]);
  std::vector<int> shared_sizes;
  for (auto [ma, mb] : shared_modes) {
    (void)mb;
    shared_sizes.push_back(sa[ma]);
  }

  DenseTensor out(out_shape.empty() ? std::vector<int>{1} : out_shape);
  const bool scalar_result = out_shape.empty();

  MultiIndex ia(sa.size(), 0), ib(sb.size(), 0);
  const std::size_t n_out = scalar_result ? 1 : out.size();
  const std::size_t n_shared = shape_size(shared_sizes.empty() ? std::vector<int>{1} : shared_sizes);

  for (std::size_t of = 0; of < n_out; ++of) {
    // split the flat output index into a-free and b-free coordinates
    std::size_t rem = of;
    for (std::size_t i = b_free.size(); i-- > 0;) {
      ib[b_free[i]] = static_cast<int>(rem % static_cast<std::size_t>(sb[b_free[i]]));
      rem /= static_cast<std::size_t>(sb[b_free[i]]);
    }
    for (std::size_t i = a_free.size(); i-- > 0;) {
      ia[a_free[i]] = static_cast<int>(rem % static_cast<std::size_t>(sa[a_free[i]]));
      rem /= static_cast<std::size_t>(sa[a_free[i]]);
    }
    double sum = 0.0;
    for (std::size_t sf = 0; sf < n_shared; ++sf) {
      std::size_t srem = sf;
      for (std::size_t i = shared_modes.size(); i-- > 0;) {
        int v = static_cast<int>(srem % static_cast<std::size_t>(shared_sizes[i]));
        srem /= static_cast<std::size_t>(shared_sizes[i]);
        ia[shared_modes[i].first] = v;
        ib[shared_modes[i].second] = v;
      }
      sum += a.at(ia) * b.at(ib);
    }
    out[of] = sum;
  }
  return out;
}

double inner_product_full(const DenseTensor& a, const DenseTensor& b) {
  if (a.shape() != b.shape())
    throw std::invalid_argument("inner_product_full: shape mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double frobenius_norm(const DenseTensor& t) {
  double s = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) s += t[i] * t[i];
  return std::sqrt(s);
}

DenseTensor add(const DenseTensor& a, const DenseTensor& b) {
  if (a.shape() != b.shape()) throw std::invalid_argument("add: shape mismatch");
  DenseTensor out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

DenseTensor scale(const DenseTensor& a, double c) {
  DenseTensor out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] *= c;
  return out;
}

double max_abs_diff(const DenseTensor& a, const DenseTensor& b) {
  if (a.shape() != b.shape()) throw std::invalid_argument("max_abs_diff: shape mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

void save_tensor(std::ostream& os, const DenseTensor& t) {
  os.precision(17);
  for (std::size_t i = 0; i < t.shape().size(); ++i)
    os << (i ? " " : "") << t.shape()[i];
  os << "\n";
  for (std::size_t i = 0; i < t.size(); ++i) os << (i ? " " : "") << t[i];
  os << "\n";
}

DenseTensor load_tensor(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw std::runtime_error("tensor file: missing shape line");
  std::istringstream shape_ss(line);
  std::vector<int> shape;
  int d;
  while (shape_ss >> d) shape.push_back(d);
  if (shape.empty()) throw std::runtime_error("tensor file: empty shape line");
  if (!std::getline(is, line)) throw std::runtime_error("tensor file: missing data line");
  std::istringstream data_ss(line);
  std::vector<double> data;
  data.reserve(shape_size(shape));
  double v;
  while (data_ss >> v) data.push_back(v);
  return DenseTensor(shape, std::move(data));
}

void save_tensor_file(const std::string& path, const DenseTensor& t) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open for write: " + path);
  save_tensor(os, t);
}

DenseTensor load_tensor_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open for read: " + path);
  return load_tensor(is);
}

}  // namespace tesseract
