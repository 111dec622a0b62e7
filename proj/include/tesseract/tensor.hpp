#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace tesseract {

using MultiIndex = std::vector<int>;

// Dense order-n array of reals, row-major. Modes typically index agent
// actions (or states), so shapes stay small but orders can reach 6-8.
class DenseTensor {
 public:
  DenseTensor() = default;
  explicit DenseTensor(std::vector<int> shape, double fill = 0.0);
  DenseTensor(std::vector<int> shape, std::vector<double> data);

  const std::vector<int>& shape() const { return shape_; }
  int order() const { return static_cast<int>(shape_.size()); }
  std::size_t size() const { return data_.size(); }

  double operator[](std::size_t i) const { return data_[i]; }
  double& operator[](std::size_t i) { return data_[i]; }
  double at(const MultiIndex& idx) const { return data_[flat_index(idx)]; }
  double& at(const MultiIndex& idx) { return data_[flat_index(idx)]; }

  std::size_t flat_index(const MultiIndex& idx) const;
  MultiIndex unflatten(std::size_t flat) const;

  const std::vector<double>& data() const { return data_; }
  std::vector<double>& data() { return data_; }

  bool all_finite() const;
  double max_entry() const;
  double min_entry() const;

 private:
  std::vector<int> shape_;
  std::vector<double> data_;
};

std::size_t shape_size(const std::vector<int>& shape);

// entry(i1..in) = v1[i1] * ... * vn[in]
DenseTensor outer_product(const std::vector<std::vector<double>>& vectors);

// Sum over the paired index sets; free modes of `a` precede free modes of
// `b` in the result. Pairs are (mode-in-a, mode-in-b), zero-based.
DenseTensor contract(const DenseTensor& a, const DenseTensor& b,
                     const std::vector<std::pair<int, int>>& shared_modes);

double inner_product_full(const DenseTensor& a, const DenseTensor& b);
double frobenius_norm(const DenseTensor& t);

DenseTensor add(const DenseTensor& a, const DenseTensor& b);
DenseTensor scale(const DenseTensor& a, double c);
double max_abs_diff(const DenseTensor& a, const DenseTensor& b);

// Text format: line 1 = space-separated shape, line 2 = row-major entries.
void save_tensor(std::ostream& os, const DenseTensor& t);
DenseTensor load_tensor(std::istream& is);
void save_tensor_file(const std::string& path, const DenseTensor& t);
DenseTensor load_tensor_file(const std::string& path);

}  // namespace tesseract
