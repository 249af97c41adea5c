#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace semcond {

// Dense row-major tensor of doubles, rank 1 or 2. A scalar is a rank-1
// tensor with a single element.
struct Tensor {
  std::vector<int64_t> shape;
  std::vector<double> v;

  Tensor() = default;

  static Tensor zeros(std::vector<int64_t> shape);
  static Tensor full(std::vector<int64_t> shape, double value);
  static Tensor scalar(double value);
  static Tensor matrix(int64_t rows, int64_t cols, std::vector<double> data);
  static Tensor vector(std::vector<double> data);

  int64_t numel() const;
  int64_t rank() const { return static_cast<int64_t>(shape.size()); }
  int64_t rows() const;
  int64_t cols() const;

  bool is_scalar() const { return numel() == 1; }
  double item() const;

  double& at(int64_t i, int64_t j);
  double at(int64_t i, int64_t j) const;

  bool same_shape(const Tensor& o) const { return shape == o.shape; }
  bool all_finite() const;
  std::string shape_str() const;
};

}  // namespace semcond
