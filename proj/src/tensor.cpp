#include "semcond/tensor.hpp"

#include <cmath>
#include <sstream>

#include "semcond/errors.hpp"

namespace semcond {

namespace {
int64_t product(const std::vector<int64_t>& shape) {
  int64_t n = 1;
  for (int64_t d : shape) {
    if (d <= 0) throw DataError("tensor dimension must be positive");
    n *= d;
  }
  return n;
}
}  // namespace

Tensor Tensor::zeros(std::vector<int64_t> shape) {
  Tensor t;
  t.v.assign(static_cast<size_t>(product(shape)), 0.0);
  t.shape = std::move(shape);
  return t;
}

Tensor Tensor::full(std::vector<int64_t> shape, double value) {
  Tensor t = zeros(std::move(shape));
  for (double& x : t.v) x = value;
  return t;
}

Tensor Tensor::scalar(double value) {
  Tensor t;
  t.shape = {1};
  t.v = {value};
  return t;
}

Tensor Tensor::matrix(int64_t rows, int64_t cols, std::vector<double> data) {
  if (static_cast<int64_t>(data.size()) != rows * cols)
    throw DataError("matrix data size does not match rows*cols");
  Tensor t;
  t.shape = {rows, cols};
  t.v = std::move(data);
  return t;
}

Tensor Tensor::vector(std::vector<double> data) {
  if (data.empty()) throw DataError("vector must be non-empty");
  Tensor t;
  t.shape = {static_cast<int64_t>(data.size())};
  t.v = std::move(data);
  return t;
}

int64_t Tensor::numel() const {
  int64_t n = 1;
  for (int64_t d : shape) n *= d;
  return shape.empty() ? 0 : n;
}

int64_t Tensor::rows() const {
  if (rank() != 2) throw DataError("rows() requires a rank-2 tensor, got " + shape_str());
  return shape[0];
}

int64_t Tensor::cols() const {
  if (rank() != 2) throw DataError("cols() requires a rank-2 tensor, got " + shape_str());
  return shape[1];
}

double Tensor::item() const {
  if (!is_scalar()) throw DataError("item() requires a scalar tensor, got " + shape_str());
  return v[0];
}

double& Tensor::at(int64_t i, int64_t j) {
  return v[static_cast<size_t>(i * cols() + j)];
}

double Tensor::at(int64_t i, int64_t j) const {
  return v[static_cast<size_t>(i * cols() + j)];
}

bool Tensor::all_finite() const {
  for (double x : v)
    if (!std::isfinite(x)) return false;
  return true;
}

std::string Tensor::shape_str() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < shape.size(); ++i) os << (i ? "x" : "") << shape[i];
  os << "]";
  return os.str();
}

}  // namespace semcond
