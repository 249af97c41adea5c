#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "semcond/tensor.hpp"

namespace semcond {

using NodeId = int32_t;

enum class Op : uint8_t {
  kLeaf,
  kAdd,
  kSub,
  kMul,
  kDiv,
  kMatMul,
  kTranspose,
  kScale,
  kAddScalar,
  kAddRowVec,
  kRowSum,
  kColSum,
  kRowMax,
  kBroadcastRow,
  kBroadcastCol,
  kBroadcastFull,
  kSumAll,
  kExp,
  kLog,
  kLeakyRelu,
  kLeakyMask,
  kL2NormRows,
  kL2NormRowsBack,
  kSelectLabels,
  kScatterLabels,
  kConcatCols,
  kSliceCols,
  kEmbedCols,
  kStopGrad,
};

const char* op_name(Op op);

struct Node {
  Op op = Op::kLeaf;
  std::array<NodeId, 2> parent{-1, -1};
  int n_parents = 0;
  double attr_a = 0.0;  // scale factor / slope / added constant / slice begin
  double attr_b = 0.0;  // slice end / scatter width
  Tensor value;
  std::vector<int32_t> labels;  // kSelectLabels / kScatterLabels only
};

// Reverse-mode differentiation tape. Nodes are appended in evaluation order,
// so parents always precede children and vector order is a topological order.
// Every op evaluates eagerly at creation and rejects non-finite results.
//
// backward() emits the adjoint computation as ordinary nodes on the same
// tape. Gradients therefore stay differentiable: calling backward() again on
// a scalar function of a gradient node yields second-order derivatives,
// which is what the discriminator gradient penalty needs.
class Graph {
 public:
  NodeId leaf(Tensor t);

  NodeId add(NodeId x, NodeId y);
  NodeId sub(NodeId x, NodeId y);
  NodeId mul(NodeId x, NodeId y);
  NodeId div(NodeId x, NodeId y);
  NodeId matmul(NodeId x, NodeId y);
  NodeId transpose(NodeId x);
  NodeId scale(NodeId x, double c);
  NodeId add_scalar(NodeId x, double c);
  // x: [n,k], v: [k]; adds v to every row of x.
  NodeId add_rowvec(NodeId x, NodeId v);
  NodeId row_sum(NodeId x);   // [n,k] -> [n]
  NodeId col_sum(NodeId x);   // [n,k] -> [k]
  NodeId row_max(NodeId x);   // [n,k] -> [n]; not differentiable, use behind stop_grad
  NodeId broadcast_row(NodeId v, int64_t rows);  // [k] -> [rows,k]
  NodeId broadcast_col(NodeId v, int64_t cols);  // [n] -> [n,cols]
  NodeId broadcast_full(NodeId s, std::vector<int64_t> shape);  // scalar -> shape
  NodeId sum_all(NodeId x);  // -> scalar
  NodeId exp(NodeId x);
  NodeId log(NodeId x);
  NodeId leaky_relu(NodeId x, double negative_slope);
  NodeId leaky_mask(NodeId x, double negative_slope);  // elementwise d/dx of leaky_relu
  // Per-row Euclidean norm, [n,k] -> [n]. Rows of exactly zero get the
  // conventional zero subgradient, keeping the gradient penalty finite for a
  // constant discriminator.
  NodeId l2_norm_rows(NodeId x);
  NodeId select_labels(NodeId x, std::vector<int32_t> labels);  // [n,c],[n] -> [n]
  NodeId scatter_labels(NodeId v, std::vector<int32_t> labels, int64_t width);
  NodeId concat_cols(NodeId x, NodeId y);
  NodeId slice_cols(NodeId x, int64_t begin, int64_t end);
  NodeId embed_cols(NodeId x, int64_t width, int64_t offset);
  NodeId stop_grad(NodeId x);

  NodeId mean_all(NodeId x);  // scale(sum_all(x), 1/numel)

  const Tensor& value(NodeId id) const;
  size_t size() const { return nodes_.size(); }

  // Adjoint of the scalar `output` with respect to each node in `wrt`.
  // Returns gradient node ids aligned with `wrt`; a node that does not
  // influence the output gets a fresh zeros leaf of its own shape.
  std::vector<NodeId> backward(NodeId output, std::span<const NodeId> wrt);

 private:
  NodeId push(Node n);
  NodeId l2_norm_rows_back(NodeId x, NodeId adj);
  void emit_vjp(NodeId id, NodeId adjoint, std::vector<NodeId>& adj,
                const std::vector<uint8_t>& needed);
  void accumulate(NodeId parent, NodeId contribution, std::vector<NodeId>& adj,
                  const std::vector<uint8_t>& needed);
  const Node& node(NodeId id) const;

  std::vector<Node> nodes_;
};

}  // namespace semcond
