#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "dijklab/error.hpp"
#include "dijklab/vertex.hpp"
#include "dijklab/weight.hpp"

namespace dijklab {

/// Dense n x n distance matrix; entry (i, j) is the weight of arc i -> j with
/// the unreachable sentinel encoded per SentinelTraits.
template <WeightScalar Scalar>
using WeightMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

struct Violation {
  ErrorKind kind;
  VertexId row;
  VertexId col;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationResult {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
};

inline std::string describe(const Violation& v) {
  return std::string(to_string(v.kind)) + " at (" + to_string(v.row) + "," + to_string(v.col) + ")";
}

/// Reports every violation of the distance-matrix model: square and
/// non-empty, zero diagonal, off-diagonal entries either the sentinel or
/// strictly positive.
template <WeightScalar Scalar>
ValidationResult validate(const WeightMatrix<Scalar>& d) {
  ValidationResult result;
  if (d.rows() != d.cols() || d.rows() < 1) {
    result.violations.push_back({ErrorKind::MalformedInput, VertexId(0), VertexId(0)});
    return result;
  }
  for (Eigen::Index i = 0; i < d.rows(); ++i) {
    for (Eigen::Index j = 0; j < d.cols(); ++j) {
      const Scalar x = d(i, j);
      const VertexId row = VertexId::from_index(static_cast<std::size_t>(i));
      const VertexId col = VertexId::from_index(static_cast<std::size_t>(j));
      if constexpr (std::is_floating_point_v<Scalar>) {
        if (std::isnan(x) || x == -std::numeric_limits<Scalar>::infinity()) {
          result.violations.push_back({ErrorKind::MalformedInput, row, col});
          continue;
        }
      }
      if (i == j) {
        if (x != Scalar(0)) result.violations.push_back({ErrorKind::DiagonalNonZero, row, col});
      } else if (!SentinelTraits<Scalar>::is_sentinel(x) && !(x > Scalar(0))) {
        result.violations.push_back({ErrorKind::NegativeOrZeroWeight, row, col});
      }
    }
  }
  return result;
}

/// Immutable weighted digraph over vertices 1..n. Every instance satisfies
/// validate(); construction from an invalid matrix throws.
template <WeightScalar Scalar = double>
class Graph {
 public:
  using scalar_type = Scalar;
  using weight_type = Weight<Scalar>;
  using matrix_type = WeightMatrix<Scalar>;

  explicit Graph(matrix_type d) : d_(std::move(d)) {
    const ValidationResult check = dijklab::validate<Scalar>(d_);
    if (!check.ok()) {
      const Violation& first = check.violations.front();
      throw Error(first.kind, "invalid distance matrix: " + describe(first));
    }
  }

  /// n vertices, no arcs.
  static Graph edgeless(std::size_t n) {
    const auto size = static_cast<Eigen::Index>(n);
    matrix_type d = matrix_type::Constant(size, size, SentinelTraits<Scalar>::encoded());
    d.diagonal().setZero();
    return Graph(std::move(d));
  }

  std::size_t size() const noexcept { return static_cast<std::size_t>(d_.rows()); }

  bool contains(VertexId v) const noexcept { return v.valid_for(size()); }

  weight_type weight(VertexId from, VertexId to) const {
    return weight_type::from_encoded(d_(static_cast<Eigen::Index>(from.index()),
                                        static_cast<Eigen::Index>(to.index())));
  }

  bool has_arc(VertexId from, VertexId to) const { return from != to && weight(from, to).is_finite(); }

  const matrix_type& matrix() const noexcept { return d_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.d_.rows() == b.d_.rows() && a.d_ == b.d_;
  }

 private:
  matrix_type d_;
};

template <WeightScalar Scalar>
ValidationResult validate(const Graph<Scalar>& g) {
  return validate<Scalar>(g.matrix());
}

template <WeightScalar Scalar>
void require_vertex(const Graph<Scalar>& g, VertexId v, const char* role) {
  if (!g.contains(v)) {
    throw Error(ErrorKind::VertexOutOfRange, std::string(role) + " vertex " + to_string(v) +
                                                 " outside 1.." + std::to_string(g.size()));
  }
}

}  // namespace dijklab
