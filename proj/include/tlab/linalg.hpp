#pragma once

// Exact linear algebra over a field from the ring tower.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tlab/rings.hpp"

namespace tlab {

/// Sparse row: column -> nonzero coefficient.
using SparseRow = std::map<std::size_t, RingValue>;

/// Incremental row echelon form for a linear system A x = b.
class SparseSolver {
 public:
  SparseSolver(const Ring& field, std::size_t unknowns);

  /// Adds sum_j row[j] x_j = rhs. Returns false once the system is inconsistent.
  bool add_equation(SparseRow row, const RingValue& rhs);
  bool consistent() const { return consistent_; }
  std::size_t rank() const { return pivots_.size(); }
  std::size_t unknowns() const { return n_; }
  /// The solution when the system is consistent and of full rank.
  std::optional<std::vector<RingValue>> unique_solution() const;

 private:
  const Ring* field_;
  std::size_t n_;
  bool consistent_ = true;
  // pivot column -> normalized row (pivot coefficient 1); rhs kept under key n_.
  std::map<std::size_t, SparseRow> pivots_;
};

class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(const Ring& field, std::size_t rows, std::size_t cols);
  static ExactMatrix identity(const Ring& field, std::size_t n);

  const Ring& field() const { return *field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  RingValue& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const RingValue& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
  ExactMatrix scaled(const RingValue& c) const;
  ExactMatrix kron(const ExactMatrix& b) const;
  bool is_zero() const;
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

  /// Rank by Gaussian elimination over the field.
  std::size_t rank() const;

  /// Stacks blocks into one matrix; blocks[i][j] has row/col sizes given.
  static ExactMatrix block(const Ring& field, const std::vector<std::size_t>& row_sizes,
                           const std::vector<std::size_t>& col_sizes,
                           const std::vector<std::vector<const ExactMatrix*>>& blocks);

 private:
  const Ring* field_ = nullptr;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<RingValue> data_;
};

}  // namespace tlab
