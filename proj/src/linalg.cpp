#include "tlab/linalg.hpp"

#include <stdexcept>

namespace tlab {

namespace {

// Rough size of an element; used to prefer simple pivots.
std::size_t cost(const RingValue& v) {
  const Ring& r = v.ring();
  switch (r.kind()) {
    case RingKind::Rationals: {
      const auto& q = std::get<mpq_class>(v.payload());
      return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
    }
    case RingKind::PrimeField: return 1;
    case RingKind::Cyclotomic: {
      std::size_t c = 0;
      for (const auto& x : *std::get<std::shared_ptr<const CycloPoly>>(v.payload()))
        c += 1 + (sgn(x) ? mpz_sizeinbase(x.get_num_mpz_t(), 2) : 0);
      return c;
    }
    case RingKind::FractionField: {
      const RatFun& f = *std::get<std::shared_ptr<const RatFun>>(v.payload());
      std::size_t c = 0;
      for (const auto& x : f.num) c += x.is_zero() ? 1 : 1 + cost(x);
      for (const auto& x : f.den) c += x.is_zero() ? 1 : 1 + cost(x);
      return c;
    }
  }
  return 0;
}

}  // namespace

SparseSolver::SparseSolver(const Ring& field, std::size_t unknowns) : field_(&field), n_(unknowns) {}

bool SparseSolver::add_equation(SparseRow row, const RingValue& rhs) {
  if (!consistent_) return false;
  if (!rhs.is_zero()) row[n_] = rhs;
  auto it = row.begin();
  while (it != row.end() && it->first < n_) {
    auto piv = pivots_.find(it->first);
    if (piv == pivots_.end()) {
      ++it;
      continue;
    }
    const std::size_t col = it->first;
    const RingValue factor = it->second;
    for (const auto& [j, v] : piv->second) {
      auto [pos, inserted] = row.emplace(j, -(factor * v));
      if (!inserted) {
        pos->second = pos->second - factor * v;
        if (pos->second.is_zero()) row.erase(pos);
      }
    }
    it = row.upper_bound(col);
  }
  if (row.empty()) return true;
  auto lead = row.begin();
  if (lead->first == n_) {
    consistent_ = false;
    return false;
  }
  const std::size_t col = lead->first;
  const RingValue inv = *lead->second.inverse();
  for (auto& [j, v] : row) v = v * inv;
  pivots_.emplace(col, std::move(row));
  return true;
}

std::optional<std::vector<RingValue>> SparseSolver::unique_solution() const {
  if (!consistent_ || pivots_.size() != n_) return std::nullopt;
  std::vector<RingValue> x(n_, field_->zero());
  for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
    const auto& [col, row] = *it;
    RingValue v = field_->zero();
    for (const auto& [j, c] : row) {
      if (j == n_) v = v + c;
      else if (j != col) v = v - c * x[j];
    }
    x[col] = v;
  }
  return x;
}

ExactMatrix::ExactMatrix(const Ring& field, std::size_t rows, std::size_t cols)
    : field_(&field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

ExactMatrix ExactMatrix::identity(const Ring& field, std::size_t n) {
  ExactMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field.one();
  return m;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch in product");
  ExactMatrix r(*a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const RingValue& x = a.at(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const RingValue& y = b.at(k, j);
        if (!y.is_zero()) r.at(i, j) = r.at(i, j) + x * y;
      }
    }
  return r;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch in sum");
  ExactMatrix r = a;
  for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] = r.data_[i] + b.data_[i];
  return r;
}

ExactMatrix ExactMatrix::scaled(const RingValue& c) const {
  ExactMatrix r = *this;
  for (auto& x : r.data_) x = x * c;
  return r;
}

ExactMatrix ExactMatrix::kron(const ExactMatrix& b) const {
  ExactMatrix r(*field_, rows_ * b.rows_, cols_ * b.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const RingValue& x = at(i, j);
      if (x.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows_; ++k)
        for (std::size_t l = 0; l < b.cols_; ++l)
          if (!b.at(k, l).is_zero()) r.at(i * b.rows_ + k, j * b.cols_ + l) = x * b.at(k, l);
    }
  return r;
}

bool ExactMatrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::size_t ExactMatrix::rank() const {
  if (rows_ == 0 || cols_ == 0) return 0;
  std::vector<std::vector<RingValue>> m(rows_);
  for (std::size_t i = 0; i < rows_; ++i) m[i].assign(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
    std::size_t best = rows_, best_cost = 0;
    for (std::size_t i = rank; i < rows_; ++i) {
      if (m[i][c].is_zero()) continue;
      std::size_t k = cost(m[i][c]);
      if (best == rows_ || k < best_cost) {
        best = i;
        best_cost = k;
      }
    }
    if (best == rows_) continue;
    std::swap(m[rank], m[best]);
    const RingValue inv = *m[rank][c].inverse();
    for (std::size_t j = c; j < cols_; ++j)
      if (!m[rank][j].is_zero()) m[rank][j] = m[rank][j] * inv;
    for (std::size_t i = rank + 1; i < rows_; ++i) {
      if (m[i][c].is_zero()) continue;
      const RingValue f = m[i][c];
      for (std::size_t j = c; j < cols_; ++j)
        if (!m[rank][j].is_zero()) m[i][j] = m[i][j] - f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

ExactMatrix ExactMatrix::block(const Ring& field, const std::vector<std::size_t>& row_sizes,
                               const std::vector<std::size_t>& col_sizes,
                               const std::vector<std::vector<const ExactMatrix*>>& blocks) {
  std::size_t R = 0, C = 0;
  for (auto s : row_sizes) R += s;
  for (auto s : col_sizes) C += s;
  ExactMatrix out(field, R, C);
  std::size_t r0 = 0;
  for (std::size_t bi = 0; bi < row_sizes.size(); ++bi) {
    std::size_t c0 = 0;
    for (std::size_t bj = 0; bj < col_sizes.size(); ++bj) {
      if (const ExactMatrix* b = blocks[bi][bj]) {
        if (b->rows_ != row_sizes[bi] || b->cols_ != col_sizes[bj])
          throw std::invalid_argument("block shape mismatch");
        for (std::size_t i = 0; i < b->rows_; ++i)
          for (std::size_t j = 0; j < b->cols_; ++j) out.at(r0 + i, c0 + j) = b->at(i, j);
      }
      c0 += col_sizes[bj];
    }
    r0 += row_sizes[bi];
  }
  return out;
}

}  // namespace tlab
