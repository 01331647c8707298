#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "gsp4ad/rational.hpp"

namespace gsp4ad {

// Dense matrix over Q. All eliminations are fraction-exact; no pivoting
// heuristics are needed since there is no rounding.
class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

  RatMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_)
        throw std::invalid_argument("RatMatrix: ragged initializer");
      for (long v : row) data_.emplace_back(v);
    }
  }

  static RatMatrix zero(std::size_t rows, std::size_t cols) {
    return RatMatrix(rows, cols);
  }

  static RatMatrix identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t i, std::size_t j) {
    check_index(i, j);
    return data_[i * cols_ + j];
  }
  const Rat& at(std::size_t i, std::size_t j) const {
    check_index(i, j);
    return data_[i * cols_ + j];
  }

  bool operator==(const RatMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const RatMatrix& o) const { return !(*this == o); }

  RatMatrix operator+(const RatMatrix& o) const {
    check_same_shape(o, "+");
    RatMatrix r = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] += o.data_[k];
    return r;
  }

  RatMatrix operator-(const RatMatrix& o) const {
    check_same_shape(o, "-");
    RatMatrix r = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] -= o.data_[k];
    return r;
  }

  RatMatrix operator-() const {
    RatMatrix r = *this;
    for (auto& v : r.data_) v = -v;
    return r;
  }

  RatMatrix operator*(const RatMatrix& o) const {
    if (cols_ != o.rows_)
      throw std::invalid_argument("RatMatrix: inner dimensions differ in *");
    RatMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Rat& a = at(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
      }
    return r;
  }

  RatMatrix scaled(const Rat& c) const {
    RatMatrix r = *this;
    for (auto& v : r.data_) v *= c;
    return r;
  }

  RatMatrix transposed() const {
    RatMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  bool is_zero() const {
    for (const auto& v : data_)
      if (v != 0) return false;
    return true;
  }

  bool is_square() const { return rows_ == cols_; }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if (at(i, j) != at(j, i)) return false;
    return true;
  }

  std::vector<Rat> row(std::size_t i) const {
    std::vector<Rat> r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < rows_; ++i) {
      s += i ? "; " : "[";
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) s += ", ";
        s += gsp4ad::to_string(at(i, j));
      }
    }
    return s + "]";
  }

 private:
  void check_index(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_)
      throw std::out_of_range("RatMatrix: index out of range");
  }
  void check_same_shape(const RatMatrix& o, const char* op) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument(std::string("RatMatrix: shape mismatch in ") +
                                  op);
  }

  std::size_t rows_, cols_;
  std::vector<Rat> data_;
};

inline RatMatrix from_rows(const std::vector<std::vector<Rat>>& rows) {
  if (rows.empty()) return RatMatrix();
  RatMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows[0].size())
      throw std::invalid_argument("from_rows: ragged rows");
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

inline RatMatrix vstack(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() == 0) return b;
  if (b.rows() == 0) return a;
  if (a.cols() != b.cols())
    throw std::invalid_argument("vstack: column counts differ");
  RatMatrix m(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      m.at(a.rows() + i, j) = b.at(i, j);
  return m;
}

// Reduced row echelon form; returns the pivot columns.
inline std::vector<std::size_t> rref_in_place(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m.at(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
    Rat inv = 1 / m.at(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      Rat f = m.at(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline RatMatrix rref(RatMatrix m) {
  rref_in_place(m);
  return m;
}

inline std::size_t rank(RatMatrix m) { return rref_in_place(m).size(); }

// Basis of the right kernel {v : m v = 0}, returned as the reduced echelon
// basis of the kernel space so results are deterministic.
inline std::vector<std::vector<Rat>> kernel_basis(const RatMatrix& m) {
  RatMatrix e = m;
  std::vector<std::size_t> pivots = rref_in_place(e);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  std::vector<std::vector<Rat>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> v(m.cols(), Rat(0));
    v[f] = 1;
    for (std::size_t pr = 0; pr < pivots.size(); ++pr)
      v[pivots[pr]] = -e.at(pr, f);
    basis.push_back(std::move(v));
  }
  if (basis.empty()) return basis;
  RatMatrix k = from_rows(basis);
  rref_in_place(k);
  std::vector<std::vector<Rat>> out;
  for (std::size_t i = 0; i < k.rows(); ++i) out.push_back(k.row(i));
  return out;
}

inline std::size_t nullity(const RatMatrix& m) {
  return m.cols() - rank(m);
}

// Row spaces compared by ranks of the stacked systems.
inline bool same_row_space(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.cols())
    throw std::invalid_argument("same_row_space: ambient dimensions differ");
  std::size_t ra = rank(a), rb = rank(b);
  if (ra != rb) return false;
  return rank(vstack(a, b)) == ra;
}

inline bool row_space_contains(const RatMatrix& space, const std::vector<Rat>& v) {
  if (space.cols() != v.size())
    throw std::invalid_argument("row_space_contains: ambient dimensions differ");
  std::size_t r = rank(space);
  return rank(vstack(space, from_rows({v}))) == r;
}

inline RatMatrix inverse(const RatMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse: not square");
  std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  std::vector<std::size_t> pivots = rref_in_place(aug);
  for (std::size_t i = 0; i < n; ++i)
    if (i >= pivots.size() || pivots[i] != i)
      throw std::domain_error("inverse: singular matrix");
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

inline Rat determinant(RatMatrix m) {
  if (!m.is_square()) throw std::invalid_argument("determinant: not square");
  Rat det(1);
  std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m.at(p, c) == 0) ++p;
    if (p == n) return Rat(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(p, j), m.at(c, j));
      det = -det;
    }
    det *= m.at(c, c);
    Rat inv = 1 / m.at(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m.at(i, c) == 0) continue;
      Rat f = m.at(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m.at(i, j) -= f * m.at(c, j);
    }
  }
  return det;
}

}  // namespace gsp4ad
