#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "quiverdom/field.hpp"

namespace quiverdom {

struct LinalgError : std::runtime_error {
  explicit LinalgError(const std::string& what) : std::runtime_error(what) {}
};

// Dense row-major matrix over a fixed field. Zero-row / zero-column shapes are legal.
class Matrix {
 public:
  Matrix() : field_(FieldSpec::rationals()) {}
  Matrix(const FieldSpec& f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f)) {}

  static Matrix identity(const FieldSpec& f, std::size_t n);
  // Row-of-strings constructor, mainly for tests and fixtures.
  static Matrix from_rows(const FieldSpec& f,
                          const std::vector<std::vector<std::string>>& rows);
  static Matrix column_vector(const FieldSpec& f, const std::vector<Scalar>& entries);

  const FieldSpec& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& c) const;
  bool operator==(const Matrix& o) const;
  bool is_zero() const;

  Matrix hstack(const Matrix& right) const;
  Matrix vstack(const Matrix& below) const;
  Matrix column(std::size_t j) const;
  Matrix columns(const std::vector<std::size_t>& idx) const;

  std::string str() const;  // debugging aid

 private:
  void check_same_shape(const Matrix& o, const char* op) const;

  FieldSpec field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

// Reduced row echelon form. The pivot in each column is the first nonzero entry
// scanning unused rows top-down, columns left to right; exact arithmetic makes the
// result deterministic.
struct Echelon {
  Matrix rref;
  std::vector<std::size_t> pivot_cols;
  std::vector<std::size_t> free_cols;
};

Echelon row_reduce(const Matrix& m);
std::size_t rank(const Matrix& m);

// Columns span ker(m): one column per free column, with a 1 in that coordinate and
// the pivot coordinates back-substituted; ordered by free column index.
Matrix kernel_basis(const Matrix& m);

// Extends the column span of `sub` to the full ambient space by standard basis
// vectors, greedily lowest index first (the pivot columns of [sub | I] past sub).
Matrix complement_basis(const Matrix& sub, std::size_t ambient_dim);

// Particular solution of m x = rhs with free variables set to zero; nullopt when any
// rhs column is inconsistent. rhs may have several columns.
std::optional<Matrix> solve(const Matrix& m, const Matrix& rhs);

// Indices of a subset of columns forming a basis of the column space (lowest first).
std::vector<std::size_t> column_space_pivots(const Matrix& m);

bool in_column_span(const Matrix& span, const Matrix& vecs);
bool same_column_span(const Matrix& a, const Matrix& b);

}  // namespace quiverdom
