#include "quiverdom/matrix.hpp"

#include <sstream>

namespace quiverdom {

Matrix Matrix::identity(const FieldSpec& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_rows(const FieldSpec& f,
                         const std::vector<std::vector<std::string>>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows[0].size();
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw LinalgError("ragged row list");
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Scalar::parse(f, rows[i][j]);
  }
  return m;
}

Matrix Matrix::column_vector(const FieldSpec& f, const std::vector<Scalar>& entries) {
  Matrix m(f, entries.size(), 1);
  for (std::size_t i = 0; i < entries.size(); ++i) m.at(i, 0) = entries[i];
  return m;
}

void Matrix::check_same_shape(const Matrix& o, const char* op) const {
  if (!(field_ == o.field_))
    throw FieldError(std::string("field mismatch in matrix ") + op);
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw LinalgError(std::string("shape mismatch in matrix ") + op);
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (!(field_ == o.field_)) throw FieldError("field mismatch in matrix product");
  if (cols_ != o.rows_) throw LinalgError("shape mismatch in matrix product");
  Matrix p(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        p.at(i, j) = p.at(i, j) + a * o.at(k, j);
    }
  return p;
}

Matrix Matrix::operator+(const Matrix& o) const {
  check_same_shape(o, "sum");
  Matrix s(field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] = data_[i] + o.data_[i];
  return s;
}

Matrix Matrix::operator-(const Matrix& o) const {
  check_same_shape(o, "difference");
  Matrix s(field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] = data_[i] - o.data_[i];
  return s;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix s(field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] = data_[i] * c;
  return s;
}

bool Matrix::operator==(const Matrix& o) const {
  if (!(field_ == o.field_) || rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (data_[i] != o.data_[i]) return false;
  return true;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

Matrix Matrix::hstack(const Matrix& right) const {
  if (!(field_ == right.field_)) throw FieldError("field mismatch in hstack");
  if (rows_ != right.rows_) throw LinalgError("row mismatch in hstack");
  Matrix m(field_, rows_, cols_ + right.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
    for (std::size_t j = 0; j < right.cols_; ++j) m.at(i, cols_ + j) = right.at(i, j);
  }
  return m;
}

Matrix Matrix::vstack(const Matrix& below) const {
  if (!(field_ == below.field_)) throw FieldError("field mismatch in vstack");
  if (cols_ != below.cols_) throw LinalgError("column mismatch in vstack");
  Matrix m(field_, rows_ + below.rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
  for (std::size_t i = 0; i < below.rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(rows_ + i, j) = below.at(i, j);
  return m;
}

Matrix Matrix::column(std::size_t j) const { return columns({j}); }

Matrix Matrix::columns(const std::vector<std::size_t>& idx) const {
  Matrix m(field_, rows_, idx.size());
  for (std::size_t j = 0; j < idx.size(); ++j) {
    if (idx[j] >= cols_) throw LinalgError("column index out of range");
    for (std::size_t i = 0; i < rows_; ++i) m.at(i, j) = at(i, idx[j]);
  }
  return m;
}

std::string Matrix::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i == 0 ? "[" : " ");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "[") << at(i, j).str();
    os << "]" << (i + 1 == rows_ ? "]" : "\n");
  }
  if (rows_ == 0) os << "[[]]";
  return os.str();
}

Echelon row_reduce(const Matrix& m) {
  Echelon e{m, {}, {}};
  Matrix& a = e.rref;
  std::size_t lead = 0;  // next pivot row
  for (std::size_t col = 0; col < a.cols(); ++col) {
    std::size_t sel = a.rows();
    for (std::size_t i = lead; i < a.rows(); ++i)
      if (!a.at(i, col).is_zero()) {
        sel = i;
        break;
      }
    if (sel == a.rows()) {
      e.free_cols.push_back(col);
      continue;
    }
    if (sel != lead)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(sel, j), a.at(lead, j));
    Scalar inv = a.at(lead, col).inverse();
    for (std::size_t j = col; j < a.cols(); ++j) a.at(lead, j) = a.at(lead, j) * inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == lead) continue;
      Scalar f = a.at(i, col);
      if (f.is_zero()) continue;
      for (std::size_t j = col; j < a.cols(); ++j)
        a.at(i, j) = a.at(i, j) - f * a.at(lead, j);
    }
    e.pivot_cols.push_back(col);
    ++lead;
    if (lead == a.rows()) {
      for (std::size_t j = col + 1; j < a.cols(); ++j) e.free_cols.push_back(j);
      break;
    }
  }
  return e;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivot_cols.size(); }

Matrix kernel_basis(const Matrix& m) {
  Echelon e = row_reduce(m);
  Matrix k(m.field(), m.cols(), e.free_cols.size());
  for (std::size_t j = 0; j < e.free_cols.size(); ++j) {
    std::size_t fc = e.free_cols[j];
    k.at(fc, j) = Scalar::one(m.field());
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i)
      k.at(e.pivot_cols[i], j) = -e.rref.at(i, fc);
  }
  return k;
}

Matrix complement_basis(const Matrix& sub, std::size_t ambient_dim) {
  if (sub.cols() > 0 && sub.rows() != ambient_dim)
    throw LinalgError("subspace ambient dimension mismatch");
  Matrix base = sub.cols() == 0 ? Matrix(sub.field(), ambient_dim, 0) : sub;
  Matrix aug = base.hstack(Matrix::identity(sub.field(), ambient_dim));
  Echelon e = row_reduce(aug);
  std::vector<std::size_t> chosen;
  for (std::size_t pc : e.pivot_cols)
    if (pc >= base.cols()) chosen.push_back(pc - base.cols());
  Matrix comp(sub.field(), ambient_dim, chosen.size());
  for (std::size_t j = 0; j < chosen.size(); ++j)
    comp.at(chosen[j], j) = Scalar::one(sub.field());
  return comp;
}

std::optional<Matrix> solve(const Matrix& m, const Matrix& rhs) {
  if (m.rows() != rhs.rows()) throw LinalgError("rhs row mismatch in solve");
  Echelon e = row_reduce(m.hstack(rhs));
  // any pivot landing in the rhs block means some rhs column is inconsistent
  for (std::size_t pc : e.pivot_cols)
    if (pc >= m.cols()) return std::nullopt;
  Matrix x(m.field(), m.cols(), rhs.cols());
  for (std::size_t i = 0; i < e.pivot_cols.size(); ++i)
    for (std::size_t j = 0; j < rhs.cols(); ++j)
      x.at(e.pivot_cols[i], j) = e.rref.at(i, m.cols() + j);
  return x;
}

std::vector<std::size_t> column_space_pivots(const Matrix& m) {
  return row_reduce(m).pivot_cols;
}

bool in_column_span(const Matrix& span, const Matrix& vecs) {
  return solve(span, vecs).has_value();
}

bool same_column_span(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) return false;
  std::size_t ra = rank(a), rb = rank(b);
  return ra == rb && rank(a.hstack(b)) == ra;
}

}  // namespace quiverdom
