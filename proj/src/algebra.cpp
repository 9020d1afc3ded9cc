#include "quiverdom/algebra.hpp"

#include <sstream>

namespace quiverdom {

TruncatedGradedAlgebra TruncatedGradedAlgebra::build(const QuadraticPresentation& pres,
                                                     int max_degree) {
  if (max_degree < 2) throw AlgebraError("truncation bound must be at least 2");
  TruncatedGradedAlgebra a;
  a.field_ = pres.field();
  a.max_degree_ = max_degree;
  a.vertex_count_ = pres.quiver().vertex_count();
  a.pres_ = pres;
  const Quiver& q = pres.quiver();
  int r = a.vertex_count_;

  a.bases_.push_back(PathBasis::trivial(q));
  a.corners_.emplace_back(r, std::vector<Corner>(r));
  for (int s = 0; s < r; ++s)
    for (int t = 0; t < r; ++t) {
      Corner& c = a.corners_[0][s][t];
      c.ideal = Matrix(a.field_, s == t ? 1 : 0, 0);
      if (s == t) {
        c.basis_paths = {0};
        c.reduction = Matrix::identity(a.field_, 1);
      } else {
        c.reduction = Matrix(a.field_, 0, 0);
      }
    }

  for (int n = 1; n <= max_degree; ++n) {
    a.bases_.push_back(a.bases_.back().extend(q));
    const PathBasis& pb = a.bases_[n];
    a.corners_.emplace_back(r, std::vector<Corner>(r));
    long total = 0;
    for (int s = 0; s < r; ++s)
      for (int t = 0; t < r; ++t) {
        Corner& c = a.corners_[n][s][t];
        long d = pb.dim(s, t);
        // ideal span: degree 1 none; degree 2 the relations; beyond, arrows times
        // the previous ideal on both sides
        if (n == 1) {
          c.ideal = Matrix(a.field_, d, 0);
        } else if (n == 2) {
          c.ideal = pres.relation_span(s, t);
        } else {
          Matrix cols(a.field_, d, 0);
          for (int ar = 0; ar < q.arrow_count(); ++ar) {
            const Arrow& arr = q.arrow(ar);
            if (arr.tgt == t) {
              // a · I_{n-1}(s -> src(a))
              const Matrix& prev = a.corners_[n - 1][s][arr.src].ideal;
              if (prev.cols() > 0) {
                Matrix lifted(a.field_, d, prev.cols());
                const auto& prev_paths = a.bases_[n - 1].paths(s, arr.src);
                for (std::size_t k = 0; k < prev_paths.size(); ++k) {
                  Path np;
                  np.push_back(ar);
                  np.insert(np.end(), prev_paths[k].begin(), prev_paths[k].end());
                  std::size_t row = pb.index_of(q, np);
                  for (std::size_t cidx = 0; cidx < prev.cols(); ++cidx)
                    lifted.at(row, cidx) = prev.at(k, cidx);
                }
                cols = cols.hstack(lifted);
              }
            }
            if (arr.src == s) {
              // I_{n-1}(tgt(a) -> t) · a
              const Matrix& prev = a.corners_[n - 1][arr.tgt][t].ideal;
              if (prev.cols() > 0) {
                Matrix lifted(a.field_, d, prev.cols());
                const auto& prev_paths = a.bases_[n - 1].paths(arr.tgt, t);
                for (std::size_t k = 0; k < prev_paths.size(); ++k) {
                  Path np = prev_paths[k];
                  np.push_back(ar);
                  std::size_t row = pb.index_of(q, np);
                  for (std::size_t cidx = 0; cidx < prev.cols(); ++cidx)
                    lifted.at(row, cidx) = prev.at(k, cidx);
                }
                cols = cols.hstack(lifted);
              }
            }
          }
          c.ideal = cols.columns(column_space_pivots(cols));
        }
        // quotient basis and reduction map
        Matrix reps = complement_basis(c.ideal, d);
        c.basis_paths.clear();
        for (std::size_t j = 0; j < reps.cols(); ++j)
          for (std::size_t i = 0; i < reps.rows(); ++i)
            if (!reps.at(i, j).is_zero()) {
              c.basis_paths.push_back(i);
              break;
            }
        long adim = static_cast<long>(c.basis_paths.size());
        if (d == 0) {
          c.reduction = Matrix(a.field_, 0, 0);
        } else {
          auto x = solve(c.ideal.hstack(reps), Matrix::identity(a.field_, d));
          if (!x) throw AlgebraError("internal: quotient decomposition failed");
          Matrix red(a.field_, adim, d);
          for (long i = 0; i < adim; ++i)
            for (std::size_t j = 0; j < static_cast<std::size_t>(d); ++j)
              red.at(i, j) = x->at(c.ideal.cols() + i, j);
          c.reduction = red;
        }
        total += adim;
      }
    if (total == 0) {
      a.graded_length_ = n;  // degrees 0..n-1 live, so length n
      break;
    }
  }
  return a;
}

TruncatedGradedAlgebra TruncatedGradedAlgebra::from_tables(Tables tables) {
  TruncatedGradedAlgebra a;
  a.field_ = tables.field;
  a.max_degree_ = tables.max_degree;
  a.vertex_count_ = tables.vertex_count;
  int r = a.vertex_count_;
  if (static_cast<int>(tables.dims.size()) != tables.max_degree + 1)
    throw AlgebraError("tables: dims must cover degrees 0..max_degree");
  for (int s = 0; s < r; ++s)
    for (int t = 0; t < r; ++t)
      if (tables.dims[0][s][t] != (s == t ? 1 : 0))
        throw AlgebraError("tables: degree-0 part must be the vertex idempotents");
  for (int n = 1; n <= tables.max_degree; ++n) {
    long total = 0;
    for (int s = 0; s < r; ++s)
      for (int t = 0; t < r; ++t) total += tables.dims[n][s][t];
    if (total == 0) {
      a.graded_length_ = n;
      break;
    }
  }
  a.tables_ = std::move(tables);
  return a;
}

const Quiver& TruncatedGradedAlgebra::quiver() const {
  if (!pres_) throw AlgebraError("algebra has no underlying quiver");
  return pres_->quiver();
}

const QuadraticPresentation& TruncatedGradedAlgebra::presentation() const {
  if (!pres_) throw AlgebraError("algebra has no presentation");
  return *pres_;
}

long TruncatedGradedAlgebra::dim(int degree, int src, int tgt) const {
  if (degree < 0) return 0;
  if (graded_length_ && degree >= *graded_length_) return 0;
  if (degree > max_degree_)
    throw AlgebraError("degree outside the truncation window: " + std::to_string(degree));
  if (tables_) return tables_->dims[degree][src][tgt];
  return static_cast<long>(corners_[degree][src][tgt].basis_paths.size());
}

long TruncatedGradedAlgebra::total_dim(int degree) const {
  long n = 0;
  for (int s = 0; s < vertex_count_; ++s)
    for (int t = 0; t < vertex_count_; ++t) n += dim(degree, s, t);
  return n;
}

AlgebraElement TruncatedGradedAlgebra::zero(int degree, int src, int tgt) const {
  return {degree, src, tgt, Matrix(field_, dim(degree, src, tgt), 1)};
}

AlgebraElement TruncatedGradedAlgebra::basis_element(int degree, int src, int tgt,
                                                     int k) const {
  AlgebraElement e = zero(degree, src, tgt);
  e.coords.at(k, 0) = Scalar::one(field_);
  return e;
}

AlgebraElement TruncatedGradedAlgebra::element(int degree, int src, int tgt,
                                               Matrix coords) const {
  if (coords.cols() != 1 || static_cast<long>(coords.rows()) != dim(degree, src, tgt))
    throw AlgebraError("element coordinate shape mismatch");
  return {degree, src, tgt, std::move(coords)};
}

const TruncatedGradedAlgebra::Corner& TruncatedGradedAlgebra::corner(int degree, int src,
                                                                     int tgt) const {
  if (!pres_) throw AlgebraError("path corner data asked of a table-backed algebra");
  if (degree < 0 || degree >= static_cast<int>(corners_.size()))
    throw AlgebraError("degree outside the built window");
  return corners_[degree][src][tgt];
}

AlgebraElement TruncatedGradedAlgebra::multiply(const AlgebraElement& x,
                                                const AlgebraElement& y) const {
  int n = x.degree + y.degree;
  if (n > max_degree_)
    throw AlgebraError("product degree " + std::to_string(n) + " exceeds bound " +
                       std::to_string(max_degree_));
  if (x.src != y.tgt) return zero(n, y.src, x.tgt);  // orthogonal corners
  AlgebraElement out = zero(n, y.src, x.tgt);
  if (out.coords.rows() == 0) return out;
  if (x.degree == 0) {
    out.coords = y.coords.scaled(x.coords.at(0, 0));
    return out;
  }
  if (y.degree == 0) {
    out.coords = x.coords.scaled(y.coords.at(0, 0));
    return out;
  }
  if (tables_) {
    auto it = tables_->products.find({x.degree, y.degree, y.src, x.src, x.tgt});
    if (it == tables_->products.end())
      throw AlgebraError("missing product table entry");
    long dy = dim(y.degree, y.src, y.tgt);
    Matrix kron(field_, x.coords.rows() * dy, 1);
    for (std::size_t i = 0; i < x.coords.rows(); ++i)
      for (std::size_t j = 0; j < static_cast<std::size_t>(dy); ++j)
        kron.at(i * dy + j, 0) = x.coords.at(i, 0) * y.coords.at(j, 0);
    out.coords = it->second * kron;
    return out;
  }
  const Corner& cx = corner(x.degree, x.src, x.tgt);
  const Corner& cy = corner(y.degree, y.src, y.tgt);
  const Corner& co = corner(n, y.src, x.tgt);
  const PathBasis& pb = bases_[n];
  const auto& px = bases_[x.degree].paths(x.src, x.tgt);
  const auto& py = bases_[y.degree].paths(y.src, y.tgt);
  for (std::size_t i = 0; i < cx.basis_paths.size(); ++i) {
    if (x.coords.at(i, 0).is_zero()) continue;
    for (std::size_t j = 0; j < cy.basis_paths.size(); ++j) {
      Scalar c = x.coords.at(i, 0) * y.coords.at(j, 0);
      if (c.is_zero()) continue;
      Path w = px[cx.basis_paths[i]];
      const Path& v = py[cy.basis_paths[j]];
      w.insert(w.end(), v.begin(), v.end());
      std::size_t col = pb.index_of(quiver(), w);
      for (std::size_t k = 0; k < out.coords.rows(); ++k)
        out.coords.at(k, 0) = out.coords.at(k, 0) + c * co.reduction.at(k, col);
    }
  }
  return out;
}

const PathBasis& TruncatedGradedAlgebra::path_basis(int degree) const {
  if (!pres_) throw AlgebraError("path basis asked of a table-backed algebra");
  if (degree < 0 || degree >= static_cast<int>(bases_.size()))
    throw AlgebraError("degree outside the built window");
  return bases_[degree];
}

const Path& TruncatedGradedAlgebra::basis_path(int degree, int src, int tgt, int k) const {
  const Corner& c = corner(degree, src, tgt);
  return bases_[degree].paths(src, tgt)[c.basis_paths.at(k)];
}

std::string TruncatedGradedAlgebra::basis_label(int degree, int src, int tgt, int k) const {
  if (degree == 0) return "e(" + quiver().vertex_name(src) + ")";
  const Path& p = basis_path(degree, src, tgt, k);
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += "·";
    s += quiver().arrow(p[i]).name;
  }
  return s;
}

std::string TruncatedGradedAlgebra::element_label(const AlgebraElement& x) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < x.coords.rows(); ++k) {
    const Scalar& c = x.coords.at(k, 0);
    if (c.is_zero()) continue;
    std::string mono = basis_label(x.degree, x.src, x.tgt, static_cast<int>(k));
    if (!first) os << " + ";
    if (!c.is_one()) os << c.str() << "·";
    os << mono;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

const Matrix& TruncatedGradedAlgebra::ideal_span(int degree, int src, int tgt) const {
  return corner(degree, src, tgt).ideal;
}

Matrix TruncatedGradedAlgebra::reduce(int degree, int src, int tgt,
                                      const Matrix& path_coords) const {
  const Corner& c = corner(degree, src, tgt);
  return c.reduction * path_coords;
}

HilbertData hilbert(const TruncatedGradedAlgebra& a) {
  HilbertData h;
  int r = a.vertex_count();
  h.row_sums.assign(r, std::vector<long>(a.max_degree() + 1, 0));
  for (int n = 0; n <= a.max_degree(); ++n) {
    IntGrid g(r, std::vector<long>(r, 0));
    for (int s = 0; s < r; ++s)
      for (int t = 0; t < r; ++t) {
        g[t][s] = a.dim(n, s, t);
        h.row_sums[t][n] += g[t][s];
      }
    h.grids.push_back(std::move(g));
  }
  return h;
}

std::string series_string(const std::vector<long>& coeffs) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    if (coeffs[n] == 0) continue;
    if (!first) os << " + ";
    if (n == 0)
      os << coeffs[n];
    else {
      if (coeffs[n] != 1) os << coeffs[n];
      os << "t";
      if (n > 1) os << "^" << n;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace quiverdom
