#pragma once

#include <map>
#include <memory>
#include <optional>
#include <tuple>

#include "quiverdom/presentation.hpp"

namespace quiverdom {

struct AlgebraError : std::runtime_error {
  explicit AlgebraError(const std::string& what) : std::runtime_error(what) {}
};

// Homogeneous element supported in a single Peirce corner: coords is a column
// vector over the chosen basis of (degree, src, tgt).
struct AlgebraElement {
  int degree = 0;
  int src = 0;
  int tgt = 0;
  Matrix coords;
};

// Graded algebra truncated at a degree bound, with exact structure constants.
// Two backings: a path-algebra quotient built from a quadratic presentation (basis
// elements are coset representatives that are honest paths), or explicit
// multiplication tables (used for Ext-style reconstructions).
class TruncatedGradedAlgebra {
 public:
  // Builds kQ/(relations) through degree max_degree >= 2. Quotient bases are chosen
  // per corner by the deterministic complement rule, so they are path-labelled.
  static TruncatedGradedAlgebra build(const QuadraticPresentation& pres, int max_degree);

  struct Tables {
    FieldSpec field;
    int vertex_count = 0;
    int max_degree = 0;
    // dims[n][src][tgt]; degree 0 must be the identity grid
    std::vector<std::vector<std::vector<long>>> dims;
    // product of basis pairs, degrees m, n >= 1: key (m, n, src_y, mid, tgt_x) ->
    // matrix of shape dim(m+n, src_y, tgt_x) x (dim(m, mid, tgt_x)*dim(n, src_y, mid)),
    // column x_idx * dimY + y_idx
    std::map<std::tuple<int, int, int, int, int>, Matrix> products;
  };
  static TruncatedGradedAlgebra from_tables(Tables tables);

  const FieldSpec& field() const { return field_; }
  int max_degree() const { return max_degree_; }
  int vertex_count() const { return vertex_count_; }
  bool path_backed() const { return pres_.has_value(); }
  const Quiver& quiver() const;  // path-backed only
  const QuadraticPresentation& presentation() const;

  long dim(int degree, int src, int tgt) const;
  long total_dim(int degree) const;
  // d + 1 when A_d != 0 and A_{d+1} == 0 somewhere inside the window
  std::optional<int> graded_length() const { return graded_length_; }

  AlgebraElement zero(int degree, int src, int tgt) const;
  AlgebraElement basis_element(int degree, int src, int tgt, int k) const;
  AlgebraElement element(int degree, int src, int tgt, Matrix coords) const;
  // x·y; zero when corners do not compose; error past the degree bound
  AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) const;

  // path-backed introspection
  const PathBasis& path_basis(int degree) const;
  const Path& basis_path(int degree, int src, int tgt, int k) const;
  std::string basis_label(int degree, int src, int tgt, int k) const;
  std::string element_label(const AlgebraElement& x) const;
  const Matrix& ideal_span(int degree, int src, int tgt) const;
  // express a degree-n corner vector in path coordinates in the quotient basis
  Matrix reduce(int degree, int src, int tgt, const Matrix& path_coords) const;

 private:
  TruncatedGradedAlgebra() = default;

  struct Corner {
    std::vector<std::size_t> basis_paths;  // positions in the corner's path list
    Matrix reduction;                      // dim(A_n corner) x dim(kQ_n corner)
    Matrix ideal;                          // independent ideal span columns
  };

  const Corner& corner(int degree, int src, int tgt) const;

  FieldSpec field_;
  int max_degree_ = 0;
  int vertex_count_ = 0;
  std::optional<int> graded_length_;

  // path backing
  std::optional<QuadraticPresentation> pres_;
  std::vector<PathBasis> bases_;                           // degree 0..built
  std::vector<std::vector<std::vector<Corner>>> corners_;  // [degree][src][tgt]

  // table backing
  std::optional<Tables> tables_;
};

struct HilbertData {
  std::vector<IntGrid> grids;              // grids[n][tgt][src] = dim e_tgt A_n e_src
  std::vector<std::vector<long>> row_sums; // [tgt][n]: coefficients of h_{e_tgt A}(t)
};

HilbertData hilbert(const TruncatedGradedAlgebra& a);
std::string series_string(const std::vector<long>& coeffs);

}  // namespace quiverdom
