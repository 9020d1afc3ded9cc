#pragma once

#include <map>
#include <vector>

#include "quiverdom/matrix.hpp"
#include "quiverdom/quiver.hpp"

namespace quiverdom {

struct PresentationError : std::runtime_error {
  explicit PresentationError(const std::string& what) : std::runtime_error(what) {}
};

// A path is a list of arrow indices, leftmost factor first: [a, b] is the product
// a·b, composable when src(a) == tgt(b); the path runs src(b) -> tgt(a).
using Path = std::vector<int>;

// All degree-d paths of a quiver, grouped by (source, target) corner. Each corner
// list is lexicographically sorted on the arrow index sequence.
class PathBasis {
 public:
  static PathBasis trivial(const Quiver& q);  // degree 0: one empty path per vertex
  PathBasis extend(const Quiver& q) const;    // degree d+1

  int degree() const { return degree_; }
  const std::vector<Path>& paths(int src, int tgt) const { return paths_[src][tgt]; }
  long dim(int src, int tgt) const { return static_cast<long>(paths_[src][tgt].size()); }
  long total_dim() const;
  // position of a degree >= 1 path inside its corner list
  std::size_t index_of(const Quiver& q, const Path& p) const;

 private:
  PathBasis(int degree, int r) : degree_(degree), paths_(r, std::vector<std::vector<Path>>(r)) {}

  int degree_;
  std::vector<std::vector<std::vector<Path>>> paths_;  // [src][tgt][k]
};

struct RelationTerm {
  Scalar coeff;
  Path path;  // length 2
};

// kQ / (relations): homogeneous quadratic relations, stored corner-normalized as
// independent column spans in degree-2 path coordinates.
class QuadraticPresentation {
 public:
  QuadraticPresentation(const FieldSpec& field, Quiver quiver,
                        const std::vector<std::vector<RelationTerm>>& relations);

  const FieldSpec& field() const { return field_; }
  const Quiver& quiver() const { return quiver_; }
  const PathBasis& paths2() const { return paths2_; }
  // columns are independent relation vectors in the (src, tgt) corner of kQ_2
  const Matrix& relation_span(int src, int tgt) const { return spans_[src][tgt]; }
  long relation_count() const;

  // human-readable relation list, one string per relation column
  std::vector<std::string> relation_strings() const;

 private:
  FieldSpec field_;
  Quiver quiver_;
  PathBasis paths2_;
  std::vector<std::vector<Matrix>> spans_;  // [src][tgt]
};

// Quadratic dual presentation over the opposite quiver: relations are the
// orthogonal complement of the input relation spans under the pairing
// <a·b, beta*·alpha*> = delta_{a,alpha} delta_{b,beta}, which matches the degree-2
// corner (i -> l) of kQ with the corner (l -> i) of kQ^op.
QuadraticPresentation quadratic_dual(const QuadraticPresentation& pres);

// Applies the dual twice and checks the relation spans return to the input (after
// identifying doubly-starred arrows with the originals). Returns a per-corner result.
bool double_dual_roundtrip(const QuadraticPresentation& pres);

// Preprojective presentation on the double quiver of g: for each vertex v the
// relation sum_{a: src(a)=v} a*·a - sum_{a: tgt(a)=v} a·a*.
QuadraticPresentation preprojective_presentation(const Quiver& g, const FieldSpec& field);

// Restriction of a presentation to one undirected component of its quiver.
QuadraticPresentation restrict_presentation(const QuadraticPresentation& pres,
                                            const std::vector<int>& vertices);

}  // namespace quiverdom
