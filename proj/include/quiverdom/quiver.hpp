#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quiverdom/field.hpp"

namespace quiverdom {

struct QuiverError : std::runtime_error {
  explicit QuiverError(const std::string& what) : std::runtime_error(what) {}
};

struct Arrow {
  std::string name;
  int src = 0;
  int tgt = 0;
};

// Finite quiver: named vertices, named arrows (loops and parallel arrows allowed).
class Quiver {
 public:
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }
  const std::vector<std::string>& vertex_names() const { return vertices_; }
  const std::string& vertex_name(int v) const { return vertices_.at(v); }
  const Arrow& arrow(int a) const { return arrows_.at(a); }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  int vertex_index(const std::string& name) const;  // throws on unknown name
  int arrow_index(const std::string& name) const;
  std::vector<int> arrows_from(int v) const;  // input order
  std::vector<int> arrows_into(int v) const;

  bool operator==(const Quiver& o) const {
    if (vertices_ != o.vertices_ || arrows_.size() != o.arrows_.size()) return false;
    for (std::size_t k = 0; k < arrows_.size(); ++k)
      if (arrows_[k].name != o.arrows_[k].name || arrows_[k].src != o.arrows_[k].src ||
          arrows_[k].tgt != o.arrows_[k].tgt)
        return false;
    return true;
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
};

// Integer grid, used as incidence data B[j][i] = number of arrows i -> j.
using IntGrid = std::vector<std::vector<long>>;

IntGrid incidence_matrix(const Quiver& q);

bool is_connected(const Quiver& q);           // underlying undirected graph
bool is_strongly_connected(const Quiver& q);  // directed
// Undirected components as sorted vertex index lists, ordered by smallest member.
std::vector<std::vector<int>> connected_components(const Quiver& q);

struct DegreeProfile {
  std::vector<long> outdeg, indeg;
  long min_out = 0, min_in = 0;
  bool all_out_ge2 = false, all_in_ge2 = false;
};
DegreeProfile degree_profile(const Quiver& q);

// Adds a reversed arrow named "<name>*" for every arrow, after the originals.
Quiver double_quiver(const Quiver& g);

// Same vertices, arrows reversed; arrow k of the result reverses arrow k of q and is
// named "<name>*".
Quiver opposite_quiver(const Quiver& q);

// Searches for a vertex permutation sigma with B[i][j] == B[j][sigma(i)] for all i, j
// (i.e. B = P B^T for the permutation matrix P with P[i][sigma(i)] = 1). Exhaustive
// over all r! candidates for r <= 8; row-multiset-pruned backtracking beyond, throwing
// QuiverError("search exceeded ...") if the node budget runs out. Returns the
// lexicographically least sigma, or nullopt.
std::optional<std::vector<int>> incidence_transpose_permutation(const IntGrid& B);

struct Subquiver {
  Quiver quiver;
  std::vector<int> vertex_of_new;  // new vertex index -> original index
  std::vector<int> new_of_vertex;  // original -> new, or -1 outside
  std::vector<int> new_of_arrow;   // original -> new, or -1 outside
};

// Induced subquiver on a vertex subset (arrows with both endpoints inside).
Subquiver induced_subquiver(const Quiver& q, const std::vector<int>& vertices);

}  // namespace quiverdom
