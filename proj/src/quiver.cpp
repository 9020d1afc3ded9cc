#include "quiverdom/quiver.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace quiverdom {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  if (vertices_.empty()) throw QuiverError("quiver needs at least one vertex");
  std::set<std::string> seen;
  for (const auto& v : vertices_) {
    if (v.empty()) throw QuiverError("empty vertex name");
    if (!seen.insert(v).second) throw QuiverError("duplicate vertex name: " + v);
  }
  std::set<std::string> aseen;
  for (const auto& a : arrows_) {
    if (a.name.empty()) throw QuiverError("empty arrow name");
    if (!aseen.insert(a.name).second) throw QuiverError("duplicate arrow name: " + a.name);
    if (a.src < 0 || a.src >= vertex_count() || a.tgt < 0 || a.tgt >= vertex_count())
      throw QuiverError("arrow endpoint out of range: " + a.name);
  }
}

int Quiver::vertex_index(const std::string& name) const {
  for (int v = 0; v < vertex_count(); ++v)
    if (vertices_[v] == name) return v;
  throw QuiverError("unknown vertex: " + name);
}

int Quiver::arrow_index(const std::string& name) const {
  for (int a = 0; a < arrow_count(); ++a)
    if (arrows_[a].name == name) return a;
  throw QuiverError("unknown arrow: " + name);
}

std::vector<int> Quiver::arrows_from(int v) const {
  std::vector<int> out;
  for (int a = 0; a < arrow_count(); ++a)
    if (arrows_[a].src == v) out.push_back(a);
  return out;
}

std::vector<int> Quiver::arrows_into(int v) const {
  std::vector<int> out;
  for (int a = 0; a < arrow_count(); ++a)
    if (arrows_[a].tgt == v) out.push_back(a);
  return out;
}

IntGrid incidence_matrix(const Quiver& q) {
  IntGrid b(q.vertex_count(), std::vector<long>(q.vertex_count(), 0));
  for (const auto& a : q.arrows()) b[a.tgt][a.src] += 1;
  return b;
}

namespace {

std::vector<int> reachable_from(const Quiver& q, int start, bool undirected) {
  std::vector<int> seen(q.vertex_count(), 0);
  std::vector<int> stack = {start};
  seen[start] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const auto& a : q.arrows()) {
      if (a.src == v && !seen[a.tgt]) {
        seen[a.tgt] = 1;
        stack.push_back(a.tgt);
      }
      if (undirected && a.tgt == v && !seen[a.src]) {
        seen[a.src] = 1;
        stack.push_back(a.src);
      }
    }
  }
  std::vector<int> out;
  for (int v = 0; v < q.vertex_count(); ++v)
    if (seen[v]) out.push_back(v);
  return out;
}

}  // namespace

bool is_connected(const Quiver& q) {
  return static_cast<int>(reachable_from(q, 0, true).size()) == q.vertex_count();
}

bool is_strongly_connected(const Quiver& q) {
  // vertex 0 reaches everything and everything reaches vertex 0
  if (static_cast<int>(reachable_from(q, 0, false).size()) != q.vertex_count())
    return false;
  std::vector<Arrow> rev;
  for (const auto& a : q.arrows()) rev.push_back({a.name, a.tgt, a.src});
  Quiver r(q.vertex_names(), rev);
  return static_cast<int>(reachable_from(r, 0, false).size()) == q.vertex_count();
}

std::vector<std::vector<int>> connected_components(const Quiver& q) {
  std::vector<std::vector<int>> comps;
  std::vector<int> assigned(q.vertex_count(), 0);
  for (int v = 0; v < q.vertex_count(); ++v) {
    if (assigned[v]) continue;
    std::vector<int> comp = reachable_from(q, v, true);
    std::sort(comp.begin(), comp.end());
    for (int u : comp) assigned[u] = 1;
    comps.push_back(std::move(comp));
  }
  return comps;
}

DegreeProfile degree_profile(const Quiver& q) {
  DegreeProfile p;
  p.outdeg.assign(q.vertex_count(), 0);
  p.indeg.assign(q.vertex_count(), 0);
  for (const auto& a : q.arrows()) {
    p.outdeg[a.src] += 1;
    p.indeg[a.tgt] += 1;
  }
  p.min_out = *std::min_element(p.outdeg.begin(), p.outdeg.end());
  p.min_in = *std::min_element(p.indeg.begin(), p.indeg.end());
  p.all_out_ge2 = p.min_out >= 2;
  p.all_in_ge2 = p.min_in >= 2;
  return p;
}

Quiver double_quiver(const Quiver& g) {
  std::vector<Arrow> arrows = g.arrows();
  for (const auto& a : g.arrows()) arrows.push_back({a.name + "*", a.tgt, a.src});
  return Quiver(g.vertex_names(), arrows);
}

Quiver opposite_quiver(const Quiver& q) {
  std::vector<Arrow> arrows;
  for (const auto& a : q.arrows()) arrows.push_back({a.name + "*", a.tgt, a.src});
  return Quiver(q.vertex_names(), arrows);
}

std::optional<std::vector<int>> incidence_transpose_permutation(const IntGrid& B) {
  int r = static_cast<int>(B.size());
  for (const auto& row : B)
    if (static_cast<int>(row.size()) != r) throw QuiverError("incidence grid not square");
  if (r == 0) return std::vector<int>{};

  if (r <= 8) {
    std::vector<int> sigma(r);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
      bool ok = true;
      for (int i = 0; ok && i < r; ++i)
        for (int j = 0; j < r; ++j)
          if (B[i][j] != B[j][sigma[i]]) {
            ok = false;
            break;
          }
      if (ok) return sigma;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return std::nullopt;
  }

  // r > 8: each constraint B[i][j] == B[j][sigma(i)] involves sigma(i) alone, so
  // precompute per-row candidate sets (row i must equal column sigma(i)) and
  // backtrack for a system of distinct representatives, bounded node count.
  std::vector<std::vector<int>> candidates(r);
  for (int i = 0; i < r; ++i)
    for (int c = 0; c < r; ++c) {
      bool ok = true;
      for (int j = 0; j < r; ++j)
        if (B[i][j] != B[j][c]) {
          ok = false;
          break;
        }
      if (ok) candidates[i].push_back(c);
    }
  long nodes = 0;
  const long kNodeBudget = 10000000;
  std::vector<int> sigma(r, -1);
  std::vector<char> used(r, 0);
  std::function<bool(int)> rec = [&](int i) -> bool {
    if (i == r) return true;
    for (int cand : candidates[i]) {
      if (used[cand]) continue;
      if (++nodes > kNodeBudget)
        throw QuiverError("search exceeded: incidence transpose permutation budget");
      sigma[i] = cand;
      used[cand] = 1;
      if (rec(i + 1)) return true;
      used[cand] = 0;
      sigma[i] = -1;
    }
    return false;
  };
  if (rec(0)) return sigma;
  return std::nullopt;
}

Subquiver induced_subquiver(const Quiver& q, const std::vector<int>& vertices) {
  Subquiver s{Quiver({"tmp"}, {}), {}, std::vector<int>(q.vertex_count(), -1), {}};
  std::vector<std::string> names;
  for (int v : vertices) {
    s.new_of_vertex[v] = static_cast<int>(names.size());
    names.push_back(q.vertex_name(v));
    s.vertex_of_new.push_back(v);
  }
  std::vector<Arrow> arrows;
  s.new_of_arrow.assign(q.arrow_count(), -1);
  for (int a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    int ns = s.new_of_vertex[ar.src], nt = s.new_of_vertex[ar.tgt];
    if (ns < 0 || nt < 0) continue;
    s.new_of_arrow[a] = static_cast<int>(arrows.size());
    arrows.push_back({ar.name, ns, nt});
  }
  s.quiver = Quiver(names, arrows);
  return s;
}

}  // namespace quiverdom
