#include "quiverdom/presentation.hpp"

#include <algorithm>
#include <sstream>

namespace quiverdom {

PathBasis PathBasis::trivial(const Quiver& q) {
  PathBasis b(0, q.vertex_count());
  for (int v = 0; v < q.vertex_count(); ++v) b.paths_[v][v].push_back({});
  return b;
}

PathBasis PathBasis::extend(const Quiver& q) const {
  PathBasis b(degree_ + 1, q.vertex_count());
  // prepend arrow a to paths ending at src(a); ascending a keeps corner lists lex sorted
  for (int a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    for (int s = 0; s < q.vertex_count(); ++s) {
      for (const Path& p : paths_[s][ar.src]) {
        Path np;
        np.reserve(p.size() + 1);
        np.push_back(a);
        np.insert(np.end(), p.begin(), p.end());
        b.paths_[s][ar.tgt].push_back(std::move(np));
      }
    }
  }
  return b;
}

long PathBasis::total_dim() const {
  long n = 0;
  for (const auto& row : paths_)
    for (const auto& cell : row) n += static_cast<long>(cell.size());
  return n;
}

std::size_t PathBasis::index_of(const Quiver& q, const Path& p) const {
  if (static_cast<int>(p.size()) != degree_ || degree_ == 0)
    throw PresentationError("path degree mismatch in index_of");
  int src = q.arrow(p.back()).src;
  int tgt = q.arrow(p.front()).tgt;
  const auto& list = paths_[src][tgt];
  auto it = std::lower_bound(list.begin(), list.end(), p);
  if (it == list.end() || *it != p) throw PresentationError("path not found in basis");
  return static_cast<std::size_t>(it - list.begin());
}

QuadraticPresentation::QuadraticPresentation(
    const FieldSpec& field, Quiver quiver,
    const std::vector<std::vector<RelationTerm>>& relations)
    : field_(field),
      quiver_(std::move(quiver)),
      paths2_(PathBasis::trivial(quiver_).extend(quiver_).extend(quiver_)) {
  int r = quiver_.vertex_count();
  // collect raw relation vectors per corner
  std::vector<std::vector<std::vector<Matrix>>> raw(r, std::vector<std::vector<Matrix>>(r));
  for (const auto& rel : relations) {
    // corner-normalize: split the terms of one input relation by corner
    std::map<std::pair<int, int>, Matrix> parts;
    for (const auto& term : rel) {
      if (term.path.size() != 2)
        throw PresentationError("relation term is not quadratic (path length "
                                + std::to_string(term.path.size()) + ")");
      const Arrow& left = quiver_.arrow(term.path[0]);
      const Arrow& right = quiver_.arrow(term.path[1]);
      if (left.src != right.tgt)
        throw PresentationError("relation term arrows do not compose: " + left.name +
                                "·" + right.name);
      if (!(term.coeff.field() == field_))
        throw FieldError("relation coefficient field mismatch");
      int src = right.src, tgt = left.tgt;
      auto key = std::make_pair(src, tgt);
      auto [it, fresh] = parts.try_emplace(key, field_, paths2_.dim(src, tgt), 1);
      std::size_t idx = paths2_.index_of(quiver_, term.path);
      it->second.at(idx, 0) = it->second.at(idx, 0) + term.coeff;
    }
    for (auto& [key, vec] : parts)
      if (!vec.is_zero()) raw[key.first][key.second].push_back(vec);
  }
  // reduce each corner to an independent span, deterministic pivot choice
  spans_.assign(r, std::vector<Matrix>(r, Matrix(field_, 0, 0)));
  for (int s = 0; s < r; ++s)
    for (int t = 0; t < r; ++t) {
      Matrix all(field_, paths2_.dim(s, t), 0);
      for (const auto& col : raw[s][t]) all = all.hstack(col);
      spans_[s][t] = all.columns(column_space_pivots(all));
    }
}

long QuadraticPresentation::relation_count() const {
  long n = 0;
  for (const auto& row : spans_)
    for (const auto& m : row) n += static_cast<long>(m.cols());
  return n;
}

std::vector<std::string> QuadraticPresentation::relation_strings() const {
  std::vector<std::string> out;
  int r = quiver_.vertex_count();
  for (int s = 0; s < r; ++s)
    for (int t = 0; t < r; ++t) {
      const Matrix& span = spans_[s][t];
      const auto& paths = paths2_.paths(s, t);
      for (std::size_t c = 0; c < span.cols(); ++c) {
        std::ostringstream os;
        bool first = true;
        for (std::size_t k = 0; k < span.rows(); ++k) {
          const Scalar& co = span.at(k, c);
          if (co.is_zero()) continue;
          std::string mono = quiver_.arrow(paths[k][0]).name + "·" +
                             quiver_.arrow(paths[k][1]).name;
          if (first) {
            if (co.is_one())
              os << mono;
            else if ((-co).is_one())
              os << "-" << mono;
            else
              os << co.str() << "·" << mono;
            first = false;
          } else {
            Scalar neg = -co;
            if (co.is_one())
              os << " + " << mono;
            else if (neg.is_one())
              os << " - " << mono;
            else
              os << " + " << co.str() << "·" << mono;
          }
        }
        out.push_back(os.str());
      }
    }
  return out;
}

QuadraticPresentation quadratic_dual(const QuadraticPresentation& pres) {
  const Quiver& q = pres.quiver();
  Quiver op = opposite_quiver(q);
  PathBasis op2 = PathBasis::trivial(op).extend(op).extend(op);
  int r = q.vertex_count();
  std::vector<std::vector<RelationTerm>> duals;
  for (int s = 0; s < r; ++s)
    for (int t = 0; t < r; ++t) {
      long d = pres.paths2().dim(s, t);
      if (d == 0) continue;
      // vectors orthogonal to every relation in corner (s, t)
      const Matrix& span = pres.relation_span(s, t);
      Matrix perp = kernel_basis(span.transpose());
      const auto& paths = pres.paths2().paths(s, t);
      for (std::size_t c = 0; c < perp.cols(); ++c) {
        std::vector<RelationTerm> rel;
        for (std::size_t k = 0; k < perp.rows(); ++k) {
          if (perp.at(k, c).is_zero()) continue;
          // dual of the path a·b is b*·a*; arrow indices carry over unchanged
          Path dp = {paths[k][1], paths[k][0]};
          rel.push_back({perp.at(k, c), dp});
        }
        duals.push_back(std::move(rel));
      }
    }
  return QuadraticPresentation(pres.field(), op, duals);
}

bool double_dual_roundtrip(const QuadraticPresentation& pres) {
  QuadraticPresentation dd = quadratic_dual(quadratic_dual(pres));
  const Quiver& q = pres.quiver();
  const Quiver& qq = dd.quiver();
  if (q.vertex_count() != qq.vertex_count() || q.arrow_count() != qq.arrow_count())
    return false;
  for (int a = 0; a < q.arrow_count(); ++a) {
    // arrow k of the double opposite is arrow k re-reversed, named with "**"
    if (qq.arrow(a).name != q.arrow(a).name + "**" || qq.arrow(a).src != q.arrow(a).src ||
        qq.arrow(a).tgt != q.arrow(a).tgt)
      return false;
  }
  // with indices preserved, corner path bases coincide; compare spans directly
  for (int s = 0; s < q.vertex_count(); ++s)
    for (int t = 0; t < q.vertex_count(); ++t)
      if (!same_column_span(pres.relation_span(s, t), dd.relation_span(s, t)))
        return false;
  return true;
}

QuadraticPresentation preprojective_presentation(const Quiver& g, const FieldSpec& field) {
  Quiver dq = double_quiver(g);
  int m = g.arrow_count();
  std::vector<std::vector<RelationTerm>> rels;
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::vector<RelationTerm> rho;
    for (int a = 0; a < m; ++a) {
      if (g.arrow(a).src == v) rho.push_back({Scalar::one(field), {a + m, a}});   // a*·a
      if (g.arrow(a).tgt == v) rho.push_back({-Scalar::one(field), {a, a + m}});  // -a·a*
    }
    if (!rho.empty()) rels.push_back(std::move(rho));
  }
  return QuadraticPresentation(field, dq, rels);
}

QuadraticPresentation restrict_presentation(const QuadraticPresentation& pres,
                                            const std::vector<int>& vertices) {
  Subquiver sub = induced_subquiver(pres.quiver(), vertices);
  int r = pres.quiver().vertex_count();
  std::vector<std::vector<RelationTerm>> rels;
  for (int s = 0; s < r; ++s)
    for (int t = 0; t < r; ++t) {
      if (sub.new_of_vertex[s] < 0 || sub.new_of_vertex[t] < 0) continue;
      const Matrix& span = pres.relation_span(s, t);
      const auto& paths = pres.paths2().paths(s, t);
      for (std::size_t c = 0; c < span.cols(); ++c) {
        std::vector<RelationTerm> rel;
        for (std::size_t k = 0; k < span.rows(); ++k) {
          if (span.at(k, c).is_zero()) continue;
          int na = sub.new_of_arrow[paths[k][0]], nb = sub.new_of_arrow[paths[k][1]];
          if (na < 0 || nb < 0)
            throw PresentationError("relation crosses component boundary");
          rel.push_back({span.at(k, c), {na, nb}});
        }
        if (!rel.empty()) rels.push_back(std::move(rel));
      }
    }
  return QuadraticPresentation(pres.field(), sub.quiver, rels);
}

}  // namespace quiverdom
