#include "quiverdom/module.hpp"

#include <algorithm>
#include <sstream>

namespace quiverdom {

long DimensionTable::at(int n, int v) const {
  if (n < lo || n >= lo + static_cast<int>(rows.size())) return 0;
  return rows[n - lo][v];
}

long DimensionTable::total(int n) const {
  if (n < lo || n >= lo + static_cast<int>(rows.size())) return 0;
  long s = 0;
  for (long d : rows[n - lo]) s += d;
  return s;
}

bool DimensionTable::is_zero() const {
  for (const auto& row : rows)
    for (long d : row)
      if (d != 0) return false;
  return true;
}

std::vector<int> DimensionTable::support() const {
  std::vector<int> out;
  for (int k = 0; k < static_cast<int>(rows.size()); ++k)
    if (total(lo + k) > 0) out.push_back(lo + k);
  return out;
}

DimensionTable DimensionTable::trimmed() const {
  auto sup = support();
  DimensionTable t;
  if (sup.empty()) return t;
  t.lo = sup.front();
  for (int n = sup.front(); n <= sup.back(); ++n) t.rows.push_back(rows[n - lo]);
  return t;
}

bool DimensionTable::operator==(const DimensionTable& o) const {
  DimensionTable a = trimmed(), b = o.trimmed();
  return a.lo == b.lo && a.rows == b.rows;
}

std::string DimensionTable::str() const {
  std::ostringstream os;
  for (int k = 0; k < static_cast<int>(rows.size()); ++k) {
    os << "deg " << lo + k << ":";
    for (long d : rows[k]) os << " " << d;
    os << "\n";
  }
  return os.str();
}

GradedRightModule::GradedRightModule(std::shared_ptr<const TruncatedGradedAlgebra> alg,
                                     int lo, int hi, bool complete,
                                     std::vector<std::vector<long>> dims,
                                     std::map<std::pair<int, int>, Matrix> actions)
    : alg_(std::move(alg)),
      lo_(lo),
      hi_(hi),
      complete_(complete),
      dims_(std::move(dims)),
      act_(std::move(actions)) {
  if (hi_ >= lo_ && static_cast<int>(dims_.size()) != hi_ - lo_ + 1)
    throw ModuleError("module dimension rows do not match the window");
  for (const auto& row : dims_)
    if (static_cast<int>(row.size()) != alg_->vertex_count())
      throw ModuleError("module dimension row width mismatch");
  // canonical window: drop leading all-zero degrees (components below lo are zero
  // by definition, so this changes nothing)
  auto all_zero = [](const std::vector<long>& row) {
    for (long d : row)
      if (d != 0) return false;
    return true;
  };
  while (!dims_.empty() && all_zero(dims_.front())) {
    dims_.erase(dims_.begin());
    ++lo_;
  }
  for (auto it = act_.begin(); it != act_.end();)
    it = it->first.first < lo_ ? act_.erase(it) : std::next(it);
}

GradedRightModule GradedRightModule::zero_module(
    std::shared_ptr<const TruncatedGradedAlgebra> alg) {
  return GradedRightModule(std::move(alg), 0, -1, true, {}, {});
}

GradedRightModule GradedRightModule::simple(
    std::shared_ptr<const TruncatedGradedAlgebra> alg, int v) {
  std::vector<std::vector<long>> dims(1, std::vector<long>(alg->vertex_count(), 0));
  dims[0][v] = 1;
  return GradedRightModule(std::move(alg), 0, 0, true, std::move(dims), {});
}

GradedRightModule GradedRightModule::projective(
    std::shared_ptr<const TruncatedGradedAlgebra> alg, int v, int shift, int cap_hi) {
  int r = alg->vertex_count();
  auto len = alg->graded_length();
  int support_end = len ? shift + *len - 1 : shift + alg->max_degree();
  int hi = std::min(cap_hi, support_end);
  bool complete = len.has_value() && hi >= shift + *len - 1;
  int lo = shift;
  if (hi < lo) return GradedRightModule(std::move(alg), lo, -1 + lo, complete, {}, {});
  std::vector<std::vector<long>> dims;
  for (int n = lo; n <= hi; ++n) {
    std::vector<long> row(r, 0);
    for (int j = 0; j < r; ++j) row[j] = alg->dim(n - shift, j, v);
    dims.push_back(std::move(row));
  }
  std::map<std::pair<int, int>, Matrix> act;
  const Quiver& q = alg->quiver();
  for (int n = lo; n < hi; ++n) {
    for (int a = 0; a < q.arrow_count(); ++a) {
      const Arrow& ar = q.arrow(a);
      // index of arrow a inside its degree-1 corner basis (ascending arrow order)
      int idx = 0;
      for (int b = 0; b < a; ++b)
        if (q.arrow(b).src == ar.src && q.arrow(b).tgt == ar.tgt) ++idx;
      AlgebraElement arrow_elt = alg->basis_element(1, ar.src, ar.tgt, idx);
      long dsrc = dims[n - lo][ar.tgt];
      long ddst = dims[n + 1 - lo][ar.src];
      Matrix mat(alg->field(), ddst, dsrc);
      for (long k = 0; k < dsrc; ++k) {
        AlgebraElement lam = alg->basis_element(n - shift, ar.tgt, v, static_cast<int>(k));
        AlgebraElement prod = alg->multiply(lam, arrow_elt);
        for (long i = 0; i < ddst; ++i) mat.at(i, k) = prod.coords.at(i, 0);
      }
      act.emplace(std::make_pair(n, a), std::move(mat));
    }
  }
  return GradedRightModule(std::move(alg), lo, hi, complete, std::move(dims),
                           std::move(act));
}

long GradedRightModule::dim(int n, int v) const {
  if (n < lo_) return 0;
  if (n > hi_) {
    if (complete_) return 0;
    throw WindowError("module component beyond the faithful window: degree " +
                      std::to_string(n));
  }
  return dims_[n - lo_][v];
}

long GradedRightModule::total_dim(int n) const {
  long s = 0;
  for (int v = 0; v < vertex_count(); ++v) s += dim(n, v);
  return s;
}

bool GradedRightModule::is_zero_in_window() const {
  for (const auto& row : dims_)
    for (long d : row)
      if (d != 0) return false;
  return true;
}

DimensionTable GradedRightModule::dims() const { return DimensionTable{lo_, dims_}; }

Matrix GradedRightModule::action(int n, int a) const {
  const Arrow& ar = alg_->quiver().arrow(a);
  if (n < lo_) return Matrix(field(), dim(n + 1, ar.src), 0);
  if (n >= hi_) {
    // rows/cols possibly zero; only legal when the shape is determined
    return Matrix(field(), dim(n + 1, ar.src), dim(n, ar.tgt));
  }
  auto it = act_.find({n, a});
  if (it == act_.end())
    return Matrix(field(), dim(n + 1, ar.src), dim(n, ar.tgt));
  return it->second;
}

GradedRightModule GradedRightModule::shifted(int k) const {
  std::map<std::pair<int, int>, Matrix> act;
  for (const auto& [key, m] : act_) act.emplace(std::make_pair(key.first - k, key.second), m);
  return GradedRightModule(alg_, lo_ - k, hi_ - k, complete_, dims_, std::move(act));
}

Matrix GradedRightModule::act_along_path(int n, int v, const Matrix& vecs,
                                         const Path& p) const {
  Matrix cur = vecs;
  int deg = n, vert = v;
  for (int idx = 0; idx < static_cast<int>(p.size()); ++idx) {
    const Arrow& ar = alg_->quiver().arrow(p[idx]);
    if (ar.tgt != vert)
      throw ModuleError("path does not act at this vertex");
    cur = action(deg, p[idx]) * cur;
    vert = ar.src;
    deg += 1;
  }
  return cur;
}

const Matrix& ModuleMap::at(int n, int v) const {
  auto it = mats.find({n, v});
  if (it == mats.end()) throw ModuleError("module map has no block at this degree");
  return it->second;
}

ModuleMap map_compose(const ModuleMap& g, const ModuleMap& f) {
  ModuleMap h;
  for (const auto& [key, fm] : f.mats) {
    auto it = g.mats.find(key);
    if (it == g.mats.end()) continue;
    h.mats.emplace(key, it->second * fm);
  }
  return h;
}

ModuleMap map_scale(const ModuleMap& f, const Scalar& c) {
  ModuleMap h;
  for (const auto& [key, fm] : f.mats) h.mats.emplace(key, fm.scaled(c));
  return h;
}

ModuleMap map_add(const ModuleMap& f, const ModuleMap& g) {
  ModuleMap h = f;
  for (const auto& [key, gm] : g.mats) {
    auto it = h.mats.find(key);
    if (it == h.mats.end())
      h.mats.emplace(key, gm);
    else
      it->second = it->second + gm;
  }
  return h;
}

ModuleMap map_combine(const std::vector<ModuleMap>& basis,
                      const std::vector<Scalar>& coeffs) {
  if (basis.size() != coeffs.size())
    throw ModuleError("map_combine: coefficient count mismatch");
  ModuleMap out;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    ModuleMap term = map_scale(basis[k], coeffs[k]);
    out = k == 0 ? std::move(term) : map_add(out, term);
  }
  return out;
}

bool map_is_zero(const ModuleMap& f) {
  for (const auto& [key, fm] : f.mats)
    if (!fm.is_zero()) return false;
  return true;
}

bool map_commutes(const GradedRightModule& src, const GradedRightModule& dst,
                  const ModuleMap& f) {
  const Quiver& q = src.algebra().quiver();
  for (int n = src.lo(); n < src.hi(); ++n) {
    for (int a = 0; a < q.arrow_count(); ++a) {
      const Arrow& ar = q.arrow(a);
      Matrix lhs = f.at(n + 1, ar.src) * src.action(n, a);
      Matrix rhs = dst.action(n, a) * f.at(n, ar.tgt);
      if (!(lhs == rhs)) return false;
    }
  }
  return true;
}

bool map_is_surjective(const GradedRightModule& dst, const ModuleMap& f, int through) {
  for (int n = dst.lo(); n <= std::min(through, dst.hi()); ++n)
    for (int v = 0; v < dst.vertex_count(); ++v) {
      if (dst.dim(n, v) == 0) continue;
      auto it = f.mats.find({n, v});
      if (it == f.mats.end()) return false;
      if (static_cast<long>(rank(it->second)) != dst.dim(n, v)) return false;
    }
  return true;
}

TopData top(const GradedRightModule& m) {
  TopData t;
  const Quiver& q = m.algebra().quiver();
  t.dims.lo = m.lo();
  for (int n = m.lo(); n <= m.hi(); ++n) {
    std::vector<long> row(m.vertex_count(), 0);
    for (int v = 0; v < m.vertex_count(); ++v) {
      long d = m.dim(n, v);
      Matrix img(m.field(), d, 0);
      for (int a : q.arrows_from(v)) img = img.hstack(m.action(n - 1, a));
      Matrix basis = img.columns(column_space_pivots(img));
      Matrix reps = complement_basis(basis, d);
      row[v] = static_cast<long>(reps.cols());
      t.reps.emplace(std::make_pair(n, v), std::move(reps));
      t.radical.emplace(std::make_pair(n, v), std::move(basis));
    }
    t.dims.rows.push_back(std::move(row));
  }
  return t;
}

std::optional<int> generated_in_single_degree(const GradedRightModule& m) {
  auto sup = top(m).dims.support();
  if (sup.empty()) return m.lo();
  if (sup.size() == 1) return sup[0];
  return std::nullopt;
}

std::vector<long> CoverData::block_offset(int n, int v) const {
  std::vector<long> offs;
  long off = 0;
  for (const auto& g : gens) {
    offs.push_back(off);
    if (n >= g.degree) off += projective.algebra().dim(n - g.degree, v, g.vertex);
  }
  offs.push_back(off);
  return offs;
}

CoverData projective_cover(const GradedRightModule& m) {
  const TruncatedGradedAlgebra& alg = m.algebra();
  auto algp = m.algebra_ptr();
  TopData t = top(m);
  std::vector<Generator> gens;
  for (int n = m.lo(); n <= m.hi(); ++n)
    for (int v = 0; v < m.vertex_count(); ++v) {
      const Matrix& reps = t.reps.at({n, v});
      for (std::size_t k = 0; k < reps.cols(); ++k)
        gens.push_back({n, v, reps.column(k)});
    }

  // window of P
  int lo = m.lo();
  int hi;
  bool complete;
  auto len = alg.graded_length();
  if (gens.empty()) {
    hi = m.hi();
    complete = m.complete();
  } else if (len) {
    if (m.complete()) {
      int support_end = 0;
      for (const auto& g : gens) support_end = std::max(support_end, g.degree + *len - 1);
      hi = std::max(support_end, m.hi());
      complete = true;
    } else {
      // generators beyond m's window are unknown, so the cover (hence the kernel)
      // is only trustworthy through m.hi
      hi = m.hi();
      complete = false;
    }
  } else {
    int faithful = GradedRightModule::kUnbounded;
    for (const auto& g : gens)
      faithful = std::min(faithful, g.degree + alg.max_degree());
    hi = m.complete() ? faithful : std::min(faithful, m.hi());
    complete = false;
  }

  // assemble P = direct sum of shifted corner projectives, block diagonal action
  int r = m.vertex_count();
  std::vector<std::vector<long>> dims;
  for (int n = lo; n <= hi; ++n) {
    std::vector<long> row(r, 0);
    for (int v = 0; v < r; ++v)
      for (const auto& g : gens)
        if (n >= g.degree) row[v] += alg.dim(n - g.degree, v, g.vertex);
    dims.push_back(std::move(row));
  }
  std::vector<GradedRightModule> summands;
  for (const auto& g : gens)
    summands.push_back(GradedRightModule::projective(algp, g.vertex, g.degree, hi));
  std::map<std::pair<int, int>, Matrix> act;
  const Quiver& q = alg.quiver();
  for (int n = lo; n < hi; ++n)
    for (int a = 0; a < q.arrow_count(); ++a) {
      const Arrow& ar = q.arrow(a);
      long rows = dims[n + 1 - lo][ar.src], cols = dims[n - lo][ar.tgt];
      Matrix mat(alg.field(), rows, cols);
      long roff = 0, coff = 0;
      for (const auto& s : summands) {
        Matrix blk = s.action(n, a);
        for (std::size_t i = 0; i < blk.rows(); ++i)
          for (std::size_t j = 0; j < blk.cols(); ++j)
            mat.at(roff + i, coff + j) = blk.at(i, j);
        roff += blk.rows();
        coff += blk.cols();
      }
      act.emplace(std::make_pair(n, a), std::move(mat));
    }
  GradedRightModule P(algp, lo, hi, complete, dims, std::move(act));

  // cover map: generator block (g, lambda) goes to g.rep acted on by lambda's path
  ModuleMap cover;
  for (int n = lo; n <= hi; ++n)
    for (int v = 0; v < r; ++v) {
      Matrix mat(alg.field(), m.dim(n, v), P.dim(n, v));
      long off = 0;
      for (const auto& g : gens) {
        if (n >= g.degree) {
          long w = alg.dim(n - g.degree, v, g.vertex);
          for (long k = 0; k < w; ++k) {
            const Path& p = alg.basis_path(n - g.degree, v, g.vertex, static_cast<int>(k));
            Matrix col = m.act_along_path(g.degree, g.vertex, g.rep, p);
            for (std::size_t i = 0; i < col.rows(); ++i)
              mat.at(i, off + k) = col.at(i, 0);
          }
          off += w;
        }
      }
      cover.mats.emplace(std::make_pair(n, v), std::move(mat));
    }
  return CoverData{std::move(P), std::move(gens), std::move(cover)};
}

KernelData kernel_of(const GradedRightModule& src, const GradedRightModule& dst,
                     const ModuleMap& f) {
  auto algp = src.algebra_ptr();
  int r = src.vertex_count();
  std::map<std::pair<int, int>, Matrix> embed;
  std::vector<std::vector<long>> dims;
  for (int n = src.lo(); n <= src.hi(); ++n) {
    std::vector<long> row(r, 0);
    for (int v = 0; v < r; ++v) {
      auto it = f.mats.find({n, v});
      Matrix k = it != f.mats.end() ? kernel_basis(it->second)
                                    : Matrix::identity(src.field(), src.dim(n, v));
      row[v] = static_cast<long>(k.cols());
      embed.emplace(std::make_pair(n, v), std::move(k));
    }
    dims.push_back(std::move(row));
  }
  std::map<std::pair<int, int>, Matrix> act;
  const Quiver& q = src.algebra().quiver();
  for (int n = src.lo(); n < src.hi(); ++n)
    for (int a = 0; a < q.arrow_count(); ++a) {
      const Arrow& ar = q.arrow(a);
      const Matrix& kin = embed.at({n, ar.tgt});
      const Matrix& kout = embed.at({n + 1, ar.src});
      auto x = solve(kout, src.action(n, a) * kin);
      if (!x) throw ModuleError("internal: kernel is not closed under the action");
      act.emplace(std::make_pair(n, a), std::move(*x));
    }
  GradedRightModule K(algp, src.lo(), src.hi(), src.complete(), std::move(dims),
                      std::move(act));
  return KernelData{std::move(K), std::move(embed)};
}

SyzygyData syzygy(const GradedRightModule& m) {
  CoverData cov = projective_cover(m);
  KernelData k = kernel_of(cov.projective, m, cov.map);
  return SyzygyData{std::move(k.module), std::move(cov), std::move(k.embed)};
}

FStep functor_F(const GradedRightModule& m) {
  SyzygyData s = syzygy(m);
  GradedRightModule fm = s.omega.shifted(1);
  return FStep{m, std::move(s), std::move(fm)};
}

ModuleMap functor_F_on_map(const ModuleMap& f, const FStep& sM, const FStep& sN) {
  const GradedRightModule& M = sM.source;
  const GradedRightModule& N = sN.source;
  const GradedRightModule& PM = sM.syz.cover.projective;
  const GradedRightModule& PN = sN.syz.cover.projective;
  const TruncatedGradedAlgebra& alg = M.algebra();
  ModuleMap out;

  if (M.is_zero_in_window() || N.is_zero_in_window()) {
    for (int n = sM.result.lo(); n <= sM.result.hi(); ++n)
      for (int v = 0; v < M.vertex_count(); ++v) {
        long rows = 0;
        if (n <= sN.result.hi() || sN.result.complete()) rows = sN.result.dim(n, v);
        out.mats.emplace(std::make_pair(n, v),
                         Matrix(M.field(), rows, sM.result.dim(n, v)));
      }
    return out;
  }

  auto gM = generated_in_single_degree(M);
  auto gN = generated_in_single_degree(N);
  if (!gM || !gN || *gM != *gN)
    throw ModuleError("functor on maps needs both modules generated in one common degree");
  int g = *gM;

  // per-vertex generator columns: generators at degree g are coordinate vectors
  int r = M.vertex_count();
  std::vector<std::vector<std::size_t>> genM(r), genN(r);
  for (std::size_t k = 0; k < sM.syz.cover.gens.size(); ++k)
    genM[sM.syz.cover.gens[k].vertex].push_back(k);
  for (std::size_t k = 0; k < sN.syz.cover.gens.size(); ++k)
    genN[sN.syz.cover.gens[k].vertex].push_back(k);

  int hi = std::min(PM.hi(), PN.complete() ? PM.hi() : PN.hi());
  for (int n = std::min(sM.syz.omega.lo(), PM.lo()); n <= hi; ++n) {
    for (int v = 0; v < r; ++v) {
      // lift fhat at (n, v): block (hN, lam') x (gM, lam) = f_g[hN, gM] delta_{lam lam'}
      Matrix lift(M.field(), PN.dim(n, v), PM.dim(n, v));
      long coff = 0;
      for (std::size_t km = 0; km < sM.syz.cover.gens.size(); ++km) {
        const Generator& gm = sM.syz.cover.gens[km];
        long w = n >= g ? alg.dim(n - g, v, gm.vertex) : 0;
        if (w == 0) {
          continue;
        }
        // column index of gm inside M_g e_{gm.vertex}
        long gm_col = 0;
        for (std::size_t i = 0; i < genM[gm.vertex].size(); ++i)
          if (genM[gm.vertex][i] == km) gm_col = static_cast<long>(i);
        long roff = 0;
        for (std::size_t kn = 0; kn < sN.syz.cover.gens.size(); ++kn) {
          const Generator& gn = sN.syz.cover.gens[kn];
          long wn = n >= g ? alg.dim(n - g, v, gn.vertex) : 0;
          if (wn == 0) continue;
          if (gn.vertex == gm.vertex) {
            long gn_row = 0;
            for (std::size_t i = 0; i < genN[gn.vertex].size(); ++i)
              if (genN[gn.vertex][i] == kn) gn_row = static_cast<long>(i);
            const Matrix& fg = f.at(g, gm.vertex);
            Scalar c = fg.at(gn_row, gm_col);
            if (!c.is_zero())
              for (long i = 0; i < wn; ++i) lift.at(roff + i, coff + i) = c;
          }
          roff += wn;
        }
        coff += w;
      }
      // restrict to the syzygies
      auto itM = sM.syz.embed.find({n, v});
      Matrix embM = itM != sM.syz.embed.end() ? itM->second
                                              : Matrix(M.field(), PM.dim(n, v), 0);
      auto itN = sN.syz.embed.find({n, v});
      Matrix embN = itN != sN.syz.embed.end() ? itN->second
                                              : Matrix(M.field(), PN.dim(n, v), 0);
      auto x = solve(embN, lift * embM);
      if (!x) throw ModuleError("internal: lifted map does not preserve syzygies");
      out.mats.emplace(std::make_pair(n - 1, v), std::move(*x));  // shift by 1
    }
  }
  return out;
}

std::vector<ModuleMap> hom_space(const GradedRightModule& m, const GradedRightModule& n,
                                 int s) {
  GradedRightModule ns = n.shifted(s);
  const Quiver& q = m.algebra().quiver();
  int r = m.vertex_count();

  auto ns_dim = [&](int d, int v) -> long {
    if (d > ns.faithful_hi() && m.dim(d, v) > 0)
      throw WindowError("hom_space: target window too small");
    if (d > ns.hi() && !ns.complete()) return 0;  // blocks out of reach are pinned to 0
    return ns.dim(d, v);
  };

  // unknown layout
  std::map<std::pair<int, int>, long> offset;
  long total = 0;
  for (int d = m.lo(); d <= m.hi(); ++d)
    for (int v = 0; v < r; ++v) {
      offset[{d, v}] = total;
      total += m.dim(d, v) * ns_dim(d, v);
    }

  std::vector<std::vector<Scalar>> rows;
  auto add_constraints = [&](int d, int a) {
    const Arrow& ar = q.arrow(a);
    long mc = m.dim(d, ar.tgt);  // source columns of phi_d
    if (mc == 0) return;
    // phi_{d+1} source columns; zero when M_{d+1} vanishes by completeness
    long src_m = d + 1 <= m.hi() ? m.dim(d + 1, ar.src) : 0;
    long phi_d_rows = ns_dim(d, ar.tgt);
    bool lhs_live = src_m > 0;
    bool rhs_live = phi_d_rows > 0;
    if (!lhs_live && !rhs_live) return;
    if (d + 1 > ns.faithful_hi())
      throw WindowError("hom_space: target window too small at degree " +
                        std::to_string(d + 1));
    long T = ns.dim(d + 1, ar.src);  // rows of the equation block
    if (T == 0) return;              // a zero target space imposes nothing
    Matrix rhoM = m.action(d, a);    // M_d e_tgt -> M_{d+1} e_src
    Matrix rhoN = rhs_live ? ns.action(d, a) : Matrix(m.field(), T, 0);
    for (long rr = 0; rr < T; ++rr)
      for (long cc = 0; cc < mc; ++cc) {
        std::vector<Scalar> eq(total, Scalar::zero(m.field()));
        bool nonzero = false;
        // + phi_{d+1, src}[rr][k] * rhoM[k][cc]
        if (lhs_live) {
          long base = offset[{d + 1, ar.src}];
          for (long k = 0; k < src_m; ++k) {
            const Scalar& c = rhoM.at(k, cc);
            if (c.is_zero()) continue;
            eq[base + k * T + rr] = eq[base + k * T + rr] + c;
            nonzero = true;
          }
        }
        // - rhoN[rr][k] * phi_{d, tgt}[k][cc]
        if (rhs_live) {
          long base = offset[{d, ar.tgt}];
          for (long k = 0; k < phi_d_rows; ++k) {
            const Scalar& c = rhoN.at(rr, k);
            if (c.is_zero()) continue;
            eq[base + cc * phi_d_rows + k] = eq[base + cc * phi_d_rows + k] - c;
            nonzero = true;
          }
        }
        if (nonzero) rows.push_back(std::move(eq));
      }
  };

  int top_con = m.complete() ? m.hi() : m.hi() - 1;
  for (int d = m.lo(); d <= top_con; ++d)
    for (int a = 0; a < q.arrow_count(); ++a) add_constraints(d, a);

  Matrix sys(m.field(), rows.size(), total);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (long j = 0; j < total; ++j) sys.at(i, j) = rows[i][j];
  Matrix ker = kernel_basis(sys);

  std::vector<ModuleMap> out;
  for (std::size_t c = 0; c < ker.cols(); ++c) {
    ModuleMap f;
    for (int d = m.lo(); d <= m.hi(); ++d)
      for (int v = 0; v < r; ++v) {
        long mr = ns_dim(d, v), mc = m.dim(d, v);
        Matrix blk(m.field(), mr, mc);
        long base = offset[{d, v}];
        for (long i = 0; i < mc; ++i)
          for (long j = 0; j < mr; ++j) blk.at(j, i) = ker.at(base + i * mr + j, c);
        f.mats.emplace(std::make_pair(d, v), std::move(blk));
      }
    out.push_back(std::move(f));
  }
  return out;
}

KoszulVerdict is_koszul(const GradedRightModule& m, int up_to) {
  KoszulVerdict v;
  GradedRightModule cur = m;
  bool windowed = false;
  for (int step = 0; step <= up_to; ++step) {
    if (cur.complete() && cur.is_zero_in_window()) {
      v.status = KoszulVerdict::Status::holds;
      v.checked = up_to;
      if (windowed) v.note = "verified within the degree window";
      return v;
    }
    if (!cur.complete()) {
      windowed = true;
      if (cur.hi() < step) {
        v.status = KoszulVerdict::Status::undetermined;
        v.checked = step - 1;
        v.note = "window exhausted before syzygy step " + std::to_string(step);
        return v;
      }
    }
    TopData t = top(cur);
    auto sup = t.dims.support();
    for (int d : sup)
      if (d != step) {
        v.status = KoszulVerdict::Status::fails;
        v.checked = step - 1;
        v.defect_step = step;
        v.defect_top = t.dims.trimmed();
        v.note = "syzygy step " + std::to_string(step) + " has a generator in degree " +
                 std::to_string(d);
        return v;
      }
    v.checked = step;
    if (step == up_to) break;
    SyzygyData s = syzygy(cur);
    cur = std::move(s.omega);
  }
  v.status = KoszulVerdict::Status::holds;
  if (windowed) v.note = "verified within the degree window";
  return v;
}

SocleData socle(const GradedRightModule& m) {
  if (!m.complete())
    throw WindowError("socle needs a module known to vanish beyond its window");
  const Quiver& q = m.algebra().quiver();
  SocleData s;
  s.dims.lo = m.lo();
  for (int n = m.lo(); n <= m.hi(); ++n) {
    std::vector<long> row(m.vertex_count(), 0);
    for (int v = 0; v < m.vertex_count(); ++v) {
      Matrix stacked(m.field(), 0, m.dim(n, v));
      for (int a : q.arrows_into(v)) stacked = stacked.vstack(m.action(n, a));
      Matrix k = kernel_basis(stacked);
      row[v] = static_cast<long>(k.cols());
      s.basis.emplace(std::make_pair(n, v), std::move(k));
    }
    s.dims.rows.push_back(std::move(row));
  }
  return s;
}

}  // namespace quiverdom
