#include "quiverdom/oracle.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace quiverdom {

namespace {

// dim e_tgt A_degree e_src with negative degrees treated as empty
long adim(const TruncatedGradedAlgebra& a, int degree, int src, int tgt) {
  if (degree < 0) return 0;
  return a.dim(degree, src, tgt);
}

// Minimal graded free resolution engine working degreewise on raw corner bases.
// State: a free module F = ⊕_k e_{v_k}A(−d_k) and a graded submodule U ⊆ F kept as
// coordinate columns per (degree, vertex). All products go through the algebra's
// structure constants directly.
struct Resolver {
  const TruncatedGradedAlgebra& alg;
  int r;
  bool complete;  // finite graded length: components are known in every degree
  int len = 0;    // the graded length when complete

  struct FreeGen {
    int degree, vertex;
  };
  std::vector<FreeGen> fgens;
  std::map<std::pair<int, int>, Matrix> sub;  // (n, w) -> columns of U in F coords
  int sub_lo = 1, sub_hi = 0;

  Resolver(const TruncatedGradedAlgebra& a, int vertex) : alg(a) {
    r = alg.vertex_count();
    complete = alg.graded_length().has_value();
    if (complete) len = *alg.graded_length();
    fgens = {{0, vertex}};
    // first syzygy of the simple: rad(e_vertex A), the full components in degree >= 1
    sub_lo = 1;
    sub_hi = complete ? len - 1 : alg.max_degree();
    for (int n = 1; n <= sub_hi; ++n)
      for (int w = 0; w < r; ++w) {
        long d = adim(alg, n, w, vertex);
        if (d > 0) sub[{n, w}] = Matrix::identity(alg.field(), d);
      }
  }

  std::vector<long> widths(int n, int w) const {
    std::vector<long> out;
    out.reserve(fgens.size());
    for (const auto& g : fgens) out.push_back(adim(alg, n - g.degree, w, g.vertex));
    return out;
  }

  long fdim(int n, int w) const {
    long s = 0;
    for (long x : widths(n, w)) s += x;
    return s;
  }

  const Matrix* ucols(int n, int w) const {
    auto it = sub.find({n, w});
    return it == sub.end() ? nullptr : &it->second;
  }

  // right multiplication by basis element a_idx of e_t A_1 e_{w2} as a matrix
  // F(n, t) -> F(n + 1, w2), block diagonal over the free generators
  Matrix action_matrix(int n, int t, int w2, int a_idx) const {
    AlgebraElement a = alg.basis_element(1, w2, t, a_idx);
    Matrix out(alg.field(), fdim(n + 1, w2), fdim(n, t));
    long roff = 0, coff = 0;
    for (const auto& g : fgens) {
      int m = n - g.degree;
      long bc = adim(alg, m, t, g.vertex);
      long br = adim(alg, m + 1, w2, g.vertex);
      if (bc > 0 && br > 0)
        for (long c = 0; c < bc; ++c) {
          AlgebraElement z = alg.multiply(alg.basis_element(m, t, g.vertex, c), a);
          for (long rr = 0; rr < br; ++rr)
            out.at(roff + rr, coff + c) = z.coords.at(rr, 0);
        }
      roff += br;
      coff += bc;
    }
    return out;
  }

  // span of U_{n-1}·A_1 inside the (n, w) component of F
  Matrix radical_at(int n, int w) const {
    Matrix out(alg.field(), fdim(n, w), 0);
    for (int t = 0; t < r; ++t) {
      const Matrix* u = ucols(n - 1, t);
      if (u == nullptr || u->cols() == 0) continue;
      long na = adim(alg, 1, w, t);
      for (long a = 0; a < na; ++a) out = out.hstack(action_matrix(n - 1, t, w, a) * *u);
    }
    return out;
  }

  struct GenCol {
    int degree, vertex;
    Matrix col;  // a single column in F coordinates
  };

  // minimal generators of U: per degree and vertex, a complement of the radical
  // image inside U's column span, picked by the deterministic complement rule
  std::vector<GenCol> find_generators() const {
    std::vector<GenCol> out;
    for (int n = sub_lo; n <= sub_hi; ++n)
      for (int w = 0; w < r; ++w) {
        const Matrix* u = ucols(n, w);
        if (u == nullptr || u->cols() == 0) continue;
        Matrix rad = radical_at(n, w);
        Matrix picks;
        if (rad.cols() == 0) {
          picks = Matrix::identity(alg.field(), u->cols());
        } else {
          auto x = solve(*u, rad);
          if (!x) throw OracleError("internal: radical escaped the syzygy span");
          picks = complement_basis(*x, u->cols());
        }
        for (std::size_t c = 0; c < picks.cols(); ++c)
          out.push_back({n, w, *u * picks.column(c)});
      }
    return out;
  }

  DimensionTable sub_dims() const {
    DimensionTable t;
    t.lo = sub_lo;
    for (int n = sub_lo; n <= sub_hi; ++n) {
      std::vector<long> row(r, 0);
      for (int w = 0; w < r; ++w) {
        const Matrix* u = ucols(n, w);
        row[w] = u ? static_cast<long>(u->cols()) : 0;
      }
      t.rows.push_back(row);
    }
    return t.trimmed();
  }

  // replace (F, U) by (F', ker Φ) for the minimal cover Φ: F' -> F along gens
  void step_down(const std::vector<GenCol>& gens) {
    std::vector<FreeGen> ngens;
    ngens.reserve(gens.size());
    for (const auto& g : gens) ngens.push_back({g.degree, g.vertex});
    if (gens.empty()) {
      fgens.clear();
      sub.clear();
      sub_hi = sub_lo - 1;
      return;
    }
    int min_e = gens.front().degree;
    int max_e = gens.back().degree;
    int nhi = complete ? max_e + len - 1 : sub_hi;
    std::map<std::pair<int, int>, Matrix> nsub;
    auto nwidths = [&](int n, int w) {
      std::vector<long> out;
      for (const auto& g : ngens) out.push_back(adim(alg, n - g.degree, w, g.vertex));
      return out;
    };
    for (int n = min_e; n <= nhi; ++n)
      for (int w = 0; w < r; ++w) {
        auto ws = nwidths(n, w);
        long cols = 0;
        for (long x : ws) cols += x;
        if (cols == 0) continue;
        long rows = fdim(n, w);
        Matrix phi(alg.field(), rows, cols);
        long coff = 0;
        for (std::size_t t = 0; t < gens.size(); ++t) {
          const GenCol& g = gens[t];
          long bc = ws[t];
          if (bc > 0 && rows > 0) {
            auto gw = widths(g.degree, g.vertex);
            for (long y = 0; y < bc; ++y) {
              AlgebraElement yb = alg.basis_element(n - g.degree, w, g.vertex, y);
              long roff = 0, goff = 0;
              for (std::size_t k = 0; k < fgens.size(); ++k) {
                int m0 = g.degree - fgens[k].degree;
                long gk = gw[k];
                long br = adim(alg, n - fgens[k].degree, w, fgens[k].vertex);
                if (gk > 0 && br > 0)
                  for (long idx = 0; idx < gk; ++idx) {
                    const Scalar& c = g.col.at(goff + idx, 0);
                    if (c.is_zero()) continue;
                    AlgebraElement prod = alg.multiply(
                        alg.basis_element(m0, g.vertex, fgens[k].vertex, idx), yb);
                    for (long rr = 0; rr < br; ++rr)
                      phi.at(roff + rr, coff + y) =
                          phi.at(roff + rr, coff + y) + prod.coords.at(rr, 0) * c;
                  }
                roff += br;
                goff += gk;
              }
            }
          }
          coff += bc;
        }
        Matrix ker = rows == 0 ? Matrix::identity(alg.field(), cols) : kernel_basis(phi);
        if (ker.cols() > 0) nsub[{n, w}] = ker;
      }
    fgens = ngens;
    sub = std::move(nsub);
    sub_lo = min_e;
    sub_hi = nhi;
  }
};

std::vector<int> gen_degrees(const std::vector<Resolver::GenCol>& gens) {
  std::vector<int> out;
  for (const auto& g : gens)
    if (out.empty() || out.back() != g.degree) out.push_back(g.degree);
  return out;
}

// walks the engine from its current state (holding syzygy step `first`) to `up_to`
void run_chain(Resolver& R, KoszulOracleReport& rep, int first, int up_to) {
  for (int m = first; m <= up_to; ++m) {
    auto gens = R.find_generators();
    KoszulOracleStep st;
    st.dims = R.sub_dims();
    st.generation_degrees = gen_degrees(gens);
    rep.steps.push_back(st);
    rep.steps_computed = m;
    for (int d : st.generation_degrees)
      if (d != m + rep.degree_offset) {
        rep.defect_free = false;
        if (!rep.first_defect_step) rep.first_defect_step = m;
      }
    if (gens.empty() && R.complete) {
      // the chain is identically zero from here on
      for (int m2 = m + 1; m2 <= up_to; ++m2) rep.steps.push_back(KoszulOracleStep{});
      rep.steps_computed = up_to;
      if (rep.note.empty())
        rep.note = "syzygy chain vanishes from step " + std::to_string(m);
      return;
    }
    if (gens.empty()) {
      rep.window_limited = true;
      rep.note = "syzygy chain empty within the degree window at step " +
                 std::to_string(m);
      return;
    }
    if (m < up_to) R.step_down(gens);
  }
}

}  // namespace

KoszulOracleReport koszul_oracle(const TruncatedGradedAlgebra& alg, int vertex,
                                 int up_to) {
  if (vertex < 0 || vertex >= alg.vertex_count())
    throw OracleError("koszul_oracle: vertex out of range");
  if (up_to < 0) throw OracleError("koszul_oracle: negative step count");
  KoszulOracleReport rep;
  rep.seed_vertex = vertex;
  rep.degree_offset = 0;
  KoszulOracleStep s0;
  s0.dims.lo = 0;
  s0.dims.rows = {std::vector<long>(alg.vertex_count(), 0)};
  s0.dims.rows[0][vertex] = 1;
  s0.generation_degrees = {0};
  rep.steps.push_back(s0);
  rep.steps_computed = 0;
  if (up_to == 0) return rep;
  Resolver R(alg, vertex);
  rep.window_limited = !R.complete;
  run_chain(R, rep, 1, up_to);
  return rep;
}

KoszulOracleReport koszul_kernel_oracle(const TruncatedGradedAlgebra& alg, int vertex,
                                        int level, int target,
                                        const std::vector<std::string>& lambda,
                                        int up_to) {
  if (vertex < 0 || vertex >= alg.vertex_count() || target < 0 ||
      target >= alg.vertex_count())
    throw OracleError("koszul_kernel_oracle: vertex out of range");
  if (level < 1) throw OracleError("koszul_kernel_oracle: level must be >= 1");
  if (up_to < 0) throw OracleError("koszul_kernel_oracle: negative step count");
  Resolver R(alg, vertex);
  for (int m = 1; m < level; ++m) R.step_down(R.find_generators());
  auto gens = R.find_generators();
  for (const auto& g : gens)
    if (g.degree != level)
      throw OracleError(
          "koszul_kernel_oracle: seed syzygy is not generated in a single degree");
  const Matrix* u = R.ucols(level, target);
  long c = u ? static_cast<long>(u->cols()) : 0;
  if (c == 0)
    throw OracleError("koszul_kernel_oracle: no generators at the target vertex");
  if (static_cast<long>(lambda.size()) != c)
    throw OracleError("koszul_kernel_oracle: lambda needs " + std::to_string(c) +
                      " coefficients");
  Matrix lrow(alg.field(), 1, c);
  bool nonzero = false;
  for (long k = 0; k < c; ++k) {
    lrow.at(0, k) = Scalar::parse(alg.field(), lambda[k]);
    nonzero = nonzero || !lrow.at(0, k).is_zero();
  }
  if (!nonzero) throw OracleError("koszul_kernel_oracle: lambda must be nonzero");
  // the degree-`level` columns at `target` are precisely the minimal generator
  // representatives there (nothing sits below them), so lambda acts on them directly
  Matrix newcols = *u * kernel_basis(lrow);
  if (newcols.cols() == 0)
    R.sub.erase({level, target});
  else
    R.sub[{level, target}] = newcols;

  KoszulOracleReport rep;
  rep.seed_vertex = vertex;
  rep.degree_offset = level;
  rep.window_limited = !R.complete;
  run_chain(R, rep, 0, up_to);
  return rep;
}

PrimenessOracleReport primeness_oracle(const TruncatedGradedAlgebra& alg, int window) {
  PrimenessOracleReport rep;
  int r = alg.vertex_count();
  int w = window >= 0 ? std::min(window, alg.max_degree()) : alg.max_degree();
  rep.window = w;
  rep.first_hit.assign(r, std::vector<std::optional<int>>(r));
  bool all_hit = true;
  std::pair<int, int> miss{-1, -1};
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      for (int n = 0; n <= w; ++n)
        if (adim(alg, n, i, j) > 0) {
          rep.first_hit[i][j] = n;
          break;
        }
      if (i != j && !rep.first_hit[i][j] && all_hit) {
        all_hit = false;
        miss = {i, j};
      }
    }
  rep.all_corners_hit = all_hit;
  if (!all_hit) {
    // try to upgrade the miss to a statement about all degrees, not just the window
    if (alg.path_backed()) {
      const Quiver& q = alg.quiver();
      for (int i = 0; i < r && !rep.definitive_zero_pair; ++i) {
        std::vector<bool> seen(r, false);
        std::queue<int> bfs;
        bfs.push(i);
        seen[i] = true;
        while (!bfs.empty()) {
          int v = bfs.front();
          bfs.pop();
          for (int a : q.arrows_from(v))
            if (!seen[q.arrow(a).tgt]) {
              seen[q.arrow(a).tgt] = true;
              bfs.push(q.arrow(a).tgt);
            }
        }
        for (int j = 0; j < r; ++j)
          if (i != j && !seen[j]) {
            rep.definitive_zero_pair = {i, j};
            rep.note = "no quiver path " + q.vertex_name(i) + " -> " +
                       q.vertex_name(j) + ": the corner vanishes in every degree";
            break;
          }
      }
      if (!rep.definitive_zero_pair)
        rep.note = "corners missed within the window but every pair is connected by "
                   "a quiver path; degrees beyond the window are undetermined";
    }
    if (!rep.definitive_zero_pair && alg.graded_length() &&
        *alg.graded_length() - 1 <= w) {
      rep.definitive_zero_pair = miss;
      rep.note = "the algebra vanishes beyond degree " +
                 std::to_string(*alg.graded_length() - 1) +
                 ", which the scan covered";
    }
  }
  return rep;
}

namespace {

// odometer over [0, p)^width in lexicographic order, most significant digit first
bool bump(std::vector<int>& digits, int p) {
  for (int k = static_cast<int>(digits.size()) - 1; k >= 0; --k) {
    if (++digits[k] < p) return true;
    digits[k] = 0;
  }
  return false;
}

// all projective points: leading coordinate 1, earlier coordinates 0, tail ranging
// over every pattern; calls fn(coords) until it returns true (found) or the
// enumeration ends. Returns whether fn ever returned true.
template <typename Fn>
bool projective_points(int dim, int p, Fn&& fn) {
  for (int lead = 0; lead < dim; ++lead) {
    std::vector<int> tail(static_cast<std::size_t>(dim - 1 - lead), 0);
    do {
      std::vector<int> coords(dim, 0);
      coords[lead] = 1;
      for (std::size_t k = 0; k < tail.size(); ++k) coords[lead + 1 + k] = tail[k];
      if (fn(coords)) return true;
    } while (bump(tail, p));
  }
  return false;
}

Matrix column_of(const FieldSpec& f, const std::vector<int>& coords) {
  Matrix m(f, coords.size(), 1);
  for (std::size_t k = 0; k < coords.size(); ++k)
    m.at(k, 0) = Scalar::of_int(f, coords[k]);
  return m;
}

std::vector<std::string> coeff_strings(const Matrix& col) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < col.rows(); ++k) out.push_back(col.at(k, 0).str());
  return out;
}

// re-expands x·y one basis pair at a time through the structure constants
bool reverify_zero(const TruncatedGradedAlgebra& alg, const AlgebraElement& x,
                   const AlgebraElement& y) {
  Matrix acc(alg.field(), static_cast<std::size_t>(alg.dim(x.degree + y.degree, y.src, x.tgt)), 1);
  for (std::size_t a = 0; a < x.coords.rows(); ++a) {
    if (x.coords.at(a, 0).is_zero()) continue;
    for (std::size_t b = 0; b < y.coords.rows(); ++b) {
      if (y.coords.at(b, 0).is_zero()) continue;
      AlgebraElement z =
          alg.multiply(alg.basis_element(x.degree, x.src, x.tgt, static_cast<int>(a)),
                       alg.basis_element(y.degree, y.src, y.tgt, static_cast<int>(b)));
      acc = acc + z.coords.scaled(x.coords.at(a, 0) * y.coords.at(b, 0));
    }
  }
  return acc.is_zero();
}

}  // namespace

ZeroDivisorReport zero_divisor_search(const TruncatedGradedAlgebra& alg,
                                      const OracleConfig& cfg) {
  if (!cfg.field.is_prime_field())
    throw OracleError("zero_divisor_search needs a prime field");
  if (!(alg.field() == cfg.field))
    throw OracleError("zero_divisor_search: algebra is over " + alg.field().str() +
                      ", config says " + cfg.field.str());
  int p = static_cast<int>(cfg.field.p);
  int r = alg.vertex_count();
  int limit = std::min(cfg.max_total_degree, alg.max_degree());
  ZeroDivisorReport rep;
  rep.max_total_degree = limit;
  long tested = 0;
  for (int total = 2; total <= limit; ++total)
    for (int d = 1; d <= total - 1; ++d) {
      int e = total - d;
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
          for (int l = 0; l < r; ++l) {
            long dx = adim(alg, d, j, i);  // x in e_i A_d e_j
            long dy = adim(alg, e, l, j);  // y in e_j A_e e_l
            if (dx == 0 || dy == 0) continue;
            bool out_of_budget = false;
            bool found = projective_points(
                static_cast<int>(dx), p, [&](const std::vector<int>& xc) {
                  AlgebraElement xe = alg.element(d, j, i, column_of(alg.field(), xc));
                  return projective_points(
                      static_cast<int>(dy), p, [&](const std::vector<int>& yc) {
                        if (++tested > cfg.enumeration_budget) {
                          out_of_budget = true;
                          return true;
                        }
                        AlgebraElement ye =
                            alg.element(e, l, j, column_of(alg.field(), yc));
                        AlgebraElement z = alg.multiply(xe, ye);
                        if (!z.coords.is_zero()) return false;
                        ZeroDivisorWitness wit;
                        wit.deg_x = d;
                        wit.deg_y = e;
                        wit.i = i;
                        wit.j = j;
                        wit.l = l;
                        wit.x_coeffs = coeff_strings(xe.coords);
                        wit.y_coeffs = coeff_strings(ye.coords);
                        if (alg.path_backed()) {
                          wit.x_label = alg.element_label(xe);
                          wit.y_label = alg.element_label(ye);
                        }
                        wit.reverified = reverify_zero(alg, xe, ye);
                        rep.witness = wit;
                        return true;
                      });
                });
            if (out_of_budget) {
              rep.coverage = ZeroDivisorReport::Coverage::partial;
              rep.pairs_tested = cfg.enumeration_budget;
              std::ostringstream os;
              os << "budget of " << cfg.enumeration_budget
                 << " pairs exhausted at degrees (" << d << ", " << e
                 << "), corners (" << i << ", " << j << ", " << l << ")";
              rep.note = os.str();
              return rep;
            }
            if (found) {
              rep.pairs_tested = tested;
              rep.note = "witness found; enumeration stopped at the first hit";
              return rep;
            }
          }
    }
  rep.pairs_tested = tested;
  rep.note = limit < 2 ? "window too small to form any degree >= 1 pair"
                       : "no witness: all nonzero corner pairs with total degree <= " +
                             std::to_string(limit) + " exhausted (up to scalar)";
  return rep;
}

}  // namespace quiverdom
