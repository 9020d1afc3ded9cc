#pragma once

#include <map>
#include <memory>

#include "quiverdom/algebra.hpp"

namespace quiverdom {

struct ModuleError : std::runtime_error {
  explicit ModuleError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a computation would need module components beyond the degree window
// that the truncation can vouch for.
struct WindowError : ModuleError {
  explicit WindowError(const std::string& what) : ModuleError(what) {}
};

struct DimensionTable {
  int lo = 0;
  std::vector<std::vector<long>> rows;  // [n - lo][vertex]

  long at(int n, int v) const;
  long total(int n) const;
  bool is_zero() const;
  // degrees n with a nonzero entry
  std::vector<int> support() const;
  DimensionTable trimmed() const;  // strip zero rows at both ends
  bool operator==(const DimensionTable& o) const;
  std::string str() const;
};

// Graded right module over a truncated algebra, stored on a degree window [lo, hi].
// Components below lo are zero. Above hi they are zero when complete() and unknown
// (beyond the truncation's reach) otherwise. An arrow a of the algebra's quiver acts
// as M_n e_{tgt a} -> M_{n+1} e_{src a}.
class GradedRightModule {
 public:
  static constexpr int kUnbounded = 1 << 28;

  GradedRightModule(std::shared_ptr<const TruncatedGradedAlgebra> alg, int lo, int hi,
                    bool complete, std::vector<std::vector<long>> dims,
                    std::map<std::pair<int, int>, Matrix> actions);

  static GradedRightModule zero_module(std::shared_ptr<const TruncatedGradedAlgebra> alg);
  static GradedRightModule simple(std::shared_ptr<const TruncatedGradedAlgebra> alg, int v);
  // (e_v A)(-shift), components capped at degree cap_hi
  static GradedRightModule projective(std::shared_ptr<const TruncatedGradedAlgebra> alg,
                                      int v, int shift, int cap_hi = kUnbounded);

  const std::shared_ptr<const TruncatedGradedAlgebra>& algebra_ptr() const { return alg_; }
  const TruncatedGradedAlgebra& algebra() const { return *alg_; }
  const FieldSpec& field() const { return alg_->field(); }
  int vertex_count() const { return alg_->vertex_count(); }

  int lo() const { return lo_; }
  int hi() const { return hi_; }
  bool complete() const { return complete_; }
  int faithful_hi() const { return complete_ ? kUnbounded : hi_; }

  long dim(int n, int v) const;
  long total_dim(int n) const;
  bool is_zero_in_window() const;
  DimensionTable dims() const;

  Matrix action(int n, int a) const;
  GradedRightModule shifted(int k) const;

  // right action of a path on column vectors sitting at (n, v); the path's leftmost
  // arrow acts first and must have target v
  Matrix act_along_path(int n, int v, const Matrix& vecs, const Path& p) const;

 private:
  std::shared_ptr<const TruncatedGradedAlgebra> alg_;
  int lo_ = 0, hi_ = -1;
  bool complete_ = true;
  std::vector<std::vector<long>> dims_;             // [n - lo][vertex]
  std::map<std::pair<int, int>, Matrix> act_;       // (n, arrow) for n in [lo, hi-1]
};

// Degree-preserving map, matrices keyed by (source degree, vertex).
struct ModuleMap {
  std::map<std::pair<int, int>, Matrix> mats;
  const Matrix& at(int n, int v) const;
};

ModuleMap map_compose(const ModuleMap& g, const ModuleMap& f);  // g after f
ModuleMap map_scale(const ModuleMap& f, const Scalar& c);
ModuleMap map_add(const ModuleMap& f, const ModuleMap& g);
// sum of coeffs[k] * basis[k]; coeffs.size() must match basis.size()
ModuleMap map_combine(const std::vector<ModuleMap>& basis,
                      const std::vector<Scalar>& coeffs);
bool map_is_zero(const ModuleMap& f);
// checks f commutes with all arrow actions on the overlapping window
bool map_commutes(const GradedRightModule& src, const GradedRightModule& dst,
                  const ModuleMap& f);
// surjective onto dst in every degree <= through (within dst's window)
bool map_is_surjective(const GradedRightModule& dst, const ModuleMap& f, int through);

struct TopData {
  DimensionTable dims;
  std::map<std::pair<int, int>, Matrix> reps;       // complement columns inside M_n e_v
  std::map<std::pair<int, int>, Matrix> radical;    // image of M_{n-1}·A_1
};
TopData top(const GradedRightModule& m);

// all generators in one degree (zero module counts); nullopt otherwise
std::optional<int> generated_in_single_degree(const GradedRightModule& m);

struct Generator {
  int degree;
  int vertex;
  Matrix rep;  // column in M_degree e_vertex
};

struct CoverData {
  GradedRightModule projective;
  std::vector<Generator> gens;
  ModuleMap map;  // P -> M
  // basis layout of P at (n, v): for each gen g in order, a block of width
  // dim A_{n - g.degree}(v -> g.vertex)
  std::vector<long> block_offset(int n, int v) const;
};
CoverData projective_cover(const GradedRightModule& m);

struct KernelData {
  GradedRightModule module;
  std::map<std::pair<int, int>, Matrix> embed;  // kernel basis columns in src coords
};
KernelData kernel_of(const GradedRightModule& src, const GradedRightModule& dst,
                     const ModuleMap& f);

struct SyzygyData {
  GradedRightModule omega;
  CoverData cover;
  std::map<std::pair<int, int>, Matrix> embed;  // omega basis in P coords
};
SyzygyData syzygy(const GradedRightModule& m);

// One application of F = Omega(-)(1) with the plumbing needed to apply F to maps.
struct FStep {
  GradedRightModule source;  // M
  SyzygyData syz;            // of M
  GradedRightModule result;  // F(M) = Omega(M)(1)
};
FStep functor_F(const GradedRightModule& m);

// F applied to f: M -> N; both modules must be generated in one common degree.
ModuleMap functor_F_on_map(const ModuleMap& f, const FStep& sM, const FStep& sN);

// basis of degree-preserving maps M -> N(s)
std::vector<ModuleMap> hom_space(const GradedRightModule& m, const GradedRightModule& n,
                                 int s);

struct KoszulVerdict {
  enum class Status { holds, fails, undetermined };
  Status status = Status::undetermined;
  int checked = -1;  // largest n with Omega^n verified generated in degree n
  std::optional<int> defect_step;
  std::optional<DimensionTable> defect_top;
  std::string note;
  bool ok() const { return status == Status::holds; }
};
// checks Omega^n(M) is generated in degree n for n <= up_to, within the window
KoszulVerdict is_koszul(const GradedRightModule& m, int up_to);

struct SocleData {
  DimensionTable dims;
  std::map<std::pair<int, int>, Matrix> basis;
};
SocleData socle(const GradedRightModule& m);

}  // namespace quiverdom
