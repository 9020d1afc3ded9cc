#pragma once

#include "quiverdom/module.hpp"
#include "quiverdom/oracle.hpp"

namespace quiverdom {

struct AnalysisError : std::runtime_error {
  explicit AnalysisError(const std::string& what) : std::runtime_error(what) {}
};

// Lazily extended chain S_v, F(S_v), F^2(S_v), ... for F = Omega(-)(1), with the
// syzygy plumbing kept so F can also be applied to maps between levels.
class SyzygyTower {
 public:
  SyzygyTower(std::shared_ptr<const TruncatedGradedAlgebra> alg, int vertex);

  int vertex() const { return vertex_; }
  const GradedRightModule& level(int i);  // F^i(S_vertex)
  const FStep& step(int i);               // functor data with source = level(i)

 private:
  std::shared_ptr<const TruncatedGradedAlgebra> alg_;
  int vertex_;
  std::vector<GradedRightModule> levels_;
  std::vector<FStep> steps_;
};

// Socle-structure test: graded length d+1, socle concentrated in degree d, each
// projective's socle simple, and the socle types forming a vertex permutation —
// together these certify the d-graded Frobenius property.
struct FrobeniusVerdict {
  std::optional<int> graded_length;        // d + 1 when detectable
  bool socle_concentrated = false;         // soc(e_v A) lives purely in degree d
  bool socles_simple = false;              // each soc(e_v A) is one-dimensional
  std::optional<std::vector<int>> socle_permutation;  // v -> vertex of soc(e_v A)
  std::vector<DimensionTable> socle_dims;  // per projective e_v A

  bool passes(int expected_d) const {
    return graded_length && *graded_length == expected_d + 1 && socle_concentrated &&
           socles_simple && socle_permutation.has_value();
  }
};
FrobeniusVerdict frobenius_check(std::shared_ptr<const TruncatedGradedAlgebra> alg);

// A failing map f: F^i(S_j) -> S_l whose kernel is not Koszul, re-checkable from
// the stored hom-basis coefficients.
struct MapWitness {
  int source_vertex = 0;  // j
  int target_vertex = 0;  // l
  int level = 0;          // i
  std::vector<std::string> coeffs;  // coordinates in the hom_space basis
  DimensionTable kernel_top;        // generator table of the kernel, showing the defect
  std::string note;
};

struct SyzygyConditionVerdict {
  enum class Status { holds, fails, undetermined };
  enum class Method {
    multiplicity_one,        // every hom space had dimension <= 1
    exhaustive_enumeration,  // projective points of some hom space enumerated (F_p)
    pattern_probe,           // only {0,1}-coefficient maps probed (sound on failure)
    structural_fastpath      // unconditional structural guarantee
  };
  Status status = Status::undetermined;
  int bound = 0;  // syzygy levels fully checked
  Method method = Method::multiplicity_one;
  std::optional<MapWitness> witness;
  bool detectors_agree = true;  // kernel-Koszulity vs F-surjectivity cross-check
  long maps_checked = 0;
  std::string note;
  bool ok() const { return status == Status::holds; }
};

struct SyzygyOptions {
  int max_level = 6;         // check maps out of F^i for i <= max_level
  long budget = 1'000'000;   // projective-point enumeration cap per hom space
  bool calibrate = true;     // run the surjectivity detector alongside the kernel one
};

// Checks that every degree-0 map F^i(S_j) -> S_l has Koszul kernel, for i up to
// the requested level, enumerating maps up to scalar where the field allows it.
SyzygyConditionVerdict koszul_syzygy_condition(
    std::shared_ptr<const TruncatedGradedAlgebra> dual, const SyzygyOptions& opt = {});

// Structural fast path: graded length 3, Frobenius socle structure with d = 2,
// Koszulity of every simple verified to max_level, and every vertex of the
// algebra's quiver of indegree >= 2 together guarantee the syzygy condition.
// Returns nothing (no claim) when any hypothesis fails.
std::optional<SyzygyConditionVerdict> fastpath_syzygy_condition(
    std::shared_ptr<const TruncatedGradedAlgebra> dual, int max_level);

// Rebuilds the Ext-style orbital algebra O(F, S): degree-i component spanned by
// Hom(F^i(S_j), S_l) per corner, product f*g = f ∘ F^deg(f)(g), returned as a
// table-backed truncated graded algebra.
TruncatedGradedAlgebra ext_algebra(std::shared_ptr<const TruncatedGradedAlgebra> dual,
                                   int max_deg);

struct Trichotomy {
  enum class V { yes, no, undetermined };
  V v = V::undetermined;
  std::string qualifier;
  bool yes() const { return v == V::yes; }
  bool no() const { return v == V::no; }
};

struct OracleCrossCheck {
  bool ran = false;
  bool agrees = true;
  std::string detail;
};

struct ClassificationReport {
  FieldSpec field;
  int max_degree = 0;
  int max_syzygy = 0;
  std::vector<std::string> dual_relations;
  std::vector<KoszulVerdict> koszul_input;  // per simple over the input algebra
  std::vector<KoszulVerdict> koszul_dual;   // per simple over the quadratic dual
  SyzygyConditionVerdict syzygy_condition;
  bool strongly_connected = false;
  Trichotomy piecewise_domain;
  Trichotomy prime;
  Trichotomy domain;
  std::optional<OracleCrossCheck> oracle_cross_check;
  std::string summary;

  // structural-pipeline extras (filled by cy2_classify)
  std::vector<std::vector<int>> components;
  std::vector<ClassificationReport> component_reports;
  std::optional<bool> outdegree_screen;   // every vertex has outdegree >= 2
  std::optional<bool> incidence_screen;   // B = P·B^T solvable
  std::optional<std::vector<int>> incidence_permutation;
  std::optional<std::pair<int, int>> arrow_pair_witness;  // arrows with zero product
};

// Full decision pipeline: builds the input algebra and its quadratic dual to degree
// max_degree, verifies Koszulity per simple on both sides within the window, runs
// the fast path then the syzygy-condition checker on the dual, tests strong
// connectivity, and assembles the piecewise-domain / prime / domain trichotomies.
// Over a prime field the brute-force oracle cross-checks (and can strengthen) the
// piecewise-domain verdict.
ClassificationReport classify(const QuadraticPresentation& pres, int max_degree,
                              int max_syzygy, long budget = 1'000'000);

// Specialization for inputs expected to be twisted 2-Calabi-Yau: splits into
// connected components with per-component verdicts, screens the outdegree >= 2 and
// incidence (B = P·B^T) necessary conditions, and hunts for a degree-(1,1) zero
// product of arrows as an unconditional witness.
ClassificationReport cy2_classify(const QuadraticPresentation& pres, int max_degree,
                                  int max_syzygy = 6, long budget = 1'000'000);

}  // namespace quiverdom
