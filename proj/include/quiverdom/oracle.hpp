#pragma once

#include "quiverdom/module.hpp"

namespace quiverdom {

struct OracleError : std::runtime_error {
  explicit OracleError(const std::string& what) : std::runtime_error(what) {}
};

struct OracleConfig {
  FieldSpec field = FieldSpec::prime(2);  // prime field required for exhaustive claims
  int max_total_degree = 4;               // search x·y with deg x + deg y <= this
  long enumeration_budget = 1'000'000;    // max (x, y) vector pairs tested
};

// A nonzero pair x ∈ e_i A_d e_j, y ∈ e_j A_e e_l with x·y = 0.
struct ZeroDivisorWitness {
  int deg_x = 0, deg_y = 0;
  int i = 0, j = 0, l = 0;
  std::vector<std::string> x_coeffs;  // coordinates in the corner bases
  std::vector<std::string> y_coeffs;
  std::string x_label, y_label;       // path-readable when the algebra is path-backed
  bool reverified = false;            // product re-expanded through structure constants
};

struct ZeroDivisorReport {
  enum class Coverage { full, partial };
  std::optional<ZeroDivisorWitness> witness;
  Coverage coverage = Coverage::full;
  long pairs_tested = 0;
  int max_total_degree = 0;  // degree range actually covered
  std::string note;
};

// Exhaustive search for corner zero divisors up to scalar on each side, in
// deterministic order (total degree, then left degree, then corner indices, then
// degree-lex on coefficient vectors with the leading coordinate normalized to 1).
// Stops with Coverage::partial when the pair budget runs out — never a silent miss.
ZeroDivisorReport zero_divisor_search(const TruncatedGradedAlgebra& alg,
                                      const OracleConfig& cfg);

struct PrimenessOracleReport {
  int window = 0;          // degrees 0..window were scanned
  bool all_corners_hit = false;  // every ordered pair i != j has a nonzero corner
  // first_hit[i][j]: least n <= window with e_j A_n e_i != 0
  std::vector<std::vector<std::optional<int>>> first_hit;
  // set when some e_j A e_i vanishes in all degrees, not just inside the window
  std::optional<std::pair<int, int>> definitive_zero_pair;
  std::string note;
};

// Corner non-vanishing test: a ring with orthogonal idempotents is prime only if
// every corner e_j A e_i is nonzero. Definitive when the quiver has no path i -> j
// or the graded length bounds the search.
PrimenessOracleReport primeness_oracle(const TruncatedGradedAlgebra& alg,
                                       int window = -1);

struct KoszulOracleStep {
  DimensionTable dims;                   // of the n-th syzygy (step 0 = the seed)
  std::vector<int> generation_degrees;   // degrees holding minimal generators
};

struct KoszulOracleReport {
  int seed_vertex = 0;
  int degree_offset = 0;                 // seed sits in this degree (0 for a simple)
  int steps_computed = 0;                // largest n with the n-th syzygy resolved
  std::vector<KoszulOracleStep> steps;   // indexed by syzygy step
  bool defect_free = true;               // step n generated purely in degree n + offset
  std::optional<int> first_defect_step;
  bool window_limited = false;           // ran out of certified degrees before up_to
  std::string note;
};

// Independent Koszulness check for the simple at `vertex`: builds the minimal graded
// free resolution degreewise with raw structure-constant linear algebra (no shared
// code with the graded-module layer) and reports each syzygy's dimension table and
// generation degrees. Koszul means step n is generated purely in degree n.
KoszulOracleReport koszul_oracle(const TruncatedGradedAlgebra& alg, int vertex,
                                 int up_to);

// Same engine, seeded at the kernel of the degree-0 map Omega^level(S_vertex)(level)
// -> S_target picked out by `lambda` on the level-degree generators sitting at
// `target`. Step n of the report then describes Omega^n(ker f); its generation
// degrees exhibit non-Koszulness of the kernel independently of the module layer.
// Requires Omega^level(S_vertex) to be generated in degree `level`.
KoszulOracleReport koszul_kernel_oracle(const TruncatedGradedAlgebra& alg, int vertex,
                                        int level, int target,
                                        const std::vector<std::string>& lambda,
                                        int up_to);

}  // namespace quiverdom
