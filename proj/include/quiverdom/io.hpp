#pragma once

#include <json.hpp>

#include "quiverdom/analysis.hpp"

namespace quiverdom {

struct IoError : std::runtime_error {
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

using json = nlohmann::ordered_json;

struct InputOptions {
  int max_degree = 8;
  int max_syzygy = 6;
  std::optional<FieldSpec> oracle_field;
  long budget = 1'000'000;
};

struct ParsedInput {
  QuadraticPresentation pres;
  InputOptions options;
  std::string hash;  // over the canonical serialization
};

// Parses an input document:
// { "field": {"kind":"rational"} | {"kind":"prime","p":2},
//   "quiver": {"vertices":[...], "arrows":[{"name","src","tgt"}]},
//   "relations": [[{"coeff":"1","path":["a","b"]}, ...], ...],   (optional)
//   "options": {"maxDegree","maxSyzygy","oracleField","budget"} } (optional)
// Paths are arrow names, leftmost factor first ([a,b] = a·b, apply b then a).
// field_override replaces the document's field before relations are parsed.
ParsedInput parse_input(const std::string& text,
                        const std::optional<FieldSpec>& field_override = {});

// Canonical serialization; its parse returns an equal presentation. Relations are
// emitted from the corner-normalized spans, so serialize ∘ parse is idempotent.
json input_document(const QuadraticPresentation& pres, const InputOptions& opt);
std::string input_hash(const QuadraticPresentation& pres, const InputOptions& opt);

json field_json(const FieldSpec& f);
json dimension_table_json(const DimensionTable& t);
json koszul_json(const KoszulVerdict& v);
json frobenius_json(const FrobeniusVerdict& v);
json trichotomy_json(const Trichotomy& t);
json syzygy_condition_json(const SyzygyConditionVerdict& v);
json classification_json(const ClassificationReport& rep, const Quiver& q);
json zero_divisor_json(const ZeroDivisorReport& rep);
json primeness_oracle_json(const PrimenessOracleReport& rep);
json koszul_oracle_json(const KoszulOracleReport& rep);
json hilbert_json(const TruncatedGradedAlgebra& alg);

// Report envelope: schema version, command, input hash echo, parameters, body.
json report_document(const std::string& command, const ParsedInput& in, json body);

}  // namespace quiverdom
