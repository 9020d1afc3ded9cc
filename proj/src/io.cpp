#include "quiverdom/io.hpp"

#include <sstream>

namespace quiverdom {

namespace {

std::string fnv1a(const std::string& text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << "fnv1a:" << std::hex << h;
  return os.str();
}

FieldSpec parse_field(const json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("kind"))
    throw IoError(where + ": expected an object with a \"kind\" key");
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "rational") return FieldSpec::rationals();
  if (kind == "prime") {
    if (!j.contains("p")) throw IoError(where + ": prime field needs \"p\"");
    return FieldSpec::prime(j.at("p").get<std::int64_t>());
  }
  throw IoError(where + ": unknown field kind \"" + kind + "\"");
}

}  // namespace

json field_json(const FieldSpec& f) {
  json j;
  j["kind"] = f.is_prime_field() ? "prime" : "rational";
  if (f.is_prime_field()) j["p"] = f.p;
  return j;
}

json input_document(const QuadraticPresentation& pres, const InputOptions& opt) {
  const Quiver& q = pres.quiver();
  json j;
  j["schema"] = "quiverdom-input/1";
  j["field"] = field_json(pres.field());
  json quiver;
  quiver["vertices"] = q.vertex_names();
  json arrows = json::array();
  for (const Arrow& a : q.arrows()) {
    json ja;
    ja["name"] = a.name;
    ja["src"] = q.vertex_name(a.src);
    ja["tgt"] = q.vertex_name(a.tgt);
    arrows.push_back(ja);
  }
  quiver["arrows"] = arrows;
  j["quiver"] = quiver;
  json rels = json::array();
  int r = q.vertex_count();
  for (int src = 0; src < r; ++src)
    for (int tgt = 0; tgt < r; ++tgt) {
      const Matrix& span = pres.relation_span(src, tgt);
      const auto& paths = pres.paths2().paths(src, tgt);
      for (std::size_t c = 0; c < span.cols(); ++c) {
        json terms = json::array();
        for (std::size_t k = 0; k < span.rows(); ++k) {
          if (span.at(k, c).is_zero()) continue;
          json term;
          term["coeff"] = span.at(k, c).str();
          term["path"] =
              json::array({q.arrow(paths[k][0]).name, q.arrow(paths[k][1]).name});
          terms.push_back(term);
        }
        rels.push_back(terms);
      }
    }
  j["relations"] = rels;
  json options;
  options["maxDegree"] = opt.max_degree;
  options["maxSyzygy"] = opt.max_syzygy;
  if (opt.oracle_field) options["oracleField"] = field_json(*opt.oracle_field);
  options["budget"] = opt.budget;
  j["options"] = options;
  return j;
}

std::string input_hash(const QuadraticPresentation& pres, const InputOptions& opt) {
  return fnv1a(input_document(pres, opt).dump());
}

ParsedInput parse_input(const std::string& text,
                        const std::optional<FieldSpec>& field_override) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    throw IoError(std::string("input is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw IoError("input: top level must be an object");

  FieldSpec field = FieldSpec::rationals();
  if (field_override)
    field = *field_override;
  else if (j.contains("field"))
    field = parse_field(j.at("field"), "field");

  if (!j.contains("quiver") || !j.at("quiver").is_object())
    throw IoError("input: missing \"quiver\" object");
  const json& jq = j.at("quiver");
  if (!jq.contains("vertices") || !jq.at("vertices").is_array())
    throw IoError("quiver: missing \"vertices\" array");
  std::vector<std::string> vertices;
  for (const auto& v : jq.at("vertices")) vertices.push_back(v.get<std::string>());
  std::vector<Arrow> arrows;
  if (jq.contains("arrows")) {
    for (const auto& ja : jq.at("arrows")) {
      if (!ja.contains("name") || !ja.contains("src") || !ja.contains("tgt"))
        throw IoError("quiver arrow: needs \"name\", \"src\", \"tgt\"");
      Arrow a;
      a.name = ja.at("name").get<std::string>();
      std::string src = ja.at("src").get<std::string>();
      std::string tgt = ja.at("tgt").get<std::string>();
      auto find = [&](const std::string& name) {
        for (std::size_t k = 0; k < vertices.size(); ++k)
          if (vertices[k] == name) return static_cast<int>(k);
        throw IoError("quiver arrow \"" + a.name + "\": unknown vertex \"" + name +
                      "\"");
      };
      a.src = find(src);
      a.tgt = find(tgt);
      arrows.push_back(a);
    }
  }
  Quiver quiver(vertices, arrows);

  std::vector<std::vector<RelationTerm>> relations;
  if (j.contains("relations")) {
    if (!j.at("relations").is_array()) throw IoError("relations: expected an array");
    int rel_idx = 0;
    for (const auto& jrel : j.at("relations")) {
      std::string where = "relation " + std::to_string(rel_idx);
      if (!jrel.is_array()) throw IoError(where + ": expected an array of terms");
      std::vector<RelationTerm> terms;
      for (const auto& jterm : jrel) {
        if (!jterm.contains("coeff") || !jterm.contains("path"))
          throw IoError(where + ": each term needs \"coeff\" and \"path\"");
        RelationTerm t;
        try {
          t.coeff = Scalar::parse(field, jterm.at("coeff").get<std::string>());
        } catch (const std::exception& e) {
          throw IoError(where + ": bad coefficient: " + e.what());
        }
        const json& jpath = jterm.at("path");
        if (!jpath.is_array() || jpath.size() != 2)
          throw IoError(where + ": paths must list exactly two arrow names");
        for (const auto& an : jpath) {
          try {
            t.path.push_back(quiver.arrow_index(an.get<std::string>()));
          } catch (const std::exception& e) {
            throw IoError(where + ": " + e.what());
          }
        }
        terms.push_back(t);
      }
      relations.push_back(terms);
      ++rel_idx;
    }
  }

  ParsedInput out{QuadraticPresentation(field, quiver, relations), {}, ""};
  if (j.contains("options")) {
    const json& jo = j.at("options");
    if (jo.contains("maxDegree")) out.options.max_degree = jo.at("maxDegree").get<int>();
    if (jo.contains("maxSyzygy")) out.options.max_syzygy = jo.at("maxSyzygy").get<int>();
    if (jo.contains("oracleField"))
      out.options.oracle_field = parse_field(jo.at("oracleField"), "oracleField");
    if (jo.contains("budget")) out.options.budget = jo.at("budget").get<long>();
  }
  out.hash = input_hash(out.pres, out.options);
  return out;
}

json dimension_table_json(const DimensionTable& t) {
  DimensionTable tr = t.trimmed();
  json j;
  j["lo"] = tr.lo;
  j["rows"] = tr.rows;
  return j;
}

json koszul_json(const KoszulVerdict& v) {
  json j;
  switch (v.status) {
    case KoszulVerdict::Status::holds:
      j["status"] = "holds";
      break;
    case KoszulVerdict::Status::fails:
      j["status"] = "fails";
      break;
    default:
      j["status"] = "undetermined";
  }
  j["checked"] = v.checked;
  j["defect_step"] = v.defect_step ? json(*v.defect_step) : json(nullptr);
  j["defect_top"] =
      v.defect_top ? dimension_table_json(*v.defect_top) : json(nullptr);
  j["note"] = v.note;
  return j;
}

json frobenius_json(const FrobeniusVerdict& v) {
  json j;
  j["graded_length"] = v.graded_length ? json(*v.graded_length) : json(nullptr);
  j["socle_concentrated"] = v.socle_concentrated;
  j["socles_simple"] = v.socles_simple;
  j["socle_permutation"] =
      v.socle_permutation ? json(*v.socle_permutation) : json(nullptr);
  json dims = json::array();
  for (const auto& t : v.socle_dims) dims.push_back(dimension_table_json(t));
  j["socle_dims"] = dims;
  return j;
}

json trichotomy_json(const Trichotomy& t) {
  json j;
  j["verdict"] = t.yes() ? "yes" : (t.no() ? "no" : "undetermined");
  j["qualifier"] = t.qualifier;
  return j;
}

json syzygy_condition_json(const SyzygyConditionVerdict& v) {
  json j;
  switch (v.status) {
    case SyzygyConditionVerdict::Status::holds:
      j["status"] = "holds";
      break;
    case SyzygyConditionVerdict::Status::fails:
      j["status"] = "fails";
      break;
    default:
      j["status"] = "undetermined";
  }
  j["bound"] = v.bound;
  switch (v.method) {
    case SyzygyConditionVerdict::Method::multiplicity_one:
      j["method"] = "multiplicity_one";
      break;
    case SyzygyConditionVerdict::Method::exhaustive_enumeration:
      j["method"] = "exhaustive_enumeration";
      break;
    case SyzygyConditionVerdict::Method::pattern_probe:
      j["method"] = "pattern_probe";
      break;
    default:
      j["method"] = "structural_fastpath";
  }
  if (v.witness) {
    json w;
    w["source_vertex"] = v.witness->source_vertex;
    w["target_vertex"] = v.witness->target_vertex;
    w["level"] = v.witness->level;
    w["coeffs"] = v.witness->coeffs;
    w["kernel_top"] = dimension_table_json(v.witness->kernel_top);
    w["note"] = v.witness->note;
    j["witness"] = w;
  } else {
    j["witness"] = nullptr;
  }
  j["detectors_agree"] = v.detectors_agree;
  j["maps_checked"] = v.maps_checked;
  j["note"] = v.note;
  return j;
}

json classification_json(const ClassificationReport& rep, const Quiver& q) {
  json j;
  j["summary"] = rep.summary;
  json verdicts;
  verdicts["piecewise_domain"] = trichotomy_json(rep.piecewise_domain);
  verdicts["prime"] = trichotomy_json(rep.prime);
  verdicts["domain"] = trichotomy_json(rep.domain);
  j["verdicts"] = verdicts;
  j["strongly_connected"] = rep.strongly_connected;
  j["dual_relations"] = rep.dual_relations;
  json ki = json::array(), kd = json::array();
  for (const auto& v : rep.koszul_input) ki.push_back(koszul_json(v));
  for (const auto& v : rep.koszul_dual) kd.push_back(koszul_json(v));
  j["koszul_input"] = ki;
  j["koszul_dual"] = kd;
  j["syzygy_condition"] = syzygy_condition_json(rep.syzygy_condition);
  if (rep.oracle_cross_check) {
    json oc;
    oc["ran"] = rep.oracle_cross_check->ran;
    oc["agrees"] = rep.oracle_cross_check->agrees;
    oc["detail"] = rep.oracle_cross_check->detail;
    j["oracle_cross_check"] = oc;
  } else {
    j["oracle_cross_check"] = nullptr;
  }
  json screens;
  screens["outdegree_ge2"] =
      rep.outdegree_screen ? json(*rep.outdegree_screen) : json(nullptr);
  screens["incidence"] =
      rep.incidence_screen ? json(*rep.incidence_screen) : json(nullptr);
  screens["incidence_permutation"] =
      rep.incidence_permutation ? json(*rep.incidence_permutation) : json(nullptr);
  j["screens"] = screens;
  if (rep.arrow_pair_witness) {
    json w;
    w["left"] = q.arrow(rep.arrow_pair_witness->first).name;
    w["right"] = q.arrow(rep.arrow_pair_witness->second).name;
    w["left_index"] = rep.arrow_pair_witness->first;
    w["right_index"] = rep.arrow_pair_witness->second;
    j["arrow_pair_witness"] = w;
  } else {
    j["arrow_pair_witness"] = nullptr;
  }
  json comps = json::array();
  for (const auto& c : rep.components) {
    json names = json::array();
    for (int v : c) names.push_back(q.vertex_name(v));
    comps.push_back(names);
  }
  j["components"] = comps;
  json creps = json::array();
  for (std::size_t k = 0; k < rep.component_reports.size(); ++k) {
    Quiver sub = induced_subquiver(q, rep.components[k]).quiver;
    creps.push_back(classification_json(rep.component_reports[k], sub));
  }
  j["component_reports"] = creps;
  return j;
}

json zero_divisor_json(const ZeroDivisorReport& rep) {
  json j;
  j["coverage"] =
      rep.coverage == ZeroDivisorReport::Coverage::full ? "full" : "partial";
  j["pairs_tested"] = rep.pairs_tested;
  j["max_total_degree"] = rep.max_total_degree;
  if (rep.witness) {
    const auto& w = *rep.witness;
    json jw;
    jw["deg_x"] = w.deg_x;
    jw["deg_y"] = w.deg_y;
    jw["corner"] = json::array({w.i, w.j, w.l});
    jw["x_coeffs"] = w.x_coeffs;
    jw["y_coeffs"] = w.y_coeffs;
    jw["x_label"] = w.x_label;
    jw["y_label"] = w.y_label;
    jw["reverified"] = w.reverified;
    j["witness"] = jw;
  } else {
    j["witness"] = nullptr;
  }
  j["note"] = rep.note;
  return j;
}

json primeness_oracle_json(const PrimenessOracleReport& rep) {
  json j;
  j["window"] = rep.window;
  j["all_corners_hit"] = rep.all_corners_hit;
  json grid = json::array();
  for (const auto& row : rep.first_hit) {
    json jr = json::array();
    for (const auto& h : row) jr.push_back(h ? json(*h) : json(nullptr));
    grid.push_back(jr);
  }
  j["first_hit"] = grid;
  j["definitive_zero_pair"] =
      rep.definitive_zero_pair
          ? json::array({rep.definitive_zero_pair->first,
                         rep.definitive_zero_pair->second})
          : json(nullptr);
  j["note"] = rep.note;
  return j;
}

json koszul_oracle_json(const KoszulOracleReport& rep) {
  json j;
  j["seed_vertex"] = rep.seed_vertex;
  j["degree_offset"] = rep.degree_offset;
  j["steps_computed"] = rep.steps_computed;
  json steps = json::array();
  for (const auto& s : rep.steps) {
    json js;
    js["dims"] = dimension_table_json(s.dims);
    js["generation_degrees"] = s.generation_degrees;
    steps.push_back(js);
  }
  j["steps"] = steps;
  j["defect_free"] = rep.defect_free;
  j["first_defect_step"] =
      rep.first_defect_step ? json(*rep.first_defect_step) : json(nullptr);
  j["window_limited"] = rep.window_limited;
  j["note"] = rep.note;
  return j;
}

json hilbert_json(const TruncatedGradedAlgebra& alg) {
  HilbertData h = hilbert(alg);
  json j;
  json names = json::array();
  for (int v = 0; v < alg.vertex_count(); ++v)
    names.push_back(alg.path_backed() ? alg.quiver().vertex_name(v)
                                      : std::to_string(v));
  j["vertices"] = names;
  json series = json::array();
  for (const auto& row : h.row_sums) series.push_back(series_string(row));
  j["series"] = series;
  j["row_sums"] = h.row_sums;
  j["grids"] = h.grids;
  return j;
}

json report_document(const std::string& command, const ParsedInput& in, json body) {
  json j;
  j["schema"] = "quiverdom-report/1";
  j["command"] = command;
  j["input_hash"] = in.hash;
  j["field"] = in.pres.field().str();
  json params;
  params["maxDegree"] = in.options.max_degree;
  params["maxSyzygy"] = in.options.max_syzygy;
  params["budget"] = in.options.budget;
  j["parameters"] = params;
  j["report"] = std::move(body);
  return j;
}

}  // namespace quiverdom
