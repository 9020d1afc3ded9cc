#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "quiverdom/io.hpp"

using namespace quiverdom;

namespace {

constexpr int kExitDefinitive = 0;
constexpr int kExitError = 1;
constexpr int kExitUndetermined = 2;
constexpr int kExitOracleWitness = 3;

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw IoError("cannot open input file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::optional<FieldSpec> parse_field_flag(const std::string& flag) {
  if (flag.empty()) return std::nullopt;
  if (flag == "q" || flag == "Q") return FieldSpec::rationals();
  if (flag.size() > 1 && (flag[0] == 'p' || flag[0] == 'P'))
    return FieldSpec::prime(std::stoll(flag.substr(1)));
  throw IoError("bad --field value \"" + flag + "\": expected q or p<prime>");
}

using AlgPtr = std::shared_ptr<const TruncatedGradedAlgebra>;

AlgPtr build(const QuadraticPresentation& pres, int n) {
  return std::make_shared<const TruncatedGradedAlgebra>(
      TruncatedGradedAlgebra::build(pres, n));
}

std::string inline_dims(const DimensionTable& t) {
  std::string s = t.str();
  if (s.empty()) return "(empty in window)";
  for (auto& c : s)
    if (c == '\n') c = ';';
  return s;
}

std::string tri_line(const std::string& name, const Trichotomy& t) {
  std::string v = t.yes() ? "YES" : (t.no() ? "NO" : "UNDETERMINED");
  return "  " + name + ": " + v + (t.qualifier.empty() ? "" : "  [" + t.qualifier + "]");
}

void print_classification_text(const ClassificationReport& rep, const Quiver& q,
                               std::ostream& os, int indent = 0) {
  std::string pad(indent, ' ');
  os << pad << "summary: " << rep.summary << "\n";
  os << pad << tri_line("piecewise domain", rep.piecewise_domain) << "\n";
  os << pad << tri_line("prime           ", rep.prime) << "\n";
  os << pad << tri_line("domain          ", rep.domain) << "\n";
  os << pad << "  strongly connected: " << (rep.strongly_connected ? "yes" : "no")
     << "\n";
  const auto& s = rep.syzygy_condition;
  os << pad << "  syzygy condition: "
     << (s.status == SyzygyConditionVerdict::Status::holds
             ? "holds"
             : s.status == SyzygyConditionVerdict::Status::fails ? "fails"
                                                                 : "undetermined")
     << " (bound " << s.bound << ", maps checked " << s.maps_checked
     << ", detectors " << (s.detectors_agree ? "agree" : "DISAGREE") << ")\n";
  if (!s.note.empty()) os << pad << "    note: " << s.note << "\n";
  if (s.witness) {
    os << pad << "    witness: level " << s.witness->level << ", S_"
       << s.witness->source_vertex << " -> S_" << s.witness->target_vertex
       << ", coeffs (";
    for (std::size_t k = 0; k < s.witness->coeffs.size(); ++k)
      os << (k ? ", " : "") << s.witness->coeffs[k];
    os << "), kernel top [" << inline_dims(s.witness->kernel_top) << "]\n";
  }
  if (rep.oracle_cross_check)
    os << pad << "  oracle cross-check: "
       << (rep.oracle_cross_check->agrees ? "agrees" : "CONFLICT") << " — "
       << rep.oracle_cross_check->detail << "\n";
  if (rep.outdegree_screen)
    os << pad << "  outdegree screen (>= 2): " << (*rep.outdegree_screen ? "pass" : "fail")
       << "\n";
  if (rep.incidence_screen)
    os << pad << "  incidence screen (B = P·Bᵀ): "
       << (*rep.incidence_screen ? "pass" : "fail") << "\n";
  if (rep.arrow_pair_witness)
    os << pad << "  arrow-pair witness: "
       << q.arrow(rep.arrow_pair_witness->first).name << "·"
       << q.arrow(rep.arrow_pair_witness->second).name << " = 0\n";
  if (rep.component_reports.size() > 1) {
    for (std::size_t k = 0; k < rep.component_reports.size(); ++k) {
      os << pad << "  component " << k << " {";
      for (std::size_t i = 0; i < rep.components[k].size(); ++i)
        os << (i ? ", " : "") << q.vertex_name(rep.components[k][i]);
      os << "}:\n";
      print_classification_text(rep.component_reports[k],
                                induced_subquiver(q, rep.components[k]).quiver, os,
                                indent + 4);
    }
  }
}

bool any_undetermined(const ClassificationReport& rep) {
  auto und = [](const Trichotomy& t) { return !t.yes() && !t.no(); };
  return und(rep.piecewise_domain) || und(rep.prime) || und(rep.domain);
}

void print_grid_table(const std::vector<IntGrid>& grids, std::ostream& os) {
  for (std::size_t n = 0; n < grids.size(); ++n) {
    os << "  degree " << n << ":";
    for (const auto& row : grids[n]) {
      os << "  [";
      for (std::size_t k = 0; k < row.size(); ++k) os << (k ? " " : "") << row[k];
      os << "]";
    }
    os << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "quiverdom: decides domain / piecewise-domain / primeness properties of "
      "quadratic quiver algebras at finite truncation"};
  app.require_subcommand(1);

  std::string input_path = "-";
  std::string field_flag;
  std::string format = "text";
  int max_degree = -1;   // -1: take from the input document (default 8)
  int max_syzygy = -1;
  long budget = -1;
  app.add_option("--input", input_path, "input JSON path, or - for stdin")
      ->capture_default_str();
  app.add_option("--field", field_flag,
                 "override the input's ground field: q or p<prime> (e.g. p2)");
  app.add_option("--format", format, "text or json")->capture_default_str();
  app.add_option("--max-degree", max_degree, "degree window for algebra truncation");
  app.add_option("--max-syzygy", max_syzygy, "syzygy depth for Koszul checks");
  app.add_option("--budget", budget, "enumeration budget for map/pair searches");

  auto* cmd_dual = app.add_subcommand("dual", "quadratic dual presentation");
  auto* cmd_classify =
      app.add_subcommand("classify", "full domain/piecewise-domain/prime pipeline");
  auto* cmd_cy2 = app.add_subcommand(
      "cy2", "component-split pipeline with structural screens and arrow witnesses");
  auto* cmd_prepro = app.add_subcommand(
      "preprojective", "preprojective presentation on the double of the input quiver");
  auto* cmd_hilbert = app.add_subcommand("hilbert", "corner dimension grids and series");
  auto* cmd_ext = app.add_subcommand(
      "ext", "rebuild the algebra from its dual's syzygy homs; compare dimensions");
  auto* cmd_koszul =
      app.add_subcommand("koszul", "per-simple Koszulity verdicts plus the raw oracle");
  auto* cmd_syz = app.add_subcommand(
      "syzygy-condition", "kernel-Koszulity check for maps out of F^i of each simple");
  auto* cmd_oracle =
      app.add_subcommand("oracle", "brute-force corner zero-divisor search");
  for (auto* sc : {cmd_dual, cmd_classify, cmd_cy2, cmd_prepro, cmd_hilbert, cmd_ext,
                   cmd_koszul, cmd_syz, cmd_oracle})
    sc->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    ParsedInput in = parse_input(read_file(input_path), parse_field_flag(field_flag));
    if (max_degree > 0) in.options.max_degree = max_degree;
    if (max_syzygy > 0) in.options.max_syzygy = max_syzygy;
    if (budget > 0) in.options.budget = budget;
    in.hash = input_hash(in.pres, in.options);
    const int N = in.options.max_degree;
    const int I = in.options.max_syzygy;
    const bool as_json = format == "json";
    if (!as_json && format != "text") throw IoError("bad --format: " + format);

    if (*cmd_dual) {
      QuadraticPresentation d = quadratic_dual(in.pres);
      if (as_json) {
        std::cout << input_document(d, in.options).dump(2) << "\n";
      } else {
        std::cout << "dual quiver: " << d.quiver().vertex_count() << " vertices, "
                  << d.quiver().arrow_count() << " arrows\n";
        for (const auto& s : d.relation_strings())
          std::cout << "  relation: " << s << "\n";
      }
      return kExitDefinitive;
    }

    if (*cmd_prepro) {
      QuadraticPresentation p = preprojective_presentation(in.pres.quiver(),
                                                           in.pres.field());
      if (as_json) {
        std::cout << input_document(p, in.options).dump(2) << "\n";
      } else {
        std::cout << "double quiver: " << p.quiver().arrow_count() << " arrows\n";
        for (const auto& s : p.relation_strings())
          std::cout << "  relation: " << s << "\n";
      }
      return kExitDefinitive;
    }

    if (*cmd_hilbert) {
      auto alg = build(in.pres, N);
      if (as_json) {
        std::cout << report_document("hilbert", in, hilbert_json(*alg)).dump(2)
                  << "\n";
      } else {
        HilbertData h = hilbert(*alg);
        for (int v = 0; v < alg->vertex_count(); ++v)
          std::cout << "  h_{e_" << alg->quiver().vertex_name(v)
                    << "A}(t) = " << series_string(h.row_sums[v]) << "\n";
        print_grid_table(h.grids, std::cout);
      }
      return kExitDefinitive;
    }

    if (*cmd_ext) {
      auto A = build(in.pres, N);
      auto L = build(quadratic_dual(in.pres), N);
      TruncatedGradedAlgebra ext = ext_algebra(L, N);
      HilbertData ha = hilbert(*A);
      HilbertData he = hilbert(ext);
      bool match = ha.grids == he.grids;
      if (as_json) {
        json body;
        body["input_grids"] = ha.grids;
        body["reconstructed_grids"] = he.grids;
        body["match"] = match;
        std::cout << report_document("ext", in, body).dump(2) << "\n";
      } else {
        std::cout << "input algebra corner grids:\n";
        print_grid_table(ha.grids, std::cout);
        std::cout << "reconstruction from the dual's syzygy homs:\n";
        print_grid_table(he.grids, std::cout);
        std::cout << "match through degree " << N << ": " << (match ? "yes" : "NO")
                  << "\n";
      }
      return match ? kExitDefinitive : kExitUndetermined;
    }

    if (*cmd_koszul) {
      auto alg = build(in.pres, N);
      bool undetermined = false;
      json verdicts = json::array(), oracles = json::array();
      for (int v = 0; v < alg->vertex_count(); ++v) {
        KoszulVerdict kv = is_koszul(GradedRightModule::simple(alg, v), I);
        undetermined =
            undetermined || kv.status == KoszulVerdict::Status::undetermined;
        KoszulOracleReport orep = koszul_oracle(*alg, v, I);
        if (as_json) {
          verdicts.push_back(koszul_json(kv));
          oracles.push_back(koszul_oracle_json(orep));
        } else {
          std::cout << "  simple at vertex " << alg->quiver().vertex_name(v) << ": "
                    << (kv.status == KoszulVerdict::Status::holds
                            ? "Koszul to depth " + std::to_string(kv.checked)
                            : kv.status == KoszulVerdict::Status::fails
                                  ? "NOT Koszul"
                                  : "undetermined")
                    << (kv.note.empty() ? "" : " — " + kv.note) << "\n";
          for (std::size_t s = 0; s < orep.steps.size(); ++s) {
            std::cout << "    oracle syzygy " << s << ": gen degrees {";
            for (std::size_t k = 0; k < orep.steps[s].generation_degrees.size(); ++k)
              std::cout << (k ? ", " : "") << orep.steps[s].generation_degrees[k];
            std::cout << "}, dims [" << inline_dims(orep.steps[s].dims) << "]\n";
          }
        }
      }
      if (as_json) {
        json body;
        body["verdicts"] = verdicts;
        body["oracle"] = oracles;
        std::cout << report_document("koszul", in, body).dump(2) << "\n";
      }
      return undetermined ? kExitUndetermined : kExitDefinitive;
    }

    if (*cmd_syz) {
      auto alg = build(in.pres, N);
      SyzygyOptions opt;
      opt.max_level = I;
      opt.budget = in.options.budget;
      SyzygyConditionVerdict v = koszul_syzygy_condition(alg, opt);
      if (as_json) {
        std::cout << report_document("syzygy-condition", in,
                                     syzygy_condition_json(v))
                         .dump(2)
                  << "\n";
      } else {
        std::cout << "  syzygy condition on the INPUT algebra: "
                  << (v.status == SyzygyConditionVerdict::Status::holds
                          ? "holds"
                          : v.status == SyzygyConditionVerdict::Status::fails
                                ? "fails"
                                : "undetermined")
                  << " (bound " << v.bound << ")\n    " << v.note << "\n";
      }
      return v.status == SyzygyConditionVerdict::Status::undetermined
                 ? kExitUndetermined
                 : kExitDefinitive;
    }

    if (*cmd_oracle) {
      FieldSpec of = in.options.oracle_field.value_or(in.pres.field());
      if (!of.is_prime_field())
        throw IoError(
            "the oracle needs a prime field: set --field p<prime>, an options."
            "oracleField, or a prime input field");
      ParsedInput oin = in;
      if (!(in.pres.field() == of)) {
        oin = parse_input(input_document(in.pres, in.options).dump(), of);
        oin.options = in.options;
      }
      auto alg = build(oin.pres, std::min(N, 4));
      OracleConfig cfg;
      cfg.field = of;
      cfg.max_total_degree = std::min(N, 4);
      cfg.enumeration_budget = oin.options.budget;
      ZeroDivisorReport rep = zero_divisor_search(*alg, cfg);
      if (as_json) {
        std::cout << report_document("oracle", oin, zero_divisor_json(rep)).dump(2)
                  << "\n";
      } else {
        if (rep.witness)
          std::cout << "  zero divisor over " << of.str() << ": ("
                    << rep.witness->x_label << ")·(" << rep.witness->y_label
                    << ") = 0 at degrees (" << rep.witness->deg_x << ", "
                    << rep.witness->deg_y << ")\n";
        else
          std::cout << "  none ("
                    << (rep.coverage == ZeroDivisorReport::Coverage::full
                            ? "full coverage <= degree " +
                                  std::to_string(rep.max_total_degree)
                            : "PARTIAL coverage — budget exhausted")
                    << ", " << rep.pairs_tested << " pairs)\n";
      }
      if (rep.witness) return kExitOracleWitness;
      return rep.coverage == ZeroDivisorReport::Coverage::full ? kExitDefinitive
                                                               : kExitUndetermined;
    }

    // classify / cy2
    ClassificationReport rep = *cmd_cy2
                                   ? cy2_classify(in.pres, N, I, in.options.budget)
                                   : classify(in.pres, N, I, in.options.budget);
    if (as_json) {
      std::cout << report_document(*cmd_cy2 ? "cy2" : "classify", in,
                                   classification_json(rep, in.pres.quiver()))
                       .dump(2)
                << "\n";
    } else {
      print_classification_text(rep, in.pres.quiver(), std::cout);
    }
    return any_undetermined(rep) ? kExitUndetermined : kExitDefinitive;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}
