#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hankeldet/character.hpp"
#include "hankeldet/closed_forms.hpp"
#include "hankeldet/error.hpp"
#include "hankeldet/hankel.hpp"
#include "hankeldet/numbers.hpp"
#include "hankeldet/orthopoly.hpp"
#include "hankeldet/sequence.hpp"
#include "hankeldet/serialize.hpp"
#include "hankeldet/verify.hpp"

namespace hankeldet::cli {

namespace {

struct Params {
  ParamMap rational;                 // x
  std::map<std::string, long> ints;  // q, r, s, a, b, c, d
};

Params parse_params(const std::vector<std::string>& raw) {
  Params p;
  for (const auto& kv : raw) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw Error(ErrorCode::ParseError, "expected name=value, got '" + kv + "'");
    }
    const std::string name = kv.substr(0, eq);
    const Rational value = Rational::parse(kv.substr(eq + 1));
    if (name == "x") {
      p.rational[name] = value;
    } else {
      if (!value.is_integer()) throw Error(ErrorCode::InvalidParameters, "parameter " + name + " must be an integer");
      p.ints[name] = value.numerator().get_si();
    }
  }
  return p;
}

void print_term_list(std::ostream& out, const std::vector<SequenceTerm>& terms) {
  bool poly = false;
  for (const auto& t : terms) poly = poly || t.is_polynomial();
  if (!poly) {
    for (std::size_t i = 0; i < terms.size(); ++i) out << (i ? " " : "") << terms[i].to_string();
    out << "\n";
    return;
  }
  for (std::size_t i = 0; i < terms.size(); ++i) out << i << ": " << terms[i].to_string() << "\n";
}

std::string latex_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '_' || c == '&' || c == '%' || c == '#' || c == '$') out += '\\';
    out += c;
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Hankel determinants of Bernoulli and Euler type sequences", "hankeldet"};
  app.require_subcommand(1);

  std::string spec_text;
  long upto = 10;
  long n = 0;
  std::string algorithm;
  std::string at_text;
  bool json = false;
  bool csv = false;
  bool latex = false;

  auto* seq = app.add_subcommand("seq", "Print the terms c_0..c_K of a sequence");
  seq->add_option("spec", spec_text, "Sequence, e.g. E_k or B[2k+1]((x+1)/2)")->required();
  seq->add_option("--upto", upto, "Last index K")->check(CLI::NonNegativeNumber);
  seq->add_flag("--json", json, "JSON output");

  auto* hankel = app.add_subcommand("hankel", "Print the Hankel determinant H_n");
  hankel->add_option("spec", spec_text, "Sequence")->required();
  hankel->add_option("--n", n, "Order n (matrix size n+1)")->required()->check(CLI::NonNegativeNumber);
  hankel->add_option("--algorithm", algorithm, "gauss, bareiss, checkerboard or recurrence");
  hankel->add_option("--at", at_text, "Evaluate x at this rational point first");
  hankel->add_flag("--json", json, "JSON output");

  auto* matrix = app.add_subcommand("matrix", "Print the (n+1)x(n+1) Hankel matrix");
  matrix->add_option("spec", spec_text, "Sequence")->required();
  matrix->add_option("--n", n, "Order n")->required()->check(CLI::NonNegativeNumber);
  matrix->add_flag("--json", json, "JSON output");

  long order = 0;
  auto* recurrence = app.add_subcommand("recurrence", "Print s_n, t_n and zeta_n of the three-term recurrence");
  recurrence->add_option("spec", spec_text, "Sequence")->required();
  recurrence->add_option("--order", order, "Largest N")->required()->check(CLI::NonNegativeNumber);
  recurrence->add_option("--at", at_text, "Point for polynomial sequences");
  recurrence->add_flag("--json", json, "JSON output");

  std::string id;
  std::vector<std::string> raw_params;
  auto* closed = app.add_subcommand("closed-form", "Evaluate a registered closed form");
  closed->add_option("id", id, "Identity id (see `list identities`)")->required();
  closed->add_option("--n", n, "Index")->required()->check(CLI::NonNegativeNumber);
  closed->add_option("--param", raw_params, "name=value; x for the variable, q/r/s/a/b/c/d for families");
  closed->add_flag("--json", json, "JSON output");

  std::vector<std::string> ids;
  std::optional<long> max_index;
  unsigned jobs = 0;
  auto* verify = app.add_subcommand("verify", "Check closed forms against brute-force determinants");
  verify->add_option("--id", ids, "Identity id (repeatable); default: whole registry");
  verify->add_option("--max", max_index, "Largest index checked")->check(CLI::NonNegativeNumber);
  verify->add_option("--param", raw_params, "x=value evaluates polynomial identities at a point");
  verify->add_option("--jobs", jobs, "Worker threads (0 = all cores)");
  auto* vj = verify->add_flag("--json", json, "JSON report");
  verify->add_flag("--csv", csv, "CSV report")->excludes(vj);

  std::string what = "identities";
  auto* list = app.add_subcommand("list", "List identities, sequences or characters");
  list->add_option("what", what, "identities | sequences | characters")
      ->check(CLI::IsMember({"identities", "sequences", "characters"}));
  list->add_flag("--json", json, "JSON output");

  std::string table_name;
  long cells = 3;
  auto* table = app.add_subcommand("table", "Emit a determinant table with computed spot checks");
  table->add_option("name", table_name, "all-n | odd-only")
      ->required()
      ->check(CLI::IsMember({"all-n", "odd-only"}));
  table->add_option("--cells", cells, "Largest index shown")->check(CLI::NonNegativeNumber);
  auto* tc = table->add_flag("--csv", csv, "CSV output");
  table->add_flag("--latex", latex, "LaTeX tabular output")->excludes(tc);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*seq) {
      const auto terms = resolve_range(parse_sequence(spec_text), upto + 1);
      if (json) {
        Json arr = Json::array();
        for (const auto& t : terms) arr.push_back(to_json(t));
        out << arr.dump() << "\n";
      } else {
        print_term_list(out, terms);
      }
    } else if (*hankel) {
      const SequenceSpec spec = parse_sequence(spec_text);
      std::vector<SequenceTerm> terms = resolve_range(spec, 2 * n + 1);
      if (!at_text.empty()) {
        const Rational at = Rational::parse(at_text);
        for (auto& t : terms) t = SequenceTerm(t.eval_at(at));
      }
      const HankelMatrix m(terms);
      const DetResult d = algorithm.empty() ? det_auto(m) : det_exact(m, parse_det_algorithm(algorithm));
      if (json) {
        out << to_json(d).dump() << "\n";
      } else {
        out << d.value.to_string() << "\n";
      }
    } else if (*matrix) {
      const Matrix<SequenceTerm> m = hankel_matrix(parse_sequence(spec_text), n).dense();
      if (json) {
        out << to_json(m).dump() << "\n";
      } else {
        std::vector<std::string> cellsv;
        std::size_t width = 0;
        for (std::size_t i = 0; i < m.size(); ++i) {
          for (std::size_t j = 0; j < m.size(); ++j) {
            cellsv.push_back(m(i, j).to_string());
            width = std::max(width, cellsv.back().size());
          }
        }
        for (std::size_t i = 0; i < m.size(); ++i) {
          for (std::size_t j = 0; j < m.size(); ++j) {
            const std::string& c = cellsv[i * m.size() + j];
            out << (j ? "  " : "") << std::string(width - c.size(), ' ') << c;
          }
          out << "\n";
        }
      }
    } else if (*recurrence) {
      std::optional<Rational> at;
      if (!at_text.empty()) at = Rational::parse(at_text);
      const RecurrenceCoeffs c = recurrence_from_moments(parse_sequence(spec_text), order, at);
      if (json) {
        out << to_json(c).dump() << "\n";
      } else {
        for (long k = 0; k <= c.order(); ++k) {
          out << "s_" << k << " = " << c.s[static_cast<std::size_t>(k)].to_string() << "\n";
        }
        for (long k = 1; k <= static_cast<long>(c.t.size()); ++k) {
          out << "t_" << k << " = " << c.t_at(k).to_string() << "\n";
        }
        for (std::size_t k = 0; k < c.zeta.size(); ++k) out << "zeta_" << k << " = " << c.zeta[k].to_string() << "\n";
      }
    } else if (*closed) {
      const Params p = parse_params(raw_params);
      const ClosedFormIdentity& identity = find_identity(parametric_id(id, p.ints));
      const SequenceTerm v = eval_closed_form(identity, n, p.rational);
      if (json) {
        out << Json{{"id", identity.id}, {"index", n}, {"value", to_json(v)}}.dump() << "\n";
      } else {
        out << v.to_string() << "\n";
      }
    } else if (*verify) {
      const Params p = parse_params(raw_params);
      if (!p.ints.empty()) throw Error(ErrorCode::InvalidParameters, "verify takes only x as a parameter");
      std::vector<VerificationReport> reports;
      if (!p.rational.empty()) {
        if (ids.empty()) throw Error(ErrorCode::InvalidParameters, "--param needs at least one --id");
        for (const auto& i : ids) reports.push_back(verify_identity(i, max_index, p.rational));
      } else {
        VerifyOptions opts;
        opts.ids = ids;
        opts.max_index = max_index;
        opts.jobs = jobs;
        reports = verify_all(opts);
      }
      const RunSummary s = summarize(reports);
      if (json) {
        out << to_json(reports).dump(2) << "\n";
      } else if (csv) {
        out << reports_to_csv(reports);
      } else {
        for (const auto& r : reports) {
          const char* tag = r.status == Status::ReportOnly ? "REPORT" : (r.passed() ? "PASS" : "FAIL");
          out << tag << "  " << r.id << "  n=0.." << r.max_index << "  " << r.matched() << "/" << r.records.size()
              << " matched";
          if (!r.error.empty()) out << "  error: " << r.error;
          out << "\n";
          if (r.status == Status::ReportOnly || !r.passed()) {
            for (const auto& rec : r.records) {
              out << "    n=" << rec.index << "  oracle=" << rec.oracle << "  closed=" << rec.closed_form << "  "
                  << (rec.match ? "agree" : "DIFFER") << (rec.claim_holds ? "" : "  vanishing claim violated") << "\n";
            }
          }
        }
        out << s.identities << " identities: " << s.passed << " passed, " << s.asserted_failures << " failed, "
            << s.report_only << " report-only\n";
      }
      return s.ok() ? kOk : kVerificationFailed;
    } else if (*list) {
      if (what == "identities") {
        if (json) {
          out << catalog_json().dump(2) << "\n";
        } else {
          for (const auto& c : registry()) {
            out << c.id << "  [" << to_string(c.category) << ", " << to_string(c.status) << "]  " << c.sequence;
            if (!c.citation.empty()) out << "  (" << c.citation << ")";
            out << "\n";
          }
        }
      } else if (what == "sequences") {
        for (const auto& e : sequence_catalog()) out << e.name << "  " << e.description << "\n";
      } else {
        for (const auto& chi : builtin_characters()) {
          out << chi.label() << "  mod " << chi.modulus() << "  conductor " << chi.conductor() << "  values";
          for (int v : chi.values()) out << " " << v;
          out << "\n";
        }
      }
    } else if (*table) {
      const Category cat = table_name == "all-n" ? Category::TableAllN : Category::TableOddOnly;
      std::vector<std::string> table_ids;
      for (const auto& c : registry()) {
        if (c.category == cat) table_ids.push_back(c.id);
      }
      VerifyOptions opts;
      opts.ids = table_ids;
      opts.max_index = cells;
      const auto reports = verify_all(opts);
      if (latex) {
        out << "\\begin{tabular}{l" << std::string(static_cast<std::size_t>(cells + 1), 'l') << "}\n";
        out << "sequence";
        for (long k = 0; k <= cells; ++k) out << " & $H_{" << k << "}$";
        out << " \\\\\n\\hline\n";
      } else if (csv) {
        out << "id,sequence,formula,citation";
        for (long k = 0; k <= cells; ++k) out << ",H_" << k;
        out << ",verified\n";
      }
      bool all_ok = true;
      for (const auto& r : reports) {
        const auto& c = find_identity(r.id);
        all_ok = all_ok && r.passed();
        if (latex) {
          out << "\\texttt{" << latex_escape(c.sequence) << "}";
          for (const auto& rec : r.records) out << " & $" << rec.oracle << "$";
          out << " \\\\\n";
        } else if (csv) {
          out << csv_field(c.id) << ',' << csv_field(c.sequence) << ',' << csv_field(c.formula) << ','
              << csv_field(c.citation);
          for (const auto& rec : r.records) out << ',' << csv_field(rec.oracle);
          out << ',' << (r.passed() ? "true" : "false") << "\n";
        } else {
          out << c.sequence << "\n  " << c.formula << "\n";
          if (!c.citation.empty()) out << "  source: " << c.citation << "\n";
          out << "  H_0..H_" << cells << ":";
          for (const auto& rec : r.records) out << " " << rec.oracle;
          out << "  [" << (r.status == Status::ReportOnly ? "report-only" : (r.passed() ? "verified" : "MISMATCH"))
              << "]\n";
        }
      }
      if (latex) out << "\\end{tabular}\n";
      return all_ok ? kOk : kVerificationFailed;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::ParseError:
      case ErrorCode::InvalidParameters:
      case ErrorCode::UnknownIdentity:
      case ErrorCode::OutOfRange:
        return kUsage;
      default:
        return kFailure;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kOk;
}

}  // namespace hankeldet::cli
