#include "hankeldet/serialize.hpp"

#include <sstream>

#include "hankeldet/error.hpp"

namespace hankeldet {

Json to_json(const Rational& r) { return r.to_string(); }

Json to_json(const UniPoly& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) out.push_back(c.to_string());
  return out;
}

Json to_json(const SequenceTerm& t) { return t.is_polynomial() ? to_json(t.as_poly()) : to_json(t.as_rational()); }

Json to_json(const Matrix<SequenceTerm>& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(to_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const DetResult& d) {
  return {{"value", to_json(d.value)},
          {"algorithm", std::string(to_string(d.algorithm))},
          {"elimination_steps", d.elimination_steps}};
}

Json to_json(const RecurrenceCoeffs& c) {
  auto arr = [](const std::vector<SequenceTerm>& v) {
    Json out = Json::array();
    for (const auto& t : v) out.push_back(to_json(t));
    return out;
  };
  return {{"s", arr(c.s)}, {"t", arr(c.t)}, {"zeta", arr(c.zeta)}};
}

Json to_json(const ClosedFormIdentity& c) {
  return {{"id", c.id},
          {"sequence", c.sequence},
          {"format", std::string(to_string(c.format))},
          {"sign", std::string(to_string(c.sign))},
          {"formula", c.formula},
          {"citation", c.citation},
          {"status", std::string(to_string(c.status))},
          {"category", std::string(to_string(c.category))},
          {"default_max", c.default_max},
          {"parameters", c.parameters}};
}

Json catalog_json() {
  Json out = Json::array();
  for (const auto& c : registry()) out.push_back(to_json(c));
  return out;
}

Json to_json(const IndexRecord& r) {
  Json out = {{"index", r.index},         {"oracle", r.oracle},           {"closed_form", r.closed_form},
              {"match", r.match},         {"claim_holds", r.claim_holds}, {"elapsed_ms", r.elapsed_ms}};
  out["claimed_zero"] = r.claimed_zero ? Json(*r.claimed_zero) : Json(nullptr);
  return out;
}

Json to_json(const VerificationReport& r) {
  Json params = Json::object();
  for (const auto& [k, v] : r.params) params[k] = v.to_string();
  Json records = Json::array();
  for (const auto& rec : r.records) records.push_back(to_json(rec));
  return {{"id", r.id},
          {"sequence", r.sequence},
          {"status", std::string(to_string(r.status))},
          {"params", params},
          {"max_index", r.max_index},
          {"records", records},
          {"error", r.error},
          {"summary", {{"checked", r.records.size()}, {"matched", r.matched()}, {"passed", r.passed()}}}};
}

Json to_json(const std::vector<VerificationReport>& reports) {
  Json arr = Json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  const RunSummary s = summarize(reports);
  return {{"reports", arr},
          {"summary",
           {{"identities", s.identities},
            {"passed", s.passed},
            {"asserted_failures", s.asserted_failures},
            {"report_only", s.report_only}}}};
}

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw Error(ErrorCode::ParseError, "expected a rational string");
  return Rational::parse(j.get<std::string>());
}

SequenceTerm term_from_json(const Json& j) {
  if (j.is_array()) {
    std::vector<Rational> coeffs;
    for (const auto& c : j) coeffs.push_back(rational_from_json(c));
    return SequenceTerm(UniPoly(std::move(coeffs)));
  }
  return SequenceTerm(rational_from_json(j));
}

VerificationReport report_from_json(const Json& j) {
  try {
    VerificationReport r;
    r.id = j.at("id").get<std::string>();
    r.sequence = j.at("sequence").get<std::string>();
    r.status = j.at("status").get<std::string>() == "ReportOnly" ? Status::ReportOnly : Status::Asserted;
    for (const auto& [k, v] : j.at("params").items()) r.params[k] = rational_from_json(v);
    r.max_index = j.at("max_index").get<long>();
    r.error = j.at("error").get<std::string>();
    for (const auto& e : j.at("records")) {
      IndexRecord rec;
      rec.index = e.at("index").get<long>();
      rec.oracle = e.at("oracle").get<std::string>();
      rec.closed_form = e.at("closed_form").get<std::string>();
      rec.match = e.at("match").get<bool>();
      rec.claim_holds = e.at("claim_holds").get<bool>();
      rec.elapsed_ms = e.at("elapsed_ms").get<double>();
      if (!e.at("claimed_zero").is_null()) rec.claimed_zero = e.at("claimed_zero").get<bool>();
      r.records.push_back(std::move(rec));
    }
    return r;
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed report: ") + e.what());
  }
}

std::vector<VerificationReport> reports_from_json(const Json& j) {
  std::vector<VerificationReport> out;
  const Json& arr = j.is_object() ? j.at("reports") : j;
  for (const auto& r : arr) out.push_back(report_from_json(r));
  return out;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string reports_to_csv(const std::vector<VerificationReport>& reports) {
  std::ostringstream out;
  out << "id,status,index,oracle,closed_form,match,claimed_zero,claim_holds,elapsed_ms\n";
  for (const auto& r : reports) {
    if (!r.error.empty()) {
      out << csv_field(r.id) << ',' << to_string(r.status) << ",,,,false,,false,\n";
      continue;
    }
    for (const auto& rec : r.records) {
      out << csv_field(r.id) << ',' << to_string(r.status) << ',' << rec.index << ',' << csv_field(rec.oracle) << ','
          << csv_field(rec.closed_form) << ',' << (rec.match ? "true" : "false") << ','
          << (rec.claimed_zero ? (*rec.claimed_zero ? "zero" : "nonzero") : "") << ','
          << (rec.claim_holds ? "true" : "false") << ',' << rec.elapsed_ms << '\n';
    }
  }
  return out.str();
}

}  // namespace hankeldet
