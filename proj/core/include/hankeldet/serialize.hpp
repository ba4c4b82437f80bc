#ifndef HANKELDET_SERIALIZE_HPP
#define HANKELDET_SERIALIZE_HPP

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hankeldet/closed_forms.hpp"
#include "hankeldet/hankel.hpp"
#include "hankeldet/orthopoly.hpp"
#include "hankeldet/verify.hpp"

namespace hankeldet {

using Json = nlohmann::json;

/// Rationals are strings "p/q" (or "p"); polynomials are arrays of
/// coefficient strings, constant term first.
Json to_json(const Rational& r);
Json to_json(const UniPoly& p);
Json to_json(const SequenceTerm& t);
Json to_json(const Matrix<SequenceTerm>& m);
Json to_json(const DetResult& d);
Json to_json(const RecurrenceCoeffs& c);
Json to_json(const ClosedFormIdentity& c);
Json catalog_json();
Json to_json(const IndexRecord& r);
Json to_json(const VerificationReport& r);
Json to_json(const std::vector<VerificationReport>& reports);

Rational rational_from_json(const Json& j);
SequenceTerm term_from_json(const Json& j);
VerificationReport report_from_json(const Json& j);
std::vector<VerificationReport> reports_from_json(const Json& j);

/// One row per index record.
std::string reports_to_csv(const std::vector<VerificationReport>& reports);

}  // namespace hankeldet

#endif  // HANKELDET_SERIALIZE_HPP
