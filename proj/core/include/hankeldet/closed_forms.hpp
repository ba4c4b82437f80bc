#ifndef HANKELDET_CLOSED_FORMS_HPP
#define HANKELDET_CLOSED_FORMS_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hankeldet/rational.hpp"
#include "hankeldet/sequence.hpp"
#include "hankeldet/term.hpp"

namespace hankeldet {

/// How the closed form is assembled from its parts.
///   AllN:    H_n = (-1)^eps(n) a(n)^{n+1} prod_{l=1}^{n} b(l)^{n+1-l}
///   OddOnly: H_{2m} = 0,
///            H_{2m+1} = (-1)^{m+1} a(m)^{2(m+1)} prod_{l=1}^{m} b(l)^{2(m+1-l)}
///   Custom:  H_n = custom(n)
enum class Format { AllN, OddOnly, Custom };

/// eps(n) for the AllN format.
enum class SignPattern { Zero, NPlus1, BinomN1, BinomN2, MPlus1, Custom };

enum class Status { Asserted, ReportOnly };

enum class Category { TableAllN, TableOddOnly, Parametric, Character, PowerSum, Statement, Misc, Umbral };

std::string_view to_string(Format f);
std::string_view to_string(SignPattern s);
std::string_view to_string(Status s);
std::string_view to_string(Category c);

/// Named parameter values; only "x" is recognized, and it is substituted
/// into polynomial sequences and closed forms alike.
using ParamMap = std::map<std::string, Rational>;

struct ClosedFormIdentity {
  std::string id;
  std::string sequence;  // sequence grammar text
  Format format = Format::AllN;
  SignPattern sign = SignPattern::Zero;
  std::function<SequenceTerm(long)> a;       // argument n (AllN) or m (OddOnly)
  std::function<SequenceTerm(long)> b;       // argument l
  std::function<SequenceTerm(long)> custom;  // argument n
  /// Index-wise vanishing claim: true = H_n claimed zero, false = claimed
  /// nonzero, nullopt = no claim.
  std::function<std::optional<bool>(long)> vanishing;
  std::string formula;   // human-readable statement
  std::string citation;  // literature source, may be empty
  Status status = Status::Asserted;
  Category category = Category::TableAllN;
  long default_max = 8;  // largest n checked by default
  std::vector<std::string> parameters;  // symbolic parameters, e.g. {"x"}

  SequenceSpec spec() const { return parse_sequence(sequence); }
  bool is_polynomial() const { return !parameters.empty(); }
};

/// Every registered identity, in a stable order.
const std::vector<ClosedFormIdentity>& registry();

/// Looks up an id. Parametric families are also instantiated on demand from
/// ids such as "H_diffB(q=5,r=1,s=3)", "H_Sk(s=7)" or "FK(a=3,b=1,c=2,d=0)".
/// Throws UnknownIdentity.
const ClosedFormIdentity& find_identity(std::string_view id);

/// Builds the id of a parametric family from named integer parameters, e.g.
/// ("H_diffB", {q:3,r:1,s:2}) -> "H_diffB(q=3,r=1,s=2)". Ids without
/// parameters are returned unchanged.
std::string parametric_id(std::string_view family, const std::map<std::string, long>& params);

/// Closed-form value of H_index. Throws OutOfRange for index < 0.
/// If `params` holds x, polynomial values are evaluated there.
SequenceTerm eval_closed_form(const ClosedFormIdentity& id, long index, const ParamMap& params = {});
SequenceTerm eval_closed_form(std::string_view id, long index, const ParamMap& params = {});

/// eval_closed_form restricted to the miscellaneous (non-standard format)
/// identities. Throws UnknownIdentity for any other id.
SequenceTerm eval_misc(std::string_view id, long n);

/// Right-hand side of the Fulmek-Krattenthaler product for the moments
/// U^{k+2}(U+1)_{a-1}(U+1)_{b-1}(-U+1)_{c-1}(-U+1)_{d-1}.
Rational fk_closed_form(long a, long b, long c, long d, long n);
/// (determinant, closed form) for the same moments.
std::pair<Rational, Rational> fk_general(long a, long b, long c, long d, long n);

/// Closed form of lim_{x->-1} d_n(x)/(x^2-1) for the moments
/// B_{2k+1}((x+1)/2), n >= 2.
Rational shift_limit_closed_form(long n);
/// The same limit computed from d_n through the closed-form recurrence
/// coefficients.
Rational shift_limit_from_recurrence(long n);

/// Derivative-method route: target_k = lambda * mu^k * A_k'(x0), hence
/// H_n(target) = lambda^{n+1} mu^{n(n+1)} H_n(A_k'(x0)).
struct DerivativeRoute {
  std::string identity_id;
  std::string target;  // sequence text of target_k
  std::string family;  // sequence text of A_k(x)
  Rational x0;
  Rational lambda;
  Rational mu;
};
const std::vector<DerivativeRoute>& derivative_routes();
Rational derivative_route_value(const DerivativeRoute& route, long n);

}  // namespace hankeldet

#endif  // HANKELDET_CLOSED_FORMS_HPP
