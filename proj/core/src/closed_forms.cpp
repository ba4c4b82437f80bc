#include "hankeldet/closed_forms.hpp"

#include <string>

#include "hankeldet/error.hpp"
#include "hankeldet/hankel.hpp"
#include "hankeldet/orthopoly.hpp"
#include "hankeldet/umbral.hpp"

namespace hankeldet {

std::string_view to_string(Format f) {
  switch (f) {
    case Format::AllN: return "AllN";
    case Format::OddOnly: return "OddOnly";
    case Format::Custom: return "Custom";
  }
  return "?";
}

std::string_view to_string(SignPattern s) {
  switch (s) {
    case SignPattern::Zero: return "Zero";
    case SignPattern::NPlus1: return "NPlus1";
    case SignPattern::BinomN1: return "Binom(n+1,2)";
    case SignPattern::BinomN2: return "Binom(n+2,2)";
    case SignPattern::MPlus1: return "MPlus1";
    case SignPattern::Custom: return "Custom";
  }
  return "?";
}

std::string_view to_string(Status s) { return s == Status::Asserted ? "Asserted" : "ReportOnly"; }

std::string_view to_string(Category c) {
  switch (c) {
    case Category::TableAllN: return "table-all-n";
    case Category::TableOddOnly: return "table-odd-only";
    case Category::Parametric: return "parametric";
    case Category::Character: return "character";
    case Category::PowerSum: return "power-sum";
    case Category::Statement: return "statement";
    case Category::Misc: return "misc";
    case Category::Umbral: return "umbral";
  }
  return "?";
}

namespace {

long sign_exponent(SignPattern p, long n) {
  switch (p) {
    case SignPattern::Zero: return 0;
    case SignPattern::NPlus1: return n + 1;
    case SignPattern::BinomN1: return n * (n + 1) / 2;
    case SignPattern::BinomN2: return (n + 1) * (n + 2) / 2;
    case SignPattern::MPlus1: return n / 2 + 1;
    case SignPattern::Custom: break;
  }
  throw Error(ErrorCode::InvalidParameters, "custom sign pattern used with a standard format");
}

SequenceTerm eval_all_n(const ClosedFormIdentity& id, long n) {
  SequenceTerm v = id.a(n).pow(static_cast<unsigned>(n + 1));
  for (long l = 1; l <= n; ++l) v *= id.b(l).pow(static_cast<unsigned>(n + 1 - l));
  return sign_exponent(id.sign, n) % 2 == 0 ? v : -v;
}

SequenceTerm eval_odd_only(const ClosedFormIdentity& id, long n) {
  if (n % 2 == 0) return SequenceTerm(Rational(0));
  const long m = (n - 1) / 2;
  SequenceTerm v = id.a(m).pow(static_cast<unsigned>(2 * (m + 1)));
  for (long l = 1; l <= m; ++l) v *= id.b(l).pow(static_cast<unsigned>(2 * (m + 1 - l)));
  return (m + 1) % 2 == 0 ? v : -v;
}

}  // namespace

SequenceTerm eval_closed_form(const ClosedFormIdentity& id, long index, const ParamMap& params) {
  if (index < 0) throw Error(ErrorCode::OutOfRange, "index must be nonnegative", index);
  for (const auto& [name, value] : params) {
    if (name != "x") throw Error(ErrorCode::InvalidParameters, "unknown parameter '" + name + "'");
  }
  SequenceTerm v;
  switch (id.format) {
    case Format::AllN: v = eval_all_n(id, index); break;
    case Format::OddOnly: v = eval_odd_only(id, index); break;
    case Format::Custom: v = id.custom(index); break;
  }
  if (auto it = params.find("x"); it != params.end()) return SequenceTerm(v.eval_at(it->second));
  return v;
}

SequenceTerm eval_closed_form(std::string_view id, long index, const ParamMap& params) {
  return eval_closed_form(find_identity(id), index, params);
}

SequenceTerm eval_misc(std::string_view id, long n) {
  const auto& identity = find_identity(id);
  if (identity.category != Category::Misc) {
    throw Error(ErrorCode::UnknownIdentity, "'" + std::string(id) + "' is not a miscellaneous identity");
  }
  return eval_closed_form(identity, n);
}

Rational fk_closed_form(long a, long b, long c, long d, long n) {
  if (a < 1 || b < 1 || c < 0 || d < 0) {
    throw Error(ErrorCode::InvalidParameters, "need a, b >= 1 and c, d >= 0");
  }
  if (n < 0) throw Error(ErrorCode::OutOfRange, "index must be nonnegative", n);
  const long s = a + b + c + d;
  const Rational pre = factorial(a + c - 1) * factorial(b + c - 1) * factorial(a + d - 1) * factorial(b + d - 1) /
                       factorial(s - 1);
  Rational v = pre.pow(n + 1);
  for (long l = 1; l <= n; ++l) {
    const Rational num = Rational(l) * Rational(a + c + l - 1) * Rational(b + c + l - 1) * Rational(a + d + l - 1) *
                         Rational(b + d + l - 1) * Rational(s + l - 2);
    const Rational den = Rational(s + 2 * l - 3) * Rational(s + 2 * l - 2).pow(2) * Rational(s + 2 * l - 1);
    v *= (num / den).pow(n + 1 - l);
  }
  return (n * (n + 1) / 2) % 2 == 0 ? v : -v;
}

std::pair<Rational, Rational> fk_general(long a, long b, long c, long d, long n) {
  const Rational rhs = fk_closed_form(a, b, c, d, n);
  Matrix<Rational> m(static_cast<std::size_t>(n + 1));
  std::vector<Rational> moments;
  for (long k = 0; k <= 2 * n; ++k) moments.push_back(fk_moment(a, b, c, d, k));
  for (long i = 0; i <= n; ++i) {
    for (long j = 0; j <= n; ++j) m(i, j) = moments[static_cast<std::size_t>(i + j)];
  }
  return {det_gauss(std::move(m)), rhs};
}

Rational shift_limit_closed_form(long n) {
  if (n < 2) throw Error(ErrorCode::OutOfRange, "the limit formula starts at n = 2", n);
  Rational v = Rational(2).pow(n - 2) / Rational(3).pow(n);
  for (long l = 2; l <= n; ++l) {
    const Rational f = Rational(l + 1).pow(2) * Rational(2 * l - 1) / (Rational(l) * Rational(l - 1) * Rational(2 * l + 1));
    v *= f.pow(n + 1 - l);
  }
  return n % 2 == 0 ? v : -v;
}

Rational shift_limit_from_recurrence(long n) {
  if (n < 0) throw Error(ErrorCode::OutOfRange, "index must be nonnegative", n);
  const UniPoly d = shift_factor_dn(builtin_recurrence_bern_odd(n), n).as_poly();
  const UniPoly den(std::vector<Rational>{Rational(-1), Rational(0), Rational(1)});
  return cancel_and_eval_limit(d, den, Rational(-1));
}

const std::vector<DerivativeRoute>& derivative_routes() {
  static const std::vector<DerivativeRoute> routes = {
      {"Hn_(2k+1)E2k_fact", "(2k+1)*E[2k]", "E[2k+1]((x+1)/2)", Rational(0), Rational(2), Rational(4)},
      {"Hn_(2^(2k+2)-1)B2k+2_fact", "(2^(2k+2)-1)*B[2k+2]", "E[2k+2]((x+1)/2)", Rational(1), Rational(1),
       Rational(1)},
      {"Hn_(2k+1)B2k(1/2)_fact", "(2k+1)*B[2k](1/2)", "B[2k+1]((x+1)/2)", Rational(0), Rational(2), Rational(1)},
      {"Hn_(2k+3)B2k+2_fact", "(2k+3)*B[2k+2]", "B[2k+3]((x+1)/2)", Rational(-1), Rational(2), Rational(1)},
  };
  return routes;
}

Rational derivative_route_value(const DerivativeRoute& route, long n) {
  const Rational h = derivative_limit_hankel(parse_sequence(route.family), route.x0, n);
  return route.lambda.pow(n + 1) * route.mu.pow(n * (n + 1)) * h;
}

}  // namespace hankeldet
