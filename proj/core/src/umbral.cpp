#include "hankeldet/umbral.hpp"

#include "hankeldet/error.hpp"
#include "hankeldet/numbers.hpp"

namespace hankeldet {

UmbralExpr::UmbralExpr(Rational constant) { add_term(0, constant); }

UmbralExpr UmbralExpr::power(long exponent, Rational coefficient) {
  UmbralExpr e;
  e.add_term(exponent, coefficient);
  return e;
}

UmbralExpr UmbralExpr::shifted_factorial(int sign, const Rational& shift, long j) {
  if (sign != 1 && sign != -1) throw Error(ErrorCode::InvalidParameters, "umbral sign must be +1 or -1");
  if (j == -1) {
    if (shift != Rational(1)) {
      throw Error(ErrorCode::InvalidParameters, "(aU+b)_{-1} is only defined here for b = 1");
    }
    return power(-1, Rational(sign));
  }
  if (j < -1) throw Error(ErrorCode::InvalidParameters, "shifted factorial index below -1");
  UmbralExpr result(Rational(1));
  for (long i = 0; i < j; ++i) result = result * (power(1, Rational(sign)) + UmbralExpr(shift + i));
  return result;
}

long UmbralExpr::min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }

void UmbralExpr::add_term(long exponent, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

UmbralExpr& UmbralExpr::operator+=(const UmbralExpr& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

UmbralExpr operator*(const UmbralExpr& a, const UmbralExpr& b) {
  UmbralExpr r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  }
  return r;
}

std::string UmbralExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += it->second.to_string() + "*U^" + std::to_string(it->first);
  }
  return out;
}

Rational umbral_eval(const UmbralExpr& expr) {
  Rational sum;
  for (const auto& [e, c] : expr.terms()) {
    if (e < 0) {
      throw Error(ErrorCode::NegativeUmbralExponent,
                  "term U^" + std::to_string(e) + " survived expansion", e);
    }
    sum += c * bernoulli_number(e);
  }
  return sum;
}

Rational fk_moment(long a, long b, long c, long d, long k) {
  if (a < 1 || b < 1 || c < 0 || d < 0 || k < 0) {
    throw Error(ErrorCode::InvalidParameters, "umbral moment needs a,b >= 1, c,d >= 0, k >= 0");
  }
  const UmbralExpr expr = UmbralExpr::power(k + 2) * UmbralExpr::shifted_factorial(1, Rational(1), a - 1) *
                          UmbralExpr::shifted_factorial(1, Rational(1), b - 1) *
                          UmbralExpr::shifted_factorial(-1, Rational(1), c - 1) *
                          UmbralExpr::shifted_factorial(-1, Rational(1), d - 1);
  return umbral_eval(expr);
}

}  // namespace hankeldet
