#include "hankeldet/poly.hpp"

namespace hankeldet {

namespace {

// Divides p by (x - x0), assuming p(x0) == 0.
UniPoly deflate(const UniPoly& p, const Rational& x0) {
  const auto& c = p.coefficients();
  if (c.size() <= 1) return {};
  std::vector<Rational> q(c.size() - 1);
  Rational carry;
  for (std::size_t i = c.size(); i-- > 1;) {
    carry = c[i] + carry * x0;
    q[i - 1] = carry;
  }
  return UniPoly(std::move(q));
}

}  // namespace

int root_multiplicity(const UniPoly& p, const Rational& x0) {
  if (p.is_zero()) throw Error(ErrorCode::InvalidParameters, "multiplicity of a root of the zero polynomial");
  int m = 0;
  UniPoly q = p;
  while (q(x0).is_zero()) {
    q = deflate(q, x0);
    ++m;
  }
  return m;
}

Rational cancel_and_eval_limit(UniPoly num, UniPoly den, const Rational& x0) {
  if (den.is_zero()) throw Error(ErrorCode::InvalidParameters, "limit with zero denominator polynomial");
  int order = 0;
  while (den(x0).is_zero()) {
    if (!num.is_zero() && !num(x0).is_zero()) {
      throw Error(ErrorCode::PoleAtLimit,
                  "numerator vanishes to order " + std::to_string(order) + " at " + x0.to_string() +
                      ", denominator to higher order");
    }
    num = deflate(num, x0);
    den = deflate(den, x0);
    ++order;
  }
  return num(x0) / den(x0);
}

namespace detail {

std::string term_to_string(const Rational& c, std::size_t power, const std::string& var, bool first) {
  std::string out;
  const bool negative = c.sign() < 0;
  if (first) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  const Rational mag = c.abs();
  const bool unit = mag.is_one();
  if (power == 0 || !unit) out += mag.to_string();
  if (power >= 1) {
    if (!unit) out += "*";
    out += var;
    if (power >= 2) out += "^" + std::to_string(power);
  }
  return out;
}

}  // namespace detail

}  // namespace hankeldet
