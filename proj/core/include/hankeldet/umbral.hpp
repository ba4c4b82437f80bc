#ifndef HANKELDET_UMBRAL_HPP
#define HANKELDET_UMBRAL_HPP

#include <map>
#include <string>

#include "hankeldet/rational.hpp"

namespace hankeldet {

/// Laurent polynomial in the umbral symbol U; U^j later stands for B_j.
class UmbralExpr {
 public:
  UmbralExpr() = default;
  explicit UmbralExpr(Rational constant);
  static UmbralExpr power(long exponent, Rational coefficient = Rational(1));

  /// (sign*U + shift)_j, the rising factorial. j = -1 is accepted only when
  /// shift = 1, giving 1/(sign*U).
  static UmbralExpr shifted_factorial(int sign, const Rational& shift, long j);

  const std::map<long, Rational>& terms() const noexcept { return terms_; }
  long min_exponent() const;

  UmbralExpr& operator+=(const UmbralExpr& o);
  friend UmbralExpr operator+(UmbralExpr a, const UmbralExpr& b) { return a += b; }
  friend UmbralExpr operator*(const UmbralExpr& a, const UmbralExpr& b);
  friend bool operator==(const UmbralExpr& a, const UmbralExpr& b) = default;

  std::string to_string() const;

 private:
  void add_term(long exponent, const Rational& c);
  std::map<long, Rational> terms_;
};

/// Replaces U^j by B_j and sums. Throws NegativeUmbralExponent if a term
/// with negative exponent survives.
Rational umbral_eval(const UmbralExpr& expr);

/// The moment U^{k+2}(U+1)_{a-1}(U+1)_{b-1}(-U+1)_{c-1}(-U+1)_{d-1},
/// evaluated umbrally. Requires a, b >= 1 and c, d >= 0.
Rational fk_moment(long a, long b, long c, long d, long k);

}  // namespace hankeldet

#endif  // HANKELDET_UMBRAL_HPP
