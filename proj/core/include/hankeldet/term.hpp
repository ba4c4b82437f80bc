#ifndef HANKELDET_TERM_HPP
#define HANKELDET_TERM_HPP

#include <string>
#include <variant>

#include "hankeldet/poly.hpp"
#include "hankeldet/rational.hpp"

namespace hankeldet {

/// A sequence term or determinant value: an exact rational or a polynomial
/// in x. Mixed arithmetic promotes to the polynomial case.
class SequenceTerm {
 public:
  SequenceTerm() : value_(Rational{}) {}
  SequenceTerm(Rational r) : value_(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  SequenceTerm(UniPoly p) : value_(std::move(p)) {}   // NOLINT(google-explicit-constructor)
  template <std::integral I>
  SequenceTerm(I v) : value_(Rational(v)) {}  // NOLINT(google-explicit-constructor)

  bool is_polynomial() const noexcept { return std::holds_alternative<UniPoly>(value_); }
  bool is_zero() const;

  /// Throws InvalidParameters for a non-constant polynomial.
  Rational as_rational() const;
  /// Promotes a rational to a constant polynomial.
  UniPoly as_poly() const;
  /// Polynomial terms evaluated at x; rationals are returned unchanged.
  Rational eval_at(const Rational& x) const;
  /// Same tag as `like`: promotes to a polynomial if `like` is one.
  SequenceTerm promoted_like(const SequenceTerm& like) const;

  std::string to_string() const;

  SequenceTerm& operator+=(const SequenceTerm& o);
  SequenceTerm& operator-=(const SequenceTerm& o);
  SequenceTerm& operator*=(const SequenceTerm& o);
  friend SequenceTerm operator+(SequenceTerm a, const SequenceTerm& b) { return a += b; }
  friend SequenceTerm operator-(SequenceTerm a, const SequenceTerm& b) { return a -= b; }
  friend SequenceTerm operator*(SequenceTerm a, const SequenceTerm& b) { return a *= b; }
  friend SequenceTerm operator-(const SequenceTerm& a);
  SequenceTerm pow(unsigned e) const;

  /// Equal as polynomials (a rational equals the matching constant).
  friend bool operator==(const SequenceTerm& a, const SequenceTerm& b);

 private:
  std::variant<Rational, UniPoly> value_;
};

}  // namespace hankeldet

#endif  // HANKELDET_TERM_HPP
