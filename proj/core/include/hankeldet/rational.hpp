#ifndef HANKELDET_RATIONAL_HPP
#define HANKELDET_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

namespace hankeldet {

/// Arbitrary-precision rational number, always stored in lowest terms with a
/// positive denominator. Zero is 0/1.
class Rational {
 public:
  Rational() = default;
  template <std::integral I>
  Rational(I value) : value_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)
  Rational(long numerator, long denominator);
  explicit Rational(const mpz_class& integer) : value_(integer) {}
  explicit Rational(mpq_class value);
  Rational(const mpz_class& numerator, const mpz_class& denominator);

  /// Parses "p/q", "p", with optional leading sign. Throws Error(ParseError).
  static Rational parse(std::string_view text);

  /// "p/q", or "p" when the denominator is 1.
  std::string to_string() const;

  const mpq_class& value() const noexcept { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_zero() const noexcept { return sgn(value_) == 0; }
  bool is_one() const noexcept { return value_ == 1; }
  bool is_integer() const noexcept { return value_.get_den() == 1; }
  int sign() const noexcept { return sgn(value_); }

  /// Exact power; negative exponents invert (zero base with e < 0 throws).
  Rational pow(long exponent) const;
  Rational inverse() const;
  Rational abs() const { return Rational(::abs(value_)); }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class value_;
};

/// n! as an exact rational (n >= 0).
Rational factorial(long n);
/// Binomial coefficient C(n, k); zero outside 0 <= k <= n.
Rational binomial(long n, long k);

/// Exact quotient in a field; present so generic ring code can call
/// `exact_div` uniformly for Rational and polynomial entries.
inline Rational exact_div(const Rational& a, const Rational& b) { return a / b; }

}  // namespace hankeldet

template <>
struct std::hash<hankeldet::Rational> {
  std::size_t operator()(const hankeldet::Rational& r) const {
    return std::hash<std::string>{}(r.to_string());
  }
};

#endif  // HANKELDET_RATIONAL_HPP
