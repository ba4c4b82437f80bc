#ifndef HANKELDET_POLY_HPP
#define HANKELDET_POLY_HPP

#include <cstddef>
#include <limits>
#include <type_traits>
#include <string>
#include <utility>
#include <vector>

#include "hankeldet/error.hpp"
#include "hankeldet/rational.hpp"

namespace hankeldet {

/// Degree reported for the zero polynomial.
inline constexpr int kMinusInfinity = std::numeric_limits<int>::min();

/// Dense univariate polynomial with coefficients in a commutative ring R,
/// stored in ascending powers with no trailing zero coefficients.
///
/// R must provide +, -, *, ==, a default constructor yielding zero, and
/// `is_zero()`. Division-based operations additionally need
/// `exact_div(R, R)`.
template <typename R>
class Poly {
 public:
  using Coefficient = R;

  Poly() = default;
  explicit Poly(R constant) {
    if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
  }
  explicit Poly(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Poly monomial(R coefficient, std::size_t degree) {
    if (coefficient.is_zero()) return {};
    std::vector<R> c(degree + 1);
    c[degree] = std::move(coefficient);
    return Poly(std::move(c));
  }
  /// The indeterminate itself.
  static Poly x() { return monomial(R(1), 1); }
  /// alpha * x + beta
  static Poly linear(R alpha, R beta) { return Poly(std::vector<R>{std::move(beta), std::move(alpha)}); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  int degree() const noexcept {
    return coeffs_.empty() ? kMinusInfinity : static_cast<int>(coeffs_.size()) - 1;
  }
  /// Coefficient of x^i (zero beyond the degree).
  R coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : R{}; }
  const R& leading() const { return coeffs_.back(); }
  const std::vector<R>& coefficients() const noexcept { return coeffs_; }
  /// Constant term; zero for the zero polynomial.
  R constant_term() const { return coeff(0); }

  Poly& operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly& operator*=(const R& s) {
    if (s.is_zero()) {
      coeffs_.clear();
      return *this;
    }
    for (auto& c : coeffs_) c *= s;
    trim();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a) {
    Poly r = a;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<R> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(out));
  }
  friend Poly operator*(Poly a, const R& s) { return a *= s; }
  friend Poly operator*(const R& s, Poly a) { return a *= s; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  Poly pow(unsigned exponent) const {
    Poly result(R(1));
    Poly base = *this;
    while (exponent != 0) {
      if (exponent & 1U) result *= base;
      exponent >>= 1U;
      if (exponent != 0) base *= base;
    }
    return result;
  }

  /// Horner evaluation; V is any ring into which R multiplies (R itself, or
  /// a polynomial when composing).
  template <typename V>
  V eval(const V& v) const {
    V acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * v + V(*it);
    return acc;
  }
  R operator()(const R& v) const { return eval<R>(v); }

  /// q(x) = p(alpha * x + beta).
  Poly affine_substitute(const R& alpha, const R& beta) const { return eval<Poly>(linear(alpha, beta)); }

  Poly derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<R> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * R(static_cast<long>(i));
    return Poly(std::move(d));
  }

  /// Euclidean division by a divisor whose leading coefficient divides every
  /// intermediate leading term (always true over a field). Returns
  /// {quotient, remainder}.
  std::pair<Poly, Poly> divmod(const Poly& den) const {
    if (den.is_zero()) throw Error(ErrorCode::InvalidParameters, "polynomial division by zero");
    if (degree() < den.degree()) return {Poly{}, *this};
    std::vector<R> rem = coeffs_;
    const std::size_t dn = den.coeffs_.size();
    std::vector<R> quot(rem.size() - dn + 1);
    for (std::size_t i = quot.size(); i-- > 0;) {
      R& top = rem[i + dn - 1];
      if (top.is_zero()) continue;
      R q = exact_div(top, den.leading());
      for (std::size_t j = 0; j < dn; ++j) rem[i + j] -= q * den.coeffs_[j];
      quot[i] = std::move(q);
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
  }

  /// Quotient of an exact division; throws Error(NotDivisible) otherwise.
  Poly divide_exact(const Poly& den) const {
    auto [q, r] = divmod(den);
    if (!r.is_zero()) throw Error(ErrorCode::NotDivisible, "remainder is nonzero");
    return q;
  }

  /// Human-readable form in descending powers, e.g. "x^2 - x + 1/6".
  std::string to_string(const std::string& var = "x") const;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<R> coeffs_;
};

using UniPoly = Poly<Rational>;

template <typename R>
Poly<R> exact_div(const Poly<R>& a, const Poly<R>& b) {
  return a.divide_exact(b);
}

/// p(v) computed exactly.
inline Rational poly_eval(const UniPoly& p, const Rational& v) { return p(v); }
inline UniPoly poly_affine_substitute(const UniPoly& p, const Rational& alpha, const Rational& beta) {
  return p.affine_substitute(alpha, beta);
}
inline UniPoly poly_derivative(const UniPoly& p) { return p.derivative(); }
inline UniPoly poly_divide_exact(const UniPoly& num, const UniPoly& den) { return num.divide_exact(den); }

/// lim_{x -> x0} num(x)/den(x) for a removable singularity: factors of
/// (x - x0) are divided out of both sides until den(x0) != 0. Throws
/// PoleAtLimit if num vanishes to lower order than den.
Rational cancel_and_eval_limit(UniPoly num, UniPoly den, const Rational& x0);

/// Multiplicity of x0 as a root of p (p must be nonzero).
int root_multiplicity(const UniPoly& p, const Rational& x0);

namespace detail {
std::string term_to_string(const Rational& c, std::size_t power, const std::string& var, bool first);
}

template <typename R>
std::string Poly<R>::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i].is_zero()) continue;
    if constexpr (std::is_same_v<R, Rational>) {
      out += detail::term_to_string(coeffs_[i], i, var, first);
    } else {
      if (!first) out += " + ";
      out += "(" + coeffs_[i].to_string() + ")";
      if (i >= 1) out += "*" + var;
      if (i >= 2) out += "^" + std::to_string(i);
    }
    first = false;
  }
  return out;
}

}  // namespace hankeldet

#endif  // HANKELDET_POLY_HPP
