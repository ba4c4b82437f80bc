#ifndef HANKELDET_SEQUENCE_HPP
#define HANKELDET_SEQUENCE_HPP

#include <string>
#include <string_view>
#include <vector>

#include "hankeldet/rational.hpp"
#include "hankeldet/term.hpp"

namespace hankeldet {

enum class Family {
  BernoulliNumber,
  BernoulliPoly,
  EulerNumber,
  EulerPoly,
  BernDiffSum,
  EulerDiffSum,
  GenBernoulli,
  PowerSum,
  AltPowerSum,
  Zigzag,
  TangentNumber,
  Umbral,
  Combination,
};

std::string_view to_string(Family f);

/// a*k + b
struct Linear {
  long a = 1;
  long b = 0;
  long at(long k) const { return a * k + b; }
  std::string to_string() const;
  friend bool operator==(const Linear&, const Linear&) = default;
};

/// Substitution applied to the inner variable x of polynomial families.
struct Argument {
  enum class Kind { None, Symbolic, Point };
  Kind kind = Kind::None;
  Rational alpha;  // Symbolic: x -> alpha*x + beta
  Rational beta;   // Point: x -> beta
  static Argument none() { return {}; }
  static Argument symbolic(Rational alpha, Rational beta) { return {Kind::Symbolic, std::move(alpha), std::move(beta)}; }
  static Argument point(Rational v) { return {Kind::Point, Rational(0), std::move(v)}; }
  friend bool operator==(const Argument&, const Argument&) = default;
};

/// k-dependent multiplier applied to a base term.
struct Factor {
  enum class Kind {
    Linear,        // (a*k + b)
    Pow2Minus1,    // (2^(a*k + b) - 1)
    Power,         // base^(a*k + b)
    InvFactorial,  // 1/(a*k + b)!
    InvLinear,     // 1/(a*k + b)
  };
  Kind kind = Kind::Linear;
  Linear lin;
  Rational base;
  Rational at(long k) const;
  friend bool operator==(const Factor&, const Factor&) = default;
};

/// A parameterized moment sequence c_0, c_1, ...
///
/// Term k is `prepend[k]` for k < prepend.size(); otherwise, with
/// j = k - prepend.size(), it is coefficient * prod(factors at j) * base at
/// index `index.at(j)`. A Combination sums its `terms` instead of a base.
struct SequenceSpec {
  Family family = Family::BernoulliNumber;
  // BernDiffSum / EulerDiffSum
  long q = 1;
  long r = 0;
  long s = 1;
  int sign = -1;  // +1 sum, -1 difference
  // GenBernoulli
  std::string chi;
  // PowerSum / AltPowerSum use s as the upper limit.
  // Umbral
  long fa = 1, fb = 1, fc = 0, fd = 0;

  Argument arg;
  Linear index;
  Rational coefficient{1};
  std::vector<Factor> factors;
  std::vector<Rational> prepend;
  std::vector<SequenceSpec> terms;

  /// Throws InvalidParameters when a field combination is not resolvable.
  void validate() const;
  /// True when terms are polynomials in x.
  bool is_polynomial() const;
  /// Canonical ASCII name; parse(to_string()) reproduces *this.
  std::string to_string() const;

  friend bool operator==(const SequenceSpec&, const SequenceSpec&) = default;
};

/// Parses the ASCII grammar (see README). Accepts `X_{i}` and `X_k` as
/// spellings of `X[i]`, `X[k]`. Throws ParseError / InvalidParameters.
SequenceSpec parse_sequence(std::string_view text);

/// Term k of the fully transformed sequence. Polynomial sequences always
/// return polynomials (prepended constants are promoted).
SequenceTerm resolve(const SequenceSpec& spec, long k);
/// Terms 0..count-1.
std::vector<SequenceTerm> resolve_range(const SequenceSpec& spec, long count);

/// Canonical names of the built-in sequences with one-line descriptions.
struct CatalogEntry {
  std::string name;
  std::string description;
};
const std::vector<CatalogEntry>& sequence_catalog();

}  // namespace hankeldet

#endif  // HANKELDET_SEQUENCE_HPP
