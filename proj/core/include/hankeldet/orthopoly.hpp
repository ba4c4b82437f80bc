#ifndef HANKELDET_ORTHOPOLY_HPP
#define HANKELDET_ORTHOPOLY_HPP

#include <optional>
#include <vector>

#include "hankeldet/poly.hpp"
#include "hankeldet/sequence.hpp"
#include "hankeldet/term.hpp"

namespace hankeldet {

/// Coefficients of P_{n+1}(y) = (y + s_n) P_n(y) - t_n P_{n-1}(y).
/// zeta_n = H_n / H_{n-1} with H_{-1} = 1, so zeta_0 = c_0.
struct RecurrenceCoeffs {
  std::vector<SequenceTerm> s;     // s_0..s_N
  std::vector<SequenceTerm> t;     // t_1..t_N, stored from t[0] = t_1
  std::vector<SequenceTerm> zeta;  // zeta_0..zeta_N

  long order() const { return static_cast<long>(s.size()) - 1; }
  const SequenceTerm& t_at(long l) const { return t.at(static_cast<std::size_t>(l - 1)); }
};

/// Monic orthogonal polynomials P_0..P_N in y.
struct MonicOPS {
  std::vector<UniPoly> p;
};

/// L(p) = sum_k p_k c_k, the moment functional y^k -> c_k.
Rational moment_functional(const UniPoly& p, const std::vector<Rational>& c);

/// Extracts s_0..s_N, t_1..t_N, zeta_0..zeta_N from c_0..c_{2N+1} by
/// imposing L(y^{n-1} P_n) = L(y^n P_n) = 0 step by step. Needs
/// H_0..H_N != 0; otherwise throws DegenerateMoments with the first
/// vanishing order as index. With `include_last_s` false, s_N is not
/// computed and only c_0..c_{2N} and H_0..H_{N-1} != 0 are needed.
RecurrenceCoeffs recurrence_from_terms(const std::vector<Rational>& c, long N, bool include_last_s = true);

/// recurrence_from_terms on the spec's moments. Polynomial sequences must be
/// given a point `at` at which x is evaluated.
RecurrenceCoeffs recurrence_from_moments(const SequenceSpec& spec, long N, std::optional<Rational> at = std::nullopt);

/// P_0..P_N through the three-term recurrence.
MonicOPS monic_ops(const RecurrenceCoeffs& coeffs);
MonicOPS monic_ops(const SequenceSpec& spec, long N, std::optional<Rational> at = std::nullopt);
/// P_n as the bordered determinant divided by H_{n-1}; independent of the
/// recurrence. Limited to N <= 6 (OutOfRange otherwise).
MonicOPS monic_ops_bordered(const std::vector<Rational>& c, long N);

/// c_0^{n+1} prod_{l=1}^{n} t_l^{n+1-l}. Throws InsufficientCoefficients.
SequenceTerm hankel_from_recurrence(const SequenceTerm& c0, const RecurrenceCoeffs& coeffs, long n);

/// H_n(A_k'(x0)) = A_0'(x0)^{n+1} lim_{x->x0} H_n(A_k(x)) / A_0(x)^{n+1} for a
/// polynomial family A_k(x) (symbolic in x) with A_k(x0) = 0 for k <= 2n.
/// Throws CommonRootViolated (index = first offending k) or PoleAtLimit.
Rational derivative_limit_hankel(const SequenceSpec& family, const Rational& x0, long n);

/// Closed-form coefficients of the moments B_{2k+1}((x+1)/2), as
/// polynomials in x: s_n = C(n+1,2) - (x^2-1)/4,
/// t_n = n^4 (n^2 - x^2) / (4(2n+1)(2n-1)), zeta_0 = x/2.
RecurrenceCoeffs builtin_recurrence_bern_odd(long N);

}  // namespace hankeldet

#endif  // HANKELDET_ORTHOPOLY_HPP
