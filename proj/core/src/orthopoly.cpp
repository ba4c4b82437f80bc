#include "hankeldet/orthopoly.hpp"

#include <string>

#include "hankeldet/error.hpp"
#include "hankeldet/hankel.hpp"

namespace hankeldet {

namespace {

// L(y^shift * p)
Rational functional_shifted(const UniPoly& p, long shift, const std::vector<Rational>& c) {
  Rational sum;
  const auto& coeffs = p.coefficients();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const std::size_t k = i + static_cast<std::size_t>(shift);
    if (k >= c.size()) {
      throw Error(ErrorCode::InsufficientCoefficients, "moment c_" + std::to_string(k) + " is not available",
                  static_cast<long>(k));
    }
    sum += coeffs[i] * c[k];
  }
  return sum;
}

std::vector<Rational> rational_moments(const SequenceSpec& spec, long count, const std::optional<Rational>& at) {
  if (spec.is_polynomial() && !at) {
    throw Error(ErrorCode::InvalidParameters,
                "recurrence extraction for a polynomial sequence needs a point at which to evaluate x");
  }
  std::vector<Rational> c;
  for (const auto& t : resolve_range(spec, count)) c.push_back(at ? t.eval_at(*at) : t.as_rational());
  return c;
}

[[noreturn]] void degenerate(long n) {
  throw Error(ErrorCode::DegenerateMoments, "H_" + std::to_string(n) + " vanishes", n);
}

}  // namespace

Rational moment_functional(const UniPoly& p, const std::vector<Rational>& c) { return functional_shifted(p, 0, c); }

RecurrenceCoeffs recurrence_from_terms(const std::vector<Rational>& c, long N, bool include_last_s) {
  if (N < 0) throw Error(ErrorCode::InvalidParameters, "recurrence order must be nonnegative");
  if (c.empty()) throw Error(ErrorCode::InsufficientCoefficients, "no moments given", 0);
  RecurrenceCoeffs out;
  out.zeta.emplace_back(c[0]);
  if (N == 0 && !include_last_s) return out;
  if (c[0].is_zero()) degenerate(0);
  const UniPoly y = UniPoly::x();
  const Rational s0 = -functional_shifted(UniPoly(Rational(1)), 1, c) / c[0];
  out.s.emplace_back(s0);
  UniPoly prev(Rational(1));
  UniPoly cur = y + UniPoly(s0);
  Rational zeta_prev = c[0];
  for (long n = 1; n <= N; ++n) {
    const Rational zeta = functional_shifted(cur, n, c);
    const Rational t = zeta / zeta_prev;
    out.zeta.emplace_back(zeta);
    out.t.emplace_back(t);
    if (n == N && !include_last_s) break;
    if (zeta.is_zero()) degenerate(n);
    const Rational s = (t * functional_shifted(prev, n, c) - functional_shifted(cur, n + 1, c)) / zeta;
    out.s.emplace_back(s);
    UniPoly next = (y + UniPoly(s)) * cur - prev * t;
    prev = std::move(cur);
    cur = std::move(next);
    zeta_prev = zeta;
  }
  return out;
}

RecurrenceCoeffs recurrence_from_moments(const SequenceSpec& spec, long N, std::optional<Rational> at) {
  if (N < 0) throw Error(ErrorCode::InvalidParameters, "recurrence order must be nonnegative");
  return recurrence_from_terms(rational_moments(spec, 2 * N + 2, at), N, true);
}

MonicOPS monic_ops(const RecurrenceCoeffs& coeffs) {
  MonicOPS ops;
  ops.p.emplace_back(Rational(1));
  if (coeffs.s.empty()) return ops;
  const UniPoly y = UniPoly::x();
  ops.p.push_back(y + UniPoly(coeffs.s[0].as_rational()));
  for (long n = 1; n < static_cast<long>(coeffs.s.size()); ++n) {
    if (static_cast<long>(coeffs.t.size()) < n) break;
    const auto& pn = ops.p[static_cast<std::size_t>(n)];
    const auto& pm = ops.p[static_cast<std::size_t>(n - 1)];
    ops.p.push_back((y + UniPoly(coeffs.s[static_cast<std::size_t>(n)].as_rational())) * pn -
                    pm * coeffs.t_at(n).as_rational());
  }
  return ops;
}

MonicOPS monic_ops(const SequenceSpec& spec, long N, std::optional<Rational> at) {
  if (N == 0) return MonicOPS{{UniPoly(Rational(1))}};
  MonicOPS ops = monic_ops(recurrence_from_moments(spec, N - 1, at));
  ops.p.resize(static_cast<std::size_t>(N + 1));
  return ops;
}

MonicOPS monic_ops_bordered(const std::vector<Rational>& c, long N) {
  if (N > 6) throw Error(ErrorCode::OutOfRange, "the bordered-determinant construction is limited to N <= 6", N);
  if (N < 0) throw Error(ErrorCode::InvalidParameters, "order must be nonnegative");
  if (static_cast<long>(c.size()) < 2 * N) {
    throw Error(ErrorCode::InsufficientCoefficients, "need c_0..c_{2N-1}", N);
  }
  MonicOPS ops;
  ops.p.emplace_back(Rational(1));
  Rational h_prev(1);  // H_{n-1}
  for (long n = 1; n <= N; ++n) {
    if (n >= 2) {
      Matrix<Rational> h(static_cast<std::size_t>(n));
      for (long i = 0; i < n; ++i) {
        for (long j = 0; j < n; ++j) h(i, j) = c[static_cast<std::size_t>(i + j)];
      }
      h_prev = det_gauss(h);
    } else {
      h_prev = c[0];
    }
    if (h_prev.is_zero()) degenerate(n - 1);
    // Expand along the last row (1, y, ..., y^n) of the bordered matrix.
    std::vector<Rational> coeffs(static_cast<std::size_t>(n + 1));
    for (long col = 0; col <= n; ++col) {
      Matrix<Rational> minor(static_cast<std::size_t>(n));
      for (long i = 0; i < n; ++i) {
        long jj = 0;
        for (long j = 0; j <= n; ++j) {
          if (j == col) continue;
          minor(i, jj++) = c[static_cast<std::size_t>(i + j)];
        }
      }
      Rational cof = det_gauss(minor);
      if ((n + col) % 2 == 1) cof = -cof;
      coeffs[static_cast<std::size_t>(col)] = cof / h_prev;
    }
    ops.p.emplace_back(std::move(coeffs));
  }
  return ops;
}

SequenceTerm hankel_from_recurrence(const SequenceTerm& c0, const RecurrenceCoeffs& coeffs, long n) {
  if (n < 0) throw Error(ErrorCode::InvalidParameters, "order must be nonnegative");
  if (static_cast<long>(coeffs.t.size()) < n) {
    throw Error(ErrorCode::InsufficientCoefficients, "need t_1..t_" + std::to_string(n), n);
  }
  SequenceTerm result = c0.pow(static_cast<unsigned>(n + 1));
  for (long l = 1; l <= n; ++l) result *= coeffs.t_at(l).pow(static_cast<unsigned>(n + 1 - l));
  return result;
}

Rational derivative_limit_hankel(const SequenceSpec& family, const Rational& x0, long n) {
  if (n < 0) throw Error(ErrorCode::InvalidParameters, "order must be nonnegative");
  if (!family.is_polynomial()) {
    throw Error(ErrorCode::InvalidParameters, "the derivative method needs a family symbolic in x");
  }
  const std::vector<SequenceTerm> a = resolve_range(family, 2 * n + 1);
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!a[k].eval_at(x0).is_zero()) {
      throw Error(ErrorCode::CommonRootViolated,
                  "A_" + std::to_string(k) + "(" + x0.to_string() + ") != 0", static_cast<long>(k));
    }
  }
  const UniPoly a0 = a[0].as_poly();
  if (a0.is_zero()) throw Error(ErrorCode::InvalidParameters, "A_0 is identically zero");
  Matrix<UniPoly> m(static_cast<std::size_t>(n + 1));
  for (long i = 0; i <= n; ++i) {
    for (long j = 0; j <= n; ++j) m(i, j) = a[static_cast<std::size_t>(i + j)].as_poly();
  }
  const UniPoly h = det_bareiss(std::move(m));
  const Rational limit = cancel_and_eval_limit(h, a0.pow(static_cast<unsigned>(n + 1)), x0);
  return a0.derivative()(x0).pow(n + 1) * limit;
}

RecurrenceCoeffs builtin_recurrence_bern_odd(long N) {
  if (N < 0) throw Error(ErrorCode::InvalidParameters, "order must be nonnegative");
  RecurrenceCoeffs out;
  out.zeta.emplace_back(UniPoly::linear(Rational(1, 2), Rational(0)));
  for (long n = 0; n <= N; ++n) {
    // C(n+1,2) - (x^2 - 1)/4
    out.s.emplace_back(UniPoly(std::vector<Rational>{binomial(n + 1, 2) + Rational(1, 4), Rational(0), Rational(-1, 4)}));
    if (n == 0) continue;
    const Rational den(4 * (2 * n + 1) * (2 * n - 1));
    const Rational n4 = Rational(n).pow(4);
    const UniPoly t(std::vector<Rational>{n4 * Rational(n * n) / den, Rational(0), -n4 / den});
    out.t.emplace_back(t);
    out.zeta.push_back(out.zeta.back() * SequenceTerm(t));
  }
  return out;
}

}  // namespace hankeldet
