#include "hankeldet/hankel.hpp"

#include <string>

#include "hankeldet/orthopoly.hpp"

namespace hankeldet {

HankelMatrix::HankelMatrix(std::vector<SequenceTerm> antidiagonals) : c_(std::move(antidiagonals)) {
  if (c_.size() % 2 == 0) {
    throw Error(ErrorCode::InvalidParameters, "a Hankel matrix needs an odd number of antidiagonals");
  }
  for (const auto& t : c_) polynomial_ = polynomial_ || t.is_polynomial();
  if (polynomial_) {
    for (auto& t : c_) t = SequenceTerm(t.as_poly());
  }
}

Matrix<SequenceTerm> HankelMatrix::dense() const {
  Matrix<SequenceTerm> m(size());
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) m(i, j) = entry(i, j);
  }
  return m;
}

std::string_view to_string(DetAlgorithm a) {
  switch (a) {
    case DetAlgorithm::RationalGauss: return "RationalGauss";
    case DetAlgorithm::FractionFreeBareiss: return "FractionFreeBareiss";
    case DetAlgorithm::CheckerboardSplit: return "CheckerboardSplit";
    case DetAlgorithm::RecurrenceProduct: return "RecurrenceProduct";
  }
  return "Unknown";
}

DetAlgorithm parse_det_algorithm(std::string_view name) {
  if (name == "gauss" || name == "RationalGauss") return DetAlgorithm::RationalGauss;
  if (name == "bareiss" || name == "FractionFreeBareiss") return DetAlgorithm::FractionFreeBareiss;
  if (name == "checkerboard" || name == "CheckerboardSplit") return DetAlgorithm::CheckerboardSplit;
  if (name == "recurrence" || name == "RecurrenceProduct") return DetAlgorithm::RecurrenceProduct;
  throw Error(ErrorCode::InvalidParameters, "unknown determinant algorithm '" + std::string(name) + "'");
}

HankelMatrix hankel_matrix(const SequenceSpec& spec, long n) {
  if (n < 0) throw Error(ErrorCode::InvalidParameters, "Hankel order must be nonnegative");
  return HankelMatrix(resolve_range(spec, 2 * n + 1));
}

namespace {

// Moves a nonzero pivot into row k; returns false if the column tail is zero.
template <typename T>
bool pivot(Matrix<T>& m, std::size_t k, int& sign) {
  if (!m(k, k).is_zero()) return true;
  for (std::size_t i = k + 1; i < m.size(); ++i) {
    if (!m(i, k).is_zero()) {
      m.swap_rows(i, k);
      sign = -sign;
      return true;
    }
  }
  return false;
}

template <typename T>
T ring_divide(const T& num, const T& den) {
  if constexpr (std::is_same_v<T, UniPoly>) {
    try {
      return num.divide_exact(den);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotDivisible) throw;
      throw Error(ErrorCode::InternalInexactDivision, "Bareiss step: " + num.to_string() + " / " + den.to_string());
    }
  } else {
    return num / den;
  }
}

template <typename T>
T bareiss(Matrix<T> m, long* steps) {
  const std::size_t n = m.size();
  if (n == 0) return T(Rational(1));
  int sign = 1;
  T prev(Rational(1));
  long count = 0;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (!pivot(m, k, sign)) {
      if (steps != nullptr) *steps = count;
      return T{};
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T v = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        m(i, j) = ring_divide(v, prev);
        ++count;
      }
      m(i, k) = T{};
    }
    prev = m(k, k);
  }
  if (steps != nullptr) *steps = count;
  T det = m(n - 1, n - 1);
  if (sign < 0) det = -det;
  return det;
}

Matrix<Rational> to_rational(const Matrix<SequenceTerm>& m) {
  Matrix<Rational> r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) r(i, j) = m(i, j).as_rational();
  }
  return r;
}

Matrix<UniPoly> to_poly(const Matrix<SequenceTerm>& m) {
  Matrix<UniPoly> r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) r(i, j) = m(i, j).as_poly();
  }
  return r;
}

bool any_polynomial(const Matrix<SequenceTerm>& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (m(i, j).is_polynomial()) return true;
    }
  }
  return false;
}

DetResult det_elimination(const Matrix<SequenceTerm>& m, bool force_bareiss) {
  DetResult r;
  if (any_polynomial(m)) {
    r.algorithm = DetAlgorithm::FractionFreeBareiss;
    r.value = det_bareiss(to_poly(m), &r.elimination_steps);
  } else if (force_bareiss) {
    r.algorithm = DetAlgorithm::FractionFreeBareiss;
    r.value = det_bareiss(to_rational(m), &r.elimination_steps);
  } else {
    r.algorithm = DetAlgorithm::RationalGauss;
    r.value = det_gauss(to_rational(m), &r.elimination_steps);
  }
  return r;
}

Matrix<SequenceTerm> submatrix(const Matrix<SequenceTerm>& m, std::size_t row0, std::size_t col0) {
  const std::size_t rows = (m.size() - row0 + 1) / 2;
  const std::size_t cols = (m.size() - col0 + 1) / 2;
  Matrix<SequenceTerm> out(rows);
  if (rows != cols) return out;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = m(row0 + 2 * i, col0 + 2 * j);
  }
  return out;
}

}  // namespace

Rational det_gauss(Matrix<Rational> m, long* steps) {
  const std::size_t n = m.size();
  int sign = 1;
  long count = 0;
  Rational det(1);
  for (std::size_t k = 0; k < n; ++k) {
    if (!pivot(m, k, sign)) {
      if (steps != nullptr) *steps = count;
      return Rational(0);
    }
    const Rational& p = m(k, k);
    det *= p;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k).is_zero()) continue;
      const Rational factor = m(i, k) / p;
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) -= factor * m(k, j);
        ++count;
      }
      m(i, k) = Rational(0);
    }
  }
  if (steps != nullptr) *steps = count;
  return sign < 0 ? -det : det;
}

Rational det_bareiss(Matrix<Rational> m, long* steps) { return bareiss(std::move(m), steps); }
UniPoly det_bareiss(Matrix<UniPoly> m, long* steps) { return bareiss(std::move(m), steps); }

DetResult det_matrix(const Matrix<SequenceTerm>& m, DetAlgorithm algorithm) {
  switch (algorithm) {
    case DetAlgorithm::RationalGauss:
      if (any_polynomial(m)) {
        throw Error(ErrorCode::InvalidParameters, "rational Gauss elimination needs rational entries");
      }
      return det_elimination(m, false);
    case DetAlgorithm::FractionFreeBareiss:
      return det_elimination(m, true);
    case DetAlgorithm::CheckerboardSplit: {
      const CheckerboardFactorization f = checkerboard_split(m);
      return {f.total, DetAlgorithm::CheckerboardSplit, 0};
    }
    case DetAlgorithm::RecurrenceProduct:
      break;
  }
  throw Error(ErrorCode::InvalidParameters, "the recurrence product needs a Hankel matrix");
}

DetResult det_exact(const HankelMatrix& m, DetAlgorithm algorithm) {
  if (algorithm != DetAlgorithm::RecurrenceProduct) return det_matrix(m.dense(), algorithm);
  if (m.is_polynomial()) {
    throw Error(ErrorCode::InvalidParameters, "recurrence extraction needs rational moments; evaluate x first");
  }
  std::vector<Rational> c;
  for (const auto& t : m.antidiagonals()) c.push_back(t.as_rational());
  const long n = m.order();
  DetResult r;
  r.algorithm = DetAlgorithm::RecurrenceProduct;
  if (n == 0) {
    r.value = c[0];
    return r;
  }
  const RecurrenceCoeffs coeffs = recurrence_from_terms(c, n, false);
  r.value = hankel_from_recurrence(SequenceTerm(c[0]), coeffs, n);
  r.elimination_steps = n;
  return r;
}

DetResult det_auto(const HankelMatrix& m) { return det_elimination(m.dense(), false); }

DetResult hankel_det(const SequenceSpec& spec, long n) { return det_auto(hankel_matrix(spec, n)); }

DetResult hankel_det(const std::vector<SequenceTerm>& c, long n) {
  if (n < 0) throw Error(ErrorCode::InvalidParameters, "Hankel order must be nonnegative");
  const auto need = static_cast<std::size_t>(2 * n + 1);
  if (c.size() < need) {
    throw Error(ErrorCode::InsufficientCoefficients,
                "H_" + std::to_string(n) + " needs " + std::to_string(need) + " terms");
  }
  return det_auto(HankelMatrix(std::vector<SequenceTerm>(c.begin(), c.begin() + static_cast<long>(need))));
}

CheckerboardFactorization checkerboard_split(const Matrix<SequenceTerm>& m) {
  bool odd_zero = true;
  bool even_zero = true;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (m(i, j).is_zero()) continue;
      if ((i + j) % 2 == 1) {
        odd_zero = false;
      } else {
        even_zero = false;
      }
    }
  }
  if (!odd_zero && !even_zero) {
    throw Error(ErrorCode::NotCheckerboard, "entries are nonzero on both parities of i + j");
  }
  CheckerboardFactorization f;
  const std::size_t n = m.size();
  const SequenceTerm one(Rational(1));
  const auto det_of = [&one](const Matrix<SequenceTerm>& sub) {
    return sub.size() == 0 ? one : det_elimination(sub, false).value;
  };
  if (odd_zero) {
    f.even_support = true;
    f.first = submatrix(m, 0, 0);
    f.second = submatrix(m, 1, 1);
    f.first_det = det_of(f.first);
    f.second_det = det_of(f.second);
    f.sign = 1;
    f.total = f.first_det * f.second_det;
  } else {
    f.even_support = false;
    if (n % 2 == 1) {
      f.sign = 0;
      f.total = SequenceTerm(Rational(0));
    } else {
      f.first = submatrix(m, 1, 0);
      f.second = submatrix(m, 0, 1);
      f.first_det = det_of(f.first);
      f.second_det = det_of(f.second);
      f.sign = (n / 2) % 2 == 0 ? 1 : -1;
      f.total = f.first_det * f.second_det;
      if (f.sign < 0) f.total = -f.total;
    }
  }
  if (any_polynomial(m) && !f.total.is_polynomial()) f.total = SequenceTerm(f.total.as_poly());
  return f;
}

CheckerboardFactorization checkerboard_split(const HankelMatrix& m) { return checkerboard_split(m.dense()); }

SequenceTerm shift_factor_dn(const RecurrenceCoeffs& coeffs, long n) {
  if (n < 0) return SequenceTerm(Rational(1));
  if (static_cast<long>(coeffs.s.size()) < n + 1 || static_cast<long>(coeffs.t.size()) < n) {
    throw Error(ErrorCode::InsufficientCoefficients, "d_" + std::to_string(n) + " needs s_0..s_n and t_1..t_n", n);
  }
  SequenceTerm before(Rational(1));  // d_{-1}
  SequenceTerm current = -coeffs.s[0];
  for (long m = 0; m < n; ++m) {
    SequenceTerm next = -(coeffs.s[static_cast<std::size_t>(m + 1)] * current) - coeffs.t_at(m + 1) * before;
    before = std::move(current);
    current = std::move(next);
  }
  return current;
}

SequenceTerm shift_factor_dn_explicit(const RecurrenceCoeffs& coeffs, long n) {
  if (n < 0) return SequenceTerm(Rational(1));
  if (static_cast<long>(coeffs.s.size()) < n + 1 || static_cast<long>(coeffs.t.size()) < n) {
    throw Error(ErrorCode::InsufficientCoefficients, "d_" + std::to_string(n) + " needs s_0..s_n and t_1..t_n", n);
  }
  const auto size = static_cast<std::size_t>(n + 1);
  Matrix<SequenceTerm> m(size);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) m(i, j) = SequenceTerm(Rational(0));
    m(i, i) = -coeffs.s[i];
    if (i + 1 < size) m(i, i + 1) = SequenceTerm(Rational(1));
    if (i >= 1) m(i, i - 1) = coeffs.t_at(static_cast<long>(i));
  }
  return det_elimination(m, false).value;
}

ShiftRelationReport shift_relation_check(const SequenceSpec& spec, const RecurrenceCoeffs& coeffs, long n) {
  const std::vector<SequenceTerm> c = resolve_range(spec, 2 * n + 2);
  ShiftRelationReport r;
  r.det = hankel_det(c, n).value;
  r.shifted_det = hankel_det(std::vector<SequenceTerm>(c.begin() + 1, c.end()), n).value;
  r.d_n = shift_factor_dn(coeffs, n);
  r.holds = r.shifted_det == r.d_n * r.det;
  return r;
}

ShiftRelationReport shift_relation_check(const SequenceSpec& spec, long n, std::optional<Rational> at) {
  if (spec.is_polynomial() && !at) {
    if (spec.to_string() != "B[2k+1]((x+1)/2)") {
      throw Error(ErrorCode::InvalidParameters,
                  "symbolic coefficients are only built in for B[2k+1]((x+1)/2); pass a point");
    }
    return shift_relation_check(spec, builtin_recurrence_bern_odd(n), n);
  }
  const RecurrenceCoeffs coeffs = recurrence_from_moments(spec, n, at);
  std::vector<SequenceTerm> c = resolve_range(spec, 2 * n + 2);
  if (at) {
    for (auto& t : c) t = SequenceTerm(t.eval_at(*at));
  }
  ShiftRelationReport r;
  r.det = hankel_det(c, n).value;
  r.shifted_det = hankel_det(std::vector<SequenceTerm>(c.begin() + 1, c.end()), n).value;
  r.d_n = shift_factor_dn(coeffs, n);
  r.holds = r.shifted_det == r.d_n * r.det;
  return r;
}

}  // namespace hankeldet
