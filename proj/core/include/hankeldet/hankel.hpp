#ifndef HANKELDET_HANKEL_HPP
#define HANKELDET_HANKEL_HPP

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "hankeldet/error.hpp"
#include "hankeldet/poly.hpp"
#include "hankeldet/sequence.hpp"
#include "hankeldet/term.hpp"

namespace hankeldet {

struct RecurrenceCoeffs;

/// Dense square matrix, row-major.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), data_(n * n) {}
  Matrix(std::size_t n, std::vector<T> row_major) : n_(n), data_(std::move(row_major)) {
    if (data_.size() != n * n) throw Error(ErrorCode::InvalidParameters, "matrix data size mismatch");
  }

  std::size_t size() const noexcept { return n_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < n_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<T> data_;
};

/// (n+1) x (n+1) matrix with entry (i, j) = c_{i+j}; stores c_0..c_{2n}.
class HankelMatrix {
 public:
  /// `antidiagonals` must hold c_0..c_{2n} (odd length). Rational terms are
  /// promoted to polynomials if any term is a polynomial.
  explicit HankelMatrix(std::vector<SequenceTerm> antidiagonals);

  long order() const noexcept { return static_cast<long>(c_.size() / 2); }
  std::size_t size() const noexcept { return c_.size() / 2 + 1; }
  const SequenceTerm& entry(std::size_t i, std::size_t j) const { return c_.at(i + j); }
  const std::vector<SequenceTerm>& antidiagonals() const noexcept { return c_; }
  bool is_polynomial() const noexcept { return polynomial_; }
  Matrix<SequenceTerm> dense() const;

 private:
  std::vector<SequenceTerm> c_;
  bool polynomial_ = false;
};

enum class DetAlgorithm { RationalGauss, FractionFreeBareiss, CheckerboardSplit, RecurrenceProduct };

std::string_view to_string(DetAlgorithm a);
/// Accepts "gauss", "bareiss", "checkerboard", "recurrence" or the enum names.
DetAlgorithm parse_det_algorithm(std::string_view name);

struct DetResult {
  SequenceTerm value;
  DetAlgorithm algorithm = DetAlgorithm::RationalGauss;
  long elimination_steps = 0;
};

/// Entry (i, j) = resolve(spec, i + j), 0 <= i, j <= n.
HankelMatrix hankel_matrix(const SequenceSpec& spec, long n);

/// Ordinary elimination over Q with row pivoting.
Rational det_gauss(Matrix<Rational> m, long* steps = nullptr);
/// One-step fraction-free elimination; each division is checked to be
/// exact in the ring and a failure raises InternalInexactDivision.
Rational det_bareiss(Matrix<Rational> m, long* steps = nullptr);
UniPoly det_bareiss(Matrix<UniPoly> m, long* steps = nullptr);

/// Determinant of an arbitrary square matrix of terms. RecurrenceProduct is
/// not available here (it needs Hankel structure).
DetResult det_matrix(const Matrix<SequenceTerm>& m, DetAlgorithm algorithm);
DetResult det_exact(const HankelMatrix& m, DetAlgorithm algorithm);
/// Gauss for rational entries, Bareiss for polynomial entries.
DetResult det_auto(const HankelMatrix& m);

/// H_n(spec) with the algorithm chosen by det_auto.
DetResult hankel_det(const SequenceSpec& spec, long n);
/// H_n of the explicit moments c_0..c_{2n} (extra terms are ignored).
DetResult hankel_det(const std::vector<SequenceTerm>& c, long n);

/// Factorization of a determinant whose entries vanish on one parity class
/// of i + j.
struct CheckerboardFactorization {
  bool even_support = true;  // entries vanish where i + j is odd
  Matrix<SequenceTerm> first;   // M_{2i,2j} or M_{2i+1,2j}
  Matrix<SequenceTerm> second;  // M_{2i+1,2j+1} or M_{2i,2j+1}
  SequenceTerm first_det;
  SequenceTerm second_det;
  int sign = 1;
  SequenceTerm total;
};

/// Throws NotCheckerboard when neither parity class vanishes.
CheckerboardFactorization checkerboard_split(const Matrix<SequenceTerm>& m);
CheckerboardFactorization checkerboard_split(const HankelMatrix& m);

/// d_n via d_{-1} = 1, d_0 = -s_0, d_{n+1} = -s_{n+1} d_n - t_{n+1} d_{n-1}.
/// Throws InsufficientCoefficients if s_0..s_n or t_1..t_n are missing.
SequenceTerm shift_factor_dn(const RecurrenceCoeffs& coeffs, long n);
/// d_n as the determinant of the tridiagonal matrix with diagonal -s_i,
/// superdiagonal 1 and subdiagonal t_i.
SequenceTerm shift_factor_dn_explicit(const RecurrenceCoeffs& coeffs, long n);

struct ShiftRelationReport {
  SequenceTerm shifted_det;  // H_n(c_{k+1})
  SequenceTerm d_n;
  SequenceTerm det;          // H_n(c_k)
  bool holds = false;
};

/// Checks H_n(c_{k+1}) = d_n H_n(c_k) with the given coefficients.
ShiftRelationReport shift_relation_check(const SequenceSpec& spec, const RecurrenceCoeffs& coeffs, long n);
/// Same, with coefficients extracted from the moments. Polynomial sequences
/// are evaluated at `at`; without a point, only B[2k+1]((x+1)/2) is
/// supported (through its closed-form coefficients).
ShiftRelationReport shift_relation_check(const SequenceSpec& spec, long n, std::optional<Rational> at = std::nullopt);

}  // namespace hankeldet

#endif  // HANKELDET_HANKEL_HPP
