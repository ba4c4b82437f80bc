#ifndef HANKELDET_NUMBERS_HPP
#define HANKELDET_NUMBERS_HPP

#include <cstddef>
#include <filesystem>

#include "hankeldet/poly.hpp"
#include "hankeldet/rational.hpp"

namespace hankeldet {

/// B_n with B_1 = -1/2, from sum_{j<=n} C(n+1,j) B_j = 0. Memoized.
Rational bernoulli_number(long n);
/// E_n (secant numbers with signs; odd indices vanish). Memoized.
Rational euler_number(long n);

/// B_n(x) = sum_j C(n,j) B_j x^{n-j}.
UniPoly bernoulli_poly(long n);
/// E_n(x) = sum_j C(n,j) E_j 2^{-j} (x - 1/2)^{n-j}.
UniPoly euler_poly(long n);

/// Up/down numbers: coefficients of tan t + sec t times n!.
Rational zigzag_number(long n);
/// T_k = (-1)^{k-1} 2^{2k} (2^{2k} - 1) B_{2k} / (2k), k >= 1.
Rational tangent_number(long k);

/// S_k(s) = k (1^{k-1} + ... + s^{k-1}); S_0(s) = 0.
Rational power_sum(long s, long k);
/// T_k(s) = 1 - 2^k + 3^k - ... + (-1)^{s-1} s^k.
Rational alt_power_sum(long s, long k);

/// Reads bernoulli.txt / euler.txt ("index value" per line) from `dir` into
/// the memo tables. Entries are checked against the defining recurrences and
/// the file is ignored from the first bad line on. Returns entries accepted.
std::size_t load_number_tables(const std::filesystem::path& dir);
/// Writes the currently memoized tables to `dir` (created if missing).
void save_number_tables(const std::filesystem::path& dir);

}  // namespace hankeldet

#endif  // HANKELDET_NUMBERS_HPP
