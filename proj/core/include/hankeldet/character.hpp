#ifndef HANKELDET_CHARACTER_HPP
#define HANKELDET_CHARACTER_HPP

#include <string>
#include <string_view>
#include <vector>

#include "hankeldet/poly.hpp"

namespace hankeldet {

/// Real Dirichlet character given by its value table.
/// `values[i]` is chi(i + 1) for residues 1..modulus.
class DirichletCharacter {
 public:
  /// Validates the table: length, values in {-1,0,1}, zero exactly off the
  /// units, complete multiplicativity on units. Throws InvalidParameters.
  DirichletCharacter(std::string label, long modulus, std::vector<int> values);

  const std::string& label() const noexcept { return label_; }
  long modulus() const noexcept { return modulus_; }
  const std::vector<int>& values() const noexcept { return values_; }

  /// chi(a) for any integer a (reduced mod the modulus).
  int value(long a) const;
  /// Smallest d | modulus such that chi(a) = 1 for every unit a = 1 mod d.
  long conductor() const;
  bool is_primitive() const { return conductor() == modulus_; }

  friend bool operator==(const DirichletCharacter& a, const DirichletCharacter& b) {
    return a.modulus_ == b.modulus_ && a.values_ == b.values_ && a.label_ == b.label_;
  }

 private:
  std::string label_;
  long modulus_;
  std::vector<int> values_;
};

/// chi0 (mod 1), chi3, chi4, chi6, chi8_1, chi8_2, chi12_1, chi12_2.
const std::vector<DirichletCharacter>& builtin_characters();
/// Throws InvalidParameters for an unknown label.
const DirichletCharacter& builtin_character(std::string_view label);

/// B_{n,chi}(x) = q^{n-1} sum_{a=1}^{q} chi(a) B_n((a + x)/q), q the modulus.
UniPoly gen_bernoulli_poly(long n, const DirichletCharacter& chi);

}  // namespace hankeldet

#endif  // HANKELDET_CHARACTER_HPP
