#include "hankeldet/character.hpp"

#include <numeric>

#include "hankeldet/error.hpp"
#include "hankeldet/numbers.hpp"

namespace hankeldet {

namespace {

long mod_positive(long a, long m) {
  const long r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

DirichletCharacter::DirichletCharacter(std::string label, long modulus, std::vector<int> values)
    : label_(std::move(label)), modulus_(modulus), values_(std::move(values)) {
  const auto bad = [this](const std::string& why) {
    return Error(ErrorCode::InvalidParameters, "character '" + label_ + "': " + why);
  };
  if (modulus_ < 1) throw bad("modulus must be positive");
  if (static_cast<long>(values_.size()) != modulus_) throw bad("value table length differs from modulus");
  for (long a = 1; a <= modulus_; ++a) {
    const int v = values_[static_cast<std::size_t>(a - 1)];
    if (v < -1 || v > 1) throw bad("values must lie in {-1, 0, 1}");
    const bool unit = std::gcd(a, modulus_) == 1;
    if (unit && v == 0) throw bad("zero at unit " + std::to_string(a));
    if (!unit && v != 0) throw bad("nonzero at non-unit " + std::to_string(a));
  }
  for (long a = 1; a <= modulus_; ++a) {
    for (long b = 1; b <= modulus_; ++b) {
      if (std::gcd(a, modulus_) != 1 || std::gcd(b, modulus_) != 1) continue;
      if (value(a * b) != value(a) * value(b)) {
        throw bad("not multiplicative at " + std::to_string(a) + " * " + std::to_string(b));
      }
    }
  }
}

int DirichletCharacter::value(long a) const {
  long r = mod_positive(a, modulus_);
  if (r == 0) r = modulus_;
  return values_[static_cast<std::size_t>(r - 1)];
}

long DirichletCharacter::conductor() const {
  for (long d = 1; d <= modulus_; ++d) {
    if (modulus_ % d != 0) continue;
    bool trivial_on_kernel = true;
    for (long a = 1; a <= modulus_ && trivial_on_kernel; ++a) {
      if (std::gcd(a, modulus_) == 1 && a % d == 1 % d && value(a) != 1) trivial_on_kernel = false;
    }
    if (trivial_on_kernel) return d;
  }
  return modulus_;
}

const std::vector<DirichletCharacter>& builtin_characters() {
  static const std::vector<DirichletCharacter> chars = {
      {"chi0", 1, {1}},
      {"chi3", 3, {1, -1, 0}},
      {"chi4", 4, {1, 0, -1, 0}},
      {"chi6", 6, {1, 0, 0, 0, -1, 0}},
      {"chi8_1", 8, {1, 0, -1, 0, -1, 0, 1, 0}},
      {"chi8_2", 8, {1, 0, 1, 0, -1, 0, -1, 0}},
      {"chi12_1", 12, {1, 0, 0, 0, -1, 0, -1, 0, 0, 0, 1, 0}},
      {"chi12_2", 12, {1, 0, 0, 0, 1, 0, -1, 0, 0, 0, -1, 0}},
  };
  return chars;
}

const DirichletCharacter& builtin_character(std::string_view label) {
  for (const auto& c : builtin_characters()) {
    if (c.label() == label) return c;
  }
  throw Error(ErrorCode::InvalidParameters, "unknown character '" + std::string(label) + "'");
}

UniPoly gen_bernoulli_poly(long n, const DirichletCharacter& chi) {
  const long q = chi.modulus();
  const UniPoly bn = bernoulli_poly(n);
  UniPoly sum;
  for (long a = 1; a <= q; ++a) {
    const int v = chi.value(a);
    if (v == 0) continue;
    UniPoly term = bn.affine_substitute(Rational(1, q), Rational(a, q));
    if (v < 0) term = -term;
    sum += term;
  }
  return sum * Rational(q).pow(n - 1);
}

}  // namespace hankeldet
