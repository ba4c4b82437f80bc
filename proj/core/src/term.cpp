#include "hankeldet/term.hpp"

#include "hankeldet/error.hpp"

namespace hankeldet {

bool SequenceTerm::is_zero() const {
  return is_polynomial() ? std::get<UniPoly>(value_).is_zero() : std::get<Rational>(value_).is_zero();
}

Rational SequenceTerm::as_rational() const {
  if (!is_polynomial()) return std::get<Rational>(value_);
  const auto& p = std::get<UniPoly>(value_);
  if (!p.is_constant()) throw Error(ErrorCode::InvalidParameters, "term is a non-constant polynomial: " + p.to_string());
  return p.constant_term();
}

UniPoly SequenceTerm::as_poly() const {
  if (is_polynomial()) return std::get<UniPoly>(value_);
  return UniPoly(std::get<Rational>(value_));
}

Rational SequenceTerm::eval_at(const Rational& x) const {
  if (is_polynomial()) return std::get<UniPoly>(value_)(x);
  return std::get<Rational>(value_);
}

SequenceTerm SequenceTerm::promoted_like(const SequenceTerm& like) const {
  if (like.is_polynomial() && !is_polynomial()) return SequenceTerm(as_poly());
  return *this;
}

std::string SequenceTerm::to_string() const {
  return is_polynomial() ? std::get<UniPoly>(value_).to_string() : std::get<Rational>(value_).to_string();
}

SequenceTerm& SequenceTerm::operator+=(const SequenceTerm& o) {
  if (!is_polynomial() && !o.is_polynomial()) {
    std::get<Rational>(value_) += std::get<Rational>(o.value_);
  } else {
    value_ = as_poly() + o.as_poly();
  }
  return *this;
}

SequenceTerm& SequenceTerm::operator-=(const SequenceTerm& o) {
  if (!is_polynomial() && !o.is_polynomial()) {
    std::get<Rational>(value_) -= std::get<Rational>(o.value_);
  } else {
    value_ = as_poly() - o.as_poly();
  }
  return *this;
}

SequenceTerm& SequenceTerm::operator*=(const SequenceTerm& o) {
  if (!is_polynomial() && !o.is_polynomial()) {
    std::get<Rational>(value_) *= std::get<Rational>(o.value_);
  } else if (!o.is_polynomial()) {
    std::get<UniPoly>(value_) *= std::get<Rational>(o.value_);
  } else {
    value_ = as_poly() * o.as_poly();
  }
  return *this;
}

SequenceTerm operator-(const SequenceTerm& a) {
  if (a.is_polynomial()) return SequenceTerm(-std::get<UniPoly>(a.value_));
  return SequenceTerm(-std::get<Rational>(a.value_));
}

SequenceTerm SequenceTerm::pow(unsigned e) const {
  if (is_polynomial()) return SequenceTerm(std::get<UniPoly>(value_).pow(e));
  return SequenceTerm(std::get<Rational>(value_).pow(static_cast<long>(e)));
}

bool operator==(const SequenceTerm& a, const SequenceTerm& b) {
  if (!a.is_polynomial() && !b.is_polynomial()) return std::get<Rational>(a.value_) == std::get<Rational>(b.value_);
  return a.as_poly() == b.as_poly();
}

}  // namespace hankeldet
