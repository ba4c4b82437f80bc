#include "hankeldet/sequence.hpp"

#include <cctype>
#include <numeric>
#include <utility>

#include "hankeldet/character.hpp"
#include "hankeldet/error.hpp"
#include "hankeldet/numbers.hpp"
#include "hankeldet/umbral.hpp"

namespace hankeldet {

std::string_view to_string(Family f) {
  switch (f) {
    case Family::BernoulliNumber: return "BernoulliNumber";
    case Family::BernoulliPoly: return "BernoulliPoly";
    case Family::EulerNumber: return "EulerNumber";
    case Family::EulerPoly: return "EulerPoly";
    case Family::BernDiffSum: return "BernDiffSum";
    case Family::EulerDiffSum: return "EulerDiffSum";
    case Family::GenBernoulli: return "GenBernoulli";
    case Family::PowerSum: return "PowerSum";
    case Family::AltPowerSum: return "AltPowerSum";
    case Family::Zigzag: return "Zigzag";
    case Family::TangentNumber: return "TangentNumber";
    case Family::Umbral: return "Umbral";
    case Family::Combination: return "Combination";
  }
  return "Unknown";
}

std::string Linear::to_string() const {
  std::string out;
  if (a == 0) return std::to_string(b);
  if (a != 1) out += std::to_string(a);
  out += "k";
  if (b > 0) out += "+" + std::to_string(b);
  if (b < 0) out += "-" + std::to_string(-b);
  return out;
}

Rational Factor::at(long k) const {
  const long v = lin.at(k);
  switch (kind) {
    case Kind::Linear: return Rational(v);
    case Kind::Pow2Minus1: return Rational(2).pow(v) - Rational(1);
    case Kind::Power: return base.pow(v);
    case Kind::InvFactorial: return factorial(v).inverse();
    case Kind::InvLinear: return Rational(v).inverse();
  }
  return Rational(1);
}


namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorCode::InvalidParameters, what); }

bool has_x_family(Family f) {
  switch (f) {
    case Family::BernoulliPoly:
    case Family::EulerPoly:
    case Family::BernDiffSum:
    case Family::EulerDiffSum:
    case Family::GenBernoulli:
      return true;
    default:
      return false;
  }
}

// ---------------------------------------------------------------- printing

std::string argument_string(const Argument& arg) {
  if (arg.kind == Argument::Kind::None) return "";
  if (arg.kind == Argument::Kind::Point) return "(" + arg.beta.to_string() + ")";
  const mpz_class den = lcm(arg.alpha.denominator(), arg.beta.denominator());
  const Rational scale{den};
  const Rational a = arg.alpha * scale;
  const Rational c = arg.beta * scale;
  std::string inner;
  if (a == Rational(-1)) {
    inner = "-";
  } else if (a != Rational(1)) {
    inner = a.to_string();
  }
  inner += "x";
  if (c.sign() > 0) inner += "+" + c.to_string();
  if (c.sign() < 0) inner += c.to_string();
  if (den == 1) return "(" + inner + ")";
  if (c.is_zero()) return "(" + inner + "/" + den.get_str() + ")";
  return "((" + inner + ")/" + den.get_str() + ")";
}

std::string base_string(const SequenceSpec& s) {
  const std::string idx = "[" + s.index.to_string() + "]";
  switch (s.family) {
    case Family::BernoulliNumber:
    case Family::BernoulliPoly:
      return "B" + idx + argument_string(s.arg);
    case Family::EulerNumber:
    case Family::EulerPoly:
      return "E" + idx + argument_string(s.arg);
    case Family::BernDiffSum:
    case Family::EulerDiffSum:
      return std::string(s.sign < 0 ? "diff" : "sum") + (s.family == Family::BernDiffSum ? "B" : "E") +
             "(q=" + std::to_string(s.q) + ",r=" + std::to_string(s.r) + ",s=" + std::to_string(s.s) + ")" + idx +
             argument_string(s.arg);
    case Family::GenBernoulli:
      return "Bchi(" + s.chi + ")" + idx + argument_string(s.arg);
    case Family::PowerSum:
      return "S(s=" + std::to_string(s.s) + ")" + idx;
    case Family::AltPowerSum:
      return "Talt(s=" + std::to_string(s.s) + ")" + idx;
    case Family::Zigzag:
      return "Z" + idx;
    case Family::TangentNumber:
      return "tan" + idx;
    case Family::Umbral:
      return "FK(a=" + std::to_string(s.fa) + ",b=" + std::to_string(s.fb) + ",c=" + std::to_string(s.fc) +
             ",d=" + std::to_string(s.fd) + ")" + idx;
    case Family::Combination:
      break;
  }
  return "?";
}

// Product form without sign; the caller prints the sign of the coefficient.
std::string product_string(const SequenceSpec& s) {
  std::string out;
  const Rational mag = s.coefficient.abs();
  if (!mag.is_one()) out += mag.to_string() + "*";
  for (const auto& f : s.factors) {
    switch (f.kind) {
      case Factor::Kind::Linear: out += "(" + f.lin.to_string() + ")*"; break;
      case Factor::Kind::Pow2Minus1: out += "(2^(" + f.lin.to_string() + ")-1)*"; break;
      case Factor::Kind::Power: out += f.base.to_string() + "^(" + f.lin.to_string() + ")*"; break;
      case Factor::Kind::InvFactorial:
      case Factor::Kind::InvLinear: break;
    }
  }
  out += base_string(s);
  for (const auto& f : s.factors) {
    if (f.kind == Factor::Kind::InvFactorial) out += "/(" + f.lin.to_string() + ")!";
    if (f.kind == Factor::Kind::InvLinear) out += "/(" + f.lin.to_string() + ")";
  }
  return out;
}

// ----------------------------------------------------------------- parsing

std::string normalize(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '_' && i + 1 < s.size() && s[i + 1] == '{') {
      const auto close = s.find('}', i + 2);
      if (close == std::string::npos) throw Error(ErrorCode::ParseError, "unbalanced '_{' in '" + s + "'");
      out += "[" + s.substr(i + 2, close - i - 2) + "]";
      i = close;
    } else if (s[i] == '_' && i + 1 < s.size() && s[i + 1] == 'k' &&
               (i + 2 == s.size() || !std::isalnum(static_cast<unsigned char>(s[i + 2])))) {
      out += "[k]";
      ++i;
    } else {
      out += s[i];
    }
  }
  return out;
}

// Affine form alpha*x + beta used for argument expressions.
struct Affine {
  Rational alpha;
  Rational beta;
};

class Parser {
 public:
  explicit Parser(std::string text) : s_(std::move(text)) {}

  SequenceSpec parse_top() {
    std::vector<std::string> parts = split_top_level_commas();
    std::vector<Rational> prepend;
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) prepend.push_back(Rational::parse(parts[i]));
    s_ = parts.back();
    pos_ = 0;
    SequenceSpec spec = parse_sum();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    if (spec.family != Family::Combination) normalize_negative_index(spec);
    spec.prepend.insert(spec.prepend.begin(), prepend.begin(), prepend.end());
    return spec;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::ParseError, why + " at position " + std::to_string(pos_) + " in '" + s_ + "'",
                static_cast<long>(pos_));
  }

  char peek(std::size_t ahead = 0) const { return pos_ + ahead < s_.size() ? s_[pos_ + ahead] : '\0'; }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool accept_word(std::string_view w) {
    if (s_.compare(pos_, w.size(), w) != 0) return false;
    pos_ += w.size();
    return true;
  }
  static bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
  static bool alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }

  std::vector<std::string> split_top_level_commas() const {
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (char c : s_) {
      if (c == '(' || c == '[') ++depth;
      if (c == ')' || c == ']') --depth;
      if (c == ',' && depth == 0) {
        parts.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    parts.push_back(cur);
    for (const auto& p : parts) {
      if (p.empty()) throw Error(ErrorCode::ParseError, "empty sequence component in '" + s_ + "'");
    }
    return parts;
  }

  long parse_int() {
    const std::size_t start = pos_;
    while (digit(peek())) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (pos_ - start > 9) fail("integer too large");
    return std::stol(s_.substr(start, pos_ - start));
  }

  long parse_signed_int() {
    const bool neg = accept('-');
    const long v = parse_int();
    return neg ? -v : v;
  }

  Linear parse_linear() {
    Linear lin{0, 0};
    long lead = 1;
    bool have_number = false;
    const bool neg = accept('-');
    if (digit(peek())) {
      lead = parse_int();
      have_number = true;
    }
    if (accept('k')) {
      lin.a = neg ? -lead : lead;
      if (peek() == '+' || peek() == '-') {
        const bool minus = peek() == '-';
        ++pos_;
        const long b = parse_int();
        lin.b = minus ? -b : b;
      }
    } else {
      if (!have_number) fail("expected an index expression in k");
      lin.b = neg ? -lead : lead;
    }
    return lin;
  }

  SequenceSpec parse_sum() {
    std::vector<SequenceSpec> terms;
    int sign = 1;
    if (accept('-')) {
      sign = -1;
    } else {
      accept('+');
    }
    for (;;) {
      SequenceSpec t = parse_product();
      if (sign < 0) t.coefficient = -t.coefficient;
      terms.push_back(std::move(t));
      if (accept('+')) {
        sign = 1;
      } else if (accept('-')) {
        sign = -1;
      } else {
        break;
      }
    }
    if (terms.size() == 1) return std::move(terms.front());
    SequenceSpec comb;
    comb.family = Family::Combination;
    comb.terms = std::move(terms);
    return comb;
  }

  static void push_factor(SequenceSpec& spec, Factor f) {
    if (f.lin.a == 0) {
      spec.coefficient *= f.at(0);
    } else {
      spec.factors.push_back(std::move(f));
    }
  }

  SequenceSpec parse_product() {
    SequenceSpec spec;
    bool have_base = false;
    for (;;) {
      const char c = peek();
      if (digit(c)) {
        const long n = parse_int();
        if (accept('^')) {
          Factor f{Factor::Kind::Power, {}, Rational(n)};
          if (accept('(')) {
            f.lin = parse_linear();
            expect(')');
          } else {
            expect('k');
            f.lin = {1, 0};
          }
          push_factor(spec, std::move(f));
        } else if (peek() == 'k') {
          ++pos_;
          push_factor(spec, Factor{Factor::Kind::Linear, {n, 0}, {}});
        } else if (peek() == '/' && digit(peek(1))) {
          ++pos_;
          const long d = parse_int();
          if (d == 0) fail("zero denominator");
          spec.coefficient *= Rational(n, d);
        } else {
          spec.coefficient *= Rational(n);
        }
      } else if (c == 'k') {
        ++pos_;
        push_factor(spec, Factor{Factor::Kind::Linear, {1, 0}, {}});
      } else if (c == '(') {
        ++pos_;
        if (accept_word("2^(")) {
          Factor f{Factor::Kind::Pow2Minus1, parse_linear(), {}};
          expect(')');
          if (!accept_word("-1")) fail("expected '-1' in (2^(..)-1)");
          expect(')');
          push_factor(spec, std::move(f));
        } else {
          Factor f{Factor::Kind::Linear, parse_linear(), {}};
          expect(')');
          push_factor(spec, std::move(f));
        }
      } else if (alpha(c)) {
        if (have_base) fail("two base sequences in one product");
        parse_base(spec);
        have_base = true;
        while (peek() == '/') {
          ++pos_;
          if (accept('(')) {
            Factor f{Factor::Kind::InvFactorial, parse_linear(), {}};
            expect(')');
            if (!accept('!')) f.kind = Factor::Kind::InvLinear;
            push_factor(spec, std::move(f));
          } else {
            const long d = parse_int();
            if (d == 0) fail("division by zero");
            spec.coefficient /= Rational(d);
          }
        }
      } else {
        fail(c == '\0' ? "unexpected end of input" : std::string("unexpected character '") + c + "'");
      }
      if (accept('*')) continue;
      const char n = peek();
      if (n == '\0' || n == '+' || n == '-') break;
      if (digit(n) || n == 'k' || n == '(' || alpha(n)) continue;
      fail(std::string("unexpected character '") + n + "'");
    }
    if (!have_base) fail("a sequence needs a base family");
    return spec;
  }

  void parse_params(const std::vector<std::pair<std::string_view, long*>>& slots) {
    expect('(');
    std::vector<bool> seen(slots.size(), false);
    do {
      std::size_t start = pos_;
      while (alpha(peek())) ++pos_;
      const std::string name = s_.substr(start, pos_ - start);
      expect('=');
      const long v = parse_signed_int();
      bool matched = false;
      for (std::size_t i = 0; i < slots.size(); ++i) {
        if (slots[i].first == name) {
          if (seen[i]) fail("parameter '" + name + "' given twice");
          *slots[i].second = v;
          seen[i] = true;
          matched = true;
        }
      }
      if (!matched) fail("unknown parameter '" + name + "'");
    } while (accept(','));
    expect(')');
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (!seen[i]) fail("missing parameter '" + std::string(slots[i].first) + "'");
    }
  }

  void parse_base(SequenceSpec& spec) {
    const std::size_t start = pos_;
    while (alpha(peek())) ++pos_;
    const std::string name = s_.substr(start, pos_ - start);
    bool takes_arg = false;
    bool arg_required = false;
    if (name == "B" || name == "E") {
      spec.family = name == "B" ? Family::BernoulliNumber : Family::EulerNumber;
      takes_arg = true;
    } else if (name == "diffB" || name == "sumB" || name == "diffE" || name == "sumE") {
      spec.family = name.back() == 'B' ? Family::BernDiffSum : Family::EulerDiffSum;
      spec.sign = name.rfind("diff", 0) == 0 ? -1 : 1;
      parse_params({{"q", &spec.q}, {"r", &spec.r}, {"s", &spec.s}});
      takes_arg = arg_required = true;
    } else if (name == "Bchi") {
      spec.family = Family::GenBernoulli;
      expect('(');
      const std::size_t ls = pos_;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
      spec.chi = s_.substr(ls, pos_ - ls);
      expect(')');
      takes_arg = true;
    } else if (name == "S" || name == "Talt") {
      spec.family = name == "S" ? Family::PowerSum : Family::AltPowerSum;
      parse_params({{"s", &spec.s}});
    } else if (name == "Z") {
      spec.family = Family::Zigzag;
    } else if (name == "tan") {
      spec.family = Family::TangentNumber;
    } else if (name == "FK") {
      spec.family = Family::Umbral;
      parse_params({{"a", &spec.fa}, {"b", &spec.fb}, {"c", &spec.fc}, {"d", &spec.fd}});
    } else {
      pos_ = start;
      fail("unknown sequence family '" + name + "'");
    }
    if (accept('[')) {
      spec.index = parse_linear();
      expect(']');
    }
    if (takes_arg && peek() == '(') {
      spec.arg = parse_argument();
      if (spec.family == Family::BernoulliNumber) spec.family = Family::BernoulliPoly;
      if (spec.family == Family::EulerNumber) spec.family = Family::EulerPoly;
    } else if (arg_required) {
      spec.arg = Argument::symbolic(Rational(1), Rational(0));
    }
  }

  Argument parse_argument() {
    expect('(');
    const Affine a = parse_affine_sum();
    expect(')');
    if (a.alpha.is_zero()) return Argument::point(a.beta);
    return Argument::symbolic(a.alpha, a.beta);
  }

  Affine parse_affine_sum() {
    Affine acc = parse_affine_product();
    for (;;) {
      if (accept('+')) {
        const Affine t = parse_affine_product();
        acc = {acc.alpha + t.alpha, acc.beta + t.beta};
      } else if (accept('-')) {
        const Affine t = parse_affine_product();
        acc = {acc.alpha - t.alpha, acc.beta - t.beta};
      } else {
        return acc;
      }
    }
  }

  Affine multiply(const Affine& a, const Affine& b) {
    if (!a.alpha.is_zero() && !b.alpha.is_zero()) fail("argument must be affine in x");
    return {a.alpha * b.beta + b.alpha * a.beta, a.beta * b.beta};
  }

  Affine parse_affine_product() {
    Affine acc = parse_affine_unary();
    for (;;) {
      if (accept('*')) {
        acc = multiply(acc, parse_affine_unary());
      } else if (accept('/')) {
        const Affine d = parse_affine_unary();
        if (!d.alpha.is_zero()) fail("division by an expression in x");
        if (d.beta.is_zero()) fail("division by zero");
        acc = {acc.alpha / d.beta, acc.beta / d.beta};
      } else if (peek() == 'x' || peek() == '(') {
        acc = multiply(acc, parse_affine_unary());
      } else {
        return acc;
      }
    }
  }

  Affine parse_affine_unary() {
    if (accept('-')) {
      const Affine a = parse_affine_unary();
      return {-a.alpha, -a.beta};
    }
    if (accept('x')) return {Rational(1), Rational(0)};
    if (accept('(')) {
      const Affine a = parse_affine_sum();
      expect(')');
      return a;
    }
    if (digit(peek())) return {Rational(0), Rational(parse_int())};
    fail("expected a number, x, or '('");
  }

  // Rewrites a negative leading index such as k*E[k-1] into 0,(k+1)*E[k];
  // allowed only where some linear factor kills the undefined terms.
  void normalize_negative_index(SequenceSpec& spec) {
    if (spec.index.a < 1) return;  // reported by validate()
    long shift = 0;
    while (spec.index.at(shift) < 0) {
      bool killed = false;
      for (const auto& f : spec.factors) {
        if (f.kind == Factor::Kind::Linear && f.lin.at(shift) == 0) killed = true;
      }
      if (!killed) invalid("index " + spec.index.to_string() + " is negative at k = " + std::to_string(shift));
      ++shift;
    }
    if (shift == 0) return;
    spec.index.b += spec.index.a * shift;
    for (auto& f : spec.factors) f.lin.b += f.lin.a * shift;
    spec.prepend.insert(spec.prepend.begin(), static_cast<std::size_t>(shift), Rational(0));
  }

  std::string s_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------- resolving

SequenceTerm apply_argument(const UniPoly& p, const Argument& arg) {
  switch (arg.kind) {
    case Argument::Kind::None: return SequenceTerm(p(Rational(0)));
    case Argument::Kind::Point: return SequenceTerm(p(arg.beta));
    case Argument::Kind::Symbolic: return SequenceTerm(p.affine_substitute(arg.alpha, arg.beta));
  }
  return {};
}

SequenceTerm base_term(const SequenceSpec& s, long idx) {
  switch (s.family) {
    case Family::BernoulliNumber: return SequenceTerm(bernoulli_number(idx));
    case Family::EulerNumber: return SequenceTerm(euler_number(idx));
    case Family::BernoulliPoly: return apply_argument(bernoulli_poly(idx), s.arg);
    case Family::EulerPoly: return apply_argument(euler_poly(idx), s.arg);
    case Family::BernDiffSum:
    case Family::EulerDiffSum: {
      const UniPoly p = s.family == Family::BernDiffSum ? bernoulli_poly(idx) : euler_poly(idx);
      const UniPoly first = p.affine_substitute(Rational(1, s.q), Rational(s.r, s.q));
      const UniPoly second = p.affine_substitute(Rational(1, s.q), Rational(s.s, s.q));
      return apply_argument(s.sign < 0 ? first - second : first + second, s.arg);
    }
    case Family::GenBernoulli: return apply_argument(gen_bernoulli_poly(idx, builtin_character(s.chi)), s.arg);
    case Family::PowerSum: return SequenceTerm(power_sum(s.s, idx));
    case Family::AltPowerSum: return SequenceTerm(alt_power_sum(s.s, idx));
    case Family::Zigzag: return SequenceTerm(zigzag_number(idx));
    case Family::TangentNumber: return SequenceTerm(tangent_number(idx));
    case Family::Umbral: return SequenceTerm(fk_moment(s.fa, s.fb, s.fc, s.fd, idx));
    case Family::Combination: break;
  }
  invalid("combination has no base term");
}

SequenceTerm body_term(const SequenceSpec& s, long k) {
  if (s.family == Family::Combination) {
    SequenceTerm sum;
    for (const auto& t : s.terms) sum += body_term(t, k);
    return sum;
  }
  const long idx = s.index.at(k);
  if (idx < 0) invalid("negative index " + std::to_string(idx) + " for " + s.to_string());
  Rational scale = s.coefficient;
  for (const auto& f : s.factors) scale *= f.at(k);
  if (scale.is_zero()) return SequenceTerm(Rational(0));
  SequenceTerm t = base_term(s, idx);
  if (!scale.is_one()) t *= SequenceTerm(scale);
  return t;
}

}  // namespace

void SequenceSpec::validate() const {
  if (family == Family::Combination) {
    if (terms.size() < 2) invalid("a combination needs at least two terms");
    for (const auto& t : terms) {
      if (t.family == Family::Combination) invalid("nested combinations are not supported");
      if (!t.prepend.empty()) invalid("prepended terms belong to the whole combination");
      t.validate();
    }
    return;
  }
  if (index.a < 1 || index.b < 0) invalid("index map " + index.to_string() + " needs a >= 1 and b >= 0");
  for (const auto& f : factors) {
    if (f.kind == Factor::Kind::InvFactorial && (f.lin.a < 0 || f.lin.b < 0)) {
      invalid("factorial argument " + f.lin.to_string() + " must be nonnegative for all k");
    }
    if (f.kind == Factor::Kind::Power && f.base.is_zero()) invalid("zero base in a power factor");
    if (f.kind == Factor::Kind::InvLinear && (f.lin.b == 0 || (f.lin.a != 0 && -f.lin.b % f.lin.a == 0 && -f.lin.b / f.lin.a >= 0))) {
      invalid("divisor " + f.lin.to_string() + " vanishes for some k >= 0");
    }
  }
  const bool has_arg = arg.kind != Argument::Kind::None;
  switch (family) {
    case Family::BernoulliPoly:
    case Family::EulerPoly:
      if (!has_arg) invalid("polynomial family needs an argument");
      break;
    case Family::BernDiffSum:
    case Family::EulerDiffSum:
      if (q < 1 || r < 0 || r >= s) invalid("sum/difference family needs q >= 1 and 0 <= r < s");
      if (sign != 1 && sign != -1) invalid("sign must be +1 or -1");
      if (!has_arg) invalid("sum/difference family needs an argument");
      break;
    case Family::GenBernoulli:
      builtin_character(chi);
      break;
    case Family::PowerSum:
    case Family::AltPowerSum:
      if (s < 1) invalid("power sums need s >= 1");
      [[fallthrough]];
    default:
      if (has_arg && !has_x_family(family)) invalid(std::string(hankeldet::to_string(family)) + " takes no argument");
      break;
  }
  if (family == Family::TangentNumber && index.b < 1) invalid("tangent numbers start at index 1");
  if (family == Family::Umbral && (fa < 1 || fb < 1 || fc < 0 || fd < 0)) {
    invalid("umbral family needs a, b >= 1 and c, d >= 0");
  }
}

bool SequenceSpec::is_polynomial() const {
  if (family == Family::Combination) {
    for (const auto& t : terms) {
      if (t.is_polynomial()) return true;
    }
    return false;
  }
  return arg.kind == Argument::Kind::Symbolic;
}

std::string SequenceSpec::to_string() const {
  std::string out;
  for (const auto& p : prepend) out += p.to_string() + ",";
  if (family == Family::Combination) {
    for (std::size_t i = 0; i < terms.size(); ++i) {
      const bool neg = terms[i].coefficient.sign() < 0;
      if (neg) {
        out += "-";
      } else if (i > 0) {
        out += "+";
      }
      out += product_string(terms[i]);
    }
    return out;
  }
  if (coefficient.sign() < 0) out += "-";
  return out + product_string(*this);
}

SequenceSpec parse_sequence(std::string_view text) {
  if (text.empty()) throw Error(ErrorCode::ParseError, "empty sequence name");
  Parser p(normalize(text));
  SequenceSpec spec = p.parse_top();
  spec.validate();
  return spec;
}

SequenceTerm resolve(const SequenceSpec& spec, long k) {
  if (k < 0) invalid("sequence index must be nonnegative");
  const bool poly = spec.is_polynomial();
  const auto n_pre = static_cast<long>(spec.prepend.size());
  SequenceTerm t = k < n_pre ? SequenceTerm(spec.prepend[static_cast<std::size_t>(k)]) : body_term(spec, k - n_pre);
  if (poly && !t.is_polynomial()) t = SequenceTerm(t.as_poly());
  return t;
}

std::vector<SequenceTerm> resolve_range(const SequenceSpec& spec, long count) {
  std::vector<SequenceTerm> out;
  out.reserve(static_cast<std::size_t>(std::max(0L, count)));
  for (long k = 0; k < count; ++k) out.push_back(resolve(spec, k));
  return out;
}

const std::vector<CatalogEntry>& sequence_catalog() {
  static const std::vector<CatalogEntry> catalog = {
      {"B[k]", "Bernoulli numbers"},
      {"B[k](x)", "Bernoulli polynomials"},
      {"E[k]", "Euler numbers"},
      {"E[k](x)", "Euler polynomials"},
      {"B[2k+1]((x+1)/2)", "odd-index Bernoulli polynomials at (x+1)/2"},
      {"E[2k]((x+1)/2)", "even-index Euler polynomials at (x+1)/2"},
      {"E[k+1](1)", "Euler polynomials at 1, shifted"},
      {"0,(k+1)*E[k]", "k E_{k-1}, the derivative sequence of E_k(x) at 0"},
      {"0,(k+1)*E[k](x)", "k E_{k-1}(x)"},
      {"diffB(q=1,r=0,s=1)[k](x)", "B_k((x+r)/q) - B_k((x+s)/q)"},
      {"sumB(q=1,r=0,s=1)[k](x)", "B_k((x+r)/q) + B_k((x+s)/q)"},
      {"diffE(q=1,r=0,s=1)[k](x)", "E_k((x+r)/q) - E_k((x+s)/q)"},
      {"sumE(q=1,r=0,s=1)[k](x)", "E_k((x+r)/q) + E_k((x+s)/q)"},
      {"Bchi(chi4)[k]", "generalized Bernoulli numbers for a built-in character"},
      {"Bchi(chi4)[k](x)", "generalized Bernoulli polynomials"},
      {"S(s=2)[k]", "k(1^{k-1} + ... + s^{k-1})"},
      {"Talt(s=3)[k]", "1 - 2^k + ... + (-1)^{s-1} s^k"},
      {"Z[k]", "zigzag (up/down) numbers"},
      {"tan[k+1]", "tangent numbers"},
      {"FK(a=1,b=1,c=1,d=1)[k]", "umbral moments U^{k+2}(U+1)_{a-1}(U+1)_{b-1}(-U+1)_{c-1}(-U+1)_{d-1}"},
      {"B[k]-2*B[k+1]+B[k+2]", "linear combination of shifted Bernoulli numbers"},
  };
  return catalog;
}

}  // namespace hankeldet
