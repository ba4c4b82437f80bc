#include <map>
#include <memory>
#include <mutex>
#include <regex>
#include <string>
#include <unordered_set>

#include "hankeldet/closed_forms.hpp"
#include "hankeldet/error.hpp"
#include "hankeldet/numbers.hpp"

namespace hankeldet {

namespace {

using Fn = std::function<SequenceTerm(long)>;
using Q = Rational;

// x^2 - c
UniPoly x2_minus(const Rational& c) { return UniPoly(std::vector<Rational>{-c, Rational(0), Rational(1)}); }

Fn constant(SequenceTerm v) {
  return [v = std::move(v)](long) { return v; };
}

Q fact(long n) { return factorial(n); }

std::optional<bool> even_vanish(long n) {
  if (n % 2 == 0) return true;
  return std::nullopt;
}

bool sequence_is_polynomial(const std::string& seq) { return parse_sequence(seq).is_polynomial(); }

ClosedFormIdentity all_n(std::string id, std::string seq, SignPattern sign, Fn a, Fn b, const std::string& a_text,
                         const std::string& b_text, std::string citation, Category cat = Category::TableAllN) {
  ClosedFormIdentity c;
  c.id = std::move(id);
  c.sequence = std::move(seq);
  c.format = Format::AllN;
  c.sign = sign;
  c.a = std::move(a);
  c.b = std::move(b);
  c.formula = "(-1)^eps(n) * (" + a_text + ")^(n+1) * prod_{l=1}^{n} (" + b_text + ")^(n+1-l), eps = " +
              std::string(to_string(sign));
  c.citation = std::move(citation);
  c.category = cat;
  if (sequence_is_polynomial(c.sequence)) c.parameters = {"x"};
  c.default_max = c.is_polynomial() ? 5 : 8;
  c.vanishing = [](long) { return std::optional<bool>{}; };
  return c;
}

ClosedFormIdentity odd_only(std::string id, std::string seq, Fn a, Fn b, const std::string& a_text,
                            const std::string& b_text, std::string citation, Category cat = Category::TableOddOnly) {
  ClosedFormIdentity c;
  c.id = std::move(id);
  c.sequence = std::move(seq);
  c.format = Format::OddOnly;
  c.sign = SignPattern::MPlus1;
  c.a = std::move(a);
  c.b = std::move(b);
  c.formula = "H_{2m} = 0; H_{2m+1} = (-1)^(m+1) * (" + a_text + ")^(2m+2) * prod_{l=1}^{m} (" + b_text +
              ")^(2(m+1-l))";
  c.citation = std::move(citation);
  c.category = cat;
  if (sequence_is_polynomial(c.sequence)) c.parameters = {"x"};
  c.default_max = c.is_polynomial() ? 7 : 9;
  c.vanishing = even_vanish;
  return c;
}

ClosedFormIdentity custom(std::string id, std::string seq, Fn fn, std::string formula, std::string citation,
                          Category cat, long default_max = -1) {
  ClosedFormIdentity c;
  c.id = std::move(id);
  c.sequence = std::move(seq);
  c.format = Format::Custom;
  c.sign = SignPattern::Custom;
  c.custom = std::move(fn);
  c.formula = std::move(formula);
  c.citation = std::move(citation);
  c.category = cat;
  if (sequence_is_polynomial(c.sequence)) c.parameters = {"x"};
  c.default_max = default_max >= 0 ? default_max : (c.is_polynomial() ? 5 : 8);
  c.vanishing = [](long) { return std::optional<bool>{}; };
  return c;
}

Q sign_pow(long e) { return e % 2 == 0 ? Q(1) : Q(-1); }

// prod_{l=1}^{n} l!^p
Q superfactorial(long n, long p) {
  Q v(1);
  for (long l = 1; l <= n; ++l) v *= fact(l).pow(p);
  return v;
}

// ------------------------------------------------------------------ families

std::string tuple_args(long q, long r, long s) {
  return "(q=" + std::to_string(q) + ",r=" + std::to_string(r) + ",s=" + std::to_string(s) + ")";
}

void check_tuple(long q, long r, long s) {
  if (q < 1 || r < 0 || s <= r) throw Error(ErrorCode::InvalidParameters, "need q >= 1 and 0 <= r < s");
}

ClosedFormIdentity diff_bernoulli(long q, long r, long s) {
  check_tuple(q, r, s);
  const long d = s - r;
  auto c = odd_only(
      "H_diffB" + tuple_args(q, r, s), "diffB" + tuple_args(q, r, s) + "[k](x)",
      [q, d](long m) { return SequenceTerm(Q(d) / Q(q).pow(m + 1)); },
      [q, d](long l) {
        return SequenceTerm(Q(l).pow(4) * (Q(d * d) - Q(q * l).pow(2)) / Q(4 * (2 * l - 1) * (2 * l + 1)));
      },
      "(s-r)/q^(m+1)", "l^4((s-r)^2-(ql)^2)/(4(2l-1)(2l+1))", "");
  c.vanishing = [q, d](long n) -> std::optional<bool> {
    if (n % 2 == 0) return true;
    const long m = (n - 1) / 2;
    return d % q == 0 && m >= d / q;
  };
  return c;
}

ClosedFormIdentity diff_euler(long q, long r, long s) {
  check_tuple(q, r, s);
  const Q xt = Q(s - r) / Q(q);
  return odd_only(
      "H_diffE" + tuple_args(q, r, s), "diffE" + tuple_args(q, r, s) + "[k](x)", constant(SequenceTerm(xt)),
      [xt](long l) { return SequenceTerm(Q(l * l, 4) * (xt * xt - Q(4 * l * l))); }, "(s-r)/q",
      "(l^2/4)(((s-r)/q)^2-4l^2)", "", Category::Parametric);
}

// H_{2m}: (-1)^m c_even / m!^2 prod_{l=1}^{m} ((l^2/4)(xt^2-(2l-1)^2))^{2(m+1-l)}
// H_{2m+1}: c_odd prod_{l=0}^{m} (l!^4/16^l) (xt^2-(2l+1)^2)^{2(m-l)+1}
Q sum_euler_branch(const Q& xt, long n, const Q& c_even, const Q& c_odd) {
  const Q xt2 = xt * xt;
  if (n % 2 == 0) {
    const long m = n / 2;
    Q v = sign_pow(m) * c_even / fact(m).pow(2);
    for (long l = 1; l <= m; ++l) v *= (Q(l * l, 4) * (xt2 - Q(2 * l - 1).pow(2))).pow(2 * (m + 1 - l));
    return v;
  }
  const long m = (n - 1) / 2;
  Q v = c_odd;
  for (long l = 0; l <= m; ++l) v *= fact(l).pow(4) / Q(16).pow(l) * (xt2 - Q(2 * l + 1).pow(2)).pow(2 * (m - l) + 1);
  return v;
}

ClosedFormIdentity sum_euler(long q, long r, long s) {
  check_tuple(q, r, s);
  const Q xt = Q(s - r) / Q(q);
  return custom(
      "H_sumE" + tuple_args(q, r, s), "sumE" + tuple_args(q, r, s) + "[k](x)",
      [xt](long n) { return SequenceTerm(sum_euler_branch(xt, n, Q(2).pow(n + 1), Q(1))); },
      "H_{2m} = (-1)^m 2^(2m+1)/m!^2 prod_{l=1}^{m} ((l^2/4)(xt^2-(2l-1)^2))^(2(m+1-l)); "
      "H_{2m+1} = prod_{l=0}^{m} (l!^4/16^l)(xt^2-(2l+1)^2)^(2(m-l)+1); xt = (s-r)/q",
      "", Category::Parametric, 7);
}

ClosedFormIdentity power_sum_identity(long s) {
  if (s < 1) throw Error(ErrorCode::InvalidParameters, "power sums need s >= 1");
  auto c = odd_only(
      "H_Sk(s=" + std::to_string(s) + ")", "S(s=" + std::to_string(s) + ")[k]", constant(SequenceTerm(Q(s))),
      [s](long l) { return SequenceTerm(Q(l).pow(4) * Q(s * s - l * l) / Q(4 * (2 * l + 1) * (2 * l - 1))); }, "s",
      "l^4(s^2-l^2)/(4(2l+1)(2l-1))", "", Category::PowerSum);
  c.vanishing = [s](long n) -> std::optional<bool> {
    if (n % 2 == 0) return true;
    return (n - 1) / 2 >= s;
  };
  return c;
}

ClosedFormIdentity alt_power_sum_identity(long s) {
  if (s < 1) throw Error(ErrorCode::InvalidParameters, "alternating power sums need s >= 1");
  const std::string id = "H_Tk(s=" + std::to_string(s) + ")";
  const std::string seq = "Talt(s=" + std::to_string(s) + ")[k]";
  if (s % 2 == 0) {
    const long t = s / 2;
    auto c = odd_only(
        id, seq, constant(SequenceTerm(Q(t))), [t](long l) { return SequenceTerm(Q(l * l) * Q(t * t - l * l)); },
        "s/2", "l^2((s/2)^2-l^2)", "", Category::PowerSum);
    c.vanishing = [t](long n) -> std::optional<bool> {
      if (n % 2 == 0) return true;
      return (n - 1) / 2 >= t;
    };
    return c;
  }
  auto c = custom(
      id, seq, [s](long n) { return SequenceTerm(sum_euler_branch(Q(s), n, Q(1), Q(1, 4).pow(n / 2 + 1))); },
      "H_{2m} = (-1)^m/m!^2 prod_{l=1}^{m} ((l^2/4)(s^2-(2l-1)^2))^(2(m+1-l)); "
      "H_{2m+1} = 4^(-(m+1)) prod_{l=0}^{m} (l!^4/16^l)(s^2-(2l+1)^2)^(2(m-l)+1)",
      "", Category::PowerSum, 9);
  c.vanishing = [s](long n) -> std::optional<bool> {
    if (n % 2 == 0) return n / 2 >= (s + 1) / 2;
    return (n - 1) / 2 >= (s - 1) / 2;
  };
  return c;
}

ClosedFormIdentity char_bernoulli(long q) {
  const std::string label = "chi" + std::to_string(q);
  auto c = odd_only(
      "H_Bchi" + std::to_string(q), "Bchi(" + label + ")[k]",
      [q](long m) { return SequenceTerm(Q(q).pow(m - 1) * Q(q - 2)); },
      [q](long l) {
        return SequenceTerm(Q(l).pow(4) * (Q(q - 2).pow(2) - Q(q * l).pow(2)) / Q(4 * (2 * l + 1) * (2 * l - 1)));
      },
      "q^(m-1)(q-2)", "l^4((q-2)^2-(ql)^2)/(4(2l+1)(2l-1))", "", Category::Character);
  return c;
}

// b^(1)_k = B_{k+1,chi}/(k+1) for the odd character of modulus 2q.
ClosedFormIdentity char_b1(long q, const std::string& label) {
  const Q qt = Q(q - 2) / Q(q);
  return odd_only(
      "H_b1(q=" + std::to_string(q) + ")", "Bchi(" + label + ")[k+1]/(k+1)",
      [q](long m) { return SequenceTerm(Q(q - 2, 2) * Q(q).pow(2 * m)); },
      [qt](long l) { return SequenceTerm(Q(l * l, 4) * (qt * qt - Q(4 * l * l))); }, "((q-2)/2) q^(2m)",
      "(l^2/4)(((q-2)/q)^2-4l^2)", "", Category::Character);
}

// b^(2)_k = B_{k+1,chi}/(k+1) for the even character of modulus 2q.
ClosedFormIdentity char_b2(long q, const std::string& label) {
  const Q qt = Q(q - 2) / Q(q);
  return custom(
      "H_b2(q=" + std::to_string(q) + ")", "Bchi(" + label + ")[k+1]/(k+1)",
      [q, qt](long n) {
        if (n % 2 == 0) {
          const long m = n / 2;
          // The even branch carries (-1)^(m+1) rather than (-1)^m.
          return SequenceTerm(-Q(q).pow(2 * m * (2 * m + 1)) * sum_euler_branch(qt, n, Q(1), Q(1)));
        }
        const long m = (n - 1) / 2;
        return SequenceTerm((Q(1, 2) * Q(q).pow(2 * m + 1)).pow(2 * m + 2) * sum_euler_branch(qt, n, Q(1), Q(1)));
      },
      "H_{2m} = (-1)^(m+1) q^(2m(2m+1))/m!^2 prod_{l=1}^{m} ((l^2/4)(qt^2-(2l-1)^2))^(2(m+1-l)); "
      "H_{2m+1} = ((1/2) q^(2m+1))^(2m+2) prod_{l=0}^{m} (l!^4/16^l)(qt^2-(2l+1)^2)^(2(m-l)+1); qt = (q-2)/q",
      "", Category::Character, 7);
}

ClosedFormIdentity fk_identity(long a, long b, long c, long d) {
  if (a < 1 || b < 1 || c < 0 || d < 0) throw Error(ErrorCode::InvalidParameters, "need a, b >= 1 and c, d >= 0");
  const std::string args = "(a=" + std::to_string(a) + ",b=" + std::to_string(b) + ",c=" + std::to_string(c) +
                           ",d=" + std::to_string(d) + ")";
  return custom(
      "FK" + args, "FK" + args + "[k]", [a, b, c, d](long n) { return SequenceTerm(fk_closed_form(a, b, c, d, n)); },
      "(-1)^C(n+1,2) ((a+c-1)!(b+c-1)!(a+d-1)!(b+d-1)!/(s-1)!)^(n+1) prod_{l=1}^{n} "
      "(l(a+c+l-1)(b+c+l-1)(a+d+l-1)(b+d+l-1)(s+l-2)/((s+2l-3)(s+2l-2)^2(s+2l-1)))^(n+1-l), s = a+b+c+d",
      "Fulmek-Krattenthaler", Category::Umbral, 3);
}

// ------------------------------------------------------------- fixed entries

void add_all_n_table(std::vector<ClosedFormIdentity>& out) {
  using S = SignPattern;
  auto c = [](Q v) { return constant(SequenceTerm(std::move(v))); };
  out.push_back(all_n("Hn_Bk", "B[k]", S::BinomN1, c(Q(1)),
                      [](long l) { return SequenceTerm(Q(l).pow(4) / Q(4 * (2 * l + 1) * (2 * l - 1))); }, "1",
                      "l^4/(4(2l+1)(2l-1))", "Krattenthaler (3.56)"));
  out.push_back(all_n("Hn_Bk+1", "B[k+1]", S::BinomN2, c(Q(1, 2)),
                      [](long l) { return SequenceTerm(Q(l * l * (l + 1) * (l + 1)) / Q(4 * (2 * l + 1) * (2 * l + 1))); },
                      "1/2", "l^2(l+1)^2/(4(2l+1)^2)", "Krattenthaler (3.57)"));
  out.push_back(all_n("Hn_Bk+2", "B[k+2]", S::BinomN1, c(Q(1, 6)),
                      [](long l) {
                        return SequenceTerm(Q(l * (l + 1) * (l + 1) * (l + 2)) / Q(4 * (2 * l + 1) * (2 * l + 3)));
                      },
                      "1/6", "l(l+1)^2(l+2)/(4(2l+1)(2l+3))", "Krattenthaler (2.38)"));
  out.push_back(all_n("Hn_B2k+2", "B[2k+2]", S::Zero, c(Q(1, 6)),
                      [](long l) {
                        return SequenceTerm(Q(l).pow(3) * Q(l + 1) * Q(2 * l - 1) * Q(2 * l + 1).pow(3) /
                                            (Q(4 * l - 1) * Q(4 * l + 1).pow(2) * Q(4 * l + 3)));
                      },
                      "1/6", "l^3(l+1)(2l-1)(2l+1)^3/((4l-1)(4l+1)^2(4l+3))", "Krattenthaler (3.59)"));
  out.push_back(all_n("Hn_B2k+4", "B[2k+4]", S::NPlus1, c(Q(1, 30)),
                      [](long l) {
                        return SequenceTerm(Q(l) * Q(l + 1).pow(3) * Q(2 * l + 1).pow(3) * Q(2 * l + 3) /
                                            (Q(4 * l + 1) * Q(4 * l + 3).pow(2) * Q(4 * l + 5)));
                      },
                      "1/30", "l(l+1)^3(2l+1)^3(2l+3)/((4l+1)(4l+3)^2(4l+5))", "Krattenthaler (3.60)"));
  out.push_back(all_n("Hn_B2k(1/2)", "B[2k](1/2)", S::Zero, c(Q(1)),
                      [](long l) {
                        return SequenceTerm(Q(l).pow(4) * Q(2 * l - 1).pow(4) /
                                            (Q(4 * l - 3) * Q(4 * l - 1).pow(2) * Q(4 * l + 1)));
                      },
                      "1", "l^4(2l-1)^4/((4l-3)(4l-1)^2(4l+1))", "Chen (41)"));
  out.push_back(all_n("Hn_(2^(2k+2)-1)B2k+2", "(2^(2k+2)-1)*B[2k+2]", S::Zero, c(Q(1, 2)),
                      [](long l) { return SequenceTerm(Q(l).pow(3) * Q(l + 1)); }, "1/2", "l^3(l+1)", ""));
  out.push_back(all_n("Hn_(2k+1)B2k(1/2)", "(2k+1)*B[2k](1/2)", S::Zero, c(Q(1)),
                      [](long l) { return SequenceTerm(Q(l).pow(6) / Q(4 * (2 * l + 1) * (2 * l - 1))); }, "1",
                      "l^6/(4(2l+1)(2l-1))", ""));
  out.push_back(all_n("Hn_(2k+3)B2k+2", "(2k+3)*B[2k+2]", S::Zero, c(Q(1, 2)),
                      [](long l) { return SequenceTerm(Q(l * (l + 1)).pow(3) / Q(4 * (2 * l + 1) * (2 * l + 1))); },
                      "1/2", "l^3(l+1)^3/(4(2l+1)^2)", ""));
  out.push_back(all_n(
      "Hn_B2k+1_poly", "B[2k+1]((x+1)/2)", S::BinomN1, constant(SequenceTerm(UniPoly::linear(Q(1, 2), Q(0)))),
      [](long l) { return SequenceTerm(x2_minus(Q(l * l)) * (Q(l).pow(4) / Q(4 * (2 * l + 1) * (2 * l - 1)))); },
      "x/2", "l^4(x^2-l^2)/(4(2l+1)(2l-1))", "Dilcher-Jiu, Theorem 1.1"));
  out.push_back(all_n("Hn_Ek", "E[k]", S::BinomN1, c(Q(1)), [](long l) { return SequenceTerm(Q(l * l)); }, "1",
                      "l^2", "Al-Salam-Carlitz (4.2)"));
  out.push_back(all_n("Hn_Ek(x)", "E[k](x)", S::BinomN1, c(Q(1)), [](long l) { return SequenceTerm(Q(l * l, 4)); },
                      "1", "l^2/4", "Al-Salam-Carlitz (5.2)"));
  out.push_back(all_n("Hn_Ek+1(1)", "E[k+1](1)", S::BinomN1, c(Q(1, 2)),
                      [](long l) { return SequenceTerm(Q(l * (l + 1), 4)); }, "1/2", "l(l+1)/4", "Han (H4)"));
  out.push_back(all_n("Hn_E2k", "E[2k]", S::Zero, c(Q(1)),
                      [](long l) { return SequenceTerm(Q((2 * l - 1) * 2 * l).pow(2)); }, "1", "(2l-1)^2(2l)^2",
                      "Krattenthaler (3.52)"));
  out.push_back(all_n("Hn_E2k+1(1)", "E[2k+1](1)", S::Zero, c(Q(1, 2)),
                      [](long l) { return SequenceTerm(Q(l * l * (2 * l - 1) * (2 * l + 1), 4)); }, "1/2",
                      "l^2(2l-1)(2l+1)/4", "Milne (4.56)"));
  out.push_back(all_n("Hn_E2k+2", "E[2k+2]", S::NPlus1, c(Q(1)),
                      [](long l) { return SequenceTerm(Q(2 * l * (2 * l + 1)).pow(2)); }, "1", "(2l)^2(2l+1)^2",
                      "Krattenthaler (3.53)"));
  out.push_back(all_n("Hn_E2k+3(1)", "E[2k+3](1)", S::NPlus1, c(Q(1, 4)),
                      [](long l) { return SequenceTerm(Q(l * (l + 1) * (2 * l + 1) * (2 * l + 1), 4)); }, "1/4",
                      "l(l+1)(2l+1)^2/4", "Milne (4.57)"));
  out.push_back(all_n("Hn_(2k+1)E2k", "(2k+1)*E[2k]", S::Zero, c(Q(1)),
                      [](long l) { return SequenceTerm(Q(2 * l).pow(4)); }, "1", "(2l)^4", ""));
  out.push_back(all_n("Hn_(2k+2)E2k+1(1)", "(2k+2)*E[2k+1](1)", S::Zero, c(Q(1)),
                      [](long l) { return SequenceTerm(Q(l).pow(3) * Q(l + 1)); }, "1", "l^3(l+1)", ""));
  out.push_back(all_n("Hn_Ek+1(1)/(k+1)!", "E[k+1](1)/(k+1)!", S::BinomN1, c(Q(1, 2)),
                      [](long l) { return SequenceTerm(Q(1, 4 * (2 * l - 1) * (2 * l + 1))); }, "1/2",
                      "1/(4(2l-1)(2l+1))", "Han (H12)"));
  out.push_back(all_n("Hn_E2k+1(1)/(2k+1)!", "E[2k+1](1)/(2k+1)!", S::Zero, c(Q(1, 2)),
                      [](long l) {
                        return SequenceTerm((Q(16) * Q(4 * l - 3) * Q(4 * l - 1).pow(2) * Q(4 * l + 1)).inverse());
                      },
                      "1/2", "1/(16(4l-3)(4l-1)^2(4l+1))", "Han (H13)"));
  out.push_back(all_n("Hn_E2k+3(1)/(2k+3)!", "E[2k+3](1)/(2k+3)!", S::NPlus1, c(Q(1, 24)),
                      [](long l) {
                        return SequenceTerm((Q(16) * Q(4 * l - 1) * Q(4 * l + 1).pow(2) * Q(4 * l + 3)).inverse());
                      },
                      "1/24", "1/(16(4l-1)(4l+1)^2(4l+3))", "Han (H22)"));
  const std::vector<std::pair<std::string, SequenceTerm>> nu_rows = {
      {"1", SequenceTerm(Q(1))},
      {"x/2", SequenceTerm(UniPoly::linear(Q(1, 2), Q(0)))},
      {"(x^2-1)/4", SequenceTerm(x2_minus(Q(1)) * Q(1, 4))},
  };
  const char* nu_seq[] = {"E[2k]((x+1)/2)", "E[2k+1]((x+1)/2)", "E[2k+2]((x+1)/2)"};
  const char* nu_id[] = {"Hn_E2k_poly", "Hn_E2k+1_poly", "Hn_E2k+2_poly"};
  for (long nu = 0; nu <= 2; ++nu) {
    out.push_back(all_n(nu_id[nu], nu_seq[nu], S::BinomN1, constant(nu_rows[static_cast<std::size_t>(nu)].second),
                        [nu](long l) { return SequenceTerm(x2_minus(Q(2 * l + nu - 1).pow(2)) * Q(l * l, 4)); },
                        nu_rows[static_cast<std::size_t>(nu)].first,
                        "(l^2/4)(x^2-(2l+" + std::to_string(nu) + "-1)^2)", "Dilcher-Jiu, Corollary 5.2"));
  }
}

void add_odd_only_table(std::vector<ClosedFormIdentity>& out) {
  auto c = [](Q v) { return constant(SequenceTerm(std::move(v))); };
  out.push_back(odd_only("H_Ek+1", "E[k+1]", c(Q(1)),
                         [](long l) { return SequenceTerm(Q(2 * l * (2 * l + 1)).pow(2)); }, "1", "(2l)^2(2l+1)^2",
                         "Han (H8)"));
  out.push_back(odd_only("H_Ek+2(1)", "E[k+2](1)", c(Q(1, 4)),
                         [](long l) { return SequenceTerm(Q(l * (l + 1) * (2 * l + 1) * (2 * l + 1), 4)); }, "1/4",
                         "l(l+1)(2l+1)^2/4", "Han (H11)"));
  out.back().status = Status::ReportOnly;
  out.push_back(odd_only("H_0,Ek+1(1)", "0,E[k+1](1)", c(Q(1, 2)),
                         [](long l) { return SequenceTerm(Q(l * l * (2 * l - 1) * (2 * l + 1), 4)); }, "1/2",
                         "l^2(2l-1)(2l+1)/4", "Han (H9)"));
  out.push_back(odd_only("H_kEk-1(x)", "k*E[k-1](x)", c(Q(1)), [](long l) { return SequenceTerm(Q(l).pow(4)); },
                         "1", "l^4", ""));
  out.push_back(odd_only("H_kEk-1", "k*E[k-1]", c(Q(1)), [](long l) { return SequenceTerm(Q(2 * l).pow(4)); }, "1",
                         "(2l)^4", ""));
  out.push_back(odd_only("H_0,Ek+1(1)/(k+1)!", "0,E[k+1](1)/(k+1)!", c(Q(1, 2)),
                         [](long l) {
                           return SequenceTerm((Q(16) * Q(4 * l - 3) * Q(4 * l - 1).pow(2) * Q(4 * l + 1)).inverse());
                         },
                         "1/2", "1/(16(4l-3)(4l-1)^2(4l+1))", "Han (H15)"));
  out.push_back(odd_only("H_Ek+2(1)/(k+2)!", "E[k+2](1)/(k+2)!", c(Q(1, 24)),
                         [](long l) {
                           return SequenceTerm((Q(16) * Q(4 * l - 1) * Q(4 * l + 1).pow(2) * Q(4 * l + 3)).inverse());
                         },
                         "1/24", "1/(16(4l-1)(4l+1)^2(4l+3))", "Han (H14)"));
}

constexpr long kTuples[][3] = {{1, 0, 1}, {1, 0, 3}, {2, 0, 1}, {3, 1, 2}, {4, 1, 3}, {6, 1, 5}};

void add_statement_forms(std::vector<ClosedFormIdentity>& out) {
  const auto st = Category::Statement;
  out.push_back(custom(
      "Hn_Ek_fact", "E[k]", [](long n) { return SequenceTerm(sign_pow(n * (n + 1) / 2) * superfactorial(n, 2)); },
      "(-1)^C(n+1,2) prod_{l=1}^{n} l!^2", "Al-Salam-Carlitz (4.2)", st));
  auto kE = custom(
      "H_kEk-1_fact", "k*E[k-1]",
      [](long n) {
        if (n % 2 == 0) return SequenceTerm(Q(0));
        const long m = (n - 1) / 2;
        return SequenceTerm(sign_pow(m + 1) * Q(2).pow(4 * m * (m + 1)) * superfactorial(m, 8));
      },
      "H_{2m} = 0; H_{2m+1} = (-1)^(m+1) 2^(4m(m+1)) prod_{l=1}^{m} l!^8", "", st, 9);
  kE.vanishing = even_vanish;
  out.push_back(std::move(kE));
  auto kEx = custom(
      "H_kEk-1(x)_fact", "k*E[k-1](x)",
      [](long n) {
        if (n % 2 == 0) return SequenceTerm(Q(0));
        const long m = (n - 1) / 2;
        return SequenceTerm(sign_pow(m + 1) * superfactorial(m, 8));
      },
      "H_{2m} = 0; H_{2m+1} = (-1)^(m+1) prod_{l=1}^{m} l!^8", "", st, 5);
  kEx.vanishing = even_vanish;
  out.push_back(std::move(kEx));
  for (long nu = 0; nu <= 2; ++nu) {
    const std::string seq = "E[2k" + (nu ? "+" + std::to_string(nu) : std::string()) + "]((x+1)/2)";
    out.push_back(all_n(
        "Hn_E2k+nu_poly(nu=" + std::to_string(nu) + ")", seq, SignPattern::BinomN1,
        constant(SequenceTerm(euler_poly(nu).affine_substitute(Q(1, 2), Q(1, 2)))),
        [nu](long l) { return SequenceTerm(x2_minus(Q(2 * l + nu - 1).pow(2)) * Q(l * l, 4)); }, "E_nu((x+1)/2)",
        "(l^2/4)(x^2-(2l+nu-1)^2)", "Dilcher-Jiu, Corollary 5.2", st));
  }
  out.push_back(custom(
      "Hn_(2k+1)E2k_fact", "(2k+1)*E[2k]",
      [](long n) { return SequenceTerm(Q(2).pow(2 * n * (n + 1)) * superfactorial(n, 4)); },
      "2^(2n(n+1)) prod_{l=1}^{n} l!^4", "", st));
  out.push_back(custom(
      "Hn_(2^(2k+2)-1)B2k+2_fact", "(2^(2k+2)-1)*B[2k+2]",
      [](long n) { return SequenceTerm(fact(n + 1) / Q(2).pow(n + 1) * superfactorial(n, 4)); },
      "(n+1)!/2^(n+1) prod_{l=1}^{n} l!^4", "", st));
  out.push_back(custom(
      "Hn_(2k+1)B2k(1/2)_fact", "(2k+1)*B[2k](1/2)",
      [](long n) {
        Q v(1);
        for (long l = 1; l <= n; ++l) v *= fact(l).pow(8) / (fact(2 * l) * fact(2 * l + 1));
        return SequenceTerm(v);
      },
      "prod_{l=1}^{n} l!^8/((2l)!(2l+1)!)", "", st));
  out.push_back(custom(
      "Hn_(2k+3)B2k+2_fact", "(2k+3)*B[2k+2]",
      [](long n) {
        Q v = Q(2).pow(-(n + 1));
        for (long l = 1; l <= n; ++l) v *= (Q(l * (l + 1)).pow(3) / Q(4 * (2 * l + 1) * (2 * l + 1))).pow(n + 1 - l);
        return SequenceTerm(v);
      },
      "2^(-(n+1)) prod_{l=1}^{n} (l^3(l+1)^3/(4(2l+1)^2))^(n+1-l)", "", st));
}

// prod_{l=1}^{2n+1} (1/(2l+c))^(2n+2-l)
Q odd_denominator_product(long n, long c) {
  Q v(1);
  for (long l = 1; l <= 2 * n + 1; ++l) v *= Q(2 * l + c).pow(-(2 * n + 2 - l));
  return v;
}

// prod_{l=1}^{n} f(l)^(n+1-l)
template <typename F>
Q staircase(long n, F f) {
  Q v(1);
  for (long l = 1; l <= n; ++l) v *= f(l).pow(n + 1 - l);
  return v;
}

Q eq_bkp2_minus1(long n) {
  const Q poly = Q((n + 1) * (n + 2) * (n + 2) * (n + 3) + 1);
  return sign_pow(n * (n + 1) / 2) * Q(1, 6).pow(n + 1) * poly *
         staircase(n, [](long l) { return Q(l * (l + 1) * (l + 1) * (l + 2)) / Q(4 * (2 * l + 1) * (2 * l + 3)); });
}

void add_misc(std::vector<ClosedFormIdentity>& out) {
  const auto mc = Category::Misc;
  out.push_back(custom(
      "Hn_Bk/k!", "B[k]/(k)!",
      [](long n) {
        return SequenceTerm(sign_pow(n * (n + 1) / 2) * Q(n + 1) *
                            staircase(n, [](long l) { return Q(1, 4 * (2 * l - 1) * (2 * l + 1)); }));
      },
      "(-1)^C(n+1,2) (n+1) prod_{l=1}^{n} (1/(4(2l-1)(2l+1)))^(n+1-l)", "Andrews-Wimp", mc, 5));
  out.push_back(custom(
      "Hn_B2k+2/(2k+2)!", "B[2k+2]/(2k+2)!",
      [](long n) { return SequenceTerm(Q(1, 4).pow((n + 1) * (n + 1)) * odd_denominator_product(n, 1)); },
      "(1/4)^((n+1)^2) prod_{l=1}^{2n+1} (1/(2l+1))^(2n+2-l)", "Krattenthaler", mc, 5));
  out.push_back(custom(
      "Hn_B2k+4/(2k+4)!", "B[2k+4]/(2k+4)!",
      [](long n) {
        return SequenceTerm(Q(-1, 36).pow(n + 1) * Q(1, 4).pow((n + 1) * (n + 1)) * odd_denominator_product(n, 3));
      },
      "(-1/36)^(n+1) (1/4)^((n+1)^2) prod_{l=1}^{2n+1} (1/(2l+3))^(2n+2-l)", "Krattenthaler", mc, 5));
  out.push_back(custom(
      "Hn_B2k+6/(2k+6)!", "B[2k+6]/(2k+6)!",
      [](long n) {
        return SequenceTerm(Q((n + 2) * (2 * n + 5)) / (Q(3) * Q(60).pow(2 * n + 2)) *
                            Q(1, 4).pow((n + 1) * (n + 1)) * odd_denominator_product(n, 5));
      },
      "(n+2)(2n+5)/(3*60^(2n+2)) (1/4)^((n+1)^2) prod_{l=1}^{2n+1} (1/(2l+5))^(2n+2-l)", "Krattenthaler", mc, 5));
  out.push_back(custom(
      "Hn_Ek+3(1)/(k+3)!", "E[k+3](1)/(k+3)!",
      [](long n) {
        const Q tail = n % 2 == 1 ? binomial(n + 3, 2) : binomial(n + 2, 2);
        return SequenceTerm(sign_pow((n + 1) * (n + 2) / 2) * Q(1, 24).pow(n + 1) * tail *
                            staircase(n, [](long l) { return Q(1, 4 * (2 * l + 1) * (2 * l + 3)); }));
      },
      "(-1)^C(n+2,2) (1/24)^(n+1) prod_{l=1}^{n} (1/(4(2l+1)(2l+3)))^(n+1-l) * (C(n+3,2) for odd n, C(n+2,2) for "
      "even n)",
      "Han (H21)", mc, 5));
  out.push_back(custom(
      "Hn_E2k+5(1)/(2k+5)!", "E[2k+5](1)/(2k+5)!",
      [](long n) {
        return SequenceTerm((Q(2) * fact(6)).inverse().pow(n + 1) * binomial(2 * n + 4, 2) * staircase(n, [](long l) {
                              return (Q(16) * Q(4 * l + 1) * Q(4 * l + 3).pow(2) * Q(4 * l + 5)).inverse();
                            }));
      },
      "(1/(2*6!))^(n+1) C(2n+4,2) prod_{l=1}^{n} (1/(16(4l+1)(4l+3)^2(4l+5)))^(n+1-l)", "Han (H23)", mc, 5));
  out.push_back(custom(
      "Hn_E2k+7(1)/(2k+7)!", "E[2k+7](1)/(2k+7)!",
      [](long n) {
        return SequenceTerm((-(Q(5) * fact(8))).inverse().pow(n + 1) * Q(4 * n * n + 18 * n + 17, 3) *
                            binomial(2 * n + 6, 4) * staircase(n, [](long l) {
                              return (Q(16) * Q(4 * l + 3) * Q(4 * l + 5).pow(2) * Q(4 * l + 7)).inverse();
                            }));
      },
      "(-1/(5*8!))^(n+1) (4n^2+18n+17)/3 C(2n+6,4) prod_{l=1}^{n} (1/(16(4l+3)(4l+5)^2(4l+7)))^(n+1-l)", "Han (H24)",
      mc, 5));
  const std::string bk2 =
      "(-1)^C(n+1,2) (1/6)^(n+1) ((n+1)(n+2)^2(n+3)+1) prod_{l=1}^{n} (l(l+1)^2(l+2)/(4(2l+1)(2l+3)))^(n+1-l)";
  out.push_back(custom(
      "Hn_Bk+2(-1)", "B[k+2](-1)", [](long n) { return SequenceTerm(eq_bkp2_minus1(n)); }, bk2,
      "Fulmek-Krattenthaler", mc, 5));
  out.push_back(custom(
      "Hn_Bk-2Bk+1+Bk+2", "B[k]-2*B[k+1]+B[k+2]", [](long n) { return SequenceTerm(eq_bkp2_minus1(n)); }, bk2,
      "Fulmek-Krattenthaler", mc, 5));
}

std::vector<ClosedFormIdentity> build_registry() {
  std::vector<ClosedFormIdentity> out;
  add_all_n_table(out);
  add_odd_only_table(out);
  for (const auto& t : kTuples) out.push_back(diff_bernoulli(t[0], t[1], t[2]));
  for (const auto& t : kTuples) out.push_back(diff_euler(t[0], t[1], t[2]));
  for (const auto& t : kTuples) out.push_back(sum_euler(t[0], t[1], t[2]));
  for (long q : {3, 4, 6}) out.push_back(char_bernoulli(q));
  out.push_back(char_b1(4, "chi8_1"));
  out.push_back(char_b2(4, "chi8_2"));
  out.push_back(char_b1(6, "chi12_1"));
  out.push_back(char_b2(6, "chi12_2"));
  for (long s = 1; s <= 4; ++s) out.push_back(power_sum_identity(s));
  for (long s = 1; s <= 4; ++s) out.push_back(alt_power_sum_identity(s));
  add_statement_forms(out);
  add_misc(out);
  for (long a = 1; a <= 2; ++a) {
    for (long b = 1; b <= 2; ++b) {
      for (long c = 0; c <= 2; ++c) {
        for (long d = 0; d <= 2; ++d) out.push_back(fk_identity(a, b, c, d));
      }
    }
  }
  std::unordered_set<std::string> seen;
  for (const auto& c : out) {
    if (!seen.insert(c.id).second) throw Error(ErrorCode::InvalidParameters, "duplicate identity id " + c.id);
  }
  return out;
}

std::optional<ClosedFormIdentity> instantiate(const std::string& id) {
  static const std::regex tuple(R"(H_(diffB|diffE|sumE)\(q=(\d+),r=(\d+),s=(\d+)\))");
  static const std::regex single(R"(H_(Sk|Tk)\(s=(\d+)\))");
  static const std::regex fk(R"(FK\(a=(\d+),b=(\d+),c=(\d+),d=(\d+)\))");
  std::smatch m;
  auto num = [&m](int i) { return std::stol(m[i].str()); };
  if (std::regex_match(id, m, tuple)) {
    if (m[1] == "diffB") return diff_bernoulli(num(2), num(3), num(4));
    if (m[1] == "diffE") return diff_euler(num(2), num(3), num(4));
    return sum_euler(num(2), num(3), num(4));
  }
  if (std::regex_match(id, m, single)) {
    return m[1] == "Sk" ? power_sum_identity(num(2)) : alt_power_sum_identity(num(2));
  }
  if (std::regex_match(id, m, fk)) return fk_identity(num(1), num(2), num(3), num(4));
  return std::nullopt;
}

}  // namespace

const std::vector<ClosedFormIdentity>& registry() {
  static const std::vector<ClosedFormIdentity> reg = build_registry();
  return reg;
}

const ClosedFormIdentity& find_identity(std::string_view id) {
  for (const auto& c : registry()) {
    if (c.id == id) return c;
  }
  static std::mutex mutex;
  static std::map<std::string, std::unique_ptr<ClosedFormIdentity>, std::less<>> extra;
  const std::lock_guard lock(mutex);
  if (auto it = extra.find(id); it != extra.end()) return *it->second;
  auto made = instantiate(std::string(id));
  if (!made) throw Error(ErrorCode::UnknownIdentity, "unknown identity '" + std::string(id) + "'");
  auto& slot = extra[std::string(id)];
  slot = std::make_unique<ClosedFormIdentity>(std::move(*made));
  return *slot;
}

std::string parametric_id(std::string_view family, const std::map<std::string, long>& params) {
  std::string out(family);
  if (params.empty()) return out;
  out += "(";
  bool first = true;
  for (const auto& [k, v] : params) {
    if (!first) out += ",";
    out += k + "=" + std::to_string(v);
    first = false;
  }
  return out + ")";
}

}  // namespace hankeldet
