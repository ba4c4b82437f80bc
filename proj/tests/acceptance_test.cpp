// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "hankeldet/closed_forms.hpp"
#include "hankeldet/hankel.hpp"
#include "hankeldet/numbers.hpp"
#include "hankeldet/orthopoly.hpp"
#include "hankeldet/sequence.hpp"
#include "hankeldet/verify.hpp"
#include "oracles.hpp"

using namespace hankeldet;

namespace {

Rational Q(long p, long q = 1) { return Rational(p, q); }

struct Check {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

const std::vector<std::string> kTuples{"(q=1,r=0,s=1)", "(q=1,r=0,s=3)", "(q=2,r=0,s=1)",
                                       "(q=3,r=1,s=2)", "(q=4,r=1,s=3)", "(q=6,r=1,s=5)"};

// Runs the harness on `ids` up to `max` and requires every asserted report to pass.
void expect_verified(Check& c, const std::vector<std::string>& ids, long max, bool need_claims = false) {
  VerifyOptions opts;
  opts.ids = ids;
  opts.max_index = max;
  for (const auto& r : verify_all(opts)) {
    c.expect(r.error.empty(), r.id + ": " + r.error);
    c.expect(r.passed(), r.id + " mismatch");
    c.expect(static_cast<long>(r.records.size()) == max + 1, r.id + " incomplete");
    if (need_claims) {
      bool any = false;
      for (const auto& rec : r.records) any = any || rec.claimed_zero.has_value();
      c.expect(any, r.id + " carries no vanishing claim");
    }
  }
}

Rational product_of_factorials(long n, long power) {
  Rational p(1);
  for (long l = 1; l <= n; ++l) p = p * factorial(l).pow(power);
  return p;
}

Rational sign(long e) { return e % 2 == 0 ? Q(1) : Q(-1); }

Check euler_numbers() {
  Check c;
  for (long n = 0; n <= 8; ++n) {
    const SequenceTerm brute = hankel_det(parse_sequence("E_k"), n).value;
    const Rational expected = sign(n * (n + 1) / 2) * product_of_factorials(n, 2);
    c.expect(brute == SequenceTerm(expected), "H_" + std::to_string(n) + "(E_k)");
    c.expect(eval_closed_form("Hn_Ek", n) == brute, "registry Hn_Ek");
  }
  return c;
}

Check derivative_sequence() {
  Check c;
  for (long m = 0; m <= 3; ++m) {
    c.expect(hankel_det(parse_sequence("kE_{k-1}"), 2 * m).value.is_zero(), "even index nonzero");
    const Rational expected = sign(m + 1) * Q(2).pow(4 * m * (m + 1)) * product_of_factorials(m, 8);
    c.expect(hankel_det(parse_sequence("kE_{k-1}"), 2 * m + 1).value == SequenceTerm(expected),
             "H_" + std::to_string(2 * m + 1) + "(kE_{k-1})");
  }
  expect_verified(c, {"H_kEk-1", "H_kEk-1_fact"}, 7);
  expect_verified(c, {"H_kEk-1(x)", "H_kEk-1(x)_fact"}, 5);
  return c;
}

Check odd_bernoulli_polynomials() {
  Check c;
  expect_verified(c, {"Hn_B2k+1_poly"}, 5);
  const VerificationReport r = verify_identity("Hn_B2k+1_poly", 5);
  for (const auto& rec : r.records) c.expect(rec.oracle.find('x') != std::string::npos || rec.index == 0, "not symbolic");
  return c;
}

Check euler_polynomials_at_half_shift() {
  Check c;
  expect_verified(c, {"Hn_E2k+nu_poly(nu=0)", "Hn_E2k+nu_poly(nu=1)", "Hn_E2k+nu_poly(nu=2)", "Hn_E2k_poly",
                      "Hn_E2k+1_poly", "Hn_E2k+2_poly"},
                  5);
  return c;
}

Check bernoulli_differences() {
  Check c;
  std::vector<std::string> ids;
  for (const auto& t : kTuples) ids.push_back("H_diffB" + t);
  expect_verified(c, ids, 7, true);
  for (const auto& t : kTuples) {
    const SequenceSpec spec = parse_sequence("diffB" + t + "[k](x)");
    for (long m = 0; m <= 3; ++m) c.expect(hankel_det(spec, 2 * m).value.is_zero(), "H_2m(diffB" + t + ")");
  }
  return c;
}

Check euler_differences() {
  Check c;
  std::vector<std::string> ids;
  for (const auto& t : kTuples) {
    ids.push_back("H_diffE" + t);
    ids.push_back("H_sumE" + t);
  }
  expect_verified(c, ids, 7);
  return c;
}

Check characters() {
  Check c;
  expect_verified(c, {"H_Bchi3", "H_Bchi4", "H_Bchi6"}, 7);
  expect_verified(c, {"H_b1(q=4)", "H_b2(q=4)", "H_b1(q=6)", "H_b2(q=6)"}, 3);
  return c;
}

Check power_sums() {
  Check c;
  for (long s = 1; s <= 4; ++s) {
    expect_verified(c, {"H_Sk(s=" + std::to_string(s) + ")", "H_Tk(s=" + std::to_string(s) + ")"}, 9, true);
    // Onset of vanishing for the odd-index determinants of S_k(s).
    for (long m = 0; m <= 4; ++m) {
      const bool zero = hankel_det(parse_sequence("S(s=" + std::to_string(s) + ")[k]"), 2 * m + 1).value.is_zero();
      c.expect(zero == (m >= s), "S onset s=" + std::to_string(s));
    }
  }
  return c;
}

Check derivative_routes_agree() {
  Check c;
  for (const auto& route : derivative_routes()) {
    for (long n = 0; n <= 5; ++n) {
      const SequenceTerm direct = hankel_det(parse_sequence(route.target), n).value;
      const Rational limit = derivative_route_value(route, n);
      const SequenceTerm closed = eval_closed_form(route.identity_id, n);
      c.expect(direct == SequenceTerm(limit), route.identity_id + " limit vs direct n=" + std::to_string(n));
      c.expect(direct == closed, route.identity_id + " closed form n=" + std::to_string(n));
    }
  }
  c.expect(derivative_routes().size() == 4, "route count");
  return c;
}

Check shift_machinery() {
  Check c;
  for (const char* text : {"B_k", "E_k"}) {
    for (long n = 0; n <= 4; ++n) c.expect(shift_relation_check(parse_sequence(text), n).holds, text);
  }
  const SequenceSpec odd = parse_sequence("B[2k+1]((x+1)/2)");
  for (long n = 0; n <= 3; ++n) {
    c.expect(shift_relation_check(odd, builtin_recurrence_bern_odd(n), n).holds, "symbolic n=" + std::to_string(n));
  }
  c.expect(shift_limit_from_recurrence(2) == Q(3, 10), "limit 3/10");
  c.expect(shift_limit_from_recurrence(3) == Q(-36, 35), "limit -36/35");
  for (long n = 2; n <= 6; ++n) {
    c.expect(shift_limit_from_recurrence(n) == shift_limit_closed_form(n), "closed limit n=" + std::to_string(n));
  }
  return c;
}

Check tables() {
  Check c;
  std::vector<std::string> scalar_rows, poly_rows, odd_rows;
  for (const auto& id : registry()) {
    if (id.category == Category::TableAllN) (id.is_polynomial() ? poly_rows : scalar_rows).push_back(id.id);
    if (id.category == Category::TableOddOnly) odd_rows.push_back(id.id);
  }
  for (const auto& t : kTuples) odd_rows.push_back("H_diffE" + t);
  c.expect(scalar_rows.size() + poly_rows.size() == 25, "all-n row count");
  expect_verified(c, scalar_rows, 6);
  expect_verified(c, poly_rows, 4);
  expect_verified(c, odd_rows, 7);

  const VerificationReport r = verify_identity("H_Ek+2(1)", 7);
  c.expect(r.status == Status::ReportOnly && r.records.size() == 8, "report-only row");
  std::cout << "       report-only H_Ek+2(1):";
  for (const auto& rec : r.records) std::cout << " n=" << rec.index << (rec.match ? ":agree" : ":differ");
  std::cout << "\n";
  return c;
}

Check misc_and_fk() {
  Check c;
  std::vector<std::string> misc, fk;
  for (const auto& id : registry()) {
    if (id.category == Category::Misc) misc.push_back(id.id);
    if (id.category == Category::Umbral) fk.push_back(id.id);
  }
  c.expect(misc.size() == 9, "misc count");
  c.expect(fk.size() == 36, "FK count");
  expect_verified(c, misc, 5);
  expect_verified(c, fk, 3);
  for (long n = 0; n <= 3; ++n) {
    c.expect(SequenceTerm(fk_closed_form(1, 1, 0, 0, n)) == eval_closed_form("Hn_Bk", n), "(1,1,0,0)");
    c.expect(SequenceTerm(fk_closed_form(1, 1, 1, 1, n)) == eval_closed_form("Hn_Bk+2", n), "(1,1,1,1)");
    c.expect(SequenceTerm(fk_closed_form(1, 1, 1, 0, n)) == SequenceTerm(sign(n + 1)) * eval_closed_form("Hn_Bk+1", n),
             "(1,1,1,0)");
  }
  return c;
}

Check structural() {
  Check c;
  const UniPoly x = UniPoly::x();
  for (const char* text : {"B_k", "E_k"}) {
    const auto terms = resolve_range(parse_sequence(text), 7);
    std::vector<SequenceTerm> scaled;
    for (std::size_t k = 0; k < terms.size(); ++k) {
      scaled.emplace_back(x.pow(static_cast<unsigned>(k)) * UniPoly(terms[k].as_rational()));
    }
    for (long n = 0; n <= 3; ++n) {
      c.expect(hankel_det(scaled, n).value ==
                   SequenceTerm(x.pow(static_cast<unsigned>(n * (n + 1)))) * hankel_det(terms, n).value,
               std::string("scaling ") + text);
    }
  }
  for (long n = 0; n <= 3; ++n) {
    c.expect(hankel_det(parse_sequence("B[k](x)"), n).value == hankel_det(parse_sequence("B_k"), n).value,
             "binomial transform B");
    c.expect(hankel_det(parse_sequence("E[k](x)"), n).value ==
                 SequenceTerm(Q(2).pow(-n * (n + 1))) * hankel_det(parse_sequence("E_k"), n).value,
             "binomial transform E");
  }
  oracle::Gen g(2024);
  for (std::size_t dim = 1; dim <= 6; ++dim) {
    for (int parity = 0; parity <= 1; ++parity) {
      Matrix<SequenceTerm> m(dim);
      Matrix<Rational> r(dim);
      for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
          r(i, j) = static_cast<int>((i + j) % 2) == parity ? g.rational() : Q(0);
          m(i, j) = SequenceTerm(r(i, j));
        }
      }
      const auto f = checkerboard_split(m);
      c.expect(f.total == SequenceTerm(det_gauss(r)), "checkerboard dim " + std::to_string(dim));
      if (parity == 1 && dim % 2 == 0) c.expect(f.sign == (dim / 2 % 2 == 0 ? 1 : -1), "checkerboard sign");
    }
  }
  for (const char* text : {"diffB(q=1,r=0,s=1)[k](0)", "diffB(q=1,r=0,s=3)[k](-1)", "diffB(q=2,r=0,s=1)[k](1/2)",
                           "diffB(q=3,r=1,s=2)[k](0)", "diffB(q=4,r=1,s=3)[k](0)", "diffB(q=6,r=1,s=5)[k](0)"}) {
    for (long n = 0; n <= 5; ++n) {
      const HankelMatrix m = hankel_matrix(parse_sequence(text), n);
      c.expect(checkerboard_split(m).total == det_exact(m, DetAlgorithm::RationalGauss).value,
               std::string("centered checkerboard ") + text);
    }
  }
  for (long n = 0; n <= 10; ++n) {
    Rational lhs(1), rhs(1);
    for (long l = 1; l <= n; ++l) {
      lhs = lhs * factorial(l);
      rhs = rhs * Q(l).pow(n + 1 - l);
    }
    c.expect(lhs == rhs, "factorial product");
    for (long step : {2, 4}) {
      for (long nu = 0; nu < step; ++nu) {
        if (step == 2 && nu > 2) continue;
        Rational l2(1), r2 = factorial(nu).pow(n);
        for (long l = 1; l <= n; ++l) {
          l2 = l2 * factorial(step * l + nu);
          Rational block(1);
          for (long i = step * l - step + 1 + nu; i <= step * l + nu; ++i) block = block * Q(i);
          r2 = r2 * block.pow(n + 1 - l);
        }
        c.expect(l2 == r2, "product conversion step " + std::to_string(step));
      }
    }
  }
  return c;
}

Check bridges() {
  Check c;
  auto half_shift = [](const UniPoly& p, const Rational& beta) { return p.affine_substitute(Q(1, 2), beta); };
  for (long n = 1; n <= 12; ++n) {
    c.expect(euler_poly(n - 1) * UniPoly(Q(n)) ==
                 (half_shift(bernoulli_poly(n), Q(1, 2)) - half_shift(bernoulli_poly(n), Q(0))) * UniPoly(Q(2).pow(n)),
             "E_{n-1} bridge");
    c.expect(Q(2 * n + 1) * euler_number(2 * n) == Q(2).pow(4 * n + 2) * bernoulli_poly(2 * n + 1)(Q(3, 4)),
             "(2n+1)E_2n bridge");
    c.expect(Q(n + 1) * euler_poly(n)(Q(1)) == Q(2) * (Q(2).pow(n + 1) - Q(1)) * bernoulli_number(n + 1),
             "E_n(1) bridge");
  }
  for (long k = 0; 2 * k + 2 <= 12; ++k) {
    c.expect(bernoulli_poly(2 * k)(Q(1, 2)) == (Q(2).pow(1 - 2 * k) - Q(1)) * bernoulli_number(2 * k), "B_2k(1/2)");
    c.expect((Q(2).pow(2 * k + 2) - Q(1)) * bernoulli_number(2 * k + 2) == Q(k + 1) * euler_poly(2 * k + 1)(Q(1)),
             "(2^(2k+2)-1)B");
  }
  for (long k = 1; k <= 11; ++k) {
    c.expect(euler_poly(k)(Q(1)) == Q(2, k + 1) * (Q(2).pow(k + 1) - Q(1)) * bernoulli_number(k + 1), "E_k(1)");
  }
  const auto zz = oracle::zigzag_boustrophedon(12);
  for (long n = 0; n <= 12; ++n) {
    c.expect(zigzag_number(n) == Rational(zz[static_cast<std::size_t>(n)]), "zigzag oracle");
    const long k = n / 2;
    if (n % 2 == 0) {
      c.expect(zigzag_number(n) == sign(k) * euler_number(n), "even zigzag");
    } else {
      c.expect(zigzag_number(n) == sign(k) * Q(2).pow(n) * euler_poly(n)(Q(1)), "odd zigzag");
    }
  }
  for (long k = 1; 2 * k - 1 <= 12; ++k) {
    c.expect(tangent_number(k) == sign(k - 1) * Q(2).pow(2 * k - 1) * euler_poly(2 * k - 1)(Q(1)), "tangent");
    c.expect(tangent_number(k) == zigzag_number(2 * k - 1), "tangent as zigzag");
  }
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria{
      {"Euler numbers: H_n(E_k), n <= 8", euler_numbers},
      {"derivative sequence kE_{k-1} and its x-version", derivative_sequence},
      {"odd Bernoulli polynomials at (x+1)/2, n <= 5", odd_bernoulli_polynomials},
      {"Euler polynomials E_{2k+nu}((x+1)/2), nu = 0,1,2", euler_polynomials_at_half_shift},
      {"Bernoulli differences b_k^-(q,r,s;x)", bernoulli_differences},
      {"Euler differences and sums e_k^-(q,r,s;x), e_k^+", euler_differences},
      {"character Bernoulli numbers", characters},
      {"power sums and alternating power sums, s = 1..4", power_sums},
      {"derivative method: direct vs limit vs closed form", derivative_routes_agree},
      {"shift relation, limits and closed limit product", shift_machinery},
      {"all-n and odd-only tables", tables},
      {"miscellaneous identities and Fulmek-Krattenthaler family", misc_and_fk},
      {"structural properties", structural},
      {"cross-family bridges, indices <= 12", bridges},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Check c;
    try {
      c = criteria[i].second();
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (c.ok ? "[PASS] " : "[FAIL] ") << (i + 1) << ". " << criteria[i].first << " (" << secs << " s)";
    if (!c.ok) std::cout << "  -- " << c.detail;
    std::cout << std::endl;
    failures += c.ok ? 0 : 1;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
