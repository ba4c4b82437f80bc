#include <gtest/gtest.h>

#include "hankeldet/closed_forms.hpp"
#include "hankeldet/error.hpp"
#include "hankeldet/hankel.hpp"
#include "hankeldet/numbers.hpp"
#include "hankeldet/orthopoly.hpp"
#include "hankeldet/sequence.hpp"
#include "oracles.hpp"

using namespace hankeldet;

namespace {

Rational Q(long p, long q = 1) { return Rational(p, q); }

const std::vector<std::string> kNondegenerate{"B_k",    "E_k",    "B[k+1]",    "B[k+2]",          "B[2k+2]",
                                              "E[2k]",  "E[k+1](1)", "(2k+1)*E[2k]", "B[2k+1](3/4)"};

std::vector<Rational> moments(const std::string& text, long count) {
  std::vector<Rational> c;
  for (const auto& t : resolve_range(parse_sequence(text), count)) c.push_back(t.as_rational());
  return c;
}

Rational brute(const std::vector<Rational>& c, long n) {
  return oracle::leibniz_det(oracle::hankel_grid(c, static_cast<std::size_t>(n)));
}

}  // namespace

TEST(Recurrence, OrderZero) {
  const RecurrenceCoeffs c = recurrence_from_moments(parse_sequence("B_k"), 0);
  ASSERT_EQ(c.s.size(), 1u);
  EXPECT_EQ(c.s[0], SequenceTerm(Q(1, 2)));
  EXPECT_TRUE(c.t.empty());
  ASSERT_EQ(c.zeta.size(), 1u);
  EXPECT_EQ(c.zeta[0], SequenceTerm(Q(1)));
}

TEST(Recurrence, OddBernoulliAtThreeQuarters) {
  const RecurrenceCoeffs c = recurrence_from_moments(parse_sequence("B[2k+1](3/4)"), 5);
  EXPECT_EQ(c.t_at(1), SequenceTerm(Q(1, 16)));
  EXPECT_EQ(c.t_at(2), SequenceTerm(Q(1)));
  EXPECT_EQ(c.t_at(3), SequenceTerm(Q(81, 16)));
  for (long n = 0; n <= 5; ++n) {
    EXPECT_EQ(c.s[static_cast<std::size_t>(n)], SequenceTerm(binomial(n + 1, 2) + Q(3, 16))) << n;
    if (n >= 1) EXPECT_EQ(c.t_at(n), SequenceTerm(Q(n).pow(4) / Q(16))) << n;
  }
  const auto c0 = resolve(parse_sequence("B[2k+1](3/4)"), 0);
  EXPECT_EQ(c0, SequenceTerm(Q(1, 4)));
  const auto m = moments("B[2k+1](3/4)", 9);
  for (long n = 0; n <= 4; ++n) EXPECT_EQ(hankel_from_recurrence(c0, c, n), SequenceTerm(brute(m, n)));
}

TEST(Recurrence, BuiltinOddBernoulli) {
  const RecurrenceCoeffs c = builtin_recurrence_bern_odd(5);
  const UniPoly x = UniPoly::x();
  EXPECT_EQ(c.s[0], SequenceTerm((x * x - UniPoly(Q(1))) * UniPoly(Q(-1, 4))));
  EXPECT_EQ(c.t_at(1), SequenceTerm((UniPoly(Q(1)) - x * x) * UniPoly(Q(1, 12))));
  for (long n = 1; n <= 5; ++n) EXPECT_EQ(c.t_at(n).eval_at(Q(1, 2)), Q(n).pow(4) / Q(16));
  // Agrees with extraction at several points.
  for (const Rational& x0 : {Q(1, 2), Q(5, 3), Q(-2, 7)}) {
    const RecurrenceCoeffs e = recurrence_from_moments(parse_sequence("B[2k+1]((x+1)/2)"), 4, x0);
    for (long n = 0; n <= 4; ++n) {
      EXPECT_EQ(e.s[static_cast<std::size_t>(n)], SequenceTerm(c.s[static_cast<std::size_t>(n)].eval_at(x0)));
      if (n >= 1) EXPECT_EQ(e.t_at(n), SequenceTerm(c.t_at(n).eval_at(x0)));
    }
  }
}

TEST(RecurrenceProperty, ProductFormMatchesDeterminants) {
  for (const auto& text : kNondegenerate) {
    const auto m = moments(text, 12);
    const RecurrenceCoeffs c = recurrence_from_terms(m, 5);
    for (long n = 0; n <= 5; ++n) {
      const Rational h = det_gauss([&] {
        Matrix<Rational> a(static_cast<std::size_t>(n + 1));
        for (long i = 0; i <= n; ++i) {
          for (long j = 0; j <= n; ++j) a(i, j) = m[static_cast<std::size_t>(i + j)];
        }
        return a;
      }());
      EXPECT_EQ(hankel_from_recurrence(SequenceTerm(m[0]), c, n), SequenceTerm(h)) << text << " n=" << n;
      const Rational h_prev = n == 0 ? Q(1) : brute(m, n - 1);
      EXPECT_EQ(c.zeta[static_cast<std::size_t>(n)] * SequenceTerm(h_prev), SequenceTerm(h)) << text;
      if (n >= 1) {
        const Rational h_prev2 = n == 1 ? Q(1) : brute(m, n - 2);
        EXPECT_EQ(c.t_at(n), SequenceTerm(h_prev2 * h / (h_prev * h_prev))) << text;
      }
    }
  }
}

TEST(RecurrenceProperty, Orthogonality) {
  for (const auto& text : kNondegenerate) {
    const auto m = moments(text, 12);
    const MonicOPS ops = monic_ops(parse_sequence(text), 4);
    ASSERT_EQ(ops.p.size(), 5u);
    for (long n = 0; n <= 4; ++n) {
      const UniPoly& p = ops.p[static_cast<std::size_t>(n)];
      EXPECT_EQ(p.degree(), n);
      EXPECT_EQ(p.leading(), Q(1));
      for (long r = 0; r < n; ++r) {
        EXPECT_TRUE(moment_functional(UniPoly::monomial(Q(1), static_cast<std::size_t>(r)) * p, m).is_zero())
            << text << " n=" << n << " r=" << r;
      }
      EXPECT_FALSE(moment_functional(UniPoly::monomial(Q(1), static_cast<std::size_t>(n)) * p, m).is_zero());
    }
  }
}

TEST(RecurrenceProperty, BorderedDeterminantMatchesRecurrence) {
  for (const auto& text : kNondegenerate) {
    const auto m = moments(text, 14);
    const MonicOPS bordered = monic_ops_bordered(m, 6);
    const MonicOPS rec = monic_ops(parse_sequence(text), 6);
    EXPECT_EQ(bordered.p, rec.p) << text;
  }
  EXPECT_THROW(monic_ops_bordered(moments("E_k", 20), 7), Error);
}

TEST(Recurrence, FirstPolynomials) {
  const MonicOPS ops = monic_ops(parse_sequence("E_k"), 3);
  EXPECT_EQ(ops.p[0], UniPoly(Q(1)));
  EXPECT_EQ(ops.p[1], UniPoly::x());
  const auto e = moments("E_k", 8);
  for (long r = 0; r <= 2; ++r) {
    EXPECT_TRUE(moment_functional(UniPoly::monomial(Q(1), static_cast<std::size_t>(r)) * ops.p[3], e).is_zero());
  }
}

TEST(Recurrence, DegenerateMoments) {
  try {
    recurrence_from_moments(parse_sequence("kE_{k-1}"), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateMoments);
    EXPECT_EQ(e.index(), 0);
  }
  try {
    recurrence_from_moments(parse_sequence("E[k+1]"), 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateMoments);
    EXPECT_EQ(e.index(), 0);
  }
  // c = 1, 0, 0, ...: H_0 = 1, H_1 = 0.
  try {
    recurrence_from_terms({Q(1), Q(0), Q(0), Q(0), Q(0), Q(0)}, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateMoments);
    EXPECT_EQ(e.index(), 1);
  }
  EXPECT_THROW(recurrence_from_moments(parse_sequence("B[k](x)"), 2), Error);
  EXPECT_THROW(hankel_from_recurrence(SequenceTerm(Q(1)), recurrence_from_moments(parse_sequence("E_k"), 1), 3),
               Error);
}

TEST(DerivativeLimit, Examples) {
  const auto& routes = derivative_routes();
  ASSERT_EQ(routes.size(), 4u);
  EXPECT_EQ(derivative_route_value(routes[0], 1), Q(16));
  const oracle::Grid<Rational> g{{1, -3}, {-3, 25}};
  EXPECT_EQ(oracle::leibniz_det(g), Q(16));
  EXPECT_EQ(derivative_route_value(routes[1], 1), Q(1, 2));
  EXPECT_EQ(derivative_limit_hankel(parse_sequence("B[2k+1]((x+1)/2)"), Q(0), 0), Q(1, 2));
}

TEST(DerivativeLimit, AgreesWithDirectDerivativeSequence) {
  for (const auto& [text, x0] : std::vector<std::pair<std::string, Rational>>{
           {"E[2k+1]((x+1)/2)", Q(0)}, {"E[2k+2]((x+1)/2)", Q(1)}, {"B[2k+1]((x+1)/2)", Q(0)},
           {"B[2k+3]((x+1)/2)", Q(-1)}}) {
    const SequenceSpec family = parse_sequence(text);
    const auto a = resolve_range(family, 7);
    std::vector<Rational> d;
    for (const auto& t : a) d.push_back(t.as_poly().derivative()(x0));
    for (long n = 0; n <= 3; ++n) {
      EXPECT_EQ(derivative_limit_hankel(family, x0, n), brute(d, n)) << text << " n=" << n;
    }
  }
}

TEST(DerivativeLimit, Errors) {
  try {
    derivative_limit_hankel(parse_sequence("E[2k]((x+1)/2)"), Q(0), 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CommonRootViolated);
    EXPECT_EQ(e.index(), 0);
  }
  EXPECT_THROW(derivative_limit_hankel(parse_sequence("E_k"), Q(0), 1), Error);
}

TEST(ShiftLimit, Values) {
  EXPECT_EQ(shift_limit_from_recurrence(2), Q(3, 10));
  EXPECT_EQ(shift_limit_from_recurrence(3), Q(-36, 35));
  for (long n = 2; n <= 6; ++n) EXPECT_EQ(shift_limit_from_recurrence(n), shift_limit_closed_form(n)) << n;
}
