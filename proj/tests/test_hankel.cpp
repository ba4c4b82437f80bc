#include <gtest/gtest.h>

#include "hankeldet/error.hpp"
#include "hankeldet/hankel.hpp"
#include "hankeldet/numbers.hpp"
#include "hankeldet/orthopoly.hpp"
#include "hankeldet/sequence.hpp"
#include "oracles.hpp"

using namespace hankeldet;

namespace {

Rational Q(long p, long q = 1) { return Rational(p, q); }

Matrix<Rational> to_matrix(const oracle::Grid<Rational>& g) {
  Matrix<Rational> m(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) m(i, j) = g[i][j];
  }
  return m;
}

Matrix<SequenceTerm> to_terms(const oracle::Grid<Rational>& g) {
  Matrix<SequenceTerm> m(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) m(i, j) = SequenceTerm(g[i][j]);
  }
  return m;
}

std::vector<SequenceTerm> as_terms(const std::vector<Rational>& c) { return {c.begin(), c.end()}; }

template <typename T>
ErrorCode code_of(T&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::ParseError;
}

}  // namespace

TEST(HankelMatrix, Construction) {
  const Matrix<SequenceTerm> e = hankel_matrix(parse_sequence("E_k"), 1).dense();
  EXPECT_EQ(e, Matrix<SequenceTerm>(2, {Q(1), Q(0), Q(0), Q(-1)}));
  const Matrix<SequenceTerm> d = hankel_matrix(parse_sequence("kE_{k-1}"), 1).dense();
  EXPECT_EQ(d, Matrix<SequenceTerm>(2, {Q(0), Q(1), Q(1), Q(0)}));
  const HankelMatrix m0 = hankel_matrix(parse_sequence("B_k"), 0);
  EXPECT_EQ(m0.size(), 1u);
  EXPECT_EQ(m0.entry(0, 0), SequenceTerm(Q(1)));
  const HankelMatrix m5 = hankel_matrix(parse_sequence("B[k](x)"), 5);
  EXPECT_TRUE(m5.is_polynomial());
  for (std::size_t i = 0; i < m5.size(); ++i) {
    for (std::size_t j = 0; j < m5.size(); ++j) EXPECT_EQ(m5.entry(i, j), m5.antidiagonals()[i + j]);
  }
  EXPECT_THROW(HankelMatrix(std::vector<SequenceTerm>{Q(1), Q(2)}), Error);
}

TEST(HankelDet, Examples) {
  EXPECT_EQ(hankel_det(parse_sequence("E_k"), 1).value, SequenceTerm(Q(-1)));
  EXPECT_EQ(hankel_det(parse_sequence("E_k"), 2).value, SequenceTerm(Q(-4)));
  EXPECT_EQ(hankel_det(parse_sequence("B_k"), 1).value, SequenceTerm(Q(-1, 12)));
  EXPECT_EQ(hankel_det(parse_sequence("kE_{k-1}"), 0).value, SequenceTerm(Q(0)));
  EXPECT_EQ(hankel_det(parse_sequence("kE_{k-1}"), 1).value, SequenceTerm(Q(-1)));
  // Settled by the 4x4 brute force on 0, 1, 0, -3, 0, 25, 0.
  EXPECT_EQ(hankel_det(parse_sequence("kE_{k-1}"), 3).value, SequenceTerm(Q(256)));
  const oracle::Grid<Rational> g{{0, 1, 0, -3}, {1, 0, -3, 0}, {0, -3, 0, 25}, {-3, 0, 25, 0}};
  EXPECT_EQ(oracle::leibniz_det(g), Q(256));

  const UniPoly x = UniPoly::x();
  const UniPoly expected = x.pow(4) * UniPoly(Q(-1, 48)) + x.pow(2) * UniPoly(Q(1, 48));
  const DetResult poly = hankel_det(parse_sequence("B[2k+1]((x+1)/2)"), 1);
  EXPECT_EQ(poly.value, SequenceTerm(expected));
  EXPECT_EQ(poly.algorithm, DetAlgorithm::FractionFreeBareiss);
  EXPECT_EQ(hankel_det(parse_sequence("E_k"), 3).algorithm, DetAlgorithm::RationalGauss);
}

TEST(HankelDet, AllAlgorithmsAgreeOnEuler) {
  const HankelMatrix m = hankel_matrix(parse_sequence("E_k"), 4);
  for (auto alg : {DetAlgorithm::RationalGauss, DetAlgorithm::FractionFreeBareiss, DetAlgorithm::CheckerboardSplit,
                   DetAlgorithm::RecurrenceProduct}) {
    const DetResult r = det_exact(m, alg);
    EXPECT_EQ(r.value, SequenceTerm(Q(82944))) << to_string(alg);
    EXPECT_EQ(r.algorithm, alg);
  }
  EXPECT_EQ(parse_det_algorithm("bareiss"), DetAlgorithm::FractionFreeBareiss);
  EXPECT_EQ(parse_det_algorithm("RecurrenceProduct"), DetAlgorithm::RecurrenceProduct);
  EXPECT_THROW(parse_det_algorithm("lu"), Error);
}

TEST(HankelDetProperty, AlgorithmAgreementOnRandomHankel) {
  oracle::Gen g(101);
  for (int trial = 0; trial < 60; ++trial) {
    const long n = g.integer(0, 6);
    std::vector<Rational> c(static_cast<std::size_t>(2 * n + 1));
    for (auto& v : c) v = g.integer(0, 3) == 0 ? Q(0) : g.rational(9, 5);
    const auto grid = oracle::hankel_grid(c, static_cast<std::size_t>(n));
    const Rational gauss = det_gauss(to_matrix(grid));
    EXPECT_EQ(det_bareiss(to_matrix(grid)), gauss);
    EXPECT_EQ(hankel_det(as_terms(c), n).value, SequenceTerm(gauss));
    if (n <= 4) {
      EXPECT_EQ(oracle::cofactor_det(grid), gauss);
      EXPECT_EQ(oracle::leibniz_det(grid), gauss);
    }
  }
}

TEST(HankelDetProperty, PolynomialBareissMatchesLeibniz) {
  oracle::Gen g(102);
  for (int trial = 0; trial < 25; ++trial) {
    const long n = g.integer(0, 3);
    std::vector<UniPoly> c(static_cast<std::size_t>(2 * n + 1));
    for (auto& v : c) v = g.poly(3, 5);
    const auto grid = oracle::hankel_grid(c, static_cast<std::size_t>(n));
    Matrix<UniPoly> m(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
      for (std::size_t j = 0; j < grid.size(); ++j) m(i, j) = grid[i][j];
    }
    const UniPoly expected = oracle::leibniz_det(grid);
    EXPECT_EQ(det_bareiss(m), expected);
    const std::vector<SequenceTerm> terms(c.begin(), c.end());
    EXPECT_EQ(hankel_det(terms, n).value, SequenceTerm(expected));
  }
}

TEST(HankelDetProperty, SingularColumnsHandled) {
  const oracle::Grid<Rational> g{{0, 0, 1}, {0, 0, 2}, {3, 4, 5}};
  EXPECT_EQ(det_gauss(to_matrix(g)), Q(0));
  EXPECT_EQ(det_bareiss(to_matrix(g)), Q(0));
  const oracle::Grid<Rational> p{{0, 2, 1}, {1, 0, 2}, {3, 4, 5}};
  EXPECT_EQ(det_gauss(to_matrix(p)), oracle::leibniz_det(p));
  EXPECT_EQ(det_bareiss(to_matrix(p)), oracle::leibniz_det(p));
}

TEST(HankelDetProperty, ScalingLaw) {
  const UniPoly x = UniPoly::x();
  for (const char* text : {"B_k", "E_k"}) {
    const auto c = resolve_range(parse_sequence(text), 7);
    std::vector<SequenceTerm> scaled;
    for (std::size_t k = 0; k < c.size(); ++k) {
      scaled.emplace_back(x.pow(static_cast<unsigned>(k)) * UniPoly(c[k].as_rational()));
    }
    for (long n = 0; n <= 3; ++n) {
      const SequenceTerm lhs = hankel_det(scaled, n).value;
      const SequenceTerm rhs = SequenceTerm(x.pow(static_cast<unsigned>(n * (n + 1)))) * hankel_det(c, n).value;
      EXPECT_EQ(lhs, rhs) << text << " n=" << n;
    }
  }
}

TEST(HankelDetProperty, BinomialTransformInvariance) {
  for (long n = 0; n <= 3; ++n) {
    EXPECT_EQ(hankel_det(parse_sequence("B[k](x)"), n).value, hankel_det(parse_sequence("B_k"), n).value);
    const Rational scale = Q(2).pow(-n * (n + 1));
    EXPECT_EQ(hankel_det(parse_sequence("E[k](x)"), n).value,
              SequenceTerm(scale) * hankel_det(parse_sequence("E_k"), n).value);
  }
  oracle::Gen g(103);
  const UniPoly x = UniPoly::x();
  for (int trial = 0; trial < 10; ++trial) {
    const long n = g.integer(0, 3);
    std::vector<Rational> c(static_cast<std::size_t>(2 * n + 1));
    for (auto& v : c) v = g.rational();
    std::vector<SequenceTerm> shifted;
    for (std::size_t k = 0; k < c.size(); ++k) {
      UniPoly sum;
      for (std::size_t j = 0; j <= k; ++j) {
        sum = sum + x.pow(static_cast<unsigned>(k - j)) *
                        UniPoly(binomial(static_cast<long>(k), static_cast<long>(j)) * c[j]);
      }
      shifted.emplace_back(sum);
    }
    EXPECT_EQ(hankel_det(shifted, n).value, hankel_det(as_terms(c), n).value);
  }
}

TEST(HankelDetProperty, ScalarMultiple) {
  oracle::Gen g(104);
  for (int trial = 0; trial < 40; ++trial) {
    const long n = g.integer(0, 4);
    const Rational lambda = g.nonzero_rational();
    oracle::Grid<Rational> a(static_cast<std::size_t>(n + 1), std::vector<Rational>(static_cast<std::size_t>(n + 1)));
    for (auto& row : a) {
      for (auto& v : row) v = g.rational();
    }
    auto scaled = a;
    for (auto& row : scaled) {
      for (auto& v : row) v = v * lambda;
    }
    EXPECT_EQ(det_gauss(to_matrix(scaled)), lambda.pow(n + 1) * det_gauss(to_matrix(a)));
  }
}

TEST(Checkerboard, Examples) {
  const oracle::Grid<Rational> two{{0, 7}, {3, 0}};
  const auto f2 = checkerboard_split(to_terms(two));
  EXPECT_FALSE(f2.even_support);
  EXPECT_EQ(f2.total, SequenceTerm(Q(-21)));

  const oracle::Grid<Rational> three{{0, 1, 0}, {2, 0, 3}, {0, 4, 0}};
  const auto f3 = checkerboard_split(to_terms(three));
  EXPECT_TRUE(f3.total.is_zero());
  EXPECT_EQ(oracle::leibniz_det(three), Q(0));

  const oracle::Grid<Rational> four{{1, 0, 2, 0}, {0, 3, 0, 5}, {7, 0, 11, 0}, {0, 13, 0, 17}};
  const auto f4 = checkerboard_split(to_terms(four));
  EXPECT_TRUE(f4.even_support);
  EXPECT_EQ(f4.first_det, SequenceTerm(Q(1 * 11 - 2 * 7)));
  EXPECT_EQ(f4.second_det, SequenceTerm(Q(3 * 17 - 5 * 13)));
  EXPECT_EQ(f4.total, SequenceTerm(oracle::leibniz_det(four)));
}

TEST(Checkerboard, OddSupportSignOnEvenDimensions) {
  oracle::Gen g(105);
  for (std::size_t dim = 2; dim <= 6; dim += 2) {
    for (int trial = 0; trial < 10; ++trial) {
      oracle::Grid<Rational> a(dim, std::vector<Rational>(dim));
      for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) a[i][j] = (i + j) % 2 == 1 ? g.rational() : Q(0);
      }
      const auto f = checkerboard_split(to_terms(a));
      EXPECT_EQ(f.sign, dim / 2 % 2 == 0 ? 1 : -1);
      EXPECT_EQ(f.total, SequenceTerm(det_gauss(to_matrix(a))));
    }
  }
}

TEST(Checkerboard, NotCheckerboard) {
  const oracle::Grid<Rational> a{{1, 1}, {1, 1}};
  EXPECT_EQ(code_of([&] { checkerboard_split(to_terms(a)); }), ErrorCode::NotCheckerboard);
  EXPECT_EQ(code_of([] { det_exact(hankel_matrix(parse_sequence("B_k"), 3), DetAlgorithm::CheckerboardSplit); }),
            ErrorCode::NotCheckerboard);
}

TEST(Checkerboard, ReassemblyOnCenteredDifferences) {
  const std::vector<std::string> specs{
      "diffB(q=1,r=0,s=1)[k](0)",   "diffB(q=1,r=0,s=3)[k](-1)", "diffB(q=2,r=0,s=1)[k](1/2)",
      "diffB(q=3,r=1,s=2)[k](0)",   "diffB(q=4,r=1,s=3)[k](0)",  "diffB(q=6,r=1,s=5)[k](0)",
  };
  for (const auto& text : specs) {
    for (long n = 0; n <= 5; ++n) {
      const HankelMatrix m = hankel_matrix(parse_sequence(text), n);
      const auto f = checkerboard_split(m);
      if (n >= 1) EXPECT_FALSE(f.even_support) << text;
      EXPECT_EQ(f.total, det_exact(m, DetAlgorithm::RationalGauss).value) << text << " n=" << n;
      EXPECT_EQ(det_exact(m, DetAlgorithm::CheckerboardSplit).value, f.total);
    }
  }
}

TEST(ShiftFactor, SmallOrders) {
  RecurrenceCoeffs c;
  c.s = {Q(2), Q(3), Q(5)};
  c.t = {Q(7), Q(11)};
  EXPECT_EQ(shift_factor_dn(c, 0), SequenceTerm(Q(-2)));
  EXPECT_EQ(shift_factor_dn(c, 1), SequenceTerm(Q(2 * 3 - 7)));
  for (long n = 0; n <= 2; ++n) EXPECT_EQ(shift_factor_dn(c, n), shift_factor_dn_explicit(c, n));
  EXPECT_EQ(code_of([&] { shift_factor_dn(c, 3); }), ErrorCode::InsufficientCoefficients);
  EXPECT_EQ(code_of([&] { shift_factor_dn_explicit(c, 3); }), ErrorCode::InsufficientCoefficients);
}

TEST(ShiftFactor, RelationOnNumberSequences) {
  for (const char* text : {"E_k", "B_k"}) {
    for (long n = 0; n <= 4; ++n) {
      const ShiftRelationReport r = shift_relation_check(parse_sequence(text), n);
      EXPECT_TRUE(r.holds) << text << " n=" << n;
      EXPECT_EQ(r.shifted_det, r.d_n * r.det);
    }
  }
  const ShiftRelationReport e1 = shift_relation_check(parse_sequence("E_k"), 1);
  EXPECT_EQ(e1.shifted_det, SequenceTerm(Q(-1)));
}

TEST(ShiftFactor, SymbolicRelationForOddBernoulli) {
  const SequenceSpec spec = parse_sequence("B[2k+1]((x+1)/2)");
  for (long n = 0; n <= 3; ++n) {
    const ShiftRelationReport r = shift_relation_check(spec, builtin_recurrence_bern_odd(n + 1), n);
    EXPECT_TRUE(r.holds) << n;
    EXPECT_TRUE(r.d_n.is_polynomial());
    EXPECT_TRUE(shift_relation_check(spec, n).holds);
    EXPECT_TRUE(shift_relation_check(spec, n, Q(1, 2)).holds);
  }
}

TEST(ShiftFactor, ExplicitDeterminantMatchesRecurrence) {
  const RecurrenceCoeffs c = builtin_recurrence_bern_odd(6);
  for (long n = 0; n <= 6; ++n) EXPECT_EQ(shift_factor_dn(c, n), shift_factor_dn_explicit(c, n)) << n;
}
