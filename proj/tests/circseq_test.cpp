#include <billiards/circseq.hpp>
#include <billiards/grid.hpp>

#include <gtest/gtest.h>

using namespace billiards;

namespace {

// Σ_{n<2m} a(n) x^n, straight from the definition.
IntPolynomial definitional_numerator(const SeqSpec& spec)
{
    std::vector<Int> c;
    for (Int n = 0; n < 2 * spec.height; ++n) {
        c.push_back(circ_seq(spec, n));
    }
    return IntPolynomial(std::move(c));
}

IntPolynomial power(const IntPolynomial& p, int k)
{
    IntPolynomial out{1};
    for (int i = 0; i < k; ++i) {
        out *= p;
    }
    return out;
}

const IntPolynomial x_plus_1{1, 1};
const IntPolynomial x2_plus_1{1, 0, 1};

} // namespace

TEST(CircSeq, HeightSixTerms)
{
    const std::vector<Int> pos{3, 4, 5, 6, 5, 4, 3, 2, 1, 0, 1, 2, 3};
    const std::vector<Int> neg{3, 2, 1, 0, 1, 2, 3, 4, 5, 6, 5, 4, 3};
    for (Int n = 0; n <= 12; ++n) {
        EXPECT_EQ(circ_seq({Sign::Positive, 3, 6}, n), pos[static_cast<std::size_t>(n)]);
        EXPECT_EQ(circ_seq({Sign::Negative, 3, 6}, n), neg[static_cast<std::size_t>(n)]);
    }
}

TEST(CircSeq, EndpointsCoincide)
{
    for (Int m = 1; m <= 10; ++m) {
        for (Int n = 0; n < 6 * m; ++n) {
            EXPECT_EQ(circ_seq({Sign::Positive, 0, m}, n), circ_seq({Sign::Negative, 0, m}, n));
            EXPECT_EQ(circ_seq({Sign::Positive, m, m}, n), circ_seq({Sign::Negative, m, m}, n));
        }
    }
}

TEST(CircSeq, Validation)
{
    EXPECT_THROW(circ_seq({Sign::Positive, 7, 6}, 0), std::invalid_argument);
    EXPECT_THROW(circ_seq({Sign::Positive, -1, 6}, 0), std::invalid_argument);
    EXPECT_THROW(circ_seq({Sign::Positive, 0, 0}, 0), std::invalid_argument);
    EXPECT_THROW(circ_seq({Sign::Positive, 0, 3}, -1), std::invalid_argument);
    EXPECT_THROW(circ_seq_closed({Sign::Negative, 0, 3}, -1), std::invalid_argument);
}

TEST(CircSeqClosed, Branches)
{
    EXPECT_EQ(circ_seq_closed({Sign::Positive, 3, 6}, 5), 4);
    EXPECT_EQ(circ_seq_closed({Sign::Negative, 3, 6}, 10), 5);
    for (Int m = 1; m <= 8; ++m) {
        for (Int t = 0; t <= m; ++t) {
            EXPECT_EQ(circ_seq_closed({Sign::Positive, t, m}, m - t), m);
        }
    }
}

TEST(CircSeqClosed, MatchesIteration)
{
    for (Int m = 1; m <= 20; ++m) {
        for (Int t = 0; t <= m; ++t) {
            for (Sign s : {Sign::Positive, Sign::Negative}) {
                for (Int n = 0; n < 8 * m; ++n) {
                    ASSERT_EQ(circ_seq_closed({s, t, m}, n), circ_seq({s, t, m}, n)) << t << " " << m << " " << n;
                }
            }
        }
    }
}

TEST(CircSeq, TimeReversalSymmetry)
{
    for (Int m = 1; m <= 12; ++m) {
        for (Int t = 0; t <= m; ++t) {
            for (Int n = 0; n < 4 * m; ++n) {
                EXPECT_EQ(circ_seq({Sign::Positive, t, m}, n),
                          circ_seq({Sign::Negative, t, m}, (2 * m - n % (2 * m)) % (2 * m)));
            }
        }
    }
}

// Coordinate i of the billiard trace is the positive circular sequence started at x_i.
TEST(CircSeq, CoordinateTracesOfTheBilliard)
{
    const GridSpec g{6, 4, 3};
    const Point start{{2, 3, 0}};
    PhaseState s = lift(g, start);
    for (Int n = 0; n < 2 * g.period(); ++n) {
        const Point x = project(g, s);
        for (std::size_t i = 0; i < g.arity(); ++i) {
            EXPECT_EQ(x[i], circ_seq({Sign::Positive, start[i], g.dim(i)}, n));
        }
        s = step(g, s);
    }
}

TEST(RampPolynomial, Definition)
{
    EXPECT_EQ(ramp_polynomial(1, 3), (IntPolynomial{1, 2, 3}));
    EXPECT_EQ(ramp_polynomial(2, 2), (IntPolynomial{0, 2}));
    EXPECT_THROW(ramp_polynomial(0, 3), std::invalid_argument);
    EXPECT_THROW(ramp_polynomial(4, 3), std::invalid_argument);
}

TEST(RampPolynomial, RationalIdentity)
{
    const IntPolynomial sq = power(IntPolynomial{1, -1}, 2);
    for (Int n = 1; n <= 10; ++n) {
        const IntPolynomial rhs = IntPolynomial{1} - IntPolynomial::monomial(n + 1, static_cast<std::size_t>(n))
                                  + IntPolynomial::monomial(n, static_cast<std::size_t>(n + 1));
        EXPECT_EQ(sq * ramp_polynomial(1, n), rhs);
    }
    for (Int n = 1; n <= 12; ++n) {
        for (Int t = 1; t <= n; ++t) {
            const IntPolynomial rhs = IntPolynomial::monomial(t, static_cast<std::size_t>(t - 1))
                                      - IntPolynomial::monomial(t - 1, static_cast<std::size_t>(t))
                                      - IntPolynomial::monomial(n + 1, static_cast<std::size_t>(n))
                                      + IntPolynomial::monomial(n, static_cast<std::size_t>(n + 1));
            EXPECT_EQ(sq * ramp_polynomial(t, n), rhs);
        }
    }
}

TEST(NumeratorPoly, Examples)
{
    EXPECT_EQ(numerator_poly({Sign::Positive, 1, 4}), (IntPolynomial{1, 2, 3, 4, 3, 2, 1}));
    EXPECT_EQ(numerator_poly({Sign::Positive, 1, 4}), power(x_plus_1, 2) * power(x2_plus_1, 2));
    EXPECT_EQ(numerator_poly({Sign::Positive, 0, 4}), (power(x_plus_1, 2) * power(x2_plus_1, 2)).shifted(1));
    EXPECT_EQ(numerator_poly({Sign::Positive, 0, 1}), (IntPolynomial{0, 1}));
    EXPECT_EQ(numerator_poly({Sign::Negative, 0, 1}), (IntPolynomial{0, 1}));
}

TEST(NumeratorPoly, MatchesDefinitionalSum)
{
    for (Int m = 1; m <= 20; ++m) {
        for (Int t = 0; t <= m; ++t) {
            for (Sign s : {Sign::Positive, Sign::Negative}) {
                const SeqSpec spec{s, t, m};
                const auto f = numerator_poly(spec);
                ASSERT_EQ(f, definitional_numerator(spec)) << t << " " << m;
                ASSERT_LE(f.degree(), 2 * m - 1);
            }
        }
    }
}

// Second algebraic route: the single-fraction form over (1-x)^2.
TEST(NumeratorPoly, SingleFractionForm)
{
    const IntPolynomial sq = power(IntPolynomial{1, -1}, 2);
    auto mono = [](Int c, Int d) { return IntPolynomial::monomial(c, static_cast<std::size_t>(d)); };
    for (Int m = 1; m <= 15; ++m) {
        for (Int t = 0; t <= m; ++t) {
            const IntPolynomial plus = mono(t - 1, 2 * m + 1) - mono(t, 2 * m) + mono(2, 2 * m - t + 1)
                                       - mono(2, m - t + 1) + mono(1 - t, 1) + IntPolynomial{t};
            const IntPolynomial minus = mono(t + 1, 2 * m + 1) - mono(t, 2 * m) - mono(2, m + t + 1)
                                        + mono(2, t + 1) - mono(1 + t, 1) + IntPolynomial{t};
            EXPECT_EQ(sq * numerator_poly({Sign::Positive, t, m}), plus);
            EXPECT_EQ(sq * numerator_poly({Sign::Negative, t, m}), minus);
        }
    }
}

TEST(NumeratorPoly, HeightFourFactorisations)
{
    const IntPolynomial base = x_plus_1 * x2_plus_1;
    const std::vector<IntPolynomial> positive{
        (power(x_plus_1, 2) * power(x2_plus_1, 2)).shifted(1),
        power(x_plus_1, 2) * power(x2_plus_1, 2),
        base * IntPolynomial{2, 1, 1, -1, 1},
        base * IntPolynomial{3, 1, -1, -1, 2},
        base * IntPolynomial{4, -1, -1, -1, 3},
    };
    const std::vector<IntPolynomial> negative{
        (power(x_plus_1, 2) * power(x2_plus_1, 2)).shifted(1),
        base * IntPolynomial{1, -1, 1, 1, 2},
        base * IntPolynomial{2, -1, -1, 1, 3},
        base * IntPolynomial{3, -1, -1, -1, 4},
        base * IntPolynomial{4, -1, -1, -1, 3},
    };
    for (Int t = 0; t <= 4; ++t) {
        EXPECT_EQ(numerator_poly({Sign::Positive, t, 4}), positive[static_cast<std::size_t>(t)]) << "t=" << t;
        EXPECT_EQ(numerator_poly({Sign::Negative, t, 4}), negative[static_cast<std::size_t>(t)]) << "t=" << t;
    }
}

TEST(GenFunction, Structure)
{
    const auto gf = gen_function({Sign::Positive, 3, 6});
    EXPECT_EQ(gf.period, 12);
    EXPECT_LE(gf.numerator.degree(), 11);
    const auto series = series_expand(gf, 59);
    ASSERT_EQ(series.size(), 60U);
    const std::vector<Int> head{3, 4, 5, 6, 5, 4, 3, 2, 1, 0, 1, 2, 3};
    for (std::size_t n = 0; n < series.size(); ++n) {
        if (n < head.size()) {
            EXPECT_EQ(series[n], head[n]);
        }
        EXPECT_EQ(series[n], circ_seq({Sign::Positive, 3, 6}, static_cast<Int>(n)));
    }
}

TEST(SeriesExpand, EdgeCases)
{
    const auto gf = gen_function({Sign::Negative, 2, 5});
    EXPECT_EQ(series_expand(gf, 0), (std::vector<Int>{2}));
    EXPECT_THROW(series_expand(gf, -1), std::invalid_argument);
    EXPECT_THROW(series_expand(RationalGF{IntPolynomial{1}, 0}, 3), std::invalid_argument);
}

TEST(SeriesExpand, PeriodicAgainstIteration)
{
    for (Int m = 1; m <= 10; ++m) {
        for (Int t = 0; t <= m; ++t) {
            for (Sign s : {Sign::Positive, Sign::Negative}) {
                const SeqSpec spec{s, t, m};
                const auto series = series_expand(gen_function(spec), 6 * 2 * m - 1);
                for (std::size_t n = 0; n < series.size(); ++n) {
                    ASSERT_EQ(series[n], circ_seq(spec, static_cast<Int>(n)));
                    if (n >= static_cast<std::size_t>(2 * m)) {
                        ASSERT_EQ(series[n], series[n - static_cast<std::size_t>(2 * m)]);
                    }
                }
            }
        }
    }
}
