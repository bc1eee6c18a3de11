#include <gtest/gtest.h>

#include <map>

#include "generators.hpp"
#include "kemetric/errors.hpp"
#include "kemetric/series.hpp"

using namespace kemetric;

namespace
{

Series x(std::size_t n, unsigned D, std::size_t var)
{
    return Series::variable(n, D, var);
}

Series c(std::size_t n, unsigned D, const Rational& v)
{
    return Series::constant(n, D, CoefPoly(v));
}

Series mono(std::size_t n, unsigned D, MultiIndex m, const Rational& v)
{
    return Series::monomial(n, D, m, CoefPoly(v));
}

// Reference sum: a plain merge of the two term maps.
std::map<MultiIndex, CoefPoly> merged(const Series& f, const Series& g)
{
    std::map<MultiIndex, CoefPoly> out;
    for (const auto& [m, v] : f.terms())
        out[m] += v;
    for (const auto& [m, v] : g.terms())
        out[m] += v;
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

} // namespace

TEST(SeriesAdd, Examples)
{
    const std::size_t n = 2;
    const unsigned D = 3;
    EXPECT_EQ(c(n, D, 1) + x(n, D, 0) + x(n, D, 0), c(n, D, 1) + mono(n, D, {1, 0}, 2));
    const Series f = c(n, D, 1) + x(n, D, 1) * CoefPoly(Rational(5));
    EXPECT_EQ(f + Series(n, D), f);

    const CoefPoly a = CoefPoly::variable(1);
    const CoefPoly b = CoefPoly::variable(2);
    const Series fa = c(n, D, 1) + x(n, D, 0) * a;
    const Series fb = c(n, D, 1) + x(n, D, 0) * b;
    const Series sum = fa + fb;
    EXPECT_EQ(sum, c(n, D, 2) + x(n, D, 0) * (a + b));
    std::map<MultiIndex, CoefPoly> terms(sum.terms().begin(), sum.terms().end());
    EXPECT_EQ(terms, merged(fa, fb));
}

TEST(SeriesAdd, MismatchIsUsageError)
{
    EXPECT_THROW(Series(2, 3) + Series(2, 4), UsageError);
    EXPECT_THROW(Series(2, 3) + Series(3, 3), UsageError);
    EXPECT_THROW(Series(2, 3) * Series(2, 4), UsageError);
}

TEST(SeriesMul, Examples)
{
    const Series one = c(2, 2, 1);
    EXPECT_EQ((one + x(2, 2, 0)) * (one + x(2, 2, 1)), one + x(2, 2, 0) + x(2, 2, 1) + mono(2, 2, {1, 1}, 1));

    const Series l = c(1, 1, 1) + x(1, 1, 0);
    EXPECT_EQ(l * l, c(1, 1, 1) + mono(1, 1, {1}, 2));

    const Series v = c(2, 2, 1) + (x(2, 2, 0) + x(2, 2, 1)) * CoefPoly(Rational(1L, 2L));
    const Series expected = c(2, 2, 1) + x(2, 2, 0) + x(2, 2, 1) + mono(2, 2, {2, 0}, Rational(1L, 4L)) +
                            mono(2, 2, {1, 1}, Rational(1L, 2L)) + mono(2, 2, {0, 2}, Rational(1L, 4L));
    EXPECT_EQ(v * v, expected);
}

TEST(SeriesLog1p, Examples)
{
    EXPECT_TRUE(log1p(Series(1, 3)).is_zero());
    EXPECT_EQ(log1p(x(1, 3, 0)), x(1, 3, 0) + mono(1, 3, {2}, Rational(-1L, 2L)) + mono(1, 3, {3}, Rational(1L, 3L)));

    const Series u = x(2, 2, 0) + x(2, 2, 1) + mono(2, 2, {1, 1}, 1);
    const Series expected = x(2, 2, 0) + x(2, 2, 1) + mono(2, 2, {2, 0}, Rational(-1L, 2L)) +
                            mono(2, 2, {0, 2}, Rational(-1L, 2L));
    EXPECT_EQ(log1p(u), expected);
    EXPECT_EQ(log1p(u), log1p(x(2, 2, 0)) + log1p(x(2, 2, 1)));
}

TEST(SeriesLog1p, NonzeroConstantIsDomainError)
{
    EXPECT_THROW(log1p(c(1, 3, 1)), DomainError);
    EXPECT_THROW(exp(c(1, 3, 2)), DomainError);
}

TEST(SeriesExp, Examples)
{
    EXPECT_EQ(exp(Series(2, 3)), c(2, 3, 1));
    EXPECT_EQ(exp(log1p(x(1, 4, 0))), c(1, 4, 1) + x(1, 4, 0));
    const Series half = x(1, 2, 0) * CoefPoly(Rational(1L, 2L));
    EXPECT_EQ(exp(log1p(half) * CoefPoly(Rational(2))),
              c(1, 2, 1) + x(1, 2, 0) + mono(1, 2, {2}, Rational(1L, 4L)));
}

TEST(SeriesDiff, Examples)
{
    const Series f = c(2, 3, 1) + x(2, 3, 0) + mono(2, 3, {1, 1}, 1);
    EXPECT_EQ(diff(f, 0), c(2, 3, 1) + x(2, 3, 1));
    EXPECT_TRUE(diff(mono(2, 3, {2, 0}, 1), 1).is_zero());
    EXPECT_THROW(diff(f, 2), UsageError);

    const Series p = c(2, 4, 1) + x(2, 4, 0);
    const Series q = c(2, 4, 1) + mono(2, 4, {1, 1}, 1);
    const Series expanded = c(2, 4, 1) + x(2, 4, 0) + mono(2, 4, {1, 1}, 1) + mono(2, 4, {2, 1}, 1);
    EXPECT_EQ(p * q, expanded);
    for (std::size_t v = 0; v < 2; ++v)
        EXPECT_EQ(diff(p * q, v), diff(p, v) * q + p * diff(q, v));
}

TEST(Series, TruncationDropsHighTerms)
{
    Series s(2, 2);
    s.add_term({2, 1}, CoefPoly(5));
    EXPECT_TRUE(s.is_zero());
    const Series f = mono(2, 4, {1, 1}, 1) + mono(2, 4, {3, 1}, 1);
    EXPECT_EQ(f.truncated_to(2), mono(2, 4, {1, 1}, 1));
}

// Ring laws over random truncated series, n <= 3, D <= 6.
TEST(SeriesProperty, RingLaws)
{
    gen::Gen g(101);
    for (int i = 0; i < 120; ++i) {
        const std::size_t n = static_cast<std::size_t>(g.integer(1, 3));
        const unsigned D = static_cast<unsigned>(g.integer(1, 6));
        const Series f = g.series(n, D, 5);
        const Series h = g.series(n, D, 5);
        const Series k = g.series(n, D, 5);
        EXPECT_EQ(f + h, h + f);
        EXPECT_EQ((f + h) + k, f + (h + k));
        EXPECT_EQ(f * h, h * f);
        EXPECT_EQ((f * h) * k, f * (h * k));
        EXPECT_EQ(f * (h + k), f * h + f * k);
        EXPECT_EQ(f - f, Series(n, D));
    }
}

// log1p(exp(u) - 1) = u and exp(log1p(u)) = 1 + u at truncation.
TEST(SeriesProperty, LogExpInversion)
{
    gen::Gen g(202);
    for (int i = 0; i < 120; ++i) {
        const std::size_t n = static_cast<std::size_t>(g.integer(1, 3));
        const unsigned D = static_cast<unsigned>(g.integer(1, 6));
        const Series u = g.series(n, D, 4, false);
        const Series one = c(n, D, 1);
        EXPECT_EQ(log1p(exp(u) - one), u);
        EXPECT_EQ(exp(log1p(u)), one + u);
    }
}

// d(fg) = df g + f dg below the truncation, where dropped terms cannot reach.
TEST(SeriesProperty, LeibnizRule)
{
    gen::Gen g(303);
    for (int i = 0; i < 120; ++i) {
        const std::size_t n = static_cast<std::size_t>(g.integer(1, 3));
        const unsigned D = static_cast<unsigned>(g.integer(1, 6));
        const Series f = g.series(n, D, 5);
        const Series h = g.series(n, D, 5);
        const auto v = static_cast<std::size_t>(g.integer(0, static_cast<int>(n) - 1));
        EXPECT_EQ(diff(f * h, v).truncated_to(D - 1), (diff(f, v) * h + f * diff(h, v)).truncated_to(D - 1));
    }
}
