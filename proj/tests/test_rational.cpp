#include <gtest/gtest.h>

#include "generators.hpp"
#include "kemetric/errors.hpp"
#include "kemetric/rational.hpp"

using namespace kemetric;

TEST(Rational, ParsesIntegersAndFractions)
{
    EXPECT_EQ(Rational::parse("3"), Rational(3));
    EXPECT_EQ(Rational::parse("-7"), Rational(-7));
    EXPECT_EQ(Rational::parse("6/4"), Rational(3L, 2L));
    EXPECT_EQ(Rational::parse("-2/6").to_string(), "-1/3");
    EXPECT_EQ(Rational::parse("0/5").to_string(), "0");
}

TEST(Rational, RejectsInexactText)
{
    for (const char* bad : {"0.25", "1e3", "", "1/", "/2", " 1", "1/0", "a/b", "1//2"})
        EXPECT_THROW(Rational::parse(bad), ParseError) << bad;
}

TEST(Rational, ZeroDenominatorThrows)
{
    EXPECT_THROW(Rational(1L, 0L), DomainError);
    EXPECT_THROW(Rational(0).inverse(), DomainError);
}

TEST(Rational, ArithmeticIsExact)
{
    const Rational a(1L, 3L);
    const Rational b(1L, 6L);
    EXPECT_EQ(a + b, Rational(1L, 2L));
    EXPECT_EQ(a - b, b);
    EXPECT_EQ(a * b, Rational(1L, 18L));
    EXPECT_EQ(a / b, Rational(2));
    EXPECT_EQ(pow(Rational(-2L, 3L), 3), Rational(-8L, 27L));
    EXPECT_LT(b, a);
}

TEST(Rational, HugeValuesStayExact)
{
    const Rational big = pow(Rational(10), 60) + Rational(1);
    EXPECT_EQ((big - Rational(1)) / pow(Rational(10), 59), Rational(10));
}

// Every stored value is in lowest terms with a positive denominator.
TEST(RationalProperty, CanonicalForm)
{
    gen::Gen g(11);
    for (int i = 0; i < 500; ++i) {
        const long num = g.integer(-1000, 1000);
        long den = g.integer(-1000, 1000);
        if (den == 0)
            den = 1;
        const Rational r = Rational(num, den) * g.rational() + g.rational();
        Integer gcd;
        mpz_gcd(gcd.get_mpz_t(), r.numerator().get_mpz_t(), r.denominator().get_mpz_t());
        EXPECT_EQ(gcd, 1);
        EXPECT_GT(r.denominator(), 0);
        EXPECT_EQ(Rational::parse(r.to_string()), r);
    }
}
