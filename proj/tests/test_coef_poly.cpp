#include <gtest/gtest.h>

#include "generators.hpp"
#include "kemetric/coef_poly.hpp"

using namespace kemetric;

namespace
{

const CoefPoly lam = CoefPoly::variable(kEinsteinConstant);
const CoefPoly a = CoefPoly::variable(4);
const CoefPoly b = CoefPoly::variable(5);

CoefPoly random_poly(gen::Gen& g)
{
    CoefPoly p;
    for (int i = g.integer(0, 4); i > 0; --i) {
        CoefPoly::Monomial m;
        for (UnknownId id : {0u, 4u, 5u})
            if (const int e = g.integer(0, 2))
                m.emplace_back(id, static_cast<std::uint32_t>(e));
        p += CoefPoly::monomial(m, g.nonzero_rational());
    }
    return p;
}

} // namespace

TEST(CoefPoly, NoStoredZeros)
{
    const CoefPoly p = a + b - a;
    EXPECT_EQ(p, b);
    EXPECT_EQ(p.size(), 1u);
    EXPECT_TRUE((a - a).is_zero());
}

TEST(CoefPoly, DisplayOrder)
{
    SymbolTable names;
    names.add({4, MultiIndex{2, 0}, "a1"});
    names.add({5, MultiIndex{1, 1}, "b12"});
    const CoefPoly p = lam * Rational(1L, 2L) + a * Rational(4) + b - CoefPoly(3);
    EXPECT_EQ(p.to_string(names), "1/2*lambda + 4*a1 + b12 - 3");
}

TEST(CoefPoly, SubstituteAndCoefficients)
{
    const CoefPoly p = a * a * lam + b;
    EXPECT_EQ(p.degree_in(4), 2u);
    EXPECT_EQ(p.coefficient_of(4, 2), lam);
    EXPECT_EQ(p.coefficient_of(4, 0), b);
    EXPECT_EQ(p.substitute(4, CoefPoly(3)), lam * Rational(9) + b);
    EXPECT_EQ(p.substitute({{4, b}, {0, CoefPoly(2)}}), b * b * Rational(2) + b);
}

TEST(CoefPoly, PrimitiveAndContent)
{
    const CoefPoly p = a * a * b * Rational(6L, 5L) - a * b * b * Rational(4L, 5L);
    const auto content = p.monomial_content({4, 5});
    EXPECT_EQ(content, (CoefPoly::Monomial{{4, 1}, {5, 1}}));
    EXPECT_EQ(p.divide_monomial(content).primitive(), a * Rational(3) - b * Rational(2));
    EXPECT_EQ((CoefPoly(0) - a - b).primitive(), a + b);
}

// Ring laws over random polynomials in three unknowns.
TEST(CoefPolyProperty, RingLaws)
{
    gen::Gen g(21);
    for (int i = 0; i < 150; ++i) {
        const CoefPoly p = random_poly(g);
        const CoefPoly q = random_poly(g);
        const CoefPoly r = random_poly(g);
        EXPECT_EQ(p + q, q + p);
        EXPECT_EQ(p * q, q * p);
        EXPECT_EQ((p + q) + r, p + (q + r));
        EXPECT_EQ((p * q) * r, p * (q * r));
        EXPECT_EQ(p * (q + r), p * q + p * r);
        CoefPoly acc = p;
        acc.add_product(q, r);
        EXPECT_EQ(acc, p + q * r);
    }
}
