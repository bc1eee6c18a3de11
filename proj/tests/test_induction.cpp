#include <gtest/gtest.h>

#include "generators.hpp"
#include "kemetric/errors.hpp"
#include "kemetric/induction.hpp"
#include "models.hpp"

using namespace kemetric;

namespace
{

Series log_of(const PotentialSpec& spec, unsigned D)
{
    const Series p = build_potential(spec, D);
    return log1p(p - Series::constant(spec.dimension(), D, CoefPoly(1)));
}

} // namespace

TEST(Induction, VeroneseIsInducedWithCodimensionThree)
{
    const InductionReport r = projective_induction_check(log_of(models::veronese(), 6), 6);
    EXPECT_EQ(r.verdict, InductionVerdict::InducedUpToDegree);
    EXPECT_EQ(r.codimension, 3);
    EXPECT_EQ(r.coefficients.size(), 5u);
    EXPECT_FALSE(r.witness.has_value());
    EXPECT_STREQ(to_string(r.verdict), "INDUCED-UP-TO-D");
}

TEST(Induction, ProjectiveSpaceHasCodimensionZero)
{
    const InductionReport r = projective_induction_check(log_of(models::unit(3), 5), 5);
    EXPECT_EQ(r.verdict, InductionVerdict::InducedUpToDegree);
    EXPECT_EQ(r.codimension, 0);
}

TEST(Induction, FractionalMultipleIsNotInduced)
{
    const Series phi = log1p(Series::variable(1, 6, 0)) * CoefPoly(Rational(3L, 2L));
    const InductionReport r = projective_induction_check(phi, 6);
    EXPECT_EQ(r.verdict, InductionVerdict::NotInduced);
    ASSERT_TRUE(r.witness.has_value());
    EXPECT_EQ(*r.witness, MultiIndex{3});
    EXPECT_EQ(r.coefficients[2].second, Rational(-1L, 16L));
    EXPECT_STREQ(to_string(r.verdict), "NOT-INDUCED");
}

TEST(Induction, Preconditions)
{
    const Series phi = log_of(models::segre(), 3);
    EXPECT_THROW(projective_induction_check(phi, 4), UsageError);
    EXPECT_THROW(projective_induction_check(phi + Series::constant(2, 3, CoefPoly(1)), 3), DomainError);
    EXPECT_THROW(projective_induction_check(phi * CoefPoly::variable(2), 3), UsageError);
}

// Integer multiples of an induced potential stay induced.
TEST(InductionProperty, IntegerMultiplesOfInducedPotentials)
{
    gen::Gen g(7);
    for (int i = 0; i < 40; ++i) {
        const std::size_t n = static_cast<std::size_t>(g.integer(1, 2));
        const PotentialSpec spec = g.spec(n, 2, 3);
        const unsigned D = 5;
        const long k = g.integer(1, 3);
        const InductionReport r = projective_induction_check(log_of(spec, D) * CoefPoly(Rational(k)), D);
        EXPECT_EQ(r.verdict, InductionVerdict::InducedUpToDegree);
    }
}
