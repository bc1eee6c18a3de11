#include <gtest/gtest.h>

#include "kemetric/classify.hpp"
#include "kemetric/errors.hpp"
#include "models.hpp"

using namespace kemetric;

TEST(Classify, ModelSpaces)
{
    EXPECT_EQ(classify(models::unit(2), Rational(6)).kind, ModelKind::CPnUnit);
    const ModelTag v = classify(models::veronese(), Rational(3));
    EXPECT_EQ(v.kind, ModelKind::CPnScaled);
    EXPECT_EQ(v.q, 2u);
    EXPECT_EQ(v.to_string(), "CPn_scaled(2)");
    const ModelTag s = classify(models::segre(), Rational(4));
    EXPECT_EQ(s.kind, ModelKind::ProductOfLines);
    EXPECT_EQ(s.to_string(), "ProductOfLines");
    EXPECT_EQ(s.detail(), "(1+x1)(1+x2)");
}

TEST(Classify, ThreeLines)
{
    const PotentialSpec p(3, {{MultiIndex{1, 1, 0}, CoefPoly(1)},
                              {MultiIndex{1, 0, 1}, CoefPoly(1)},
                              {MultiIndex{0, 1, 1}, CoefPoly(1)},
                              {MultiIndex{1, 1, 1}, CoefPoly(1)}});
    const ModelTag t = classify(p, Rational(4));
    EXPECT_EQ(t.kind, ModelKind::ProductOfLines);
    EXPECT_EQ(t.blocks.size(), 3u);
}

TEST(MatchModel, BlocksOfDifferentSizes)
{
    // (1 + x1)(1 + x2 + x3)
    const PotentialSpec p(3, {{MultiIndex{1, 1, 0}, CoefPoly(1)}, {MultiIndex{1, 0, 1}, CoefPoly(1)}});
    const ModelTag t = match_model(p);
    ASSERT_EQ(t.kind, ModelKind::ProductOfLines);
    EXPECT_EQ(t.detail(), "(1+x1)(1+x2+x3)");
    EXPECT_THROW(classify(p, Rational(4)), EngineError);
}

TEST(MatchModel, ScaledBlockInProduct)
{
    // (1 + x1)(1 + x2/2)^2
    const PotentialSpec p(2, {{MultiIndex{0, 2}, CoefPoly(Rational(1L, 4L))},
                              {MultiIndex{1, 1}, CoefPoly(1)},
                              {MultiIndex{1, 2}, CoefPoly(Rational(1L, 4L))}});
    const ModelTag t = match_model(p);
    ASSERT_EQ(t.kind, ModelKind::ProductOfLines);
    EXPECT_EQ(t.detail(), "(1+x1)(1+x2/2)^2");
}

TEST(Classify, UnknownIsNeverForced)
{
    const PotentialSpec p(2, {{MultiIndex{1, 1}, CoefPoly(2)}});
    EXPECT_EQ(match_model(p).kind, ModelKind::Unknown);
    EXPECT_EQ(classify(p, Rational(1)).to_string(), "UNKNOWN");
    EXPECT_THROW(classify(p, Rational(3)), EngineError);
    EXPECT_THROW(classify(p, Rational(4)), EngineError);
}

TEST(Classify, DisagreementsAreEngineErrors)
{
    EXPECT_THROW(classify(models::unit(2), Rational(4)), EngineError);
    EXPECT_THROW(classify(models::segre(), Rational(6)), EngineError);
    EXPECT_THROW(classify(models::veronese(), Rational(6)), EngineError);
    EXPECT_THROW(classify(models::unit(2), Rational(8)), EngineError);
}

TEST(Classify, Preconditions)
{
    EXPECT_THROW(classify(models::segre(), Rational(0)), DomainError);
    const PotentialSpec neg(2, {{MultiIndex{1, 1}, CoefPoly(-1)}});
    EXPECT_THROW(match_model(neg), SpecError);
}

// Tags do not depend on how the variables are labelled.
TEST(ClassifyProperty, PermutationInvariant)
{
    const PotentialSpec p(3, {{MultiIndex{0, 2, 0}, CoefPoly(Rational(1L, 4L))},
                              {MultiIndex{1, 1, 0}, CoefPoly(1)},
                              {MultiIndex{1, 2, 0}, CoefPoly(Rational(1L, 4L))}});
    const std::vector<std::vector<std::size_t>> perms{{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {1, 2, 0}};
    for (const auto& perm : perms)
        EXPECT_EQ(match_model(p.permuted(perm)).kind, ModelKind::Unknown);
    const PotentialSpec lines(3, {{MultiIndex{1, 1, 0}, CoefPoly(1)}, {MultiIndex{1, 0, 1}, CoefPoly(1)}});
    for (const auto& perm : perms)
        EXPECT_EQ(match_model(lines.permuted(perm)).kind, ModelKind::ProductOfLines);
}
