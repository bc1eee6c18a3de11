#include <gtest/gtest.h>

#include <map>
#include <set>

#include "generators.hpp"
#include "kemetric/constraints.hpp"
#include "kemetric/enumerate.hpp"
#include "kemetric/solve.hpp"
#include "kemetric/sweep.hpp"

using namespace kemetric;

namespace
{

UnknownId id_of(const MultiIndex& m) { return support_unknown_id(m); }

CoefPoly var(const MultiIndex& m) { return CoefPoly::variable(id_of(m)); }

} // namespace

TEST(SolveSystem, VeroneseHasUniqueSolution)
{
    const ConstraintSystem sys = extract_constraints(symbolic_spec(2, {{2, 0}, {1, 1}, {0, 2}}), 3);
    const SolveOutcome o = solve_system(sys);
    ASSERT_EQ(o.status, SolveStatus::Solved);
    ASSERT_EQ(o.solutions.size(), 1u);
    const Assignment& a = o.solutions.front();
    EXPECT_EQ(a.lambda, Rational(3));
    EXPECT_EQ(a.values.at(id_of({2, 0})), Rational(1L, 4L));
    EXPECT_EQ(a.values.at(id_of({1, 1})), Rational(1L, 2L));
    EXPECT_EQ(a.values.at(id_of({0, 2})), Rational(1L, 4L));
    for (const auto& eq : sys.equations) {
        std::map<UnknownId, CoefPoly> values{{kEinsteinConstant, CoefPoly(*a.lambda)}};
        for (const auto& [id, v] : a.values)
            values.emplace(id, CoefPoly(v));
        EXPECT_TRUE(eq.lhs.substitute(values).is_zero());
    }
}

TEST(SolveSystem, EmptySupportGivesFubiniStudyConstant)
{
    for (std::size_t n = 1; n <= 6; ++n) {
        const SolveOutcome o = solve_system(extract_constraints(PotentialSpec(n, {}), 3));
        ASSERT_EQ(o.status, SolveStatus::Solved);
        ASSERT_EQ(o.solutions.size(), 1u);
        EXPECT_EQ(o.solutions.front().lambda, Rational(static_cast<long>(2 * (n + 1))));
    }
}

TEST(SolveSystem, VanishingMixedQuadraticIsInfeasible)
{
    const ConstraintSystem sys = extract_constraints(symbolic_spec(2, {{2, 0}, {0, 2}, {2, 1}, {1, 2}}), 3);
    const SolveOutcome o = solve_system(sys);
    ASSERT_EQ(o.status, SolveStatus::Infeasible);
    ASSERT_NE(o.witness(), nullptr);
    EXPECT_EQ(o.witness()->equation.primitive(), (var({2, 0}) + var({2, 1}) + var({1, 2})).primitive());
    EXPECT_EQ(o.witness()->equation.to_string(sys.symbols), "a[2,0] + a[2,1] + a[1,2]");
}

TEST(SolveSystem, InconsistentConstantEquation)
{
    ConstraintSystem sys;
    sys.dimension = 1;
    sys.equations.push_back({MultiIndex{1}, CoefPoly(2)});
    const SolveOutcome o = solve_system(sys);
    EXPECT_EQ(o.status, SolveStatus::Infeasible);
    EXPECT_EQ(o.witness()->reason, "inconsistent equation");
}

TEST(SolveSystem, RationalRootsBranch)
{
    // t^2 - 5 t + 6 = 0 over one positive unknown: two solutions.
    ConstraintSystem sys;
    sys.dimension = 2;
    const MultiIndex m{1, 1};
    sys.unknowns.push_back(Unknown::support_coefficient(m));
    sys.symbols.add(sys.unknowns.back());
    sys.positive.push_back(id_of(m));
    const CoefPoly t = var(m);
    sys.equations.push_back({MultiIndex{1, 0}, t * t - t * Rational(5) + CoefPoly(6)});
    const SolveOutcome o = solve_system(sys);
    ASSERT_EQ(o.status, SolveStatus::Solved);
    ASSERT_EQ(o.solutions.size(), 2u);
    EXPECT_EQ(o.solutions[0].values.at(id_of(m)), Rational(2));
    EXPECT_EQ(o.solutions[1].values.at(id_of(m)), Rational(3));
}

TEST(SolveSystem, IrrationalPositiveRootStaysUnresolved)
{
    ConstraintSystem sys;
    sys.dimension = 2;
    const MultiIndex m{1, 1};
    sys.unknowns.push_back(Unknown::support_coefficient(m));
    sys.symbols.add(sys.unknowns.back());
    sys.positive.push_back(id_of(m));
    const CoefPoly t = var(m);
    sys.equations.push_back({MultiIndex{1, 0}, t * t - CoefPoly(2)});
    const SolveOutcome o = solve_system(sys);
    EXPECT_EQ(o.status, SolveStatus::Unresolved);
    ASSERT_EQ(o.unresolved.size(), 1u);
    EXPECT_FALSE(o.unresolved.front().remnant.empty());

    sys.equations.front().lhs = t * t + CoefPoly(2);
    EXPECT_EQ(solve_system(sys).status, SolveStatus::Infeasible);
}

TEST(SolveSystem, NegativeRootViolatesPositivity)
{
    ConstraintSystem sys;
    sys.dimension = 2;
    const MultiIndex m{1, 1};
    sys.unknowns.push_back(Unknown::support_coefficient(m));
    sys.symbols.add(sys.unknowns.back());
    sys.positive.push_back(id_of(m));
    sys.equations.push_back({MultiIndex{1, 0}, var(m) + CoefPoly(Rational(1L, 3L))});
    const SolveOutcome o = solve_system(sys);
    ASSERT_EQ(o.status, SolveStatus::Infeasible);
    EXPECT_NE(o.witness()->reason.find("positiv"), std::string::npos);
}

// Permuting the variables of a support permutes its solutions.
TEST(SolveProperty, PermutationEquivariance)
{
    gen::Gen g(66);
    const auto pool = multi_indices(2, 2, 3);
    for (int i = 0; i < 12; ++i) {
        Support support;
        for (const auto& m : pool)
            if (g.coin(0.35))
                support.push_back(m);
        if (support.size() > 3)
            support.resize(3);
        const std::vector<std::size_t> swap{1, 0};
        Support image;
        for (const auto& m : support)
            image.push_back(m.permuted(swap));
        std::sort(image.begin(), image.end());

        const SpecOutcome a = solve_spec(symbolic_spec(2, support), 5);
        const SpecOutcome b = solve_spec(symbolic_spec(2, image), 5);
        EXPECT_EQ(a.status, b.status);
        std::set<std::pair<std::string, std::string>> sa;
        std::set<std::pair<std::string, std::string>> sb;
        for (const auto& c : a.solutions) {
            std::string key;
            for (const auto& t : c.spec.permuted(swap).support())
                key += t.exponents.to_string() + "=" + t.coefficient.to_string() + ";";
            sa.emplace(key, c.lambda.to_string());
        }
        for (const auto& c : b.solutions) {
            std::string key;
            for (const auto& t : c.spec.support())
                key += t.exponents.to_string() + "=" + t.coefficient.to_string() + ";";
            sb.emplace(key, c.lambda.to_string());
        }
        EXPECT_EQ(sa, sb);
    }
}
