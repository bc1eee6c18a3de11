#include "kemetric/solve.hpp"

#include <algorithm>
#include <set>

#include "kemetric/errors.hpp"
#include "kemetric/univariate.hpp"

namespace kemetric
{

const char* to_string(SolveStatus s)
{
    switch (s) {
    case SolveStatus::Solved:
        return "SOLVED";
    case SolveStatus::Infeasible:
        return "INFEASIBLE";
    case SolveStatus::Unresolved:
        return "UNRESOLVED";
    }
    return "?";
}

namespace
{

struct Context
{
    const ConstraintSystem& sys;
    std::vector<UnknownId> order; // elimination preference
    std::set<UnknownId> positive;
};

bool only_positive_unknowns(const CoefPoly& e, const std::set<UnknownId>& positive)
{
    const auto ids = e.unknowns();
    return std::all_of(ids.begin(), ids.end(), [&](UnknownId id) { return positive.count(id) != 0; });
}

// Nonzero polynomial in positive unknowns whose coefficients all share one
// sign: it cannot vanish.
bool sign_definite(const CoefPoly& e, const std::set<UnknownId>& positive)
{
    if (e.is_zero() || !only_positive_unknowns(e, positive))
        return false;
    int sign = 0;
    for (const auto& [m, c] : e.terms()) {
        if (sign == 0)
            sign = c.sign();
        else if (c.sign() != sign)
            return false;
    }
    return true;
}

void assign(const Context& ctx, SolverState& st, UnknownId u, const CoefPoly& expr)
{
    for (auto& [id, v] : st.substitution)
        v = v.substitute(u, expr);
    for (auto& [id, v] : st.positivity)
        v = v.substitute(u, expr);
    st.substitution[u] = expr;
    if (ctx.positive.count(u))
        st.positivity.emplace_back(u, expr);
}

std::vector<CoefPoly> substituted_equations(const Context& ctx, const SolverState& st)
{
    std::vector<CoefPoly> eqs;
    for (const auto& eq : ctx.sys.equations)
        eqs.push_back(eq.lhs.substitute(st.substitution));
    for (const auto& c : st.carried)
        eqs.push_back(c.substitute(st.substitution));
    return eqs;
}

std::vector<CoefPoly> normalize(const std::vector<CoefPoly>& eqs, const std::vector<UnknownId>& free_positive)
{
    std::vector<CoefPoly> out;
    for (const auto& e : eqs) {
        if (e.is_zero())
            continue;
        CoefPoly n = e.divide_monomial(e.monomial_content(free_positive)).primitive();
        // A lone monomial in positive unknowns: keep it as the witness.
        if (n.is_constant() && !e.is_constant())
            n = e.primitive();
        if (std::find(out.begin(), out.end(), n) == out.end())
            out.push_back(std::move(n));
    }
    return out;
}

std::vector<UnknownId> free_unknowns(const Context& ctx, const SolverState& st)
{
    std::vector<UnknownId> out;
    for (const auto& u : ctx.sys.unknowns)
        if (!st.substitution.count(u.id))
            out.push_back(u.id);
    return out;
}

BranchOutcome infeasible(const SolverState& st, CoefPoly equation, std::string reason)
{
    BranchOutcome b;
    b.status = SolveStatus::Infeasible;
    b.state = st;
    b.witness = InfeasibilityWitness{std::move(equation), std::move(reason)};
    return b;
}

BranchOutcome unresolved(const Context& ctx, const SolverState& st, std::vector<CoefPoly> remnant, std::string note)
{
    BranchOutcome b;
    b.status = SolveStatus::Unresolved;
    b.state = st;
    b.remnant = std::move(remnant);
    b.free = free_unknowns(ctx, st);
    b.note = std::move(note);
    return b;
}

void run(const Context& ctx, SolverState st, std::vector<BranchOutcome>& out);

// One child branch per admissible rational root of g in u, in ascending
// order, plus an unresolved branch when admissible irrational roots exist.
void branch_on_roots(const Context& ctx, const SolverState& st, UnknownId u, const UniPoly& g,
                     const std::vector<CoefPoly>& eqs, std::vector<BranchOutcome>& out)
{
    const SymbolTable& names = ctx.sys.symbols;
    const auto roots = rational_roots(g);
    if (!roots) {
        out.push_back(unresolved(ctx, st, eqs, "coefficients too large for the rational root theorem"));
        return;
    }
    const bool must_be_positive = ctx.positive.count(u) != 0;
    UniPoly rest = g;
    std::vector<Rational> admissible;
    for (const auto& r : *roots) {
        const UniPoly factor(std::vector<Rational>{-r, Rational(1)});
        for (;;) {
            auto [q, rem] = rest.divmod(factor);
            if (!rem.is_zero())
                break;
            rest = std::move(q);
        }
        if (!must_be_positive || r.sign() > 0)
            admissible.push_back(r);
    }
    const std::size_t irrational =
        rest.degree() <= 0 ? 0 : (must_be_positive ? real_roots_above(rest, Rational(0)) : real_root_count(rest));
    for (const auto& r : admissible) {
        SolverState child = st;
        assign(ctx, child, u, CoefPoly(r));
        run(ctx, std::move(child), out);
    }
    if (irrational > 0) {
        SolverState open = st;
        open.carried.push_back(rest.to_coef_poly(u));
        out.push_back(unresolved(ctx, open, {rest.to_coef_poly(u)}, "admissible irrational root of a univariate factor"));
    }
    if (admissible.empty() && irrational == 0)
        out.push_back(infeasible(st, g.to_coef_poly(u), "no admissible root for " + names.name(u)));
}

void run(const Context& ctx, SolverState st, std::vector<BranchOutcome>& out)
{
    const SymbolTable& names = ctx.sys.symbols;
    std::vector<CoefPoly> eqs = substituted_equations(ctx, st);
    for (;;) {
        std::vector<UnknownId> free_positive;
        for (UnknownId id : ctx.positive)
            if (!st.substitution.count(id))
                free_positive.push_back(id);
        eqs = normalize(eqs, free_positive);

        for (const auto& [u, expr] : st.positivity) {
            if (auto v = expr.as_constant()) {
                if (v->sign() <= 0) {
                    out.push_back(infeasible(st, CoefPoly::variable(u) - expr,
                                             names.name(u) + " = " + v->to_string() + " violates positivity"));
                    return;
                }
            } else if (sign_definite(expr, ctx.positive) && expr.terms().begin()->second.sign() < 0) {
                out.push_back(infeasible(st, CoefPoly::variable(u) - expr,
                                         names.name(u) + " = " + expr.to_string(names) + " cannot be positive"));
                return;
            }
        }
        for (const auto& e : eqs) {
            if (e.is_constant()) {
                out.push_back(infeasible(st, e, "inconsistent equation"));
                return;
            }
            if (sign_definite(e, ctx.positive)) {
                out.push_back(infeasible(st, e, "all terms share one sign while every unknown is positive"));
                return;
            }
        }

        if (eqs.empty()) {
            if (free_unknowns(ctx, st).empty()) {
                BranchOutcome b;
                b.status = SolveStatus::Solved;
                b.state = st;
                out.push_back(std::move(b));
            } else {
                out.push_back(unresolved(ctx, st, {}, "underdetermined"));
            }
            return;
        }

        bool eliminated = false;
        for (UnknownId u : ctx.order) {
            if (st.substitution.count(u))
                continue;
            for (const auto& e : eqs) {
                if (e.degree_in(u) != 1)
                    continue;
                const CoefPoly lead = e.coefficient_of(u, 1);
                if (!lead.is_constant())
                    continue;
                const CoefPoly expr = -e.coefficient_of(u, 0) * lead.constant().inverse();
                assign(ctx, st, u, expr);
                for (auto& other : eqs)
                    other = other.substitute(u, expr);
                eliminated = true;
                break;
            }
            if (eliminated)
                break;
        }
        if (eliminated)
            continue;

        for (UnknownId u : ctx.order) {
            if (st.substitution.count(u))
                continue;
            std::vector<CoefPoly> univariate;
            for (const auto& e : eqs) {
                const auto ids = e.unknowns();
                if (ids.size() == 1 && ids.front() == u)
                    univariate.push_back(e);
            }
            if (univariate.empty())
                continue;
            UniPoly g = UniPoly::from_coef_poly(univariate.front(), u);
            for (std::size_t i = 1; i < univariate.size(); ++i)
                g = gcd(g, UniPoly::from_coef_poly(univariate[i], u));
            if (g.degree() <= 0) {
                out.push_back(infeasible(st, univariate.front(), "univariate equations in " + names.name(u) +
                                                                     " have no common root"));
                return;
            }
            branch_on_roots(ctx, st, u, g, eqs, out);
            return;
        }

        // Two unknowns left: eliminate the one preferred by the order through
        // resultants and branch on the roots in the other.
        std::set<UnknownId> left;
        for (const auto& e : eqs)
            for (UnknownId id : e.unknowns())
                left.insert(id);
        if (left.size() == 2 && eqs.size() >= 2) {
            UnknownId v = *left.begin();
            UnknownId u = *left.rbegin();
            for (UnknownId id : ctx.order) {
                if (left.count(id)) {
                    v = id;
                    u = id == *left.begin() ? *left.rbegin() : *left.begin();
                    break;
                }
            }
            UniPoly g;
            for (std::size_t i = 0; i < eqs.size(); ++i)
                for (std::size_t j = i + 1; j < eqs.size(); ++j)
                    if (eqs[i].involves(v) && eqs[j].involves(v))
                        g = gcd(g, resultant(eqs[i], eqs[j], u, v));
            if (!g.is_zero()) {
                if (g.degree() <= 0) {
                    out.push_back(infeasible(st, eqs.front(), "resultants in " + names.name(u) +
                                                                  " have no common root"));
                    return;
                }
                branch_on_roots(ctx, st, u, g, eqs, out);
                return;
            }
        }

        out.push_back(unresolved(ctx, st, eqs, "nonlinear multivariate remnant"));
        return;
    }
}

} // namespace

std::vector<BranchOutcome> explore(const ConstraintSystem& sys, const SolverState& start)
{
    Context ctx{sys, {}, {sys.positive.begin(), sys.positive.end()}};
    std::vector<UnknownId> ids;
    for (const auto& u : sys.unknowns)
        ids.push_back(u.id);
    std::sort(ids.begin(), ids.end());
    if (std::binary_search(ids.begin(), ids.end(), kEinsteinConstant))
        ctx.order.push_back(kEinsteinConstant);
    for (auto it = ids.rbegin(); it != ids.rend(); ++it)
        if (*it != kEinsteinConstant)
            ctx.order.push_back(*it);

    std::vector<BranchOutcome> out;
    run(ctx, start, out);
    return out;
}

Assignment assignment_from(const SolverState& state, const ConstraintSystem& sys)
{
    Assignment a;
    for (const auto& [id, expr] : state.substitution) {
        const auto v = expr.as_constant();
        if (!v)
            throw EngineError("assignment requested for a partially solved state");
        if (id == kEinsteinConstant)
            a.lambda = *v;
        else
            a.values.emplace(id, *v);
    }
    for (const auto& u : sys.unknowns)
        if (!state.substitution.count(u.id))
            throw EngineError("unknown " + u.name + " left free in a solved state");
    return a;
}

SolveOutcome solve_system(const ConstraintSystem& sys)
{
    SolveOutcome outcome;
    for (auto& b : explore(sys, SolverState{})) {
        switch (b.status) {
        case SolveStatus::Solved:
            outcome.solutions.push_back(assignment_from(b.state, sys));
            break;
        case SolveStatus::Infeasible:
            outcome.witnesses.push_back(*b.witness);
            break;
        case SolveStatus::Unresolved:
            outcome.unresolved.push_back(std::move(b));
            break;
        }
    }
    if (!outcome.unresolved.empty())
        outcome.status = SolveStatus::Unresolved;
    else if (!outcome.solutions.empty())
        outcome.status = SolveStatus::Solved;
    else
        outcome.status = SolveStatus::Infeasible;
    return outcome;
}

} // namespace kemetric
