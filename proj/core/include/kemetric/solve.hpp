#ifndef KEMETRIC_SOLVE_HPP
#define KEMETRIC_SOLVE_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kemetric/coef_poly.hpp"
#include "kemetric/constraints.hpp"
#include "kemetric/rational.hpp"

namespace kemetric
{

enum class SolveStatus
{
    Solved,
    Infeasible,
    Unresolved,
};

const char* to_string(SolveStatus s);

struct Assignment
{
    std::map<UnknownId, Rational> values; // support unknowns
    std::optional<Rational> lambda;
};

struct InfeasibilityWitness
{
    CoefPoly equation; // contradicts positivity or consistency when set to 0
    std::string reason;
};

// Partial solution carried between solver passes. Every substituted unknown
// maps to an expression in the unknowns that are still free.
struct SolverState
{
    std::map<UnknownId, CoefPoly> substitution;
    // Substituted support unknowns and their expressions, which must stay > 0.
    std::vector<std::pair<UnknownId, CoefPoly>> positivity;
    // Extra equations (factors with irrational roots) appended to every pass.
    std::vector<CoefPoly> carried;
};

struct BranchOutcome
{
    SolveStatus status = SolveStatus::Unresolved;
    SolverState state;
    std::optional<InfeasibilityWitness> witness;
    std::vector<CoefPoly> remnant;      // equations left when unresolved
    std::vector<UnknownId> free;        // unknowns left when unresolved
    std::string note;
};

struct SolveOutcome
{
    SolveStatus status = SolveStatus::Infeasible;
    std::vector<Assignment> solutions;
    std::vector<InfeasibilityWitness> witnesses; // one per infeasible branch
    std::vector<BranchOutcome> unresolved;

    const InfeasibilityWitness* witness() const { return witnesses.empty() ? nullptr : &witnesses.front(); }
};

// Explores the system from `start`, in this order, until nothing applies:
//   1. linear elimination: an unknown of degree 1 with a constant
//      coefficient is solved for and substituted (the Einstein constant
//      first, then support unknowns by descending id);
//   2. sign branching: support unknowns are > 0, so zero branches are pruned,
//      monomial factors in them are cancelled and sign-definite equations
//      are contradictions;
//   3. triangular substitution of every solved value;
//   4. univariate equations: gcd, then one branch per admissible rational
//      root (rational root theorem); irrational admissible roots keep an
//      unresolved branch;
//   5. two unknowns left: the gcd of the pairwise resultants eliminating
//      the earlier unknown in the order is branched on like step 4;
//   6. whatever remains multivariate and nonlinear is returned unresolved.
// Branches are returned in a deterministic order.
std::vector<BranchOutcome> explore(const ConstraintSystem& sys, const SolverState& start);

// explore() from an empty state, aggregated. SOLVED means at least one
// solution and no unresolved branch; INFEASIBLE means every branch carries
// a witness.
SolveOutcome solve_system(const ConstraintSystem& sys);

Assignment assignment_from(const SolverState& state, const ConstraintSystem& sys);

} // namespace kemetric

#endif
