#ifndef KEMETRIC_SWEEP_HPP
#define KEMETRIC_SWEEP_HPP

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "kemetric/certify.hpp"
#include "kemetric/classify.hpp"
#include "kemetric/enumerate.hpp"
#include "kemetric/potential.hpp"
#include "kemetric/solve.hpp"

namespace kemetric
{

// A solved and certified numeric candidate.
struct Candidate
{
    PotentialSpec spec;
    Rational lambda;
    ModelTag tag;
    Certificate certificate;
    bool closed_loop = false;     // residual vanishes two orders past the solve degree
    Rational degree_bound;        // 2n / deg P
};

struct InfeasibleBranch
{
    std::string branch;    // substitution in force, "" at the root
    std::string equation;  // the witness, "... = 0"
    std::string reason;
};

struct UnresolvedBranch
{
    std::string branch;
    std::vector<std::string> remnant;
    std::vector<std::string> free;
    std::string note;
};

struct SpecOutcome
{
    std::size_t n = 0;
    std::size_t k = 0;
    Support support;
    // Set when (n, k) was settled without enumeration because n > 2k.
    bool shortcut = false;
    SolveStatus status = SolveStatus::Infeasible;
    std::vector<Candidate> solutions;
    std::vector<InfeasibleBranch> infeasible;
    std::vector<UnresolvedBranch> unresolved;
};

// Solves a symbolic spec order by order: the constraints of degree 1, 2, ...
// up to max_degree are extracted with every earlier substitution applied, so
// each stage only sees what the previous stages left open. Fully determined
// branches are certified exactly, re-checked at max_degree + 2 and
// classified.
SpecOutcome solve_spec(const PotentialSpec& symbolic, unsigned max_degree);

struct SweepOptions
{
    std::size_t dim_lo = 2;
    std::size_t dim_hi = 6;
    std::size_t k_max = 3;
    unsigned deg_cap = 3;
    unsigned degree = 0;  // 0 selects deg_cap + 2
    unsigned jobs = 1;
    bool shortcut = true; // skip enumeration when n > 2k (k >= 1)
};

unsigned effective_degree(const SweepOptions& options);

struct ClassificationReport
{
    SweepOptions options;
    unsigned degree = 0;
    std::vector<SpecOutcome> entries; // by (n, k, support)

    std::size_t count(SolveStatus s) const;
    std::size_t shortcut_count() const;
    std::size_t unknown_count() const;
    // Distinct tags among solved candidates, "CPn_unit" etc.
    std::set<std::string> model_spaces() const;
    // "3 distinct model spaces, 0 UNKNOWN, 0 UNRESOLVED"
    std::string summary() const;
};

// Deterministic regardless of options.jobs: entries are computed
// independently and stored by their position in the enumeration.
ClassificationReport sweep(const SweepOptions& options);

} // namespace kemetric

#endif
