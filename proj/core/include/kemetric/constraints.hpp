#ifndef KEMETRIC_CONSTRAINTS_HPP
#define KEMETRIC_CONSTRAINTS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "kemetric/coef_poly.hpp"
#include "kemetric/multi_index.hpp"
#include "kemetric/potential.hpp"
#include "kemetric/unknown.hpp"

namespace kemetric
{

// lhs == 0, read off as the coefficient of x^monomial in the Monge-Ampere
// log residual.
struct Equation
{
    MultiIndex monomial;
    CoefPoly lhs;
};

struct ConstraintSystem
{
    std::size_t dimension = 0;
    unsigned degree = 0;
    SymbolTable symbols;
    std::vector<Unknown> unknowns;     // ascending id; the Einstein constant first when present
    std::vector<Equation> equations;   // by (degree, graded order of the monomial)
    std::vector<UnknownId> positive;   // support unknowns, ascending

    bool has_unknown(UnknownId id) const;
    std::string to_string() const;
};

// Every nonzero coefficient of ma_log_residual(P, lambda, degree) becomes an
// equation. With lambda symbolic, the degree-1 block reads
//   4 a_h + sum_{k != h} b_hk - (n + 1) + lambda/2 = 0,  h = 1..n,
// where a_h and b_hk are the coefficients of x_h^2 and x_h x_k.
// A degree below deg P + 1 yields only the leading orders.
ConstraintSystem extract_constraints(const PotentialSpec& spec, unsigned degree);
ConstraintSystem extract_constraints(const PotentialSpec& spec, unsigned degree, const CoefPoly& lambda);

} // namespace kemetric

#endif
