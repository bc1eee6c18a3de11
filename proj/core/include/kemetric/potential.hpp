#ifndef KEMETRIC_POTENTIAL_HPP
#define KEMETRIC_POTENTIAL_HPP

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "kemetric/coef_poly.hpp"
#include "kemetric/multi_index.hpp"
#include "kemetric/series.hpp"
#include "kemetric/unknown.hpp"

namespace kemetric
{

struct SupportTerm
{
    MultiIndex exponents;
    CoefPoly coefficient;

    friend bool operator==(const SupportTerm&, const SupportTerm&) = default;
};

// Bochner-form polynomial P = 1 + sum_a x_a + sum_j c_j x^{m_j} describing a
// rotation-invariant diastasis log P. Each support monomial has |m| >= 2 and
// appears once; coefficients may be numbers, unknowns or expressions in the
// unknowns. The support size is the codimension of the induced immersion.
class PotentialSpec
{
public:
    PotentialSpec(std::size_t n, std::vector<SupportTerm> support, SymbolTable symbols = {});

    // Every support coefficient is a fresh unknown with the default name.
    static PotentialSpec symbolic(std::size_t n, std::span<const MultiIndex> monomials);

    std::size_t dimension() const { return n_; }
    const std::vector<SupportTerm>& support() const { return support_; }
    std::size_t codimension() const { return support_.size(); }
    std::vector<MultiIndex> monomials() const;
    // Total x-degree of P.
    unsigned degree() const;

    bool is_numeric() const;
    // Numeric with every coefficient > 0, as required for an induced metric.
    bool is_induced_form() const;
    // Throws SpecError unless is_induced_form().
    void require_induced() const;

    // Support unknowns (the Einstein constant is never part of a spec's
    // unknown list even if an expression mentions it).
    std::vector<Unknown> unknowns() const;
    const SymbolTable& symbols() const { return symbols_; }

    std::optional<CoefPoly> coefficient(const MultiIndex& m) const;

    // Coefficients substituted; terms whose coefficient becomes zero drop out.
    PotentialSpec substitute(const std::map<UnknownId, CoefPoly>& values) const;
    // Variables relabelled by perm (variable i becomes perm[i]); numeric
    // coefficients follow their monomials.
    PotentialSpec permuted(std::span<const std::size_t> perm) const;

    friend bool operator==(const PotentialSpec& a, const PotentialSpec& b)
    {
        return a.n_ == b.n_ && a.support_ == b.support_;
    }

private:
    std::size_t n_;
    std::vector<SupportTerm> support_;
    SymbolTable symbols_;
};

// P = 1 + sum x_a + sum c_j x^{m_j} as an exact polynomial in a Series.
Series build_potential(const PotentialSpec& spec, unsigned truncation);

// Lower bound lambda >= 2n / deg_x P forced by comparing degrees on both
// sides of the Monge-Ampere identity.
Rational degree_bound_lambda(const PotentialSpec& spec);

struct NormalizedPotential
{
    Series series;
    std::vector<Rational> scaling; // x_a was replaced by scaling[a] * x_a
};

// Rescales each x_a so that the linear part becomes exactly sum x_a.
NormalizedPotential bochner_normalize(const Series& phi);

} // namespace kemetric

#endif
