#include "kemetric/potential.hpp"

#include <algorithm>

#include "kemetric/errors.hpp"

namespace kemetric
{

PotentialSpec::PotentialSpec(std::size_t n, std::vector<SupportTerm> support, SymbolTable symbols)
    : n_(n), support_(std::move(support)), symbols_(std::move(symbols))
{
    if (n == 0)
        throw SpecError("dimension must be positive");
    for (const auto& t : support_) {
        if (t.exponents.size() != n)
            throw SpecError("support monomial " + t.exponents.to_string() + " has length " +
                            std::to_string(t.exponents.size()) + ", expected " + std::to_string(n));
        if (t.exponents.degree() < 2)
            throw SpecError("support monomial " + t.exponents.to_string() + " has degree < 2");
        if (t.coefficient.is_zero())
            throw SpecError("support monomial " + t.exponents.to_string() + " has zero coefficient");
    }
    std::sort(support_.begin(), support_.end(),
              [](const SupportTerm& a, const SupportTerm& b) { return a.exponents < b.exponents; });
    for (std::size_t i = 1; i < support_.size(); ++i)
        if (support_[i].exponents == support_[i - 1].exponents)
            throw SpecError("duplicate support monomial " + support_[i].exponents.to_string());
}

PotentialSpec PotentialSpec::symbolic(std::size_t n, std::span<const MultiIndex> monomials)
{
    std::vector<SupportTerm> support;
    SymbolTable symbols;
    for (const auto& m : monomials) {
        const Unknown u = Unknown::support_coefficient(m);
        symbols.add(u);
        support.push_back({m, CoefPoly::variable(u.id)});
    }
    return PotentialSpec(n, std::move(support), std::move(symbols));
}

std::vector<MultiIndex> PotentialSpec::monomials() const
{
    std::vector<MultiIndex> out;
    out.reserve(support_.size());
    for (const auto& t : support_)
        out.push_back(t.exponents);
    return out;
}

unsigned PotentialSpec::degree() const
{
    unsigned d = 1;
    for (const auto& t : support_)
        d = std::max(d, t.exponents.degree());
    return d;
}

bool PotentialSpec::is_numeric() const
{
    return std::all_of(support_.begin(), support_.end(), [](const SupportTerm& t) { return t.coefficient.is_constant(); });
}

bool PotentialSpec::is_induced_form() const
{
    return std::all_of(support_.begin(), support_.end(), [](const SupportTerm& t) {
        return t.coefficient.is_constant() && t.coefficient.constant().sign() > 0;
    });
}

void PotentialSpec::require_induced() const
{
    for (const auto& t : support_) {
        if (!t.coefficient.is_constant())
            throw SpecError("coefficient of " + t.exponents.to_string() + " is symbolic");
        if (t.coefficient.constant().sign() <= 0)
            throw SpecError("coefficient of " + t.exponents.to_string() + " must be positive");
    }
}

std::vector<Unknown> PotentialSpec::unknowns() const
{
    std::vector<UnknownId> ids;
    for (const auto& t : support_)
        for (UnknownId id : t.coefficient.unknowns())
            if (id != kEinsteinConstant)
                ids.push_back(id);
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    std::vector<Unknown> out;
    for (UnknownId id : ids) {
        if (const Unknown* u = symbols_.find(id))
            out.push_back(*u);
        else
            out.push_back(Unknown{id, std::nullopt, symbols_.name(id)});
    }
    return out;
}

std::optional<CoefPoly> PotentialSpec::coefficient(const MultiIndex& m) const
{
    for (const auto& t : support_)
        if (t.exponents == m)
            return t.coefficient;
    return std::nullopt;
}

PotentialSpec PotentialSpec::substitute(const std::map<UnknownId, CoefPoly>& values) const
{
    std::vector<SupportTerm> support;
    for (const auto& t : support_) {
        CoefPoly c = t.coefficient.substitute(values);
        if (!c.is_zero())
            support.push_back({t.exponents, std::move(c)});
    }
    return PotentialSpec(n_, std::move(support), symbols_);
}

PotentialSpec PotentialSpec::permuted(std::span<const std::size_t> perm) const
{
    if (perm.size() != n_)
        throw UsageError("permutation length does not match dimension");
    std::vector<SupportTerm> support;
    for (const auto& t : support_)
        support.push_back({t.exponents.permuted(perm), t.coefficient});
    return PotentialSpec(n_, std::move(support), symbols_);
}

Series build_potential(const PotentialSpec& spec, unsigned truncation)
{
    if (truncation < spec.degree())
        throw UsageError("truncation " + std::to_string(truncation) + " below potential degree " +
                         std::to_string(spec.degree()));
    const std::size_t n = spec.dimension();
    Series p = Series::constant(n, truncation, CoefPoly(Rational(1)));
    for (std::size_t a = 0; a < n; ++a)
        p.add_term(MultiIndex::unit(n, a), CoefPoly(Rational(1)));
    for (const auto& t : spec.support())
        p.add_term(t.exponents, t.coefficient);
    return p;
}

Rational degree_bound_lambda(const PotentialSpec& spec)
{
    return Rational(static_cast<long>(2 * spec.dimension()), static_cast<long>(spec.degree()));
}

NormalizedPotential bochner_normalize(const Series& phi)
{
    if (!phi.is_numeric())
        throw UsageError("bochner_normalize requires numeric coefficients");
    if (!phi.constant_term().is_zero())
        throw DomainError("potential must vanish at the center");
    const std::size_t n = phi.dimension();
    std::vector<Rational> scaling;
    scaling.reserve(n);
    for (std::size_t a = 0; a < n; ++a) {
        const Rational c = phi.coefficient(MultiIndex::unit(n, a)).constant();
        if (c.sign() <= 0)
            throw DomainError("metric degenerate at center: linear coefficient of x" + std::to_string(a + 1) +
                              " is " + c.to_string());
        scaling.push_back(c.inverse());
    }
    return {phi.rescaled(scaling), scaling};
}

} // namespace kemetric
