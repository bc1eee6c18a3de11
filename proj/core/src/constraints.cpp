#include "kemetric/constraints.hpp"

#include <algorithm>

#include "kemetric/metric.hpp"

namespace kemetric
{

bool ConstraintSystem::has_unknown(UnknownId id) const
{
    return std::any_of(unknowns.begin(), unknowns.end(), [id](const Unknown& u) { return u.id == id; });
}

std::string ConstraintSystem::to_string() const
{
    std::string out;
    for (const auto& eq : equations)
        out += "[" + eq.monomial.to_string() + "] " + eq.lhs.to_string(symbols) + " = 0\n";
    return out;
}

ConstraintSystem extract_constraints(const PotentialSpec& spec, unsigned degree)
{
    return extract_constraints(spec, degree, CoefPoly::variable(kEinsteinConstant));
}

ConstraintSystem extract_constraints(const PotentialSpec& spec, unsigned degree, const CoefPoly& lambda)
{
    ConstraintSystem sys;
    sys.dimension = spec.dimension();
    sys.degree = degree;
    sys.symbols = spec.symbols();

    bool lambda_symbolic = lambda.involves(kEinsteinConstant);
    for (const auto& t : spec.support())
        lambda_symbolic = lambda_symbolic || t.coefficient.involves(kEinsteinConstant);
    if (lambda_symbolic) {
        if (!sys.symbols.contains(kEinsteinConstant))
            sys.symbols.add(Unknown::einstein_constant());
        sys.unknowns.push_back(*sys.symbols.find(kEinsteinConstant));
    }
    for (const auto& u : spec.unknowns()) {
        sys.unknowns.push_back(u);
        sys.positive.push_back(u.id);
        if (!sys.symbols.contains(u.id))
            sys.symbols.add(u);
    }

    const Series p = build_potential(spec, spec.degree());
    const Series r = ma_log_residual(p, lambda, degree);
    for (const auto& [m, c] : r.terms())
        sys.equations.push_back({m, c});
    return sys;
}

} // namespace kemetric
