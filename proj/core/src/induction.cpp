#include "kemetric/induction.hpp"

#include "kemetric/errors.hpp"

namespace kemetric
{

const char* to_string(InductionVerdict v)
{
    switch (v) {
    case InductionVerdict::InducedUpToDegree:
        return "INDUCED-UP-TO-D";
    case InductionVerdict::NotInduced:
        return "NOT-INDUCED";
    }
    return "?";
}

InductionReport projective_induction_check(const Series& phi, unsigned degree)
{
    if (!phi.is_numeric())
        throw UsageError("induction check requires numeric coefficients");
    if (phi.truncation() < degree)
        throw UsageError("potential truncated at " + std::to_string(phi.truncation()) + " cannot be inspected to degree " +
                         std::to_string(degree));
    if (!phi.constant_term().is_zero())
        throw DomainError("potential must vanish at the center");

    const std::size_t n = phi.dimension();
    const Series e = exp(phi.with_truncation(degree)) - Series::constant(n, degree, CoefPoly(Rational(1)));

    InductionReport report;
    report.degree = degree;
    for (const auto& [m, c] : e.terms()) {
        const Rational v = c.constant();
        report.coefficients.emplace_back(m, v);
        if (v.sign() < 0 && !report.witness) {
            report.witness = m;
            report.verdict = InductionVerdict::NotInduced;
        }
    }
    report.codimension = static_cast<long>(report.coefficients.size()) - static_cast<long>(n);
    return report;
}

} // namespace kemetric
