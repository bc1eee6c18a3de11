#ifndef KEMETRIC_INDUCTION_HPP
#define KEMETRIC_INDUCTION_HPP

#include <optional>
#include <utility>
#include <vector>

#include "kemetric/multi_index.hpp"
#include "kemetric/rational.hpp"
#include "kemetric/series.hpp"

namespace kemetric
{

enum class InductionVerdict
{
    InducedUpToDegree,
    NotInduced,
};

const char* to_string(InductionVerdict v);

// Coefficients of E = e^Phi - 1 through degree D. A projectively induced
// rotation-invariant diastasis has E = sum_j |f_j|^2 with monomial f_j, so
// every coefficient must be >= 0 and their number is N. A nonnegative
// verdict only covers the inspected degrees.
struct InductionReport
{
    InductionVerdict verdict = InductionVerdict::InducedUpToDegree;
    unsigned degree = 0;
    std::vector<std::pair<MultiIndex, Rational>> coefficients; // nonzero, graded order
    long codimension = 0;                                      // #nonzero - n
    std::optional<MultiIndex> witness;                         // first negative coefficient
};

// phi: numeric series with phi(0) = 0 and truncation >= degree.
InductionReport projective_induction_check(const Series& phi, unsigned degree);

} // namespace kemetric

#endif
