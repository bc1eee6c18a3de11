#ifndef KEMETRIC_CLASSIFY_HPP
#define KEMETRIC_CLASSIFY_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "kemetric/potential.hpp"
#include "kemetric/rational.hpp"

namespace kemetric
{

enum class ModelKind
{
    CPnUnit,        // P = 1 + sum x
    CPnScaled,      // P = (1 + sum x / q)^q, q >= 2
    ProductOfLines, // product over >= 2 variable blocks of scaled models
    Unknown,
};

struct ModelBlock
{
    std::vector<std::size_t> variables; // 0-based, ascending
    unsigned q = 1;
};

struct ModelTag
{
    ModelKind kind = ModelKind::Unknown;
    unsigned q = 1;                  // CPnScaled only
    std::vector<ModelBlock> blocks;  // ProductOfLines only

    // "CPn_unit", "CPn_scaled(2)", "ProductOfLines", "UNKNOWN".
    std::string to_string() const;
    // Block structure, e.g. "(1+x1)(1+x2)"; empty unless ProductOfLines.
    std::string detail() const;

    friend bool operator==(const ModelTag&, const ModelTag&) = default;
};

// Matches P against the model potentials up to variable permutation. The
// result is cross-checked against the rational Einstein constant: writing
// lambda/2 = p/q in lowest terms, p <= n + 1 always, p = n + 1 forces the
// complex projective model with that q, and n = p = 2 forces the product of
// lines. A disagreement throws EngineError.
// Requires a numeric spec with positive coefficients and a certified lambda.
ModelTag classify(const PotentialSpec& spec, const Rational& lambda);

// The potential matching alone, without the lambda cross-check.
ModelTag match_model(const PotentialSpec& spec);

} // namespace kemetric

#endif
