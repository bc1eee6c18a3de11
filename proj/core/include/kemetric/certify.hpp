#ifndef KEMETRIC_CERTIFY_HPP
#define KEMETRIC_CERTIFY_HPP

#include <optional>
#include <string>

#include "kemetric/multi_index.hpp"
#include "kemetric/potential.hpp"
#include "kemetric/rational.hpp"

namespace kemetric
{

struct EinsteinCandidate
{
    PotentialSpec spec;
    Rational lambda;
};

// Outcome of the truncation-free Einstein check. With lambda/2 = p/q in
// lowest terms, det g = P^(-lambda/2) is equivalent to the polynomial
// identity det(M)^q = P^(2nq - p); both sides are expanded exactly.
struct Certificate
{
    bool pass = false;
    Integer half_lambda_num;  // p
    Integer half_lambda_den;  // q
    unsigned potential_exponent = 0;  // 2nq - p
    unsigned degree = 0;              // degree both sides were expanded to
    std::string lhs_hash;
    std::string rhs_hash;
    // First monomial (graded order) where the sides differ, on FAIL.
    std::optional<MultiIndex> witness;
    Rational lhs_coefficient;
    Rational rhs_coefficient;
};

// Largest total degree either side may be expanded to.
inline constexpr unsigned kMaxCertificateDegree = 96;

// Requires a numeric spec and lambda > 0 with 2nq - p >= 0; throws
// UsageError / DomainError otherwise.
Certificate certify_exact(const EinsteinCandidate& candidate);

// 64-bit FNV-1a over the canonical text of a numeric series, as hex.
std::string polynomial_hash(const Series& s);

} // namespace kemetric

#endif
