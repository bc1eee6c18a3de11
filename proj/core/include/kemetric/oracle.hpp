#ifndef KEMETRIC_ORACLE_HPP
#define KEMETRIC_ORACLE_HPP

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kemetric/multi_index.hpp"
#include "kemetric/potential.hpp"
#include "kemetric/rational.hpp"

// Brute-force z-space implementation of the metric numerator determinant.
// It shares only Rational with the rest of the engine (MultiIndex appears at
// the boundary, in rotation_project's output) and differentiates and expands
// from scratch in the 2n variables z, z̄, so it can cross-check the x-space
// path.
namespace kemetric::oracle
{

inline constexpr std::size_t kMaxDimension = 3;

// Polynomial in z_1..z_n, z̄_1..z̄_n with exact rational coefficients,
// keyed by the exponent pair (m_z, m_zbar).
class BiPoly
{
public:
    using Exponents = std::vector<unsigned>;
    using Key = std::pair<Exponents, Exponents>;

    explicit BiPoly(std::size_t n) : n_(n) {}

    static BiPoly constant(std::size_t n, const Rational& c);

    std::size_t dimension() const { return n_; }
    const std::map<Key, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const Exponents& mz, const Exponents& mzbar, const Rational& c);

    BiPoly d_z(std::size_t var) const;
    BiPoly d_zbar(std::size_t var) const;

    bool is_rotation_invariant() const;

    BiPoly operator+(const BiPoly& o) const;
    BiPoly operator-(const BiPoly& o) const;
    BiPoly operator*(const BiPoly& o) const;
    BiPoly operator-() const;

    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

private:
    std::size_t n_;
    std::map<Key, Rational> terms_;
};

// P(z, z̄) = 1 + sum z_a z̄_a + sum_j c_j z^{m_j} z̄^{m_j}.
BiPoly potential_polynomial(const PotentialSpec& spec);

// det(P P_{z_a z̄_b} - P_{z_a} P_{z̄_b}) by literal Leibniz expansion over all
// permutations. Refuses n > kMaxDimension and symbolic coefficients.
BiPoly zspace_det_numerator(const PotentialSpec& spec);

// Keeps the terms with m_z = m_zbar, rewritten in x = |z|^2.
struct RotationProjection
{
    std::map<MultiIndex, Rational> invariant;
    std::map<BiPoly::Key, Rational> discarded;
};

RotationProjection rotation_project(const BiPoly& b);

// Same, but a nonzero discarded part is an EngineError.
std::map<MultiIndex, Rational> rotation_project_lossless(const BiPoly& b);

} // namespace kemetric::oracle

#endif
