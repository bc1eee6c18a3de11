#ifndef KEMETRIC_UNIVARIATE_HPP
#define KEMETRIC_UNIVARIATE_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "kemetric/coef_poly.hpp"
#include "kemetric/rational.hpp"

namespace kemetric
{

// Dense univariate polynomial over Q; coeffs()[i] multiplies t^i. The
// leading coefficient of a nonzero polynomial is nonzero.
class UniPoly
{
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);

    // p must involve no unknown other than `var`.
    static UniPoly from_coef_poly(const CoefPoly& p, UnknownId var);
    CoefPoly to_coef_poly(UnknownId var) const;

    bool is_zero() const { return c_.empty(); }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& leading() const { return c_.back(); }

    Rational operator()(const Rational& t) const;
    UniPoly derivative() const;
    UniPoly monic() const;

    // Quotient and remainder; divisor must be nonzero.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend bool operator==(const UniPoly&, const UniPoly&) = default;

private:
    void trim();

    std::vector<Rational> c_;
};

// Monic gcd (zero if both are zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);

UniPoly squarefree_part(const UniPoly& p);

// All distinct rational roots, ascending, via the rational root theorem on
// the integer-cleared polynomial. Empty optional when a coefficient is too
// large to factor by trial division.
std::optional<std::vector<Rational>> rational_roots(const UniPoly& p);

// Number of distinct real roots in the open interval (lo, +inf), by Sturm
// sequences. p must be nonzero.
std::size_t real_roots_above(const UniPoly& p, const Rational& lo);
// Number of distinct real roots.
std::size_t real_root_count(const UniPoly& p);

// Resultant of f and g with respect to v, where f and g involve only the
// unknowns u and v. The result is a polynomial in u vanishing at the
// u-coordinate of every common root.
UniPoly resultant(const CoefPoly& f, const CoefPoly& g, UnknownId u, UnknownId v);

} // namespace kemetric

#endif
