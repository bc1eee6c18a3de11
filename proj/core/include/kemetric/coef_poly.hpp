#ifndef KEMETRIC_COEF_POLY_HPP
#define KEMETRIC_COEF_POLY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kemetric/rational.hpp"
#include "kemetric/unknown.hpp"

namespace kemetric
{

// Sparse polynomial with Rational coefficients in the symbolic unknowns
// (support coefficients and the Einstein constant). This is the coefficient
// domain of every Series, so numeric values are just constant CoefPolys.
class CoefPoly
{
public:
    // Unknown power product, sorted by id, exponents > 0. Empty means 1.
    using Monomial = std::vector<std::pair<UnknownId, std::uint32_t>>;
    using TermMap = std::map<Monomial, Rational>;

    CoefPoly() = default;
    CoefPoly(const Rational& c);
    CoefPoly(int c) : CoefPoly(Rational(c)) {}
    static CoefPoly variable(UnknownId id);
    static CoefPoly monomial(Monomial m, const Rational& c);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Constant term (zero if absent).
    Rational constant() const;
    std::optional<Rational> as_constant() const;

    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    unsigned total_degree() const;
    unsigned degree_in(UnknownId id) const;
    bool involves(UnknownId id) const { return degree_in(id) > 0; }
    std::vector<UnknownId> unknowns() const;

    // Coefficient of id^k, as a polynomial in the other unknowns.
    CoefPoly coefficient_of(UnknownId id, unsigned k) const;

    CoefPoly substitute(UnknownId id, const CoefPoly& value) const;
    CoefPoly substitute(const std::map<UnknownId, CoefPoly>& values) const;

    // Largest power product dividing every term, restricted to the given ids.
    Monomial monomial_content(const std::vector<UnknownId>& ids) const;
    CoefPoly divide_monomial(const Monomial& m) const;

    // Scaled to integer coefficients with gcd 1 and a positive leading
    // coefficient (first term in display order).
    CoefPoly primitive() const;

    CoefPoly& operator+=(const CoefPoly& o);
    CoefPoly& operator-=(const CoefPoly& o);
    CoefPoly& operator*=(const CoefPoly& o);
    CoefPoly& operator*=(const Rational& c);
    // this += a * b without materialising the product.
    void add_product(const CoefPoly& a, const CoefPoly& b);

    friend CoefPoly operator+(CoefPoly a, const CoefPoly& b) { return a += b; }
    friend CoefPoly operator-(CoefPoly a, const CoefPoly& b) { return a -= b; }
    friend CoefPoly operator*(const CoefPoly& a, const CoefPoly& b);
    friend CoefPoly operator*(CoefPoly a, const Rational& c) { return a *= c; }
    friend CoefPoly operator*(const Rational& c, CoefPoly a) { return a *= c; }
    CoefPoly operator-() const;

    friend bool operator==(const CoefPoly& a, const CoefPoly& b) { return a.terms_ == b.terms_; }

    // Terms by descending total degree, then ascending unknown ids; the
    // constant comes last. "1/2*lambda + 4*a1 + b - 3".
    std::string to_string(const SymbolTable& names = {}) const;

    // Terms in display order.
    std::vector<std::pair<Monomial, Rational>> ordered_terms() const;

private:
    void add_term(const Monomial& m, const Rational& c);

    TermMap terms_;
};

CoefPoly pow(const CoefPoly& base, unsigned exponent);

CoefPoly::Monomial multiply_monomials(const CoefPoly::Monomial& a, const CoefPoly::Monomial& b);

} // namespace kemetric

#endif
