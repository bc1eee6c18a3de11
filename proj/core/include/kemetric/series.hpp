#ifndef KEMETRIC_SERIES_HPP
#define KEMETRIC_SERIES_HPP

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "kemetric/coef_poly.hpp"
#include "kemetric/multi_index.hpp"

namespace kemetric
{

// Power series in x = (x_1, ..., x_n) truncated at total degree D, with
// CoefPoly coefficients. Terms of degree > D are discarded by every
// operation. Two series may only be combined when both n and D agree.
//
// There is deliberately no division: identities are arranged with log1p,
// exp and cleared denominators instead.
class Series
{
public:
    using TermMap = std::map<MultiIndex, CoefPoly>;

    Series(std::size_t n, unsigned truncation);

    static Series constant(std::size_t n, unsigned truncation, const CoefPoly& c);
    // x_var (0-based)
    static Series variable(std::size_t n, unsigned truncation, std::size_t var);
    static Series monomial(std::size_t n, unsigned truncation, const MultiIndex& m, const CoefPoly& c);

    std::size_t dimension() const { return n_; }
    unsigned truncation() const { return truncation_; }

    const TermMap& terms() const { return terms_; }
    CoefPoly coefficient(const MultiIndex& m) const;
    CoefPoly constant_term() const;
    bool is_zero() const { return terms_.empty(); }
    // Highest degree carrying a nonzero coefficient (0 for the zero series).
    unsigned max_degree() const;
    bool is_numeric() const;

    // Adds c * x^m; terms beyond the truncation are dropped.
    void add_term(const MultiIndex& m, const CoefPoly& c);

    // Same terms under another truncation. Lowering discards terms; raising
    // treats the stored terms as an exact polynomial.
    Series with_truncation(unsigned truncation) const;

    // Terms of degree <= d only, keeping the truncation.
    Series truncated_to(unsigned d) const;

    Series substitute(UnknownId id, const CoefPoly& value) const;
    Series substitute(const std::map<UnknownId, CoefPoly>& values) const;

    // x_a -> scale[a] * x_a
    Series rescaled(std::span<const Rational> scale) const;

    Series& operator+=(const Series& o);
    Series& operator-=(const Series& o);
    Series& operator*=(const CoefPoly& c);

    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator*(const Series& a, const Series& b);
    friend Series operator*(Series a, const CoefPoly& c) { return a *= c; }
    friend Series operator*(const CoefPoly& c, Series a) { return a *= c; }
    Series operator-() const;

    friend bool operator==(const Series& a, const Series& b)
    {
        return a.n_ == b.n_ && a.truncation_ == b.truncation_ && a.terms_ == b.terms_;
    }

    std::string to_string(const SymbolTable& names = {}) const;

private:
    void require_compatible(const Series& o) const;

    std::size_t n_;
    unsigned truncation_;
    TermMap terms_;
};

// log(1 + u) = sum_{k>=1} (-1)^{k+1} u^k / k; u must have zero constant term.
Series log1p(const Series& u);

// sum_{k>=0} u^k / k!; u must have zero constant term.
Series exp(const Series& u);

// Formal partial derivative d/dx_var (0-based), stored at the same truncation.
Series diff(const Series& f, std::size_t var);

Series pow(const Series& base, unsigned exponent);

} // namespace kemetric

#endif
