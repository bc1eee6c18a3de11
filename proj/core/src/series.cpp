#include "kemetric/series.hpp"

#include "kemetric/errors.hpp"

namespace kemetric
{

Series::Series(std::size_t n, unsigned truncation) : n_(n), truncation_(truncation)
{
    if (n == 0)
        throw UsageError("series dimension must be positive");
}

Series Series::constant(std::size_t n, unsigned truncation, const CoefPoly& c)
{
    Series s(n, truncation);
    s.add_term(MultiIndex(n), c);
    return s;
}

Series Series::variable(std::size_t n, unsigned truncation, std::size_t var)
{
    Series s(n, truncation);
    s.add_term(MultiIndex::unit(n, var), CoefPoly(Rational(1)));
    return s;
}

Series Series::monomial(std::size_t n, unsigned truncation, const MultiIndex& m, const CoefPoly& c)
{
    Series s(n, truncation);
    s.add_term(m, c);
    return s;
}

CoefPoly Series::coefficient(const MultiIndex& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? CoefPoly() : it->second;
}

CoefPoly Series::constant_term() const { return coefficient(MultiIndex(n_)); }

unsigned Series::max_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.degree(); }

bool Series::is_numeric() const
{
    for (const auto& [m, c] : terms_)
        if (!c.is_constant())
            return false;
    return true;
}

void Series::add_term(const MultiIndex& m, const CoefPoly& c)
{
    if (m.size() != n_)
        throw UsageError("monomial length " + std::to_string(m.size()) + " does not match series dimension " +
                         std::to_string(n_));
    if (m.degree() > truncation_ || c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

Series Series::with_truncation(unsigned truncation) const
{
    Series s(n_, truncation);
    for (const auto& [m, c] : terms_)
        if (m.degree() <= truncation)
            s.terms_.emplace_hint(s.terms_.end(), m, c);
    return s;
}

Series Series::truncated_to(unsigned d) const
{
    Series s(n_, truncation_);
    for (const auto& [m, c] : terms_)
        if (m.degree() <= d)
            s.terms_.emplace_hint(s.terms_.end(), m, c);
    return s;
}

Series Series::substitute(UnknownId id, const CoefPoly& value) const
{
    Series s(n_, truncation_);
    for (const auto& [m, c] : terms_)
        s.add_term(m, c.substitute(id, value));
    return s;
}

Series Series::substitute(const std::map<UnknownId, CoefPoly>& values) const
{
    Series s(n_, truncation_);
    for (const auto& [m, c] : terms_)
        s.add_term(m, c.substitute(values));
    return s;
}

Series Series::rescaled(std::span<const Rational> scale) const
{
    if (scale.size() != n_)
        throw UsageError("scaling vector length does not match series dimension");
    Series s(n_, truncation_);
    for (const auto& [m, c] : terms_) {
        Rational f(1);
        for (std::size_t a = 0; a < n_; ++a)
            if (m[a])
                f *= pow(scale[a], m[a]);
        s.add_term(m, c * f);
    }
    return s;
}

void Series::require_compatible(const Series& o) const
{
    if (o.n_ != n_)
        throw UsageError("series dimension mismatch: " + std::to_string(n_) + " vs " + std::to_string(o.n_));
    if (o.truncation_ != truncation_)
        throw UsageError("series truncation mismatch: " + std::to_string(truncation_) + " vs " +
                         std::to_string(o.truncation_));
}

Series& Series::operator+=(const Series& o)
{
    require_compatible(o);
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

Series& Series::operator-=(const Series& o)
{
    require_compatible(o);
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

Series& Series::operator*=(const CoefPoly& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    TermMap out;
    for (auto& [m, v] : terms_) {
        CoefPoly p = v * c;
        if (!p.is_zero())
            out.emplace_hint(out.end(), m, std::move(p));
    }
    terms_ = std::move(out);
    return *this;
}

Series operator*(const Series& a, const Series& b)
{
    a.require_compatible(b);
    Series out(a.n_, a.truncation_);
    if (a.is_zero() || b.is_zero())
        return out;
    // Terms are stored by ascending degree, so once |ma| + |mb| exceeds the
    // truncation the rest of b can be skipped.
    for (const auto& [ma, ca] : a.terms_) {
        if (ma.degree() > a.truncation_)
            break;
        const unsigned room = a.truncation_ - ma.degree();
        for (const auto& [mb, cb] : b.terms_) {
            if (mb.degree() > room)
                break;
            auto [it, inserted] = out.terms_.try_emplace(ma + mb);
            it->second.add_product(ca, cb);
        }
    }
    std::erase_if(out.terms_, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

Series Series::operator-() const
{
    Series s = *this;
    for (auto& [m, c] : s.terms_)
        c = -c;
    return s;
}

std::string Series::to_string(const SymbolTable& names) const
{
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first)
            out += " + ";
        first = false;
        std::string cs = c.to_string(names);
        if (c.size() > 1)
            cs = "(" + cs + ")";
        if (m.is_zero())
            out += cs;
        else if (c == CoefPoly(Rational(1)))
            out += m.to_string();
        else
            out += cs + "*" + m.to_string();
    }
    return out;
}

namespace
{

void require_zero_constant(const Series& u, const char* op)
{
    if (!u.constant_term().is_zero())
        throw DomainError(std::string(op) + ": argument must have zero constant term");
}

} // namespace

Series log1p(const Series& u)
{
    require_zero_constant(u, "log1p");
    Series result(u.dimension(), u.truncation());
    if (u.is_zero())
        return result;
    Series power = u;
    for (unsigned k = 1; k <= u.truncation() && !power.is_zero(); ++k) {
        const Rational c(k % 2 == 1 ? 1L : -1L, static_cast<long>(k));
        result += power * CoefPoly(c);
        if (k < u.truncation())
            power = power * u;
    }
    return result;
}

Series exp(const Series& u)
{
    require_zero_constant(u, "exp");
    const std::size_t n = u.dimension();
    Series result = Series::constant(n, u.truncation(), CoefPoly(Rational(1)));
    Series term = result;
    for (unsigned k = 1; k <= u.truncation(); ++k) {
        term = term * u;
        if (term.is_zero())
            break;
        term *= CoefPoly(Rational(1L, static_cast<long>(k)));
        result += term;
    }
    return result;
}

Series diff(const Series& f, std::size_t var)
{
    if (var >= f.dimension())
        throw UsageError("derivative variable index " + std::to_string(var + 1) + " out of range 1.." +
                         std::to_string(f.dimension()));
    Series out(f.dimension(), f.truncation());
    const MultiIndex unit = MultiIndex::unit(f.dimension(), var);
    for (const auto& [m, c] : f.terms()) {
        if (m[var] == 0)
            continue;
        out.add_term(m - unit, c * Rational(static_cast<long>(m[var])));
    }
    return out;
}

Series pow(const Series& base, unsigned exponent)
{
    Series result = Series::constant(base.dimension(), base.truncation(), CoefPoly(Rational(1)));
    Series b = base;
    while (exponent) {
        if (exponent & 1U)
            result = result * b;
        exponent >>= 1U;
        if (exponent)
            b = b * b;
    }
    return result;
}

} // namespace kemetric
