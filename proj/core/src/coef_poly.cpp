#include "kemetric/coef_poly.hpp"

#include <algorithm>

namespace kemetric
{

namespace
{

unsigned monomial_degree(const CoefPoly::Monomial& m)
{
    unsigned d = 0;
    for (const auto& [id, e] : m)
        d += e;
    return d;
}

// Display order: higher degree first, then lexicographically smaller ids first.
bool display_before(const CoefPoly::Monomial& a, const CoefPoly::Monomial& b)
{
    const unsigned da = monomial_degree(a);
    const unsigned db = monomial_degree(b);
    if (da != db)
        return da > db;
    const std::size_t len = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < len; ++i) {
        if (a[i].first != b[i].first)
            return a[i].first < b[i].first;
        if (a[i].second != b[i].second)
            return a[i].second > b[i].second;
    }
    return a.size() > b.size();
}

} // namespace

CoefPoly::Monomial multiply_monomials(const CoefPoly::Monomial& a, const CoefPoly::Monomial& b)
{
    if (a.empty())
        return b;
    if (b.empty())
        return a;
    CoefPoly::Monomial out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first))
            out.push_back(a[i++]);
        else if (i == a.size() || b[j].first < a[i].first)
            out.push_back(b[j++]);
        else {
            out.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i;
            ++j;
        }
    }
    return out;
}

CoefPoly::CoefPoly(const Rational& c)
{
    if (!c.is_zero())
        terms_.emplace(Monomial{}, c);
}

CoefPoly CoefPoly::variable(UnknownId id) { return monomial(Monomial{{id, 1}}, Rational(1)); }

CoefPoly CoefPoly::monomial(Monomial m, const Rational& c)
{
    CoefPoly p;
    if (!c.is_zero())
        p.terms_.emplace(std::move(m), c);
    return p;
}

bool CoefPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

Rational CoefPoly::constant() const
{
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Rational() : it->second;
}

std::optional<Rational> CoefPoly::as_constant() const
{
    if (!is_constant())
        return std::nullopt;
    return constant();
}

unsigned CoefPoly::total_degree() const
{
    unsigned d = 0;
    for (const auto& [m, c] : terms_)
        d = std::max(d, monomial_degree(m));
    return d;
}

unsigned CoefPoly::degree_in(UnknownId id) const
{
    unsigned d = 0;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m)
            if (v == id)
                d = std::max(d, e);
    return d;
}

std::vector<UnknownId> CoefPoly::unknowns() const
{
    std::vector<UnknownId> ids;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m)
            ids.push_back(v);
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

CoefPoly CoefPoly::coefficient_of(UnknownId id, unsigned k) const
{
    CoefPoly out;
    for (const auto& [m, c] : terms_) {
        unsigned e = 0;
        Monomial rest;
        rest.reserve(m.size());
        for (const auto& ve : m) {
            if (ve.first == id)
                e = ve.second;
            else
                rest.push_back(ve);
        }
        if (e == k)
            out.add_term(rest, c);
    }
    return out;
}

CoefPoly CoefPoly::substitute(UnknownId id, const CoefPoly& value) const
{
    if (!involves(id))
        return *this;
    std::vector<CoefPoly> powers{CoefPoly(Rational(1))};
    CoefPoly out;
    for (const auto& [m, c] : terms_) {
        unsigned e = 0;
        Monomial rest;
        rest.reserve(m.size());
        for (const auto& ve : m) {
            if (ve.first == id)
                e = ve.second;
            else
                rest.push_back(ve);
        }
        if (e == 0) {
            out.add_term(rest, c);
            continue;
        }
        while (powers.size() <= e)
            powers.push_back(powers.back() * value);
        out.add_product(CoefPoly::monomial(rest, c), powers[e]);
    }
    return out;
}

CoefPoly CoefPoly::substitute(const std::map<UnknownId, CoefPoly>& values) const
{
    CoefPoly out = *this;
    for (const auto& [id, v] : values)
        out = out.substitute(id, v);
    return out;
}

CoefPoly::Monomial CoefPoly::monomial_content(const std::vector<UnknownId>& ids) const
{
    Monomial content;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Monomial restricted;
        for (const auto& ve : m)
            if (std::binary_search(ids.begin(), ids.end(), ve.first))
                restricted.push_back(ve);
        if (first) {
            content = std::move(restricted);
            first = false;
            continue;
        }
        Monomial g;
        std::size_t i = 0;
        std::size_t j = 0;
        while (i < content.size() && j < restricted.size()) {
            if (content[i].first < restricted[j].first)
                ++i;
            else if (restricted[j].first < content[i].first)
                ++j;
            else {
                g.emplace_back(content[i].first, std::min(content[i].second, restricted[j].second));
                ++i;
                ++j;
            }
        }
        content = std::move(g);
        if (content.empty())
            break;
    }
    return content;
}

CoefPoly CoefPoly::divide_monomial(const Monomial& d) const
{
    if (d.empty())
        return *this;
    CoefPoly out;
    for (const auto& [m, c] : terms_) {
        Monomial q;
        std::size_t j = 0;
        for (const auto& ve : m) {
            if (j < d.size() && d[j].first == ve.first) {
                if (ve.second > d[j].second)
                    q.emplace_back(ve.first, ve.second - d[j].second);
                ++j;
            } else {
                q.push_back(ve);
            }
        }
        out.add_term(q, c);
    }
    return out;
}

CoefPoly CoefPoly::primitive() const
{
    if (terms_.empty())
        return *this;
    Integer den_lcm = 1;
    Integer num_gcd = 0;
    for (const auto& [m, c] : terms_) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.value().get_den_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.value().get_num_mpz_t());
    }
    Rational scale(den_lcm, num_gcd);
    const auto ordered = ordered_terms();
    if (ordered.front().second.sign() < 0)
        scale = -scale;
    return *this * scale;
}

void CoefPoly::add_term(const Monomial& m, const Rational& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

CoefPoly& CoefPoly::operator+=(const CoefPoly& o)
{
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

CoefPoly& CoefPoly::operator-=(const CoefPoly& o)
{
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

CoefPoly& CoefPoly::operator*=(const CoefPoly& o)
{
    *this = *this * o;
    return *this;
}

CoefPoly& CoefPoly::operator*=(const Rational& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_)
        v *= c;
    return *this;
}

void CoefPoly::add_product(const CoefPoly& a, const CoefPoly& b)
{
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m = multiply_monomials(ma, mb);
            auto [it, inserted] = terms_.try_emplace(std::move(m));
            it->second.add_product(ca, cb);
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }
}

CoefPoly operator*(const CoefPoly& a, const CoefPoly& b)
{
    CoefPoly out;
    if (a.is_zero() || b.is_zero())
        return out;
    out.add_product(a, b);
    return out;
}

CoefPoly CoefPoly::operator-() const
{
    CoefPoly out = *this;
    for (auto& [m, c] : out.terms_)
        c = -c;
    return out;
}

std::vector<std::pair<CoefPoly::Monomial, Rational>> CoefPoly::ordered_terms() const
{
    std::vector<std::pair<Monomial, Rational>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return display_before(a.first, b.first); });
    return out;
}

std::string CoefPoly::to_string(const SymbolTable& names) const
{
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : ordered_terms()) {
        const bool negative = c.sign() < 0;
        const Rational mag = c.abs();
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        std::string factors;
        for (const auto& [id, e] : m) {
            if (!factors.empty())
                factors += '*';
            factors += names.name(id);
            if (e > 1)
                factors += '^' + std::to_string(e);
        }
        if (factors.empty())
            out += mag.to_string();
        else if (mag == Rational(1))
            out += factors;
        else
            out += mag.to_string() + '*' + factors;
    }
    return out;
}

CoefPoly pow(const CoefPoly& base, unsigned exponent)
{
    CoefPoly result(Rational(1));
    CoefPoly b = base;
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
