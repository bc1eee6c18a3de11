#include "kemetric/univariate.hpp"

#include <algorithm>

#include "kemetric/errors.hpp"

namespace kemetric
{

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UniPoly::trim()
{
    while (!c_.empty() && c_.back().is_zero())
        c_.pop_back();
}

UniPoly UniPoly::from_coef_poly(const CoefPoly& p, UnknownId var)
{
    std::vector<Rational> c;
    for (const auto& [m, v] : p.terms()) {
        unsigned e = 0;
        for (const auto& [id, k] : m) {
            if (id != var)
                throw UsageError("polynomial is not univariate in the requested unknown");
            e = k;
        }
        if (c.size() <= e)
            c.resize(e + 1);
        c[e] += v;
    }
    return UniPoly(std::move(c));
}

CoefPoly UniPoly::to_coef_poly(UnknownId var) const
{
    CoefPoly out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero())
            continue;
        if (i == 0)
            out += CoefPoly(c_[i]);
        else
            out += CoefPoly::monomial({{var, static_cast<std::uint32_t>(i)}}, c_[i]);
    }
    return out;
}

Rational UniPoly::operator()(const Rational& t) const
{
    Rational acc;
    for (std::size_t i = c_.size(); i-- > 0;)
        acc = acc * t + c_[i];
    return acc;
}

UniPoly UniPoly::derivative() const
{
    std::vector<Rational> d;
    for (std::size_t i = 1; i < c_.size(); ++i)
        d.push_back(c_[i] * Rational(static_cast<long>(i)));
    return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const
{
    if (is_zero())
        return *this;
    const Rational inv = leading().inverse();
    std::vector<Rational> c = c_;
    for (auto& v : c)
        v *= inv;
    return UniPoly(std::move(c));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const
{
    if (divisor.is_zero())
        throw DomainError("polynomial division by zero");
    std::vector<Rational> rem = c_;
    const int dd = divisor.degree();
    if (degree() < dd)
        return {UniPoly(), *this};
    std::vector<Rational> quot(static_cast<std::size_t>(degree() - dd + 1));
    const Rational inv = divisor.leading().inverse();
    for (int i = degree(); i >= dd; --i) {
        const Rational f = rem[static_cast<std::size_t>(i)] * inv;
        if (f.is_zero())
            continue;
        quot[static_cast<std::size_t>(i - dd)] = f;
        for (int j = 0; j <= dd; ++j)
            rem[static_cast<std::size_t>(i - dd + j)] -= f * divisor.c_[static_cast<std::size_t>(j)];
    }
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly operator*(const UniPoly& a, const UniPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            c[i + j].add_product(a.c_[i], b.c_[j]);
    return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b)
{
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i)
        c[i] -= b.c_[i];
    return UniPoly(std::move(c));
}

UniPoly gcd(const UniPoly& a, const UniPoly& b)
{
    UniPoly x = a;
    UniPoly y = b;
    while (!y.is_zero()) {
        UniPoly r = x.divmod(y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

UniPoly squarefree_part(const UniPoly& p)
{
    if (p.degree() <= 0)
        return p.monic();
    const UniPoly g = gcd(p, p.derivative());
    return p.divmod(g).first.monic();
}

namespace
{

constexpr unsigned long kTrialDivisionLimit = 1000000;

// Prime factorisation of |v| by trial division; nullopt if a cofactor
// above the limit squared is left that is not a probable prime.
std::optional<std::vector<std::pair<Integer, unsigned>>> factorize(Integer v)
{
    std::vector<std::pair<Integer, unsigned>> out;
    v = abs(v);
    for (unsigned long d = 2; d <= kTrialDivisionLimit && Integer(d) * d <= v; d += (d == 2 ? 1 : 2)) {
        unsigned e = 0;
        while (mpz_divisible_ui_p(v.get_mpz_t(), d)) {
            v /= d;
            ++e;
        }
        if (e)
            out.emplace_back(Integer(d), e);
    }
    if (v > 1) {
        const Integer limit_sq = Integer(kTrialDivisionLimit) * kTrialDivisionLimit;
        if (v >= limit_sq && mpz_probab_prime_p(v.get_mpz_t(), 30) == 0)
            return std::nullopt;
        out.emplace_back(v, 1);
    }
    return out;
}

std::optional<std::vector<Integer>> divisors(const Integer& v)
{
    auto f = factorize(v);
    if (!f)
        return std::nullopt;
    std::vector<Integer> divs{Integer(1)};
    for (const auto& [prime, e] : *f) {
        const std::size_t base = divs.size();
        Integer pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= prime;
            for (std::size_t i = 0; i < base; ++i)
                divs.push_back(divs[i] * pk);
        }
    }
    return divs;
}

std::vector<UniPoly> sturm_sequence(const UniPoly& p)
{
    std::vector<UniPoly> seq{p, p.derivative()};
    while (!seq.back().is_zero()) {
        UniPoly r = seq[seq.size() - 2].divmod(seq.back()).second;
        if (r.is_zero())
            break;
        std::vector<Rational> neg = r.coeffs();
        for (auto& v : neg)
            v = -v;
        seq.emplace_back(std::move(neg));
    }
    if (seq.back().is_zero())
        seq.pop_back();
    return seq;
}

std::size_t sign_changes(const std::vector<int>& signs)
{
    std::size_t changes = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++changes;
        last = s;
    }
    return changes;
}

} // namespace

std::optional<std::vector<Rational>> rational_roots(const UniPoly& p)
{
    if (p.is_zero())
        throw DomainError("rational roots of the zero polynomial");
    std::vector<Rational> roots;
    // strip t^k
    std::size_t low = 0;
    while (p.coeffs()[low].is_zero())
        ++low;
    if (low > 0)
        roots.emplace_back(0);
    std::vector<Rational> shifted(p.coeffs().begin() + static_cast<std::ptrdiff_t>(low), p.coeffs().end());
    const UniPoly q(std::move(shifted));
    if (q.degree() >= 1) {
        Integer den_lcm = 1;
        for (const auto& c : q.coeffs())
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.value().get_den_mpz_t());
        const Integer a0 = (q.coeffs().front() * Rational(den_lcm)).numerator();
        const Integer an = (q.leading() * Rational(den_lcm)).numerator();
        const auto dn = divisors(a0);
        const auto dd = divisors(an);
        if (!dn || !dd)
            return std::nullopt;
        for (const auto& num : *dn) {
            for (const auto& den : *dd) {
                for (int s : {1, -1}) {
                    const Rational cand(s * num, den);
                    if (q(cand).is_zero() && std::find(roots.begin(), roots.end(), cand) == roots.end())
                        roots.push_back(cand);
                }
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::size_t real_roots_above(const UniPoly& p, const Rational& lo)
{
    if (p.is_zero())
        throw DomainError("root count of the zero polynomial");
    const UniPoly sf = squarefree_part(p);
    if (sf.degree() <= 0)
        return 0;
    const auto seq = sturm_sequence(sf);
    std::vector<int> at_lo;
    std::vector<int> at_inf;
    for (const auto& s : seq) {
        at_lo.push_back(s(lo).sign());
        at_inf.push_back(s.leading().sign());
    }
    // Zero entries are skipped; if lo itself is a root, just right of lo p
    // has the sign of p', so the count still covers (lo, inf) only.
    return sign_changes(at_lo) - sign_changes(at_inf);
}

std::size_t real_root_count(const UniPoly& p)
{
    if (p.is_zero())
        throw DomainError("root count of the zero polynomial");
    const UniPoly sf = squarefree_part(p);
    if (sf.degree() <= 0)
        return 0;
    const auto seq = sturm_sequence(sf);
    std::vector<int> at_neg;
    std::vector<int> at_pos;
    for (const auto& s : seq) {
        const int lead = s.leading().sign();
        at_pos.push_back(lead);
        at_neg.push_back(s.degree() % 2 == 0 ? lead : -lead);
    }
    return sign_changes(at_neg) - sign_changes(at_pos);
}

UniPoly resultant(const CoefPoly& f, const CoefPoly& g, UnknownId u, UnknownId v)
{
    auto coeffs = [&](const CoefPoly& p) {
        std::vector<UniPoly> c;
        for (unsigned k = 0; k <= p.degree_in(v); ++k)
            c.push_back(UniPoly::from_coef_poly(p.coefficient_of(v, k), u));
        return c;
    };
    const auto fc = coeffs(f);
    const auto gc = coeffs(g);
    const std::size_t m = fc.size() - 1;
    const std::size_t l = gc.size() - 1;
    const UniPoly one(std::vector<Rational>{Rational(1)});
    if (m == 0 || l == 0) {
        UniPoly r = one;
        for (std::size_t i = 0; i < l; ++i)
            r = r * fc[0];
        for (std::size_t i = 0; i < m; ++i)
            r = r * gc[0];
        return r;
    }

    // Sylvester matrix, then a fraction-free (Bareiss) determinant over Q[u].
    const std::size_t size = m + l;
    std::vector<std::vector<UniPoly>> a(size, std::vector<UniPoly>(size));
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j <= m; ++j)
            a[i][i + j] = fc[m - j];
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= l; ++j)
            a[l + i][i + j] = gc[l - j];

    bool negate = false;
    UniPoly prev = one;
    for (std::size_t k = 0; k + 1 < size; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t r = k + 1;
            while (r < size && a[r][k].is_zero())
                ++r;
            if (r == size)
                return {};
            std::swap(a[k], a[r]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < size; ++i) {
            for (std::size_t j = k + 1; j < size; ++j) {
                const UniPoly num = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                auto [q, rem] = num.divmod(prev);
                if (!rem.is_zero())
                    throw EngineError("inexact division in fraction-free elimination");
                a[i][j] = std::move(q);
            }
            a[i][k] = UniPoly();
        }
        prev = a[k][k];
    }
    UniPoly det = a[size - 1][size - 1];
    return negate ? UniPoly() - det : det;
}

} // namespace kemetric
