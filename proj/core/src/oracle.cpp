#include "kemetric/oracle.hpp"

#include <algorithm>
#include <span>
#include <numeric>

#include "kemetric/errors.hpp"

namespace kemetric::oracle
{

namespace
{

BiPoly::Exponents sum(const BiPoly::Exponents& a, const BiPoly::Exponents& b)
{
    BiPoly::Exponents out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] + b[i];
    return out;
}

std::string show(const BiPoly::Exponents& e)
{
    std::string s = "(";
    for (std::size_t i = 0; i < e.size(); ++i)
        s += (i ? "," : "") + std::to_string(e[i]);
    return s + ")";
}

} // namespace

BiPoly BiPoly::constant(std::size_t n, const Rational& c)
{
    BiPoly b(n);
    b.add(Exponents(n, 0), Exponents(n, 0), c);
    return b;
}

void BiPoly::add(const Exponents& mz, const Exponents& mzbar, const Rational& c)
{
    if (c.is_zero())
        return;
    Key key{mz, mzbar};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), c);
        return;
    }
    it->second += c;
    if (it->second.is_zero())
        terms_.erase(it);
}

BiPoly BiPoly::d_z(std::size_t var) const
{
    BiPoly out(n_);
    for (const auto& [key, c] : terms_) {
        const unsigned e = key.first[var];
        if (e == 0)
            continue;
        Exponents mz = key.first;
        mz[var] = e - 1;
        out.add(mz, key.second, c * Rational(static_cast<long>(e)));
    }
    return out;
}

BiPoly BiPoly::d_zbar(std::size_t var) const
{
    BiPoly out(n_);
    for (const auto& [key, c] : terms_) {
        const unsigned e = key.second[var];
        if (e == 0)
            continue;
        Exponents mzbar = key.second;
        mzbar[var] = e - 1;
        out.add(key.first, mzbar, c * Rational(static_cast<long>(e)));
    }
    return out;
}

bool BiPoly::is_rotation_invariant() const
{
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.first.first == kv.first.second; });
}

BiPoly BiPoly::operator+(const BiPoly& o) const
{
    BiPoly out = *this;
    for (const auto& [key, c] : o.terms_)
        out.add(key.first, key.second, c);
    return out;
}

BiPoly BiPoly::operator-(const BiPoly& o) const { return *this + (-o); }

BiPoly BiPoly::operator*(const BiPoly& o) const
{
    BiPoly out(n_);
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_)
            out.add(sum(ka.first, kb.first), sum(ka.second, kb.second), ca * cb);
    return out;
}

BiPoly BiPoly::operator-() const
{
    BiPoly out = *this;
    for (auto& [key, c] : out.terms_)
        c = -c;
    return out;
}

BiPoly potential_polynomial(const PotentialSpec& spec)
{
    const std::size_t n = spec.dimension();
    BiPoly p = BiPoly::constant(n, Rational(1));
    for (std::size_t a = 0; a < n; ++a) {
        BiPoly::Exponents e(n, 0);
        e[a] = 1;
        p.add(e, e, Rational(1));
    }
    for (const auto& t : spec.support()) {
        if (!t.coefficient.is_constant())
            throw UsageError("oracle requires numeric coefficients");
        const BiPoly::Exponents e = t.exponents.exponents();
        p.add(e, e, t.coefficient.constant());
    }
    return p;
}

BiPoly zspace_det_numerator(const PotentialSpec& spec)
{
    const std::size_t n = spec.dimension();
    if (n > kMaxDimension)
        throw UsageError("oracle refuses dimension " + std::to_string(n) + " (maximum " +
                         std::to_string(kMaxDimension) + ")");
    const BiPoly p = potential_polynomial(spec);

    std::vector<std::vector<BiPoly>> m(n);
    for (std::size_t a = 0; a < n; ++a) {
        const BiPoly pa = p.d_z(a);
        for (std::size_t b = 0; b < n; ++b)
            m[a].push_back(p * pa.d_zbar(b) - pa * p.d_zbar(b));
    }

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    BiPoly det(n);
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j])
                    ++inversions;
        BiPoly term = BiPoly::constant(n, Rational(1));
        for (std::size_t i = 0; i < n; ++i)
            term = term * m[i][perm[i]];
        det = inversions % 2 == 0 ? det + term : det - term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

RotationProjection rotation_project(const BiPoly& b)
{
    RotationProjection out;
    for (const auto& [key, c] : b.terms()) {
        if (key.first == key.second)
            out.invariant.emplace(MultiIndex(std::span<const unsigned>(key.first)), c);
        else
            out.discarded.emplace(key, c);
    }
    return out;
}

std::map<MultiIndex, Rational> rotation_project_lossless(const BiPoly& b)
{
    RotationProjection r = rotation_project(b);
    if (!r.discarded.empty()) {
        const auto& [key, c] = *r.discarded.begin();
        throw EngineError("rotation projection discarded z^" + show(key.first) + " zbar^" + show(key.second) +
                          " with coefficient " + c.to_string());
    }
    return std::move(r.invariant);
}

} // namespace kemetric::oracle
