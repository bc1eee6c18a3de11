#include "kemetric/metric.hpp"

#include <bit>
#include <cstdint>
#include <optional>

#include "kemetric/errors.hpp"

namespace kemetric
{

namespace
{

void require_bochner_form(const Series& p)
{
    const std::size_t n = p.dimension();
    if (p.constant_term() != CoefPoly(Rational(1)))
        throw DomainError("potential polynomial must have constant term 1, got " + p.constant_term().to_string());
    for (std::size_t a = 0; a < n; ++a)
        if (p.coefficient(MultiIndex::unit(n, a)) != CoefPoly(Rational(1)))
            throw DomainError("potential polynomial is not in Bochner form: coefficient of x" + std::to_string(a + 1) +
                              " is " + p.coefficient(MultiIndex::unit(n, a)).to_string());
}

Series x_times(const Series& s, std::size_t var)
{
    const std::size_t n = s.dimension();
    Series out(n, s.truncation());
    const MultiIndex unit = MultiIndex::unit(n, var);
    for (const auto& [m, c] : s.terms())
        out.add_term(m + unit, c);
    return out;
}

} // namespace

HessianX metric_in_x(const Series& p) { return metric_in_x(p, p.truncation()); }

HessianX metric_in_x(const Series& p, unsigned truncation)
{
    require_bochner_form(p);
    const std::size_t n = p.dimension();
    // Two extra orders keep the second derivatives exact through `truncation`.
    const Series one = Series::constant(n, truncation + 2, CoefPoly(Rational(1)));
    const Series f = log1p(p.with_truncation(truncation + 2) - one);

    HessianX h;
    h.n = n;
    h.first.reserve(n);
    h.second.assign(n, {});
    std::vector<Series> fa;
    for (std::size_t a = 0; a < n; ++a) {
        fa.push_back(diff(f, a));
        h.first.push_back(fa.back().with_truncation(truncation));
    }
    for (std::size_t a = 0; a < n; ++a) {
        h.second[a].reserve(n);
        for (std::size_t b = 0; b < n; ++b) {
            if (b < a)
                h.second[a].push_back(h.second[b][a]);
            else
                h.second[a].push_back(diff(fa[a], b).with_truncation(truncation));
        }
    }
    return h;
}

Series leibniz_det(const SeriesMatrix& m)
{
    const std::size_t n = m.size();
    if (n == 0)
        throw UsageError("determinant of an empty matrix");
    if (n > 20)
        throw UsageError("determinant dimension too large");
    for (const auto& row : m)
        if (row.size() != n)
            throw UsageError("determinant of a non-square matrix");
    const std::size_t dim = m[0][0].dimension();
    const unsigned truncation = m[0][0].truncation();

    // partial[S] = sum over injections of rows 0..|S|-1 onto column set S of
    // sign * product, with sign the parity of inversions so far.
    const std::uint32_t full = (1U << n) - 1U;
    std::vector<std::optional<Series>> partial(std::size_t{1} << n);
    partial[0] = Series::constant(dim, truncation, CoefPoly(Rational(1)));
    for (std::size_t row = 0; row < n; ++row) {
        std::vector<std::optional<Series>> next(std::size_t{1} << n);
        for (std::uint32_t used = 0; used <= full; ++used) {
            if (static_cast<std::size_t>(std::popcount(used)) != row || !partial[used] || partial[used]->is_zero())
                continue;
            for (std::size_t col = 0; col < n; ++col) {
                const std::uint32_t bit = 1U << col;
                if (used & bit || m[row][col].is_zero())
                    continue;
                // inversions contributed: earlier rows mapped to larger columns
                const int larger = std::popcount(used & ~((bit << 1U) - 1U));
                Series term = *partial[used] * m[row][col];
                if (larger % 2 == 1)
                    term = -term;
                auto& slot = next[used | bit];
                if (slot)
                    *slot += term;
                else
                    slot = std::move(term);
            }
        }
        partial = std::move(next);
    }
    return partial[full] ? *partial[full] : Series(dim, truncation);
}

Series det_metric(const HessianX& h)
{
    SeriesMatrix nmat(h.n);
    for (std::size_t a = 0; a < h.n; ++a) {
        nmat[a].reserve(h.n);
        for (std::size_t b = 0; b < h.n; ++b) {
            Series e = x_times(h.second[a][b], a);
            if (a == b)
                e += h.first[a];
            nmat[a].push_back(std::move(e));
        }
    }
    return leibniz_det(nmat);
}

Series ma_log_residual(const Series& p, const CoefPoly& lambda, unsigned truncation)
{
    const std::size_t n = p.dimension();
    const HessianX h = metric_in_x(p, truncation);
    const Series det = det_metric(h);
    const Series one = Series::constant(n, truncation, CoefPoly(Rational(1)));
    if (det.constant_term() != CoefPoly(Rational(1)))
        throw EngineError("metric determinant does not have constant term 1");
    Series r = log1p(det - one);
    r += log1p(p.with_truncation(truncation) - one) * (lambda * Rational(1, 2));
    return r;
}

Series metric_numerator_det(const Series& p)
{
    require_bochner_form(p);
    const std::size_t n = p.dimension();
    const unsigned d = std::max(1U, p.max_degree());
    const auto bound = static_cast<unsigned>(n * (2 * d - 1));
    const Series poly = p.with_truncation(bound);
    std::vector<Series> pa;
    for (std::size_t a = 0; a < n; ++a)
        pa.push_back(diff(poly, a));
    SeriesMatrix mmat(n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            Series e = x_times(poly * diff(pa[a], b) - pa[a] * pa[b], a);
            if (a == b)
                e += poly * pa[a];
            mmat[a].push_back(std::move(e));
        }
    }
    return leibniz_det(mmat);
}

} // namespace kemetric
