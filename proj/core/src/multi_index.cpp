#include "kemetric/multi_index.hpp"

#include <limits>
#include <ostream>

#include "kemetric/errors.hpp"

namespace kemetric
{

MultiIndex::MultiIndex(std::initializer_list<unsigned> exps)
    : MultiIndex(std::span<const unsigned>(exps.begin(), exps.size()))
{
}

MultiIndex::MultiIndex(std::span<const unsigned> exps) : exps_(exps.size(), 0)
{
    for (std::size_t i = 0; i < exps.size(); ++i)
        set(i, exps[i]);
}

MultiIndex MultiIndex::unit(std::size_t n, std::size_t var)
{
    if (var >= n)
        throw UsageError("variable index out of range");
    MultiIndex m(n);
    m.set(var, 1);
    return m;
}

void MultiIndex::set(std::size_t i, unsigned e)
{
    if (e > std::numeric_limits<std::uint16_t>::max())
        throw UsageError("exponent too large");
    degree_ = degree_ - exps_.at(i) + e;
    exps_[i] = static_cast<std::uint16_t>(e);
}

MultiIndex MultiIndex::operator+(const MultiIndex& o) const
{
    if (o.size() != size())
        throw UsageError("multi-index length mismatch");
    MultiIndex r(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i)
        r.exps_[i] = static_cast<std::uint16_t>(r.exps_[i] + o.exps_[i]);
    r.degree_ = degree_ + o.degree_;
    return r;
}

MultiIndex MultiIndex::operator-(const MultiIndex& o) const
{
    if (o.size() != size() || !o.divides(*this))
        throw UsageError("multi-index difference would be negative");
    MultiIndex r(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i)
        r.exps_[i] = static_cast<std::uint16_t>(r.exps_[i] - o.exps_[i]);
    r.degree_ = degree_ - o.degree_;
    return r;
}

bool MultiIndex::divides(const MultiIndex& o) const
{
    if (o.size() != size())
        return false;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > o.exps_[i])
            return false;
    return true;
}

MultiIndex MultiIndex::permuted(std::span<const std::size_t> perm) const
{
    MultiIndex r(size());
    for (std::size_t i = 0; i < exps_.size(); ++i)
        r.exps_[perm[i]] = exps_[i];
    r.degree_ = degree_;
    return r;
}

std::string MultiIndex::to_string() const
{
    if (degree_ == 0)
        return "1";
    std::string out;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] == 0)
            continue;
        if (!out.empty())
            out += '*';
        out += 'x';
        out += std::to_string(i + 1);
        if (exps_[i] > 1) {
            out += '^';
            out += std::to_string(exps_[i]);
        }
    }
    return out;
}

std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b)
{
    if (a.degree_ != b.degree_)
        return a.degree_ <=> b.degree_;
    const std::size_t len = std::min(a.exps_.size(), b.exps_.size());
    for (std::size_t i = 0; i < len; ++i)
        if (a.exps_[i] != b.exps_[i])
            return b.exps_[i] <=> a.exps_[i];
    return a.exps_.size() <=> b.exps_.size();
}

std::uint64_t binomial(unsigned n, unsigned k)
{
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (unsigned i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

std::uint64_t graded_rank(const MultiIndex& m)
{
    const auto n = static_cast<unsigned>(m.size());
    if (n == 0)
        return 0;
    const unsigned d = m.degree();
    // monomials of degree < d
    std::uint64_t rank = d == 0 ? 0 : binomial(n + d - 1, n);
    unsigned remaining = d;
    for (unsigned i = 0; i + 1 < n; ++i) {
        const unsigned rest_vars = n - i - 1;
        // exponents larger than m[i] at position i come first
        for (unsigned e = m[i] + 1; e <= remaining; ++e)
            rank += binomial(remaining - e + rest_vars - 1, rest_vars - 1);
        remaining -= m[i];
    }
    return rank;
}

namespace
{

void compositions(std::size_t n, std::size_t pos, unsigned remaining, MultiIndex& cur, std::vector<MultiIndex>& out)
{
    if (pos + 1 == n) {
        cur.set(pos, remaining);
        out.push_back(cur);
        cur.set(pos, 0);
        return;
    }
    for (unsigned e = remaining + 1; e-- > 0;) {
        cur.set(pos, e);
        compositions(n, pos + 1, remaining - e, cur, out);
    }
    cur.set(pos, 0);
}

} // namespace

std::vector<MultiIndex> multi_indices(std::size_t n, unsigned lo, unsigned hi)
{
    std::vector<MultiIndex> out;
    if (n == 0)
        return out;
    MultiIndex cur(n);
    for (unsigned d = lo; d <= hi; ++d)
        compositions(n, 0, d, cur, out);
    return out;
}

std::ostream& operator<<(std::ostream& os, const MultiIndex& m) { return os << m.to_string(); }

} // namespace kemetric
