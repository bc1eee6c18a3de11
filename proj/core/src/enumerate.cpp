#include "kemetric/enumerate.hpp"

#include <algorithm>
#include <numeric>

#include "kemetric/errors.hpp"

namespace kemetric
{

std::vector<std::vector<std::size_t>> permutations(std::size_t n)
{
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<std::size_t>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

namespace
{

void check_args(std::size_t n, unsigned deg_cap)
{
    if (n == 0)
        throw UsageError("dimension must be at least 1");
    if (deg_cap < 2)
        throw UsageError("degree cap must be at least 2");
}

// image[p][i] = index of the monomial that monomial i is sent to by perm p.
std::vector<std::vector<std::size_t>> image_table(std::size_t n, const std::vector<MultiIndex>& monos)
{
    std::vector<std::vector<std::size_t>> table;
    for (const auto& perm : permutations(n)) {
        std::vector<std::size_t> row;
        row.reserve(monos.size());
        for (const auto& m : monos) {
            const MultiIndex img = m.permuted(perm);
            row.push_back(static_cast<std::size_t>(
                std::lower_bound(monos.begin(), monos.end(), img) - monos.begin()));
        }
        table.push_back(std::move(row));
    }
    return table;
}

bool is_canonical(const std::vector<std::size_t>& subset, const std::vector<std::vector<std::size_t>>& table)
{
    std::vector<std::size_t> img(subset.size());
    for (const auto& row : table) {
        for (std::size_t i = 0; i < subset.size(); ++i)
            img[i] = row[subset[i]];
        std::sort(img.begin(), img.end());
        if (img < subset)
            return false;
    }
    return true;
}

void visit(std::size_t start, std::size_t k, std::vector<std::size_t>& cur, std::size_t universe,
           const std::function<void(const std::vector<std::size_t>&)>& f)
{
    if (cur.size() == k) {
        f(cur);
        return;
    }
    for (std::size_t i = start; i + (k - cur.size()) <= universe; ++i) {
        cur.push_back(i);
        visit(i + 1, k, cur, universe, f);
        cur.pop_back();
    }
}

} // namespace

std::vector<Support> enumerate_supports_of_size(std::size_t n, std::size_t k, unsigned deg_cap)
{
    check_args(n, deg_cap);
    const auto monos = multi_indices(n, 2, deg_cap);
    const auto table = image_table(n, monos);
    std::vector<Support> out;
    std::vector<std::size_t> cur;
    visit(0, k, cur, monos.size(), [&](const std::vector<std::size_t>& subset) {
        if (!is_canonical(subset, table))
            return;
        Support s;
        for (std::size_t i : subset)
            s.push_back(monos[i]);
        out.push_back(std::move(s));
    });
    return out;
}

std::vector<Support> enumerate_supports(std::size_t n, std::size_t k_max, unsigned deg_cap)
{
    std::vector<Support> out;
    for (std::size_t k = 0; k <= k_max; ++k) {
        auto part = enumerate_supports_of_size(n, k, deg_cap);
        out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return out;
}

Support canonical_support(std::size_t n, const Support& support)
{
    Support best;
    bool first = true;
    for (const auto& perm : permutations(n)) {
        Support img;
        for (const auto& m : support) {
            if (m.size() != n)
                throw UsageError("monomial length does not match dimension");
            img.push_back(m.permuted(perm));
        }
        std::sort(img.begin(), img.end());
        if (first || img < best) {
            best = std::move(img);
            first = false;
        }
    }
    return best;
}

PotentialSpec symbolic_spec(std::size_t n, const Support& support)
{
    return PotentialSpec::symbolic(n, support);
}

} // namespace kemetric
