#ifndef KEMETRIC_TESTS_GENERATORS_HPP
#define KEMETRIC_TESTS_GENERATORS_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <random>
#include <set>
#include <vector>

#include "kemetric/multi_index.hpp"
#include "kemetric/potential.hpp"
#include "kemetric/rational.hpp"
#include "kemetric/series.hpp"

namespace kemetric
{

inline void PrintTo(const Series& s, std::ostream* os) { *os << s.to_string(); }
inline void PrintTo(const CoefPoly& p, std::ostream* os) { *os << p.to_string(); }

} // namespace kemetric

namespace kemetric::gen
{

// Small seeded generators for property tests. Every test builds its own
// Gen from a fixed seed so failures reproduce.
class Gen
{
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

    Rational rational(int max_num = 9, int max_den = 6)
    {
        return Rational(static_cast<long>(integer(-max_num, max_num)), static_cast<long>(integer(1, max_den)));
    }

    Rational nonzero_rational(int max_num = 9, int max_den = 6)
    {
        for (;;) {
            Rational r = rational(max_num, max_den);
            if (!r.is_zero())
                return r;
        }
    }

    Rational positive_rational(int max_num = 9, int max_den = 6)
    {
        return Rational(static_cast<long>(integer(1, max_num)), static_cast<long>(integer(1, max_den)));
    }

    MultiIndex multi_index(std::size_t n, unsigned lo, unsigned hi)
    {
        const unsigned d = static_cast<unsigned>(integer(static_cast<int>(lo), static_cast<int>(hi)));
        MultiIndex m(n);
        for (unsigned k = 0; k < d; ++k) {
            const auto v = static_cast<std::size_t>(integer(0, static_cast<int>(n) - 1));
            m.set(v, m[v] + 1);
        }
        return m;
    }

    // Sparse numeric series with up to `terms` terms of degree <= D.
    Series series(std::size_t n, unsigned D, int terms, bool with_constant = true)
    {
        Series s(n, D);
        const int count = integer(0, terms);
        for (int i = 0; i < count; ++i) {
            const MultiIndex m = multi_index(n, with_constant ? 0 : 1, D);
            s += Series::monomial(n, D, m, CoefPoly(nonzero_rational()));
        }
        return s;
    }

    // Numeric Bochner-form spec: distinct support monomials with
    // 2 <= |m| <= max_degree and coefficients > 0 (or any sign).
    PotentialSpec spec(std::size_t n, std::size_t max_support, unsigned max_degree, bool positive = true)
    {
        std::set<MultiIndex> chosen;
        const int k = integer(0, static_cast<int>(max_support));
        for (int i = 0; i < k * 3 && static_cast<int>(chosen.size()) < k; ++i)
            chosen.insert(multi_index(n, 2, max_degree));
        std::vector<SupportTerm> support;
        for (const auto& m : chosen)
            support.push_back({m, CoefPoly(positive ? positive_rational(5, 4) : nonzero_rational(5, 4))});
        return PotentialSpec(n, std::move(support));
    }

    std::vector<std::size_t> permutation(std::size_t n)
    {
        std::vector<std::size_t> p(n);
        std::iota(p.begin(), p.end(), 0);
        std::shuffle(p.begin(), p.end(), rng_);
        return p;
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

} // namespace kemetric::gen

#endif
