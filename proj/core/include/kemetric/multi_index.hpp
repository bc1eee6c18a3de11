#ifndef KEMETRIC_MULTI_INDEX_HPP
#define KEMETRIC_MULTI_INDEX_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace kemetric
{

// Exponent vector of a monomial x^m = x_1^{m_1} ... x_n^{m_n}, where
// x_a = |z_a|^2. Variables are 0-based internally and printed 1-based.
//
// Ordering is graded lexicographic with x_1 > x_2 > ... > x_n, listed in
// ascending total degree and, within one degree, with higher powers of
// earlier variables first: 1 < x1 < x2 < x1^2 < x1*x2 < x2^2 < x1^3 ...
class MultiIndex
{
public:
    MultiIndex() = default;
    explicit MultiIndex(std::size_t n) : exps_(n, 0) {}
    MultiIndex(std::initializer_list<unsigned> exps);
    explicit MultiIndex(std::span<const unsigned> exps);

    static MultiIndex unit(std::size_t n, std::size_t var);

    std::size_t size() const { return exps_.size(); }
    unsigned operator[](std::size_t i) const { return exps_[i]; }
    unsigned degree() const { return degree_; }
    bool is_zero() const { return degree_ == 0; }

    void set(std::size_t i, unsigned e);
    std::vector<unsigned> exponents() const { return {exps_.begin(), exps_.end()}; }

    MultiIndex operator+(const MultiIndex& o) const;
    // Componentwise difference; the caller guarantees o <= *this componentwise.
    MultiIndex operator-(const MultiIndex& o) const;
    bool divides(const MultiIndex& o) const;

    // Image under a variable permutation: result[perm[i]] = (*this)[i].
    MultiIndex permuted(std::span<const std::size_t> perm) const;

    // "1", "x1", "x1^2*x2".
    std::string to_string() const;

    friend bool operator==(const MultiIndex& a, const MultiIndex& b)
    {
        return a.degree_ == b.degree_ && a.exps_ == b.exps_;
    }
    friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b);

private:
    std::vector<std::uint16_t> exps_;
    unsigned degree_ = 0;
};

// Position of m among all multi-indices of length m.size() in the graded
// order above; the constant monomial has rank 0.
std::uint64_t graded_rank(const MultiIndex& m);

// All multi-indices of length n with lo <= |m| <= hi, in graded order.
std::vector<MultiIndex> multi_indices(std::size_t n, unsigned lo, unsigned hi);

std::uint64_t binomial(unsigned n, unsigned k);

std::ostream& operator<<(std::ostream& os, const MultiIndex& m);

} // namespace kemetric

#endif
