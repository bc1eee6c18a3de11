#ifndef KEMETRIC_ENUMERATE_HPP
#define KEMETRIC_ENUMERATE_HPP

#include <cstddef>
#include <functional>
#include <vector>

#include "kemetric/multi_index.hpp"
#include "kemetric/potential.hpp"

namespace kemetric
{

using Support = std::vector<MultiIndex>; // graded order

// Canonical supports of size <= k_max drawn from the monomials with
// 2 <= |m| <= deg_cap, one per orbit under variable permutations. The
// representative is the one whose sorted monomial list is lexicographically
// least in graded order. Supports come out by size, then lexicographically.
std::vector<Support> enumerate_supports(std::size_t n, std::size_t k_max, unsigned deg_cap);

// Same enumeration restricted to supports of exactly k monomials.
std::vector<Support> enumerate_supports_of_size(std::size_t n, std::size_t k, unsigned deg_cap);

// The canonical representative of the orbit of `support`.
Support canonical_support(std::size_t n, const Support& support);

// Symbolic spec with one fresh unknown per monomial.
PotentialSpec symbolic_spec(std::size_t n, const Support& support);

// All permutations of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> permutations(std::size_t n);

} // namespace kemetric

#endif
