#ifndef KEMETRIC_METRIC_HPP
#define KEMETRIC_METRIC_HPP

#include <cstddef>
#include <vector>

#include "kemetric/coef_poly.hpp"
#include "kemetric/series.hpp"

namespace kemetric
{

using SeriesMatrix = std::vector<std::vector<Series>>;

// Derivatives of F = log P with respect to x, exact through the truncation
// of the potential they were computed from.
//
// For a rotation-invariant potential the metric is
//   g_{a b̄} = delta_{ab} F_a + z̄_a z_b F_{ab},
// and conjugating by diag(z) shows det g = det(delta_{ab} F_a + x_a F_{ab}),
// a determinant of series in x alone.
struct HessianX
{
    std::size_t n = 0;
    std::vector<Series> first;  // F_a
    SeriesMatrix second;        // F_ab, symmetric
};

// P must be in Bochner form (constant term 1, linear part sum x_a) and is
// treated as an exact polynomial; the result has P's truncation.
HessianX metric_in_x(const Series& p);
HessianX metric_in_x(const Series& p, unsigned truncation);

// Sum over all permutations s of sign(s) * prod_i m[i][s(i)]. Partial
// products over the first rows are shared between permutations that agree
// on those rows (grouped by the set of columns already used), so the
// n! terms cost n * 2^(n-1) series products.
Series leibniz_det(const SeriesMatrix& m);

// det(g) as a series in x; constant term 1.
Series det_metric(const HessianX& h);

// R = log det g + (lambda/2) log P through degree D. R vanishes identically
// exactly when det g = P^(-lambda/2) holds to that order. lambda may be
// symbolic; P is treated as an exact polynomial.
Series ma_log_residual(const Series& p, const CoefPoly& lambda, unsigned truncation);

// Exact polynomial det(M), M_{ab} = P P_{a b̄} - P_a P_{b̄}, computed as
// P^{2n} det g = det(delta_{ab} P P_a + x_a (P P_ab - P_a P_b)).
// The result's truncation equals the degree bound n (2 deg P - 1).
Series metric_numerator_det(const Series& p);

} // namespace kemetric

#endif
