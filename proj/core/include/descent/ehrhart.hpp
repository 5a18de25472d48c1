#pragma once

#include <vector>

#include "descent/nc_series.hpp"
#include "descent/numeric.hpp"
#include "descent/words.hpp"

namespace descent {

// Lattice-point counting for dilates of the polytope of v.  The r-th dilate
// meets the integer lattice in the vectors (a_1, ..., a_n) with
// 0 <= a_i <= r and a_i <= a_{i+1} at letter x / a_i >= a_{i+1} at letter y.

// Dynamic program over the last coordinate value, O(|v| * r) ring
// operations.  Requires 0 <= r <= kMaxDilationR (the state table holds r+1
// big integers).
inline constexpr long long kMaxDilationR = 1'000'000;
Int count_lattice_points(const XYWord& v, long long r);

// Plain enumeration of all (r+1)^n candidate vectors; only usable while
// that product stays below kMaxNaiveEnumeration.  Exists to check the
// dynamic program against something with no shared structure.
inline constexpr double kMaxNaiveEnumeration = 1e8;
Int count_lattice_points_naive(const XYWord& v, long long r);

// Chain counts over the alphabet {0, ..., r} for a word v of length n-1:
//   weak:   a_i <= a_{i+1} at letter x, no constraint at letter y;
//   strict: a_i <= a_{i+1} at letter x, a_i > a_{i+1} at letter y.
// weak factors as the product of binomial(r + g, g) over the parts g of
// composition_of(v); the implementation computes both by dynamic program
// and cross-checks weak against the product form.
struct RWordCounts {
    Int weak;
    Int strict;
};
RWordCounts rword_counts(const XYWord& v, long long r);

// Number of permutations of {1, ..., n} whose descent set is exactly the
// descent set of v, n = |v| + 1, by inclusion-exclusion over multinomials.
// Equals n! times the volume of the polytope of v.  n <= kMaxBetaN.
inline constexpr int kMaxBetaN = 16;
Int descent_statistic(const XYWord& v);

// One-variable building block of the series pipeline below: coefficients of
// q(s) = sum over j >= 1 of binomial(r+j, j) s^(j-1), i.e. entry d is
// binomial(r+d+1, d+1), for d = 0..max_deg.
std::vector<Int> block_series_coeffs(long long r, int max_deg);

// Generating series whose coefficient at each word v is the corresponding
// count at dilation r: rword_counts(v, r).weak / .strict /
// count_lattice_points(v, r).  All three are substitutions of a series with
// zero constant term into the block series q:
//   weak:    q(x) * (1 - y q(x))^{-1}
//   strict:  q(x-y) * (1 - y q(x-y))^{-1}
//   lattice: h q(s) * (1 - y h q(s))^{-1}, h = (1-y)^{-1}, s = (x-y) h.
inline constexpr int kMaxDilationTrunc = 12;
NCSeries<Int> weak_chain_series(long long r, int trunc, int cap = kMaxDilationTrunc);
NCSeries<Int> strict_chain_series(long long r, int trunc, int cap = kMaxDilationTrunc);
NCSeries<Int> lattice_point_series(long long r, int trunc, int cap = kMaxDilationTrunc);

// Counting polynomial of the dilates: degree n with rational coefficients,
// leading coefficient the volume descent_statistic(v) / n!, constant term 1.
struct EhrhartPoly {
    XYWord word;
    int n = 0;
    std::vector<Rat> coeffs;  // ascending by exponent, size n + 1

    Rat eval(long long r) const;
    Int eval_int(long long r) const;  // the value at an integer is integral
    const Rat& leading() const { return coeffs.back(); }
};

// Interpolates through the counts at r = 0..n, then re-checks the result
// against r = n+1..2n and verifies every coefficient times n! is integral.
// |v| <= kMaxInterpolationLength keeps the largest dilation at 2n = 26.
inline constexpr int kMaxInterpolationLength = 12;
EhrhartPoly ehrhart_polynomial(const XYWord& v);

}  // namespace descent
