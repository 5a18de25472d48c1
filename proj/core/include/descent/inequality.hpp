#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "descent/tpoly.hpp"
#include "descent/words.hpp"

namespace descent {

// Comparison machinery for the two ways of splicing a letter pair into the
// middle of a word: u yx v versus u yy v-complemented.  The first always has
// the (coefficientwise) larger face polynomial; the proof splits the subset
// expansion by which positions of u and v are selected, and this module
// exposes exactly those per-selection sums.

// Sum of the subset-expansion terms of the word u . m1 m2 . v over the four
// subsets E of the two middle positions, with the u and v selections pinned
// to tmask and umask (bit i-1 selects position i):
//   sum over E of (t+1)^kappa(w) * t^(|T| + |U| + |E| + 1 - kappa(w)),
// where w is the subword of u m1 m2 v selected by T, E, U.  A Laurent
// polynomial in general.
TPoly insertion_sum(const XYWord& u, Letter m1, Letter m2, const XYWord& v, std::uint32_t tmask,
                    std::uint32_t umask);

// One row of the nine-case analysis, keyed by the boundary letters of the
// selected subwords u^T and v^U (last letter of u^T, first letter of v^U,
// or the subword being empty).
struct CaseRow {
    int index = 0;       // 1..9, the order of the case analysis
    std::string label;   // e.g. "ends-x:starts-y"
    TPoly expected_quotient;
};

CaseRow classify_case(const XYWord& ut, const XYWord& vu);

// The pinned-selection difference
//   insertion_sum(u, y, x, v, T, U) - insertion_sum(u, y, y, v~, T, U)
// (v~ the complement of v), divided exactly by its common factor
// (t+1)^(k-1) * t^(|T|+|U|+1-k) with k = kappa(u^T . v^U).  The quotient
// always equals the expected_quotient of the case row; nullopt means the
// division left a remainder, which the tests treat as a hard failure.
std::optional<TPoly> insertion_quotient(const XYWord& u, const XYWord& v, std::uint32_t tmask,
                                        std::uint32_t umask);

struct CaseWitness {
    CaseRow row;
    XYWord u, v;
    std::uint32_t tmask = 0, umask = 0;
    TPoly quotient;  // as computed
    bool ok = false;
};

// Checks two hand-picked witnesses for each of the nine rows.  Exhaustive
// small-word scans live in the tests; this is the fixed table used by the
// command-line verifier.
std::vector<CaseWitness> verify_case_table();

struct InequalityReport {
    XYWord left;       // u yx v
    XYWord right;      // u yy v-complemented
    TPoly difference;  // face polynomial of left minus face polynomial of right
    bool holds = false;
};

inline constexpr int kMaxInequalityPair = 12;  // bound on |u| + |v|

// Checks that the difference has every coefficient at t^0..t^(n-1) at least
// 1 and the t^n coefficient exactly 0, where n is the common dimension
// |u| + |v| + 3.  Requires |u| + |v| <= kMaxInequalityPair.
InequalityReport verify_inequality(const XYWord& u, const XYWord& v);

struct InequalityScan {
    long long pairs_checked = 0;
    bool all_hold = true;
    std::vector<std::string> failures;  // "u=...,v=..." for any violation
};

// Runs verify_inequality over every pair (u, v) with |u| + |v| <= total_len,
// total_len <= kMaxInequalityPair.
InequalityScan verify_inequality_range(int total_len);

}  // namespace descent
