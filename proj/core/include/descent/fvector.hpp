#pragma once

#include <vector>

#include "descent/tpoly.hpp"
#include "descent/words.hpp"

namespace descent {

// Face-count polynomial of the polytope of a word v of length n-1: the
// coefficient of t^d is the number of d-dimensional faces (the empty face is
// not counted, the polytope itself is, so the degree is n and the leading
// coefficient 1).
struct FPolynomial {
    XYWord word;
    int n = 0;  // dimension of the polytope, = word.size() + 1
    TPoly poly;

    // (f_0, f_1, ..., f_n): face counts by dimension, ascending.
    std::vector<Int> f_vector() const;

    // Total number of faces, poly evaluated at 1.
    Int total_faces() const;
};

// Subset expansion: 1 plus one term per subset T of the letter positions,
// each contributing (t+1)^kappa(v^T) * t^(|T|+1-kappa(v^T)) where v^T is the
// subword picked by T.  Walks all 2^|v| subsets; |v| <= kMaxWordLength.
FPolynomial f_direct(const XYWord& v);

// State carried by the prepend recurrence behind f_recurrence: the subset
// expansion restricted to nonempty subsets whose subword starts with x
// (from_x) or with y (from_y).
struct FirstLetterSplit {
    TPoly from_x;
    TPoly from_y;
};

// Runs the recurrence over v from the last letter to the first.  Prepending
// a letter keeps one component and replaces the other with
// (t+1) * (from_x + from_y + t + 1).
FirstLetterSplit first_letter_split(const XYWord& v);

// Linear-time route: f(v) = from_x + from_y + t + 2.
FPolynomial f_recurrence(const XYWord& v);

// Factorization route: 1 plus (t+1)^k summed over every factorization of v
// into k factors of shape x^i y / y^i x with a free final factor.  Uses the
// factor-count profile, not the factorization list, so it stays polynomial
// time.  |v| <= kMaxWordLength.
FPolynomial f_factorization(const XYWord& v);

// Facets of the polytope of v: n - 1 + kappa(v).  Only valid in dimension
// n >= 2, so v must be nonempty.
int facet_count(const XYWord& v);

// Vertices of the polytope of v: 1 + count_alternating_subwords(v).  For
// alternating v of length m this is the Fibonacci number F_{m+3}.
long long vertex_count(const XYWord& v);

inline constexpr int kMaxAlternatingN = 30;

// Face-count polynomial of the alternating word of length n-1, computed by
// a composition recurrence instead of subset expansion; n <= kMaxAlternatingN.
FPolynomial f_alternating(int n);

inline constexpr int kMaxAlternatingSeriesN = 40;

// Entry n (1-based; entry 0 is zero) is the face-count polynomial of the
// alternating word of length n-1, all computed at once from the rational
// generating function
//   s/(1-s) + (1 - (t+1)(s+s^2))^{-1} * (t+1) * s/(1-s).
// Cross-checks f_alternating term by term.  max_n <= kMaxAlternatingSeriesN.
std::vector<TPoly> alternating_series(int max_n);

inline constexpr int kMaxSearchN = 12;

// All words of length n-1 whose f-vector is coefficientwise maximal among
// the 2^(n-1) words.  Exhaustive scan; n <= kMaxSearchN.  The result is the
// pair of alternating words (a single word when n <= 1).
std::vector<XYWord> max_fvector_words(int n);

}  // namespace descent
