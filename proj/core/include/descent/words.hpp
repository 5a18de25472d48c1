#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace descent {

// Words over the two-letter alphabet {x, y} index the polytopes this library
// studies.  A word v of length n-1 describes a region of the unit cube
// [0,1]^n: the letter at position i (1-based) dictates the comparison between
// coordinates i and i+1, with y meaning "x_i >= x_{i+1}" and x meaning
// "x_i <= x_{i+1}".  Equivalently, the y positions of v form the descent set
// S subset of {1, ..., n-1}.
//
// The empty word (printed "1") is legal throughout and describes the unit
// segment [0,1].

enum class Letter : std::uint8_t { X = 0, Y = 1 };

constexpr Letter opposite(Letter l) {
    return l == Letter::X ? Letter::Y : Letter::X;
}

char to_char(Letter l);
Letter letter_from_char(char c);

// Longest word length accepted by the subset-driven operations below.
// Several of them walk all 2^length subsets, so the cap keeps worst cases
// around 10^6..10^7 steps.
inline constexpr int kMaxWordLength = 20;

class XYWord {
  public:
    XYWord() = default;
    explicit XYWord(std::vector<Letter> letters);

    // Accepts a string of 'x'/'y' characters, or "1" for the empty word.
    // Throws std::invalid_argument on anything else (including "").
    static XYWord parse(const std::string& text);

    // Builds the word of length n-1 whose y positions are exactly the
    // 1-based elements of `descents`.  Requires n >= 1 and every element in
    // [1, n-1].
    static XYWord from_descent_set(int n, const std::vector<int>& descents);

    // Accepts either the literal syntax of parse() or the descent-set
    // syntax "n:{i,j,...}", e.g. "5:{2,3}" -> xyyx.
    static XYWord parse_spec(const std::string& text);

    int size() const { return static_cast<int>(letters_.size()); }
    bool empty() const { return letters_.empty(); }
    Letter operator[](int i) const { return letters_[i]; }  // 0-based
    const std::vector<Letter>& letters() const { return letters_; }

    // 1-based y positions, ascending: the descent set of the word.
    std::vector<int> descent_set() const;

    // Swaps x and y at every position.
    XYWord complemented() const;
    XYWord reversed() const;

    XYWord append(Letter l) const;
    XYWord prepend(Letter l) const;
    XYWord concat(const XYWord& other) const;

    // "1" for the empty word, otherwise the letters.
    std::string str() const;

    bool operator==(const XYWord&) const = default;
    // Orders by length first, then lexicographically with x < y.  Series
    // code exploits the length-first part to truncate scans early.
    std::strong_ordering operator<=>(const XYWord& other) const;

  private:
    std::vector<Letter> letters_;
};

// kappa statistic: 1 for the empty word, otherwise 2 plus the number of
// adjacent positions holding different letters.  Drives both the facet count
// (n - 1 + kappa) and the weight of each subword term in the face count.
int kappa(const XYWord& v);

// Subword of v picked out by the 1-based positions in `positions`
// (ascending order of position; duplicates and out-of-range entries throw).
XYWord subword(const XYWord& v, const std::vector<int>& positions);

// Same, with the subset given as a bitmask (bit i-1 <-> position i).
XYWord subword(const XYWord& v, std::uint32_t mask);

// The alternating word of length len starting with `first`, e.g.
// alternating_word(4, Letter::X) == xyxy.
XYWord alternating_word(int len, Letter first);

bool is_alternating(const XYWord& v);

// Number of position subsets T (the empty set included) whose subword v^T
// is alternating.  The count is vertex_count(v) - 1; see fvector.hpp.
long long count_alternating_subwords(const XYWord& v);

// All 2^len words of the given length in lexicographic order (x < y).
// Requires len <= kMaxWordLength.
std::vector<XYWord> enumerate_words(int len);

// Composition of n attached to a word v of length n-1: the gaps between
// consecutive y positions.  With descent set {s_1 < ... < s_{k-1}} the parts
// are (s_1, s_2 - s_1, ..., n - s_{k-1}); the empty descent set gives the
// single part (n).  Round-trips with word_from_composition.
std::vector<int> composition_of(const XYWord& v);

// Inverse of composition_of: parts must be positive and sum to n >= 1.
XYWord word_from_composition(const std::vector<int>& parts);

// One factorization of a word into factors of shape x^i y or y^i x (i >= 0),
// except the last factor, which is an arbitrary word (possibly empty).
struct Factorization {
    std::vector<XYWord> factors;  // concatenation recovers the source word

    int factor_count() const { return static_cast<int>(factors.size()); }
};

// True when `factors` concatenates to `source` and every factor except the
// last has shape x^i y or y^i x.
bool is_valid_factorization(const Factorization& f, const XYWord& source);

// All factorizations of v in the shape above.  The number of factorizations
// equals the total face count of the polytope of v, so this grows roughly
// like 3^|v|; callers wanting only the generating polynomial should use
// f_factorization (fvector.hpp), which never materializes the list.
std::vector<Factorization> enumerate_factorizations(const XYWord& v);

// Multiset {factor count -> multiplicity} over all factorizations of v.
std::map<int, long long> factorization_profile(const XYWord& v);

}  // namespace descent
