#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "descent/fvector.hpp"
#include "descent/nc_series.hpp"
#include "descent/words.hpp"

using namespace descent;

namespace {

std::vector<Int> fv(const char* word) { return f_recurrence(XYWord::parse(word)).f_vector(); }

std::vector<Int> iv(std::initializer_list<long long> xs) {
    std::vector<Int> out;
    for (long long x : xs) out.emplace_back(x);
    return out;
}

}  // namespace

TEST_CASE("frozen f-vectors of small polytopes") {
    CHECK(fv("1") == iv({2, 1}));                       // segment
    CHECK(fv("x") == iv({3, 3, 1}));                    // triangle
    CHECK(fv("y") == iv({3, 3, 1}));
    CHECK(fv("xx") == iv({4, 6, 4, 1}));                // simplex
    CHECK(fv("yy") == iv({4, 6, 4, 1}));
    CHECK(fv("yx") == iv({5, 8, 5, 1}));                // square pyramid
    CHECK(fv("xy") == iv({5, 8, 5, 1}));
    CHECK(fv("yxx") == iv({7, 15, 14, 6, 1}));
    CHECK(fv("yyy") == iv({5, 10, 10, 5, 1}));
    CHECK(fv("xyyx") == iv({12, 34, 42, 26, 8, 1}));
    CHECK(fv("xyxyx") == iv({21, 76, 121, 102, 47, 11, 1}));
}

TEST_CASE("four computations agree on every word of length at most 10") {
    NCSeries<TPoly> phi = fpoly_series(10);
    for (int len = 0; len <= 10; ++len)
        for (const XYWord& w : enumerate_words(len)) {
            TPoly expected = f_recurrence(w).poly;
            CHECK(f_direct(w).poly == expected);
            CHECK(f_factorization(w).poly == expected);
            CHECK(phi.coeff(w) == expected);
        }
}

TEST_CASE("complement and reversal preserve the face polynomial") {
    for (int len = 0; len <= 10; ++len)
        for (const XYWord& w : enumerate_words(len)) {
            TPoly p = f_recurrence(w).poly;
            CHECK(f_recurrence(w.complemented()).poly == p);
            CHECK(f_recurrence(w.reversed()).poly == p);
        }
}

TEST_CASE("Euler relation and coefficient structure, length at most 12") {
    for (int len = 0; len <= 12; ++len)
        for (const XYWord& w : enumerate_words(len)) {
            FPolynomial f = f_recurrence(w);
            int n = len + 1;
            CHECK(f.n == n);
            CHECK(f.poly.eval_int(-1) == 1);               // Euler relation
            CHECK(f.poly.coeff(n) == 1);                   // the polytope itself
            CHECK(f.poly.coeff(0) == 1 + count_alternating_subwords(w));  // vertices
            if (n >= 2) CHECK(f.poly.coeff(n - 1) == n - 1 + kappa(w));   // facets
        }
}

TEST_CASE("facet and vertex counts") {
    CHECK(facet_count(XYWord::parse("x")) == 3);
    CHECK(facet_count(XYWord::parse("yx")) == 5);
    CHECK(facet_count(XYWord::parse("xyyx")) == 8);
    CHECK_THROWS_AS(facet_count(XYWord{}), std::invalid_argument);

    CHECK(vertex_count(XYWord{}) == 2);
    CHECK(vertex_count(XYWord::parse("yx")) == 5);
    CHECK(vertex_count(XYWord::parse("xyyx")) == 12);
    for (int len = 0; len <= 10; ++len)
        for (const XYWord& w : enumerate_words(len)) {
            CHECK(vertex_count(w) == f_recurrence(w).poly.eval_int(0));
            if (len >= 1) CHECK(facet_count(w) == len + kappa(w));
        }
}

TEST_CASE("first letter split reassembles the face polynomial") {
    for (int len = 0; len <= 10; ++len)
        for (const XYWord& w : enumerate_words(len)) {
            FirstLetterSplit split = first_letter_split(w);
            CHECK(split.from_x + split.from_y + TPoly::t() + 2 == f_recurrence(w).poly);
        }
}

TEST_CASE("total face count") {
    CHECK(f_recurrence(XYWord::parse("yx")).total_faces() == 19);
    CHECK(f_recurrence(XYWord{}).total_faces() == 3);
}

TEST_CASE("alternating-word fast path matches the general computation") {
    for (int n = 1; n <= 12; ++n) {
        TPoly direct = f_recurrence(alternating_word(n - 1, Letter::X)).poly;
        CHECK(f_alternating(n).poly == direct);
    }
    CHECK_THROWS_AS(f_alternating(0), std::invalid_argument);
    CHECK_THROWS_AS(f_alternating(kMaxAlternatingN + 1), std::invalid_argument);
}

TEST_CASE("alternating series agrees with the fast path and extends beyond it") {
    std::vector<TPoly> series = alternating_series(kMaxAlternatingSeriesN);
    REQUIRE(series.size() == kMaxAlternatingSeriesN + 1);
    for (int n = 1; n <= kMaxAlternatingN; ++n) CHECK(series[n] == f_alternating(n).poly);
    CHECK_THROWS_AS(alternating_series(kMaxAlternatingSeriesN + 1), std::invalid_argument);
}

TEST_CASE("total faces of the alternating polytopes: 3, 7, 19, 51, ...") {
    std::vector<Int> expected = {3, 7, 19, 51, 139, 379, 1035};
    for (int n = 1; n <= 7; ++n) CHECK(f_alternating(n).poly.eval_int(1) == expected[n - 1]);
    // Linear recurrence satisfied far beyond the listed terms.
    std::vector<TPoly> series = alternating_series(20);
    std::vector<Int> a;
    for (int n = 1; n <= 20; ++n) a.push_back(series[n].eval_int(1));
    for (int n = 4; n <= 20; ++n) CHECK(a[n - 1] == 3 * a[n - 2] - 2 * a[n - 4]);
}

TEST_CASE("vertex counts of the alternating polytopes are Fibonacci numbers") {
    long long fib_prev = 1, fib = 2;  // start at the 2-vertex segment
    for (int n = 1; n <= 15; ++n) {
        CHECK(vertex_count(alternating_word(n - 1, Letter::X)) == fib);
        long long next = fib + fib_prev;
        fib_prev = fib;
        fib = next;
    }
    CHECK(vertex_count(alternating_word(14, Letter::X)) == 1597);
}

TEST_CASE("alternating words maximize every face count") {
    for (int n = 2; n <= 9; ++n) {
        TPoly top = f_alternating(n).poly;
        for (const XYWord& w : enumerate_words(n - 1)) {
            TPoly p = f_recurrence(w).poly;
            bool alternating = is_alternating(w);
            bool equal = p == top;
            CHECK(equal == alternating);
            for (int d = 0; d <= n; ++d) CHECK(p.coeff(d) <= top.coeff(d));
        }
    }
}

TEST_CASE("maximal words are exactly the two alternating words") {
    CHECK(max_fvector_words(1) == std::vector<XYWord>{XYWord{}});
    CHECK(max_fvector_words(3) ==
          std::vector<XYWord>{XYWord::parse("xy"), XYWord::parse("yx")});
    CHECK(max_fvector_words(6) ==
          std::vector<XYWord>{XYWord::parse("xyxyx"), XYWord::parse("yxyxy")});
    for (int n = 2; n <= 10; ++n) {
        std::vector<XYWord> expected{alternating_word(n - 1, Letter::X),
                                     alternating_word(n - 1, Letter::Y)};
        std::sort(expected.begin(), expected.end());
        CHECK(max_fvector_words(n) == expected);
    }
    CHECK_THROWS_AS(max_fvector_words(0), std::invalid_argument);
    CHECK_THROWS_AS(max_fvector_words(kMaxSearchN + 1), std::invalid_argument);
}

TEST_CASE("f_vector helper lists coefficients by dimension") {
    FPolynomial f = f_recurrence(XYWord::parse("yx"));
    std::vector<Int> v = f.f_vector();
    REQUIRE(v.size() == 4);
    CHECK(v[0] == 5);
    CHECK(v[3] == 1);
}
