#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "descent/fvector.hpp"
#include "descent/nc_series.hpp"
#include "descent/numeric.hpp"
#include "descent/tpoly.hpp"
#include "descent/words.hpp"

using namespace descent;

namespace {

NCSeries<Int> random_series(std::mt19937& rng, int trunc, bool zero_constant) {
    NCSeries<Int> s(trunc);
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<int> len(zero_constant ? 1 : 0, trunc);
    std::uniform_int_distribution<int> bit(0, 1);
    for (int k = 0; k < 12; ++k) {
        int l = len(rng);
        std::vector<Letter> letters;
        for (int i = 0; i < l; ++i) letters.push_back(bit(rng) ? Letter::Y : Letter::X);
        s = s + NCSeries<Int>::term(trunc, XYWord{std::move(letters)}, coeff(rng));
    }
    return s;
}

}  // namespace

TEST_CASE("basic series operations") {
    const int trunc = 4;
    NCSeries<Int> one = NCSeries<Int>::identity(trunc);
    NCSeries<Int> x = NCSeries<Int>::letter(trunc, Letter::X);
    NCSeries<Int> y = NCSeries<Int>::letter(trunc, Letter::Y);

    CHECK(one.coeff(XYWord{}) == 1);
    CHECK(one.coeff(XYWord::parse("x")) == 0);
    CHECK((x * y).coeff(XYWord::parse("xy")) == 1);
    CHECK((x * y).coeff(XYWord::parse("yx")) == 0);
    CHECK((x + x).coeff(XYWord::parse("x")) == 2);
    CHECK((x - x).terms().empty());
    CHECK(x.scaled(3).coeff(XYWord::parse("x")) == 3);
    CHECK((Int{2} * y).coeff(XYWord::parse("y")) == 2);
}

TEST_CASE("multiplication is non-commutative and truncation drops long words") {
    const int trunc = 3;
    NCSeries<Int> x = NCSeries<Int>::letter(trunc, Letter::X);
    NCSeries<Int> y = NCSeries<Int>::letter(trunc, Letter::Y);
    CHECK(x * y != y * x);

    NCSeries<Int> xx = x * x;
    CHECK((xx * xx).terms().empty());  // length 4 > trunc 3
    CHECK((xx * x).coeff(XYWord::parse("xxx")) == 1);
}

TEST_CASE("mixed truncations are rejected") {
    NCSeries<Int> a = NCSeries<Int>::identity(3);
    NCSeries<Int> b = NCSeries<Int>::identity(4);
    CHECK_THROWS_AS(a + b, std::logic_error);
    CHECK_THROWS_AS(a * b, std::logic_error);
    CHECK_THROWS_AS(NCSeries<Int>(-1), std::invalid_argument);
}

TEST_CASE("randomized associativity and distributivity") {
    std::mt19937 rng(20260822);
    for (int round = 0; round < 40; ++round) {
        int trunc = 2 + static_cast<int>(rng() % 5);  // 2..6
        NCSeries<Int> a = random_series(rng, trunc, false);
        NCSeries<Int> b = random_series(rng, trunc, false);
        NCSeries<Int> c = random_series(rng, trunc, false);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) * c == a * c + b * c);
    }
}

TEST_CASE("geometric inverse solves (1 - s) inverse exactly") {
    std::mt19937 rng(7);
    for (int round = 0; round < 30; ++round) {
        int trunc = 2 + static_cast<int>(rng() % 5);
        NCSeries<Int> s = random_series(rng, trunc, true);
        NCSeries<Int> inv = geom_inverse(s);
        NCSeries<Int> one = NCSeries<Int>::identity(trunc);
        CHECK((one - s) * inv == one);
        CHECK(inv * (one - s) == one);
    }
}

TEST_CASE("geometric inverse rejects a nonzero constant term") {
    NCSeries<Int> one = NCSeries<Int>::identity(3);
    CHECK_THROWS_AS(geom_inverse(one), std::invalid_argument);
}

TEST_CASE("geometric inverse expands the free monoid sum") {
    // inv(x + y) enumerates every word with coefficient 1.
    const int trunc = 5;
    NCSeries<Int> s =
        NCSeries<Int>::letter(trunc, Letter::X) + NCSeries<Int>::letter(trunc, Letter::Y);
    NCSeries<Int> inv = geom_inverse(s);
    long long total = 0;
    for (const auto& [w, c] : inv.terms()) {
        CHECK(c == 1);
        (void)w;
        ++total;
    }
    CHECK(total == (1 << (trunc + 1)) - 1);
}

TEST_CASE("face polynomial series matches the letter-prepend computation") {
    NCSeries<TPoly> s = fpoly_series(10);
    CHECK(s.terms().size() == (1u << 11) - 1);
    for (int len = 0; len <= 10; ++len)
        for (const XYWord& w : enumerate_words(len)) CHECK(s.coeff(w) == f_recurrence(w).poly);
}

TEST_CASE("face polynomial series is fixed by swapping the letters") {
    NCSeries<TPoly> s = fpoly_series(10);
    for (const auto& [w, c] : s.terms()) CHECK(s.coeff(w.complemented()) == c);
}

TEST_CASE("series truncation cap") {
    CHECK_THROWS_AS(fpoly_series(kMaxFpolyTrunc + 1), std::invalid_argument);
    CHECK_THROWS_AS(fpoly_series(-1), std::invalid_argument);
}
