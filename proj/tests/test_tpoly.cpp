#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "descent/numeric.hpp"
#include "descent/tpoly.hpp"

using namespace descent;

TEST_CASE("binomial against the Pascal recurrence") {
    for (long long n = 0; n <= 40; ++n) {
        CHECK(binomial(n, 0) == 1);
        CHECK(binomial(n, n) == 1);
        for (long long k = 1; k < n; ++k)
            CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
    }
    CHECK(binomial(10, -1) == 0);
    CHECK(binomial(10, 11) == 0);
    CHECK(binomial(52, 5) == 2598960);
    CHECK_THROWS_AS(binomial(-1, 0), std::invalid_argument);
}

TEST_CASE("factorial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(20) == Int{"2432902008176640000"});
    CHECK_THROWS_AS(factorial(-1), std::invalid_argument);
}

TEST_CASE("polynomial arithmetic") {
    TPoly t = TPoly::t();
    TPoly p = (t + 1) * (t + 1);
    CHECK(p.coeff(0) == 1);
    CHECK(p.coeff(1) == 2);
    CHECK(p.coeff(2) == 1);
    CHECK(p.coeff(3) == 0);
    CHECK(p.degree() == 2);
    CHECK(p == t * t + 2 * t + TPoly{1});

    CHECK((p - p).is_zero());
    CHECK((-p + p).is_zero());
    CHECK((p * TPoly{}).is_zero());
    CHECK(TPoly{7}.degree() == 0);
}

TEST_CASE("zero coefficients are never stored") {
    TPoly t = TPoly::t();
    TPoly p = (t + 1) - t;
    CHECK(p.coeffs().size() == 1);
    TPoly q = (t + 1) * (t - 1) - t * t;  // == -1
    CHECK(q.coeffs().size() == 1);
    CHECK(q.coeff(0) == -1);
}

TEST_CASE("Laurent terms and shifting") {
    TPoly p = TPoly::monomial(3, -2) + TPoly::t();
    CHECK(p.min_exponent() == -2);
    CHECK(p.degree() == 1);
    CHECK(!p.is_polynomial());
    CHECK(p.shifted(2).is_polynomial());
    CHECK(p.shifted(2) == TPoly{3} + TPoly::monomial(1, 3));
    CHECK(p.shifted(2).shifted(-2) == p);
}

TEST_CASE("pow") {
    TPoly t1 = TPoly::t() + 1;
    CHECK(t1.pow(0) == TPoly{1});
    CHECK(t1.pow(1) == t1);
    CHECK(t1.pow(5).coeff(2) == 10);
    CHECK(TPoly::monomial(1, -1).pow(3) == TPoly::monomial(1, -3));
    CHECK_THROWS_AS(t1.pow(-1), std::invalid_argument);
}

TEST_CASE("exact division") {
    TPoly t = TPoly::t();
    TPoly p = (t + 1).pow(3) * (t * t + 3);
    auto q = p.divided_exactly_by((t + 1).pow(3));
    REQUIRE(q.has_value());
    CHECK(*q == t * t + 3);

    CHECK(!((t + 1).divided_exactly_by(t * t)).has_value());
    CHECK(!((t * t + 1).divided_exactly_by(2 * t + 2)).has_value());  // 1/2 is not integral
    CHECK_THROWS_AS(p.divided_exactly_by(TPoly{}), std::invalid_argument);

    // Laurent division works too.
    auto r = TPoly::monomial(4, 1).divided_exactly_by(TPoly::monomial(2, -1));
    REQUIRE(r.has_value());
    CHECK(*r == TPoly::monomial(2, 2));
}

TEST_CASE("evaluation") {
    TPoly t = TPoly::t();
    TPoly p = t * t * t + 5 * t * t + 8 * t + 5;
    CHECK(p.eval_int(1) == 19);
    CHECK(p.eval_int(0) == 5);
    CHECK(p.eval_int(-1) == 1);
    CHECK(p.eval(Rat{1, 2}) == Rat{83, 8});

    TPoly laurent = TPoly::monomial(1, -1) + 1;
    CHECK(laurent.eval(Rat{2}) == Rat{3, 2});
    CHECK_THROWS_AS(laurent.eval_int(2), std::domain_error);
    CHECK_THROWS_AS(laurent.eval(Rat{0}), std::domain_error);
}

TEST_CASE("printing, highest exponent first") {
    TPoly t = TPoly::t();
    CHECK((t * t * t + 5 * t * t + 8 * t + 5).str() == "t^3 + 5*t^2 + 8*t + 5");
    CHECK(TPoly{}.str() == "0");
    CHECK(TPoly{-3}.str() == "-3");
    CHECK((t - 1).str() == "t - 1");
    CHECK((2 * t).str() == "2*t");
    CHECK(TPoly::monomial(1, -2).str() == "t^-2");
}
