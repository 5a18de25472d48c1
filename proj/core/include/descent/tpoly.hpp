#pragma once

#include <map>
#include <optional>
#include <string>

#include "descent/numeric.hpp"

namespace descent {

// Laurent polynomial in one variable t with arbitrary-precision integer
// coefficients.  Negative exponents appear in intermediate values (the face
// count formula divides by powers of t before everything cancels), so the
// exponent range is unrestricted; final results are checked to be ordinary
// polynomials by the callers that require it.
class TPoly {
  public:
    TPoly() = default;
    TPoly(Int constant);  // NOLINT: implicit by design, mirrors 5 + p usage
    TPoly(long long constant) : TPoly(Int(constant)) {}

    static TPoly t();                      // the variable itself
    static TPoly monomial(Int coeff, int exp);

    bool is_zero() const { return coeffs_.empty(); }
    Int coeff(int exp) const;
    const std::map<int, Int>& coeffs() const { return coeffs_; }

    // Degree of the zero polynomial is not defined; callers must check.
    int degree() const;
    int min_exponent() const;
    bool is_polynomial() const;  // no negative exponents

    TPoly& operator+=(const TPoly& other);
    TPoly& operator-=(const TPoly& other);
    TPoly operator+(const TPoly& other) const;
    TPoly operator-(const TPoly& other) const;
    TPoly operator-() const;
    TPoly operator*(const TPoly& other) const;
    TPoly& operator*=(const TPoly& other);

    // Multiplies by t^shift.
    TPoly shifted(int shift) const;

    TPoly pow(int exponent) const;  // exponent >= 0

    // Exact division: returns the quotient when `divisor` divides this
    // polynomial with integer coefficients and zero remainder, nullopt
    // otherwise.  Throws on a zero divisor.
    std::optional<TPoly> divided_exactly_by(const TPoly& divisor) const;

    Rat eval(const Rat& at) const;
    Int eval_int(const Int& at) const;  // requires min_exponent() >= 0

    // Human-readable form, highest exponent first: "t^3 + 5*t^2 + 8*t + 5".
    std::string str() const;

    bool operator==(const TPoly&) const = default;

  private:
    void set(int exp, Int c);
    std::map<int, Int> coeffs_;  // exponent -> nonzero coefficient
};

TPoly operator*(const Int& scalar, const TPoly& p);

}  // namespace descent
