#include "descent/numeric.hpp"

#include <stdexcept>

namespace descent {

Int binomial(long long n, long long k) {
    if (n < 0) throw std::invalid_argument("binomial: negative upper index");
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int result = 1;
    // Each partial product is an integer, so the division is exact.
    for (long long i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

Int factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    Int result = 1;
    for (int i = 2; i <= n; ++i) result *= i;
    return result;
}

}  // namespace descent
