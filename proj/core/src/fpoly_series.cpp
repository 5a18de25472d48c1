#include "descent/nc_series.hpp"

namespace descent {

NCSeries<TPoly> fpoly_series(int trunc, int cap) {
    if (trunc < 0) throw std::invalid_argument("fpoly_series: negative truncation");
    if (trunc > cap)
        throw std::invalid_argument("fpoly_series: truncation " + std::to_string(trunc) +
                                    " exceeds cap " + std::to_string(cap));
    using S = NCSeries<TPoly>;
    const TPoly t1 = TPoly::t() + TPoly{1};
    S x = S::letter(trunc, Letter::X);
    S y = S::letter(trunc, Letter::Y);

    S mixed = t1 * (geom_inverse(y) * x + geom_inverse(x) * y);
    S g = geom_inverse(mixed);
    return (S::identity(trunc) + t1 * g) * geom_inverse(x + y);
}

}  // namespace descent
