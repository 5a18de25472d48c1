#include "descent/ehrhart.hpp"

#include <cmath>
#include <stdexcept>

namespace descent {

namespace {

void check_dilation(long long r, const char* who) {
    if (r < 0) throw std::invalid_argument(std::string(who) + ": negative dilation");
    if (r > kMaxDilationR)
        throw std::invalid_argument(std::string(who) + ": dilation " + std::to_string(r) +
                                    " exceeds cap " + std::to_string(kMaxDilationR));
}

}  // namespace

Int count_lattice_points(const XYWord& v, long long r) {
    check_dilation(r, "count_lattice_points");
    // ways[a] = number of admissible prefixes ending with coordinate a.
    std::vector<Int> ways(r + 1, 1);
    for (int i = 0; i < v.size(); ++i) {
        std::vector<Int> next(r + 1);
        if (v[i] == Letter::X) {
            // letter x: the new coordinate b admits all previous values <= b
            Int run = 0;
            for (long long b = 0; b <= r; ++b) {
                run += ways[b];
                next[b] = run;
            }
        } else {
            Int run = 0;
            for (long long b = r; b >= 0; --b) {
                run += ways[b];
                next[b] = run;
            }
        }
        ways = std::move(next);
    }
    Int total = 0;
    for (const Int& w : ways) total += w;
    return total;
}

Int count_lattice_points_naive(const XYWord& v, long long r) {
    check_dilation(r, "count_lattice_points_naive");
    int n = v.size() + 1;
    if (std::pow(static_cast<double>(r) + 1.0, n) > kMaxNaiveEnumeration)
        throw std::invalid_argument("count_lattice_points_naive: (r+1)^n exceeds enumeration cap");
    std::vector<long long> a(n, 0);
    Int count = 0;
    while (true) {
        bool ok = true;
        for (int i = 0; i < v.size() && ok; ++i)
            ok = v[i] == Letter::X ? a[i] <= a[i + 1] : a[i] >= a[i + 1];
        if (ok) ++count;
        int pos = n - 1;
        while (pos >= 0 && a[pos] == r) a[pos--] = 0;
        if (pos < 0) break;
        ++a[pos];
    }
    return count;
}

RWordCounts rword_counts(const XYWord& v, long long r) {
    check_dilation(r, "rword_counts");
    std::vector<Int> weak(r + 1, 1), strict(r + 1, 1);
    for (int i = 0; i < v.size(); ++i) {
        std::vector<Int> next_weak(r + 1), next_strict(r + 1);
        if (v[i] == Letter::X) {
            Int run_w = 0, run_s = 0;
            for (long long b = 0; b <= r; ++b) {
                run_w += weak[b];
                run_s += strict[b];
                next_weak[b] = run_w;
                next_strict[b] = run_s;
            }
        } else {
            // weak: the next coordinate is unconstrained
            Int total_w = 0;
            for (const Int& w : weak) total_w += w;
            for (long long b = 0; b <= r; ++b) next_weak[b] = total_w;
            // strict: previous coordinate strictly larger
            Int run_s = 0;
            for (long long b = r; b >= 0; --b) {
                next_strict[b] = run_s;  // sums strict[b+1..r]
                run_s += strict[b];
            }
        }
        weak = std::move(next_weak);
        strict = std::move(next_strict);
    }
    RWordCounts out{0, 0};
    for (const Int& w : weak) out.weak += w;
    for (const Int& s : strict) out.strict += s;

    // The weak count factors over the composition; disagreement means the
    // dynamic program is broken, so fail loudly.
    Int product = 1;
    for (int g : composition_of(v)) product *= binomial(r + g, g);
    if (product != out.weak)
        throw std::logic_error("rword_counts: dynamic program disagrees with product form for " +
                               v.str());
    return out;
}

Int descent_statistic(const XYWord& v) {
    int n = v.size() + 1;
    if (n > kMaxBetaN)
        throw std::invalid_argument("descent_statistic: n = " + std::to_string(n) + " exceeds cap " +
                                    std::to_string(kMaxBetaN));
    // Inclusion-exclusion: over subsets T of the descent set, surjections
    // counted by multinomials with sign (-1)^(|S| - |T|).
    std::uint32_t smask = 0;
    for (int s : v.descent_set()) smask |= 1u << (s - 1);
    Int nfact = factorial(n);
    int sbits = std::popcount(smask);
    Int beta = 0;
    std::uint32_t t = smask;
    while (true) {
        // composition of n from the positions in t
        Int multinomial = nfact;
        int prev = 0;
        for (int pos = 1; pos <= n - 1; ++pos) {
            if (!(t & (1u << (pos - 1)))) continue;
            multinomial /= factorial(pos - prev);
            prev = pos;
        }
        multinomial /= factorial(n - prev);
        int sign = ((sbits - std::popcount(t)) % 2 == 0) ? 1 : -1;
        beta += sign * multinomial;
        if (t == 0) break;
        t = (t - 1) & smask;
    }
    return beta;
}

std::vector<Int> block_series_coeffs(long long r, int max_deg) {
    check_dilation(r, "block_series_coeffs");
    if (max_deg < 0) throw std::invalid_argument("block_series_coeffs: negative degree");
    std::vector<Int> coeffs(max_deg + 1);
    for (int d = 0; d <= max_deg; ++d) coeffs[d] = binomial(r + d + 1, d + 1);
    return coeffs;
}

namespace {

// Substitutes a series with zero constant term into the block series q by
// Horner; powers s^d with d > trunc vanish, so max_deg = trunc is exact.
NCSeries<Int> block_series(long long r, const NCSeries<Int>& s) {
    if (!(s.coeff(XYWord{}) == Int{}))
        throw std::invalid_argument("block_series: substituted series has a constant term");
    std::vector<Int> coeffs = block_series_coeffs(r, s.trunc());
    NCSeries<Int> acc = NCSeries<Int>::term(s.trunc(), XYWord{}, coeffs.back());
    for (int d = static_cast<int>(coeffs.size()) - 2; d >= 0; --d)
        acc = s * acc + NCSeries<Int>::term(s.trunc(), XYWord{}, coeffs[d]);
    return acc;
}

void check_series_args(long long r, int trunc, int cap, const char* who) {
    check_dilation(r, who);
    if (trunc < 0) throw std::invalid_argument(std::string(who) + ": negative truncation");
    if (trunc > cap)
        throw std::invalid_argument(std::string(who) + ": truncation " + std::to_string(trunc) +
                                    " exceeds cap " + std::to_string(cap));
}

}  // namespace

NCSeries<Int> weak_chain_series(long long r, int trunc, int cap) {
    check_series_args(r, trunc, cap, "weak_chain_series");
    using S = NCSeries<Int>;
    S y = S::letter(trunc, Letter::Y);
    S q = block_series(r, S::letter(trunc, Letter::X));
    return q * geom_inverse(y * q);
}

NCSeries<Int> strict_chain_series(long long r, int trunc, int cap) {
    check_series_args(r, trunc, cap, "strict_chain_series");
    using S = NCSeries<Int>;
    S y = S::letter(trunc, Letter::Y);
    S q = block_series(r, S::letter(trunc, Letter::X) - y);
    return q * geom_inverse(y * q);
}

NCSeries<Int> lattice_point_series(long long r, int trunc, int cap) {
    check_series_args(r, trunc, cap, "lattice_point_series");
    using S = NCSeries<Int>;
    S x = S::letter(trunc, Letter::X);
    S y = S::letter(trunc, Letter::Y);
    S h = geom_inverse(y);
    S q = block_series(r, (x - y) * h);
    S hq = h * q;
    return hq * geom_inverse(y * hq);
}

Rat EhrhartPoly::eval(long long r) const {
    Rat acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * r + *it;
    return acc;
}

Int EhrhartPoly::eval_int(long long r) const {
    Rat value = eval(r);
    if (boost::multiprecision::denominator(value) != 1)
        throw std::logic_error("EhrhartPoly::eval_int: non-integral value");
    return boost::multiprecision::numerator(value);
}

EhrhartPoly ehrhart_polynomial(const XYWord& v) {
    if (v.size() > kMaxInterpolationLength)
        throw std::invalid_argument("ehrhart_polynomial: word length exceeds cap " +
                                    std::to_string(kMaxInterpolationLength));
    int n = v.size() + 1;
    std::vector<Int> values;
    values.reserve(2 * n + 1);
    for (long long r = 0; r <= 2 * n; ++r) values.push_back(count_lattice_points(v, r));

    // Newton form at the integer nodes 0..n: p(r) = sum over k of
    // (k-th forward difference at 0) * binomial(r, k).  Expand each
    // binomial(r, k) = r (r-1) ... (r-k+1) / k! into monomial coefficients.
    std::vector<Rat> coeffs(n + 1, Rat{0});
    for (int k = 0; k <= n; ++k) {
        Int d = 0;
        for (int i = 0; i <= k; ++i) {
            Int term = binomial(k, i) * values[i];
            d += ((k - i) % 2 == 0) ? term : -term;
        }
        std::vector<Rat> falling{1};
        for (int i = 0; i < k; ++i) {
            std::vector<Rat> next(falling.size() + 1);
            for (std::size_t j = 0; j < falling.size(); ++j) {
                next[j + 1] += falling[j];
                next[j] -= falling[j] * i;
            }
            falling = std::move(next);
        }
        Rat scale = d.convert_to<Rat>() / factorial(k).convert_to<Rat>();
        for (std::size_t j = 0; j < falling.size(); ++j) coeffs[j] += falling[j] * scale;
    }

    EhrhartPoly p{v, n, std::move(coeffs)};
    for (long long r = n + 1; r <= 2 * n; ++r)
        if (p.eval(r) != values[r].convert_to<Rat>())
            throw std::logic_error("ehrhart_polynomial: interpolation fails to extend past its nodes");
    Rat nfact = factorial(n).convert_to<Rat>();
    for (const Rat& c : p.coeffs) {
        Rat scaled = c * nfact;
        if (boost::multiprecision::denominator(scaled) != 1)
            throw std::logic_error("ehrhart_polynomial: coefficient denominator does not divide n!");
    }
    return p;
}

}  // namespace descent
