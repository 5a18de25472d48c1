#include "descent/fvector.hpp"

#include <stdexcept>

namespace descent {

namespace {

// Powers (t+1)^0 .. (t+1)^max.
std::vector<TPoly> t1_powers(int max) {
    std::vector<TPoly> pow(max + 1);
    pow[0] = TPoly{1};
    TPoly t1 = TPoly::t() + TPoly{1};
    for (int k = 1; k <= max; ++k) pow[k] = pow[k - 1] * t1;
    return pow;
}

FPolynomial make_fpoly(const XYWord& v, TPoly poly) {
    int n = v.size() + 1;
    if (!poly.is_polynomial() || poly.degree() != n)
        throw std::logic_error("face polynomial of " + v.str() + " malformed: " + poly.str());
    return FPolynomial{v, n, std::move(poly)};
}

}  // namespace

std::vector<Int> FPolynomial::f_vector() const {
    std::vector<Int> f(n + 1);
    for (int d = 0; d <= n; ++d) f[d] = poly.coeff(d);
    return f;
}

Int FPolynomial::total_faces() const { return poly.eval_int(1); }

FPolynomial f_direct(const XYWord& v) {
    int m = v.size();
    if (m > kMaxWordLength)
        throw std::invalid_argument("f_direct: word length " + std::to_string(m) + " exceeds cap " +
                                    std::to_string(kMaxWordLength));
    std::vector<TPoly> pow = t1_powers(m + 1);
    TPoly sum{1};
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
        // kappa of the subword selected by mask, without building it.
        int k = 1;
        int prev = -1;  // letter of the previous selected position
        int count = 0;
        for (int i = 0; i < m; ++i) {
            if (!(mask & (1u << i))) continue;
            int cur = static_cast<int>(v[i]);
            if (count == 0)
                k = 2;
            else if (cur != prev)
                ++k;
            prev = cur;
            ++count;
        }
        sum += pow[k].shifted(count + 1 - k);
    }
    return make_fpoly(v, std::move(sum));
}

FirstLetterSplit first_letter_split(const XYWord& v) {
    TPoly t1 = TPoly::t() + TPoly{1};
    FirstLetterSplit s{TPoly{}, TPoly{}};
    for (int i = v.size() - 1; i >= 0; --i) {
        TPoly grown = t1 * (s.from_x + s.from_y + TPoly::t() + TPoly{1});
        if (v[i] == Letter::X)
            s.from_x = std::move(grown);
        else
            s.from_y = std::move(grown);
    }
    return s;
}

FPolynomial f_recurrence(const XYWord& v) {
    FirstLetterSplit s = first_letter_split(v);
    return make_fpoly(v, s.from_x + s.from_y + TPoly::t() + TPoly{2});
}

FPolynomial f_factorization(const XYWord& v) {
    std::vector<TPoly> pow = t1_powers(v.size() + 1);
    TPoly sum{1};
    for (const auto& [k, count] : factorization_profile(v)) sum += Int(count) * pow[k];
    return make_fpoly(v, std::move(sum));
}

int facet_count(const XYWord& v) {
    if (v.empty())
        throw std::invalid_argument("facet_count: defined for dimension >= 2 (nonempty word)");
    return v.size() + kappa(v);
}

long long vertex_count(const XYWord& v) { return 1 + count_alternating_subwords(v); }

FPolynomial f_alternating(int n) {
    if (n < 1) throw std::invalid_argument("f_alternating: n must be >= 1");
    if (n > kMaxAlternatingN)
        throw std::invalid_argument("f_alternating: n exceeds cap " + std::to_string(kMaxAlternatingN));
    // p[i] = sum over compositions of i with all parts before the last in
    // {1, 2} of (t+1)^(number of parts).
    TPoly t1 = TPoly::t() + TPoly{1};
    std::vector<TPoly> p(n + 1);
    p[0] = TPoly{};
    for (int i = 1; i <= n; ++i) {
        p[i] = t1;
        if (i >= 2) p[i] += t1 * p[i - 1];
        if (i >= 3) p[i] += t1 * p[i - 2];
    }
    // A composition of i whose first part is 1 or 2 strips to a composition
    // of i-1 or i-2; the remaining case is the single-part composition (i).
    return make_fpoly(alternating_word(n - 1, Letter::X), TPoly{1} + p[n]);
}

std::vector<TPoly> alternating_series(int max_n) {
    if (max_n < 1) throw std::invalid_argument("alternating_series: max_n must be >= 1");
    if (max_n > kMaxAlternatingSeriesN)
        throw std::invalid_argument("alternating_series: max_n exceeds cap " +
                                    std::to_string(kMaxAlternatingSeriesN));
    TPoly t1 = TPoly::t() + TPoly{1};
    // inv[k] = coefficient of s^k in (1 - (t+1)(s + s^2))^{-1}.
    std::vector<TPoly> inv(max_n + 1);
    inv[0] = TPoly{1};
    for (int k = 1; k <= max_n; ++k) {
        inv[k] = t1 * inv[k - 1];
        if (k >= 2) inv[k] += t1 * inv[k - 2];
    }
    // s/(1-s) contributes 1 to every positive power; the product with
    // (t+1) * s/(1-s) contributes (t+1) * sum of lower inv terms.
    std::vector<TPoly> out(max_n + 1);
    TPoly partial{};  // inv[0] + ... + inv[m-1]
    for (int m = 1; m <= max_n; ++m) {
        partial += inv[m - 1];
        out[m] = TPoly{1} + t1 * partial;
    }
    return out;
}

std::vector<XYWord> max_fvector_words(int n) {
    if (n < 1) throw std::invalid_argument("max_fvector_words: n must be >= 1");
    if (n > kMaxSearchN)
        throw std::invalid_argument("max_fvector_words: n exceeds cap " + std::to_string(kMaxSearchN));
    std::vector<XYWord> words = enumerate_words(n - 1);
    std::vector<TPoly> polys;
    polys.reserve(words.size());
    for (const XYWord& w : words) polys.push_back(f_recurrence(w).poly);

    std::vector<Int> best(n + 1, 0);
    for (const TPoly& p : polys)
        for (int d = 0; d <= n; ++d)
            if (p.coeff(d) > best[d]) best[d] = p.coeff(d);

    std::vector<XYWord> maximal;
    for (std::size_t i = 0; i < words.size(); ++i) {
        bool hits_all = true;
        for (int d = 0; d <= n && hits_all; ++d) hits_all = polys[i].coeff(d) == best[d];
        if (hits_all) maximal.push_back(words[i]);
    }
    return maximal;  // already sorted: enumerate_words is lexicographic
}

}  // namespace descent
