#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "descent/tpoly.hpp"
#include "descent/words.hpp"

namespace descent {

// Formal power series in the noncommuting variables x and y, truncated at a
// fixed total word length.  Coefficients live in an arbitrary commutative
// ring C (TPoly and Int are the two instantiations used here).  All words of
// length <= trunc are tracked exactly; longer words are discarded on every
// operation, so two series must share a truncation before they can be
// combined.
template <typename C>
class NCSeries {
  public:
    explicit NCSeries(int trunc) : trunc_(trunc) {
        if (trunc < 0) throw std::invalid_argument("NCSeries: negative truncation");
    }

    static NCSeries identity(int trunc) {
        NCSeries s(trunc);
        s.terms_[XYWord{}] = C{1};
        return s;
    }

    static NCSeries letter(int trunc, Letter l) {
        return term(trunc, XYWord{{l}}, C{1});
    }

    static NCSeries term(int trunc, const XYWord& w, C coeff) {
        NCSeries s(trunc);
        if (w.size() <= trunc && !(coeff == C{})) s.terms_[w] = std::move(coeff);
        return s;
    }

    int trunc() const { return trunc_; }
    const std::map<XYWord, C>& terms() const { return terms_; }

    C coeff(const XYWord& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? C{} : it->second;
    }

    NCSeries operator+(const NCSeries& other) const {
        check_same_trunc(other);
        NCSeries r = *this;
        for (const auto& [w, c] : other.terms_) r.add_to(w, c);
        return r;
    }

    NCSeries operator-(const NCSeries& other) const {
        check_same_trunc(other);
        NCSeries r = *this;
        for (const auto& [w, c] : other.terms_) r.add_to(w, C{} - c);
        return r;
    }

    NCSeries operator*(const NCSeries& other) const {
        check_same_trunc(other);
        NCSeries r(trunc_);
        for (const auto& [w1, c1] : terms_) {
            // Keys are ordered by length first, so the tail of the inner map
            // only gets longer; break as soon as the product would overflow
            // the truncation.
            for (const auto& [w2, c2] : other.terms_) {
                if (w1.size() + w2.size() > trunc_) break;
                r.add_to(w1.concat(w2), c1 * c2);
            }
        }
        return r;
    }

    NCSeries scaled(const C& scalar) const {
        NCSeries r(trunc_);
        for (const auto& [w, c] : terms_) r.add_to(w, scalar * c);
        return r;
    }

    bool operator==(const NCSeries&) const = default;

  private:
    void check_same_trunc(const NCSeries& other) const {
        if (trunc_ != other.trunc_)
            throw std::logic_error("NCSeries: mixing truncations " + std::to_string(trunc_) + " and " +
                                   std::to_string(other.trunc_));
    }

    void add_to(const XYWord& w, const C& c) {
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            if (!(c == C{})) terms_[w] = c;
        } else {
            it->second = it->second + c;
            if (it->second == C{}) terms_.erase(it);
        }
    }

    int trunc_;
    std::map<XYWord, C> terms_;
};

template <typename C>
NCSeries<C> operator*(const C& scalar, const NCSeries<C>& s) {
    return s.scaled(scalar);
}

// (1 - s)^{-1} = 1 + s + s^2 + ... for a series s with zero constant term
// (throws std::invalid_argument otherwise).  Computed by iterating
// R <- 1 + s*R, which is exact after trunc steps.
template <typename C>
NCSeries<C> geom_inverse(const NCSeries<C>& s) {
    if (!(s.coeff(XYWord{}) == C{}))
        throw std::invalid_argument("geom_inverse: series has a nonzero constant term");
    NCSeries<C> r = NCSeries<C>::identity(s.trunc());
    for (int i = 0; i < s.trunc(); ++i) r = NCSeries<C>::identity(s.trunc()) + s * r;
    return r;
}

// Largest truncation accepted by fpoly_series; the series holds 2^(trunc+1)
// polynomial coefficients, so this keeps memory and time in check.
inline constexpr int kMaxFpolyTrunc = 14;

// Generating series over all xy-words whose coefficient at the word v is the
// face-count polynomial of the polytope of v (see fvector.hpp).  Closed
// form: (1 + (t+1)*G) * (1 - x - y)^{-1} where G inverts the mixed series
// (t+1) * ((1-y)^{-1} x + (1-x)^{-1} y).  Every coefficient up to length
// `trunc` is exact.
NCSeries<TPoly> fpoly_series(int trunc, int cap = kMaxFpolyTrunc);

}  // namespace descent
