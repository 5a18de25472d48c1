#include "descent/inequality.hpp"

#include <bit>
#include <stdexcept>

#include "descent/fvector.hpp"

namespace descent {

TPoly insertion_sum(const XYWord& u, Letter m1, Letter m2, const XYWord& v, std::uint32_t tmask,
                    std::uint32_t umask) {
    XYWord ut = subword(u, tmask);
    XYWord vu = subword(v, umask);
    int base = std::popcount(tmask) + std::popcount(umask) + 1;
    TPoly t1 = TPoly::t() + TPoly{1};
    TPoly sum;
    for (std::uint32_t e = 0; e < 4; ++e) {
        XYWord mid;
        if (e & 1) mid = mid.append(m1);
        if (e & 2) mid = mid.append(m2);
        XYWord w = ut.concat(mid).concat(vu);
        int k = kappa(w);
        sum += t1.pow(k).shifted(base + std::popcount(e) - k);
    }
    return sum;
}

CaseRow classify_case(const XYWord& ut, const XYWord& vu) {
    TPoly t = TPoly::t();
    TPoly sq = (t + TPoly{1}) * (t + TPoly{1});
    TPoly tsq = t * t;
    TPoly tsq_t = t * t + t;
    if (!ut.empty() && !vu.empty()) {
        Letter last = ut[ut.size() - 1];
        Letter first = vu[0];
        if (last == Letter::X && first == Letter::X) return {1, "ends-x:starts-x", sq};
        if (last == Letter::X && first == Letter::Y) return {2, "ends-x:starts-y", tsq};
        if (last == Letter::Y && first == Letter::X) return {3, "ends-y:starts-x", sq};
        return {4, "ends-y:starts-y", sq};
    }
    if (ut.empty() && !vu.empty())
        return vu[0] == Letter::X ? CaseRow{5, "empty:starts-x", sq} : CaseRow{6, "empty:starts-y", tsq_t};
    if (!ut.empty() && vu.empty())
        return ut[ut.size() - 1] == Letter::X ? CaseRow{7, "ends-x:empty", tsq_t}
                                              : CaseRow{8, "ends-y:empty", sq};
    return {9, "empty:empty", sq};
}

std::optional<TPoly> insertion_quotient(const XYWord& u, const XYWord& v, std::uint32_t tmask,
                                        std::uint32_t umask) {
    TPoly with_yx = insertion_sum(u, Letter::Y, Letter::X, v, tmask, umask);
    TPoly with_yy = insertion_sum(u, Letter::Y, Letter::Y, v.complemented(), tmask, umask);
    TPoly diff = with_yx - with_yy;
    int k = kappa(subword(u, tmask).concat(subword(v, umask)));
    int shift = std::popcount(tmask) + std::popcount(umask) + 1 - k;
    TPoly t1 = TPoly::t() + TPoly{1};
    TPoly divisor = t1.pow(k - 1).shifted(shift);
    return diff.divided_exactly_by(divisor);
}

std::vector<CaseWitness> verify_case_table() {
    struct Probe {
        const char* u;
        std::uint32_t tmask;
        const char* v;
        std::uint32_t umask;
    };
    // Two probes per row, chosen so the selected subwords hit each of the
    // nine boundary-letter cases; masks are over 1-based positions.
    const Probe probes[] = {
        {"x", 0b1, "x", 0b1},    {"yx", 0b11, "xx", 0b11},  // ends-x:starts-x
        {"x", 0b1, "y", 0b1},    {"xx", 0b10, "yy", 0b11},  // ends-x:starts-y
        {"y", 0b1, "x", 0b1},    {"xy", 0b11, "xy", 0b01},  // ends-y:starts-x
        {"y", 0b1, "y", 0b1},    {"yy", 0b11, "yx", 0b01},  // ends-y:starts-y
        {"1", 0b0, "x", 0b1},    {"y", 0b0, "xy", 0b11},    // empty:starts-x
        {"1", 0b0, "y", 0b1},    {"x", 0b0, "yx", 0b11},    // empty:starts-y
        {"x", 0b1, "1", 0b0},    {"yx", 0b10, "y", 0b0},    // ends-x:empty
        {"y", 0b1, "1", 0b0},    {"xy", 0b10, "x", 0b0},    // ends-y:empty
        {"1", 0b0, "1", 0b0},    {"x", 0b0, "y", 0b0},      // empty:empty
    };
    std::vector<CaseWitness> out;
    for (const Probe& p : probes) {
        CaseWitness w;
        w.u = XYWord::parse(p.u);
        w.v = XYWord::parse(p.v);
        w.tmask = p.tmask;
        w.umask = p.umask;
        w.row = classify_case(subword(w.u, w.tmask), subword(w.v, w.umask));
        auto q = insertion_quotient(w.u, w.v, w.tmask, w.umask);
        if (q) {
            w.quotient = *q;
            w.ok = w.quotient == w.row.expected_quotient;
        }
        out.push_back(std::move(w));
    }
    return out;
}

InequalityReport verify_inequality(const XYWord& u, const XYWord& v) {
    if (u.size() + v.size() > kMaxInequalityPair)
        throw std::invalid_argument("verify_inequality: |u| + |v| exceeds cap " +
                                    std::to_string(kMaxInequalityPair));
    XYWord mid_yx = XYWord::parse("yx");
    XYWord mid_yy = XYWord::parse("yy");
    InequalityReport rep;
    rep.left = u.concat(mid_yx).concat(v);
    rep.right = u.concat(mid_yy).concat(v.complemented());
    rep.difference = f_recurrence(rep.left).poly - f_recurrence(rep.right).poly;
    int n = rep.left.size() + 1;
    rep.holds = rep.difference.coeff(n) == 0;
    for (int e = 0; e < n && rep.holds; ++e) rep.holds = rep.difference.coeff(e) >= 1;
    return rep;
}

InequalityScan verify_inequality_range(int total_len) {
    if (total_len < 0) throw std::invalid_argument("verify_inequality_range: negative length");
    if (total_len > kMaxInequalityPair)
        throw std::invalid_argument("verify_inequality_range: length exceeds cap " +
                                    std::to_string(kMaxInequalityPair));
    InequalityScan scan;
    for (int lu = 0; lu <= total_len; ++lu) {
        for (const XYWord& u : enumerate_words(lu)) {
            for (int lv = 0; lv + lu <= total_len; ++lv) {
                for (const XYWord& v : enumerate_words(lv)) {
                    InequalityReport rep = verify_inequality(u, v);
                    ++scan.pairs_checked;
                    if (!rep.holds) {
                        scan.all_hold = false;
                        scan.failures.push_back("u=" + u.str() + ",v=" + v.str());
                    }
                }
            }
        }
    }
    return scan;
}

}  // namespace descent
