// Acceptance gate: the nine end-to-end claims this project must deliver.
// Each criterion prints exactly one PASS/FAIL line; the exit code is the
// number of failed criteria.  Timed criteria also fail on a blown budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "descent/ehrhart.hpp"
#include "descent/fvector.hpp"
#include "descent/geometry.hpp"
#include "descent/inequality.hpp"
#include "descent/nc_series.hpp"
#include "descent/numeric.hpp"
#include "descent/words.hpp"

using namespace descent;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        pass = false;
        if (!detail.empty()) detail += "; ";
        detail += why;
    }
};

const std::vector<Int> kXyyxFVector = {12, 34, 42, 26, 8, 1};

Outcome criterion1() {
    Outcome out;
    XYWord w = XYWord::parse("xyyx");
    NCSeries<TPoly> phi = fpoly_series(4);
    std::vector<std::pair<std::string, std::vector<Int>>> results = {
        {"direct", f_direct(w).f_vector()},
        {"recurrence", f_recurrence(w).f_vector()},
        {"factorization", f_factorization(w).f_vector()},
        {"series", FPolynomial{w, 5, phi.coeff(w)}.f_vector()},
        {"oracle", f_vector_oracle(w).f_vector()},
    };
    for (const auto& [name, f] : results)
        if (f != kXyyxFVector) out.fail(name + " disagrees");
    return out;
}

Outcome criterion2() {
    Outcome out;
    XYWord w = XYWord::parse("xyyx");
    std::vector<Factorization> all = enumerate_factorizations(w);
    if (all.size() != 11) out.fail("expected 11 factorizations, got " + std::to_string(all.size()));
    std::map<int, long long> profile;
    for (const Factorization& f : all) ++profile[f.factor_count()];
    std::map<int, long long> expected{{1, 1}, {2, 2}, {3, 4}, {4, 3}, {5, 1}};
    if (profile != expected) out.fail("factor-count profile differs");
    TPoly sum{1};
    TPoly t1 = TPoly::t() + 1;
    for (const auto& [count, times] : profile) sum += Int{times} * t1.pow(count);
    if (sum != f_recurrence(w).poly) out.fail("weighted factorization sum is not the face polynomial");
    return out;
}

Outcome criterion3() {
    Outcome out;
    NCSeries<TPoly> phi = fpoly_series(8);
    long long words = 0;
    for (int len = 0; len <= 8; ++len)
        for (const XYWord& w : enumerate_words(len)) {
            ++words;
            TPoly expected = f_recurrence(w).poly;
            if (f_direct(w).poly != expected || f_factorization(w).poly != expected ||
                phi.coeff(w) != expected || f_vector_oracle(w).poly != expected) {
                out.fail("disagreement at " + w.str());
                return out;
            }
        }
    if (words != 511) out.fail("expected 511 words, saw " + std::to_string(words));
    return out;
}

Outcome criterion4() {
    Outcome out;
    for (int len = 0; len <= 10; ++len)
        for (const XYWord& w : enumerate_words(len)) {
            TPoly p = f_recurrence(w).poly;
            int n = len + 1;
            if (p.eval_int(-1) != 1) out.fail("Euler fails at " + w.str());
            if (p.coeff(n) != 1) out.fail("leading coefficient fails at " + w.str());
            if (n >= 2 && p.coeff(n - 1) != n - 1 + kappa(w))
                out.fail("facet coefficient fails at " + w.str());
            if (p.coeff(0) != 1 + count_alternating_subwords(w))
                out.fail("vertex coefficient fails at " + w.str());
            if (!out.pass) return out;
        }
    return out;
}

Outcome criterion5() {
    Outcome out;
    InequalityScan scan = verify_inequality_range(7);
    if (!scan.all_hold)
        out.fail("inequality violated for " + std::to_string(scan.failures.size()) + " pairs");
    std::map<int, int> rows;
    for (const CaseWitness& w : verify_case_table()) {
        if (!w.ok) out.fail("case row " + std::to_string(w.row.index) + " mismatch");
        ++rows[w.row.index];
    }
    if (rows.size() != 9) out.fail("case table does not cover nine rows");
    for (int n = 2; n <= 10; ++n) {
        std::vector<XYWord> expected{alternating_word(n - 1, Letter::X),
                                     alternating_word(n - 1, Letter::Y)};
        if (expected[1] < expected[0]) std::swap(expected[0], expected[1]);
        if (max_fvector_words(n) != expected) out.fail("maxima wrong at n=" + std::to_string(n));
    }
    return out;
}

Outcome criterion6() {
    Outcome out;
    std::vector<TPoly> series = alternating_series(20);
    std::vector<Int> a;
    for (int n = 1; n <= 20; ++n) a.push_back(series[n].eval_int(1));
    std::vector<Int> first = {3, 7, 19, 51};
    for (int n = 1; n <= 4; ++n)
        if (a[n - 1] != first[n - 1]) out.fail("face total wrong at n=" + std::to_string(n));
    for (int n = 4; n <= 20; ++n)
        if (a[n - 1] != 3 * a[n - 2] - 2 * a[n - 4])
            out.fail("face-total recurrence fails at n=" + std::to_string(n));
    long long fib_prev = 1, fib = 2;
    for (int n = 1; n <= 15; ++n) {
        if (vertex_count(alternating_word(n - 1, Letter::X)) != fib)
            out.fail("vertex count not Fibonacci at n=" + std::to_string(n));
        long long next = fib + fib_prev;
        fib_prev = fib;
        fib = next;
    }
    return out;
}

Outcome criterion7() {
    Outcome out;
    for (long long r = 0; r <= 3; ++r) {
        NCSeries<Int> series = lattice_point_series(r, 6);
        for (int len = 0; len <= 6; ++len)
            for (const XYWord& w : enumerate_words(len))
                if (series.coeff(w) != count_lattice_points(w, r)) {
                    out.fail("series count wrong at " + w.str() + ", r=" + std::to_string(r));
                    return out;
                }
    }
    return out;
}

Outcome criterion8() {
    Outcome out;
    for (int len = 0; len <= 7; ++len)
        for (const XYWord& w : enumerate_words(len)) {
            int n = len + 1;
            if (ehrhart_polynomial(w).leading() != Rat{descent_statistic(w), factorial(n)}) {
                out.fail("volume identity fails at " + w.str());
                return out;
            }
        }
    for (int n = 1; n <= 8; ++n) {
        Int total = 0;
        for (const XYWord& w : enumerate_words(n - 1)) total += descent_statistic(w);
        if (total != factorial(n)) out.fail("statistics do not sum to n! at n=" + std::to_string(n));
    }
    return out;
}

Outcome criterion9() {
    Outcome out;
    for (int len = 0; len <= 8; ++len)
        for (const XYWord& w : enumerate_words(len)) {
            TPoly p = f_recurrence(w).poly;
            if (f_recurrence(w.complemented()).poly != p || f_recurrence(w.reversed()).poly != p) {
                out.fail("face-polynomial symmetry fails at " + w.str());
                return out;
            }
        }
    for (int len = 0; len <= 8; ++len)
        for (const XYWord& w : enumerate_words(len)) {
            EhrhartPoly p = ehrhart_polynomial(w);
            if (ehrhart_polynomial(w.complemented()).coeffs != p.coeffs ||
                ehrhart_polynomial(w.reversed()).coeffs != p.coeffs) {
                out.fail("Ehrhart symmetry fails at " + w.str());
                return out;
            }
        }
    NCSeries<TPoly> phi = fpoly_series(10);
    for (const auto& [w, c] : phi.terms())
        if (phi.coeff(w.complemented()) != c) {
            out.fail("series letter-swap symmetry fails at " + w.str());
            return out;
        }
    return out;
}

}  // namespace

int main() {
    struct Criterion {
        int index;
        std::string name;
        std::function<Outcome()> run;
        double budget_seconds;  // 0: untimed
    };
    std::vector<Criterion> criteria = {
        {1, "five computations of the 5-dimensional example agree", criterion1, 1.0},
        {2, "the example's 11 factorizations weight-sum to its face polynomial", criterion2, 0},
        {3, "all five computations agree on every word of length <= 8", criterion3, 120.0},
        {4, "Euler relation and boundary coefficients, length <= 10", criterion4, 0},
        {5, "splice inequality, nine-case table, and alternating maxima", criterion5, 0},
        {6, "alternating face totals and Fibonacci vertex counts", criterion6, 0},
        {7, "series lattice-point counts match direct counts, length <= 6", criterion7, 120.0},
        {8, "leading Ehrhart coefficient is the permutation statistic over n!", criterion8, 0},
        {9, "complement/reversal/letter-swap symmetries", criterion9, 0},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out.fail(std::string("exception: ") + e.what());
        }
        double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.budget_seconds > 0 && elapsed > c.budget_seconds)
            out.fail("took " + std::to_string(elapsed) + " s, budget " +
                     std::to_string(c.budget_seconds) + " s");
        std::ostringstream line;
        line << (out.pass ? "PASS" : "FAIL") << " criterion " << c.index << ": " << c.name;
        std::printf("%s (%.2f s)%s%s\n", line.str().c_str(), elapsed,
                    out.detail.empty() ? "" : " -- ", out.detail.c_str());
        if (!out.pass) ++failures;
    }
    if (failures == 0)
        std::printf("all 9 acceptance criteria pass\n");
    else
        std::printf("%d acceptance criteria FAILED\n", failures);
    return failures;
}
