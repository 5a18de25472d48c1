// Command-line front end: batch computation of f-vectors and Ehrhart
// polynomials, verification suites, and sequence regression.
//
// Exit codes: 0 success/pass, 1 verification failure, 2 usage or cap error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "descent/ehrhart.hpp"
#include "descent/fvector.hpp"
#include "descent/geometry.hpp"
#include "descent/inequality.hpp"
#include "descent/nc_series.hpp"
#include "descent/words.hpp"

using nlohmann::json;
using namespace descent;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

// Big integers render as JSON numbers while they fit 64 bits, as decimal
// strings beyond that; either way the output is deterministic.
json int_json(const Int& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return v.convert_to<std::int64_t>();
    return v.str();
}

std::string rat_str(const Rat& q) { return q.str(); }

json fvec_json(const std::vector<Int>& f) {
    json arr = json::array();
    for (const Int& c : f) arr.push_back(int_json(c));
    return arr;
}

// TPoly as sorted [exponent, coefficient] pairs, ascending exponent.
json tpoly_json(const TPoly& p) {
    json arr = json::array();
    for (const auto& [exp, c] : p.coeffs()) arr.push_back(json::array({exp, int_json(c)}));
    return arr;
}

json set_json(const std::vector<int>& set) {
    json arr = json::array();
    for (int s : set) arr.push_back(s);
    return arr;
}

std::string set_str(const std::vector<int>& set) {
    std::string out = "{";
    for (std::size_t i = 0; i < set.size(); ++i) out += (i ? "," : "") + std::to_string(set[i]);
    return out + "}";
}

std::vector<int> mask_to_set(std::uint32_t mask) {
    std::vector<int> out;
    for (int i = 0; mask >> i; ++i)
        if (mask & (1u << i)) out.push_back(i + 1);
    return out;
}

// Both encodings of the word, echoed on every word-indexed report.
void echo_word(json& j, const XYWord& w) {
    j["word"] = w.str();
    j["n"] = w.size() + 1;
    j["set"] = set_json(w.descent_set());
}

struct OutputSink {
    std::string path;  // empty: stdout

    void emit(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::invalid_argument("cannot open output file " + path);
        out << text;
    }
};

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// Shared word-selection flags: --word (literal or set syntax), or --n with
// an optional --set.
struct WordArgs {
    std::string word;
    int n = 0;
    std::string set;

    XYWord resolve() const {
        if (!word.empty()) {
            if (n != 0 || !set.empty())
                throw std::invalid_argument("give either --word or --n/--set, not both");
            return XYWord::parse_spec(word);
        }
        if (n == 0) throw std::invalid_argument("one of --word or --n is required");
        if (set.empty()) return XYWord::parse_spec(std::to_string(n) + ":{}");
        return XYWord::parse_spec(std::to_string(n) + ":" + set);
    }
};

void add_word_flags(CLI::App* cmd, WordArgs& args) {
    cmd->add_option("--word", args.word, "word literal (\"xyyx\", \"1\") or set syntax (\"5:{2,3}\")");
    cmd->add_option("--n", args.n, "dimension n (word length n-1)");
    cmd->add_option("--set", args.set, "descent set \"{i,j,...}\", used with --n");
}

// ---------------------------------------------------------------- fvector

struct MethodResult {
    std::string name;
    std::optional<std::vector<Int>> f;  // nullopt: skipped
    std::string note;                   // skip reason
};

std::vector<MethodResult> run_methods(const XYWord& v, const std::string& method) {
    auto attempt = [&v](const std::string& name, auto&& fn, int cap,
                        const char* why) -> MethodResult {
        if (cap >= 0 && v.size() > cap)
            return {name, std::nullopt, std::string(why) + " (length cap " + std::to_string(cap) + ")"};
        return {name, fn(v).f_vector(), ""};
    };
    auto via_series = [](const XYWord& v) {
        NCSeries<TPoly> s = fpoly_series(v.size());
        return FPolynomial{v, v.size() + 1, s.coeff(v)};
    };
    std::vector<MethodResult> out;
    for (const std::string& name :
         method == "all" ? std::vector<std::string>{"direct", "recurrence", "factorization", "phi",
                                                    "oracle"}
                         : std::vector<std::string>{method}) {
        if (name == "direct")
            out.push_back(attempt("direct", f_direct, kMaxWordLength, "skipped"));
        else if (name == "recurrence")
            out.push_back(attempt("recurrence", f_recurrence, -1, ""));
        else if (name == "factorization")
            out.push_back(attempt("factorization", f_factorization, kMaxWordLength, "skipped"));
        else if (name == "phi")
            out.push_back(attempt("phi", via_series, kMaxFpolyTrunc, "skipped"));
        else if (name == "oracle")
            out.push_back(attempt("oracle", f_vector_oracle, kMaxLatticeLength, "skipped"));
        else
            throw std::invalid_argument("unknown method " + name);
    }
    if (method != "all")
        for (const MethodResult& m : out)
            if (!m.f) throw std::invalid_argument("method " + m.name + ": " + m.note);
    return out;
}

void write_lattice_file(const XYWord& v, const std::string& path) {
    FaceLattice fl = FaceLattice::build(v);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open lattice file " + path);
    if (path.size() >= 4 && path.substr(path.size() - 4) == ".dot") {
        out << fl.to_dot();
        return;
    }
    json j;
    echo_word(j, v);
    j["vertices"] = json::array();
    for (const auto& p : fl.vertices()) j["vertices"].push_back(p);
    j["faces"] = json::array();
    for (const auto& face : fl.faces()) {
        json fj;
        fj["dim"] = face.dim;
        fj["vertices"] = json::array();
        for (int i = 0; i < static_cast<int>(fl.vertices().size()); ++i)
            if (face.members.test(i)) fj["vertices"].push_back(i);
        j["faces"].push_back(std::move(fj));
    }
    out << dump(j);
}

int cmd_fvector(const WordArgs& wargs, const std::string& method, const std::string& format,
                const OutputSink& sink, const std::string& lattice_path) {
    XYWord v = wargs.resolve();
    std::vector<MethodResult> results = run_methods(v, method);
    if (!lattice_path.empty()) write_lattice_file(v, lattice_path);

    bool agree = true;
    const std::vector<Int>* first = nullptr;
    for (const MethodResult& m : results) {
        if (!m.f) continue;
        if (!first)
            first = &*m.f;
        else if (*m.f != *first)
            agree = false;
    }

    std::ostringstream text;
    if (format == "json") {
        json j;
        echo_word(j, v);
        j["kappa"] = kappa(v);
        j["method"] = method;
        if (method == "all") {
            json methods;
            for (const MethodResult& m : results)
                methods[m.name] = m.f ? fvec_json(*m.f) : json(m.note);
            j["methods"] = std::move(methods);
            j["agree"] = agree;
        }
        if (first) j["f_vector"] = fvec_json(*first);
        text << dump(j);
    } else if (format == "csv") {
        int n = v.size() + 1;
        text << "word,method,n,kappa";
        for (int d = 0; d <= n; ++d) text << ",f_" << d;
        text << "\n";
        for (const MethodResult& m : results) {
            if (!m.f) continue;
            text << v.str() << "," << m.name << "," << n << "," << kappa(v);
            for (const Int& c : *m.f) text << "," << c;
            text << "\n";
        }
    } else {
        text << "word " << v.str() << "  n=" << v.size() + 1 << "  set=" << set_str(v.descent_set())
             << "  kappa=" << kappa(v) << "\n";
        for (const MethodResult& m : results) {
            text << "  " << m.name << ": ";
            if (!m.f) {
                text << m.note << "\n";
                continue;
            }
            text << "[";
            for (std::size_t i = 0; i < m.f->size(); ++i) text << (i ? ", " : "") << (*m.f)[i];
            text << "]\n";
        }
        if (method == "all") text << (agree ? "all methods agree" : "METHOD DISAGREEMENT") << "\n";
        if (first) {
            TPoly p;
            for (std::size_t d = 0; d < first->size(); ++d)
                p += TPoly::monomial((*first)[d], static_cast<int>(d));
            text << "  F(t) = " << p.str() << "\n";
        }
    }
    sink.emit(text.str());
    return agree ? kExitPass : kExitVerifyFail;
}

// ---------------------------------------------------------------- ehrhart

int cmd_ehrhart(const WordArgs& wargs, long long r, bool r_given, const std::string& format,
                const OutputSink& sink) {
    XYWord v = wargs.resolve();
    EhrhartPoly p = ehrhart_polynomial(v);
    Int beta = descent_statistic(v);

    std::ostringstream text;
    if (format == "json") {
        json j;
        echo_word(j, v);
        json coeffs = json::array();
        for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) coeffs.push_back(rat_str(*it));
        j["ehrhart"] = std::move(coeffs);
        j["beta"] = int_json(beta);
        j["volume"] = rat_str(p.leading());
        if (r_given) {
            j["r"] = r;
            j["count"] = int_json(count_lattice_points(v, r));
        }
        text << dump(j);
    } else if (format == "csv") {
        text << "word,n,beta,volume";
        for (int d = p.n; d >= 0; --d) text << ",c_" << d;
        text << "\n" << v.str() << "," << p.n << "," << beta << "," << rat_str(p.leading());
        for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) text << "," << rat_str(*it);
        text << "\n";
    } else {
        text << "word " << v.str() << "  n=" << p.n << "  set=" << set_str(v.descent_set()) << "\n";
        text << "  E(r) =";
        for (int d = p.n; d >= 0; --d) {
            if (p.coeffs[d] == 0) continue;
            text << " " << (d == p.n ? "" : "+ ") << rat_str(p.coeffs[d]);
            if (d > 0) text << "*r";
            if (d > 1) text << "^" << d;
        }
        text << "\n  beta = " << beta << "\n  volume = " << rat_str(p.leading()) << "\n";
        if (r_given)
            text << "  lattice points at r=" << r << ": " << count_lattice_points(v, r) << "\n";
    }
    sink.emit(text.str());
    return kExitPass;
}

// ----------------------------------------------------------------- verify

struct SuiteReport {
    std::string suite;
    bool pass = true;
    json details = json::object();
    std::vector<std::string> lines;  // text rendering, one per check
};

SuiteReport suite_inequality(int size) {
    if (size < 0) size = 7;
    SuiteReport rep;
    rep.suite = "inequality";
    InequalityScan scan = verify_inequality_range(size);
    rep.pass = scan.all_hold;
    rep.details["max_total_length"] = size;
    rep.details["pairs_checked"] = scan.pairs_checked;
    rep.details["failures"] = scan.failures;
    rep.lines.push_back("pairs with |u|+|v| <= " + std::to_string(size) + ": " +
                        std::to_string(scan.pairs_checked) + " checked, " +
                        std::to_string(scan.failures.size()) + " violations");
    return rep;
}

SuiteReport suite_table1() {
    SuiteReport rep;
    rep.suite = "table1";
    std::vector<CaseWitness> witnesses = verify_case_table();
    json rows = json::array();
    std::map<int, int> per_row_ok;
    for (const CaseWitness& w : witnesses) {
        rep.pass = rep.pass && w.ok;
        per_row_ok[w.row.index] += w.ok ? 1 : 0;
        json r;
        r["row"] = w.row.index;
        r["label"] = w.row.label;
        r["u"] = w.u.str();
        r["T"] = set_json(mask_to_set(w.tmask));
        r["v"] = w.v.str();
        r["U"] = set_json(mask_to_set(w.umask));
        r["quotient"] = w.quotient.str();
        r["expected"] = w.row.expected_quotient.str();
        r["ok"] = w.ok;
        rows.push_back(std::move(r));
    }
    rep.details["witnesses"] = std::move(rows);
    for (const auto& [row, ok_count] : per_row_ok)
        rep.lines.push_back("row " + std::to_string(row) + ": " + std::to_string(ok_count) +
                            "/2 witnesses ok");
    if (per_row_ok.size() != 9) rep.pass = false;
    return rep;
}

SuiteReport suite_maxima(int size) {
    if (size < 0) size = 10;
    SuiteReport rep;
    rep.suite = "maxima";
    json rows = json::array();
    for (int n = 1; n <= size; ++n) {
        std::vector<XYWord> got = max_fvector_words(n);
        std::vector<XYWord> expected;
        if (n == 1)
            expected = {XYWord{}};
        else
            expected = {alternating_word(n - 1, Letter::X), alternating_word(n - 1, Letter::Y)};
        std::sort(expected.begin(), expected.end());
        bool ok = got == expected;
        rep.pass = rep.pass && ok;
        json r;
        r["n"] = n;
        json words = json::array();
        for (const XYWord& w : got) words.push_back(w.str());
        r["maxima"] = std::move(words);
        r["ok"] = ok;
        rows.push_back(std::move(r));
        rep.lines.push_back("n=" + std::to_string(n) + ": " + std::to_string(got.size()) +
                            " maximal word(s), " + (ok ? "as expected" : "UNEXPECTED"));
    }
    rep.details["rows"] = std::move(rows);
    return rep;
}

SuiteReport suite_oracle(int size) {
    if (size < 0) size = 7;
    SuiteReport rep;
    rep.suite = "oracle";
    long long words_checked = 0;
    std::vector<std::string> mismatches;
    for (int len = 0; len <= size; ++len) {
        for (const XYWord& w : enumerate_words(len)) {
            ++words_checked;
            if (f_vector_oracle(w).poly != f_recurrence(w).poly) mismatches.push_back(w.str());
        }
        rep.lines.push_back("length " + std::to_string(len) + ": " +
                            std::to_string(std::size_t{1} << len) + " words checked");
    }
    rep.pass = mismatches.empty();
    rep.details["max_length"] = size;
    rep.details["words_checked"] = words_checked;
    rep.details["mismatches"] = mismatches;
    return rep;
}

SuiteReport suite_ehrhart_pipeline(int size) {
    if (size < 0) size = 6;
    SuiteReport rep;
    rep.suite = "ehrhart-pipeline";
    std::vector<std::string> mismatches;
    long long checks = 0;
    for (long long r = 0; r <= 3; ++r) {
        NCSeries<Int> weak = weak_chain_series(r, size);
        NCSeries<Int> strict = strict_chain_series(r, size);
        NCSeries<Int> lattice = lattice_point_series(r, size);
        for (int len = 0; len <= size; ++len) {
            for (const XYWord& w : enumerate_words(len)) {
                RWordCounts counts = rword_counts(w, r);
                Int direct = count_lattice_points(w, r);
                ++checks;
                if (weak.coeff(w) != counts.weak) mismatches.push_back("weak:" + w.str());
                if (strict.coeff(w) != counts.strict) mismatches.push_back("strict:" + w.str());
                if (lattice.coeff(w) != direct) mismatches.push_back("lattice:" + w.str());
            }
        }
        rep.lines.push_back("r=" + std::to_string(r) + ": three series against direct counts");
    }
    rep.pass = mismatches.empty();
    rep.details["max_length"] = size;
    rep.details["words_checked_per_series"] = checks;
    rep.details["mismatches"] = mismatches;
    return rep;
}

int cmd_verify(const std::string& suite, int size, const std::string& format,
               const OutputSink& sink) {
    SuiteReport rep;
    if (suite == "inequality")
        rep = suite_inequality(size);
    else if (suite == "table1")
        rep = suite_table1();
    else if (suite == "maxima")
        rep = suite_maxima(size);
    else if (suite == "oracle")
        rep = suite_oracle(size);
    else if (suite == "ehrhart-pipeline")
        rep = suite_ehrhart_pipeline(size);
    else
        throw std::invalid_argument("unknown suite " + suite);

    std::ostringstream text;
    if (format == "json") {
        json j;
        j["suite"] = rep.suite;
        j["pass"] = rep.pass;
        j["details"] = rep.details;
        text << dump(j);
    } else {
        text << "suite " << rep.suite << "\n";
        for (const std::string& line : rep.lines) text << "  " << line << "\n";
        text << (rep.pass ? "PASS" : "FAIL") << "\n";
    }
    sink.emit(text.str());
    return rep.pass ? kExitPass : kExitVerifyFail;
}

// -------------------------------------------------------------- enumerate

constexpr int kMaxEnumerateN = 14;

int cmd_enumerate(int n, int max_n, const std::string& format, const OutputSink& sink) {
    if (n > 0 && max_n > 0) throw std::invalid_argument("give either --n or --max-n, not both");
    if (n <= 0 && max_n <= 0) throw std::invalid_argument("one of --n or --max-n is required");
    int lo = n > 0 ? n : 1;
    int hi = n > 0 ? n : max_n;
    if (hi > kMaxEnumerateN)
        throw std::invalid_argument("enumerate: n exceeds cap " + std::to_string(kMaxEnumerateN));

    std::ostringstream text;
    if (format == "json") {
        json arr = json::array();
        for (int dim = lo; dim <= hi; ++dim) {
            for (const XYWord& w : enumerate_words(dim - 1)) {
                json j;
                echo_word(j, w);
                j["kappa"] = kappa(w);
                j["facets"] = w.empty() ? json(nullptr) : json(facet_count(w));
                j["vertices"] = vertex_count(w);
                j["f_vector"] = fvec_json(f_recurrence(w).f_vector());
                arr.push_back(std::move(j));
            }
        }
        text << dump(arr);
    } else if (format == "csv") {
        text << "word,n,kappa,facets,vertices";
        for (int d = 0; d <= hi; ++d) text << ",f_" << d;
        text << "\n";
        for (int dim = lo; dim <= hi; ++dim) {
            for (const XYWord& w : enumerate_words(dim - 1)) {
                text << w.str() << "," << dim << "," << kappa(w) << ","
                     << (w.empty() ? std::string{} : std::to_string(facet_count(w))) << ","
                     << vertex_count(w);
                std::vector<Int> f = f_recurrence(w).f_vector();
                for (int d = 0; d <= hi; ++d)
                    if (d < static_cast<int>(f.size()))
                        text << "," << f[d];
                    else
                        text << ",";  // pad so every row has the same width
                text << "\n";
            }
        }
    } else {
        for (int dim = lo; dim <= hi; ++dim) {
            for (const XYWord& w : enumerate_words(dim - 1)) {
                text << w.str() << "  n=" << dim << " kappa=" << kappa(w) << " vertices="
                     << vertex_count(w) << " f=[";
                std::vector<Int> f = f_recurrence(w).f_vector();
                for (std::size_t i = 0; i < f.size(); ++i) text << (i ? "," : "") << f[i];
                text << "]\n";
            }
        }
    }
    sink.emit(text.str());
    return kExitPass;
}

// ----------------------------------------------------------------- series

int cmd_series(const std::string& which, int trunc, long long r, const std::string& format,
               const OutputSink& sink) {
    std::ostringstream text;
    if (which == "fpoly") {
        NCSeries<TPoly> s = fpoly_series(trunc);
        if (format == "json") {
            json j;
            j["series"] = which;
            j["trunc"] = trunc;
            json terms;
            for (const auto& [w, c] : s.terms()) terms[w.str()] = tpoly_json(c);
            j["terms"] = std::move(terms);
            text << dump(j);
        } else {
            for (const auto& [w, c] : s.terms()) text << w.str() << ": " << c.str() << "\n";
        }
    } else {
        NCSeries<Int> s = which == "alpha"  ? weak_chain_series(r, trunc)
                          : which == "beta" ? strict_chain_series(r, trunc)
                                            : lattice_point_series(r, trunc);
        if (which != "alpha" && which != "beta" && which != "ehrhart")
            throw std::invalid_argument("unknown series " + which);
        if (format == "json") {
            json j;
            j["series"] = which;
            j["r"] = r;
            j["trunc"] = trunc;
            json terms;
            for (const auto& [w, c] : s.terms()) terms[w.str()] = int_json(c);
            j["terms"] = std::move(terms);
            text << dump(j);
        } else {
            for (const auto& [w, c] : s.terms()) text << w.str() << ": " << c << "\n";
        }
    }
    sink.emit(text.str());
    return kExitPass;
}

// -------------------------------------------------------------- sequences

int cmd_sequences(const std::string& which, int max_n, const std::string& format,
                  const OutputSink& sink) {
    if (max_n < 1 || max_n > kMaxAlternatingN)
        throw std::invalid_argument("sequences: --max-n must be in [1, " +
                                    std::to_string(kMaxAlternatingN) + "]");
    std::vector<Int> values;
    bool recurrence_ok = true;
    if (which == "faces-t1") {
        std::vector<TPoly> series = alternating_series(max_n);
        for (int n = 1; n <= max_n; ++n) values.push_back(series[n].eval_int(1));
        // a_n = 3 a_{n-1} - 2 a_{n-3}, from the series denominator.
        for (int n = 4; n <= max_n; ++n)
            recurrence_ok =
                recurrence_ok && values[n - 1] == 3 * values[n - 2] - 2 * values[n - 4];
    } else if (which == "fibonacci") {
        for (int n = 1; n <= max_n; ++n)
            values.push_back(vertex_count(alternating_word(n - 1, Letter::X)));
        for (int n = 3; n <= max_n; ++n)
            recurrence_ok = recurrence_ok && values[n - 1] == values[n - 2] + values[n - 3];
        recurrence_ok = recurrence_ok && values[0] == 2 && (max_n < 2 || values[1] == 3);
    } else {
        throw std::invalid_argument("unknown sequence " + which);
    }

    std::ostringstream text;
    if (format == "json") {
        json j;
        j["which"] = which;
        j["max_n"] = max_n;
        json vals = json::array();
        for (const Int& v : values) vals.push_back(int_json(v));
        j["values"] = std::move(vals);
        j["recurrence_ok"] = recurrence_ok;
        text << dump(j);
    } else {
        for (std::size_t i = 0; i < values.size(); ++i) text << (i ? "," : "") << values[i];
        text << "\n";
        if (!recurrence_ok) text << "RECURRENCE VIOLATION\n";
    }
    sink.emit(text.str());
    return recurrence_ok ? kExitPass : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact f-vectors and Ehrhart polynomials of descent polytopes"};
    app.require_subcommand(1);

    WordArgs wargs;
    std::string method = "recurrence";
    std::string format;
    std::string out_path;
    std::string lattice_path;
    std::string suite, which;
    int size = -1;
    int n = 0, max_n = 0;
    long long r = 1;
    int trunc = 6;

    CLI::App* fv = app.add_subcommand("fvector", "f-vector of one word");
    add_word_flags(fv, wargs);
    fv->add_option("--method", method,
                   "direct|recurrence|factorization|phi|oracle|all (default recurrence)");
    fv->add_option("--format", format, "json|csv|text (default json)");
    fv->add_option("--out", out_path, "write the report to a file instead of stdout");
    fv->add_option("--lattice", lattice_path,
                   "also write the face lattice (.dot for Graphviz, else JSON)");

    CLI::App* eh = app.add_subcommand("ehrhart", "Ehrhart polynomial of one word");
    add_word_flags(eh, wargs);
    CLI::Option* eh_r = eh->add_option("--r", r, "also count lattice points of the r-th dilate");
    eh->add_option("--format", format, "json|csv|text (default json)");
    eh->add_option("--out", out_path, "write the report to a file instead of stdout");

    CLI::App* ver = app.add_subcommand("verify", "run a verification suite");
    ver->add_option("suite", suite, "inequality|table1|maxima|oracle|ehrhart-pipeline")
        ->required();
    ver->add_option("--max-n", size, "suite size (pair length / max n / max word length)");
    ver->add_option("--format", format, "json|text (default text)");
    ver->add_option("--out", out_path, "write the report to a file instead of stdout");

    CLI::App* en = app.add_subcommand("enumerate", "tabulate all words of a dimension");
    en->add_option("--n", n, "dimension n: all words of length n-1");
    en->add_option("--max-n", max_n, "all dimensions 1..max-n");
    en->add_option("--format", format, "json|csv|text (default json)");
    en->add_option("--out", out_path, "write the report to a file instead of stdout");

    CLI::App* se = app.add_subcommand("series", "dump a generating series up to a truncation");
    se->add_option("--which", which, "fpoly|alpha|beta|ehrhart")->required();
    se->add_option("--trunc", trunc, "maximum word length (default 6)");
    se->add_option("--r", r, "dilation parameter for alpha|beta|ehrhart (default 1)");
    se->add_option("--format", format, "json|text (default json)");
    se->add_option("--out", out_path, "write the report to a file instead of stdout");

    CLI::App* sq = app.add_subcommand("sequences", "alternating-word sequence regression");
    sq->add_option("--which", which, "faces-t1|fibonacci")->required();
    sq->add_option("--max-n", max_n, "number of terms (default 10)");
    sq->add_option("--format", format, "json|text (default text)");
    sq->add_option("--out", out_path, "write the report to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    OutputSink sink{out_path};
    try {
        if (fv->parsed())
            return cmd_fvector(wargs, method, format.empty() ? "json" : format, sink, lattice_path);
        if (eh->parsed())
            return cmd_ehrhart(wargs, r, eh_r->count() > 0, format.empty() ? "json" : format, sink);
        if (ver->parsed()) return cmd_verify(suite, size, format.empty() ? "text" : format, sink);
        if (en->parsed()) return cmd_enumerate(n, max_n, format.empty() ? "json" : format, sink);
        if (se->parsed()) return cmd_series(which, trunc, r, format.empty() ? "json" : format, sink);
        if (sq->parsed())
            return cmd_sequences(which, max_n > 0 ? max_n : 10, format.empty() ? "text" : format,
                                 sink);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitVerifyFail;
    }
    return kExitUsage;
}
