#include "descent/words.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <stdexcept>

#include "descent/numeric.hpp"

namespace descent {

char to_char(Letter l) { return l == Letter::X ? 'x' : 'y'; }

Letter letter_from_char(char c) {
    if (c == 'x') return Letter::X;
    if (c == 'y') return Letter::Y;
    throw std::invalid_argument(std::string("letter_from_char: expected 'x' or 'y', got '") + c + "'");
}

XYWord::XYWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}

XYWord XYWord::parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("XYWord::parse: empty input (use \"1\" for the empty word)");
    if (text == "1") return XYWord{};
    std::vector<Letter> letters;
    letters.reserve(text.size());
    for (char c : text) letters.push_back(letter_from_char(c));
    return XYWord{std::move(letters)};
}

XYWord XYWord::from_descent_set(int n, const std::vector<int>& descents) {
    if (n < 1) throw std::invalid_argument("XYWord::from_descent_set: n must be >= 1");
    std::vector<Letter> letters(n - 1, Letter::X);
    for (int s : descents) {
        if (s < 1 || s > n - 1)
            throw std::invalid_argument("XYWord::from_descent_set: descent " + std::to_string(s) +
                                        " outside [1, " + std::to_string(n - 1) + "]");
        if (letters[s - 1] == Letter::Y)
            throw std::invalid_argument("XYWord::from_descent_set: repeated descent " +
                                        std::to_string(s));
        letters[s - 1] = Letter::Y;
    }
    return XYWord{std::move(letters)};
}

XYWord XYWord::parse_spec(const std::string& text) {
    std::size_t colon = text.find(':');
    if (colon == std::string::npos) return parse(text);
    const std::string bad = "XYWord::parse_spec: malformed set syntax \"" + text +
                            "\" (expected n:{i,j,...})";
    std::size_t pos = 0;
    auto read_int = [&]() {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw std::invalid_argument(bad);
        return std::stoi(text.substr(start, pos - start));
    };
    int n = read_int();
    if (pos != colon || colon + 1 >= text.size() || text[colon + 1] != '{')
        throw std::invalid_argument(bad);
    pos = colon + 2;
    std::vector<int> descents;
    if (pos < text.size() && text[pos] != '}') {
        while (true) {
            descents.push_back(read_int());
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                continue;
            }
            break;
        }
    }
    if (pos + 1 != text.size() || text[pos] != '}') throw std::invalid_argument(bad);
    return from_descent_set(n, descents);
}

std::vector<int> XYWord::descent_set() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (letters_[i] == Letter::Y) out.push_back(i + 1);
    return out;
}

XYWord XYWord::complemented() const {
    std::vector<Letter> letters(letters_);
    for (Letter& l : letters) l = opposite(l);
    return XYWord{std::move(letters)};
}

XYWord XYWord::reversed() const {
    std::vector<Letter> letters(letters_.rbegin(), letters_.rend());
    return XYWord{std::move(letters)};
}

XYWord XYWord::append(Letter l) const {
    std::vector<Letter> letters(letters_);
    letters.push_back(l);
    return XYWord{std::move(letters)};
}

XYWord XYWord::prepend(Letter l) const {
    std::vector<Letter> letters;
    letters.reserve(letters_.size() + 1);
    letters.push_back(l);
    letters.insert(letters.end(), letters_.begin(), letters_.end());
    return XYWord{std::move(letters)};
}

XYWord XYWord::concat(const XYWord& other) const {
    std::vector<Letter> letters(letters_);
    letters.insert(letters.end(), other.letters_.begin(), other.letters_.end());
    return XYWord{std::move(letters)};
}

std::string XYWord::str() const {
    if (empty()) return "1";
    std::string s;
    s.reserve(letters_.size());
    for (Letter l : letters_) s.push_back(to_char(l));
    return s;
}

std::strong_ordering XYWord::operator<=>(const XYWord& other) const {
    if (auto c = size() <=> other.size(); c != 0) return c;
    return letters_ <=> other.letters_;
}

int kappa(const XYWord& v) {
    if (v.empty()) return 1;
    int k = 2;
    for (int i = 0; i + 1 < v.size(); ++i)
        if (v[i] != v[i + 1]) ++k;
    return k;
}

XYWord subword(const XYWord& v, const std::vector<int>& positions) {
    std::vector<Letter> letters;
    letters.reserve(positions.size());
    int prev = 0;
    for (int p : positions) {
        if (p < 1 || p > v.size())
            throw std::invalid_argument("subword: position " + std::to_string(p) + " outside [1, " +
                                        std::to_string(v.size()) + "]");
        if (p <= prev) throw std::invalid_argument("subword: positions must be strictly increasing");
        prev = p;
        letters.push_back(v[p - 1]);
    }
    return XYWord{std::move(letters)};
}

XYWord subword(const XYWord& v, std::uint32_t mask) {
    if (v.size() < 32 && (mask >> v.size()) != 0)
        throw std::invalid_argument("subword: mask selects positions beyond the word");
    std::vector<Letter> letters;
    letters.reserve(std::popcount(mask));
    for (int i = 0; i < v.size(); ++i)
        if (mask & (1u << i)) letters.push_back(v[i]);
    return XYWord{std::move(letters)};
}

XYWord alternating_word(int len, Letter first) {
    if (len < 0) throw std::invalid_argument("alternating_word: negative length");
    std::vector<Letter> letters(len);
    for (int i = 0; i < len; ++i) letters[i] = (i % 2 == 0) ? first : opposite(first);
    return XYWord{std::move(letters)};
}

bool is_alternating(const XYWord& v) {
    for (int i = 0; i + 1 < v.size(); ++i)
        if (v[i] == v[i + 1]) return false;
    return true;
}

long long count_alternating_subwords(const XYWord& v) {
    // ends[l] = number of alternating nonempty subwords ending with letter
    // l.  Each letter extends every alternating subword ending with the
    // opposite letter, and starts one new subword of length 1.  The empty
    // subword is alternating too, hence the final + 1.
    long long ends[2] = {0, 0};
    for (int i = 0; i < v.size(); ++i) {
        int cur = static_cast<int>(v[i]);
        ends[cur] += ends[1 - cur] + 1;
    }
    return ends[0] + ends[1] + 1;
}

std::vector<XYWord> enumerate_words(int len) {
    if (len < 0) throw std::invalid_argument("enumerate_words: negative length");
    if (len > kMaxWordLength)
        throw std::invalid_argument("enumerate_words: length " + std::to_string(len) + " exceeds cap " +
                                    std::to_string(kMaxWordLength));
    std::vector<XYWord> words;
    words.reserve(std::size_t{1} << len);
    for (std::uint32_t m = 0; m < (std::uint32_t{1} << len); ++m) {
        std::vector<Letter> letters(len);
        for (int i = 0; i < len; ++i)
            letters[i] = (m >> (len - 1 - i)) & 1 ? Letter::Y : Letter::X;
        words.emplace_back(std::move(letters));
    }
    return words;
}

std::vector<int> composition_of(const XYWord& v) {
    std::vector<int> parts;
    int prev = 0;
    for (int s : v.descent_set()) {
        parts.push_back(s - prev);
        prev = s;
    }
    parts.push_back(v.size() + 1 - prev);
    return parts;
}

XYWord word_from_composition(const std::vector<int>& parts) {
    if (parts.empty()) throw std::invalid_argument("word_from_composition: no parts");
    int n = 0;
    std::vector<int> descents;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) throw std::invalid_argument("word_from_composition: parts must be positive");
        n += parts[i];
        if (i + 1 < parts.size()) descents.push_back(n);
    }
    return XYWord::from_descent_set(n, descents);
}

bool is_valid_factorization(const Factorization& f, const XYWord& source) {
    if (f.factors.empty()) return false;
    XYWord joined;
    for (const XYWord& factor : f.factors) joined = joined.concat(factor);
    if (joined != source) return false;
    // All factors but the last: a run of one letter followed by its opposite.
    for (int i = 0; i + 1 < f.factor_count(); ++i) {
        const XYWord& factor = f.factors[i];
        if (factor.empty()) return false;
        Letter last = factor[factor.size() - 1];
        for (int j = 0; j + 1 < factor.size(); ++j)
            if (factor[j] != opposite(last)) return false;
    }
    return true;
}

namespace {

void collect_factorizations(const XYWord& v, int pos, std::vector<XYWord>& prefix,
                            std::vector<Factorization>& out) {
    // Close the factorization here; the final factor takes the rest of the
    // word and may be empty or of any shape.
    {
        std::vector<int> rest;
        for (int i = pos; i < v.size(); ++i) rest.push_back(i + 1);
        prefix.push_back(subword(v, rest));
        out.push_back(Factorization{prefix});
        prefix.pop_back();
    }
    if (pos >= v.size()) return;
    // A non-last factor starting at pos is either the single letter v[pos]
    // (empty run) or the maximal run of v[pos] plus the first opposite
    // letter.  No other prefix matches the run-then-switch shape.
    {
        prefix.push_back(XYWord{{v[pos]}});
        collect_factorizations(v, pos + 1, prefix, out);
        prefix.pop_back();
    }
    int run_end = pos;
    while (run_end < v.size() && v[run_end] == v[pos]) ++run_end;
    if (run_end < v.size()) {
        // Maximal run of v[pos] plus the opposite letter at run_end.
        std::vector<int> positions;
        for (int i = pos; i <= run_end; ++i) positions.push_back(i + 1);
        prefix.push_back(subword(v, positions));
        collect_factorizations(v, run_end + 1, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Factorization> enumerate_factorizations(const XYWord& v) {
    if (v.size() > kMaxWordLength)
        throw std::invalid_argument("enumerate_factorizations: word length exceeds cap " +
                                    std::to_string(kMaxWordLength));
    std::vector<Factorization> out;
    std::vector<XYWord> prefix;
    collect_factorizations(v, 0, prefix, out);
    // Fixed emission order: factor count ascending, then lexicographic on
    // the factor-length sequence.  Factors are contiguous slices of v, so
    // the length sequence identifies the factorization and the order is a
    // total one.
    std::sort(out.begin(), out.end(), [](const Factorization& a, const Factorization& b) {
        if (a.factors.size() != b.factors.size()) return a.factors.size() < b.factors.size();
        for (std::size_t i = 0; i < a.factors.size(); ++i)
            if (a.factors[i].size() != b.factors[i].size())
                return a.factors[i].size() < b.factors[i].size();
        return false;
    });
    return out;
}

std::map<int, long long> factorization_profile(const XYWord& v) {
    if (v.size() > kMaxWordLength)
        throw std::invalid_argument("factorization_profile: word length exceeds cap " +
                                    std::to_string(kMaxWordLength));
    // counts[p][k] = factorizations of the suffix starting at p into k
    // factors, built right to left.  Avoids materializing the (roughly 3^n)
    // factorizations themselves.
    int len = v.size();
    std::vector<std::vector<Int>> counts(len + 1);
    counts[len] = {Int{0}, Int{1}};  // the empty final factor
    for (int pos = len - 1; pos >= 0; --pos) {
        std::vector<Int> acc{Int{0}, Int{1}};  // close here: rest is the final factor
        auto add_shifted = [&acc](const std::vector<Int>& src) {
            // one more leading factor: shift by z
            if (acc.size() < src.size() + 1) acc.resize(src.size() + 1);
            for (std::size_t k = 0; k < src.size(); ++k) acc[k + 1] += src[k];
        };
        add_shifted(counts[pos + 1]);  // single-letter factor
        int run_end = pos;
        while (run_end < len && v[run_end] == v[pos]) ++run_end;
        if (run_end < len) add_shifted(counts[run_end + 1]);  // run plus opposite letter
        counts[pos] = std::move(acc);
    }
    std::map<int, long long> profile;
    for (std::size_t k = 0; k < counts[0].size(); ++k)
        if (counts[0][k] != 0) profile[static_cast<int>(k)] = counts[0][k].convert_to<long long>();
    return profile;
}

}  // namespace descent
