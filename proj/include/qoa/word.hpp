#ifndef QOA_WORD_HPP
#define QOA_WORD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "qoa/errors.hpp"

namespace qoa {

// Ordered list of distinct letter names.  The creation order fixes both the
// monomial order precedence (later letters are larger) and serialization.
class Alphabet {
public:
    explicit Alphabet(std::vector<std::string> letters) : letters_(std::move(letters)) {
        if (letters_.empty()) fail(errc::usage, "alphabet must be nonempty");
        if (letters_.size() > 255) fail(errc::usage, "alphabet too large");
        for (std::size_t i = 0; i < letters_.size(); ++i)
            for (std::size_t j = i + 1; j < letters_.size(); ++j)
                if (letters_[i] == letters_[j]) fail(errc::usage, "duplicate letter name");
    }

    std::size_t size() const { return letters_.size(); }
    const std::string& name(int i) const { return letters_[static_cast<std::size_t>(i)]; }
    const std::vector<std::string>& names() const { return letters_; }

    int index(const std::string& n) const {
        for (std::size_t i = 0; i < letters_.size(); ++i)
            if (letters_[i] == n) return static_cast<int>(i);
        return -1;
    }

    friend bool operator==(const Alphabet& a, const Alphabet& b) {
        return a.letters_ == b.letters_;
    }

private:
    std::vector<std::string> letters_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

inline AlphabetPtr core_alphabet() {
    static const AlphabetPtr a = std::make_shared<Alphabet>(std::vector<std::string>{"a", "b"});
    return a;
}

inline bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

struct Word {
    std::vector<uint8_t> l;

    static Word empty() { return Word{}; }
    static Word letter(int i) { return Word{{static_cast<uint8_t>(i)}}; }

    std::size_t size() const { return l.size(); }
    bool is_empty() const { return l.empty(); }

    Word concat(const Word& o) const {
        Word r = *this;
        r.l.insert(r.l.end(), o.l.begin(), o.l.end());
        return r;
    }
    Word subrange(std::size_t from, std::size_t count) const {
        Word r;
        r.l.assign(l.begin() + static_cast<std::ptrdiff_t>(from),
                   l.begin() + static_cast<std::ptrdiff_t>(from + count));
        return r;
    }

    // first occurrence of pattern as a contiguous subword, npos if none
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t find(const Word& pat) const {
        if (pat.size() > size()) return npos;
        for (std::size_t i = 0; i + pat.size() <= size(); ++i) {
            bool ok = true;
            for (std::size_t j = 0; j < pat.size(); ++j)
                if (l[i + j] != pat.l[j]) { ok = false; break; }
            if (ok) return i;
        }
        return npos;
    }

    friend bool operator==(const Word& a, const Word& b) { return a.l == b.l; }
    friend bool operator!=(const Word& a, const Word& b) { return a.l != b.l; }
};

// degree-lexicographic word order; letter precedence follows alphabet index
inline int word_cmp(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a.l[i] != b.l[i]) return a.l[i] < b.l[i] ? -1 : 1;
    return 0;
}

struct WordLess {
    bool operator()(const Word& a, const Word& b) const { return word_cmp(a, b) < 0; }
};

inline std::string word_str(const Word& w, const Alphabet& a) {
    std::string s;
    for (uint8_t c : w.l) s += a.name(c);
    return s;
}

// Greedy longest-match with backtracking; letter names need not be
// prefix-free.
inline bool parse_word_impl(const std::string& s, std::size_t pos, const Alphabet& a, Word& out) {
    if (pos == s.size()) return true;
    std::vector<int> candidates;
    for (int i = 0; i < static_cast<int>(a.size()); ++i) {
        const std::string& n = a.name(i);
        if (s.compare(pos, n.size(), n) == 0) candidates.push_back(i);
    }
    std::sort(candidates.begin(), candidates.end(), [&](int x, int y) {
        return a.name(x).size() > a.name(y).size();
    });
    for (int i : candidates) {
        out.l.push_back(static_cast<uint8_t>(i));
        if (parse_word_impl(s, pos + a.name(i).size(), a, out)) return true;
        out.l.pop_back();
    }
    return false;
}

inline Word parse_word(const std::string& s, const Alphabet& a) {
    Word w;
    if (!parse_word_impl(s, 0, a, w))
        fail(errc::parse, "cannot parse word '" + s + "' over the given alphabet");
    return w;
}

} // namespace qoa

#endif
