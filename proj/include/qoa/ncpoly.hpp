#ifndef QOA_NCPOLY_HPP
#define QOA_NCPOLY_HPP

#include <map>
#include <string>
#include <utility>

#include "qoa/scalar_context.hpp"
#include "qoa/word.hpp"

#include "json.hpp"

namespace qoa {

// Element of the free associative algebra over a declared alphabet: a finite
// mapping word -> scalar with no zero values stored.  Terms iterate in the
// canonical (degree, then lexicographic) word order.
template <class C>
class NCPoly {
public:
    using Scalar = C;
    using TermMap = std::map<Word, C, WordLess>;

    NCPoly() = default;
    explicit NCPoly(AlphabetPtr a) : alph_(std::move(a)) {}

    static NCPoly zero(AlphabetPtr a) { return NCPoly(std::move(a)); }
    static NCPoly monomial(AlphabetPtr a, Word w, C c) {
        NCPoly p(std::move(a));
        if (!qoa::is_zero(c)) p.t_.emplace(std::move(w), std::move(c));
        return p;
    }
    static NCPoly unit(AlphabetPtr a, C c) { return monomial(std::move(a), Word::empty(), std::move(c)); }
    static NCPoly letter(AlphabetPtr a, int i, C c) {
        return monomial(std::move(a), Word::letter(i), std::move(c));
    }

    const AlphabetPtr& alphabet() const { return alph_; }
    const TermMap& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    std::size_t support_size() const { return t_.size(); }

    // degree of the zero polynomial is the -1 sentinel
    int degree() const {
        if (t_.empty()) return -1;
        return static_cast<int>(t_.rbegin()->first.size());
    }

    C coeff(const Word& w) const {
        auto it = t_.find(w);
        return it == t_.end() ? C() : it->second;
    }

    void add_term(const Word& w, const C& c) {
        if (qoa::is_zero(c)) return;
        auto it = t_.find(w);
        if (it == t_.end()) {
            t_.emplace(w, c);
        } else {
            it->second += c;
            if (qoa::is_zero(it->second)) t_.erase(it);
        }
    }

    NCPoly operator-() const {
        NCPoly r(alph_);
        for (const auto& kv : t_) r.t_.emplace(kv.first, -kv.second);
        return r;
    }

    friend NCPoly operator+(const NCPoly& a, const NCPoly& b) {
        check_alphabets(a, b);
        NCPoly r = a.t_.size() >= b.t_.size() ? a : b;
        const NCPoly& s = a.t_.size() >= b.t_.size() ? b : a;
        if (!r.alph_) r.alph_ = s.alph_;
        for (const auto& kv : s.t_) r.add_term(kv.first, kv.second);
        return r;
    }
    friend NCPoly operator-(const NCPoly& a, const NCPoly& b) { return a + (-b); }

    friend NCPoly operator*(const NCPoly& a, const NCPoly& b) {
        check_alphabets(a, b);
        NCPoly r(a.alph_ ? a.alph_ : b.alph_);
        for (const auto& ta : a.t_)
            for (const auto& tb : b.t_) r.add_term(ta.first.concat(tb.first), ta.second * tb.second);
        return r;
    }

    NCPoly scale(const C& c) const {
        NCPoly r(alph_);
        if (qoa::is_zero(c)) return r;
        for (const auto& kv : t_) {
            C v = kv.second * c;
            if (!qoa::is_zero(v)) r.t_.emplace(kv.first, v);
        }
        return r;
    }

    friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.t_ == b.t_; }
    friend bool operator!=(const NCPoly& a, const NCPoly& b) { return !(a == b); }

    // restriction to words of length exactly d
    NCPoly graded_component(int d) const {
        NCPoly r(alph_);
        for (const auto& kv : t_)
            if (static_cast<int>(kv.first.size()) == d) r.t_.emplace(kv.first, kv.second);
        return r;
    }

    static void check_alphabets(const NCPoly& a, const NCPoly& b) {
        if (!a.alph_ || !b.alph_) return; // default-constructed zero matches anything
        if (!same_alphabet(a.alph_, b.alph_)) fail(errc::usage, "alphabet mismatch");
    }

private:
    AlphabetPtr alph_;
    TermMap t_;
};

template <class Ctx, class C = typename Ctx::Scalar>
NCPoly<C> q_commutator(const Ctx& cx, const NCPoly<C>& p, const NCPoly<C>& r) {
    return (p * r).scale(cx.q()) - (r * p).scale(cx.q_pow(-1));
}

template <class C>
NCPoly<C> commutator(const NCPoly<C>& p, const NCPoly<C>& r) {
    return p * r - r * p;
}

// [X, Y]_{q^{-1}} = q^{-1} X Y - q Y X
template <class Ctx, class C = typename Ctx::Scalar>
NCPoly<C> q_inv_commutator(const Ctx& cx, const NCPoly<C>& p, const NCPoly<C>& r) {
    return (p * r).scale(cx.q_pow(-1)) - (r * p).scale(cx.q());
}

// The letter swap a <-> b; an algebra automorphism of the free algebra on
// the core two-letter alphabet.
template <class C>
NCPoly<C> omega_swap(const NCPoly<C>& p) {
    const AlphabetPtr& a = p.alphabet();
    if (!a) return p;
    if (!same_alphabet(a, core_alphabet()))
        fail(errc::usage, "omega_swap requires the core {a, b} alphabet");
    NCPoly<C> r(a);
    for (const auto& kv : p.terms()) {
        Word w = kv.first;
        for (auto& c : w.l) c = static_cast<uint8_t>(1 - c);
        r.add_term(w, kv.second);
    }
    return r;
}

// ---- JSON form ----

inline std::string scalar_str(const RatFunc& x) { return x.str(); }
inline std::string scalar_str(const Rat& x) { return x.str(); }

template <class C>
C parse_scalar_as(const std::string& s);
template <>
inline RatFunc parse_scalar_as<RatFunc>(const std::string& s) { return RatFunc::parse(s); }
template <>
inline Rat parse_scalar_as<Rat>(const std::string& s) { return Rat::parse(s); }

template <class C>
nlohmann::ordered_json ncpoly_to_json(const NCPoly<C>& p) {
    nlohmann::ordered_json j;
    j["alphabet"] = p.alphabet() ? p.alphabet()->names() : std::vector<std::string>{};
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& kv : p.terms()) {
        nlohmann::ordered_json t;
        t["word"] = word_str(kv.first, *p.alphabet());
        t["coeff"] = scalar_str(kv.second);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

template <class C>
NCPoly<C> ncpoly_from_json(const nlohmann::json& j, AlphabetPtr a) {
    if (!j.contains("terms")) fail(errc::parse, "NCPoly JSON missing 'terms'");
    if (j.contains("alphabet")) {
        std::vector<std::string> names = j["alphabet"].get<std::vector<std::string>>();
        if (!names.empty() && names != a->names())
            fail(errc::usage, "NCPoly JSON alphabet mismatch");
    }
    NCPoly<C> p(a);
    for (const auto& t : j["terms"]) {
        Word w = parse_word(t["word"].get<std::string>(), *a);
        C c = parse_scalar_as<C>(t["coeff"].get<std::string>());
        p.add_term(w, c);
    }
    return p;
}

template <class C>
std::string ncpoly_str(const NCPoly<C>& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& kv : p.terms()) {
        if (!first) out += " + ";
        std::string w = kv.first.is_empty() ? std::string("1") : word_str(kv.first, *p.alphabet());
        out += "(" + scalar_str(kv.second) + ")*" + w;
        first = false;
    }
    return out;
}

} // namespace qoa

#endif
