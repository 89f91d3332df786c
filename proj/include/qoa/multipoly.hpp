#ifndef QOA_MULTIPOLY_HPP
#define QOA_MULTIPOLY_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qoa/rational.hpp"

namespace qoa {

// Variable layout for coefficient polynomials: index 0 is q (the only
// variable allowed negative exponents), index 1 is rho, index 2+i is
// delta_{i+1}.  kMaxVars caps the number of delta indeterminates.
inline constexpr int kMaxVars = 12;

struct Monomial {
    std::array<int16_t, kMaxVars> e{};

    int total_degree() const {
        int d = 0;
        for (int i = 0; i < kMaxVars; ++i) d += e[i];
        return d;
    }
    bool is_unit() const {
        for (int i = 0; i < kMaxVars; ++i)
            if (e[i] != 0) return false;
        return true;
    }
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e != b.e; }
};

// Degree-lexicographic order with precedence q < rho < d1 < d2 < ...
// (higher variable index wins ties at equal total degree).
inline int mono_cmp(const Monomial& a, const Monomial& b) {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    for (int i = kMaxVars - 1; i >= 0; --i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
    return 0;
}

struct MonoGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return mono_cmp(a, b) > 0; }
};

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<int16_t>(a.e[i] + b.e[i]);
    return r;
}

// a | b in the ordinary (non-negative exponent) sense
inline bool mono_divides(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < kMaxVars; ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}

inline Monomial mono_div(const Monomial& b, const Monomial& a) {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<int16_t>(b.e[i] - a.e[i]);
    return r;
}

// Sparse multivariate polynomial with exact rational coefficients.  Terms are
// kept strictly descending in mono_cmp order with no zero coefficients, so
// representation equality is value equality.  Exponents of variable 0 (q) may
// be negative (Laurent); all algorithms that require ordinary polynomials
// (division, gcd) are only ever fed non-negative inputs by their callers.
class MultiPoly {
public:
    using Term = std::pair<Monomial, Rat>;

    MultiPoly() = default;

    static MultiPoly zero() { return MultiPoly(); }
    static MultiPoly constant(const Rat& c) {
        MultiPoly p;
        if (!c.is_zero()) p.t_.push_back({Monomial{}, c});
        return p;
    }
    static MultiPoly variable(int idx, int exp = 1) {
        if (idx < 0 || idx >= kMaxVars) fail(errc::usage, "variable index out of range");
        MultiPoly p;
        Monomial m;
        m.e[idx] = static_cast<int16_t>(exp);
        if (exp != 0)
            p.t_.push_back({m, Rat(1)});
        else
            p.t_.push_back({Monomial{}, Rat(1)});
        return p;
    }
    static MultiPoly from_terms(std::vector<Term> terms) {
        std::sort(terms.begin(), terms.end(),
                  [](const Term& a, const Term& b) { return mono_cmp(a.first, b.first) > 0; });
        std::vector<Term> merged;
        for (auto& tm : terms) {
            if (!merged.empty() && merged.back().first == tm.first)
                merged.back().second += tm.second;
            else
                merged.push_back(tm);
        }
        MultiPoly p;
        for (auto& tm : merged)
            if (!tm.second.is_zero()) p.t_.push_back(tm);
        return p;
    }

    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].first.is_unit()); }
    bool is_monomial() const { return t_.size() == 1; }
    bool is_one() const { return t_.size() == 1 && t_[0].first.is_unit() && t_[0].second.is_one(); }
    std::size_t size() const { return t_.size(); }
    const std::vector<Term>& terms() const { return t_; }
    const Term& lead() const {
        if (t_.empty()) fail(errc::usage, "leading term of zero polynomial");
        return t_[0];
    }

    MultiPoly operator-() const {
        MultiPoly r = *this;
        for (auto& tm : r.t_) tm.second = -tm.second;
        return r;
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) { return merge(a, b, false); }
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return merge(a, b, true); }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        if (a.is_zero() || b.is_zero()) return MultiPoly();
        if (b.is_monomial()) return a.mul_term(b.t_[0].first, b.t_[0].second);
        if (a.is_monomial()) return b.mul_term(a.t_[0].first, a.t_[0].second);
        std::map<Monomial, Rat, MonoGreater> acc;
        for (const auto& ta : a.t_)
            for (const auto& tb : b.t_) acc[mono_mul(ta.first, tb.first)] += ta.second * tb.second;
        MultiPoly r;
        r.t_.reserve(acc.size());
        for (auto& kv : acc)
            if (!kv.second.is_zero()) r.t_.push_back({kv.first, kv.second});
        return r;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.t_ == b.t_; }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    MultiPoly scale(const Rat& c) const {
        if (c.is_zero()) return MultiPoly();
        MultiPoly r = *this;
        for (auto& tm : r.t_) tm.second *= c;
        return r;
    }

    MultiPoly mul_term(const Monomial& m, const Rat& c) const {
        if (c.is_zero()) return MultiPoly();
        MultiPoly r = *this;
        for (auto& tm : r.t_) {
            tm.first = mono_mul(tm.first, m);
            tm.second *= c;
        }
        return r;
    }

    MultiPoly pow(int e) const {
        if (e < 0) fail(errc::usage, "negative polynomial power");
        MultiPoly acc = constant(Rat(1));
        for (int i = 0; i < e; ++i) acc = acc * (*this);
        return acc;
    }

    int min_exp(int var) const {
        if (t_.empty()) return 0;
        int m = t_[0].first.e[var];
        for (const auto& tm : t_) m = std::min<int>(m, tm.first.e[var]);
        return m;
    }
    int degree_in(int var) const {
        if (t_.empty()) return 0;
        int m = t_[0].first.e[var];
        for (const auto& tm : t_) m = std::max<int>(m, tm.first.e[var]);
        return m;
    }

    // multiply by var^delta (delta may be negative for var 0)
    MultiPoly shift_var(int var, int delta) const {
        MultiPoly r = *this;
        for (auto& tm : r.t_) tm.first.e[var] = static_cast<int16_t>(tm.first.e[var] + delta);
        return r;
    }

    Rat eval(const std::vector<Rat>& values) const {
        Rat acc(0);
        for (const auto& tm : t_) {
            Rat term = tm.second;
            for (int i = 0; i < kMaxVars; ++i) {
                int e = tm.first.e[i];
                if (e == 0) continue;
                if (i >= static_cast<int>(values.size()))
                    fail(errc::usage, "evaluation point has too few coordinates");
                term *= values[i].pow(e);
            }
            acc += term;
        }
        return acc;
    }

private:
    static MultiPoly merge(const MultiPoly& a, const MultiPoly& b, bool subtract) {
        MultiPoly r;
        r.t_.reserve(a.t_.size() + b.t_.size());
        std::size_t i = 0, j = 0;
        while (i < a.t_.size() || j < b.t_.size()) {
            int c;
            if (i >= a.t_.size())
                c = -1;
            else if (j >= b.t_.size())
                c = 1;
            else
                c = mono_cmp(a.t_[i].first, b.t_[j].first);
            if (c > 0) {
                r.t_.push_back(a.t_[i++]);
            } else if (c < 0) {
                Rat v = subtract ? -b.t_[j].second : b.t_[j].second;
                r.t_.push_back({b.t_[j].first, v});
                ++j;
            } else {
                Rat v = subtract ? a.t_[i].second - b.t_[j].second : a.t_[i].second + b.t_[j].second;
                if (!v.is_zero()) r.t_.push_back({a.t_[i].first, v});
                ++i;
                ++j;
            }
        }
        return r;
    }

    std::vector<Term> t_;
};

// ---- exact division and gcd (ordinary exponents only) ----

// Exact multivariate division; the caller guarantees divisibility.
inline MultiPoly poly_divexact(const MultiPoly& a, const MultiPoly& b) {
    if (b.is_zero()) fail(errc::arithmetic, "polynomial division by zero");
    if (a.is_zero()) return MultiPoly();
    std::vector<MultiPoly::Term> qterms;
    MultiPoly r = a;
    const auto& lb = b.lead();
    while (!r.is_zero()) {
        const auto& lr = r.lead();
        if (!mono_divides(lb.first, lr.first))
            fail(errc::arithmetic, "inexact polynomial division");
        Monomial qm = mono_div(lr.first, lb.first);
        Rat qc = lr.second / lb.second;
        qterms.push_back({qm, qc});
        r = r - b.mul_term(qm, qc);
    }
    return MultiPoly::from_terms(std::move(qterms));
}

// Scale to integer, coprime coefficients with positive leading coefficient.
// If content is non-null it receives the rational c with input = c * output.
inline MultiPoly int_primitive(const MultiPoly& p, Rat* content = nullptr) {
    if (p.is_zero()) {
        if (content) *content = Rat(0);
        return p;
    }
    mpz_class den_lcm(1), num_gcd(0);
    for (const auto& tm : p.terms()) {
        den_lcm = lcm_z(den_lcm, tm.second.den());
        num_gcd = gcd_z(num_gcd, tm.second.num());
    }
    Rat scale = Rat(den_lcm) / Rat(num_gcd);
    if (p.lead().second.sgn() < 0) scale = -scale;
    if (content) *content = scale.inv();
    return p.scale(scale);
}

inline std::map<int, MultiPoly> coeffs_wrt(const MultiPoly& p, int v) {
    std::map<int, MultiPoly> out;
    std::map<int, std::vector<MultiPoly::Term>> buckets;
    for (const auto& tm : p.terms()) {
        Monomial m = tm.first;
        int e = m.e[v];
        m.e[v] = 0;
        buckets[e].push_back({m, tm.second});
    }
    for (auto& kv : buckets) out[kv.first] = MultiPoly::from_terms(std::move(kv.second));
    return out;
}

inline MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b);

inline MultiPoly content_wrt(const MultiPoly& p, int v) {
    MultiPoly g;
    for (auto& kv : coeffs_wrt(p, v)) g = poly_gcd(g, kv.second);
    return g;
}

// pseudo-remainder of a by b with respect to variable v
inline MultiPoly prem(const MultiPoly& a, const MultiPoly& b, int v) {
    int db = b.degree_in(v);
    if (db <= 0) fail(errc::usage, "prem requires positive degree divisor");
    auto bc = coeffs_wrt(b, v);
    MultiPoly lcb = bc.rbegin()->second;
    MultiPoly r = a;
    while (!r.is_zero()) {
        int dr = r.degree_in(v);
        if (dr < db) break;
        auto rc = coeffs_wrt(r, v);
        MultiPoly ltr = rc.rbegin()->second;
        r = lcb * r - (ltr * b).shift_var(v, dr - db);
    }
    return r;
}

// true when every term carries the same exponents on all variables except q;
// that common part (with q zeroed) is written to profile
inline bool common_profile_off_q(const MultiPoly& p, Monomial& profile) {
    bool first = true;
    for (const auto& tm : p.terms()) {
        Monomial m = tm.first;
        m.e[0] = 0;
        if (first) {
            profile = m;
            first = false;
        } else if (m != profile) {
            return false;
        }
    }
    return true;
}

inline bool is_q_only(const MultiPoly& p) {
    for (const auto& tm : p.terms())
        for (int i = 1; i < kMaxVars; ++i)
            if (tm.first.e[i] != 0) return false;
    return true;
}

// gcd against a pure q-polynomial: fold the univariate gcd over the q-slices
// of the other operand
inline MultiPoly gcd_against_q_poly(const MultiPoly& a, const MultiPoly& g) {
    std::map<Monomial, std::vector<MultiPoly::Term>, MonoGreater> slices;
    for (const auto& tm : a.terms()) {
        Monomial key = tm.first;
        key.e[0] = 0;
        Monomial qm;
        qm.e[0] = tm.first.e[0];
        slices[key].push_back({qm, tm.second});
    }
    MultiPoly acc = g;
    for (auto& kv : slices) {
        if (acc.is_constant()) break;
        acc = poly_gcd(acc, MultiPoly::from_terms(std::move(kv.second)));
    }
    return acc;
}

// Multivariate gcd by content / primitive-part recursion with a primitive
// pseudo-remainder sequence at the base.  Result is integer-primitive with
// positive leading coefficient (and 1 for coprime inputs).
inline MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero()) return b.is_zero() ? b : int_primitive(b);
    if (b.is_zero()) return int_primitive(a);
    MultiPoly A = int_primitive(a), B = int_primitive(b);
    if (A == B) return A;
    // common monomial factor
    Monomial ga, gb, g;
    for (int i = 0; i < kMaxVars; ++i) {
        ga.e[i] = static_cast<int16_t>(A.min_exp(i));
        gb.e[i] = static_cast<int16_t>(B.min_exp(i));
        g.e[i] = std::min(ga.e[i], gb.e[i]);
    }
    if (!ga.is_unit()) A = A.mul_term(mono_div(Monomial{}, ga), Rat(1));
    if (!gb.is_unit()) B = B.mul_term(mono_div(Monomial{}, gb), Rat(1));

    if (A.is_monomial() || B.is_monomial())
        return MultiPoly::constant(Rat(1)).mul_term(g, Rat(1));

    // denominators in this code base are monomial * q-polynomial; route that
    // shape through univariate gcds instead of the generic recursion
    if (!(is_q_only(A) && is_q_only(B))) {
        if (is_q_only(B)) return int_primitive(gcd_against_q_poly(A, B)).mul_term(g, Rat(1));
        if (is_q_only(A)) return int_primitive(gcd_against_q_poly(B, A)).mul_term(g, Rat(1));
    }

    int v = -1;
    for (int i = kMaxVars - 1; i >= 0; --i)
        if (A.degree_in(i) > 0 || B.degree_in(i) > 0) { v = i; break; }
    MultiPoly result;
    if (v < 0) {
        result = MultiPoly::constant(Rat(1));
    } else if (A.degree_in(v) == 0) {
        result = poly_gcd(A, content_wrt(B, v));
    } else if (B.degree_in(v) == 0) {
        result = poly_gcd(content_wrt(A, v), B);
    } else {
        MultiPoly cA = content_wrt(A, v), cB = content_wrt(B, v);
        MultiPoly c = poly_gcd(cA, cB);
        MultiPoly P = poly_divexact(A, cA), Q = poly_divexact(B, cB);
        if (P.degree_in(v) < Q.degree_in(v)) std::swap(P, Q);
        while (true) {
            MultiPoly R = prem(P, Q, v);
            if (R.is_zero()) {
                result = Q;
                break;
            }
            if (R.degree_in(v) == 0) {
                result = MultiPoly::constant(Rat(1));
                break;
            }
            R = poly_divexact(R, content_wrt(R, v));
            R = int_primitive(R);
            P = Q;
            Q = R;
        }
        if (result.degree_in(v) > 0) result = poly_divexact(result, content_wrt(result, v));
        result = c * result;
    }
    result = int_primitive(result);
    if (!g.is_unit()) result = result.mul_term(g, Rat(1));
    return result;
}

} // namespace qoa

#endif
