#ifndef QOA_SERIES_HPP
#define QOA_SERIES_HPP

#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "qoa/ncpoly.hpp"

namespace qoa {

// Letters of the abstract mode alphabet.  For each k in [0, max_k]:
// Wm{k} stands for W_{-k}, Wp{k} for W_{k+1}, G{k+1} for G_{k+1} and
// Gt{k+1} for the tilde partner.  Letter index = 4*k + family.
enum class GenFamily : int { Wminus = 0, Wplus = 1, G = 2, Gtilde = 3 };

inline std::string mode_letter_name(GenFamily f, int k) {
    switch (f) {
    case GenFamily::Wminus: return "Wm" + std::to_string(k);
    case GenFamily::Wplus: return "Wp" + std::to_string(k);
    case GenFamily::G: return "G" + std::to_string(k + 1);
    case GenFamily::Gtilde: return "Gt" + std::to_string(k + 1);
    }
    fail(errc::usage, "bad generator family");
}

inline AlphabetPtr mode_alphabet(int max_k) {
    if (max_k < 0 || 4 * (max_k + 1) > 255) fail(errc::config, "mode alphabet k range invalid");
    static std::mutex mu;
    static std::map<int, AlphabetPtr> cache;
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(max_k);
    if (it != cache.end()) return it->second;
    std::vector<std::string> names;
    for (int k = 0; k <= max_k; ++k)
        for (int f = 0; f < 4; ++f) names.push_back(mode_letter_name(static_cast<GenFamily>(f), k));
    AlphabetPtr a = std::make_shared<Alphabet>(std::move(names));
    cache.emplace(max_k, a);
    return a;
}

inline int mode_letter_index(GenFamily f, int k) { return 4 * k + static_cast<int>(f); }
inline GenFamily mode_family_of(int letter) { return static_cast<GenFamily>(letter % 4); }
inline int mode_k_of(int letter) { return letter / 4; }
inline int mode_max_k(const Alphabet& a) { return static_cast<int>(a.size()) / 4 - 1; }

// The automorphism exchanging the two generator families, at mode level.
template <class C>
NCPoly<C> omega_modes(const NCPoly<C>& p) {
    NCPoly<C> r(p.alphabet());
    for (const auto& kv : p.terms()) {
        Word w = kv.first;
        for (auto& c : w.l) c = static_cast<uint8_t>(c ^ 1u); // Wm<->Wp, G<->Gt
        r.add_term(w, kv.second);
    }
    return r;
}

enum class Chart { at_infinity, at_zero };

// w_m^i: the u^{-2i-4m-2} coefficient of U(u)^{-1-i} expanded about u = inf.
template <class Ctx, class C = typename Ctx::Scalar>
C u_power_coeff(const Ctx& cx, int i, int m) {
    if (i < 0 || m < 0) fail(errc::domain, "u_power_coeff requires i, m >= 0");
    Rat bin(binom_z(static_cast<unsigned long>(m + i), static_cast<unsigned long>(i)));
    if (m % 2 == 1) bin = -bin;
    C two = cx.qnum(2);
    C r = cx.of_rat(bin);
    for (int t = 0; t < i + 1; ++t) r *= two;
    r *= cx.q_pow(-i - 2 * m - 1);
    return r;
}

// Both charts expand the displayed combination through the same bookkeeping:
// entries are coefficients of t^{-2e} where t = u for the expansion about
// u = inf and t = u^{-1} for the expansion about u = 0.
template <class Ctx, class C = typename Ctx::Scalar>
C u_power_coeff_chart(const Ctx& cx, int i, int m, Chart chart) {
    C w = u_power_coeff(cx, i, m);
    if (chart == Chart::at_zero) w *= cx.q_pow(2 * (i + 2 * m + 1)); // q -> q^{-1} on q^{-i-2m-1}
    return w;
}

// Expansion table of U(u * shift)^{-1-i} to truncation order N: map e -> coeff
// of t^{-2e}.  shift 'q' rescales the argument by q.
enum class ArgShift { none, q };

template <class Ctx, class C = typename Ctx::Scalar>
std::map<int, C> expand_U_power(const Ctx& cx, int i, ArgShift shift, int N,
                                Chart chart = Chart::at_infinity) {
    if (i < 0 || N < 0) fail(errc::domain, "expand_U_power requires i, N >= 0");
    std::map<int, C> table;
    for (int m = 0;; ++m) {
        int e = i + 2 * m + 1;
        if (e > N) break;
        C w = u_power_coeff_chart(cx, i, m, chart);
        if (shift == ArgShift::q)
            w *= cx.q_pow(chart == Chart::at_infinity ? -2 * e : 2 * e);
        table.emplace(e, std::move(w));
    }
    return table;
}

// Truncated formal series in t^{-2} with free-mode-algebra coefficients.
// Supports no exponents below lo; coefficients are known exactly for
// exponents <= hi and unrepresented beyond.
template <class C>
struct ModeSeries {
    static constexpr int kExact = 1 << 20;

    AlphabetPtr alph;
    int lo = 0;
    int hi = -1;
    std::map<int, NCPoly<C>> coeffs;

    static ModeSeries zero(AlphabetPtr a, int lo, int hi) {
        ModeSeries s;
        s.alph = std::move(a);
        s.lo = lo;
        s.hi = hi;
        return s;
    }

    NCPoly<C> at(int e) const {
        if (e > hi) fail(errc::usage, "series coefficient beyond truncation order");
        auto it = coeffs.find(e);
        return it == coeffs.end() ? NCPoly<C>::zero(alph) : it->second;
    }

    void add_at(int e, const NCPoly<C>& p) {
        if (e > hi || p.is_zero()) return;
        auto it = coeffs.find(e);
        if (it == coeffs.end())
            coeffs.emplace(e, p);
        else {
            it->second = it->second + p;
            if (it->second.is_zero()) coeffs.erase(it);
        }
    }

    friend ModeSeries operator+(const ModeSeries& a, const ModeSeries& b) {
        ModeSeries r = zero(a.alph ? a.alph : b.alph, std::min(a.lo, b.lo), std::min(a.hi, b.hi));
        for (const auto& kv : a.coeffs) r.add_at(kv.first, kv.second);
        for (const auto& kv : b.coeffs) r.add_at(kv.first, kv.second);
        return r;
    }
    friend ModeSeries operator-(const ModeSeries& a, const ModeSeries& b) {
        return a + b.scale_int(-1);
    }

    ModeSeries scale_int(int s) const {
        ModeSeries r = *this;
        for (auto& kv : r.coeffs) kv.second = kv.second.scale(C(s));
        if (s == 0) r.coeffs.clear();
        return r;
    }

    ModeSeries scale(const C& s) const {
        ModeSeries r = zero(alph, lo, hi);
        for (const auto& kv : coeffs) r.add_at(kv.first, kv.second.scale(s));
        return r;
    }

    // noncommutative coefficients: order of the factors is preserved
    friend ModeSeries operator*(const ModeSeries& a, const ModeSeries& b) {
        ModeSeries r = zero(a.alph ? a.alph : b.alph, a.lo + b.lo,
                            std::min(a.hi + b.lo, a.lo + b.hi));
        for (const auto& ka : a.coeffs)
            for (const auto& kb : b.coeffs) {
                int e = ka.first + kb.first;
                if (e <= r.hi) r.add_at(e, ka.second * kb.second);
            }
        return r;
    }
};

// One of the four currents as a truncated series over the mode alphabet.
template <class Ctx, class C = typename Ctx::Scalar>
ModeSeries<C> mode_current(const Ctx& cx, const AlphabetPtr& alph, GenFamily fam, ArgShift shift,
                           int N, Chart chart) {
    ModeSeries<C> s = ModeSeries<C>::zero(alph, 1, N);
    int max_k = mode_max_k(*alph);
    for (int k = 0; k <= std::min(max_k, N - 1); ++k) {
        auto table = expand_U_power(cx, k, shift, N, chart);
        NCPoly<C> lp = NCPoly<C>::letter(alph, mode_letter_index(fam, k), cx.one());
        for (const auto& ev : table) s.add_at(ev.first, lp.scale(ev.second));
    }
    return s;
}

// c_{k+1}: the overall scalar in front of the k-th central element in the
// series expansion.
template <class Ctx, class C = typename Ctx::Scalar>
C delta_series_scalar(const Ctx& cx, int k) {
    if (k < 0) fail(errc::domain, "delta scalar requires k >= 0");
    C two = cx.qnum(2);
    C r = cx.of_int(-1);
    for (int t = 0; t < k + 1; ++t) r *= two;
    r *= (cx.q_pow(k + 1) + cx.q_pow(-k - 1));
    r *= cx.q_pow(-2 * k - 2);
    return r;
}

// The generating function of the central elements, expanded to truncation
// order N by substituting the current expansions at arguments u and u*q.
template <class Ctx, class C = typename Ctx::Scalar>
ModeSeries<C> delta_current(const Ctx& cx, const AlphabetPtr& alph, int N,
                            Chart chart = Chart::at_infinity) {
    if (N < 1) fail(errc::domain, "delta_current requires N >= 1");
    if (mode_max_k(*alph) < N - 1)
        fail(errc::config, "mode alphabet too small: need K_max >= " + std::to_string(N - 1));

    auto Wp_u = mode_current(cx, alph, GenFamily::Wminus, ArgShift::none, N, chart);
    auto Wp_uq = mode_current(cx, alph, GenFamily::Wminus, ArgShift::q, N, chart);
    auto Wm_u = mode_current(cx, alph, GenFamily::Wplus, ArgShift::none, N, chart);
    auto Wm_uq = mode_current(cx, alph, GenFamily::Wplus, ArgShift::q, N, chart);
    auto Gp_u = mode_current(cx, alph, GenFamily::G, ArgShift::none, N, chart);
    auto Gp_uq = mode_current(cx, alph, GenFamily::G, ArgShift::q, N, chart);
    auto Gm_u = mode_current(cx, alph, GenFamily::Gtilde, ArgShift::none, N, chart);
    auto Gm_uq = mode_current(cx, alph, GenFamily::Gtilde, ArgShift::q, N, chart);

    C qmqi = cx.q() - cx.q_pow(-1);
    C q2q2 = cx.q_pow(2) + cx.q_pow(-2);

    // u^2 q^2 + u^{-2} q^{-2}; extra factors of u^2 shift e by -1
    ModeSeries<C> mult = ModeSeries<C>::zero(alph, -1, ModeSeries<C>::kExact);
    NCPoly<C> one_poly = NCPoly<C>::unit(alph, cx.one());
    mult.add_at(-1, one_poly.scale(chart == Chart::at_infinity ? cx.q_pow(2) : cx.q_pow(-2)));
    mult.add_at(1, one_poly.scale(chart == Chart::at_infinity ? cx.q_pow(-2) : cx.q_pow(2)));

    ModeSeries<C> total =
        (Wp_u * Wp_uq + Wm_u * Wm_uq).scale(-(qmqi * q2q2)) +
        (Gp_u * Gm_uq + Gm_u * Gp_uq).scale(-(qmqi / cx.rho())) +
        (mult * (Wp_u * Wm_uq + Wm_u * Wp_uq)).scale(qmqi) +
        (Gp_u + Gp_uq + Gm_u + Gm_uq).scale_int(-1);
    return total;
}

// Extract the k-th central element from the series expansion; this is the
// independent oracle the closed form is validated against.
template <class Ctx, class C = typename Ctx::Scalar>
NCPoly<C> delta_mode_oracle(const Ctx& cx, const AlphabetPtr& alph, int k,
                            Chart chart = Chart::at_infinity) {
    if (k < 0) fail(errc::domain, "delta_mode_oracle requires k >= 0");
    ModeSeries<C> d = delta_current(cx, alph, k + 1, chart);
    NCPoly<C> raw = d.at(k + 1);
    if (chart == Chart::at_infinity) {
        C c = delta_series_scalar(cx, k);
        return raw.scale(cx.one() / c);
    }
    // about u = 0 the overall scalar differs; normalize by the coefficient of
    // the single-letter G_{k+1} word, which the closed form pins to 1
    Word gw = Word::letter(mode_letter_index(GenFamily::G, k));
    C c = raw.coeff(gw);
    if (qoa::is_zero(c)) fail(errc::usage, "u=0 expansion lost the leading mode");
    return raw.scale(cx.one() / c);
}

} // namespace qoa

#endif
