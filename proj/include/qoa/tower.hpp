#ifndef QOA_TOWER_HPP
#define QOA_TOWER_HPP

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "qoa/series.hpp"

namespace qoa {

// parity symbol: 1 for k even, 0 for k odd (note the reversed convention)
inline int kbar(int k) { return k % 2 == 0 ? 1 : 0; }
inline int half_floor(int k) { return k / 2; }

template <class Ctx, class C = typename Ctx::Scalar>
C coeff_c(const Ctx& cx, int k) {
    return delta_series_scalar(cx, k);
}

template <class Ctx, class C = typename Ctx::Scalar>
C coeff_d(const Ctx& cx, int l, int k) {
    if (k < 0 || l < 0 || l > half_floor(k) - 1)
        fail(errc::domain, "coeff_d index out of range");
    C w = u_power_coeff(cx, 2 * l + 1 - kbar(k), half_floor(k) - l);
    C r = -(cx.one() / coeff_c(cx, k)) * w * (cx.one() + cx.q_pow(-2 * k - 2));
    return r;
}

template <class Ctx, class C = typename Ctx::Scalar>
C coeff_e(const Ctx& cx, int i, int j, int k) {
    if (k < 0 || i < 0 || j < 0) fail(errc::domain, "coeff_e index out of range");
    int t = i + j - kbar(k);
    if (t < 0 || t % 2 != 0) fail(errc::domain, "coeff_e index out of range");
    int l = t / 2;
    if (l > half_floor(k) - kbar(k)) fail(errc::domain, "coeff_e index out of range");
    int M = half_floor(k) - (i + j + kbar(k)) / 2;
    C sum = cx.zero();
    for (int m = 0; m <= M; ++m)
        sum += u_power_coeff(cx, i, M - m) * u_power_coeff(cx, j, m) * cx.q_pow(-2 * j - 4 * m - 2);
    return -(cx.one() / coeff_c(cx, k)) * sum;
}

template <class Ctx, class C = typename Ctx::Scalar>
C coeff_f(const Ctx& cx, int i, int j, int k) {
    if (k < 0 || i < 0 || j < 0) fail(errc::domain, "coeff_f index out of range");
    int t = i + j - 1 + kbar(k);
    if (t < 0 || t % 2 != 0) fail(errc::domain, "coeff_f index out of range");
    int l = t / 2;
    if (l > half_floor(k)) fail(errc::domain, "coeff_f index out of range");
    int M = half_floor(k) - l;
    C sum = cx.zero();
    for (int m = 0; m <= M; ++m) {
        C wj = u_power_coeff(cx, j, m);
        if (m >= 1) wj += u_power_coeff(cx, j, m - 1); // w_{-1} := 0
        sum += u_power_coeff(cx, i, M - m) * wj * cx.q_pow(-2 * j - 4 * m);
    }
    return (cx.one() / coeff_c(cx, k)) * sum;
}

namespace detail {

template <class C>
NCPoly<C> mode_word2(const AlphabetPtr& a, GenFamily f1, int k1, GenFamily f2, int k2, const C& c) {
    Word w;
    w.l.push_back(static_cast<uint8_t>(mode_letter_index(f1, k1)));
    w.l.push_back(static_cast<uint8_t>(mode_letter_index(f2, k2)));
    return NCPoly<C>::monomial(a, std::move(w), c);
}

} // namespace detail

// The bilinear combinations entering the closed form of the central
// elements.  The series oracle fixes the letter ordering: in every product
// the first factor carries the unshifted argument.
template <class Ctx, class C = typename Ctx::Scalar>
NCPoly<C> mode_Wij(const Ctx& cx, const AlphabetPtr& a, int i, int j) {
    C s = cx.q() - cx.q_pow(-1);
    return detail::mode_word2(a, GenFamily::Wminus, i, GenFamily::Wplus, j, s) +
           detail::mode_word2(a, GenFamily::Wplus, i, GenFamily::Wminus, j, s);
}

template <class Ctx, class C = typename Ctx::Scalar>
NCPoly<C> mode_Fij(const Ctx& cx, const AlphabetPtr& a, int i, int j) {
    C s = cx.q() - cx.q_pow(-1);
    C s2 = s * (cx.q_pow(2) + cx.q_pow(-2));
    C sr = s / cx.rho();
    return detail::mode_word2(a, GenFamily::Wminus, i, GenFamily::Wminus, j, s2) +
           detail::mode_word2(a, GenFamily::Wplus, i, GenFamily::Wplus, j, s2) +
           detail::mode_word2(a, GenFamily::G, i, GenFamily::Gtilde, j, sr) +
           detail::mode_word2(a, GenFamily::Gtilde, i, GenFamily::G, j, sr);
}

template <class Ctx, class C = typename Ctx::Scalar>
NCPoly<C> mode_Gsum(const Ctx& cx, const AlphabetPtr& a, int idx) { // G_idx + Gt_idx
    NCPoly<C> p = NCPoly<C>::letter(a, mode_letter_index(GenFamily::G, idx - 1), cx.one());
    p.add_term(Word::letter(mode_letter_index(GenFamily::Gtilde, idx - 1)), cx.one());
    return p;
}

// Closed form of the k-th central element as a free polynomial over the mode
// alphabet; validated term-for-term against delta_mode_oracle.
template <class Ctx, class C = typename Ctx::Scalar>
NCPoly<C> delta_abstract(const Ctx& cx, const AlphabetPtr& a, int k) {
    if (k < 0) fail(errc::domain, "delta_abstract requires k >= 0");
    if (mode_max_k(*a) < k) fail(errc::config, "mode alphabet too small for delta_abstract");
    const int kb = kbar(k), h = half_floor(k);
    NCPoly<C> p = mode_Gsum(cx, a, k + 1);
    for (int l = 0; l <= h - 1; ++l)
        p = p + mode_Gsum(cx, a, 2 * (l + 1) - kb).scale(coeff_d(cx, l, k));
    for (int l = 0; l <= h; ++l) {
        int tgt = 2 * l + 1 - kb;
        for (int i = 0; i <= tgt; ++i)
            p = p + mode_Wij(cx, a, i, tgt - i).scale(coeff_f(cx, i, tgt - i, k));
    }
    for (int l = 0; l <= h - kb; ++l) {
        int tgt = 2 * l + kb;
        for (int i = 0; i <= tgt; ++i)
            p = p + mode_Fij(cx, a, i, tgt - i).scale(coeff_e(cx, i, tgt - i, k));
    }
    return p;
}

struct GenKind {
    GenFamily fam;
    int k;
};

// The generator tower over the core {a, b} alphabet: every generator as a
// polynomial in W_0 = a and W_1 = b, computed by the closed recursion and
// mirrored through the letter-swap automorphism.  The memo table is a
// thread-safe idempotent cache.
template <class Ctx>
class Tower {
public:
    using C = typename Ctx::Scalar;

    Tower(Ctx cx, std::vector<C> deltas) : cx_(std::move(cx)), deltas_(std::move(deltas)) {}

    const Ctx& context() const { return cx_; }
    int num_deltas() const { return static_cast<int>(deltas_.size()); }

    C delta_value(int k1based) const {
        if (k1based < 1 || k1based > num_deltas())
            fail(errc::config, "delta list too short: need K >= " + std::to_string(k1based));
        return deltas_[static_cast<std::size_t>(k1based - 1)];
    }

    NCPoly<C> gen(GenFamily fam, int k) const {
        if (k < 0) fail(errc::domain, "generator index must be >= 0");
        {
            std::lock_guard<std::mutex> lk(mu_);
            auto it = memo_.find({static_cast<int>(fam), k});
            if (it != memo_.end()) return it->second;
        }
        NCPoly<C> value = compute(fam, k);
        std::lock_guard<std::mutex> lk(mu_);
        auto [it, inserted] = memo_.emplace(std::make_pair(static_cast<int>(fam), k), value);
        (void)inserted;
        return it->second;
    }
    NCPoly<C> gen(GenKind kind) const { return gen(kind.fam, kind.k); }

    // homomorphic replacement of every mode letter by its tower polynomial
    NCPoly<C> substitute_modes(const NCPoly<C>& p) const {
        NCPoly<C> out(core_alphabet());
        for (const auto& kv : p.terms()) {
            NCPoly<C> prod = NCPoly<C>::unit(core_alphabet(), cx_.one());
            for (uint8_t letter : kv.first.l)
                prod = prod * gen(mode_family_of(letter), mode_k_of(letter));
            out = out + prod.scale(kv.second);
        }
        return out;
    }

private:
    NCPoly<C> compute(GenFamily fam, int k) const {
        const AlphabetPtr ab = core_alphabet();
        if (k == 0 && fam == GenFamily::Wminus) return NCPoly<C>::letter(ab, 0, cx_.one());
        if (k == 0 && fam == GenFamily::Wplus) return NCPoly<C>::letter(ab, 1, cx_.one());
        switch (fam) {
        case GenFamily::Wplus: // W_{k+1} = Omega(W_{-k})
            return omega_swap(gen(GenFamily::Wminus, k));
        case GenFamily::Gtilde:
            return omega_swap(gen(GenFamily::G, k));
        case GenFamily::Wminus: // (1/rho)[W_0, G_k]_q + W_k
            return q_commutator(cx_, gen(GenFamily::Wminus, 0), gen(GenFamily::G, k - 1))
                       .scale(cx_.one() / cx_.rho()) +
                   gen(GenFamily::Wplus, k - 1);
        case GenFamily::G: break;
        }
        // G_{k+1} via the closed recursion
        C dk = delta_value(k + 1);
        const int kb = kbar(k), h = half_floor(k);
        C half = cx_.of_rat(Rat(1, 2));
        NCPoly<C> p = NCPoly<C>::unit(ab, dk);
        p = p + commutator(gen(GenFamily::Wplus, k), gen(GenFamily::Wminus, 0))
                    .scale(half * cx_.qnum(2));
        for (int l = 0; l <= h - 1; ++l)
            p = p + gsum_expanded(2 * (l + 1) - kb).scale(-half * coeff_d(cx_, l, k));
        for (int l = 0; l <= h; ++l) {
            int tgt = 2 * l + 1 - kb;
            for (int i = 0; i <= tgt; ++i)
                p = p + wij_expanded(i, tgt - i).scale(-half * coeff_f(cx_, i, tgt - i, k));
        }
        for (int l = 0; l <= h - kb; ++l) {
            int tgt = 2 * l + kb;
            for (int i = 0; i <= tgt; ++i)
                p = p + fij_expanded(i, tgt - i).scale(-half * coeff_e(cx_, i, tgt - i, k));
        }
        return p;
    }

    NCPoly<C> wij_expanded(int i, int j) const {
        C s = cx_.q() - cx_.q_pow(-1);
        return (gen(GenFamily::Wminus, i) * gen(GenFamily::Wplus, j) +
                gen(GenFamily::Wplus, i) * gen(GenFamily::Wminus, j))
            .scale(s);
    }
    NCPoly<C> fij_expanded(int i, int j) const {
        C s = cx_.q() - cx_.q_pow(-1);
        NCPoly<C> w = (gen(GenFamily::Wminus, i) * gen(GenFamily::Wminus, j) +
                       gen(GenFamily::Wplus, i) * gen(GenFamily::Wplus, j))
                          .scale(s * (cx_.q_pow(2) + cx_.q_pow(-2)));
        NCPoly<C> g = (gen(GenFamily::G, i) * gen(GenFamily::Gtilde, j) +
                       gen(GenFamily::Gtilde, i) * gen(GenFamily::G, j))
                          .scale(s / cx_.rho());
        return w + g;
    }
    NCPoly<C> gsum_expanded(int idx) const {
        return gen(GenFamily::G, idx - 1) + gen(GenFamily::Gtilde, idx - 1);
    }

    Ctx cx_;
    std::vector<C> deltas_;
    mutable std::mutex mu_;
    mutable std::map<std::pair<int, int>, NCPoly<C>> memo_;
};

// Tower with the run-level delta scalars taken from the context.
inline Tower<SymbolicContext> make_symbolic_tower(const SymbolicContext& cx) {
    std::vector<RatFunc> ds;
    for (int k = 1; k <= cx.num_deltas; ++k) ds.push_back(cx.delta(k));
    return Tower<SymbolicContext>(cx, std::move(ds));
}

inline Tower<NumericContext> make_numeric_tower(const NumericContext& cx) {
    std::vector<Rat> ds = cx.pt.deltas;
    return Tower<NumericContext>(cx, std::move(ds));
}

} // namespace qoa

#endif
