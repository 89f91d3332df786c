#ifndef QOA_SCALAR_CONTEXT_HPP
#define QOA_SCALAR_CONTEXT_HPP

#include <string>
#include <vector>

#include "qoa/ratfunc.hpp"

namespace qoa {

struct SpecializationPoint {
    Rat q;
    Rat rho;
    std::vector<Rat> deltas;
    int root_of_unity_screen = 64;

    void validate() const {
        if (q.is_zero() || q == Rat(1) || q == Rat(-1))
            fail(errc::validation, "q must avoid {0, 1, -1}");
        if (rho.is_zero()) fail(errc::validation, "rho must be nonzero");
        // For rationals other than +-1 this can never fire, but the screen is
        // part of the contract and stays explicit.
        Rat p(1);
        for (int n = 1; n <= root_of_unity_screen; ++n) {
            p *= q;
            if (p == Rat(1))
                fail(errc::validation, "q is a root of unity (order " + std::to_string(n) + ")");
        }
    }

    std::vector<Rat> coords() const {
        std::vector<Rat> v;
        v.reserve(2 + deltas.size());
        v.push_back(q);
        v.push_back(rho);
        for (const auto& d : deltas) v.push_back(d);
        return v;
    }
};

inline SpecializationPoint default_point(int num_deltas = 4) {
    SpecializationPoint p;
    p.q = Rat(5, 3);
    p.rho = Rat(2);
    for (int k = 1; k <= num_deltas; ++k) p.deltas.push_back(Rat(1, k));
    return p;
}

// Three fixed generic points used for specialized cross-checks.
inline std::vector<SpecializationPoint> standard_points(int num_deltas = 4) {
    std::vector<SpecializationPoint> pts;
    pts.push_back(default_point(num_deltas));
    SpecializationPoint b;
    b.q = Rat(7, 2);
    b.rho = Rat(1, 3);
    for (int k = 1; k <= num_deltas; ++k) b.deltas.push_back(Rat(k, 3));
    pts.push_back(b);
    SpecializationPoint c;
    c.q = Rat(-5, 2);
    c.rho = Rat(-3);
    for (int k = 1; k <= num_deltas; ++k) c.deltas.push_back(Rat(2 * k + 1));
    pts.push_back(c);
    return pts;
}

// Coefficient context for exact symbolic computation: scalars are rational
// functions in q, rho, delta_1..delta_K.
struct SymbolicContext {
    using Scalar = RatFunc;

    int num_deltas = 4;

    Scalar zero() const { return RatFunc(); }
    Scalar one() const { return RatFunc(1); }
    Scalar of_int(long n) const { return RatFunc(n); }
    Scalar of_rat(const Rat& c) const { return RatFunc(c); }
    Scalar q() const { return RatFunc::variable(0); }
    Scalar q_pow(int e) const { return RatFunc::variable(0, e); }
    Scalar rho() const { return RatFunc::variable(1); }
    Scalar delta(int k) const { // 1-based
        if (k < 1) fail(errc::domain, "delta index must be >= 1");
        if (k > num_deltas)
            fail(errc::config, "context has " + std::to_string(num_deltas) +
                                   " deltas, need at least " + std::to_string(k));
        return RatFunc::variable(1 + k);
    }
    // [n]_q as a Laurent polynomial (denominator 1)
    Scalar qnum(int n) const {
        if (n < 1) fail(errc::domain, "[n]_q requires n >= 1");
        std::vector<MultiPoly::Term> terms;
        for (int i = 0; i < n; ++i) {
            Monomial m;
            m.e[0] = static_cast<int16_t>(n - 1 - 2 * i);
            terms.push_back({m, Rat(1)});
        }
        return RatFunc(MultiPoly::from_terms(std::move(terms)));
    }
    static std::string to_string(const Scalar& x) { return x.str(); }
    static Scalar parse(const std::string& s) { return RatFunc::parse(s); }
};

// Coefficient context for specialized computation: scalars are plain exact
// rationals at a validated specialization point.
struct NumericContext {
    using Scalar = Rat;

    SpecializationPoint pt;

    explicit NumericContext(SpecializationPoint p) : pt(std::move(p)) { pt.validate(); }

    Scalar zero() const { return Rat(0); }
    Scalar one() const { return Rat(1); }
    Scalar of_int(long n) const { return Rat(n); }
    Scalar of_rat(const Rat& c) const { return c; }
    Scalar q() const { return pt.q; }
    Scalar q_pow(int e) const { return pt.q.pow(e); }
    Scalar rho() const { return pt.rho; }
    Scalar delta(int k) const {
        if (k < 1) fail(errc::domain, "delta index must be >= 1");
        if (k > static_cast<int>(pt.deltas.size()))
            fail(errc::config, "specialization point has " + std::to_string(pt.deltas.size()) +
                                   " deltas, need at least " + std::to_string(k));
        return pt.deltas[static_cast<std::size_t>(k - 1)];
    }
    Scalar qnum(int n) const {
        if (n < 1) fail(errc::domain, "[n]_q requires n >= 1");
        return (pt.q.pow(n) - pt.q.pow(-n)) / (pt.q - pt.q.pow(-1));
    }
    static std::string to_string(const Scalar& x) { return x.str(); }
    static Scalar parse(const std::string& s) { return Rat::parse(s); }
};

inline bool is_zero(const RatFunc& x) { return x.is_zero(); }
inline bool is_zero(const Rat& x) { return x.is_zero(); }

// Exact evaluation of a symbolic scalar; ring homomorphism onto Q.
inline Rat specialize(const RatFunc& x, const SpecializationPoint& p) {
    p.validate();
    return x.eval(p.coords());
}
inline Rat specialize(const Rat& x, const SpecializationPoint&) { return x; }

} // namespace qoa

#endif
