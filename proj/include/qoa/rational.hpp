#ifndef QOA_RATIONAL_HPP
#define QOA_RATIONAL_HPP

#include <gmpxx.h>

#include <cctype>
#include <string>

#include "qoa/errors.hpp"

namespace qoa {

// Exact rational number. Thin wrapper over mpq_class that keeps values
// canonical and turns division by zero into a reportable error instead of
// a GMP abort.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(long num, long den) {
        if (den == 0) fail(errc::arithmetic, "rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rat(const mpz_class& z) : v_(z) {}
    explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    static Rat parse(const std::string& s) {
        // strict "p" or "p/q" with optional leading '-'
        std::size_t i = 0;
        auto digits = [&](std::size_t& j) {
            std::size_t start = j;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            return j > start;
        };
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        if (!digits(i)) fail(errc::parse, "bad rational: '" + s + "'");
        if (i < s.size()) {
            if (s[i] != '/') fail(errc::parse, "bad rational: '" + s + "'");
            ++i;
            if (!digits(i) || i != s.size()) fail(errc::parse, "bad rational: '" + s + "'");
        }
        mpq_class q(s);
        if (q.get_den() == 0) fail(errc::arithmetic, "rational with zero denominator");
        q.canonicalize();
        return Rat(q);
    }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    int sgn() const { return ::sgn(v_); }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) fail(errc::arithmetic, "rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }
    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }

    Rat inv() const {
        if (is_zero()) fail(errc::arithmetic, "inverse of zero");
        return Rat(mpq_class(1 / v_));
    }

    Rat pow(long e) const {
        if (e == 0) return Rat(1);
        Rat base = *this;
        if (e < 0) { base = inv(); e = -e; }
        Rat acc(1);
        while (e > 0) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }
    std::string str() const { return v_.get_str(); }
    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

inline mpz_class gcd_z(const mpz_class& a, const mpz_class& b) {
    mpz_class r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline mpz_class lcm_z(const mpz_class& a, const mpz_class& b) {
    mpz_class r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline mpz_class binom_z(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace qoa

#endif
