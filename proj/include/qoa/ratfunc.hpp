#ifndef QOA_RATFUNC_HPP
#define QOA_RATFUNC_HPP

#include <string>
#include <utility>
#include <vector>

#include "qoa/multipoly.hpp"

namespace qoa {

inline std::string var_name(int idx) {
    if (idx == 0) return "q";
    if (idx == 1) return "r";
    return "d" + std::to_string(idx - 1);
}

// Exact rational function in q (Laurent), rho and delta_1..delta_K.
// Canonical form: numerator and denominator coprime, denominator an ordinary
// polynomial not divisible by q with leading coefficient 1; any q-shift lives
// in the (possibly Laurent) numerator.  Equality is representation equality.
class RatFunc {
public:
    RatFunc() : num_(), den_(MultiPoly::constant(Rat(1))) {}
    RatFunc(long n) : RatFunc(MultiPoly::constant(Rat(n))) {}
    explicit RatFunc(const Rat& c) : RatFunc(MultiPoly::constant(c)) {}
    explicit RatFunc(MultiPoly num) : num_(std::move(num)), den_(MultiPoly::constant(Rat(1))) {
        normalize();
    }
    RatFunc(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) fail(errc::arithmetic, "rational function with zero denominator");
        normalize();
    }

    static RatFunc variable(int idx, int exp = 1) {
        if (exp < 0 && idx != 0) fail(errc::usage, "negative exponent only allowed for q");
        return RatFunc(MultiPoly::variable(idx, exp));
    }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }

    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) fail(errc::arithmetic, "division by zero scalar");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    RatFunc inv() const {
        if (is_zero()) fail(errc::arithmetic, "inverse of zero scalar");
        return RatFunc(den_, num_);
    }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    // Exact evaluation; values = (q, rho, d1, d2, ...).
    Rat eval(const std::vector<Rat>& values) const {
        Rat d = den_.eval(values);
        if (d.is_zero())
            fail(errc::evaluation, "denominator vanishes at the specialization point: " +
                                       poly_str(den_));
        return num_.eval(values) / d;
    }

    std::string str() const {
        if (den_.is_one()) return poly_str(num_);
        return poly_str(num_) + "/" + poly_str(den_);
    }

    static std::string poly_str(const MultiPoly& p) {
        if (p.is_zero()) return "0";
        std::string out;
        bool first = true;
        for (const auto& tm : p.terms()) {
            Rat c = tm.second;
            std::string sign;
            if (c.sgn() < 0) {
                sign = "-";
                c = -c;
            } else if (!first) {
                sign = "+";
            }
            std::string body;
            for (int i = 0; i < kMaxVars; ++i) {
                int e = tm.first.e[i];
                if (e == 0) continue;
                if (!body.empty()) body += "*";
                body += var_name(i);
                if (e != 1) body += "^" + std::to_string(e);
            }
            std::string cs;
            if (body.empty())
                cs = c.str();
            else if (!c.is_one())
                cs = c.str() + "*";
            out += sign + cs + body;
            first = false;
        }
        return out;
    }

    // Parse of the canonical grammar "P" or "P/Q".  Everything after the
    // first slash that terminates a complete polynomial is the denominator;
    // a slash directly between two integers inside a term binds as a
    // rational coefficient.
    static RatFunc parse(const std::string& s) {
        std::size_t pos = 0;
        MultiPoly p = parse_poly(s, pos);
        if (pos < s.size() && s[pos] == '/') {
            ++pos;
            MultiPoly q = parse_poly(s, pos);
            if (pos != s.size()) fail(errc::parse, "trailing input in scalar: '" + s + "'");
            return RatFunc(std::move(p), std::move(q));
        }
        if (pos != s.size()) fail(errc::parse, "trailing input in scalar: '" + s + "'");
        return RatFunc(std::move(p));
    }

private:
    void normalize() {
        if (num_.is_zero()) {
            den_ = MultiPoly::constant(Rat(1));
            return;
        }
        int sd = den_.min_exp(0);
        if (sd != 0) den_ = den_.shift_var(0, -sd);
        int sn = num_.min_exp(0);
        if (sn != 0) num_ = num_.shift_var(0, -sn);
        MultiPoly g = poly_gcd(num_, den_);
        if (!g.is_one()) {
            num_ = poly_divexact(num_, g);
            den_ = poly_divexact(den_, g);
        }
        Rat lc = den_.lead().second;
        if (!lc.is_one()) {
            Rat s = lc.inv();
            num_ = num_.scale(s);
            den_ = den_.scale(s);
        }
        int net = sn - sd;
        if (net != 0) num_ = num_.shift_var(0, net);
    }

    static MultiPoly parse_poly(const std::string& s, std::size_t& pos) {
        std::vector<MultiPoly::Term> terms;
        bool first = true;
        while (pos < s.size()) {
            int sign = 1;
            if (s[pos] == '+' || s[pos] == '-') {
                if (s[pos] == '-') sign = -1;
                ++pos;
            } else if (!first) {
                break;
            }
            terms.push_back(parse_term(s, pos, sign));
            first = false;
        }
        if (terms.empty()) fail(errc::parse, "empty polynomial in scalar string");
        return MultiPoly::from_terms(std::move(terms));
    }

    static MultiPoly::Term parse_term(const std::string& s, std::size_t& pos, int sign) {
        Rat coeff(sign);
        Monomial mono;
        bool saw_factor = false;
        bool expect_factor = true;
        while (pos < s.size() && expect_factor) {
            if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
                long long n = parse_int(s, pos);
                Rat c(static_cast<long>(n));
                // fraction only if '/' is immediately followed by a digit
                if (pos + 1 < s.size() && s[pos] == '/' &&
                    std::isdigit(static_cast<unsigned char>(s[pos + 1]))) {
                    ++pos;
                    long long d = parse_int(s, pos);
                    if (d == 0) fail(errc::parse, "zero coefficient denominator");
                    c = c / Rat(static_cast<long>(d));
                }
                coeff *= c;
                saw_factor = true;
            } else if (std::isalpha(static_cast<unsigned char>(s[pos]))) {
                int idx = parse_var(s, pos);
                int e = 1;
                if (pos < s.size() && s[pos] == '^') {
                    ++pos;
                    int esign = 1;
                    if (pos < s.size() && s[pos] == '-') { esign = -1; ++pos; }
                    e = esign * static_cast<int>(parse_int(s, pos));
                }
                if (e < 0 && idx != 0) fail(errc::parse, "negative exponent only allowed for q");
                mono.e[idx] = static_cast<int16_t>(mono.e[idx] + e);
                saw_factor = true;
            } else {
                break;
            }
            expect_factor = false;
            if (pos < s.size() && s[pos] == '*') {
                ++pos;
                expect_factor = true;
            }
        }
        if (!saw_factor) fail(errc::parse, "empty term in scalar string");
        return {mono, coeff};
    }

    static long long parse_int(const std::string& s, std::size_t& pos) {
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail(errc::parse, "expected integer in scalar string");
        return std::stoll(s.substr(start, pos - start));
    }

    static int parse_var(const std::string& s, std::size_t& pos) {
        if (s[pos] == 'q') { ++pos; return 0; }
        if (s[pos] == 'r') { ++pos; return 1; }
        if (s[pos] == 'd') {
            ++pos;
            long long k = parse_int(s, pos);
            if (k < 1 || k + 1 >= kMaxVars) fail(errc::parse, "delta index out of range");
            return static_cast<int>(k + 1);
        }
        fail(errc::parse, std::string("unknown variable '") + s[pos] + "'");
    }

    MultiPoly num_, den_;
};

} // namespace qoa

#endif
