#pragma once

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

#include "topolab/rational.hpp"

namespace topolab {

// One term q*sqrt(n). Normalized means n is square-free (n >= 1).
struct Radical {
    Rational coef;
    long long radicand = 1;
};

// sqrt(k^2 * r) -> k * sqrt(r) with r square-free, by trial division.
// Radicands in this library are O(degree^2), so this is cheap.
inline Radical normalize_radical(Rational coef, long long radicand) {
    if (radicand < 1) throw std::invalid_argument("normalize_radical: radicand must be >= 1");
    long long square_part = 1;
    for (long long d = 2; d * d <= radicand; ++d) {
        while (radicand % (d * d) == 0) {
            radicand /= d * d;
            square_part *= d;
        }
    }
    return Radical{coef * Rational(square_part), radicand};
}

inline bool is_square_free(long long n) {
    if (n < 1) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % (d * d) == 0) return false;
    return true;
}

// Exact value sum_i q_i * sqrt(n_i) with the n_i distinct square-free
// positive integers. Equality of term maps is sound: square roots of
// distinct square-free integers are linearly independent over Q.
class RadicalSum {
public:
    RadicalSum() = default;

    RadicalSum(const Radical& r) { add_normalized(normalize_radical(r.coef, r.radicand)); }

    static RadicalSum term(Rational coef, long long radicand) {
        RadicalSum s;
        s.add_normalized(normalize_radical(coef, radicand));
        return s;
    }

    const std::map<long long, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const Radical& r) { add_normalized(normalize_radical(r.coef, r.radicand)); }

    friend RadicalSum operator+(const RadicalSum& a, const RadicalSum& b) {
        RadicalSum out = a;
        for (const auto& [rad, coef] : b.terms_) out.add_normalized(Radical{coef, rad});
        return out;
    }
    friend RadicalSum operator-(const RadicalSum& a, const RadicalSum& b) {
        RadicalSum out = a;
        for (const auto& [rad, coef] : b.terms_) out.add_normalized(Radical{-coef, rad});
        return out;
    }
    RadicalSum& operator+=(const RadicalSum& o) { return *this = *this + o; }

    RadicalSum scaled(const Rational& q) const {
        RadicalSum out;
        if (q.is_zero()) return out;
        for (const auto& [rad, coef] : terms_) out.terms_.emplace(rad, coef * q);
        return out;
    }

    friend bool operator==(const RadicalSum& a, const RadicalSum& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const RadicalSum& a, const RadicalSum& b) { return !(a == b); }

    double to_double() const {
        double v = 0.0;
        for (const auto& [rad, coef] : terms_)
            v += coef.to_double() * std::sqrt(static_cast<double>(rad));
        return v;
    }

    // "34*sqrt(2) + 20*sqrt(13)", radicands ascending; the sqrt(1) term
    // prints as a plain rational; empty sum prints "0".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [rad, coef] : terms_) {
            Rational c = coef;
            if (!first) {
                out += c.is_negative() ? " - " : " + ";
                if (c.is_negative()) c = -c;
            }
            out += c.to_string();
            if (rad != 1) out += "*sqrt(" + std::to_string(rad) + ")";
            first = false;
        }
        return out;
    }

private:
    void add_normalized(const Radical& r) {
        if (r.coef.is_zero()) return;
        auto it = terms_.find(r.radicand);
        if (it == terms_.end()) {
            terms_.emplace(r.radicand, r.coef);
        } else {
            it->second += r.coef;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    std::map<long long, Rational> terms_;
};

inline RadicalSum radsum_add(const RadicalSum& a, const RadicalSum& b) { return a + b; }
inline RadicalSum radsum_scale(const RadicalSum& a, const Rational& q) { return a.scaled(q); }
inline bool radsum_eq(const RadicalSum& a, const RadicalSum& b) { return a == b; }
inline double radsum_to_float(const RadicalSum& a) { return a.to_double(); }

} // namespace topolab
