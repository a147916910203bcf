#pragma once

#include <compare>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sixj {

// Exact fraction over 64-bit integers, always in lowest terms with a positive
// denominator. Arithmetic that would overflow throws std::overflow_error
// instead of wrapping; every value produced by this library stays far below
// that limit.
class Rational {
public:
    constexpr Rational() = default;
    Rational(long long n) : num_(n) {}
    Rational(long long n, long long d) : num_(n), den_(d) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        reduce();
    }

    long long num() const { return num_; }
    long long den() const { return den_; }
    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    // "p/q", with "/q" omitted when q = 1.
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    // Inverse of str(); accepts "p" and "p/q".
    static Rational parse(std::string_view text);

    friend Rational operator-(const Rational& a) {
        Rational r;
        r.num_ = checked_neg(a.num_);
        r.den_ = a.den_;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        long long g = std::gcd(a.den_, b.den_);
        long long da = a.den_ / g;
        long long db = b.den_ / g;
        long long n = checked_add(checked_mul(a.num_, db), checked_mul(b.num_, da));
        long long d = checked_mul(checked_mul(da, g), db);
        return Rational(n, d);
    }

    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

    friend Rational operator*(const Rational& a, const Rational& b) {
        long long g1 = std::gcd(a.num_, b.den_);
        long long g2 = std::gcd(b.num_, a.den_);
        Rational r;
        r.num_ = checked_mul(a.num_ / g1, b.num_ / g2);
        r.den_ = checked_mul(a.den_ / g2, b.den_ / g1);
        return r;
    }

    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("rational division by zero");
        return a * Rational(b.den_, b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational&, const Rational&) = default;

    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return checked_mul(a.num_, b.den_) <=> checked_mul(b.num_, a.den_);
    }

private:
    long long num_ = 0;
    long long den_ = 1;

    void reduce() {
        if (den_ < 0) {
            num_ = checked_neg(num_);
            den_ = checked_neg(den_);
        }
        long long g = std::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    static long long checked_add(long long a, long long b) {
        long long r;
        if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("rational overflow");
        return r;
    }
    static long long checked_mul(long long a, long long b) {
        long long r;
        if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("rational overflow");
        return r;
    }
    static long long checked_neg(long long a) {
        long long r;
        if (__builtin_sub_overflow(0LL, a, &r)) throw std::overflow_error("rational overflow");
        return r;
    }
};

inline Rational Rational::parse(std::string_view text) {
    auto parse_int = [](std::string_view s) -> long long {
        if (s.empty()) throw std::invalid_argument("empty integer in rational");
        size_t i = (s[0] == '-') ? 1 : 0;
        if (i == s.size()) throw std::invalid_argument("bad integer in rational");
        long long v = 0;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad integer in rational");
            long long digit = s[i] - '0';
            if (__builtin_mul_overflow(v, 10LL, &v) || __builtin_add_overflow(v, digit, &v))
                throw std::overflow_error("rational overflow");
        }
        return s[0] == '-' ? -v : v;
    };
    size_t slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

} // namespace sixj
