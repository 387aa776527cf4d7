#pragma once

#include "hatg/numeric.hpp"

#include <stdexcept>
#include <string>

namespace hatg {

// Exact rational, normalized with positive denominator. Probabilities are
// carried as rationals end to end so integer certificates never touch
// floating point.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_ == 0) throw std::invalid_argument("rational with zero denominator");
        normalize();
    }
    Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

    // Accepts "num/den", an integer, or a decimal literal ("0.35" -> 7/20).
    static Rational parse(const std::string& text);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool positive() const { return num_ > 0; }
    bool less_than_one() const { return num_ < den_; }

    double to_double() const {
        return num_.convert_to<double>() / den_.convert_to<double>();
    }

    std::string str() const { return num_.str() + "/" + den_.str(); }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    BigInt num_;
    BigInt den_;
};

inline Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    auto digits_only = [](const std::string& s) {
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    std::string body = text;
    bool negative = false;
    if (body[0] == '+' || body[0] == '-') {
        negative = body[0] == '-';
        body = body.substr(1);
    }
    auto slash = body.find('/');
    if (slash != std::string::npos) {
        std::string a = body.substr(0, slash);
        std::string b = body.substr(slash + 1);
        if (!digits_only(a) || !digits_only(b))
            throw std::invalid_argument("bad rational literal: " + text);
        Rational r(BigInt(a), BigInt(b));
        return negative ? Rational(-r.num(), r.den()) : r;
    }
    auto dot = body.find('.');
    if (dot != std::string::npos) {
        std::string whole = body.substr(0, dot);
        std::string frac = body.substr(dot + 1);
        if (whole.empty()) whole = "0";
        if (!digits_only(whole) || (!frac.empty() && !digits_only(frac)))
            throw std::invalid_argument("bad decimal literal: " + text);
        BigInt num(whole);
        BigInt den = 1;
        for (char c : frac) {
            num = num * 10 + (c - '0');
            den *= 10;
        }
        Rational r(num, den);
        return negative ? Rational(-r.num(), r.den()) : r;
    }
    if (!digits_only(body)) throw std::invalid_argument("bad rational literal: " + text);
    Rational r(BigInt(body), BigInt(1));
    return negative ? Rational(-r.num(), r.den()) : r;
}

} // namespace hatg
