#ifndef LRCLAB_RATIONAL_HPP
#define LRCLAB_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <string>

#include "lrclab/errors.hpp"

namespace lrclab {

/// Small exact rational; numerators here never leave the int64 range.
struct Rat {
    long long num = 0;
    long long den = 1;

    Rat() = default;
    Rat(long long n) : num(n), den(1) {}  // NOLINT: implicit by design
    Rat(long long n, long long d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw DomainError("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    friend Rat operator+(Rat a, Rat b) { return {a.num * b.den + b.num * a.den, a.den * b.den}; }
    friend Rat operator-(Rat a, Rat b) { return {a.num * b.den - b.num * a.den, a.den * b.den}; }
    friend Rat operator*(Rat a, Rat b) { return {a.num * b.num, a.den * b.den}; }
    friend Rat operator/(Rat a, Rat b) {
        if (b.num == 0) throw DivisionByZeroError("rational division by zero");
        return {a.num * b.den, a.den * b.num};
    }
    friend bool operator==(Rat a, Rat b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(Rat a, Rat b) { return !(a == b); }
    friend bool operator<(Rat a, Rat b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator>(Rat a, Rat b) { return b < a; }
    friend bool operator<=(Rat a, Rat b) { return !(b < a); }
    friend bool operator>=(Rat a, Rat b) { return !(a < b); }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

}  // namespace lrclab

#endif
