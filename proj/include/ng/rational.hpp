#pragma once

#include <cstdint>
#include <complex>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ng {

using cx = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// Exact rational, used for phases measured in turns (i.e. exponents of
// e^{2*pi*i}).  Kept reduced with positive denominator.
struct Rat {
    long long num = 0;
    long long den = 1;

    Rat() = default;
    Rat(long long n) : num(n), den(1) {}
    Rat(long long n, long long d) : num(n), den(d) {
        if (d == 0) throw std::invalid_argument("Rat: zero denominator");
        reduce();
    }

    void reduce() {
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    Rat operator+(const Rat& o) const { return Rat(num * o.den + o.num * den, den * o.den); }
    Rat operator-(const Rat& o) const { return Rat(num * o.den - o.num * den, den * o.den); }
    Rat operator*(const Rat& o) const { return Rat(num * o.num, den * o.den); }
    Rat operator*(long long k) const { return Rat(num * k, den); }
    Rat operator-() const { return Rat(-num, den); }
    bool operator==(const Rat& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Rat& o) const { return !(*this == o); }
    bool operator<(const Rat& o) const { return num * o.den < o.num * den; }

    // Canonical representative in [0, 1).
    Rat mod1() const {
        long long n = num % den;
        if (n < 0) n += den;
        return Rat(n, den);
    }

    bool is_zero_mod1() const { return num % den == 0; }

    double to_double() const { return double(num) / double(den); }

    std::string str() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }
};

// e^{2*pi*i*t} for a phase t in turns.
inline cx unit_phase(const Rat& t) {
    double x = 2.0 * kPi * t.mod1().to_double();
    return cx(std::cos(x), std::sin(x));
}

inline cx unit_phase(double turns) {
    double x = 2.0 * kPi * turns;
    return cx(std::cos(x), std::sin(x));
}

} // namespace ng
