#pragma once

#include <stdexcept>

namespace ng {

inline bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Returns p if n = p^k for a prime p (k >= 1), else 0.
inline long prime_power_base(long n) {
    if (n < 2) return 0;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        long m = n;
        while (m % p == 0) m /= p;
        return m == 1 ? p : 0;
    }
    return n; // prime
}

inline bool is_prime_power(long n) { return prime_power_base(n) != 0; }

inline long euler_phi(long n) {
    long r = n;
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            r -= r / p;
        }
    if (n > 1) r -= r / n;
    return r;
}

// Standard Jacobi symbol (a|b) for odd b >= 1.
inline int jacobi_symbol(long a, long b) {
    if (b <= 0 || b % 2 == 0)
        throw std::invalid_argument("jacobi_symbol: bottom argument must be odd and positive");
    a %= b;
    if (a < 0) a += b;
    int s = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            long r = b % 8;
            if (r == 3 || r == 5) s = -s;
        }
        std::swap(a, b);
        if (a % 4 == 3 && b % 4 == 3) s = -s;
        a %= b;
    }
    return b == 1 ? s : 0;
}

} // namespace ng
