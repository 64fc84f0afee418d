#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace asnp {

using i64 = std::int64_t;
__extension__ typedef __int128 i128;

/// Moduli p^N are kept below 2^40 so that a product fits in 80 bits and
/// long dot products can be accumulated in 128 bits without overflow.
inline constexpr i64 kMaxModulus = i64{1} << 40;

inline i64 mod_norm(i64 x, i64 m) {
    x %= m;
    return x < 0 ? x + m : x;
}

inline i64 mod_norm128(i128 x, i64 m) {
    i128 r = x % m;
    return static_cast<i64>(r < 0 ? r + m : r);
}

inline i64 mul_mod(i64 x, i64 y, i64 m) {
    return mod_norm128(static_cast<i128>(x) * y, m);
}

inline i64 pow_mod(i64 base, std::uint64_t e, i64 m) {
    i64 r = 1 % m;
    base = mod_norm(base, m);
    while (e) {
        if (e & 1) r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    return r;
}

/// Inverse of x modulo m via the extended Euclidean algorithm.
inline i64 inv_mod(i64 x, i64 m) {
    i64 a = mod_norm(x, m), b = m;
    i64 s0 = 1, s1 = 0;
    while (b != 0) {
        i64 q = a / b;
        i64 t = a - q * b;
        a = b;
        b = t;
        t = s0 - q * s1;
        s0 = s1;
        s1 = t;
    }
    if (a != 1) throw std::domain_error("inv_mod: element is not invertible");
    return mod_norm(s0, m);
}

/// Checked integer power; throws if the result would exceed `limit`.
inline i64 ipow_checked(i64 base, int e, i64 limit) {
    i64 r = 1;
    for (int i = 0; i < e; ++i) {
        if (r > limit / base) throw std::overflow_error("ipow_checked: result too large");
        r *= base;
    }
    return r;
}

inline bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// p-adic valuation of a nonzero integer.
inline int vp(i64 x, i64 p) {
    if (x == 0) throw std::domain_error("vp: valuation of zero");
    int v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

/// Distinct prime factors by trial division.
inline std::vector<i64> prime_factors(i64 n) {
    std::vector<i64> out;
    for (i64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace asnp
