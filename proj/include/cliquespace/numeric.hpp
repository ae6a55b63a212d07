#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>

namespace cliquespace {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// C(n, k) as an exact big integer. Returns 0 for k < 0 or k > n.
inline BigInt binom(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline std::uint64_t binom_u64(std::int64_t n, std::int64_t k) {
    BigInt b = binom(n, k);
    if (b > BigInt(UINT64_MAX)) throw std::overflow_error("binom does not fit in u64");
    return static_cast<std::uint64_t>(b);
}

// ceil(log2 n) for n >= 1; by convention ceil_log2(1) = 1 so a chunk is never empty.
inline int ceil_log2(std::uint64_t n) {
    if (n <= 2) return 1;
    int b = 0;
    std::uint64_t v = n - 1;
    while (v > 0) {
        v >>= 1;
        ++b;
    }
    return b;
}

// Smallest integer z with z >= (a/b)^(p/q), for a,b,p,q > 0.
// Used for parameter derivations that must avoid floating point.
inline BigInt ceil_rational_pow(const BigInt& a, const BigInt& b, std::int64_t p, std::int64_t q) {
    // z >= (a/b)^(p/q)  <=>  z^q * b^p >= a^p
    BigInt ap = pow(a, static_cast<unsigned>(p));
    BigInt bp = pow(b, static_cast<unsigned>(p));
    // binary search on z
    BigInt lo = 0, hi = 1;
    while (pow(hi, static_cast<unsigned>(q)) * bp < ap) hi *= 2;
    while (lo < hi) {
        BigInt mid = (lo + hi) / 2;
        if (pow(mid, static_cast<unsigned>(q)) * bp >= ap)
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

}  // namespace cliquespace
