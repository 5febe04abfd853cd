#pragma once

#include <cstdint>

#include "tcf/errors.hpp"

namespace tcf {

using uint128 = unsigned __int128;

// Exact binomial coefficient in 128-bit integer arithmetic. Certificates
// compare exact counts, so this never rounds: it throws on overflow and
// rejects n > 10000 outright.
inline uint128 binomial(int64_t n, int64_t r) {
    if (n < 0 || r < 0) throw ParamError("binomial: negative argument");
    if (n > 10000) throw ParamError("binomial: n > 10000 not supported");
    if (r > n) return 0;
    if (r > n - r) r = n - r;
    uint128 c = 1;
    for (int64_t i = 0; i < r; ++i) {
        const uint128 f = static_cast<uint128>(n - i);
        if (c > ~uint128{0} / f) throw ParamError("binomial: 128-bit overflow");
        c = c * f / static_cast<uint128>(i + 1);  // exact at every step
    }
    return c;
}

inline uint64_t binomial_u64(int64_t n, int64_t r) {
    const uint128 c = binomial(n, r);
    if (c > static_cast<uint128>(UINT64_MAX))
        throw ParamError("binomial: value exceeds 64 bits");
    return static_cast<uint64_t>(c);
}

inline uint64_t gcd_u64(uint64_t a, uint64_t b) {
    while (b) {
        const uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace tcf
