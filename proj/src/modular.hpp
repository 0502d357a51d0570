#pragma once

#include <cstdint>

namespace zdense::detail {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mul_mod(u64 a, u64 b, u64 m)
{
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

inline u64 add_mod(u64 a, u64 b, u64 m)
{
    u64 s = a + b;
    return (s >= m || s < a) ? s - m : s;
}

inline u64 sub_mod(u64 a, u64 b, u64 m)
{
    return a >= b ? a - b : a + (m - b);
}

inline u64 pow_mod(u64 base, u64 exp, u64 m)
{
    u64 result = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1)
            result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

/// Inverse of a nonzero residue modulo a prime.
inline u64 inv_mod(u64 a, u64 p)
{
    return pow_mod(a, p - 2, p);
}

} // namespace zdense::detail
