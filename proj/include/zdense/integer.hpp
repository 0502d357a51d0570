#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>

namespace zdense {

/// Arbitrary-precision signed integer.
using Integer = mpz_class;

inline Integer abs_value(const Integer& a)
{
    return abs(a);
}

/// Floor of the square root of a nonnegative integer.
inline Integer isqrt(const Integer& a)
{
    Integer r;
    mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

inline Integer ceil_sqrt(const Integer& a)
{
    Integer r = isqrt(a);
    if (r * r < a)
        ++r;
    return r;
}

inline bool is_perfect_square(const Integer& a)
{
    return a >= 0 && mpz_perfect_square_p(a.get_mpz_t()) != 0;
}

inline Integer power(const Integer& base, unsigned long exponent)
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

inline std::size_t bit_length(const Integer& a)
{
    return a == 0 ? 0 : mpz_sizeinbase(a.get_mpz_t(), 2);
}

/// Nonnegative residue of `a` modulo `m` (m > 0).
inline unsigned long residue(const Integer& a, unsigned long m)
{
    return mpz_fdiv_ui(a.get_mpz_t(), m);
}

inline std::string to_string(const Integer& a)
{
    return a.get_str();
}

/// Parses a base-10 integer with optional sign; throws InvalidArgument on junk.
Integer parse_integer(const std::string& text);

} // namespace zdense
