#pragma once

#include "zdense/integer.hpp"
#include "zdense/polynomial.hpp"
#include "zdense/random.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace zdense {

/// Degrees of the irreducible factors of a squarefree polynomial mod a prime,
/// i.e. the cycle type of the corresponding Frobenius element. Kept sorted.
class DegreeMultiset {
public:
    DegreeMultiset() = default;
    explicit DegreeMultiset(std::vector<unsigned> degrees);

    const std::vector<unsigned>& degrees() const noexcept { return degrees_; }
    unsigned total() const noexcept;
    std::size_t count(unsigned d) const;
    bool empty() const noexcept { return degrees_.empty(); }

    /// "{1,1,2}"
    std::string to_string() const;

    friend bool operator==(const DegreeMultiset&, const DegreeMultiset&) = default;

private:
    std::vector<unsigned> degrees_;
};

/// Exact for r < 2^64 (strong-pseudoprime test on the first twelve primes);
/// above that, additional pseudo-random bases push the error below 4^-40.
/// Throws InvalidArgument for r < 2.
bool is_prime(const Integer& r);
bool is_prime(std::uint64_t r);

/// Uniformly sampled prime q in [lo, hi) with q not dividing `disc`.
/// Gives up with SamplingExhausted after 64 * bit_length(hi - lo) draws.
std::uint64_t random_prime_avoiding(const Integer& disc, std::uint64_t lo, std::uint64_t hi, Rng& rng);

/// Factor degrees of f mod q by distinct-degree factorization.
/// Requires q prime, q not dividing lc(f), and f squarefree mod q (checked;
/// InvalidArgument otherwise). q must be below 2^63.
DegreeMultiset factor_degrees_mod(const IntPolynomial& f, std::uint64_t q);

} // namespace zdense
