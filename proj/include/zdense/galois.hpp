#pragma once

#include "zdense/finite_field.hpp"
#include "zdense/polynomial.hpp"
#include "zdense/random.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace zdense {

/// Proper nonempty subset sums of a partition of n (0 and n excluded).
struct SumsetState {
    unsigned n = 0;
    std::vector<unsigned> survivors; // sorted, each in [1, n-1]

    friend bool operator==(const SumsetState&, const SumsetState&) = default;
};

/// Subset-sum dynamic program over the parts.
SumsetState sumset(std::span<const unsigned> parts);

/// In-place intersection; the survivor set can only shrink.
void intersect(SumsetState& running, const SumsetState& other);

/// One Frobenius sample: the prime and the factor degrees of f modulo it.
struct Witness {
    std::uint64_t prime = 0;
    DegreeMultiset degrees;

    friend bool operator==(const Witness&, const Witness&) = default;
};

enum class GaloisAnswer { ConfirmedSn, ConfirmedHyperoctahedral, Irreducible, NotGeneric };

std::string_view to_string(GaloisAnswer a);

/// Outcome of a certifier. Confirmed answers and Irreducible are certain and
/// carry the witnesses that prove them; NotGeneric is wrong with probability
/// at most `epsilon`.
struct GaloisVerdict {
    GaloisAnswer answer = GaloisAnswer::NotGeneric;
    double epsilon = 0.0;
    std::vector<Witness> witnesses;
    /// is_hyperoctahedral only: the trace polynomial and the witnesses of its
    /// S_n certificate (primes there do not divide its own discriminant).
    IntPolynomial trace_polynomial;
    std::vector<Witness> trace_witnesses;
    std::size_t trials_used = 0;
    /// Short explanation of which stage decided the answer.
    std::string reason;

    bool confirmed() const noexcept
    {
        return answer == GaloisAnswer::ConfirmedSn || answer == GaloisAnswer::ConfirmedHyperoctahedral;
    }
};

/// Interval the random primes are drawn from.
struct PrimeInterval {
    std::uint64_t lo = std::uint64_t { 1 } << 20;
    std::uint64_t hi = std::uint64_t { 1 } << 21;
};

// Trial budgets. A loop whose hit has density at least rho fails to hit in
// all of its trials with probability at most eps.

/// 4 * ceil(ln(1/eps) / ln 20): each block of four Frobenius elements of S_n is
/// invariably transitive with probability >= 0.95.
std::size_t transitivity_trials(double eps);
/// ceil(2 sqrt(max(n,3) - 1) / 0.8 * ln(1/eps)): transposition-type density ~ 0.8 / (2 sqrt(n-1)).
std::size_t transposition_trials(unsigned n, double eps);
/// ceil(ln n / ln 2 * ln(1/eps)): long prime cycle density ~ ln 2 / ln n.
std::size_t long_cycle_trials(unsigned n, double eps);

/// Exactly one part equal to 2, every other part odd.
bool has_transposition_pattern(const DegreeMultiset& d);

/// Some part l is prime with n/2 < l < n - upper_slack.
bool has_long_prime_cycle(const DegreeMultiset& d, unsigned n, int upper_slack);

/// Irreducible (certain) or NotGeneric. Throws InvalidArgument if disc(f) = 0
/// or f is not monic of positive degree.
GaloisVerdict is_transitive(const IntPolynomial& f, double eps, Rng& rng, const PrimeInterval& primes = {});

/// ConfirmedSn (certain) or NotGeneric.
GaloisVerdict is_sn(const IntPolynomial& f, double eps, Rng& rng, const PrimeInterval& primes = {});

/// ConfirmedHyperoctahedral (certain) or NotGeneric, for monic reciprocal f
/// of even degree.
GaloisVerdict is_hyperoctahedral(const IntPolynomial& f, double eps, Rng& rng, const PrimeInterval& primes = {});

} // namespace zdense
