#pragma once

#include "zdense/galois.hpp"
#include "zdense/linalg.hpp"
#include "zdense/polynomial.hpp"
#include "zdense/random.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace zdense {

/// Outcome of the Burnside span computation. Both answers are exact: a full
/// span is certified modulo a prime, a deficient one by exact elimination.
struct IrreducibilityResult {
    bool irreducible = false;
    /// Dimension of the unital algebra generated by the matrices.
    std::size_t algebra_dimension = 0;
    /// Rounds of V <- V + sum g_i V that were run.
    std::size_t rounds = 0;
    /// Whether the exact rational recomputation was needed.
    bool exact_recheck = false;
};

/// Burnside's criterion: the matrices act irreducibly on Q^dim (absolutely)
/// iff the unital algebra they generate has dimension dim^2.
///
/// Integer input loses no generality: rescaling a generator by a nonzero
/// rational does not change the algebra.
IrreducibilityResult is_irreducible_algebra(std::span<const IntegerMatrix> mats, std::size_t dim);

/// A fixed integer basis of the Lie algebra of SL(dim) or Sp(dim).
///
/// SL: E_ij (i < j), then E_ii - E_{i+1,i+1}, then E_ij (i > j); n^2 - 1 elements.
/// Sp: X = [[A, B], [C, -A^T]] with B, C symmetric; A-part E_ij, then B-part
/// and C-part indexed by i <= j; n(2n+1) elements for dim = 2n.
/// Coordinates of integer Lie-algebra elements in these bases are integers.
class AdjointBasis {
public:
    AdjointBasis(GroupKind kind, std::size_t dim);

    GroupKind kind() const noexcept { return kind_; }
    std::size_t dim() const noexcept { return dim_; }
    const std::vector<IntegerMatrix>& elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }

    /// Coordinates of a Lie-algebra element; throws InvalidArgument if x is
    /// not in the Lie algebra.
    std::vector<Integer> coordinates(const IntegerMatrix& x) const;

private:
    GroupKind kind_;
    std::size_t dim_;
    std::vector<IntegerMatrix> elements_;
};

/// Matrix of X -> g X g^-1 in the basis; column j holds the coordinates of
/// the image of basis element j.
IntegerMatrix adjoint_matrix(const AdjointBasis& basis, const IntegerMatrix& g, const IntegerMatrix& g_inverse);

/// Ad(g) for every generator, in the AdjointBasis of the set's kind and dim.
std::vector<IntegerMatrix> adjoint_matrices(const GeneratorSet& gs);

enum class Certainty { Certain, MonteCarlo };

std::string_view to_string(Certainty c);

/// One step of a density decision, in the order it ran.
struct StepRecord {
    std::string step;
    std::string outcome;
    std::optional<IntPolynomial> polynomial;
    std::optional<GaloisVerdict> galois;
    std::optional<IrreducibilityResult> irreducibility;
    /// Wall-clock time of the step.
    double seconds = 0.0;
};

/// dense = true is certain; dense = false is wrong with probability <= epsilon.
struct DensityVerdict {
    bool dense = false;
    Certainty certainty = Certainty::MonteCarlo;
    double epsilon = 0.0;
    std::size_t word_length = 0;
    std::vector<StepRecord> trail;
};

struct DensityOptions {
    /// Word length is max(16, ceil(word_constant * ln(1/eps))) unless
    /// word_length is set.
    double word_constant = 10.0;
    std::size_t word_length = 0;
    PrimeInterval primes;
};

std::size_t word_length_for(double eps, double word_constant);

/// Zariski density in SL(n) or Sp(2n) through Weyl-group Galois certificates
/// of two random words.
DensityVerdict zariski_dense(const GeneratorSet& gs, double eps, Rng& rng, const DensityOptions& options = {});

/// Zariski density through one non-cyclotomic random word plus irreducibility
/// of the adjoint representation.
DensityVerdict general_zariski_dense(const GeneratorSet& gs, double eps, Rng& rng, const DensityOptions& options = {});

} // namespace zdense
