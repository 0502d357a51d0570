#pragma once

#include "zdense/integer.hpp"
#include "zdense/polynomial.hpp"
#include "zdense/random.hpp"

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string_view>
#include <vector>

namespace zdense {

/// Square matrix over Z, row-major.
class IntegerMatrix {
public:
    explicit IntegerMatrix(std::size_t dim);
    IntegerMatrix(std::size_t dim, std::vector<Integer> entries);
    IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

    /// Throws InvalidArgument unless the rows form a nonempty square array.
    static IntegerMatrix from_rows(const std::vector<std::vector<Integer>>& rows);
    static IntegerMatrix identity(std::size_t dim);
    /// Identity plus the elementary matrix E_{row,col} (0-based).
    static IntegerMatrix elementary(std::size_t dim, std::size_t row, std::size_t col, long value = 1);

    std::size_t dim() const noexcept { return dim_; }
    Integer& operator()(std::size_t r, std::size_t c) { return entries_[r * dim_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }
    const std::vector<Integer>& entries() const noexcept { return entries_; }

    IntegerMatrix transposed() const;
    Integer trace() const;
    /// Largest absolute value among the entries.
    Integer max_abs_entry() const;
    /// Ceiling of the Frobenius norm.
    Integer frobenius_norm_ceil() const;

    IntegerMatrix& operator+=(const IntegerMatrix& o);
    IntegerMatrix& operator-=(const IntegerMatrix& o);

    friend IntegerMatrix operator+(IntegerMatrix a, const IntegerMatrix& b) { return a += b; }
    friend IntegerMatrix operator-(IntegerMatrix a, const IntegerMatrix& b) { return a -= b; }
    friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
    friend IntegerMatrix operator*(const Integer& c, IntegerMatrix a);
    friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

private:
    std::size_t dim_;
    std::vector<Integer> entries_;
};

std::ostream& operator<<(std::ostream& os, const IntegerMatrix& m);

/// Exact product; throws InvalidArgument on a dimension mismatch.
IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b);

/// Determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntegerMatrix& a);

/// Characteristic polynomial det(xI - a) by Berkowitz's division-free method.
IntPolynomial characteristic_polynomial(const IntegerMatrix& a);

/// Adjugate of a determinant-one matrix, i.e. its exact integer inverse.
/// Throws InvalidArgument if det(a) != 1.
IntegerMatrix adjugate_inverse(const IntegerMatrix& a);

/// True iff ab = ba; throws InvalidArgument on a dimension mismatch.
bool commutes(const IntegerMatrix& a, const IntegerMatrix& b);

enum class GroupKind { SpecialLinear, Symplectic };

std::string_view to_string(GroupKind kind);

/// The standard alternating form [[0, I], [-I, 0]] of side 2n.
IntegerMatrix standard_symplectic_form(std::size_t dim);

bool is_symplectic(const IntegerMatrix& g);

/// Validated generators of a subgroup of SL(n, Z) or Sp(2n, Z).
///
/// Inverses are computed once at construction; `letters()` is the symmetric
/// generating set (generators followed by their inverses) that random words
/// are drawn from.
class GeneratorSet {
public:
    GroupKind kind() const noexcept { return kind_; }
    std::size_t dim() const noexcept { return dim_; }
    const std::vector<IntegerMatrix>& generators() const noexcept { return generators_; }
    const std::vector<IntegerMatrix>& inverses() const noexcept { return inverses_; }
    const std::vector<IntegerMatrix>& letters() const noexcept { return letters_; }
    /// max over generators of the ceiling of the Frobenius norm.
    const Integer& norm_bound() const noexcept { return norm_bound_; }

private:
    friend GeneratorSet validate(GroupKind, std::size_t, std::vector<IntegerMatrix>);
    GeneratorSet() = default;

    GroupKind kind_ = GroupKind::SpecialLinear;
    std::size_t dim_ = 0;
    std::vector<IntegerMatrix> generators_;
    std::vector<IntegerMatrix> inverses_;
    std::vector<IntegerMatrix> letters_;
    Integer norm_bound_;
};

/// Checks shapes, determinants and (for Sp) the symplectic form, and builds
/// the GeneratorSet. Throws ValidationError on any failure.
GeneratorSet validate(GroupKind kind, std::size_t dim, std::vector<IntegerMatrix> generators);

/// Product of `length` letters drawn uniformly from the symmetric generating set.
IntegerMatrix random_word(const GeneratorSet& gs, std::size_t length, Rng& rng);

} // namespace zdense
