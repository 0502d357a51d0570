#pragma once

#include "zdense/integer.hpp"

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace zdense {

/// Dense univariate polynomial over Z, constant term first.
///
/// Storage is always normalized: the last stored coefficient is nonzero, and
/// the zero polynomial has no coefficients at all.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Integer> coeffs);
    IntPolynomial(std::initializer_list<long> coeffs);

    static IntPolynomial constant(const Integer& c);
    /// c * x^k
    static IntPolynomial monomial(const Integer& c, std::size_t k);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    /// Coefficient of x^i; zero past the degree.
    Integer coeff(std::size_t i) const;
    const Integer& leading() const;
    bool is_monic() const;
    const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }

    IntPolynomial derivative() const;
    Integer content() const;
    /// Horner evaluation at an integer point.
    Integer evaluate(const Integer& x) const;

    IntPolynomial& operator+=(const IntPolynomial& o);
    IntPolynomial& operator-=(const IntPolynomial& o);
    IntPolynomial& operator*=(const Integer& c);

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator-(IntPolynomial a);
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(IntPolynomial a, const Integer& c) { return a *= c; }
    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    /// Human-readable form, e.g. "x^3 - x - 1".
    std::string to_string() const;

private:
    void normalize();

    std::vector<Integer> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const IntPolynomial& f);

/// Quotient and remainder of division by a monic divisor.
std::pair<IntPolynomial, IntPolynomial> divmod_monic(const IntPolynomial& f, const IntPolynomial& monic_divisor);

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

/// f divided by an integer that divides every coefficient.
IntPolynomial exact_divide(const IntPolynomial& f, const Integer& d);

Integer l1_norm(const IntPolynomial& f);

/// Res(a, b) by the subresultant polynomial remainder sequence.
Integer resultant(const IntPolynomial& a, const IntPolynomial& b);

/// Discriminant of a monic polynomial of positive degree:
/// (-1)^(n(n-1)/2) Res(f, f').
Integer discriminant(const IntPolynomial& f);

/// Mahler's discriminant bound n^n |f|_1^(2n-2), n = deg f.
Integer mahler_bound(const IntPolynomial& f);

bool is_reciprocal(const IntPolynomial& f);

/// For monic reciprocal f of degree 2n, the monic F of degree n with
/// x^n F(x + 1/x) = f(x).
IntPolynomial trace_polynomial(const IntPolynomial& f);

/// The d-th cyclotomic polynomial.
IntPolynomial cyclotomic(unsigned d);

/// Euler's totient.
unsigned euler_phi(unsigned d);

/// Whether a monic f is a product of cyclotomic polynomials (with multiplicity).
bool is_cyclotomic_product(const IntPolynomial& f);

} // namespace zdense
