#include "zdense/linalg.hpp"

#include "zdense/error.hpp"

#include <algorithm>

namespace zdense {

IntegerMatrix::IntegerMatrix(std::size_t dim)
    : dim_(dim)
    , entries_(dim * dim)
{
    if (dim == 0)
        throw InvalidArgument("matrix dimension must be at least 1");
}

IntegerMatrix::IntegerMatrix(std::size_t dim, std::vector<Integer> entries)
    : dim_(dim)
    , entries_(std::move(entries))
{
    if (dim == 0)
        throw InvalidArgument("matrix dimension must be at least 1");
    if (entries_.size() != dim * dim)
        throw InvalidArgument("entry count does not match dimension");
}

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : IntegerMatrix(rows.size())
{
    std::size_t r = 0;
    for (const auto& row : rows) {
        if (row.size() != dim_)
            throw InvalidArgument("matrix is not square");
        std::size_t c = 0;
        for (long v : row)
            (*this)(r, c++) = v;
        ++r;
    }
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<Integer>>& rows)
{
    if (rows.empty())
        throw InvalidArgument("matrix has no rows");
    IntegerMatrix m(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != rows.size())
            throw InvalidArgument("matrix is not square: row " + std::to_string(r + 1) + " has "
                + std::to_string(rows[r].size()) + " entries, expected " + std::to_string(rows.size()));
        std::copy(rows[r].begin(), rows[r].end(), m.entries_.begin() + static_cast<long>(r * m.dim_));
    }
    return m;
}

IntegerMatrix IntegerMatrix::identity(std::size_t dim)
{
    IntegerMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i)
        m(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::elementary(std::size_t dim, std::size_t row, std::size_t col, long value)
{
    IntegerMatrix m = identity(dim);
    m(row, col) += value;
    return m;
}

IntegerMatrix IntegerMatrix::transposed() const
{
    IntegerMatrix t(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

Integer IntegerMatrix::trace() const
{
    Integer t = 0;
    for (std::size_t i = 0; i < dim_; ++i)
        t += (*this)(i, i);
    return t;
}

Integer IntegerMatrix::max_abs_entry() const
{
    Integer m = 0;
    for (const auto& e : entries_)
        if (abs(e) > m)
            m = abs(e);
    return m;
}

Integer IntegerMatrix::frobenius_norm_ceil() const
{
    Integer s = 0;
    for (const auto& e : entries_)
        s += e * e;
    return ceil_sqrt(s);
}

IntegerMatrix& IntegerMatrix::operator+=(const IntegerMatrix& o)
{
    if (o.dim_ != dim_)
        throw InvalidArgument("dimension mismatch");
    for (std::size_t i = 0; i < entries_.size(); ++i)
        entries_[i] += o.entries_[i];
    return *this;
}

IntegerMatrix& IntegerMatrix::operator-=(const IntegerMatrix& o)
{
    if (o.dim_ != dim_)
        throw InvalidArgument("dimension mismatch");
    for (std::size_t i = 0; i < entries_.size(); ++i)
        entries_[i] -= o.entries_[i];
    return *this;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b)
{
    if (a.dim_ != b.dim_)
        throw InvalidArgument("dimension mismatch: " + std::to_string(a.dim_) + " vs " + std::to_string(b.dim_));
    const std::size_t n = a.dim_;
    IntegerMatrix c(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const Integer& aik = a(i, k);
            if (aik == 0)
                continue;
            for (std::size_t j = 0; j < n; ++j)
                mpz_addmul(c(i, j).get_mpz_t(), aik.get_mpz_t(), b(k, j).get_mpz_t());
        }
    return c;
}

IntegerMatrix operator*(const Integer& s, IntegerMatrix a)
{
    for (auto& e : a.entries_)
        e *= s;
    return a;
}

std::ostream& operator<<(std::ostream& os, const IntegerMatrix& m)
{
    os << '[';
    for (std::size_t r = 0; r < m.dim(); ++r) {
        os << (r ? ", [" : "[");
        for (std::size_t c = 0; c < m.dim(); ++c)
            os << (c ? ", " : "") << m(r, c);
        os << ']';
    }
    return os << ']';
}

IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b)
{
    return a * b;
}

Integer determinant(const IntegerMatrix& a)
{
    const std::size_t n = a.dim();
    std::vector<Integer> m = a.entries();
    auto at = [&](std::size_t r, std::size_t c) -> Integer& { return m[r * n + c]; };
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && at(p, k) == 0)
                ++p;
            if (p == n)
                return 0;
            for (std::size_t c = 0; c < n; ++c)
                std::swap(at(k, c), at(p, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = at(i, j) * at(k, k) - at(i, k) * at(k, j);
                mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = at(k, k);
    }
    return sign * at(n - 1, n - 1);
}

// Berkowitz: peel off the leading row/column one at a time. If
// A = [[a, R], [C, M]] then charpoly(A) = T * charpoly(M), where T is the
// lower-triangular Toeplitz matrix with first column
// (1, -a, -RC, -RMC, ..., -RM^(m-1)C) and m = dim M.
IntPolynomial characteristic_polynomial(const IntegerMatrix& a)
{
    const std::size_t n = a.dim();
    // Highest-degree coefficient first while iterating.
    std::vector<Integer> p { 1, -a(n - 1, n - 1) };
    for (std::size_t i = n - 1; i-- > 0;) {
        const std::size_t m = n - 1 - i;
        std::vector<Integer> t(m + 2);
        t[0] = 1;
        t[1] = -a(i, i);
        // v = M^k C, starting with C
        std::vector<Integer> v(m), next(m);
        for (std::size_t r = 0; r < m; ++r)
            v[r] = a(i + 1 + r, i);
        for (std::size_t k = 0; k < m; ++k) {
            Integer dot = 0;
            for (std::size_t c = 0; c < m; ++c)
                mpz_addmul(dot.get_mpz_t(), a(i, i + 1 + c).get_mpz_t(), v[c].get_mpz_t());
            t[k + 2] = -dot;
            if (k + 1 == m)
                break;
            for (std::size_t r = 0; r < m; ++r) {
                next[r] = 0;
                for (std::size_t c = 0; c < m; ++c)
                    mpz_addmul(next[r].get_mpz_t(), a(i + 1 + r, i + 1 + c).get_mpz_t(), v[c].get_mpz_t());
            }
            std::swap(v, next);
        }
        std::vector<Integer> q(m + 2);
        for (std::size_t r = 0; r < m + 2; ++r)
            for (std::size_t c = 0; c <= std::min(r, m); ++c)
                mpz_addmul(q[r].get_mpz_t(), t[r - c].get_mpz_t(), p[c].get_mpz_t());
        p = std::move(q);
    }
    std::reverse(p.begin(), p.end());
    return IntPolynomial(std::move(p));
}

// Cayley-Hamilton: with charpoly x^n + c_{n-1}x^{n-1} + ... + c_0 and
// c_0 = (-1)^n det a, adj(a) = (-1)^(n+1) (a^{n-1} + c_{n-1} a^{n-2} + ... + c_1 I).
IntegerMatrix adjugate_inverse(const IntegerMatrix& a)
{
    const std::size_t n = a.dim();
    const IntPolynomial chi = characteristic_polynomial(a);
    const Integer det = (n % 2 == 0) ? chi.coeff(0) : Integer(-chi.coeff(0));
    if (det != 1)
        throw InvalidArgument("adjugate_inverse: determinant is " + det.get_str() + ", expected 1");
    IntegerMatrix acc = IntegerMatrix::identity(n);
    for (std::size_t k = n - 1; k >= 1; --k) {
        acc = acc * a;
        const Integer c = chi.coeff(k);
        if (c != 0)
            for (std::size_t i = 0; i < n; ++i)
                acc(i, i) += c;
    }
    if (n % 2 == 0)
        acc = Integer(-1) * std::move(acc);
    return acc;
}

bool commutes(const IntegerMatrix& a, const IntegerMatrix& b)
{
    return a * b == b * a;
}

std::string_view to_string(GroupKind kind)
{
    return kind == GroupKind::SpecialLinear ? "SL" : "Sp";
}

IntegerMatrix standard_symplectic_form(std::size_t dim)
{
    if (dim % 2 != 0)
        throw InvalidArgument("symplectic form needs even dimension");
    const std::size_t h = dim / 2;
    IntegerMatrix j(dim);
    for (std::size_t i = 0; i < h; ++i) {
        j(i, h + i) = 1;
        j(h + i, i) = -1;
    }
    return j;
}

bool is_symplectic(const IntegerMatrix& g)
{
    if (g.dim() % 2 != 0)
        return false;
    const IntegerMatrix j = standard_symplectic_form(g.dim());
    return g.transposed() * j * g == j;
}

GeneratorSet validate(GroupKind kind, std::size_t dim, std::vector<IntegerMatrix> generators)
{
    if (dim == 0)
        throw ValidationError("dimension must be at least 1");
    if (kind == GroupKind::Symplectic && (dim % 2 != 0))
        throw ValidationError("symplectic group needs even dimension, got " + std::to_string(dim));
    if (generators.empty())
        throw ValidationError("generator list is empty");

    GeneratorSet gs;
    gs.kind_ = kind;
    gs.dim_ = dim;
    gs.norm_bound_ = 1;
    for (std::size_t i = 0; i < generators.size(); ++i) {
        const IntegerMatrix& g = generators[i];
        const std::string label = "generator " + std::to_string(i + 1);
        if (g.dim() != dim)
            throw ValidationError(label + " has dimension " + std::to_string(g.dim()) + ", expected "
                + std::to_string(dim));
        const Integer det = determinant(g);
        if (det != 1)
            throw ValidationError(label + " has determinant " + det.get_str() + ", expected 1");
        if (kind == GroupKind::Symplectic && !is_symplectic(g))
            throw ValidationError(label + " does not preserve the standard symplectic form");
        gs.norm_bound_ = std::max(gs.norm_bound_, g.frobenius_norm_ceil());
        gs.inverses_.push_back(adjugate_inverse(g));
    }
    gs.generators_ = std::move(generators);
    gs.letters_ = gs.generators_;
    gs.letters_.insert(gs.letters_.end(), gs.inverses_.begin(), gs.inverses_.end());
    return gs;
}

IntegerMatrix random_word(const GeneratorSet& gs, std::size_t length, Rng& rng)
{
    if (length == 0)
        throw InvalidArgument("word length must be positive");
    const auto& letters = gs.letters();
    IntegerMatrix w = letters[uniform_below(rng, letters.size())];
    for (std::size_t i = 1; i < length; ++i)
        w = w * letters[uniform_below(rng, letters.size())];
    return w;
}

} // namespace zdense
