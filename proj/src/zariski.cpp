#include "zdense/zariski.hpp"

#include "modular.hpp"
#include "zdense/error.hpp"

#include <chrono>
#include <cmath>

namespace zdense {

namespace {

    using detail::u64;

    // 2^62 - 57, prime.
    constexpr u64 kRankPrime = (u64 { 1 } << 62) - 57;

    /// Incremental row echelon form over F_p; rows are monic at their pivot.
    class ModEchelon {
    public:
        ModEchelon(std::size_t width, u64 p)
            : width_(width)
            , p_(p)
        {
        }

        /// Adds v to the span; true if the rank grew.
        bool insert(std::vector<u64> v)
        {
            for (std::size_t r = 0; r < rows_.size(); ++r) {
                const u64 c = v[pivots_[r]];
                if (c == 0)
                    continue;
                for (std::size_t j = 0; j < width_; ++j)
                    v[j] = detail::sub_mod(v[j], detail::mul_mod(c, rows_[r][j], p_), p_);
            }
            std::size_t pivot = 0;
            while (pivot < width_ && v[pivot] == 0)
                ++pivot;
            if (pivot == width_)
                return false;
            const u64 inv = detail::inv_mod(v[pivot], p_);
            for (auto& x : v)
                x = detail::mul_mod(x, inv, p_);
            rows_.push_back(std::move(v));
            pivots_.push_back(pivot);
            return true;
        }

        std::size_t rank() const noexcept { return rows_.size(); }

    private:
        std::size_t width_;
        u64 p_;
        std::vector<std::vector<u64>> rows_;
        std::vector<std::size_t> pivots_;
    };

    /// Incremental fraction-free echelon form over Z: a new row is reduced by
    /// cross-multiplication against each stored row and then divided by its
    /// content, so it stays a primitive integer vector.
    class ExactEchelon {
    public:
        explicit ExactEchelon(std::size_t width)
            : width_(width)
        {
        }

        bool insert(std::vector<Integer> v)
        {
            for (std::size_t r = 0; r < rows_.size(); ++r) {
                const std::size_t pc = pivots_[r];
                if (v[pc] == 0)
                    continue;
                const Integer a = rows_[r][pc];
                const Integer b = v[pc];
                for (std::size_t j = 0; j < width_; ++j)
                    v[j] = a * v[j] - b * rows_[r][j];
                make_primitive(v);
            }
            std::size_t pivot = 0;
            while (pivot < width_ && v[pivot] == 0)
                ++pivot;
            if (pivot == width_)
                return false;
            rows_.push_back(std::move(v));
            pivots_.push_back(pivot);
            return true;
        }

        std::size_t rank() const noexcept { return rows_.size(); }

    private:
        static void make_primitive(std::vector<Integer>& v)
        {
            Integer g = 0;
            for (const auto& x : v)
                g = gcd(g, x);
            if (g > 1)
                for (auto& x : v)
                    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
        }

        std::size_t width_;
        std::vector<std::vector<Integer>> rows_;
        std::vector<std::size_t> pivots_;
    };

    /// Row-major dim x dim matrices flattened to vectors; g * x.
    template <class T, class Mul>
    std::vector<T> left_multiply(const std::vector<T>& g, const std::vector<T>& x, std::size_t dim, Mul mul_add)
    {
        std::vector<T> out(dim * dim);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t k = 0; k < dim; ++k)
                for (std::size_t j = 0; j < dim; ++j)
                    mul_add(out[i * dim + j], g[i * dim + k], x[k * dim + j]);
        return out;
    }

    /// Runs V <- V + sum g_i V from V = <I> until it stabilizes, multiplying
    /// only the vectors that entered in the previous round.
    template <class T, class Echelon, class Mul>
    IrreducibilityResult grow_span(const std::vector<std::vector<T>>& gens, std::size_t dim, Echelon& span,
        const std::vector<T>& identity, Mul mul_add)
    {
        IrreducibilityResult res;
        const std::size_t full = dim * dim;
        span.insert(identity);
        std::vector<std::vector<T>> frontier { identity };
        while (span.rank() < full) {
            ++res.rounds;
            std::vector<std::vector<T>> entered;
            for (const auto& x : frontier)
                for (const auto& g : gens) {
                    std::vector<T> y = left_multiply(g, x, dim, mul_add);
                    if (span.insert(y))
                        entered.push_back(std::move(y));
                }
            if (entered.empty())
                break;
            frontier = std::move(entered);
        }
        res.algebra_dimension = span.rank();
        res.irreducible = span.rank() == full;
        return res;
    }

} // namespace

IrreducibilityResult is_irreducible_algebra(std::span<const IntegerMatrix> mats, std::size_t dim)
{
    if (dim == 0)
        throw InvalidArgument("dimension must be at least 1");
    for (const auto& m : mats)
        if (m.dim() != dim)
            throw InvalidArgument("dimension mismatch: matrix of size " + std::to_string(m.dim()) + ", expected "
                + std::to_string(dim));

    // Reduction mod p can only lose rank, so a full span mod p is a full span over Q.
    {
        const u64 p = kRankPrime;
        std::vector<std::vector<u64>> gens;
        for (const auto& m : mats) {
            std::vector<u64> v;
            for (const auto& e : m.entries())
                v.push_back(residue(e, p));
            gens.push_back(std::move(v));
        }
        std::vector<u64> identity(dim * dim, 0);
        for (std::size_t i = 0; i < dim; ++i)
            identity[i * dim + i] = 1;
        ModEchelon span(dim * dim, p);
        auto res = grow_span(gens, dim, span, identity,
            [p](u64& acc, u64 a, u64 b) { acc = detail::add_mod(acc, detail::mul_mod(a, b, p), p); });
        if (res.irreducible)
            return res;
    }

    std::vector<std::vector<Integer>> gens;
    for (const auto& m : mats)
        gens.push_back(m.entries());
    std::vector<Integer> identity(dim * dim, 0);
    for (std::size_t i = 0; i < dim; ++i)
        identity[i * dim + i] = 1;
    ExactEchelon span(dim * dim);
    auto res = grow_span(gens, dim, span, identity, [](Integer& acc, const Integer& a, const Integer& b) {
        mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    });
    res.exact_recheck = true;
    return res;
}

AdjointBasis::AdjointBasis(GroupKind kind, std::size_t dim)
    : kind_(kind)
    , dim_(dim)
{
    auto unit = [dim](std::size_t r, std::size_t c) {
        IntegerMatrix m(dim);
        m(r, c) = 1;
        return m;
    };
    if (kind == GroupKind::SpecialLinear) {
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = i + 1; j < dim; ++j)
                elements_.push_back(unit(i, j));
        for (std::size_t i = 0; i + 1 < dim; ++i) {
            IntegerMatrix h(dim);
            h(i, i) = 1;
            h(i + 1, i + 1) = -1;
            elements_.push_back(std::move(h));
        }
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < i; ++j)
                elements_.push_back(unit(i, j));
        return;
    }
    if (dim % 2 != 0)
        throw InvalidArgument("symplectic Lie algebra needs even dimension");
    const std::size_t n = dim / 2;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            IntegerMatrix m(dim);
            m(i, j) = 1;
            m(n + j, n + i) = -1;
            elements_.push_back(std::move(m));
        }
    for (std::size_t block = 0; block < 2; ++block)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                const std::size_t ro = block == 0 ? 0 : n;
                const std::size_t co = block == 0 ? n : 0;
                IntegerMatrix m(dim);
                m(ro + i, co + j) = 1;
                m(ro + j, co + i) = 1;
                elements_.push_back(std::move(m));
            }
}

std::vector<Integer> AdjointBasis::coordinates(const IntegerMatrix& x) const
{
    if (x.dim() != dim_)
        throw InvalidArgument("dimension mismatch");
    std::vector<Integer> c;
    c.reserve(elements_.size());
    if (kind_ == GroupKind::SpecialLinear) {
        if (x.trace() != 0)
            throw InvalidArgument("matrix is not trace-free");
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = i + 1; j < dim_; ++j)
                c.push_back(x(i, j));
        Integer running = 0;
        for (std::size_t i = 0; i + 1 < dim_; ++i) {
            running += x(i, i);
            c.push_back(running);
        }
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < i; ++j)
                c.push_back(x(i, j));
        return c;
    }
    const std::size_t n = dim_ / 2;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (x(n + j, n + i) != -x(i, j))
                throw InvalidArgument("matrix is not in the symplectic Lie algebra");
            c.push_back(x(i, j));
        }
    for (std::size_t block = 0; block < 2; ++block)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                const std::size_t ro = block == 0 ? 0 : n;
                const std::size_t co = block == 0 ? n : 0;
                if (x(ro + i, co + j) != x(ro + j, co + i))
                    throw InvalidArgument("matrix is not in the symplectic Lie algebra");
                c.push_back(x(ro + i, co + j));
            }
    return c;
}

IntegerMatrix adjoint_matrix(const AdjointBasis& basis, const IntegerMatrix& g, const IntegerMatrix& g_inverse)
{
    const std::size_t m = basis.size();
    IntegerMatrix ad(m);
    for (std::size_t col = 0; col < m; ++col) {
        const std::vector<Integer> c = basis.coordinates(g * basis.elements()[col] * g_inverse);
        for (std::size_t row = 0; row < m; ++row)
            ad(row, col) = c[row];
    }
    return ad;
}

std::vector<IntegerMatrix> adjoint_matrices(const GeneratorSet& gs)
{
    const AdjointBasis basis(gs.kind(), gs.dim());
    std::vector<IntegerMatrix> out;
    for (std::size_t i = 0; i < gs.generators().size(); ++i)
        out.push_back(adjoint_matrix(basis, gs.generators()[i], gs.inverses()[i]));
    return out;
}

std::string_view to_string(Certainty c)
{
    return c == Certainty::Certain ? "Certain" : "MonteCarlo";
}

std::size_t word_length_for(double eps, double word_constant)
{
    if (!(eps > 0.0 && eps < 1.0))
        throw InvalidArgument("epsilon must lie in (0, 1)");
    if (!(word_constant > 0.0))
        throw InvalidArgument("word constant must be positive");
    return std::max<std::size_t>(16, static_cast<std::size_t>(std::ceil(word_constant * std::log(1.0 / eps))));
}

namespace {

    class StepTimer {
    public:
        double seconds() const
        {
            return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        }

    private:
        std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
    };

    std::string summarize(const IntegerMatrix& w)
    {
        return "max |entry| has " + std::to_string(bit_length(w.max_abs_entry())) + " bits";
    }

    DensityVerdict finish(DensityVerdict v, bool dense)
    {
        v.dense = dense;
        v.certainty = dense ? Certainty::Certain : Certainty::MonteCarlo;
        return v;
    }

} // namespace

DensityVerdict zariski_dense(const GeneratorSet& gs, double eps, Rng& rng, const DensityOptions& options)
{
    if (!(eps > 0.0 && eps < 1.0))
        throw InvalidArgument("epsilon must lie in (0, 1)");
    DensityVerdict v;
    v.epsilon = eps;
    v.word_length = options.word_length ? options.word_length : word_length_for(eps, options.word_constant);

    // Streams per step: 0, 1 words; 2, 3 Galois certificates.
    const std::uint64_t base = rng();

    StepTimer sample_timer;
    std::vector<IntegerMatrix> words;
    for (std::uint64_t k = 0; k < 2; ++k) {
        Rng stream = derive_stream(base, k);
        words.push_back(random_word(gs, v.word_length, stream));
    }
    v.trail.push_back({ "sample_words",
        "two words of length " + std::to_string(v.word_length) + "; w1 " + summarize(words[0]) + ", w2 "
            + summarize(words[1]),
        std::nullopt, std::nullopt, std::nullopt, sample_timer.seconds() });

    StepTimer commute_timer;
    const bool commuting = commutes(words[0], words[1]);
    v.trail.push_back({ "commutation", commuting ? "w1 and w2 commute" : "w1 and w2 do not commute", std::nullopt,
        std::nullopt, std::nullopt, commute_timer.seconds() });
    if (commuting)
        return finish(std::move(v), false);

    // The Weyl group is S_n for SL(n) and C_2 wr S_n for Sp(2n).
    const bool symplectic = gs.kind() == GroupKind::Symplectic;
    for (std::uint64_t k = 0; k < 2; ++k) {
        StepTimer timer;
        IntPolynomial chi = characteristic_polynomial(words[k]);
        Rng stream = derive_stream(base, 2 + k);
        GaloisVerdict gv = symplectic ? is_hyperoctahedral(chi, eps / 2.0, stream, options.primes)
                                      : is_sn(chi, eps / 2.0, stream, options.primes);
        const bool ok = gv.confirmed();
        const std::string name = "galois_w" + std::to_string(k + 1);
        std::string outcome = std::string(to_string(gv.answer)) + ": " + gv.reason;
        v.trail.push_back({ name, std::move(outcome), chi, std::move(gv), std::nullopt, timer.seconds() });
        if (!ok)
            return finish(std::move(v), false);
    }

    // In dimension 2 the Weyl group is abelian, so a generic Galois group does
    // not rule out finite order (e.g. x^2 + x + 1); check it directly.
    if (gs.dim() == 2) {
        for (std::size_t k = 0; k < 2; ++k) {
            StepTimer timer;
            const IntPolynomial& chi = *v.trail[2 + k].polynomial;
            const bool finite = is_cyclotomic_product(chi);
            v.trail.push_back({ "infinite_order_w" + std::to_string(k + 1),
                finite ? "characteristic polynomial is a product of cyclotomics" : "infinite order",
                chi, std::nullopt, std::nullopt, timer.seconds() });
            if (finite)
                return finish(std::move(v), false);
        }
    }

    if (!symplectic)
        return finish(std::move(v), true);

    // The Sp case must exclude products of SL(2)s, which a reducible standard
    // representation exposes.
    StepTimer timer;
    IrreducibilityResult irr = is_irreducible_algebra(gs.generators(), gs.dim());
    v.trail.push_back({ "irreducibility",
        irr.irreducible ? "generators act irreducibly" : "generators act reducibly", std::nullopt, std::nullopt, irr,
        timer.seconds() });
    return finish(std::move(v), irr.irreducible);
}

DensityVerdict general_zariski_dense(const GeneratorSet& gs, double eps, Rng& rng, const DensityOptions& options)
{
    if (!(eps > 0.0 && eps < 1.0))
        throw InvalidArgument("epsilon must lie in (0, 1)");
    DensityVerdict v;
    v.epsilon = eps;
    v.word_length = options.word_length ? options.word_length : word_length_for(eps, options.word_constant);
    const std::uint64_t base = rng();

    StepTimer sample_timer;
    Rng stream = derive_stream(base, 0);
    const IntegerMatrix w = random_word(gs, v.word_length, stream);
    v.trail.push_back({ "sample_words", "one word of length " + std::to_string(v.word_length) + "; " + summarize(w),
        std::nullopt, std::nullopt, std::nullopt, sample_timer.seconds() });

    // An element of finite order has a cyclotomic characteristic polynomial.
    StepTimer cyclo_timer;
    IntPolynomial chi = characteristic_polynomial(w);
    const bool cyclo = is_cyclotomic_product(chi);
    v.trail.push_back({ "cyclotomic_check",
        cyclo ? "characteristic polynomial is a product of cyclotomics" : "not a product of cyclotomics",
        std::move(chi), std::nullopt, std::nullopt, cyclo_timer.seconds() });
    if (cyclo)
        return finish(std::move(v), false);

    StepTimer timer;
    const std::vector<IntegerMatrix> adjoint = adjoint_matrices(gs);
    const std::size_t lie_dim = adjoint.front().dim();
    IrreducibilityResult irr = is_irreducible_algebra(adjoint, lie_dim);
    v.trail.push_back({ "adjoint_irreducibility",
        irr.irreducible ? "adjoint action is irreducible" : "adjoint action is reducible", std::nullopt,
        std::nullopt, irr, timer.seconds() });
    return finish(std::move(v), irr.irreducible);
}

} // namespace zdense
