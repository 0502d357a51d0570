#include "zdense/finite_field.hpp"

#include "modular.hpp"
#include "zdense/error.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace zdense {

using detail::u64;

DegreeMultiset::DegreeMultiset(std::vector<unsigned> degrees)
    : degrees_(std::move(degrees))
{
    if (std::find(degrees_.begin(), degrees_.end(), 0u) != degrees_.end())
        throw InvalidArgument("factor degrees must be positive");
    std::sort(degrees_.begin(), degrees_.end());
}

unsigned DegreeMultiset::total() const noexcept
{
    unsigned s = 0;
    for (unsigned d : degrees_)
        s += d;
    return s;
}

std::size_t DegreeMultiset::count(unsigned d) const
{
    return static_cast<std::size_t>(std::count(degrees_.begin(), degrees_.end(), d));
}

std::string DegreeMultiset::to_string() const
{
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < degrees_.size(); ++i)
        os << (i ? "," : "") << degrees_[i];
    os << '}';
    return os.str();
}

namespace {

    constexpr std::array<unsigned, 12> kSmallPrimeBases { 2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37 };

    bool strong_probable_prime(u64 n, u64 a)
    {
        a %= n;
        if (a == 0)
            return true;
        u64 d = n - 1;
        unsigned s = 0;
        while ((d & 1) == 0) {
            d >>= 1;
            ++s;
        }
        u64 x = detail::pow_mod(a, d, n);
        if (x == 1 || x == n - 1)
            return true;
        for (unsigned r = 1; r < s; ++r) {
            x = detail::mul_mod(x, x, n);
            if (x == n - 1)
                return true;
        }
        return false;
    }

    bool strong_probable_prime(const Integer& n, const Integer& a)
    {
        Integer d = n - 1;
        unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
        mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
        Integer x;
        mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        const Integer n_minus_1 = n - 1;
        if (x == 1 || x == n_minus_1)
            return true;
        for (unsigned long r = 1; r < s; ++r) {
            mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
            if (x == n_minus_1)
                return true;
        }
        return false;
    }

} // namespace

bool is_prime(std::uint64_t r)
{
    if (r < 2)
        throw InvalidArgument("primality is defined for r >= 2");
    for (unsigned p : kSmallPrimeBases) {
        if (r == p)
            return true;
        if (r % p == 0)
            return false;
    }
    // The first twelve prime bases are a complete witness set below 3.3 * 10^24.
    for (unsigned a : kSmallPrimeBases)
        if (!strong_probable_prime(r, a))
            return false;
    return true;
}

bool is_prime(const Integer& r)
{
    if (r < 2)
        throw InvalidArgument("primality is defined for r >= 2");
    if (mpz_fits_ulong_p(r.get_mpz_t()))
        return is_prime(static_cast<std::uint64_t>(r.get_ui()));
    for (unsigned p : kSmallPrimeBases)
        if (mpz_divisible_ui_p(r.get_mpz_t(), p))
            return false;
    for (unsigned a : kSmallPrimeBases)
        if (!strong_probable_prime(r, Integer(a)))
            return false;
    // Extra bases from a fixed stream: each composite survives a random base
    // with probability at most 1/4.
    Rng bases(0x5eedba5e5ULL);
    const Integer span = r - 3;
    for (int i = 0; i < 40; ++i) {
        Integer a = Integer(static_cast<unsigned long>(bases() >> 1)) % span + 2;
        if (!strong_probable_prime(r, a))
            return false;
    }
    return true;
}

std::uint64_t random_prime_avoiding(const Integer& disc, std::uint64_t lo, std::uint64_t hi, Rng& rng)
{
    if (disc == 0)
        throw InvalidArgument("discriminant must be nonzero");
    if (lo < 2 || lo >= hi)
        throw InvalidArgument("prime interval must satisfy 2 <= lo < hi");
    const std::uint64_t width = hi - lo;
    const std::size_t attempts = 64 * bit_length(Integer(static_cast<unsigned long>(width)));
    for (std::size_t i = 0; i < attempts; ++i) {
        const std::uint64_t q = lo + uniform_below(rng, width);
        if (is_prime(q) && !mpz_divisible_ui_p(disc.get_mpz_t(), q))
            return q;
    }
    std::ostringstream os;
    os << "no prime in [" << lo << ", " << hi << ") avoiding the discriminant after " << attempts << " draws";
    throw SamplingExhausted(os.str());
}

namespace {

    /// Polynomials over F_q, constant term first, normalized (no trailing zeros).
    using PolyMod = std::vector<u64>;

    void trim(PolyMod& a)
    {
        while (!a.empty() && a.back() == 0)
            a.pop_back();
    }

    long deg(const PolyMod& a)
    {
        return static_cast<long>(a.size()) - 1;
    }

    /// a mod b, b nonzero.
    PolyMod rem(PolyMod a, const PolyMod& b, u64 q)
    {
        const long db = deg(b);
        const u64 inv_lead = detail::inv_mod(b.back(), q);
        while (deg(a) >= db) {
            const long shift = deg(a) - db;
            const u64 t = detail::mul_mod(a.back(), inv_lead, q);
            for (long j = 0; j <= db; ++j)
                a[shift + j] = detail::sub_mod(a[shift + j], detail::mul_mod(t, b[j], q), q);
            trim(a);
        }
        return a;
    }

    PolyMod quo(PolyMod a, const PolyMod& b, u64 q)
    {
        const long db = deg(b);
        if (deg(a) < db)
            return {};
        PolyMod out(static_cast<std::size_t>(deg(a) - db + 1), 0);
        const u64 inv_lead = detail::inv_mod(b.back(), q);
        while (deg(a) >= db) {
            const long shift = deg(a) - db;
            const u64 t = detail::mul_mod(a.back(), inv_lead, q);
            out[shift] = t;
            for (long j = 0; j <= db; ++j)
                a[shift + j] = detail::sub_mod(a[shift + j], detail::mul_mod(t, b[j], q), q);
            trim(a);
        }
        return out;
    }

    PolyMod mul_rem(const PolyMod& a, const PolyMod& b, const PolyMod& m, u64 q)
    {
        if (a.empty() || b.empty())
            return {};
        PolyMod prod(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0)
                continue;
            for (std::size_t j = 0; j < b.size(); ++j)
                prod[i + j] = detail::add_mod(prod[i + j], detail::mul_mod(a[i], b[j], q), q);
        }
        trim(prod);
        return rem(std::move(prod), m, q);
    }

    PolyMod pow_rem(PolyMod base, u64 exp, const PolyMod& m, u64 q)
    {
        PolyMod result { 1 };
        result = rem(result, m, q);
        base = rem(std::move(base), m, q);
        while (exp) {
            if (exp & 1)
                result = mul_rem(result, base, m, q);
            exp >>= 1;
            if (exp)
                base = mul_rem(base, base, m, q);
        }
        return result;
    }

    PolyMod gcd(PolyMod a, PolyMod b, u64 q)
    {
        while (!b.empty()) {
            PolyMod r = rem(std::move(a), b, q);
            a = std::move(b);
            b = std::move(r);
        }
        if (!a.empty()) {
            const u64 inv = detail::inv_mod(a.back(), q);
            for (auto& c : a)
                c = detail::mul_mod(c, inv, q);
        }
        return a;
    }

    PolyMod derivative(const PolyMod& a, u64 q)
    {
        PolyMod d;
        for (std::size_t i = 1; i < a.size(); ++i)
            d.push_back(detail::mul_mod(a[i], i % q, q));
        trim(d);
        return d;
    }

} // namespace

DegreeMultiset factor_degrees_mod(const IntPolynomial& f, std::uint64_t q)
{
    if (q < 2 || q >= (std::uint64_t { 1 } << 63))
        throw InvalidArgument("modulus out of range");
    if (f.degree() < 1)
        throw InvalidArgument("factor degrees need positive degree");
    if (mpz_divisible_ui_p(f.leading().get_mpz_t(), q))
        throw InvalidArgument("prime divides the leading coefficient");

    PolyMod g;
    g.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs())
        g.push_back(residue(c, q));
    const u64 inv_lead = detail::inv_mod(g.back(), q);
    for (auto& c : g)
        c = detail::mul_mod(c, inv_lead, q);

    if (deg(gcd(g, derivative(g, q), q)) > 0)
        throw InvalidArgument("polynomial is not squarefree modulo " + std::to_string(q));

    std::vector<unsigned> degrees;
    const PolyMod x { 0, 1 };
    PolyMod h = rem(x, g, q); // x^(q^d) mod g
    for (unsigned d = 1; deg(g) >= 2 * static_cast<long>(d); ++d) {
        h = pow_rem(h, q, g, q);
        PolyMod h_minus_x = h;
        if (h_minus_x.size() < 2)
            h_minus_x.resize(2, 0);
        h_minus_x[1] = detail::sub_mod(h_minus_x[1], 1, q);
        trim(h_minus_x);
        PolyMod part = gcd(g, h_minus_x, q);
        if (deg(part) > 0) {
            degrees.insert(degrees.end(), static_cast<std::size_t>(deg(part)) / d, d);
            g = quo(std::move(g), part, q);
            h = rem(std::move(h), g, q);
        }
    }
    if (deg(g) > 0)
        degrees.push_back(static_cast<unsigned>(deg(g)));
    return DegreeMultiset(std::move(degrees));
}

} // namespace zdense
