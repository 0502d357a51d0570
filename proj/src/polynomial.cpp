#include "zdense/polynomial.hpp"

#include "zdense/error.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace zdense {

Integer parse_integer(const std::string& text)
{
    std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
    if (start == text.size())
        throw InvalidArgument("not an integer: '" + text + "'");
    for (std::size_t i = start; i < text.size(); ++i)
        if (text[i] < '0' || text[i] > '9')
            throw InvalidArgument("not an integer: '" + text + "'");
    return Integer(text[0] == '+' ? text.substr(1) : text, 10);
}

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs)
    : coeffs_(std::move(coeffs))
{
    normalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs)
{
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs)
        coeffs_.emplace_back(c);
    normalize();
}

IntPolynomial IntPolynomial::constant(const Integer& c)
{
    return IntPolynomial(std::vector<Integer>{c});
}

IntPolynomial IntPolynomial::monomial(const Integer& c, std::size_t k)
{
    std::vector<Integer> v(k + 1);
    v[k] = c;
    return IntPolynomial(std::move(v));
}

void IntPolynomial::normalize()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

Integer IntPolynomial::coeff(std::size_t i) const
{
    return i < coeffs_.size() ? coeffs_[i] : Integer(0);
}

const Integer& IntPolynomial::leading() const
{
    if (coeffs_.empty())
        throw InvalidArgument("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

bool IntPolynomial::is_monic() const
{
    return !coeffs_.empty() && coeffs_.back() == 1;
}

IntPolynomial IntPolynomial::derivative() const
{
    if (coeffs_.size() <= 1)
        return {};
    std::vector<Integer> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return IntPolynomial(std::move(d));
}

Integer IntPolynomial::content() const
{
    Integer g = 0;
    for (const auto& c : coeffs_)
        g = gcd(g, c);
    return g;
}

Integer IntPolynomial::evaluate(const Integer& x) const
{
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o)
{
    if (coeffs_.size() < o.coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o)
{
    if (coeffs_.size() < o.coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
}

IntPolynomial& IntPolynomial::operator*=(const Integer& c)
{
    for (auto& a : coeffs_)
        a *= c;
    normalize();
    return *this;
}

IntPolynomial operator-(IntPolynomial a)
{
    for (auto& c : a.coeffs_)
        c = -c;
    return a;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Integer> r(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntPolynomial(std::move(r));
}

std::string IntPolynomial::to_string() const
{
    if (coeffs_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const Integer& c = coeffs_[k];
        if (c == 0)
            continue;
        Integer mag = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (k == 0 || mag != 1)
            os << mag;
        if (k >= 1)
            os << "x";
        if (k >= 2)
            os << "^" << k;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPolynomial& f)
{
    return os << f.to_string();
}

std::pair<IntPolynomial, IntPolynomial> divmod_monic(const IntPolynomial& f, const IntPolynomial& divisor)
{
    if (!divisor.is_monic())
        throw InvalidArgument("divisor must be monic");
    const long m = divisor.degree();
    std::vector<Integer> rem = f.coeffs();
    if (f.degree() < m)
        return {IntPolynomial{}, f};
    std::vector<Integer> quo(static_cast<std::size_t>(f.degree() - m + 1));
    const auto& d = divisor.coeffs();
    for (long k = f.degree(); k >= m; --k) {
        Integer q = rem[k];
        quo[k - m] = q;
        if (q == 0)
            continue;
        for (long j = 0; j <= m; ++j)
            rem[k - m + j] -= q * d[j];
    }
    rem.resize(static_cast<std::size_t>(m));
    return {IntPolynomial(std::move(quo)), IntPolynomial(std::move(rem))};
}

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b)
{
    if (b.is_zero())
        throw InvalidArgument("pseudo-division by zero polynomial");
    const long db = b.degree();
    if (a.degree() < db)
        return a;
    const Integer& lb = b.leading();
    std::vector<Integer> r = a.coeffs();
    long e = a.degree() - db + 1;
    for (long k = a.degree(); k >= db; --k) {
        Integer t = r[k];
        for (auto& c : r)
            c *= lb;
        for (long j = 0; j <= db; ++j)
            r[k - db + j] -= t * b.coeffs()[j];
        r.pop_back();
        --e;
    }
    IntPolynomial out(std::move(r));
    if (e > 0)
        out *= power(lb, static_cast<unsigned long>(e));
    return out;
}

IntPolynomial exact_divide(const IntPolynomial& f, const Integer& d)
{
    std::vector<Integer> r = f.coeffs();
    for (auto& c : r)
        mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
    return IntPolynomial(std::move(r));
}

Integer l1_norm(const IntPolynomial& f)
{
    Integer s = 0;
    for (const auto& c : f.coeffs())
        s += abs(c);
    return s;
}

// Subresultant PRS in the formulation of Collins/Brown (Cohen, Alg. 3.3.7).
// Every division below is exact.
Integer resultant(const IntPolynomial& a_in, const IntPolynomial& b_in)
{
    if (a_in.is_zero() || b_in.is_zero())
        return 0;
    IntPolynomial a = a_in;
    IntPolynomial b = b_in;
    int sign = 1;
    if (a.degree() < b.degree()) {
        std::swap(a, b);
        if ((a.degree() & 1) && (b.degree() & 1))
            sign = -1;
    }
    const Integer ca = a.content();
    const Integer cb = b.content();
    a = exact_divide(a, ca);
    b = exact_divide(b, cb);
    const Integer scale = power(ca, static_cast<unsigned long>(b.degree()))
        * power(cb, static_cast<unsigned long>(a.degree()));

    if (b.degree() == 0)
        return sign * scale; // b is the unit 1 after removing content

    Integer g = 1;
    Integer h = 1;
    while (true) {
        const long delta = a.degree() - b.degree();
        if ((a.degree() & 1) && (b.degree() & 1))
            sign = -sign;
        IntPolynomial r = pseudo_remainder(a, b);
        a = std::move(b);
        if (r.is_zero())
            return 0;
        b = exact_divide(r, g * power(h, static_cast<unsigned long>(delta)));
        g = a.leading();
        if (delta == 0) {
            // h unchanged
        } else {
            Integer num = power(g, static_cast<unsigned long>(delta));
            Integer den = power(h, static_cast<unsigned long>(delta - 1));
            mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        }
        if (b.degree() == 0)
            break;
    }
    const long da = a.degree();
    Integer num = power(b.leading(), static_cast<unsigned long>(da));
    Integer den = power(h, static_cast<unsigned long>(da - 1));
    Integer last;
    mpz_divexact(last.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return sign * scale * last;
}

Integer discriminant(const IntPolynomial& f)
{
    if (f.degree() < 1)
        throw InvalidArgument("discriminant of a constant polynomial");
    if (!f.is_monic())
        throw InvalidArgument("discriminant expects a monic polynomial");
    const long n = f.degree();
    Integer r = resultant(f, f.derivative());
    return ((n * (n - 1) / 2) % 2 == 0) ? r : Integer(-r);
}

Integer mahler_bound(const IntPolynomial& f)
{
    const long n = f.degree();
    if (n < 1)
        throw InvalidArgument("Mahler bound needs positive degree");
    return power(Integer(n), static_cast<unsigned long>(n))
        * power(l1_norm(f), static_cast<unsigned long>(2 * n - 2));
}

bool is_reciprocal(const IntPolynomial& f)
{
    const auto& c = f.coeffs();
    return std::equal(c.begin(), c.begin() + static_cast<long>(c.size() / 2), c.rbegin());
}

IntPolynomial trace_polynomial(const IntPolynomial& f)
{
    if (!f.is_monic())
        throw InvalidArgument("trace polynomial needs a monic polynomial");
    if (f.degree() % 2 != 0)
        throw InvalidArgument("trace polynomial needs even degree");
    if (!is_reciprocal(f))
        throw InvalidArgument("trace polynomial needs a reciprocal polynomial");

    const std::size_t n = static_cast<std::size_t>(f.degree() / 2);
    const IntPolynomial z = IntPolynomial::monomial(1, 1);
    // E_k(z) = x^k + x^-k written in z = x + 1/x.
    IntPolynomial e_prev = IntPolynomial::constant(2);
    IntPolynomial e_cur = z;
    IntPolynomial trace = IntPolynomial::constant(f.coeff(n));
    for (std::size_t k = 1; k <= n; ++k) {
        trace += e_cur * f.coeff(n + k);
        IntPolynomial e_next = z * e_cur - e_prev;
        e_prev = std::move(e_cur);
        e_cur = std::move(e_next);
    }
    return trace;
}

unsigned euler_phi(unsigned d)
{
    unsigned result = d;
    for (unsigned p = 2; p * p <= d; ++p) {
        if (d % p == 0) {
            while (d % p == 0)
                d /= p;
            result -= result / p;
        }
    }
    if (d > 1)
        result -= result / d;
    return result;
}

namespace {

    const IntPolynomial& cyclotomic_memo(unsigned d, std::map<unsigned, IntPolynomial>& memo)
    {
        if (auto it = memo.find(d); it != memo.end())
            return it->second;
        IntPolynomial p = IntPolynomial::monomial(1, d) - IntPolynomial::constant(1);
        for (unsigned e = 1; e < d; ++e) {
            if (d % e != 0)
                continue;
            p = divmod_monic(p, cyclotomic_memo(e, memo)).first;
        }
        return memo.emplace(d, std::move(p)).first->second;
    }

} // namespace

IntPolynomial cyclotomic(unsigned d)
{
    if (d == 0)
        throw InvalidArgument("cyclotomic index must be positive");
    std::map<unsigned, IntPolynomial> memo;
    return cyclotomic_memo(d, memo);
}

namespace {

    int mobius(unsigned d)
    {
        int mu = 1;
        for (unsigned p = 2; p * p <= d; ++p) {
            if (d % p != 0)
                continue;
            d /= p;
            if (d % p == 0)
                return 0;
            mu = -mu;
        }
        return d > 1 ? -mu : mu;
    }

    // Phi_d = prod_{e | d} (x^e - 1)^mu(d/e): multiply by the binomials with
    // mu = +1, then divide exactly by those with mu = -1.
    IntPolynomial cyclotomic_by_mobius(unsigned d)
    {
        std::vector<Integer> p { 1 };
        std::vector<unsigned> denominators;
        for (unsigned e = 1; e <= d; ++e) {
            if (d % e != 0)
                continue;
            const int mu = mobius(d / e);
            if (mu == 1) {
                std::vector<Integer> q(p.size() + e);
                for (std::size_t i = 0; i < p.size(); ++i) {
                    q[i + e] += p[i];
                    q[i] -= p[i];
                }
                p = std::move(q);
            } else if (mu == -1) {
                denominators.push_back(e);
            }
        }
        for (unsigned e : denominators) {
            // p = q (x^e - 1): q_k = p_{k+e} + q_{k+e}, from the top down.
            const std::size_t out = p.size() - e;
            std::vector<Integer> q(out);
            for (std::size_t k = out; k-- > 0;)
                q[k] = p[k + e] + (k + e < out ? q[k + e] : Integer(0));
            p = std::move(q);
        }
        return IntPolynomial(std::move(p));
    }

} // namespace

bool is_cyclotomic_product(const IntPolynomial& f)
{
    if (!f.is_monic())
        throw InvalidArgument("cyclotomic-product test expects a monic polynomial");
    if (f.degree() < 1)
        throw InvalidArgument("cyclotomic-product test expects positive degree");
    // phi(d) >= sqrt(d/2), so phi(d) <= n forces d <= 2n^2.
    const unsigned n = static_cast<unsigned>(f.degree());
    const unsigned d_max = 2 * n * n;
    IntPolynomial rest = f;
    for (unsigned d = 1; d <= d_max && rest.degree() > 0; ++d) {
        if (euler_phi(d) > static_cast<unsigned>(rest.degree()))
            continue;
        const IntPolynomial phi = cyclotomic_by_mobius(d);
        while (rest.degree() >= phi.degree()) {
            auto [q, r] = divmod_monic(rest, phi);
            if (!r.is_zero())
                break;
            rest = std::move(q);
        }
    }
    return rest == IntPolynomial::constant(1);
}

} // namespace zdense
