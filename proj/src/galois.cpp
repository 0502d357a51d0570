#include "zdense/galois.hpp"

#include "zdense/error.hpp"

#include <algorithm>
#include <cmath>

namespace zdense {

SumsetState sumset(std::span<const unsigned> parts)
{
    unsigned n = 0;
    for (unsigned p : parts) {
        if (p == 0)
            throw InvalidArgument("partition parts must be positive");
        n += p;
    }
    std::vector<char> reachable(n + 1, 0);
    reachable[0] = 1;
    unsigned reach = 0;
    for (unsigned p : parts) {
        for (unsigned s = reach + 1; s-- > 0;)
            if (reachable[s])
                reachable[s + p] = 1;
        reach += p;
    }
    SumsetState out { n, {} };
    for (unsigned s = 1; s < n; ++s)
        if (reachable[s])
            out.survivors.push_back(s);
    return out;
}

void intersect(SumsetState& running, const SumsetState& other)
{
    std::vector<unsigned> kept;
    std::set_intersection(running.survivors.begin(), running.survivors.end(), other.survivors.begin(),
        other.survivors.end(), std::back_inserter(kept));
    running.survivors = std::move(kept);
}

std::string_view to_string(GaloisAnswer a)
{
    switch (a) {
    case GaloisAnswer::ConfirmedSn:
        return "ConfirmedSn";
    case GaloisAnswer::ConfirmedHyperoctahedral:
        return "ConfirmedHyperoctahedral";
    case GaloisAnswer::Irreducible:
        return "Irreducible";
    case GaloisAnswer::NotGeneric:
        return "NotGeneric";
    }
    return "?";
}

namespace {

    void check_eps(double eps)
    {
        if (!(eps > 0.0 && eps < 1.0))
            throw InvalidArgument("epsilon must lie in (0, 1)");
    }

    std::size_t budget(double per_unit, double eps)
    {
        check_eps(eps);
        return static_cast<std::size_t>(std::max(1.0, std::ceil(per_unit * std::log(1.0 / eps))));
    }

} // namespace

std::size_t transitivity_trials(double eps)
{
    check_eps(eps);
    return 4 * static_cast<std::size_t>(std::max(1.0, std::ceil(std::log(1.0 / eps) / std::log(20.0))));
}

std::size_t transposition_trials(unsigned n, double eps)
{
    const double m = std::max(n, 3u);
    return budget(2.0 * std::sqrt(m - 1.0) / 0.8, eps);
}

std::size_t long_cycle_trials(unsigned n, double eps)
{
    const double m = std::max(n, 2u);
    return budget(std::log(m) / std::log(2.0), eps);
}

bool has_transposition_pattern(const DegreeMultiset& d)
{
    if (d.count(2) != 1)
        return false;
    return std::all_of(d.degrees().begin(), d.degrees().end(), [](unsigned k) { return k == 2 || k % 2 == 1; });
}

bool has_long_prime_cycle(const DegreeMultiset& d, unsigned n, int upper_slack)
{
    const long upper = static_cast<long>(n) - upper_slack;
    return std::any_of(d.degrees().begin(), d.degrees().end(), [&](unsigned l) {
        return 2 * l > n && static_cast<long>(l) < upper && l >= 2 && is_prime(std::uint64_t { l });
    });
}

namespace {

    // Frobenius samples for one polynomial. Sample i draws its prime from the
    // child stream i of a base seed, so samples are independent of each other
    // and of evaluation order.
    //
    // All Frobenius classes of f live in the one Galois group of f, so the
    // cycle types observed at different primes may be combined into a single
    // certificate.
    class FrobeniusSampler {
    public:
        FrobeniusSampler(const IntPolynomial& f, const Integer& disc, const PrimeInterval& primes, Rng& rng)
            : f_(f)
            , disc_(disc)
            , primes_(primes)
            , base_(rng())
        {
        }

        Witness draw()
        {
            Rng stream = derive_stream(base_, drawn_++);
            const std::uint64_t q = random_prime_avoiding(disc_, primes_.lo, primes_.hi, stream);
            return { q, factor_degrees_mod(f_, q) };
        }

        std::size_t drawn() const noexcept { return drawn_; }

    private:
        const IntPolynomial& f_;
        const Integer& disc_;
        PrimeInterval primes_;
        std::uint64_t base_;
        std::size_t drawn_ = 0;
    };

    void check_input(const IntPolynomial& f)
    {
        if (f.degree() < 1)
            throw InvalidArgument("polynomial must have positive degree");
        if (!f.is_monic())
            throw InvalidArgument("polynomial must be monic");
    }

    GaloisVerdict transitivity(const IntPolynomial& f, const Integer& disc, double eps, Rng& rng,
        const PrimeInterval& primes)
    {
        const unsigned n = static_cast<unsigned>(f.degree());
        GaloisVerdict v;
        v.epsilon = eps;
        SumsetState running { n, {} };
        for (unsigned s = 1; s < n; ++s)
            running.survivors.push_back(s);

        FrobeniusSampler sampler(f, disc, primes, rng);
        const std::size_t trials = transitivity_trials(eps);
        for (std::size_t i = 0; i < trials; ++i) {
            Witness w = sampler.draw();
            intersect(running, sumset(w.degrees.degrees()));
            v.witnesses.push_back(std::move(w));
            if (running.survivors.empty()) {
                v.answer = GaloisAnswer::Irreducible;
                v.trials_used = sampler.drawn();
                v.reason = "sumsets of the sampled cycle types have empty intersection";
                return v;
            }
        }
        v.answer = GaloisAnswer::NotGeneric;
        v.trials_used = sampler.drawn();
        v.reason = "sumset intersection still contains " + std::to_string(running.survivors.front()) + " after "
            + std::to_string(trials) + " samples";
        return v;
    }

    /// Samples until `hit` accepts a cycle type; the hit is appended to `out`.
    template <class Pred>
    bool sample_until(FrobeniusSampler& sampler, std::size_t trials, Pred hit, std::vector<Witness>& out)
    {
        for (std::size_t i = 0; i < trials; ++i) {
            Witness w = sampler.draw();
            if (hit(w.degrees)) {
                out.push_back(std::move(w));
                return true;
            }
        }
        return false;
    }

    GaloisVerdict not_generic(GaloisVerdict v, std::string reason)
    {
        v.answer = GaloisAnswer::NotGeneric;
        v.reason = std::move(reason);
        return v;
    }

    GaloisVerdict sn_with_disc(const IntPolynomial& f, const Integer& disc, double eps, Rng& rng,
        const PrimeInterval& primes)
    {
        const unsigned n = static_cast<unsigned>(f.degree());
        GaloisVerdict v;
        v.epsilon = eps;
        if (disc == 0)
            return not_generic(std::move(v), "discriminant is zero (repeated roots)");

        // S_1 and S_2 are exactly the transitive groups of their degree.
        const double stage_eps = n <= 2 ? eps : eps / 3.0;
        GaloisVerdict trans = transitivity(f, disc, stage_eps, rng, primes);
        v.witnesses = std::move(trans.witnesses);
        v.trials_used = trans.trials_used;
        if (trans.answer != GaloisAnswer::Irreducible)
            return not_generic(std::move(v), "not transitive: " + trans.reason);
        if (n <= 2) {
            v.answer = GaloisAnswer::ConfirmedSn;
            v.reason = "irreducible of degree " + std::to_string(n);
            return v;
        }

        // Primitivity. A transitive group of prime degree is primitive. Otherwise
        // a prime cycle of length l > n/2 cannot preserve a nontrivial block
        // system; below degree 13 any such l <= n is accepted.
        FrobeniusSampler primitivity(f, disc, primes, rng);
        if (!is_prime(std::uint64_t { n })) {
            const int slack = n < 13 ? -1 : 4;
            const std::size_t trials = long_cycle_trials(n, stage_eps);
            const bool hit = sample_until(
                primitivity, trials, [&](const DegreeMultiset& d) { return has_long_prime_cycle(d, n, slack); },
                v.witnesses);
            v.trials_used += primitivity.drawn();
            if (!hit)
                return not_generic(std::move(v),
                    "no long prime cycle for primitivity after " + std::to_string(trials) + " samples");
        }

        FrobeniusSampler last(f, disc, primes, rng);
        if (n < 13) {
            // Primitive + transposition => S_n. A cycle type (2, odd, ..., odd)
            // raised to the product of its odd parts is a transposition.
            const std::size_t trials = transposition_trials(n, stage_eps);
            const bool hit = sample_until(last, trials, has_transposition_pattern, v.witnesses);
            v.trials_used += last.drawn();
            if (!hit)
                return not_generic(
                    std::move(v), "no transposition-type Frobenius after " + std::to_string(trials) + " samples");
            v.answer = GaloisAnswer::ConfirmedSn;
            v.reason = "transitive, primitive, contains a transposition";
            return v;
        }

        // Primitive + prime cycle in (n/2, n-5) => A_n or S_n; a non-square
        // discriminant rules out A_n.
        if (is_perfect_square(disc))
            return not_generic(std::move(v), "discriminant is a perfect square");
        const std::size_t trials = long_cycle_trials(n, stage_eps);
        const bool hit = sample_until(
            last, trials, [&](const DegreeMultiset& d) { return has_long_prime_cycle(d, n, 5); }, v.witnesses);
        v.trials_used += last.drawn();
        if (!hit)
            return not_generic(std::move(v), "no prime cycle in (n/2, n-5) after " + std::to_string(trials) + " samples");
        v.answer = GaloisAnswer::ConfirmedSn;
        v.reason = "transitive, primitive, long prime cycle, non-square discriminant";
        return v;
    }

} // namespace

GaloisVerdict is_transitive(const IntPolynomial& f, double eps, Rng& rng, const PrimeInterval& primes)
{
    check_input(f);
    check_eps(eps);
    const Integer disc = discriminant(f);
    if (disc == 0)
        throw InvalidArgument("transitivity test needs a squarefree polynomial (discriminant is zero)");
    return transitivity(f, disc, eps, rng, primes);
}

GaloisVerdict is_sn(const IntPolynomial& f, double eps, Rng& rng, const PrimeInterval& primes)
{
    check_input(f);
    check_eps(eps);
    return sn_with_disc(f, discriminant(f), eps, rng, primes);
}

GaloisVerdict is_hyperoctahedral(const IntPolynomial& f, double eps, Rng& rng, const PrimeInterval& primes)
{
    check_input(f);
    check_eps(eps);
    if (f.degree() % 2 != 0)
        throw InvalidArgument("hyperoctahedral test needs even degree");
    if (!is_reciprocal(f))
        throw InvalidArgument("hyperoctahedral test needs a reciprocal polynomial");

    GaloisVerdict v;
    v.epsilon = eps;
    const Integer disc = discriminant(f);
    if (disc == 0)
        return not_generic(std::move(v), "discriminant is zero (repeated roots)");

    // The Galois group of the trace polynomial is the image of G(f) in S_n.
    v.trace_polynomial = trace_polynomial(f);
    GaloisVerdict image = is_sn(v.trace_polynomial, eps / 2.0, rng, primes);
    v.trace_witnesses = std::move(image.witnesses);
    v.trials_used = image.trials_used;
    if (image.answer != GaloisAnswer::ConfirmedSn)
        return not_generic(std::move(v), "trace polynomial: " + image.reason);

    // G(f) surjects onto S_n; one transposition then gives all of C_2 wr S_n.
    const unsigned n = static_cast<unsigned>(v.trace_polynomial.degree());
    FrobeniusSampler sampler(f, disc, primes, rng);
    const std::size_t trials = transposition_trials(n, eps / 2.0);
    const bool hit = sample_until(sampler, trials, has_transposition_pattern, v.witnesses);
    v.trials_used += sampler.drawn();
    if (!hit)
        return not_generic(std::move(v), "no transposition-type Frobenius after " + std::to_string(trials) + " samples");
    v.answer = GaloisAnswer::ConfirmedHyperoctahedral;
    v.reason = "trace polynomial has Galois group S_" + std::to_string(n) + " and f has a transposition";
    return v;
}

} // namespace zdense
