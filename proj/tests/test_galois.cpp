#include "oracles.hpp"

#include "zdense/error.hpp"
#include "zdense/galois.hpp"

#include <doctest.h>

#include <cmath>

using namespace zdense;

namespace {

SumsetState sums(std::vector<unsigned> parts)
{
    return sumset(parts);
}

} // namespace

TEST_SUITE("galois")
{
    TEST_CASE("sumset examples")
    {
        CHECK(sums({ 3 }).survivors.empty());
        CHECK(sums({ 1, 2 }).survivors == std::vector<unsigned> { 1, 2 });
        CHECK(sums({ 1, 1, 2 }).survivors == std::vector<unsigned> { 1, 2, 3 });
        CHECK(sums({ 2, 2 }).survivors == std::vector<unsigned> { 2 });
        CHECK(sums({ 1, 1, 2 }).n == 4);
    }

    TEST_CASE("sumset against brute force")
    {
        std::mt19937_64 rng(41);
        std::uniform_int_distribution<unsigned> total(1, 16);
        for (int t = 0; t < 200; ++t) {
            unsigned left = total(rng);
            std::vector<unsigned> parts;
            while (left > 0) {
                const unsigned p = std::uniform_int_distribution<unsigned>(1, left)(rng);
                parts.push_back(p);
                left -= p;
            }
            CHECK(sumset(parts).survivors == oracle::sumset_bruteforce(parts));
        }
    }

    TEST_CASE("intersection is monotone")
    {
        SumsetState running = sums({ 1, 1, 1, 1, 1, 1 });
        std::size_t prev = running.survivors.size();
        for (const auto& p : std::vector<std::vector<unsigned>> { { 2, 2, 2 }, { 1, 5 }, { 3, 3 }, { 6 } }) {
            intersect(running, sums(p));
            CHECK(running.survivors.size() <= prev);
            prev = running.survivors.size();
        }
        CHECK(running.survivors.empty());
    }

    TEST_CASE("pattern predicates")
    {
        CHECK(has_transposition_pattern(DegreeMultiset({ 1, 2 })));
        CHECK(has_transposition_pattern(DegreeMultiset({ 1, 2, 3, 5 })));
        CHECK_FALSE(has_transposition_pattern(DegreeMultiset({ 2, 2 })));
        CHECK_FALSE(has_transposition_pattern(DegreeMultiset({ 2, 4 })));
        CHECK_FALSE(has_transposition_pattern(DegreeMultiset({ 1, 1, 1 })));
        CHECK(has_long_prime_cycle(DegreeMultiset({ 1, 1, 1, 7 }), 10, 0));
        CHECK_FALSE(has_long_prime_cycle(DegreeMultiset({ 1, 1, 1, 7 }), 10, 3));
        CHECK_FALSE(has_long_prime_cycle(DegreeMultiset({ 5, 5 }), 10, 0));
        CHECK(has_long_prime_cycle(DegreeMultiset({ 3 }), 3, -1));
    }

    TEST_CASE("trial budgets")
    {
        const double eps = 1e-6;
        CHECK(transitivity_trials(eps) == 4 * static_cast<std::size_t>(std::ceil(std::log(1 / eps) / std::log(20.0))));
        CHECK(transposition_trials(2, eps) == transposition_trials(3, eps));
        CHECK(transposition_trials(10, eps)
            == static_cast<std::size_t>(std::ceil(2 * std::sqrt(9.0) / 0.8 * std::log(1 / eps))));
        CHECK(long_cycle_trials(16, eps) == static_cast<std::size_t>(std::ceil(4 * std::log(1 / eps))));
        CHECK(transitivity_trials(1e-12) > transitivity_trials(1e-3));
    }

    TEST_CASE("transitivity")
    {
        Rng rng(7);
        CHECK(is_transitive(IntPolynomial { 1, 0, 1 }, 1e-6, rng).answer == GaloisAnswer::Irreducible);
        CHECK(is_transitive(IntPolynomial { -1, 0, 1 }, 1e-6, rng).answer == GaloisAnswer::NotGeneric);
        CHECK(is_transitive(IntPolynomial { 1, 0, 1 } * IntPolynomial { 1, 1, 1 }, 1e-6, rng).answer
            == GaloisAnswer::NotGeneric);
        CHECK_THROWS_AS(is_transitive(IntPolynomial { 1, 2, 1 }, 1e-6, rng), InvalidArgument);
    }

    TEST_CASE("S_n certification")
    {
        Rng rng(8);
        const auto sn = [&](IntPolynomial f) { return is_sn(f, 1e-6, rng).answer; };
        CHECK(sn({ -1, -1, 0, 1 }) == GaloisAnswer::ConfirmedSn);
        CHECK(sn({ -1, -2, 1, 1 }) == GaloisAnswer::NotGeneric); // cyclic cubic
        CHECK(sn({ 1, 1, 1, 1, 1 }) == GaloisAnswer::NotGeneric);
        CHECK(sn({ 1, 1, 1 }) == GaloisAnswer::ConfirmedSn);
        CHECK(sn({ 1, 0, 0, 0, 1 }) == GaloisAnswer::NotGeneric);
        CHECK(sn({ 1, 2, 1 }) == GaloisAnswer::NotGeneric);
        CHECK(sn({ -1, -1, 0, 0, 0, 1 }) == GaloisAnswer::ConfirmedSn);
        // x^13 - x - 1 and x^17 - x - 1 take the long-cycle route.
        std::vector<Integer> c13(14), c17(18);
        c13[0] = c13[1] = -1;
        c13[13] = 1;
        c17[0] = c17[1] = -1;
        c17[17] = 1;
        CHECK(sn(IntPolynomial(c13)) == GaloisAnswer::ConfirmedSn);
        CHECK(sn(IntPolynomial(c17)) == GaloisAnswer::ConfirmedSn);
        // Phi_15 has degree 8 and an abelian Galois group.
        CHECK(sn(cyclotomic(15)) == GaloisAnswer::NotGeneric);
    }

    TEST_CASE("confirmed verdicts carry checkable witnesses")
    {
        Rng rng(9);
        const IntPolynomial f { -1, -1, 0, 1 };
        const GaloisVerdict v = is_sn(f, 1e-6, rng);
        REQUIRE(v.answer == GaloisAnswer::ConfirmedSn);
        REQUIRE_FALSE(v.witnesses.empty());
        bool transposition = false;
        for (const Witness& w : v.witnesses) {
            CHECK(factor_degrees_mod(f, w.prime) == w.degrees);
            transposition = transposition || has_transposition_pattern(w.degrees);
        }
        CHECK(transposition);
    }

    TEST_CASE("hyperoctahedral certification")
    {
        Rng rng(10);
        const IntPolynomial f { 1, 3, 1, 3, 1 };
        const GaloisVerdict v = is_hyperoctahedral(f, 1e-6, rng);
        CHECK(v.answer == GaloisAnswer::ConfirmedHyperoctahedral);
        CHECK(v.trace_polynomial == IntPolynomial { -1, 3, 1 });
        CHECK(factor_degrees_mod(f, 17) == DegreeMultiset({ 1, 1, 2 }));
        CHECK(has_transposition_pattern(factor_degrees_mod(f, 17)));
        for (const Witness& w : v.witnesses)
            CHECK(factor_degrees_mod(f, w.prime) == w.degrees);
        CHECK(is_hyperoctahedral(IntPolynomial { 1, 0, 0, 0, 1 }, 1e-6, rng).answer == GaloisAnswer::NotGeneric);
        CHECK(is_hyperoctahedral(IntPolynomial { 1, 1, 1, 1, 1 }, 1e-6, rng).answer == GaloisAnswer::NotGeneric);
        CHECK_THROWS_AS(is_hyperoctahedral(IntPolynomial { 1, 1, 1, 1 }, 1e-6, rng), InvalidArgument);
        CHECK_THROWS_AS(is_hyperoctahedral(IntPolynomial { 1, 2, 3 }, 1e-6, rng), InvalidArgument);
    }

    TEST_CASE("same seed, same witnesses")
    {
        Rng a(77), b(77);
        const IntPolynomial f { 1, 3, 1, 3, 1 };
        const GaloisVerdict va = is_hyperoctahedral(f, 1e-6, a);
        const GaloisVerdict vb = is_hyperoctahedral(f, 1e-6, b);
        CHECK(va.witnesses == vb.witnesses);
        CHECK(va.trace_witnesses == vb.trace_witnesses);
    }
}
