#include "oracles.hpp"

#include "zdense/error.hpp"
#include "zdense/zariski.hpp"

#include <doctest.h>

using namespace zdense;

namespace {

std::vector<std::vector<std::int64_t>> as_int64(const std::vector<IntegerMatrix>& mats)
{
    std::vector<std::vector<std::int64_t>> out;
    for (const auto& m : mats) {
        std::vector<std::int64_t> v;
        for (const auto& e : m.entries())
            v.push_back(e.get_si());
        out.push_back(v);
    }
    return out;
}

const IntegerMatrix kS { { 0, -1 }, { 1, 0 } };
const IntegerMatrix kT { { 1, 1 }, { 0, 1 } };

} // namespace

TEST_SUITE("zariski")
{
    TEST_CASE("Burnside examples")
    {
        const std::vector<IntegerMatrix> st { kS, kT };
        const auto full = is_irreducible_algebra(st, 2);
        CHECK(full.irreducible);
        CHECK(full.algebra_dimension == 4);

        const std::vector<IntegerMatrix> upper { kT, IntegerMatrix { { 1, 2 }, { 0, 1 } } };
        const auto tri = is_irreducible_algebra(upper, 2);
        CHECK_FALSE(tri.irreducible);
        CHECK(tri.algebra_dimension == 2);

        const std::vector<IntegerMatrix> heis { IntegerMatrix::elementary(3, 0, 1), IntegerMatrix::elementary(3, 1, 2) };
        CHECK_FALSE(is_irreducible_algebra(heis, 3).irreducible);
        CHECK(is_irreducible_algebra(heis, 3).algebra_dimension == 4); // I, E12, E23, E13

        // S alone spans Q[i], which is irreducible over Q but not absolutely.
        const std::vector<IntegerMatrix> s_only { kS };
        CHECK_FALSE(is_irreducible_algebra(s_only, 2).irreducible);
    }

    TEST_CASE("Burnside matches the word-span oracle")
    {
        std::mt19937_64 rng(51);
        for (int t = 0; t < 40; ++t) {
            const std::size_t dim = t % 2 ? 2 : 3;
            std::vector<IntegerMatrix> gens;
            for (int k = 0; k < 2; ++k)
                gens.push_back(oracle::random_matrix(rng, dim, -2, 2));
            const auto r = is_irreducible_algebra(gens, dim);
            const std::size_t span = oracle::word_span_dimension(as_int64(gens), dim, 2 * dim * dim);
            CHECK(r.algebra_dimension == span);
            CHECK(r.irreducible == (span == dim * dim));
        }
    }

    TEST_CASE("adjoint basis sizes and coordinates")
    {
        CHECK(AdjointBasis(GroupKind::SpecialLinear, 3).size() == 8);
        CHECK(AdjointBasis(GroupKind::Symplectic, 4).size() == 10);
        CHECK(AdjointBasis(GroupKind::Symplectic, 6).size() == 21);
        const AdjointBasis sl2(GroupKind::SpecialLinear, 2);
        CHECK(sl2.coordinates(IntegerMatrix { { 3, 5 }, { 7, -3 } }) == std::vector<Integer> { 5, 3, 7 });
        CHECK_THROWS_AS(sl2.coordinates(IntegerMatrix { { 1, 0 }, { 0, 0 } }), InvalidArgument);
        const AdjointBasis sp4(GroupKind::Symplectic, 4);
        for (std::size_t j = 0; j < sp4.size(); ++j) {
            std::vector<Integer> e(sp4.size(), 0);
            e[j] = 1;
            CHECK(sp4.coordinates(sp4.elements()[j]) == e);
        }
        CHECK_THROWS_AS(sp4.coordinates(IntegerMatrix::elementary(4, 0, 3) - IntegerMatrix::identity(4)),
            InvalidArgument);
    }

    TEST_CASE("adjoint of T by hand")
    {
        const AdjointBasis sl2(GroupKind::SpecialLinear, 2);
        CHECK(adjoint_matrix(sl2, kT, adjugate_inverse(kT)) == IntegerMatrix { { 1, -2, -1 }, { 0, 1, 1 }, { 0, 0, 1 } });
    }

    TEST_CASE("adjoint representation is a homomorphism")
    {
        Rng rng(52);
        const GeneratorSet sl3 = validate(GroupKind::SpecialLinear, 3, oracle::sl_elementary_generators(3));
        const GeneratorSet sp4 = validate(GroupKind::Symplectic, 4, oracle::sp4_standard_generators());
        for (const GeneratorSet* gs : { &sl3, &sp4 }) {
            const AdjointBasis basis(gs->kind(), gs->dim());
            for (int t = 0; t < 20; ++t) {
                const IntegerMatrix g = random_word(*gs, 6, rng), h = random_word(*gs, 6, rng);
                const IntegerMatrix gi = adjugate_inverse(g), hi = adjugate_inverse(h);
                const IntegerMatrix ad_g = adjoint_matrix(basis, g, gi);
                const IntegerMatrix ad_h = adjoint_matrix(basis, h, hi);
                CHECK(adjoint_matrix(basis, g * h, hi * gi) == ad_g * ad_h);
                CHECK(ad_g * adjoint_matrix(basis, gi, g) == IntegerMatrix::identity(basis.size()));
                CHECK(determinant(ad_g) == 1);
            }
        }
    }

    TEST_CASE("word length")
    {
        CHECK(word_length_for(0.5, 10) == 16);
        CHECK(word_length_for(1e-6, 10) == 139);
    }

    TEST_CASE("Weyl-group density examples")
    {
        Rng rng(53);
        const GeneratorSet st = validate(GroupKind::SpecialLinear, 2, { kS, kT });
        const DensityVerdict dense = zariski_dense(st, 1e-6, rng);
        CHECK(dense.dense);
        CHECK(dense.certainty == Certainty::Certain);

        const GeneratorSet heis = validate(GroupKind::SpecialLinear, 3,
            { IntegerMatrix::elementary(3, 0, 1), IntegerMatrix::elementary(3, 1, 2) });
        const DensityVerdict no = zariski_dense(heis, 1e-6, rng);
        CHECK_FALSE(no.dense);
        CHECK(no.certainty == Certainty::MonteCarlo);

        const GeneratorSet comm = validate(GroupKind::SpecialLinear, 2, { kT, IntegerMatrix { { 1, 2 }, { 0, 1 } } });
        const DensityVerdict c = zariski_dense(comm, 1e-6, rng);
        CHECK_FALSE(c.dense);

        const GeneratorSet s_only = validate(GroupKind::SpecialLinear, 2, { kS });
        CHECK_FALSE(zariski_dense(s_only, 1e-6, rng).dense);

        CHECK_THROWS_AS(zariski_dense(st, 0.0, rng), InvalidArgument);
        CHECK_THROWS_AS(zariski_dense(st, 1.0, rng), InvalidArgument);
    }

    TEST_CASE("symplectic density requires an irreducible standard representation")
    {
        Rng rng(54);
        const GeneratorSet sp4 = validate(GroupKind::Symplectic, 4, oracle::sp4_standard_generators());
        DensityOptions opt;
        opt.word_length = 60;
        int hits = 0;
        for (int t = 0; t < 5; ++t)
            hits += zariski_dense(sp4, 1e-6, rng, opt).dense;
        CHECK(hits >= 3);

        // SL(2) x SL(2) sitting block-diagonally in Sp(4).
        const std::vector<IntegerMatrix> block {
            { { 1, 0, 1, 0 }, { 0, 1, 0, 0 }, { 0, 0, 1, 0 }, { 0, 0, 0, 1 } },
            { { 1, 0, 0, 0 }, { 0, 1, 0, 0 }, { -1, 0, 1, 0 }, { 0, 0, 0, 1 } },
            { { 1, 0, 0, 0 }, { 0, 1, 0, 1 }, { 0, 0, 1, 0 }, { 0, 0, 0, 1 } },
            { { 1, 0, 0, 0 }, { 0, 1, 0, 0 }, { 0, 0, 1, 0 }, { 0, -1, 0, 1 } },
        };
        CHECK_FALSE(is_irreducible_algebra(block, 4).irreducible);
        const GeneratorSet bs = validate(GroupKind::Symplectic, 4, block);
        for (int t = 0; t < 3; ++t)
            CHECK_FALSE(zariski_dense(bs, 1e-6, rng, opt).dense);
    }

    TEST_CASE("adjoint density examples")
    {
        Rng rng(55);
        const GeneratorSet st = validate(GroupKind::SpecialLinear, 2, { kS, kT });
        CHECK(general_zariski_dense(st, 1e-6, rng).dense);
        const GeneratorSet sl3 = validate(GroupKind::SpecialLinear, 3, oracle::sl_elementary_generators(3));
        CHECK(general_zariski_dense(sl3, 1e-6, rng).dense);
        const GeneratorSet heis = validate(GroupKind::SpecialLinear, 3,
            { IntegerMatrix::elementary(3, 0, 1), IntegerMatrix::elementary(3, 1, 2) });
        CHECK_FALSE(general_zariski_dense(heis, 1e-6, rng).dense);
    }

    TEST_CASE("seeded runs are reproducible")
    {
        const GeneratorSet st = validate(GroupKind::SpecialLinear, 2, { kS, kT });
        Rng a(99), b(99);
        const DensityVerdict va = zariski_dense(st, 1e-6, a);
        const DensityVerdict vb = zariski_dense(st, 1e-6, b);
        REQUIRE(va.trail.size() == vb.trail.size());
        for (std::size_t i = 0; i < va.trail.size(); ++i) {
            CHECK(va.trail[i].step == vb.trail[i].step);
            CHECK(va.trail[i].outcome == vb.trail[i].outcome);
            CHECK(va.trail[i].polynomial == vb.trail[i].polynomial);
            if (va.trail[i].galois && vb.trail[i].galois)
                CHECK(va.trail[i].galois->witnesses == vb.trail[i].galois->witnesses);
        }
    }
}
