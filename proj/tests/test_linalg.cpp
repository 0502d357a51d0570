#include "oracles.hpp"

#include "zdense/error.hpp"
#include "zdense/linalg.hpp"

#include <doctest.h>

using namespace zdense;

TEST_SUITE("linalg")
{
    TEST_CASE("multiply and adjugate examples")
    {
        const IntegerMatrix s { { 0, -1 }, { 1, 0 } };
        const IntegerMatrix t { { 1, 1 }, { 0, 1 } };
        CHECK(multiply(s, t) == IntegerMatrix { { 0, -1 }, { 1, 1 } });
        CHECK(adjugate_inverse(t) == IntegerMatrix { { 1, -1 }, { 0, 1 } });
        CHECK(adjugate_inverse(s) == IntegerMatrix { { 0, 1 }, { -1, 0 } });
        CHECK_THROWS_AS(adjugate_inverse(IntegerMatrix { { 2, 0 }, { 0, 1 } }), InvalidArgument);
        CHECK_THROWS_AS(multiply(s, IntegerMatrix::identity(3)), InvalidArgument);
    }

    TEST_CASE("determinant and characteristic polynomial examples")
    {
        CHECK(determinant(IntegerMatrix { { 2, 1 }, { 7, 4 } }) == 1);
        CHECK(determinant(IntegerMatrix { { 0, 1, 0 }, { 0, 0, 1 }, { 1, 0, 0 } }) == 1);
        CHECK(characteristic_polynomial(IntegerMatrix { { 2, 1 }, { 1, 1 } }) == IntPolynomial { 1, -3, 1 });
        CHECK(characteristic_polynomial(IntegerMatrix { { 0, -1 }, { 1, 0 } }) == IntPolynomial { 1, 0, 1 });
        CHECK(characteristic_polynomial(IntegerMatrix::identity(3)) == IntPolynomial { -1, 3, -3, 1 });
    }

    TEST_CASE("Berkowitz agrees with cofactor expansion")
    {
        std::mt19937_64 rng(21);
        std::uniform_int_distribution<std::size_t> dim(1, 5);
        for (int t = 0; t < 200; ++t) {
            const IntegerMatrix a = oracle::random_matrix(rng, dim(rng), -9, 9);
            CHECK(characteristic_polynomial(a) == oracle::charpoly_cofactor(a));
            CHECK(determinant(a) == oracle::rational_det([&] {
                std::vector<std::vector<mpq_class>> m(a.dim(), std::vector<mpq_class>(a.dim()));
                for (std::size_t i = 0; i < a.dim(); ++i)
                    for (std::size_t j = 0; j < a.dim(); ++j)
                        m[i][j] = mpq_class(a(i, j));
                return m;
            }()));
        }
    }

    TEST_CASE("validation")
    {
        CHECK_NOTHROW(validate(GroupKind::Symplectic, 4, { IntegerMatrix::elementary(4, 0, 2) }));
        CHECK_THROWS_AS(validate(GroupKind::Symplectic, 4, { IntegerMatrix::elementary(4, 0, 3) }), ValidationError);
        CHECK_THROWS_AS(validate(GroupKind::Symplectic, 3, { IntegerMatrix::identity(3) }), ValidationError);
        CHECK_THROWS_AS(validate(GroupKind::SpecialLinear, 2, {}), ValidationError);
        CHECK_THROWS_AS(validate(GroupKind::SpecialLinear, 2, { IntegerMatrix { { 2, 0 }, { 0, 1 } } }),
            ValidationError);
        CHECK_THROWS_AS(validate(GroupKind::SpecialLinear, 3, { IntegerMatrix::identity(2) }), ValidationError);
        CHECK_THROWS_AS(validate(GroupKind::SpecialLinear, 0, { IntegerMatrix::identity(2) }), ValidationError);
        for (const auto& g : oracle::sp4_standard_generators())
            CHECK(is_symplectic(g));
        const GeneratorSet gs = validate(GroupKind::SpecialLinear, 2, { IntegerMatrix { { 1, 1 }, { 0, 1 } } });
        CHECK(gs.letters().size() == 2);
        CHECK(gs.norm_bound() == 2);
    }

    TEST_CASE("random words")
    {
        const IntegerMatrix t { { 1, 1 }, { 0, 1 } };
        const GeneratorSet single = validate(GroupKind::SpecialLinear, 2, { t });
        Rng rng(3);
        for (int i = 0; i < 50; ++i) {
            const IntegerMatrix w = random_word(single, 2, rng);
            const bool ok = w == t * t || w == IntegerMatrix::identity(2) || w == adjugate_inverse(t * t);
            CHECK(ok);
        }

        const GeneratorSet sp = validate(GroupKind::Symplectic, 4, oracle::sp4_standard_generators());
        const GeneratorSet sl = validate(GroupKind::SpecialLinear, 3, oracle::sl_elementary_generators(3));
        for (const GeneratorSet* gs : { &sp, &sl }) {
            for (std::size_t len : { 1u, 5u, 12u }) {
                const IntegerMatrix w = random_word(*gs, len, rng);
                CHECK(determinant(w) == 1);
                const Integer bound = power(Integer(static_cast<unsigned long>(gs->dim())) * gs->norm_bound(),
                    static_cast<unsigned long>(len));
                CHECK(w.max_abs_entry() <= bound);
                if (gs->kind() == GroupKind::Symplectic)
                    CHECK(is_symplectic(w));
            }
        }
    }

    TEST_CASE("commutation")
    {
        const IntegerMatrix a { { 1, 1 }, { 0, 1 } };
        const IntegerMatrix b { { 1, 2 }, { 0, 1 } };
        const IntegerMatrix s { { 0, -1 }, { 1, 0 } };
        CHECK(commutes(a, b));
        CHECK_FALSE(commutes(a, s));
    }

    TEST_CASE("symplectic words have reciprocal characteristic polynomials")
    {
        const GeneratorSet sp = validate(GroupKind::Symplectic, 4, oracle::sp4_standard_generators());
        Rng rng(5);
        for (int i = 0; i < 50; ++i)
            CHECK(is_reciprocal(characteristic_polynomial(random_word(sp, 20, rng))));
    }
}
