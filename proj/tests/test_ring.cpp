#include <doctest.h>

#include "test_support.hpp"

using namespace burau4;
using namespace burau4::testing;

TEST_CASE("modulus context rejects p = 1 and negative p")
{
    CHECK_THROWS_AS(ModulusContext(1), ContextError);
    CHECK_THROWS_AS(ModulusContext(-3), ContextError);
    CHECK(ModulusContext(0).is_integers());
    CHECK(ModulusContext(6).p() == 6);
    CHECK_THROWS_AS(LaurentPoly::from_terms({{0, 1}}, ModulusContext(1)), ContextError);
}

TEST_CASE("poly_from_terms normalizes")
{
    CHECK(poly({{0, 1}}) == LaurentPoly::one());
    CHECK(poly({{0, 1}}).terms() == std::vector<std::pair<std::int64_t, Integer>>{{0, 1}});

    const auto f = poly({{-1, -1}, {1, 1}}, ModulusContext(2));
    CHECK(term_map(f) == std::map<std::int64_t, Integer>{{-1, 1}, {1, 1}});

    const auto zero = poly({{2, 3}, {2, -3}});
    CHECK(zero.is_zero());
    CHECK(zero.terms().empty());

    CHECK(poly({{3, 7}, {-2, 1}, {3, -7}}) == t_pow(-2));
}

TEST_CASE("add, sub, neg")
{
    CHECK(poly({{-1, 1}, {1, 1}}) + poly({{-1, 1}, {1, -1}}) == poly({{-1, 2}}));
    const ModulusContext z2(2);
    CHECK((poly({{1, 1}, {2, 1}}, z2) + poly({{1, 1}, {2, 1}}, z2)).is_zero());

    std::mt19937_64 rng(11);
    for (auto p : kModuli)
        for (int i = 0; i < 50; ++i)
        {
            const auto f = random_poly(rng, ModulusContext(p));
            CHECK((f + neg(f)).is_zero());
            CHECK(sub(f, f).is_zero());
        }
}

TEST_CASE("context mismatch throws")
{
    CHECK_THROWS_AS(t_pow(1) + t_pow(1, ModulusContext(3)), ContextError);
    CHECK_THROWS_AS(t_pow(1) * t_pow(1, ModulusContext(3)), ContextError);
}

TEST_CASE("mul")
{
    CHECK(poly({{-1, 1}, {1, 1}}) * poly({{-1, 1}, {1, -1}}) == poly({{-2, 1}, {2, -1}}));
    const ModulusContext z4(4);
    CHECK((poly({{1, 2}}, z4) * poly({{1, 2}}, z4)).is_zero());

    std::mt19937_64 rng(5);
    for (auto p : kModuli)
    {
        const ModulusContext ctx(p);
        for (int i = 0; i < 100; ++i)
        {
            const auto f = random_poly(rng, ctx), g = random_poly(rng, ctx);
            CHECK(f * LaurentPoly::one(ctx) == f);
            CHECK(term_map(f * g) == naive_product(f, g, p));
        }
    }
}

TEST_CASE("ring axioms hold exactly for every tested modulus")
{
    std::mt19937_64 rng(2024);
    for (auto p : kModuli)
    {
        CAPTURE(p);
        const ModulusContext ctx(p);
        for (int i = 0; i < 200; ++i)
        {
            const auto f = random_poly(rng, ctx), g = random_poly(rng, ctx), h = random_poly(rng, ctx);
            CHECK((f + g) + h == f + (g + h));
            CHECK((f * g) * h == f * (g * h));
            CHECK(f + g == g + f);
            CHECK(f * g == g * f);
            CHECK(f * (g + h) == f * g + f * h);
            CHECK(f + LaurentPoly::zero(ctx) == f);
            for (const auto &r : {f + g, f - g, f * g, -f, (f + g) * h})
                CHECK(is_normalized(r));
        }
    }
}

TEST_CASE("valuation")
{
    CHECK(valuation(poly({{-1, 1}, {2, 3}})) == Valuation(-1));
    CHECK(valuation(LaurentPoly::zero()).is_infinite());
    CHECK(valuation(poly({{0, 2}, {1, 2}}, ModulusContext(2))).is_infinite());

    CHECK(Valuation::infinity() > Valuation(1000000));
    CHECK(Valuation(-3) < Valuation(2));
    CHECK((Valuation::infinity() - 2).is_infinite());
    CHECK(Valuation(4) - 2 == Valuation(2));
    CHECK_THROWS(Valuation::infinity().value());
}

TEST_CASE("valuation of products")
{
    std::mt19937_64 rng(77);
    for (auto p : kModuli)
    {
        CAPTURE(p);
        const ModulusContext ctx(p);
        const bool domain = p == 0 || p == 2 || p == 3 || p == 5 || p == 7;
        for (int i = 0; i < 200; ++i)
        {
            const auto f = random_poly(rng, ctx), g = random_poly(rng, ctx);
            CHECK(valuation(f * g) >= valuation(f) + valuation(g));
            if (domain && !f.is_zero() && !g.is_zero())
                CHECK(valuation(f * g) == valuation(f) + valuation(g));

            // Rescaling by a unit monomial shifts the valuation exactly, also for composite p.
            const long unit = p == 0 ? -1 : (p == 4 || p == 6 ? p - 1 : 1 + i % (p - 1));
            const auto u = LaurentPoly::monomial(unit, i % 7 - 3, ctx);
            REQUIRE(is_unit_monomial(u));
            CHECK(valuation(f * u) == valuation(f) + Valuation(i % 7 - 3));
        }
    }
}

TEST_CASE("reduce_mod")
{
    CHECK(reduce_mod(poly({{-1, -1}, {1, 1}}), 2) == poly({{-1, 1}, {1, 1}}, ModulusContext(2)));
    CHECK(reduce_mod(poly({{2, 6}, {1, 1}}), 3) == t_pow(1, ModulusContext(3)));
    CHECK_THROWS_AS(reduce_mod(t_pow(1), 1), ContextError);
    CHECK_THROWS_AS(reduce_mod(t_pow(1, ModulusContext(5)), 5), ContextError);

    std::mt19937_64 rng(31337);
    for (std::int64_t p : {2, 3, 4, 5, 6, 7, 1000003})
        for (int i = 0; i < 100; ++i)
        {
            const auto f = random_poly(rng, {}, 6, 1000), g = random_poly(rng, {}, 6, 1000);
            CHECK(reduce_mod(f * g, p) == reduce_mod(f, p) * reduce_mod(g, p));
            CHECK(reduce_mod(f + g, p) == reduce_mod(f, p) + reduce_mod(g, p));
            CHECK(is_normalized(reduce_mod(f, p)));
        }
}

TEST_CASE("is_unit_monomial")
{
    CHECK(is_unit_monomial(poly({{-1, -1}})));
    CHECK_FALSE(is_unit_monomial(poly({{1, 2}}, ModulusContext(4))));
    CHECK_FALSE(is_unit_monomial(poly({{0, 1}, {1, 1}})));
    CHECK_FALSE(is_unit_monomial(LaurentPoly::zero()));
    CHECK_FALSE(is_unit_monomial(poly({{0, 2}})));
    CHECK(is_unit_monomial(poly({{3, 3}}, ModulusContext(4))));
    CHECK(is_unit_monomial(poly({{3, 5}}, ModulusContext(6))));

    const ModulusContext z7(7);
    const auto u = poly({{2, 3}}, z7);
    CHECK(u * inverse_unit_monomial(u) == LaurentPoly::one(z7));
    CHECK_THROWS(inverse_unit_monomial(poly({{1, 2}}, ModulusContext(4))));
}

TEST_CASE("big integer coefficients")
{
    LaurentPoly f = poly({{0, 3}, {1, 1}});
    LaurentPoly g = LaurentPoly::one();
    for (int i = 0; i < 60; ++i)
        g *= f;
    // (3 + t)^60 has constant term 3^60 > 2^64.
    Integer expected = 1;
    for (int i = 0; i < 60; ++i)
        expected *= 3;
    CHECK(g.coeff(0) == expected);
    CHECK(g.coeff(60) == 1);
    CHECK_FALSE(g.coeff(0).fits_slong_p());
}

TEST_CASE("to_string")
{
    CHECK(to_string(poly({{-1, -1}, {2, 3}})) == "-t^-1 + 3*t^2");
    CHECK(to_string(LaurentPoly::zero()) == "0");
    CHECK(to_string(poly({{0, 1}, {1, -1}})) == "1 - t");
}
