#include <doctest.h>

#include "burau4/burau.hpp"
#include "test_support.hpp"

using namespace burau4;
using namespace burau4::testing;

namespace
{

/// I + f E_rc, r != c: determinant 1 over any ring.
Mat3 elementary(std::size_t r, std::size_t c, const LaurentPoly &f)
{
    std::array<LaurentPoly, 9> e = Mat3::identity(f.context()).entries();
    e[3 * r + c] = f;
    return Mat3(std::move(e));
}

Mat3 random_invertible(std::mt19937_64 &rng, ModulusContext ctx)
{
    Mat3 m = Mat3::identity(ctx);
    std::uniform_int_distribution<std::size_t> idx(0, 2);
    for (int i = 0; i < 4; ++i)
    {
        std::size_t r = idx(rng), c = idx(rng);
        if (r == c)
            c = (c + 1) % 3;
        m = m * elementary(r, c, random_poly(rng, ctx, 2, 3));
    }
    // diagonal unit monomial factor
    const long unit = ctx.is_integers() ? -1 : ctx.p() - 1;
    std::array<LaurentPoly, 9> d = Mat3::identity(ctx).entries();
    d[4] = LaurentPoly::monomial(unit, 2, ctx);
    return m * Mat3(std::move(d));
}

} // namespace

TEST_CASE("products with the identity and the constants")
{
    const auto &k = constants_for({});
    const Vec3 e3 = Vec3::from_ints({0, 0, 1});
    CHECK(Mat3::identity() * e3 == e3);
    CHECK((k.T * k.T) * e3 == Vec3::from_ints({1, 0, 0}));
    CHECK(k.B * e3 == Vec3(LaurentPoly::zero(), LaurentPoly::zero(), poly({{1, -1}})));
}

TEST_CASE("det")
{
    const auto &k = constants_for({});
    CHECK(det(Mat3::identity()) == LaurentPoly::one());
    CHECK(det(k.B) == LaurentPoly::one());
    CHECK(det(k.T) == poly({{0, -1}}));
    CHECK(det(k.A) == LaurentPoly::one());
}

TEST_CASE("inverse")
{
    const auto &k = constants_for({});
    CHECK(inverse(k.T) == k.T_inv);
    CHECK(inverse(Mat3::identity()) == Mat3::identity());

    const ModulusContext z4(4);
    std::array<LaurentPoly, 9> e = Mat3::identity(z4).entries();
    e[0] = poly({{1, 2}}, z4);
    const Mat3 singular(std::move(e));
    REQUIRE(det(singular) == poly({{1, 2}}, z4));
    CHECK_THROWS_AS(inverse(singular), NonUnitDeterminant);
    CHECK_THROWS_AS(mat_pow(singular, -1), NonUnitDeterminant);
    CHECK_THROWS_AS(inverse(k.T_B), NonUnitDeterminant);
}

TEST_CASE("mat_pow")
{
    const auto &k = constants_for({});
    CHECK(mat_pow(k.T, 4) == Mat3::identity());
    CHECK(mat_pow(k.B, 0) == Mat3::identity());
    CHECK(mat_pow(k.T, -1) == inverse(k.T));
    CHECK(mat_pow(k.B, 5) == k.B * k.B * k.B * k.B * k.B);
    CHECK(mat_pow(k.B, -3) == inverse(k.B * k.B * k.B));
}

TEST_CASE("is_identity")
{
    const auto &k = constants_for({});
    CHECK(is_identity(Mat3::identity()));
    CHECK_FALSE(is_identity(k.B));
    const Mat3 T2 = k.T * k.T;
    CHECK(is_identity(T2 * T2));
    CHECK_FALSE(is_identity(T2));
}

TEST_CASE("algebraic properties on random matrices")
{
    std::mt19937_64 rng(99);
    for (auto p : kModuli)
    {
        CAPTURE(p);
        const ModulusContext ctx(p);
        for (int i = 0; i < 40; ++i)
        {
            const Mat3 a = random_mat(rng, ctx), b = random_mat(rng, ctx), c = random_mat(rng, ctx);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * Mat3::identity(ctx) == a);
            CHECK(Mat3::identity(ctx) * a == a);
            CHECK(det(a * b) == det(a) * det(b));
            CHECK(a * adjugate(a) == Mat3::scalar(det(a)));

            const Mat3 u = random_invertible(rng, ctx);
            REQUIRE(is_unit_monomial(det(u)));
            CHECK(is_identity(u * inverse(u)));
            CHECK(is_identity(inverse(u) * u));
        }
    }
}

TEST_CASE("reduce_mod is multiplicative on matrices")
{
    std::mt19937_64 rng(4);
    for (std::int64_t p : {2, 3, 4, 5, 6, 7})
        for (int i = 0; i < 30; ++i)
        {
            const Mat3 a = random_mat(rng, {}), b = random_mat(rng, {});
            CHECK(reduce_mod(a * b, p) == reduce_mod(a, p) * reduce_mod(b, p));
        }
}

TEST_CASE("uniform context is enforced")
{
    CHECK_THROWS_AS(Vec3(t_pow(1), t_pow(1, ModulusContext(2)), t_pow(0)), ContextError);
    CHECK_THROWS_AS(Mat3::identity() * Mat3::identity(ModulusContext(3)), ContextError);
}
