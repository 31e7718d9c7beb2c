#include "burau4/linalg.hpp"

#include <ostream>

namespace burau4
{

namespace
{

void require_context(const ModulusContext &expected, const ModulusContext &got)
{
    if (!(expected == got))
        throw ContextError("entries of a matrix or vector must share one modulus");
}

} // namespace

Vec3::Vec3(ModulusContext ctx)
    : ctx_(ctx), coords_{LaurentPoly(ctx), LaurentPoly(ctx), LaurentPoly(ctx)}
{
}

Vec3::Vec3(LaurentPoly x, LaurentPoly y, LaurentPoly z)
    : ctx_(x.context()), coords_{std::move(x), std::move(y), std::move(z)}
{
    for (const auto &c : coords_)
        require_context(ctx_, c.context());
}

Vec3 Vec3::from_ints(const std::array<long, 3> &v, ModulusContext ctx)
{
    return {LaurentPoly::constant(v[0], ctx), LaurentPoly::constant(v[1], ctx),
            LaurentPoly::constant(v[2], ctx)};
}

Mat3::Mat3(ModulusContext ctx) : ctx_(ctx)
{
    entries_.fill(LaurentPoly(ctx));
}

Mat3::Mat3(std::array<LaurentPoly, 9> entries) : ctx_(entries[0].context()), entries_(std::move(entries))
{
    for (const auto &e : entries_)
        require_context(ctx_, e.context());
}

Mat3 Mat3::identity(ModulusContext ctx)
{
    return scalar(LaurentPoly::one(ctx));
}

Mat3 Mat3::scalar(const LaurentPoly &s)
{
    Mat3 m(s.context());
    for (std::size_t i = 0; i < 3; ++i)
        m.entries_[4 * i] = s;
    return m;
}

Mat3 Mat3::from_ints(const std::array<long, 9> &v, ModulusContext ctx)
{
    std::array<LaurentPoly, 9> e;
    for (std::size_t i = 0; i < 9; ++i)
        e[i] = LaurentPoly::constant(v[i], ctx);
    return Mat3(std::move(e));
}

Mat3 Mat3::transpose() const
{
    std::array<LaurentPoly, 9> e;
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c)
            e[3 * c + r] = entries_[3 * r + c];
    return Mat3(std::move(e));
}

Mat3 operator+(const Mat3 &a, const Mat3 &b)
{
    std::array<LaurentPoly, 9> e;
    for (std::size_t i = 0; i < 9; ++i)
        e[i] = a.entries()[i] + b.entries()[i];
    return Mat3(std::move(e));
}

Mat3 operator-(const Mat3 &a, const Mat3 &b)
{
    std::array<LaurentPoly, 9> e;
    for (std::size_t i = 0; i < 9; ++i)
        e[i] = a.entries()[i] - b.entries()[i];
    return Mat3(std::move(e));
}

Mat3 operator*(const Mat3 &a, const Mat3 &b)
{
    require_context(a.context(), b.context());
    std::array<LaurentPoly, 9> e;
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c)
        {
            LaurentPoly acc(a.context());
            for (std::size_t k = 0; k < 3; ++k)
                if (!a(r, k).is_zero() && !b(k, c).is_zero())
                    acc += a(r, k) * b(k, c);
            e[3 * r + c] = std::move(acc);
        }
    return Mat3(std::move(e));
}

Vec3 operator*(const Mat3 &a, const Vec3 &v)
{
    require_context(a.context(), v.context());
    std::array<LaurentPoly, 3> out;
    for (std::size_t r = 0; r < 3; ++r)
    {
        LaurentPoly acc(a.context());
        for (std::size_t k = 0; k < 3; ++k)
            if (!a(r, k).is_zero() && !v[k].is_zero())
                acc += a(r, k) * v[k];
        out[r] = std::move(acc);
    }
    return {std::move(out[0]), std::move(out[1]), std::move(out[2])};
}

Mat3 operator*(const LaurentPoly &s, const Mat3 &a)
{
    std::array<LaurentPoly, 9> e;
    for (std::size_t i = 0; i < 9; ++i)
        e[i] = s * a.entries()[i];
    return Mat3(std::move(e));
}

LaurentPoly det(const Mat3 &a)
{
    return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
           a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
           a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

Mat3 adjugate(const Mat3 &a)
{
    // adj(a)(r, c) is the (c, r) cofactor.
    std::array<LaurentPoly, 9> e;
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c)
        {
            const std::size_t r0 = (c + 1) % 3, r1 = (c + 2) % 3;
            const std::size_t c0 = (r + 1) % 3, c1 = (r + 2) % 3;
            e[3 * r + c] = a(r0, c0) * a(r1, c1) - a(r0, c1) * a(r1, c0);
        }
    return Mat3(std::move(e));
}

Mat3 inverse(const Mat3 &a)
{
    const LaurentPoly d = det(a);
    if (!is_unit_monomial(d))
        throw NonUnitDeterminant("matrix is not invertible over " +
                                 (a.context().is_integers() ? std::string("Z") : "Z_" + std::to_string(a.context().p())) +
                                 "[t,t^-1]: det = " + to_string(d));
    return inverse_unit_monomial(d) * adjugate(a);
}

Mat3 mat_pow(const Mat3 &a, long k)
{
    Mat3 base = k < 0 ? inverse(a) : a;
    unsigned long e = k < 0 ? static_cast<unsigned long>(-(k + 1)) + 1 : static_cast<unsigned long>(k);
    Mat3 result = Mat3::identity(a.context());
    while (e != 0)
    {
        if (e & 1)
            result = result * base;
        e >>= 1;
        if (e != 0)
            base = base * base;
    }
    return result;
}

bool is_identity(const Mat3 &a)
{
    return a == Mat3::identity(a.context());
}

Mat3 reduce_mod(const Mat3 &a, std::int64_t p)
{
    std::array<LaurentPoly, 9> e;
    for (std::size_t i = 0; i < 9; ++i)
        e[i] = reduce_mod(a.entries()[i], p);
    return Mat3(std::move(e));
}

Vec3 reduce_mod(const Vec3 &v, std::int64_t p)
{
    return {reduce_mod(v[0], p), reduce_mod(v[1], p), reduce_mod(v[2], p)};
}

std::ostream &operator<<(std::ostream &os, const Mat3 &a)
{
    os << "[";
    for (std::size_t r = 0; r < 3; ++r)
    {
        os << (r ? "; " : "");
        for (std::size_t c = 0; c < 3; ++c)
            os << (c ? ", " : "") << a(r, c);
    }
    return os << "]";
}

std::ostream &operator<<(std::ostream &os, const Vec3 &v)
{
    return os << "(" << v[0] << ", " << v[1] << ", " << v[2] << ")";
}

} // namespace burau4
