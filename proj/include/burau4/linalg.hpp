#pragma once

#include <array>
#include <iosfwd>
#include <stdexcept>

#include "burau4/ring.hpp"

namespace burau4
{

/// Raised when a matrix is not invertible over its coefficient ring.
class NonUnitDeterminant : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

/// Column vector of three Laurent polynomials over one ring.
class Vec3
{
public:
    explicit Vec3(ModulusContext ctx = {});
    Vec3(LaurentPoly x, LaurentPoly y, LaurentPoly z);

    /// Integer constants, e.g. Vec3::from_ints({0, 0, 1}, ctx).
    static Vec3 from_ints(const std::array<long, 3> &v, ModulusContext ctx = {});

    const ModulusContext &context() const noexcept { return ctx_; }
    const LaurentPoly &operator[](std::size_t i) const { return coords_[i]; }
    const std::array<LaurentPoly, 3> &coords() const noexcept { return coords_; }

    friend bool operator==(const Vec3 &, const Vec3 &) = default;

private:
    ModulusContext ctx_;
    std::array<LaurentPoly, 3> coords_;
};

/// 3x3 matrix over Laurent polynomials, row-major, one ring for all entries.
class Mat3
{
public:
    explicit Mat3(ModulusContext ctx = {});
    explicit Mat3(std::array<LaurentPoly, 9> entries);

    static Mat3 identity(ModulusContext ctx = {});
    static Mat3 zero(ModulusContext ctx = {}) { return Mat3(ctx); }
    static Mat3 scalar(const LaurentPoly &s);
    /// Integer constants in row-major order.
    static Mat3 from_ints(const std::array<long, 9> &v, ModulusContext ctx = {});

    const ModulusContext &context() const noexcept { return ctx_; }
    const LaurentPoly &operator()(std::size_t r, std::size_t c) const { return entries_[3 * r + c]; }
    const std::array<LaurentPoly, 9> &entries() const noexcept { return entries_; }

    Mat3 transpose() const;

    friend bool operator==(const Mat3 &, const Mat3 &) = default;

private:
    ModulusContext ctx_;
    std::array<LaurentPoly, 9> entries_;
};

Mat3 operator+(const Mat3 &a, const Mat3 &b);
Mat3 operator-(const Mat3 &a, const Mat3 &b);
Mat3 operator*(const Mat3 &a, const Mat3 &b);
Vec3 operator*(const Mat3 &a, const Vec3 &v);
Mat3 operator*(const LaurentPoly &s, const Mat3 &a);

inline Mat3 mat_mul(const Mat3 &a, const Mat3 &b) { return a * b; }
inline Vec3 mat_vec(const Mat3 &a, const Vec3 &v) { return a * v; }

LaurentPoly det(const Mat3 &a);
Mat3 adjugate(const Mat3 &a);

/// adj(a) / det(a); requires det(a) to be a unit monomial.
Mat3 inverse(const Mat3 &a);

/// Square-and-multiply; negative k inverts first.
Mat3 mat_pow(const Mat3 &a, long k);

bool is_identity(const Mat3 &a);

Mat3 reduce_mod(const Mat3 &a, std::int64_t p);
Vec3 reduce_mod(const Vec3 &v, std::int64_t p);

std::ostream &operator<<(std::ostream &os, const Mat3 &a);
std::ostream &operator<<(std::ostream &os, const Vec3 &v);

} // namespace burau4
