#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace burau4
{

using Integer = mpz_class;

/// Raised for an invalid modulus or when operands live in different rings.
class ContextError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// Coefficient ring selector: p == 0 is Z, p >= 2 is Z_p.
class ModulusContext
{
public:
    ModulusContext() = default;
    explicit ModulusContext(std::int64_t p);

    static ModulusContext integers() { return {}; }

    std::int64_t p() const noexcept { return p_; }
    bool is_integers() const noexcept { return p_ == 0; }

    /// Canonical representative: [0, p) for Z_p, identity for Z.
    void reduce(Integer &c) const;

    friend bool operator==(const ModulusContext &, const ModulusContext &) = default;

private:
    std::int64_t p_ = 0;
};

std::ostream &operator<<(std::ostream &os, const ModulusContext &ctx);

/// Lowest degree of a Laurent polynomial; the zero polynomial has +inf.
class Valuation
{
public:
    constexpr Valuation(std::int64_t v) noexcept : value_(v), infinite_(false) {}

    static constexpr Valuation infinity() noexcept
    {
        Valuation v(0);
        v.infinite_ = true;
        return v;
    }

    constexpr bool is_infinite() const noexcept { return infinite_; }
    std::int64_t value() const;

    constexpr std::strong_ordering operator<=>(const Valuation &o) const noexcept
    {
        if (infinite_ || o.infinite_)
            return infinite_ <=> o.infinite_;
        return value_ <=> o.value_;
    }
    constexpr bool operator==(const Valuation &o) const noexcept
    {
        return (*this <=> o) == std::strong_ordering::equal;
    }

    friend constexpr Valuation operator+(Valuation a, Valuation b) noexcept
    {
        if (a.infinite_ || b.infinite_)
            return infinity();
        return a.value_ + b.value_;
    }
    friend constexpr Valuation operator-(Valuation a, std::int64_t k) noexcept
    {
        return a.infinite_ ? a : Valuation(a.value_ - k);
    }

private:
    std::int64_t value_;
    bool infinite_;
};

std::ostream &operator<<(std::ostream &os, const Valuation &v);

/**
 * Element of Z[t, t^-1] or Z_p[t, t^-1].
 *
 * Stored densely as the exponent of the lowest term plus the contiguous run of
 * coefficients up to the highest term. Both ends are nonzero and every
 * coefficient is in canonical form for the context, so equality is structural.
 * The zero polynomial has no coefficients.
 */
class LaurentPoly
{
public:
    LaurentPoly() = default;
    explicit LaurentPoly(ModulusContext ctx) : ctx_(ctx) {}

    /// c * t^k
    static LaurentPoly monomial(const Integer &c, std::int64_t k, ModulusContext ctx = {});
    static LaurentPoly constant(const Integer &c, ModulusContext ctx = {}) { return monomial(c, 0, ctx); }
    static LaurentPoly zero(ModulusContext ctx = {}) { return LaurentPoly(ctx); }
    static LaurentPoly one(ModulusContext ctx = {}) { return constant(1, ctx); }

    /// Duplicate exponents are summed before normalization.
    static LaurentPoly from_terms(const std::vector<std::pair<std::int64_t, Integer>> &terms,
                                  ModulusContext ctx = {});

    const ModulusContext &context() const noexcept { return ctx_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    Valuation valuation() const noexcept
    {
        return is_zero() ? Valuation::infinity() : Valuation(low_);
    }
    /// Highest exponent; requires a nonzero polynomial.
    std::int64_t degree() const;

    /// Coefficient of t^k (zero when absent).
    Integer coeff(std::int64_t k) const;
    /// Nonzero terms in increasing exponent order.
    std::vector<std::pair<std::int64_t, Integer>> terms() const;
    std::size_t term_count() const;

    /// Lowest exponent and the raw dense coefficient run (front and back nonzero).
    std::int64_t low_exponent() const noexcept { return low_; }
    const std::vector<Integer> &dense() const noexcept { return coeffs_; }

    LaurentPoly &operator+=(const LaurentPoly &g);
    LaurentPoly &operator-=(const LaurentPoly &g);
    LaurentPoly &operator*=(const LaurentPoly &g);

    friend bool operator==(const LaurentPoly &a, const LaurentPoly &b)
    {
        return a.ctx_ == b.ctx_ && a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
    }

private:
    void normalize();
    void require_same_context(const LaurentPoly &g) const;
    void add_scaled(const LaurentPoly &g, int sign);

    friend LaurentPoly operator*(const LaurentPoly &f, const LaurentPoly &g);

    ModulusContext ctx_;
    std::int64_t low_ = 0;
    std::vector<Integer> coeffs_;
};

inline LaurentPoly operator+(LaurentPoly f, const LaurentPoly &g) { return f += g; }
inline LaurentPoly operator-(LaurentPoly f, const LaurentPoly &g) { return f -= g; }
LaurentPoly operator-(const LaurentPoly &f);
LaurentPoly operator*(const LaurentPoly &f, const LaurentPoly &g);

inline LaurentPoly add(const LaurentPoly &f, const LaurentPoly &g) { return f + g; }
inline LaurentPoly sub(const LaurentPoly &f, const LaurentPoly &g) { return f - g; }
inline LaurentPoly neg(const LaurentPoly &f) { return -f; }
inline LaurentPoly mul(const LaurentPoly &f, const LaurentPoly &g) { return f * g; }
inline Valuation valuation(const LaurentPoly &f) { return f.valuation(); }

/// f * t^k
LaurentPoly shift(const LaurentPoly &f, std::int64_t k);

/// Coefficient-wise reduction of an integer polynomial into Z_p[t, t^-1].
LaurentPoly reduce_mod(const LaurentPoly &f, std::int64_t p);

/// True iff f = c t^k with c a unit of the coefficient ring.
bool is_unit_monomial(const LaurentPoly &f);

/// Inverse of a unit monomial; throws std::domain_error otherwise.
LaurentPoly inverse_unit_monomial(const LaurentPoly &f);

/// Human-readable form, e.g. "-t^-1 + 3*t^2".
std::string to_string(const LaurentPoly &f);
std::ostream &operator<<(std::ostream &os, const LaurentPoly &f);

} // namespace burau4
