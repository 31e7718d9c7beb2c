#include "burau4/ring.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace burau4
{

ModulusContext::ModulusContext(std::int64_t p) : p_(p)
{
    if (p < 0 || p == 1)
        throw ContextError("modulus must be 0 (integers) or at least 2, got " + std::to_string(p));
}

void ModulusContext::reduce(Integer &c) const
{
    if (p_ != 0)
        mpz_fdiv_r_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(p_));
}

std::ostream &operator<<(std::ostream &os, const ModulusContext &ctx)
{
    if (ctx.is_integers())
        return os << "Z";
    return os << "Z_" << ctx.p();
}

std::int64_t Valuation::value() const
{
    if (infinite_)
        throw std::domain_error("valuation of the zero polynomial is +inf");
    return value_;
}

std::ostream &operator<<(std::ostream &os, const Valuation &v)
{
    if (v.is_infinite())
        return os << "+inf";
    return os << v.value();
}

LaurentPoly LaurentPoly::monomial(const Integer &c, std::int64_t k, ModulusContext ctx)
{
    LaurentPoly f(ctx);
    f.low_ = k;
    f.coeffs_.push_back(c);
    ctx.reduce(f.coeffs_.back());
    f.normalize();
    return f;
}

LaurentPoly LaurentPoly::from_terms(const std::vector<std::pair<std::int64_t, Integer>> &terms,
                                    ModulusContext ctx)
{
    LaurentPoly f(ctx);
    if (terms.empty())
        return f;
    auto [lo, hi] = std::minmax_element(terms.begin(), terms.end(),
                                        [](const auto &a, const auto &b) { return a.first < b.first; });
    f.low_ = lo->first;
    f.coeffs_.assign(static_cast<std::size_t>(hi->first - lo->first + 1), Integer(0));
    for (const auto &[e, c] : terms)
        f.coeffs_[static_cast<std::size_t>(e - f.low_)] += c;
    for (auto &c : f.coeffs_)
        ctx.reduce(c);
    f.normalize();
    return f;
}

std::int64_t LaurentPoly::degree() const
{
    if (is_zero())
        throw std::domain_error("degree of the zero polynomial");
    return low_ + static_cast<std::int64_t>(coeffs_.size()) - 1;
}

Integer LaurentPoly::coeff(std::int64_t k) const
{
    if (is_zero() || k < low_ || k > degree())
        return 0;
    return coeffs_[static_cast<std::size_t>(k - low_)];
}

std::vector<std::pair<std::int64_t, Integer>> LaurentPoly::terms() const
{
    std::vector<std::pair<std::int64_t, Integer>> out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (sgn(coeffs_[i]) != 0)
            out.emplace_back(low_ + static_cast<std::int64_t>(i), coeffs_[i]);
    return out;
}

std::size_t LaurentPoly::term_count() const
{
    return static_cast<std::size_t>(
        std::count_if(coeffs_.begin(), coeffs_.end(), [](const Integer &c) { return sgn(c) != 0; }));
}

void LaurentPoly::normalize()
{
    auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Integer &c) { return sgn(c) != 0; });
    if (first == coeffs_.end())
    {
        coeffs_.clear();
        low_ = 0;
        return;
    }
    auto last = std::find_if(coeffs_.rbegin(), coeffs_.rend(), [](const Integer &c) { return sgn(c) != 0; });
    coeffs_.erase(last.base(), coeffs_.end());
    low_ += first - coeffs_.begin();
    coeffs_.erase(coeffs_.begin(), first);
}

void LaurentPoly::require_same_context(const LaurentPoly &g) const
{
    if (!(ctx_ == g.ctx_))
    {
        std::ostringstream os;
        os << "context mismatch: " << ctx_ << " vs " << g.ctx_;
        throw ContextError(os.str());
    }
}

void LaurentPoly::add_scaled(const LaurentPoly &g, int sign)
{
    require_same_context(g);
    if (g.is_zero())
        return;
    if (is_zero())
    {
        low_ = g.low_;
        coeffs_.assign(g.coeffs_.size(), Integer(0));
    }
    const std::int64_t lo = std::min(low_, g.low_);
    const std::int64_t hi = std::max(degree(), g.degree());
    if (lo < low_)
        coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), Integer(0));
    low_ = lo;
    coeffs_.resize(static_cast<std::size_t>(hi - lo + 1), Integer(0));
    const auto offset = static_cast<std::size_t>(g.low_ - lo);
    for (std::size_t i = 0; i < g.coeffs_.size(); ++i)
    {
        auto &c = coeffs_[offset + i];
        if (sign > 0)
            c += g.coeffs_[i];
        else
            c -= g.coeffs_[i];
        ctx_.reduce(c);
    }
    normalize();
}

LaurentPoly &LaurentPoly::operator+=(const LaurentPoly &g)
{
    add_scaled(g, +1);
    return *this;
}

LaurentPoly &LaurentPoly::operator-=(const LaurentPoly &g)
{
    add_scaled(g, -1);
    return *this;
}

LaurentPoly &LaurentPoly::operator*=(const LaurentPoly &g)
{
    *this = *this * g;
    return *this;
}

LaurentPoly operator-(const LaurentPoly &f)
{
    return LaurentPoly::zero(f.context()) - f;
}

LaurentPoly operator*(const LaurentPoly &f, const LaurentPoly &g)
{
    f.require_same_context(g);
    LaurentPoly r(f.ctx_);
    if (f.is_zero() || g.is_zero())
        return r;
    r.low_ = f.low_ + g.low_;
    r.coeffs_.assign(f.coeffs_.size() + g.coeffs_.size() - 1, Integer(0));
    for (std::size_t i = 0; i < f.coeffs_.size(); ++i)
    {
        if (sgn(f.coeffs_[i]) == 0)
            continue;
        for (std::size_t j = 0; j < g.coeffs_.size(); ++j)
            mpz_addmul(r.coeffs_[i + j].get_mpz_t(), f.coeffs_[i].get_mpz_t(), g.coeffs_[j].get_mpz_t());
    }
    for (auto &c : r.coeffs_)
        r.ctx_.reduce(c);
    r.normalize();
    return r;
}

LaurentPoly shift(const LaurentPoly &f, std::int64_t k)
{
    return f * LaurentPoly::monomial(1, k, f.context());
}

LaurentPoly reduce_mod(const LaurentPoly &f, std::int64_t p)
{
    if (p < 2)
        throw ContextError("reduce_mod needs p >= 2, got " + std::to_string(p));
    if (!f.context().is_integers())
        throw ContextError("reduce_mod expects a polynomial over Z");
    return LaurentPoly::from_terms(f.terms(), ModulusContext(p));
}

bool is_unit_monomial(const LaurentPoly &f)
{
    if (f.term_count() != 1)
        return false;
    const Integer c = f.dense().front();
    if (f.context().is_integers())
        return c == 1 || c == -1;
    Integer g;
    mpz_gcd_ui(g.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(f.context().p()));
    return g == 1;
}

LaurentPoly inverse_unit_monomial(const LaurentPoly &f)
{
    if (!is_unit_monomial(f))
        throw std::domain_error("not a unit monomial: " + to_string(f));
    const std::int64_t k = f.low_exponent();
    Integer c = f.dense().front();
    if (!f.context().is_integers())
    {
        Integer p(static_cast<long>(f.context().p()));
        mpz_invert(c.get_mpz_t(), c.get_mpz_t(), p.get_mpz_t());
    }
    return LaurentPoly::monomial(c, -k, f.context());
}

std::string to_string(const LaurentPoly &f)
{
    if (f.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &[e, c] : f.terms())
    {
        Integer mag = abs(c);
        if (first)
        {
            if (sgn(c) < 0)
                os << "-";
        }
        else
        {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        if (e == 0)
        {
            os << mag;
            continue;
        }
        if (mag != 1)
            os << mag << "*";
        os << "t";
        if (e != 1)
            os << "^" << e;
    }
    return os.str();
}

std::ostream &operator<<(std::ostream &os, const LaurentPoly &f)
{
    return os << to_string(f);
}

} // namespace burau4
