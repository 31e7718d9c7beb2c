#pragma once

#include <map>
#include <random>

#include "burau4/linalg.hpp"

namespace burau4::testing
{

inline const std::vector<std::int64_t> kModuli{0, 2, 3, 4, 5, 6, 7};

inline LaurentPoly t_pow(std::int64_t k, ModulusContext ctx = {})
{
    return LaurentPoly::monomial(1, k, ctx);
}

inline LaurentPoly poly(std::initializer_list<std::pair<std::int64_t, long>> terms, ModulusContext ctx = {})
{
    std::vector<std::pair<std::int64_t, Integer>> v;
    for (const auto &[e, c] : terms)
        v.emplace_back(e, c);
    return LaurentPoly::from_terms(v, ctx);
}

inline LaurentPoly random_poly(std::mt19937_64 &rng, ModulusContext ctx, int max_terms = 5, long coeff = 9)
{
    std::uniform_int_distribution<int> count(0, max_terms);
    std::uniform_int_distribution<std::int64_t> exp(-4, 4);
    std::uniform_int_distribution<long> c(-coeff, coeff);
    std::vector<std::pair<std::int64_t, Integer>> terms;
    for (int i = count(rng); i > 0; --i)
        terms.emplace_back(exp(rng), c(rng));
    return LaurentPoly::from_terms(terms, ctx);
}

inline Mat3 random_mat(std::mt19937_64 &rng, ModulusContext ctx, int max_terms = 3)
{
    std::array<LaurentPoly, 9> e;
    for (auto &x : e)
        x = random_poly(rng, ctx, max_terms, 4);
    return Mat3(std::move(e));
}

/// No stored zero at either end, canonical residues, zero has no storage.
inline bool is_normalized(const LaurentPoly &f)
{
    const auto &d = f.dense();
    if (d.empty())
        return f.low_exponent() == 0;
    if (sgn(d.front()) == 0 || sgn(d.back()) == 0)
        return false;
    if (!f.context().is_integers())
        for (const auto &c : d)
            if (sgn(c) < 0 || c >= f.context().p())
                return false;
    return true;
}

/// Schoolbook product on an exponent map, independent of LaurentPoly's storage.
inline std::map<std::int64_t, Integer> naive_product(const LaurentPoly &f, const LaurentPoly &g, std::int64_t p)
{
    std::map<std::int64_t, Integer> out;
    for (const auto &[e1, c1] : f.terms())
        for (const auto &[e2, c2] : g.terms())
            out[e1 + e2] += c1 * c2;
    for (auto it = out.begin(); it != out.end();)
    {
        if (p != 0)
            it->second = ((it->second % p) + p) % p;
        it = sgn(it->second) == 0 ? out.erase(it) : std::next(it);
    }
    return out;
}

inline std::map<std::int64_t, Integer> term_map(const LaurentPoly &f)
{
    std::map<std::int64_t, Integer> out;
    for (const auto &[e, c] : f.terms())
        out[e] = c;
    return out;
}

} // namespace burau4::testing
