#include "burau4/pingpong.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <thread>

namespace burau4
{

std::string to_string(PingPongSet s)
{
    switch (s)
    {
    case PingPongSet::X1:
        return "X1";
    case PingPongSet::X2:
        return "X2";
    case PingPongSet::X3:
        return "X3";
    case PingPongSet::None:
        return "none";
    }
    return "none";
}

PingPongSet parse_ping_pong_set(const std::string &text)
{
    if (text == "X1")
        return PingPongSet::X1;
    if (text == "X2")
        return PingPongSet::X2;
    if (text == "X3")
        return PingPongSet::X3;
    if (text == "none")
        return PingPongSet::None;
    throw std::invalid_argument("unknown ping-pong set '" + text + "'");
}

PingPongSet classify(const Vec3 &v)
{
    const Valuation v1 = v[0].valuation(), v2 = v[1].valuation(), v3 = v[2].valuation();
    if (!v1.is_infinite() && v1 <= v2 - 2 && v1 <= v3 - 2)
        return PingPongSet::X1;
    if (!v1.is_infinite() && v1 == v2 && v2 == v3)
        return PingPongSet::X2;
    if (!v2.is_infinite() && v2 <= v1 - 2 && v2 <= v3 - 2)
        return PingPongSet::X3;
    return PingPongSet::None;
}

bool in_set(const Vec3 &v, PingPongSet s)
{
    return classify(v) == s;
}

namespace
{

Integer nonzero_coeff(ModulusContext ctx, std::mt19937_64 &rng)
{
    if (ctx.is_integers())
    {
        long c = std::uniform_int_distribution<long>(-9, 8)(rng);
        return c >= 0 ? c + 1 : c;
    }
    return Integer(static_cast<long>(std::uniform_int_distribution<std::int64_t>(1, ctx.p() - 1)(rng)));
}

Integer any_coeff(ModulusContext ctx, std::mt19937_64 &rng)
{
    if (ctx.is_integers())
        return std::uniform_int_distribution<long>(-9, 9)(rng);
    return Integer(static_cast<long>(std::uniform_int_distribution<std::int64_t>(0, ctx.p() - 1)(rng)));
}

/// Nonzero leading term at exactly `low`, up to five more terms above it.
LaurentPoly with_leading(std::int64_t low, ModulusContext ctx, std::mt19937_64 &rng)
{
    std::vector<std::pair<std::int64_t, Integer>> terms{{low, nonzero_coeff(ctx, rng)}};
    const int extra = std::uniform_int_distribution<int>(0, 5)(rng);
    for (int i = 0; i < extra; ++i)
        terms.emplace_back(low + std::uniform_int_distribution<std::int64_t>(1, 6)(rng), any_coeff(ctx, rng));
    // Extra terms never touch `low`, so the leading coefficient survives.
    return LaurentPoly::from_terms(terms, ctx);
}

/// Zero, or valuation at least `low` (exactly `low` half of the time).
LaurentPoly at_least(std::int64_t low, ModulusContext ctx, std::mt19937_64 &rng)
{
    const int pick = std::uniform_int_distribution<int>(0, 5)(rng);
    if (pick == 0)
        return LaurentPoly::zero(ctx);
    const std::int64_t start = pick <= 3 ? low : low + std::uniform_int_distribution<std::int64_t>(1, 3)(rng);
    return with_leading(start, ctx, rng);
}

std::uint64_t fnv1a(const std::string &s)
{
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s)
    {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::mt19937_64 sample_rng(std::uint64_t seed, const std::string &stream, std::size_t index)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(fnv1a(stream)), static_cast<std::uint32_t>(fnv1a(stream) >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(std::uint64_t(index) >> 32)};
    return std::mt19937_64(seq);
}

} // namespace

Vec3 random_member(PingPongSet s, ModulusContext ctx, std::mt19937_64 &rng)
{
    const std::int64_t n = std::uniform_int_distribution<std::int64_t>(-5, 5)(rng);
    switch (s)
    {
    case PingPongSet::X1:
        return {with_leading(n, ctx, rng), at_least(n + 2, ctx, rng), at_least(n + 2, ctx, rng)};
    case PingPongSet::X2:
        return {with_leading(n, ctx, rng), with_leading(n, ctx, rng), with_leading(n, ctx, rng)};
    case PingPongSet::X3:
        return {at_least(n + 2, ctx, rng), with_leading(n, ctx, rng), at_least(n + 2, ctx, rng)};
    case PingPongSet::None:
        break;
    }
    throw std::invalid_argument("no generator for the complement set");
}

std::string to_string(Operator op)
{
    switch (op)
    {
    case Operator::T:
        return "T";
    case Operator::TInv:
        return "T⁻¹";
    case Operator::T2:
        return "T²";
    case Operator::B:
        return "B";
    }
    return "?";
}

Operator parse_operator(const std::string &text)
{
    if (text == "T")
        return Operator::T;
    if (text == "T⁻¹" || text == "T^-1")
        return Operator::TInv;
    if (text == "T²" || text == "T^2")
        return Operator::T2;
    if (text == "B")
        return Operator::B;
    throw std::invalid_argument("unknown operator '" + text + "'");
}

const Mat3 &operator_matrix(Operator op, ModulusContext ctx)
{
    static std::mutex mutex;
    static std::map<std::int64_t, Mat3> t2;
    const auto &k = constants_for(ctx);
    switch (op)
    {
    case Operator::T:
        return k.T;
    case Operator::TInv:
        return k.T_inv;
    case Operator::B:
        return k.B;
    case Operator::T2:
        break;
    }
    std::lock_guard lock(mutex);
    auto it = t2.find(ctx.p());
    if (it == t2.end())
        it = t2.emplace(ctx.p(), k.T * k.T).first;
    return it->second;
}

std::vector<Inclusion> standard_inclusions()
{
    return {
        {"T X1 ⊆ X2", PingPongSet::X1, PingPongSet::X2, Operator::T, 1, 1},
        {"T⁻¹ X1 ⊆ X3", PingPongSet::X1, PingPongSet::X3, Operator::TInv, 1, 1},
        {"B X1 ⊆ X1", PingPongSet::X1, PingPongSet::X1, Operator::B, 1, 1},
        {"B² X2 ⊆ X1", PingPongSet::X2, PingPongSet::X1, Operator::B, 2, 2},
        {"Bⁿ X2 ⊆ X1, 2 ≤ n ≤ 8", PingPongSet::X2, PingPongSet::X1, Operator::B, 2, 8},
        {"B X3 ⊆ X2", PingPongSet::X3, PingPongSet::X2, Operator::B, 1, 1},
        {"B³ X3 ⊆ X1", PingPongSet::X3, PingPongSet::X1, Operator::B, 3, 3},
        {"Bⁿ X3 ⊆ X1, 3 ≤ n ≤ 9", PingPongSet::X3, PingPongSet::X1, Operator::B, 3, 9},
    };
}

InclusionResult check_inclusion(const Inclusion &inc, ModulusContext ctx, std::size_t samples,
                                std::uint64_t seed, unsigned workers)
{
    if (samples == 0)
        throw std::invalid_argument("samples must be at least 1");
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(samples)));

    std::vector<Mat3> powers;
    for (long n = inc.min_power; n <= inc.max_power; ++n)
        powers.push_back(mat_pow(operator_matrix(inc.op, ctx), n));

    const std::string stream = inc.name + "|" + to_string(inc.from) + "|" + std::to_string(ctx.p());
    const auto run = [&](std::size_t begin, std::size_t end) {
        std::size_t bad = 0;
        for (std::size_t i = begin; i < end; ++i)
        {
            auto rng = sample_rng(seed, stream, i);
            const Vec3 v = random_member(inc.from, ctx, rng);
            const auto n = std::uniform_int_distribution<std::size_t>(0, powers.size() - 1)(rng);
            if (!in_set(powers[n] * v, inc.to))
                ++bad;
        }
        return bad;
    };

    std::vector<std::size_t> counts(workers, 0);
    std::vector<std::thread> pool;
    const std::size_t chunk = (samples + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w)
    {
        const std::size_t begin = std::min(samples, w * chunk);
        const std::size_t end = std::min(samples, begin + chunk);
        if (workers == 1)
            counts[w] = run(begin, end);
        else
            pool.emplace_back([&, w, begin, end] { counts[w] = run(begin, end); });
    }
    for (auto &t : pool)
        t.join();

    InclusionResult out{inc, samples, 0};
    for (auto c : counts)
        out.violations += c;
    return out;
}

bool MappingReport::all_pass() const
{
    if (!t2_v0_in_x1 || !v0_outside_sets)
        return false;
    return std::all_of(results.begin(), results.end(), [](const auto &r) { return r.violations == 0; });
}

MappingReport verify_mappings(ModulusContext ctx, std::size_t samples, std::uint64_t seed, unsigned workers)
{
    MappingReport report;
    report.ctx = ctx;
    report.seed = seed;
    for (const auto &inc : standard_inclusions())
        report.results.push_back(check_inclusion(inc, ctx, samples, seed, workers));

    const auto &k = constants_for(ctx);
    const Vec3 image = operator_matrix(Operator::T2, ctx) * k.v0;
    report.t2_v0_in_x1 = image == Vec3::from_ints({1, 0, 0}, ctx) && classify(image) == PingPongSet::X1;
    report.v0_outside_sets = classify(k.v0) == PingPongSet::None;
    return report;
}

Certificate certify(const NormalForm &nf, ModulusContext ctx)
{
    if (!theorem_conditions(nf))
        throw ConditionsNotMet("normal form '" + to_string(nf) + "' violates the B-exponent conditions");

    Certificate cert{nf, ctx, {}, false};
    Vec3 v = constants_for(ctx).v0;
    const auto apply = [&](Operator op) {
        v = operator_matrix(op, ctx) * v;
        cert.steps.push_back({op, v, classify(v)});
    };
    const auto expect = [&](PingPongSet s, const std::string &after) {
        const auto got = cert.steps.back().set;
        if (got != s)
            throw ScheduleViolation("after " + after + " in '" + to_string(nf) + "' over " +
                                        (ctx.is_integers() ? std::string("Z") : "Z_" + std::to_string(ctx.p())) +
                                        ": expected " + to_string(s) + ", got " + to_string(got),
                                    cert.steps.size() - 1);
    };
    const auto apply_t = [&](int m, const std::string &label) {
        apply(m > 0 ? Operator::T : Operator::TInv);
        expect(m > 0 ? PingPongSet::X2 : PingPongSet::X3, label);
    };

    apply(Operator::T2);
    expect(PingPongSet::X1, "trailing T^2");
    for (std::size_t i = 0; i < nf.b_powers.size(); ++i)
    {
        for (long j = 0; j < nf.b_powers[i]; ++j)
            apply(Operator::B);
        expect(PingPongSet::X1, "B^" + std::to_string(nf.b_powers[i]) + " (n_" + std::to_string(i + 1) + ")");
        if (i + 1 < nf.b_powers.size())
            apply_t(nf.t_powers.at(i), "T^" + std::to_string(nf.t_powers.at(i)) + " (m_" + std::to_string(i + 1) + ")");
    }
    if (nf.lead == 1 || nf.lead == -1)
        apply_t(nf.lead, "leading T^" + std::to_string(nf.lead));
    else if (nf.lead == 2)
        apply(Operator::T2);

    cert.verdict = !(v == constants_for(ctx).v0);
    if (cert.verdict && is_identity(eval_normal_form(nf, ctx)))
        throw std::logic_error("certificate for '" + to_string(nf) + "' contradicts direct evaluation");
    return cert;
}

} // namespace burau4
