#include "burau4/burau.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <mutex>

#include "burau4/errors.hpp"

namespace burau4
{

namespace
{

using Terms = std::vector<std::pair<std::int64_t, Integer>>;

LaurentPoly z(const Terms &terms)
{
    return LaurentPoly::from_terms(terms);
}

LaurentPoly c(long v)
{
    return LaurentPoly::constant(v);
}

Mat3 over(const Mat3 &m, ModulusContext ctx)
{
    return ctx.is_integers() ? m : reduce_mod(m, ctx.p());
}

Mat3 generator_over_z(int i)
{
    const LaurentPoly t = LaurentPoly::monomial(1, 1);
    const LaurentPoly mt = LaurentPoly::monomial(-1, 1);
    switch (i)
    {
    case 1:
        return Mat3({mt, t, c(0), c(0), c(1), c(0), c(0), c(0), c(1)});
    case 2:
        return Mat3({c(1), c(0), c(0), c(1), mt, t, c(0), c(0), c(1)});
    case 3:
        return Mat3({c(1), c(0), c(0), c(0), c(1), c(0), c(0), c(1), mt});
    default:
        throw std::out_of_range("B_4 generator index must be 1, 2 or 3, got " + std::to_string(i));
    }
}

} // namespace

BurauConstants BurauConstants::build(ModulusContext ctx)
{
    // A = rho(a^-1)
    const Mat3 A({c(0), c(0), z({{-1, -1}}),
                  c(0), z({{1, -1}}), z({{-1, -1}, {1, 1}}),
                  c(-1), c(0), z({{-1, -1}, {0, 1}})});
    // B = rho(b)
    const Mat3 B({z({{-1, -1}}), c(1), c(0),
                  c(0), c(1), c(0),
                  c(0), c(1), z({{1, -1}})});
    const Mat3 T = Mat3::from_ints({-1, 1, 0, -1, 0, 1, -1, 0, 0});
    const Mat3 T_inv = Mat3::from_ints({0, 0, -1, 1, 0, -1, 0, 1, -1});
    const Mat3 T_A({c(-1), z({{-1, 1}}), c(0),
                    c(-1), z({{-1, 1}, {0, -1}}), c(1),
                    c(-1), c(-1), c(0)});
    const Mat3 T_B({c(1), c(1), c(0),
                    c(0), z({{-1, 1}, {0, 1}}), c(0),
                    c(0), z({{-1, 1}}), c(1)});
    const Mat3 Delta({z({{-1, -1}}), c(0), c(0),
                      c(0), c(1), c(0),
                      c(0), c(0), z({{1, -1}})});

    BurauConstants k{ctx, over(A, ctx), over(B, ctx), over(T, ctx), over(T_inv, ctx),
                     over(T_A, ctx), over(T_B, ctx), over(Delta, ctx), Vec3::from_ints({0, 0, 1}, ctx)};
    return k;
}

const BurauConstants &constants_for(ModulusContext ctx)
{
    static std::mutex mutex;
    static std::map<std::int64_t, std::unique_ptr<const BurauConstants>> cache;
    std::lock_guard lock(mutex);
    auto &slot = cache[ctx.p()];
    if (!slot)
        slot = std::make_unique<const BurauConstants>(BurauConstants::build(ctx));
    return *slot;
}

Mat3 burau_generator(int i, int sign, ModulusContext ctx)
{
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("generator sign must be +1 or -1");
    Mat3 g = generator_over_z(i);
    if (sign < 0)
        g = inverse(g);
    return over(g, ctx);
}

Mat3 eval_braid(const BraidWord &w, ModulusContext ctx)
{
    Mat3 m = Mat3::identity(ctx);
    for (const auto &letter : w)
        m = burau_generator(letter.generator, letter.sign, ctx) * m;
    return m;
}

BraidWord inverse(const BraidWord &w)
{
    BraidWord out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        out.push_back({it->generator, -it->sign});
    return out;
}

BraidWord braid_word_a()
{
    return {{1, 1}, {2, 1}, {1, -1}, {3, 1}, {2, -1}, {1, -1}};
}

BraidWord braid_word_b()
{
    return {{3, 1}, {1, -1}};
}

BraidWord parse_braid(std::string_view text)
{
    BraidWord w;
    std::size_t i = 0;
    const auto skip_space = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
    };
    skip_space();
    while (i < text.size())
    {
        const std::size_t start = i;
        if (text[i] != 's' && text[i] != 'S')
            throw ParseError("expected generator 's1', 's2' or 's3'", i);
        ++i;
        if (i >= text.size() || text[i] < '1' || text[i] > '3')
            throw ParseError("generator index must be 1, 2 or 3", i);
        BraidLetter letter{text[i] - '0', 1};
        ++i;
        if (i < text.size() && text[i] == '\'')
        {
            letter.sign = -1;
            ++i;
        }
        else if (text.substr(i).starts_with("^-1"))
        {
            letter.sign = -1;
            i += 3;
        }
        else if (text.substr(i).starts_with("^1"))
        {
            i += 2;
        }
        if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
            throw ParseError("unexpected character after generator '" + std::string(text.substr(start, i - start)) + "'", i);
        w.push_back(letter);
        skip_space();
    }
    return w;
}

std::string to_string(const BraidWord &w)
{
    std::string out;
    for (const auto &l : w)
    {
        if (!out.empty())
            out += ' ';
        out += 's' + std::to_string(l.generator);
        if (l.sign < 0)
            out += '\'';
    }
    return out;
}

std::string SubstitutionRule::a_text() const
{
    return a_side > 0 ? "T B T^-1" : "T^-1 B T";
}

std::string SubstitutionRule::a_inverse_text() const
{
    return a_side > 0 ? "T^-1 B T" : "T B T^-1";
}

std::optional<SubstitutionRule> SubstitutionFinding::rule() const
{
    if (lemma_holds == prose_holds)
        return std::nullopt;
    return SubstitutionRule{lemma_holds ? 1 : -1};
}

std::string SubstitutionFinding::source() const
{
    if (lemma_holds && !prose_holds)
        return "lemma";
    if (prose_holds && !lemma_holds)
        return "corollary_prose";
    return "undetermined";
}

bool LemmaReport::all_pass() const
{
    return first_failure() == nullptr && substitution.rule().has_value();
}

const IdentityCheck *LemmaReport::first_failure() const
{
    for (const auto &c : checks)
        if (!c.holds)
            return &c;
    return nullptr;
}

namespace
{

template <class F>
IdentityCheck check(std::string name, F &&f)
{
    IdentityCheck out{std::move(name), false, {}};
    try
    {
        out.holds = f();
    }
    catch (const std::exception &e)
    {
        out.note = e.what();
    }
    return out;
}

} // namespace

LemmaReport verify_lemma_identities(const BurauConstants &k)
{
    LemmaReport report;
    report.ctx = k.ctx;
    auto &checks = report.checks;
    const Mat3 I = Mat3::identity(k.ctx);
    const Mat3 T2 = k.T * k.T;

    checks.push_back(check("T * T^-1 = I", [&] { return is_identity(k.T * k.T_inv) && is_identity(k.T_inv * k.T); }));
    checks.push_back(check("T^4 = I", [&] { return is_identity(mat_pow(k.T, 4)); }));
    checks.push_back(check("T^2 != I", [&] { return !is_identity(T2); }));
    checks.push_back(check("A = T B T^-1", [&] { return k.A == k.T * k.B * k.T_inv; }));
    checks.push_back(check("A^-1 = T^-1 B T", [&] { return inverse(k.A) == k.T_inv * k.B * k.T; }));
    checks.push_back(check("B^-1 = T^2 B T^2", [&] { return inverse(k.B) == T2 * k.B * T2; }));
    // T_B is singular over the Laurent ring (det = (1+t)/t), so T = T_A T_B^-1 is checked as T T_B = T_A.
    checks.push_back(check("T = T_A T_B^-1", [&] { return k.T * k.T_B == k.T_A; }));
    checks.push_back(check("A T_A = T_A Delta", [&] { return k.A * k.T_A == k.T_A * k.Delta; }));
    checks.push_back(check("B T_B = T_B Delta", [&] { return k.B * k.T_B == k.T_B * k.Delta; }));

    const LaurentPoly t = LaurentPoly::monomial(1, 1, k.ctx);
    const LaurentPoly t_inv = LaurentPoly::monomial(1, -1, k.ctx);
    const auto annihilates = [&](const Mat3 &M) {
        const Mat3 product = (M + Mat3::scalar(t_inv)) * (M - I) * (M + Mat3::scalar(t));
        return product == Mat3::zero(k.ctx);
    };
    checks.push_back(check("(A + t^-1)(A - 1)(A + t) = 0", [&] { return annihilates(k.A); }));
    checks.push_back(check("(B + t^-1)(B - 1)(B + t) = 0", [&] { return annihilates(k.B); }));
    checks.push_back(check("(A^-1 + t^-1)(A^-1 - 1)(A^-1 + t) = 0", [&] { return annihilates(inverse(k.A)); }));
    checks.push_back(check("(B^-1 + t^-1)(B^-1 - 1)(B^-1 + t) = 0", [&] { return annihilates(inverse(k.B)); }));
    checks.push_back(check("det A, det B, det T are unit monomials",
                           [&] { return is_unit_monomial(det(k.A)) && is_unit_monomial(det(k.B)) && is_unit_monomial(det(k.T)); }));

    const auto holds = [&](auto &&f) {
        try
        {
            return static_cast<bool>(f());
        }
        catch (const std::exception &)
        {
            return false;
        }
    };
    report.substitution.lemma_holds = holds([&] {
        return k.A == k.T * k.B * k.T_inv && inverse(k.A) == k.T_inv * k.B * k.T;
    });
    report.substitution.prose_holds = holds([&] {
        return k.A == k.T_inv * k.B * k.T && inverse(k.A) == k.T * k.B * k.T_inv;
    });
    return report;
}

LemmaReport verify_lemma_identities(ModulusContext ctx)
{
    return verify_lemma_identities(constants_for(ctx));
}

SubstitutionRule substitution_from(const LemmaReport &report)
{
    auto rule = report.substitution.rule();
    if (!rule)
        throw std::runtime_error("no A/A^-1 substitution was confirmed by the identity check");
    return *rule;
}

} // namespace burau4
