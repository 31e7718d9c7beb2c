#include "burau4/rewrite.hpp"

#include <cctype>
#include <charconv>
#include <deque>

#include "burau4/errors.hpp"

namespace burau4
{

WordAB::WordAB(const std::vector<Syllable> &syllables)
{
    for (const auto &s : syllables)
    {
        if (s.exponent == 0)
            continue;
        if (!syllables_.empty() && syllables_.back().letter == s.letter)
        {
            syllables_.back().exponent += s.exponent;
            if (syllables_.back().exponent == 0)
                syllables_.pop_back();
        }
        else
        {
            syllables_.push_back(s);
        }
    }
}

WordAB WordAB::inverse() const
{
    std::vector<Syllable> out(syllables_.rbegin(), syllables_.rend());
    for (auto &s : out)
        s.exponent = -s.exponent;
    return WordAB(out);
}

WordAB operator*(const WordAB &u, const WordAB &v)
{
    std::vector<Syllable> all = u.syllables_;
    all.insert(all.end(), v.syllables_.begin(), v.syllables_.end());
    return WordAB(all);
}

WordAB parse_word(std::string_view text)
{
    std::vector<Syllable> raw;
    std::size_t i = 0;
    const auto at_space = [&] { return i < text.size() && std::isspace(static_cast<unsigned char>(text[i])); };
    while (true)
    {
        while (at_space())
            ++i;
        if (i >= text.size())
            break;
        Syllable s{};
        if (text[i] == 'A')
            s.letter = Letter::A;
        else if (text[i] == 'B')
            s.letter = Letter::B;
        else
            throw ParseError(std::string("expected 'A' or 'B', found '") + text[i] + "'", i);
        ++i;
        s.exponent = 1;
        if (i < text.size() && text[i] == '^')
        {
            ++i;
            const std::size_t num_start = i;
            if (i < text.size() && text[i] == '+')
                ++i;
            const char *first = text.data() + i;
            const char *last = text.data() + text.size();
            auto [ptr, ec] = std::from_chars(first, last, s.exponent);
            if (ec != std::errc())
                throw ParseError("expected an integer exponent after '^'", num_start);
            i = static_cast<std::size_t>(ptr - text.data());
            if (s.exponent == 0)
                throw ParseError("zero exponent", num_start);
        }
        if (i < text.size() && !at_space())
            throw ParseError(std::string("unexpected character '") + text[i] + "'", i);
        raw.push_back(s);
    }
    WordAB w(raw);
    if (w.empty())
        throw ParseError("word is empty after free reduction", 0);
    return w;
}

std::string to_string(const WordAB &w)
{
    std::string out;
    for (const auto &s : w.syllables())
    {
        if (!out.empty())
            out += ' ';
        out += static_cast<char>(s.letter);
        if (s.exponent != 1)
            out += '^' + std::to_string(s.exponent);
    }
    return out;
}

Mat3 eval_word(const WordAB &w, ModulusContext ctx)
{
    const auto &k = constants_for(ctx);
    Mat3 m = Mat3::identity(ctx);
    for (const auto &s : w.syllables())
        m = m * mat_pow(s.letter == Letter::A ? k.A : k.B, s.exponent);
    return m;
}

Conjugated conjugate_to_B_neg_suffix(const WordAB &w)
{
    if (w.empty())
        throw std::invalid_argument("cannot conjugate the empty word");
    std::deque<Syllable> u(w.syllables().begin(), w.syllables().end());
    WordAB conj;

    // Invariant: u = conj^-1 * w * conj.
    while (u.size() >= 2 && u.front().letter == u.back().letter)
    {
        const Syllable last = u.back();
        u.pop_back();
        u.front().exponent += last.exponent;
        conj = conj * WordAB({{last.letter, -last.exponent}});
        if (u.front().exponent == 0)
            u.pop_front();
    }

    const auto is_neg_b = [](const Syllable &s) { return s.letter == Letter::B && s.exponent < 0; };
    bool any = false;
    for (const auto &s : u)
        any = any || is_neg_b(s);
    if (!any)
        throw NoNegativeBSyllable("no cyclic conjugate of '" + to_string(w) + "' ends in B^-i");

    while (!is_neg_b(u.back()))
    {
        const Syllable first = u.front();
        u.pop_front();
        u.push_back(first);
        conj = conj * WordAB({first});
    }
    return {WordAB(std::vector<Syllable>(u.begin(), u.end())), conj};
}

namespace
{

/// Residue of a T exponent mod 4 in {-1, 0, 1, 2}.
int t_residue(long e)
{
    const long r = ((e % 4) + 4) % 4;
    return r == 3 ? -1 : static_cast<int>(r);
}

struct Factor
{
    bool is_t;
    long power;
};

void push_factor(std::vector<Factor> &out, Factor f)
{
    if (!out.empty() && out.back().is_t == f.is_t)
    {
        out.back().power += f.power;
        if (f.is_t)
        {
            out.back().power = t_residue(out.back().power);
            if (out.back().power == 0)
                out.pop_back();
        }
        return;
    }
    if (f.is_t)
    {
        f.power = t_residue(f.power);
        if (f.power == 0)
            return;
    }
    out.push_back(f);
}

} // namespace

NormalForm to_normal_form(const WordAB &w, SubstitutionRule rule)
{
    if (w.empty() || w.syllables().back().letter != Letter::B || w.syllables().back().exponent >= 0)
        throw std::invalid_argument("normal form needs a non-empty word ending in B^-i: '" + to_string(w) + "'");

    std::vector<Factor> factors;
    const int s = rule.a_side;
    for (const auto &syl : w.syllables())
    {
        const long n = syl.exponent > 0 ? syl.exponent : -syl.exponent;
        int before = 0, after = 0;
        if (syl.letter == Letter::A)
        {
            before = syl.exponent > 0 ? s : -s;
            after = -before;
        }
        else if (syl.exponent < 0)
        {
            before = after = 2;
        }
        push_factor(factors, {true, before});
        push_factor(factors, {false, n});
        push_factor(factors, {true, after});
    }

    if (factors.empty() || !factors.back().is_t || factors.back().power != 2)
        throw std::logic_error("substitution did not end in T^2");
    factors.pop_back();

    NormalForm nf;
    std::size_t begin = 0;
    if (factors.front().is_t)
    {
        nf.lead = static_cast<int>(factors.front().power);
        begin = 1;
    }
    for (std::size_t i = factors.size(); i-- > begin;)
    {
        const auto &f = factors[i];
        if (f.is_t)
        {
            if (f.power != 1 && f.power != -1)
                throw std::logic_error("interior T power reduced to " + std::to_string(f.power));
            nf.t_powers.push_back(static_cast<int>(f.power));
        }
        else
        {
            nf.b_powers.push_back(f.power);
        }
    }
    return nf;
}

SubstitutionRule verified_substitution()
{
    static const SubstitutionRule rule = substitution_from(verify_lemma_identities(ModulusContext::integers()));
    return rule;
}

NormalForm to_normal_form(const WordAB &w)
{
    return to_normal_form(w, verified_substitution());
}

Mat3 eval_normal_form(const NormalForm &nf, ModulusContext ctx)
{
    const auto &k = constants_for(ctx);
    const auto t_pow = [&](int m) { return m >= 0 ? mat_pow(k.T, m) : mat_pow(k.T_inv, -m); };
    Mat3 m = t_pow(nf.lead);
    for (std::size_t i = nf.b_powers.size(); i-- > 0;)
    {
        m = m * mat_pow(k.B, nf.b_powers[i]);
        if (i > 0)
            m = m * t_pow(nf.t_powers.at(i - 1));
    }
    return m * t_pow(2);
}

bool theorem_conditions(const NormalForm &nf)
{
    for (std::size_t i = 1; i < nf.b_powers.size(); ++i)
    {
        const int m = nf.t_powers.at(i - 1);
        const long needed = m == 1 ? 2 : 3;
        if (nf.b_powers[i] < needed)
            return false;
    }
    return true;
}

std::string to_string(const NormalForm &nf)
{
    std::string out;
    const auto emit = [&](char letter, long e) {
        if (!out.empty())
            out += " . ";
        out += letter;
        out += '^' + std::to_string(e);
    };
    if (nf.lead != 0)
        emit('T', nf.lead);
    for (std::size_t i = nf.b_powers.size(); i-- > 0;)
    {
        emit('B', nf.b_powers[i]);
        if (i > 0)
            emit('T', nf.t_powers.at(i - 1));
    }
    emit('T', 2);
    return out;
}

NormalForm parse_normal_form(std::string_view text)
{
    struct Tok
    {
        char letter;
        long power;
        std::size_t pos;
    };
    std::vector<Tok> toks;
    std::size_t i = 0;
    while (i <= text.size())
    {
        std::size_t end = text.find('.', i);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view part = text.substr(i, end - i);
        std::size_t lead_ws = 0;
        while (lead_ws < part.size() && std::isspace(static_cast<unsigned char>(part[lead_ws])))
            ++lead_ws;
        part.remove_prefix(lead_ws);
        while (!part.empty() && std::isspace(static_cast<unsigned char>(part.back())))
            part.remove_suffix(1);
        const std::size_t pos = i + lead_ws;
        if (part.empty() || (part[0] != 'T' && part[0] != 'B'))
            throw ParseError("expected a 'T^m' or 'B^n' factor", pos);
        Tok tok{part[0], 1, pos};
        if (part.size() > 1)
        {
            if (part[1] != '^')
                throw ParseError("expected '^'", pos + 1);
            auto [ptr, ec] = std::from_chars(part.data() + 2, part.data() + part.size(), tok.power);
            if (ec != std::errc() || ptr != part.data() + part.size())
                throw ParseError("bad exponent", pos + 2);
        }
        toks.push_back(tok);
        i = end + 1;
    }

    if (toks.size() < 2 || toks.back().letter != 'T' || toks.back().power != 2)
        throw ParseError("normal form must end in T^2", text.size());
    toks.pop_back();
    NormalForm nf;
    std::size_t begin = 0;
    if (toks.front().letter == 'T')
    {
        if (toks.front().power < -1 || toks.front().power > 2)
            throw ParseError("leading T power must be in {-1, 0, 1, 2}", toks.front().pos);
        nf.lead = static_cast<int>(toks.front().power);
        begin = 1;
    }
    bool expect_b = true;
    for (std::size_t j = toks.size(); j-- > begin;)
    {
        const Tok &t = toks[j];
        if (expect_b != (t.letter == 'B'))
            throw ParseError("B and T factors must alternate", t.pos);
        if (t.letter == 'B')
        {
            if (t.power < 1)
                throw ParseError("B powers must be positive", t.pos);
            nf.b_powers.push_back(t.power);
        }
        else
        {
            if (t.power != 1 && t.power != -1)
                throw ParseError("interior T powers must be 1 or -1", t.pos);
            nf.t_powers.push_back(static_cast<int>(t.power));
        }
        expect_b = !expect_b;
    }
    if (nf.b_powers.empty() || expect_b)
        throw ParseError("normal form must contain B powers between T factors", 0);
    return nf;
}

} // namespace burau4
