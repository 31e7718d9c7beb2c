#include "burau4/json_io.hpp"

namespace burau4
{

namespace
{

json coeff_to_json(const Integer &c)
{
    if (c.fits_slong_p())
        return c.get_si();
    return c.get_str();
}

Integer coeff_from_json(const json &j)
{
    if (j.is_number_integer())
        return Integer(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string())
        return Integer(j.get<std::string>());
    throw std::invalid_argument("coefficient must be an integer or a decimal string");
}

ModulusContext context_from_json(const json &j)
{
    return ModulusContext(j.value("p", std::int64_t{0}));
}

} // namespace

json to_json(const LaurentPoly &f)
{
    json terms = json::object();
    for (const auto &[e, c] : f.terms())
        terms[std::to_string(e)] = coeff_to_json(c);
    return {{"terms", terms}, {"p", f.context().p()}};
}

LaurentPoly poly_from_json(const json &j)
{
    const ModulusContext ctx = context_from_json(j);
    std::vector<std::pair<std::int64_t, Integer>> terms;
    for (const auto &[key, value] : j.at("terms").items())
    {
        std::size_t used = 0;
        const long long e = std::stoll(key, &used);
        if (used != key.size())
            throw std::invalid_argument("bad exponent key '" + key + "'");
        terms.emplace_back(e, coeff_from_json(value));
    }
    return LaurentPoly::from_terms(terms, ctx);
}

json to_json(const Mat3 &m)
{
    json rows = json::array();
    for (std::size_t r = 0; r < 3; ++r)
        rows.push_back({to_json(m(r, 0)), to_json(m(r, 1)), to_json(m(r, 2))});
    return {{"rows", rows}, {"p", m.context().p()}};
}

namespace
{

/// Entries may omit "p"; the enclosing object's modulus applies.
LaurentPoly entry_from_json(json entry, std::int64_t p)
{
    if (!entry.contains("p"))
        entry["p"] = p;
    return poly_from_json(entry);
}

} // namespace

Mat3 mat_from_json(const json &j)
{
    const std::int64_t p = context_from_json(j).p();
    const auto &rows = j.at("rows");
    if (rows.size() != 3)
        throw std::invalid_argument("matrix needs 3 rows");
    std::array<LaurentPoly, 9> e;
    for (std::size_t r = 0; r < 3; ++r)
    {
        if (rows[r].size() != 3)
            throw std::invalid_argument("matrix rows need 3 entries");
        for (std::size_t c = 0; c < 3; ++c)
            e[3 * r + c] = entry_from_json(rows[r][c], p);
    }
    return Mat3(std::move(e));
}

json to_json(const Vec3 &v)
{
    return {{"coords", {to_json(v[0]), to_json(v[1]), to_json(v[2])}}, {"p", v.context().p()}};
}

Vec3 vec_from_json(const json &j)
{
    const std::int64_t p = context_from_json(j).p();
    const auto &coords = j.at("coords");
    if (coords.size() != 3)
        throw std::invalid_argument("vector needs 3 coordinates");
    return {entry_from_json(coords[0], p), entry_from_json(coords[1], p), entry_from_json(coords[2], p)};
}

json to_json(const Certificate &c)
{
    json steps = json::array();
    for (const auto &s : c.steps)
        steps.push_back({{"op", to_string(s.op)}, {"set", to_string(s.set)}, {"vector", to_json(s.vector)}});
    return {{"word", to_string(c.word)}, {"p", c.modulus.p()}, {"steps", steps}, {"verdict", c.verdict}};
}

Certificate certificate_from_json(const json &j)
{
    Certificate c;
    c.word = parse_normal_form(j.at("word").get<std::string>());
    c.modulus = context_from_json(j);
    c.verdict = j.at("verdict").get<bool>();
    for (const auto &s : j.at("steps"))
        c.steps.push_back({parse_operator(s.at("op").get<std::string>()), vec_from_json(s.at("vector")),
                           parse_ping_pong_set(s.at("set").get<std::string>())});
    return c;
}

json to_json(const LemmaReport &r)
{
    json checks = json::array();
    for (const auto &c : r.checks)
    {
        json entry = {{"name", c.name}, {"holds", c.holds}};
        if (!c.note.empty())
            entry["note"] = c.note;
        checks.push_back(entry);
    }
    json substitution = {
        {"lemma_assignment", {{"A", "T B T^-1"}, {"A^-1", "T^-1 B T"}, {"holds", r.substitution.lemma_holds}}},
        {"corollary_prose_assignment", {{"A", "T^-1 B T"}, {"A^-1", "T B T^-1"}, {"holds", r.substitution.prose_holds}}},
        {"adopted", r.substitution.source()},
    };
    if (auto rule = r.substitution.rule())
    {
        substitution["A"] = rule->a_text();
        substitution["A^-1"] = rule->a_inverse_text();
        substitution["B^-1"] = "T^2 B T^2";
    }
    return {{"p", r.ctx.p()}, {"checks", checks}, {"substitution", substitution}, {"pass", r.all_pass()}};
}

json to_json(const MappingReport &r)
{
    json inclusions = json::array();
    for (const auto &res : r.results)
        inclusions.push_back({{"name", res.inclusion.name},
                              {"samples", res.samples},
                              {"violations", res.violations}});
    return {{"p", r.ctx.p()},
            {"seed", r.seed},
            {"inclusions", inclusions},
            {"T2_v0_in_X1", r.t2_v0_in_x1},
            {"v0_outside_sets", r.v0_outside_sets},
            {"pass", r.all_pass()}};
}

} // namespace burau4
