#include "burau4/cli.hpp"

#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "burau4/errors.hpp"
#include "burau4/json_io.hpp"
#include "burau4/search.hpp"

namespace burau4
{

namespace
{

struct Globals
{
    std::int64_t mod = 0;
    bool json_only = false;
    std::uint64_t seed = 1;
    unsigned workers = 1;
};

class Output
{
public:
    Output(std::ostream &out, std::ostream &err, bool quiet) : out_(out), err_(err), quiet_(quiet) {}

    void json_doc(const json &j) { out_ << j.dump(2) << "\n"; }
    std::ostream &summary()
    {
        static std::ostringstream sink;
        sink.str({});
        return quiet_ ? sink : err_;
    }
    std::ostream &error() { return err_; }

private:
    std::ostream &out_;
    std::ostream &err_;
    bool quiet_;
};

json valuation_json(const Valuation &v)
{
    if (v.is_infinite())
        return "+inf";
    return v.value();
}

int cmd_verify(const Globals &g, std::size_t samples, Output &o)
{
    const ModulusContext ctx(g.mod);
    const LemmaReport lemma = verify_lemma_identities(ctx);
    const MappingReport mappings = verify_mappings(ctx, samples, g.seed, g.workers);
    const bool pass = lemma.all_pass() && mappings.all_pass();

    json doc = {{"p", ctx.p()}, {"lemma", to_json(lemma)}, {"mappings", to_json(mappings)}, {"pass", pass}};
    std::string failed;
    if (const auto *f = lemma.first_failure())
        failed = f->name;
    else if (!lemma.substitution.rule())
        failed = "A/A^-1 substitution undetermined";
    else
    {
        for (const auto &r : mappings.results)
            if (r.violations != 0 && failed.empty())
                failed = r.inclusion.name;
        if (failed.empty() && !mappings.t2_v0_in_x1)
            failed = "T^2 v0 = (1,0,0) in X1";
        if (failed.empty() && !mappings.v0_outside_sets)
            failed = "v0 outside X1, X2, X3";
    }
    if (!failed.empty())
        doc["failed"] = failed;
    o.json_doc(doc);

    o.summary() << "verify over " << ctx << ": " << lemma.checks.size() << " identities, "
                << mappings.results.size() << " inclusions x " << samples << " samples; substitution from "
                << lemma.substitution.source() << " -> " << (pass ? "PASS" : "FAIL: " + failed) << "\n";
    return pass ? kExitSuccess : kExitFailure;
}

int cmd_eval(const Globals &g, const std::optional<std::string> &word, const std::optional<std::string> &braid,
             bool check_identity, Output &o)
{
    const ModulusContext ctx(g.mod);
    json doc;
    Mat3 m;
    if (word)
    {
        const WordAB w = parse_word(*word);
        m = eval_word(w, ctx);
        doc = {{"kind", "word"}, {"input", *word}, {"word", to_string(w)}};
    }
    else
    {
        const BraidWord b = parse_braid(*braid);
        m = eval_braid(b, ctx);
        doc = {{"kind", "braid"}, {"input", *braid}, {"braid", to_string(b)}};
    }
    doc["p"] = ctx.p();
    doc["matrix"] = to_json(m);
    if (check_identity)
        doc["identity"] = is_identity(m);
    o.json_doc(doc);
    o.summary() << m << "\n";
    return kExitSuccess;
}

int cmd_rewrite(const Globals &g, const std::string &text, Output &o)
{
    const ModulusContext ctx(g.mod);
    const WordAB w = parse_word(text);
    json doc = {{"input", text}, {"word", to_string(w)}, {"p", ctx.p()}};
    Conjugated conj;
    try
    {
        conj = conjugate_to_B_neg_suffix(w);
    }
    catch (const NoNegativeBSyllable &e)
    {
        doc["fallback"] = "no_negative_B_suffix";
        doc["reason"] = e.what();
        o.json_doc(doc);
        o.summary() << e.what() << "\n";
        return kExitSuccess;
    }
    const NormalForm nf = to_normal_form(conj.word);
    const bool sound = eval_normal_form(nf, ctx) == eval_word(conj.word, ctx);
    doc["conjugated"] = to_string(conj.word);
    doc["conjugator"] = to_string(conj.conjugator);
    doc["normal_form"] = to_string(nf);
    doc["lead"] = nf.lead;
    doc["b_powers"] = nf.b_powers;
    doc["t_powers"] = nf.t_powers;
    doc["theorem_conditions"] = theorem_conditions(nf);
    doc["matches_direct_evaluation"] = sound;
    o.json_doc(doc);
    o.summary() << to_string(w) << "  ~  " << to_string(conj.word) << "  =  " << to_string(nf) << "\n";
    return sound ? kExitSuccess : kExitFailure;
}

int cmd_classify(const Globals &g, std::istream &in, Output &o)
{
    json input = json::parse(in);
    if (!input.contains("p"))
        input["p"] = g.mod;
    const Vec3 v = vec_from_json(input);
    const PingPongSet s = classify(v);
    o.json_doc({{"set", to_string(s)},
                {"valuations", {valuation_json(v[0].valuation()), valuation_json(v[1].valuation()),
                                valuation_json(v[2].valuation())}},
                {"p", v.context().p()}});
    o.summary() << v << " -> " << to_string(s) << "\n";
    return kExitSuccess;
}

int cmd_certify(const Globals &g, const std::string &text, Output &o)
{
    const ModulusContext ctx(g.mod);
    const WordAB w = parse_word(text);
    json doc = {{"input", text}, {"word", to_string(w)}, {"p", ctx.p()}};

    const auto direct = [&](const std::string &reason) {
        const bool identity = is_identity(eval_word(w, ctx));
        doc["stage"] = "direct_evaluation";
        doc["fallback_reason"] = reason;
        doc["identity"] = identity;
        o.json_doc(doc);
        o.summary() << "certify '" << to_string(w) << "' over " << ctx << ": " << reason
                    << ", fell back to direct evaluation: " << (identity ? "IDENTITY" : "not the identity") << "\n";
        return identity ? kExitIdentityHit : kExitSuccess;
    };

    Conjugated conj;
    try
    {
        conj = conjugate_to_B_neg_suffix(w);
    }
    catch (const NoNegativeBSyllable &)
    {
        return direct("no_negative_B_suffix");
    }
    const NormalForm nf = to_normal_form(conj.word);
    doc["conjugated"] = to_string(conj.word);
    doc["conjugator"] = to_string(conj.conjugator);
    doc["normal_form"] = to_string(nf);
    doc["theorem_conditions"] = theorem_conditions(nf);
    if (!theorem_conditions(nf))
        return direct("conditions_not_met");

    Certificate cert;
    try
    {
        cert = certify(nf, ctx);
    }
    catch (const ScheduleViolation &e)
    {
        doc["stage"] = "schedule_violation";
        doc["error"] = e.what();
        doc["step"] = e.step();
        o.json_doc(doc);
        o.error() << "ScheduleViolation: " << e.what() << "\n";
        return kExitFailure;
    }
    if (!cert.verdict)
        return direct("certificate_inconclusive");
    doc["stage"] = "certificate";
    doc["identity"] = false;
    doc["certificate"] = to_json(cert);
    o.json_doc(doc);
    o.summary() << "certify '" << to_string(w) << "' over " << ctx << ": " << to_string(nf) << " certified in "
                << cert.steps.size() << " steps, not the identity\n";
    return kExitSuccess;
}

int cmd_search(const Globals &g, const std::string &alphabet, unsigned max_syllables, bool emit_certificates,
               Output &o)
{
    SearchConfig config;
    config.alphabet = parse_alphabet(alphabet);
    config.max_syllables = max_syllables;
    config.modulus = ModulusContext(g.mod);
    config.parallelism = g.workers;
    config.seed = g.seed;
    config.keep_certificates = emit_certificates;
    const SearchReport r = run_search(config);
    const auto &oc = r.outcome;

    json hits = json::array();
    for (const auto &h : oc.identity_hits)
        hits.push_back({{"word", h.word}, {"matrix", to_json(h.matrix)}});
    json issues = json::array();
    for (const auto &i : oc.issues)
        issues.push_back({{"word", i.word}, {"problem", i.problem}});
    json doc = {{"alphabet", to_string(config.alphabet)},
                {"max_syllables", config.max_syllables},
                {"p", config.modulus.p()},
                {"workers", config.parallelism},
                {"words_examined", oc.words_examined},
                {"words_by_length", oc.words_by_length},
                {"identity_hits", hits},
                {"wall_seconds", r.wall_seconds}};
    if (config.alphabet == Alphabet::A3B3)
    {
        doc["eligible"] = oc.eligible;
        doc["certificates_issued"] = oc.certificates_issued;
        doc["schedule_violations"] = oc.schedule_violations;
        doc["issues"] = issues;
        if (emit_certificates)
        {
            json certs = json::array();
            for (const auto &c : oc.certificates)
                certs.push_back(to_json(c));
            doc["certificates"] = certs;
        }
    }
    o.json_doc(doc);

    auto &s = o.summary();
    s << "search " << to_string(config.alphabet) << " up to " << config.max_syllables << " letters over "
      << config.modulus << ": " << oc.words_examined << " words, " << oc.identity_hits.size() << " identity hits";
    if (config.alphabet == Alphabet::A3B3)
        s << ", " << oc.certificates_issued << "/" << oc.eligible << " certified, " << oc.schedule_violations
          << " schedule violations";
    s << " (" << r.wall_seconds << " s)\n";
    if (!oc.identity_hits.empty())
    {
        o.error() << "IDENTITY HIT: " << oc.identity_hits.front().word
                  << " evaluates to the identity; this is a kernel candidate, see the JSON report\n";
        return kExitIdentityHit;
    }
    return r.certification_ok() ? kExitSuccess : kExitFailure;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Reduced Burau representation of B_4: identities, normal forms and ping-pong certificates",
                 "burau4"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--mod", g.mod, "coefficient modulus p (0 = integers)")->capture_default_str();
    app.add_flag("--json", g.json_only, "JSON only: no summary on stderr");
    app.add_option("--seed", g.seed, "seed for randomized suites")->capture_default_str();
    app.add_option("--workers", g.workers, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();

    auto *verify = app.add_subcommand("verify", "check the matrix identities and ping-pong inclusions");
    std::size_t samples = 1000;
    verify->add_option("--samples", samples, "random members per set")->check(CLI::PositiveNumber)->capture_default_str();

    auto *eval = app.add_subcommand("eval", "evaluate a word in A, B or a braid word");
    std::optional<std::string> word, braid;
    bool check_identity = false;
    auto *word_opt = eval->add_option("--word", word, "word such as \"A^3 B^-3\"");
    auto *braid_opt = eval->add_option("--braid", braid, "braid word such as \"s3 s1'\"");
    word_opt->excludes(braid_opt);
    eval->add_flag("--check-identity", check_identity, "report whether the matrix is the identity");

    auto *rewrite = app.add_subcommand("rewrite", "conjugate to a B^-i suffix and rewrite into T/B normal form");
    std::string rewrite_word;
    rewrite->add_option("--word", rewrite_word, "word in A, B")->required();

    app.add_subcommand("classify", "classify a vector (JSON on stdin) into X1, X2, X3 or none");

    auto *certify_cmd = app.add_subcommand("certify", "prove a word is not the identity");
    std::string certify_word;
    certify_cmd->add_option("--word", certify_word, "word in A, B")->required();

    auto *search = app.add_subcommand("search", "exhaustive bounded word search");
    std::string alphabet = "AB";
    unsigned max_syllables = 5;
    bool emit_certificates = false;
    search->add_option("--alphabet", alphabet, "AB or A3B3")->check(CLI::IsMember({"AB", "A3B3"}))->capture_default_str();
    search->add_option("--max-syllables", max_syllables, "longest word, in letters")->capture_default_str();
    search->add_flag("--emit-certificates", emit_certificates, "include every certificate in the report");

    std::vector<std::string> argv_store{"burau4"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char *> argv;
    for (const auto &a : argv_store)
        argv.push_back(a.c_str());

    try
    {
        app.parse(static_cast<int>(argv.size()), argv.data());
    }
    catch (const CLI::CallForHelp &)
    {
        out << app.help();
        return kExitSuccess;
    }
    catch (const CLI::ParseError &e)
    {
        err << "usage error: " << e.what() << "\n";
        return kExitFailure;
    }

    Output o(out, err, g.json_only);
    try
    {
        (void)ModulusContext(g.mod);
    }
    catch (const ContextError &e)
    {
        err << "usage error: --mod: " << e.what() << "\n";
        return kExitFailure;
    }

    try
    {
        if (verify->parsed())
            return cmd_verify(g, samples, o);
        if (eval->parsed())
        {
            if (!word && !braid)
            {
                err << "usage error: eval needs --word or --braid\n";
                return kExitFailure;
            }
            return cmd_eval(g, word, braid, check_identity, o);
        }
        if (rewrite->parsed())
            return cmd_rewrite(g, rewrite_word, o);
        if (app.got_subcommand("classify"))
            return cmd_classify(g, in, o);
        if (certify_cmd->parsed())
            return cmd_certify(g, certify_word, o);
        if (search->parsed())
            return cmd_search(g, alphabet, max_syllables, emit_certificates, o);
    }
    catch (const ParseError &e)
    {
        o.json_doc({{"error", e.what()}, {"position", e.position()}});
        err << "parse error: " << e.what() << "\n";
        return kExitFailure;
    }
    catch (const std::exception &e)
    {
        o.json_doc({{"error", e.what()}});
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitFailure;
}

} // namespace burau4
