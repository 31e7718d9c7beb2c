#include <doctest.h>

#include <sstream>

#include "burau4/cli.hpp"
#include "burau4/json_io.hpp"

using namespace burau4;

namespace
{

struct Run
{
    int code;
    json doc;
    std::string err;
};

Run run(const std::vector<std::string> &args, const std::string &stdin_text = "")
{
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    const int code = run_cli(args, in, out, err);
    json doc = out.str().empty() ? json() : json::parse(out.str());
    return {code, doc, err.str()};
}

} // namespace

TEST_CASE("verify")
{
    const Run z = run({"verify", "--mod", "0", "--samples", "200"});
    CHECK(z.code == kExitSuccess);
    CHECK(z.doc.at("pass") == true);
    CHECK(z.doc.at("lemma").at("substitution").at("adopted") == "lemma");

    const Run five = run({"--mod", "5", "verify", "--samples", "200"});
    CHECK(five.code == kExitSuccess);
    CHECK(five.doc.at("p") == 5);

    const Run bad = run({"verify", "--mod", "1"});
    CHECK(bad.code == kExitFailure);
    CHECK(bad.err.find("usage error") != std::string::npos);
}

TEST_CASE("eval")
{
    const auto &k = constants_for({});
    const Run w = run({"eval", "--word", "B^-1", "--mod", "0"});
    CHECK(w.code == kExitSuccess);
    CHECK(mat_from_json(w.doc.at("matrix")) == inverse(k.B));

    const Run b = run({"eval", "--braid", "s3 s1'", "--mod", "0"});
    CHECK(mat_from_json(b.doc.at("matrix")) == k.B);

    const Run c = run({"eval", "--word", "A B A^-1 B^-1", "--mod", "2", "--check-identity"});
    CHECK(c.doc.at("identity") == false);
    CHECK(mat_from_json(c.doc.at("matrix")).context() == ModulusContext(2));

    const Run e = run({"eval", "--word", "A B^-2 C"});
    CHECK(e.code == kExitFailure);
    CHECK(e.doc.at("position") == 7);

    CHECK(run({"eval"}).code == kExitFailure);
    CHECK(run({"eval", "--word", "A", "--braid", "s1"}).code == kExitFailure);
}

TEST_CASE("rewrite")
{
    const Run r = run({"rewrite", "--word", "B^-1 A^3"});
    CHECK(r.code == kExitSuccess);
    CHECK(r.doc.at("conjugated") == "A^3 B^-1");
    CHECK(r.doc.at("conjugator") == "B^-1");
    CHECK(r.doc.at("normal_form") == "T^1 . B^3 . T^1 . B^1 . T^2");
    CHECK(r.doc.at("matches_direct_evaluation") == true);

    const Run f = run({"rewrite", "--word", "A^2 B"});
    CHECK(f.doc.at("fallback") == "no_negative_B_suffix");
}

TEST_CASE("classify reads a vector from stdin")
{
    const Run r = run({"classify"}, R"({"coords": [{"terms": {"0": 1}}, {"terms": {}}, {"terms": {}}], "p": 0})");
    CHECK(r.code == kExitSuccess);
    CHECK(r.doc.at("set") == "X1");
    CHECK(r.doc.at("valuations") == json::parse(R"([0, "+inf", "+inf"])"));

    const Run v0 = run({"--mod", "3", "classify"}, R"({"coords": [{"terms": {}}, {"terms": {}}, {"terms": {"0": 1}}]})");
    CHECK(v0.doc.at("set") == "none");
    CHECK(v0.doc.at("p") == 3);

    CHECK(run({"classify"}, "not json").code == kExitFailure);
}

TEST_CASE("certify")
{
    const Run ok = run({"certify", "--word", "A^3 B^-3", "--mod", "2"});
    CHECK(ok.code == kExitSuccess);
    CHECK(ok.doc.at("stage") == "certificate");
    CHECK(ok.doc.at("identity") == false);
    const Certificate c = certificate_from_json(ok.doc.at("certificate"));
    CHECK(c.verdict);
    CHECK(c.modulus == ModulusContext(2));

    const Run fallback = run({"certify", "--word", "A B^-1", "--mod", "3"});
    CHECK(fallback.code == kExitSuccess);
    CHECK(fallback.doc.at("stage") == "direct_evaluation");
    CHECK(fallback.doc.at("fallback_reason") == "conditions_not_met");
    CHECK(fallback.doc.at("identity") == false);

    const Run positive = run({"certify", "--word", "A^3 B^3"});
    CHECK(positive.doc.at("fallback_reason") == "no_negative_B_suffix");
    CHECK(positive.doc.at("identity") == false);

    const Run empty = run({"certify", "--word", "A A^-1"});
    CHECK(empty.code == kExitFailure);
    CHECK(empty.doc.contains("error"));
}

TEST_CASE("search")
{
    const Run ab = run({"search", "--alphabet", "AB", "--max-syllables", "1"});
    CHECK(ab.code == kExitSuccess);
    CHECK(ab.doc.at("words_examined") == 4);
    CHECK(ab.doc.at("identity_hits").empty());

    const Run a3 = run({"--mod", "3", "--workers", "2", "search", "--alphabet", "A3B3", "--max-syllables", "3",
                        "--emit-certificates"});
    CHECK(a3.code == kExitSuccess);
    CHECK(a3.doc.at("words_examined") == 52);
    CHECK(a3.doc.at("certificates_issued") == a3.doc.at("eligible"));
    for (const auto &c : a3.doc.at("certificates"))
        CHECK(to_json(certificate_from_json(c)) == c);

    CHECK(run({"search", "--alphabet", "AB", "--max-syllables", "13"}).code == kExitFailure);
    CHECK(run({"search", "--alphabet", "XY"}).code == kExitFailure);
}

TEST_CASE("--json silences the summary")
{
    CHECK_FALSE(run({"eval", "--word", "A"}).err.empty());
    CHECK(run({"--json", "eval", "--word", "A"}).err.empty());
}
