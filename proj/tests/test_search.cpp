#include <doctest.h>

#include "burau4/json_io.hpp"
#include "burau4/search.hpp"

using namespace burau4;

TEST_CASE("reduced word counts")
{
    CHECK(reduced_word_count(1) == 4);
    CHECK(reduced_word_count(2) == 12);
    CHECK(reduced_word_count(5) == 324);
}

TEST_CASE("enumeration is complete and duplicate-free")
{
    SearchConfig config;
    config.alphabet = Alphabet::AB;
    config.max_syllables = 7;
    config.modulus = ModulusContext(2);
    const SearchReport r = run_search(config);
    REQUIRE(r.outcome.words_by_length.size() == 7);
    std::size_t total = 0;
    for (unsigned k = 1; k <= 7; ++k)
    {
        CHECK(r.outcome.words_by_length[k - 1] == reduced_word_count(k));
        total += reduced_word_count(k);
    }
    CHECK(r.outcome.words_examined == total);
    CHECK(r.outcome.identity_hits.empty());
}

TEST_CASE("generators alone")
{
    SearchConfig config;
    config.max_syllables = 1;
    const SearchReport r = run_search(config);
    CHECK(r.outcome.words_examined == 4);
    CHECK(r.outcome.identity_hits.empty());
    CHECK(r.outcome.eligible == 0);
}

TEST_CASE("A3B3 search certifies every eligible word")
{
    SearchConfig config;
    config.alphabet = Alphabet::A3B3;
    config.max_syllables = 4;
    config.modulus = ModulusContext(2);
    config.keep_certificates = true;
    const SearchReport r = run_search(config);
    CHECK(r.outcome.words_examined == 160);
    CHECK(r.outcome.identity_hits.empty());
    CHECK(r.outcome.eligible == 80);
    CHECK(r.outcome.certificates_issued == 80);
    CHECK(r.outcome.schedule_violations == 0);
    CHECK(r.outcome.issues.empty());
    CHECK(r.certification_ok());
    REQUIRE(r.outcome.certificates.size() == 80);
    for (const auto &c : r.outcome.certificates)
    {
        CHECK(c.verdict);
        CHECK(certificate_from_json(json::parse(to_json(c).dump())) == c);
    }
}

TEST_CASE("parallel and serial runs agree")
{
    for (auto alphabet : {Alphabet::AB, Alphabet::A3B3})
    {
        SearchConfig config;
        config.alphabet = alphabet;
        config.max_syllables = alphabet == Alphabet::AB ? 6 : 4;
        config.modulus = ModulusContext(alphabet == Alphabet::AB ? 0 : 3);
        config.keep_certificates = true;
        const SearchReport serial = run_search(config);
        config.parallelism = 5;
        const SearchReport parallel = run_search(config);
        CHECK(serial.outcome == parallel.outcome);
    }
}

TEST_CASE("config validation")
{
    SearchConfig config;
    config.max_syllables = 13;
    CHECK_THROWS_AS(run_search(config), std::invalid_argument);
    config.alphabet = Alphabet::A3B3;
    config.max_syllables = 7;
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
    config.max_syllables = 0;
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
    config.max_syllables = 3;
    config.parallelism = 0;
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
    CHECK(parse_alphabet("A3B3") == Alphabet::A3B3);
    CHECK_THROWS(parse_alphabet("ABC"));
}
