#pragma once

#include <string>
#include <vector>

#include "burau4/pingpong.hpp"

namespace burau4
{

/// AB: letters A^±1, B^±1. A3B3: letters A^±3, B^±3.
enum class Alphabet
{
    AB,
    A3B3,
};

std::string to_string(Alphabet a);
Alphabet parse_alphabet(const std::string &text);
/// Largest accepted max_syllables: 12 for AB, 6 for A3B3.
unsigned syllable_cap(Alphabet a);

struct SearchConfig
{
    Alphabet alphabet = Alphabet::AB;
    unsigned max_syllables = 1;
    ModulusContext modulus;
    unsigned parallelism = 1;
    std::uint64_t seed = 0;
    bool keep_certificates = false;

    /// Throws std::invalid_argument on an out-of-range field.
    void validate() const;
};

struct IdentityHit
{
    std::string word;
    Mat3 matrix;

    friend bool operator==(const IdentityHit &, const IdentityHit &) = default;
};

struct CertificateIssue
{
    std::string word;
    std::string problem;

    friend bool operator==(const CertificateIssue &, const CertificateIssue &) = default;
};

/// Everything a search determines; independent of worker count.
struct SearchOutcome
{
    std::size_t words_examined = 0;
    std::vector<std::size_t> words_by_length; // index k-1 holds the count of length k
    std::vector<IdentityHit> identity_hits;
    // A3B3 only
    std::size_t eligible = 0; // admit a B^-i suffix conjugate
    std::size_t certificates_issued = 0;
    std::size_t schedule_violations = 0;
    std::vector<CertificateIssue> issues;
    std::vector<Certificate> certificates; // when keep_certificates

    friend bool operator==(const SearchOutcome &, const SearchOutcome &) = default;
};

struct SearchReport
{
    SearchConfig config;
    SearchOutcome outcome;
    double wall_seconds = 0;

    bool certification_ok() const;
};

/**
 * Enumerates every freely reduced word over the alphabet with 1..max_syllables
 * letters, in depth-first order with letters ordered x, x^-1, y, y^-1.
 *
 * Each word's matrix is its parent's times one letter matrix. Any identity is
 * recorded as a hit. For A3B3 every word with a B^-i suffix conjugate also
 * goes through normal form and certification.
 */
SearchReport run_search(const SearchConfig &config);

/// Number of freely reduced words of length k over two free generators.
std::size_t reduced_word_count(unsigned k);

} // namespace burau4
