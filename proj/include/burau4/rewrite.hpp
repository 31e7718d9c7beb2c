#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "burau4/burau.hpp"

namespace burau4
{

enum class Letter : char
{
    A = 'A',
    B = 'B',
};

struct Syllable
{
    Letter letter;
    long exponent;

    friend bool operator==(const Syllable &, const Syllable &) = default;
};

/// Word in A, B as written left to right; the matrix is the left-to-right product.
/// Adjacent syllables have distinct letters and no exponent is zero.
class WordAB
{
public:
    WordAB() = default;
    /// Freely reduces the input (merges equal neighbours, drops zero exponents).
    explicit WordAB(const std::vector<Syllable> &syllables);

    const std::vector<Syllable> &syllables() const noexcept { return syllables_; }
    bool empty() const noexcept { return syllables_.empty(); }
    std::size_t size() const noexcept { return syllables_.size(); }

    WordAB inverse() const;
    friend WordAB operator*(const WordAB &u, const WordAB &v);
    friend bool operator==(const WordAB &, const WordAB &) = default;

private:
    std::vector<Syllable> syllables_;
};

/// Tokens `A`, `B`, each with an optional `^<integer>`, whitespace separated.
/// Rejects zero exponents and words that reduce to the empty word.
WordAB parse_word(std::string_view text);
std::string to_string(const WordAB &w);

/// Direct left-to-right product of A^k and B^k factors.
Mat3 eval_word(const WordAB &w, ModulusContext ctx = {});

class NoNegativeBSyllable : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct Conjugated
{
    WordAB word;       // cyclically reduced, last syllable is B^-i
    WordAB conjugator; // word = conjugator^-1 * w * conjugator
};

Conjugated conjugate_to_B_neg_suffix(const WordAB &w);

/**
 * T^lead B^{n_k} T^{m_{k-1}} ... T^{m_1} B^{n_1} T^2.
 *
 * b_powers holds n_1..n_k and t_powers holds m_1..m_{k-1}, both in
 * application order (rightmost factor first).
 */
struct NormalForm
{
    int lead = 0;
    std::vector<long> b_powers;
    std::vector<int> t_powers;

    friend bool operator==(const NormalForm &, const NormalForm &) = default;
};

/// `T^m . B^nk . T^mk-1 . ... . B^n1 . T^2`; a lead of 0 is omitted.
std::string to_string(const NormalForm &nf);
NormalForm parse_normal_form(std::string_view text);

/// Requires a non-empty word ending in B^-i; throws std::invalid_argument otherwise.
NormalForm to_normal_form(const WordAB &w, SubstitutionRule rule);
/// Uses the rule confirmed by verify_lemma_identities over Z.
NormalForm to_normal_form(const WordAB &w);

/// The substitution rule verified over Z (computed once).
SubstitutionRule verified_substitution();

Mat3 eval_normal_form(const NormalForm &nf, ModulusContext ctx = {});

/// n_i >= 2 after m_{i-1} = +1, n_i >= 3 after m_{i-1} = -1, for i >= 2.
bool theorem_conditions(const NormalForm &nf);

} // namespace burau4
