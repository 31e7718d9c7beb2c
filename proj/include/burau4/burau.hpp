#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "burau4/linalg.hpp"

namespace burau4
{

/**
 * The fixed matrices of the B_4 construction over one coefficient ring.
 *
 * A = rho(a^-1), B = rho(b), the order-four matrix T with its inverse, the
 * diagonalizing matrices T_A, T_B, the common diagonal form Delta, and the
 * start vector v0 = (0, 0, 1). Everything is written down over Z and reduced
 * entrywise when the context is Z_p.
 */
struct BurauConstants
{
    ModulusContext ctx;
    Mat3 A, B, T, T_inv, T_A, T_B, Delta;
    Vec3 v0;

    static BurauConstants build(ModulusContext ctx = {});
};

/// Shared instance per modulus; built once, immutable afterwards.
const BurauConstants &constants_for(ModulusContext ctx);

struct BraidLetter
{
    int generator; // 1, 2 or 3
    int sign;      // +1 or -1

    friend bool operator==(const BraidLetter &, const BraidLetter &) = default;
};

using BraidWord = std::vector<BraidLetter>;

/// Reduced Burau image of sigma_i^sign.
///
/// sigma_1 = [-t t 0; 0 1 0; 0 0 1], sigma_2 = [1 0 0; 1 -t t; 0 0 1],
/// sigma_3 = [1 0 0; 0 1 0; 0 1 -t]. With these images the representation acts
/// on the right, rho(xy) = rho(y) rho(x); among the transposed, t <-> 1/t,
/// inverted and index-reversed variants of this family, this is the only
/// choice for which rho(a^-1) and rho(b) are exactly A and B.
Mat3 burau_generator(int i, int sign, ModulusContext ctx = {});

/// Product of generator images in reverse word order; the empty word is I.
Mat3 eval_braid(const BraidWord &w, ModulusContext ctx = {});

BraidWord inverse(const BraidWord &w);

/// a = s1 s2 s1' s3 s2' s1'
BraidWord braid_word_a();
/// b = s3 s1'
BraidWord braid_word_b();

/// Tokens `s1 s2 s3`, each optionally followed by `'` or `^-1`.
BraidWord parse_braid(std::string_view text);
std::string to_string(const BraidWord &w);

/// Which T-conjugate of B gives A: A = T^s B T^-s and A^-1 = T^-s B T^s.
struct SubstitutionRule
{
    int a_side = 1;

    std::string a_text() const;
    std::string a_inverse_text() const;
    friend bool operator==(const SubstitutionRule &, const SubstitutionRule &) = default;
};

struct IdentityCheck
{
    std::string name;
    bool holds = false;
    std::string note; // set when a check could not be evaluated
};

/// A vs A^-1 substitution: both published assignments, each decided by computation.
struct SubstitutionFinding
{
    bool lemma_holds = false; // A = T B T^-1, A^-1 = T^-1 B T
    bool prose_holds = false; // A = T^-1 B T, A^-1 = T B T^-1

    /// The assignment that holds; empty when neither (or, impossibly, both) do.
    std::optional<SubstitutionRule> rule() const;
    std::string source() const;
};

struct LemmaReport
{
    ModulusContext ctx;
    std::vector<IdentityCheck> checks;
    SubstitutionFinding substitution;

    bool all_pass() const;
    const IdentityCheck *first_failure() const;
};

/// Exact check of every identity relating A, B, T, T_A, T_B and Delta.
LemmaReport verify_lemma_identities(const BurauConstants &k);
LemmaReport verify_lemma_identities(ModulusContext ctx = {});

/// Substitution rule from a verified report; throws std::runtime_error if none was confirmed.
SubstitutionRule substitution_from(const LemmaReport &report);

} // namespace burau4
