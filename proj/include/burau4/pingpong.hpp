#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "burau4/rewrite.hpp"

namespace burau4
{

/**
 * Ping-pong sets, by the valuations v1, v2, v3 of the three coordinates
 * (+inf for a zero coordinate):
 *
 *   X1: v1 finite, v1 <= v2 - 2 and v1 <= v3 - 2
 *   X2: v1 = v2 = v3, finite
 *   X3: v2 finite, v2 <= v1 - 2 and v2 <= v3 - 2
 */
enum class PingPongSet
{
    X1,
    X2,
    X3,
    None,
};

std::string to_string(PingPongSet s);
PingPongSet parse_ping_pong_set(const std::string &text);

PingPongSet classify(const Vec3 &v);
bool in_set(const Vec3 &v, PingPongSet s);

/// Random member of X1, X2 or X3 (not None).
///
/// Base valuation n in [-5, 5], at most six terms per coordinate, leading
/// coefficients nonzero (over Z drawn from [-9, 9] \ {0}).
Vec3 random_member(PingPongSet s, ModulusContext ctx, std::mt19937_64 &rng);

enum class Operator
{
    T,
    TInv,
    T2,
    B,
};

std::string to_string(Operator op);
Operator parse_operator(const std::string &text);
const Mat3 &operator_matrix(Operator op, ModulusContext ctx);

/// Claim op^n * from ⊆ to, for n drawn uniformly from [min_power, max_power] per sample.
struct Inclusion
{
    std::string name;
    PingPongSet from;
    PingPongSet to;
    Operator op;
    long min_power = 1;
    long max_power = 1;
};

struct InclusionResult
{
    Inclusion inclusion;
    std::size_t samples = 0;
    std::size_t violations = 0;
};

struct MappingReport
{
    ModulusContext ctx;
    std::uint64_t seed = 0;
    std::vector<InclusionResult> results;
    bool t2_v0_in_x1 = false;
    bool v0_outside_sets = false;

    bool all_pass() const;
};

/// The ping-pong inclusions checked by verify_mappings.
std::vector<Inclusion> standard_inclusions();

/// Samples `samples` members of `inc.from` and counts images outside `inc.to`.
/// Deterministic in (seed, samples); `workers` only splits the work.
InclusionResult check_inclusion(const Inclusion &inc, ModulusContext ctx, std::size_t samples,
                                std::uint64_t seed, unsigned workers = 1);

MappingReport verify_mappings(ModulusContext ctx, std::size_t samples, std::uint64_t seed,
                              unsigned workers = 1);

struct CertificateStep
{
    Operator op;
    Vec3 vector;
    PingPongSet set;

    friend bool operator==(const CertificateStep &, const CertificateStep &) = default;
};

struct Certificate
{
    NormalForm word;
    ModulusContext modulus;
    std::vector<CertificateStep> steps;
    bool verdict = false;

    friend bool operator==(const Certificate &, const Certificate &) = default;
};

class ConditionsNotMet : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

class ScheduleViolation : public std::runtime_error
{
public:
    ScheduleViolation(const std::string &what, std::size_t step) : std::runtime_error(what), step_(step) {}
    std::size_t step() const noexcept { return step_; }

private:
    std::size_t step_;
};

/// Applies the word to v0 right to left, checking the set schedule:
/// T^2 lands in X1, every B-run ends in X1, T and T^-1 send X1 to X2 and X3.
/// A true verdict is cross-checked against the evaluated matrix.
Certificate certify(const NormalForm &nf, ModulusContext ctx);

} // namespace burau4
