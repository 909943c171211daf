#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "degbound/exact_arith.hpp"

namespace degbound {

/// Parameters [[n,k,d]] of a stabilizer code.
struct CodeParams {
    std::int64_t n = 0;
    std::int64_t k = 0;
    std::int64_t d = 1;

    /// Number of correctable errors, floor((d-1)/2).
    std::int64_t t() const {
        return (d - 1) / 2;
    }
    /// Throws std::invalid_argument unless n >= 1, 0 <= k <= n, d >= 1.
    void validate() const;
};

/// Count and total weight of independent stabilizer generators of weight <= 2t.
struct DegeneracyProfile {
    std::int64_t ell = 0;
    std::int64_t sigma = 0;

    /// Throws std::invalid_argument unless ell <= sigma <= 2t*ell.
    void validate(std::int64_t t) const;
    bool operator==(const DegeneracyProfile &) const = default;
};

enum class BoundId {
    QuantumHamming,
    ClassicalHamming,
    Lemma1,
    EllTBound,
    DegenerateBound,
    PriorDistance3,
    QuantumSingleton,
};

std::string_view bound_name(BoundId id);

/// Exact integer comparison lhs <= rhs that decided a verdict.
struct Witness {
    BigInt lhs;
    BigInt rhs;
};

struct BoundVerdict {
    BoundId bound;
    /// The queried value: k for the quantum bounds, K for the classical one.
    BigInt query;
    /// Largest admissible value; empty when no value is admissible.
    std::optional<BigInt> max_admissible;
    bool holds = false;
    /// query == max_admissible.
    bool saturated = false;
    /// witness.lhs == witness.rhs, i.e. the bound is met with equality.
    bool equality = false;
    Witness witness;
};

/// Largest k >= 0 with 2^k f_t(n) <= 2^n; empty when even k = 0 fails.
std::optional<std::int64_t> qhamming_max_k(std::int64_t n, std::int64_t t);

/// floor(h_t(m)) where h_t(m) = m - log2 f_t(m) for m >= 0 and h_t(m) = m for m < 0.
/// May be negative.
std::int64_t hamming_floor(std::int64_t m, std::int64_t t);

/// K * sum_{i<=t} (q-1)^i C(n,i) <= q^n with t = floor((d-1)/2).
BoundVerdict classical_hamming_holds(std::int64_t n, const BigInt &K, std::int64_t d, std::int64_t q);

/// k <= n - ell - log2 f_t(n - sigma) when sigma <= n, else k <= n - ell.
std::optional<std::int64_t> lemma1_max_k(std::int64_t n, std::int64_t t, const DegeneracyProfile &profile);

/// Same bound through the shifted form h_t(n - sigma) + sigma - ell.
std::optional<std::int64_t> shifted_form_max_k(std::int64_t n, std::int64_t t, const DegeneracyProfile &profile);

/// The (ell,t)-bound: the profile bound at the worst case sigma = 2t*ell.
std::optional<std::int64_t> ell_t_bound_max_k(std::int64_t n, std::int64_t t, std::int64_t ell);

/// k <= n - 1 - log2 f_t(n - 2t), the bound for degenerate codes. Requires n >= 2t+1.
std::optional<std::int64_t> degenerate_bound_max_k(std::int64_t n, std::int64_t t);

/// Quantum Singleton k <= n - 2d + 2; empty when n < 2d - 2 (no code).
std::optional<std::int64_t> singleton_max_k(std::int64_t n, std::int64_t d);

/// Largest k with 4n - k + 1 <= 2^(n-k), the earlier distance-3 bound for degenerate codes.
std::optional<std::int64_t> prior_bound_max_k(std::int64_t n);

// Verdicts for a queried k. Each decides holds from an exact integer comparison.
BoundVerdict qhamming_verdict(std::int64_t n, std::int64_t k, std::int64_t t);
BoundVerdict lemma1_verdict(std::int64_t n, std::int64_t k, std::int64_t t, const DegeneracyProfile &profile);
BoundVerdict ell_t_verdict(std::int64_t n, std::int64_t k, std::int64_t t, std::int64_t ell);
BoundVerdict degenerate_verdict(std::int64_t n, std::int64_t k, std::int64_t t);
BoundVerdict singleton_verdict(std::int64_t n, std::int64_t k, std::int64_t d);
BoundVerdict prior_bound_holds(std::int64_t n, std::int64_t k);

/// Real-valued (ell,sigma) bound n - ell - log2 f_t(n-sigma) in double precision.
/// Display only; never used for a decision.
double lemma1_curve_approx(std::int64_t n, std::int64_t t, std::int64_t ell, std::int64_t sigma);

}  // namespace degbound
