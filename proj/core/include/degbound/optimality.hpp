#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace degbound {

struct OptimalKEntry {
    std::int64_t n;
    std::int64_t k;
};

/// Largest k of a distance-3 stabilizer code for n = 5..25.
std::span<const OptimalKEntry> optimal_k_table();
std::optional<std::int64_t> optimal_k_distance3(std::int64_t n);

/// Whether a degenerate [[n,k,3]] code may reach the optimal k, i.e. whether the
/// degenerate-code bound admits it. `optimal_k` overrides the table lookup;
/// without it n must lie in 5..25.
bool degenerate_allowed(std::int64_t n, std::optional<std::int64_t> optimal_k = std::nullopt);

/// f_m = (4^m - 1) / 3.
std::int64_t perfect_length(std::int64_t m);

struct LengthFamily {
    std::int64_t m = 0;
    std::int64_t f_m = 0;
    /// 8 f_m + {-1, +1, +2, +3, +4}.
    std::vector<std::int64_t> near_eight_f;
    /// f_{m+2} - {-1, +1, -2, +2, +3}.
    std::vector<std::int64_t> near_perfect;
};

LengthFamily length_family(std::int64_t m);

/// Sorted union of both families for m = 1..m_max.
std::vector<std::int64_t> corollary_lengths(std::int64_t m_max);

struct LengthDiscrepancy {
    std::int64_t n = 0;
    bool allowed_by_bound = false;
    bool in_families = false;
    std::optional<std::int64_t> bound_max_k;
    std::int64_t optimal_k = 0;
};

struct CrossCheckReport {
    /// Lengths on which the bound and the families agree that degeneracy is allowed.
    std::vector<std::int64_t> agreed_allowed;
    std::vector<LengthDiscrepancy> discrepancies;
};

/// Compares {n in [n_lo, n_hi] : degenerate_allowed(n)} with corollary_lengths(m_max).
/// The range must lie inside the optimal-k table; an empty range gives an empty report.
CrossCheckReport cross_check(std::int64_t m_max, std::int64_t n_lo, std::int64_t n_hi);

}  // namespace degbound
