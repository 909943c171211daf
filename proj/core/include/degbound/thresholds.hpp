#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "degbound/exact_arith.hpp"

namespace degbound {

/// Raised when a scan horizon is too short to settle a threshold.
class HorizonTooSmall : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// f_t(2ta) < 2^a: the (a,t)-bound's local maximum at n = 2ta lies strictly below
/// the quantum Hamming bound.
bool local_max_condition(std::int64_t a, std::int64_t t);

/// The (a,t)-bound is at most the (0,t)-bound at n:
///   f_t(n) <= 2^a f_t(n - 2ta)   when n >= 2ta,
///   f_t(n) <= 2^a                otherwise.
bool dominance(std::int64_t a, std::int64_t t, std::int64_t n);

/// Finite certificate that local_max_condition holds for every a >= a0.
///
/// Every a in [a0, window_end] is checked directly. Past envelope_start the terms
/// of f_t increase with i, so f_t(2ta) <= (t+1) (6ta)^t / t!; the certificate records
/// 2^A t! > (t+1)(6tA)^t at A = envelope_start together with the certified slope
/// A ln2 > t of a - t log2(6ta), which keeps the envelope below 2^a for all a >= A.
struct TailCertificate {
    std::int64_t window_start = 0;
    std::int64_t window_end = 0;
    std::int64_t envelope_start = 0;
    /// (t+1)(6tA)^t, compared against envelope_rhs = 2^A t!.
    BigInt envelope_lhs;
    BigInt envelope_rhs;
    Sign slope_sign = Sign::Zero;
    int slope_precision_bits = 0;
};

struct A0Result {
    std::int64_t a0 = 0;
    TailCertificate tail;
};

struct ThresholdConfig {
    /// Extra a values past a0 that are always checked directly.
    std::int64_t window_extra = 32;
    /// Give up if no envelope start is found below this a.
    std::int64_t max_a = 1 << 16;
};

/// Smallest a0 such that local_max_condition(a, t) holds for all a >= a0.
A0Result find_a0(std::int64_t t, const ThresholdConfig &config = {});

struct CrossingPoint {
    std::int64_t a = 0;
    std::int64_t n_a = 0;
    /// Lengths n < n_a at which dominance already held (it then fails again before n_a).
    std::vector<std::int64_t> early_dominance;
};

/// Smallest n such that dominance(a, t, n') holds for every n' in [n, horizon].
/// Throws HorizonTooSmall if dominance fails at the horizon itself.
CrossingPoint find_n_a(std::int64_t a, std::int64_t t, std::int64_t horizon);

/// max(500, 8 t a0).
std::int64_t default_horizon(std::int64_t t, std::int64_t a0);

struct ThresholdReport {
    std::int64_t t = 0;
    std::int64_t a0 = 0;
    std::vector<CrossingPoint> crossing_points;  // a = 1 .. a0-1
    std::int64_t N0 = 0;
    bool conjecture_holds = false;  // N0 == 2 t a0
    TailCertificate tail;
    std::int64_t scan_horizon = 0;

    /// N(ell, t) = N(0, t) + 2 t ell.
    std::int64_t N(std::int64_t ell) const {
        return N0 + 2 * t * ell;
    }
};

/// Runs find_a0, then find_n_a for each a < a0 over a shared table of f_t values.
/// An empty horizon selects default_horizon(t, a0).
ThresholdReport threshold_report(std::int64_t t, std::optional<std::int64_t> horizon = std::nullopt,
                                 const ThresholdConfig &config = {});

/// N(ell, t). N(t) of the degenerate bound is compute_N(t, 1).
std::int64_t compute_N(std::int64_t t, std::int64_t ell, std::optional<std::int64_t> horizon = std::nullopt);

struct ReferenceRow {
    std::int64_t t;
    std::int64_t linear;  // 3d - 4
    std::int64_t M;
    std::int64_t N;
};

/// Reference constants for t = 1..7.
std::span<const ReferenceRow> reference_table();
const ReferenceRow &reference_row(std::int64_t t);

}  // namespace degbound
