#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "degbound/exact_arith.hpp"

namespace degbound {

/// Polynomial with exact rational coefficients, lowest degree first.
class RationalPolynomial {
   public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<BigRational> coefficients);

    const std::vector<BigRational> &coefficients() const {
        return coefficients_;
    }
    std::size_t degree() const {
        return coefficients_.empty() ? 0 : coefficients_.size() - 1;
    }
    BigRational operator()(const BigRational &x) const;
    RationalPolynomial derivative() const;

   private:
    std::vector<BigRational> coefficients_;
};

/// f_t(x) = sum_i 3^i x(x-1)...(x-i+1)/i! expanded in powers of x.
RationalPolynomial sphere_polynomial(std::int64_t t);

/// f_t, f'_t and f''_t at one point.
struct DerivativeTriple {
    BigRational f;
    BigRational f1;
    BigRational f2;
};

DerivativeTriple derivative_triple(std::int64_t t, const BigRational &x);

/// h_t at an integer. Values with a closed integer form are returned directly;
/// otherwise the exact pair (n, f_t(n)) with h_t(n) = n - log2 f_t(n).
struct HValue {
    enum class Kind { Integer, Logarithmic };
    Kind kind = Kind::Integer;
    std::int64_t value = 0;  // valid for Kind::Integer
    std::int64_t n = 0;
    BigUnsigned f;  // valid for Kind::Logarithmic

    /// floor(h_t(n)).
    std::int64_t floor() const;
};

HValue h_value_floor(std::int64_t t, std::int64_t n);

/// Certified sign of h'_t(x) = 1 - f'/(ln2 f), i.e. the sign of ln2*f - f'.
/// Requires f_t(x) > 0.
CertifiedSign hprime_sign(std::int64_t t, const BigRational &x, int precision_ceiling = kDefaultPrecisionCeiling);

/// h'_t(x) evaluated with a 128-bit ln 2 enclosure and rounded half-even at three
/// decimals. Display only.
std::string hprime_approx(std::int64_t t, const BigRational &x);

/// Sign of (f')^2 - f f'', which is the sign of h''_t wherever f_t > 0.
Sign hsecond_sign(std::int64_t t, const BigRational &x);

// Bulk verification of the properties of h_t used by the threshold argument.

struct CheckOutcome {
    std::string check;
    std::int64_t t = 0;
    bool passed = true;
    std::int64_t cases = 0;
    /// First counterexample (exact integers), or a short summary on success.
    std::string detail;
};

struct AppendixReport {
    std::vector<CheckOutcome> outcomes;

    bool all_passed() const;
    std::int64_t failures() const;
};

/// h_t(n) = -n for 0 <= n <= t, i.e. f_t(n) = 4^n.
CheckOutcome check_binomial_identity(std::int64_t t);
/// f_t(n) > 0 for integers n in [max(0, t-1), n_max].
CheckOutcome check_positivity(std::int64_t t, std::int64_t n_max);
/// f_t(n-1) <= f_t(n) for n in [1, n_max].
CheckOutcome check_unit_shift(std::int64_t t, std::int64_t n_max);
/// h'_t(2t-2) < 0 and h'_t(2t) > 0, certified.
CheckOutcome check_derivative_signs(std::int64_t t);
/// (f')^2 - f f'' > 0 at integers x in [x_lo, x_hi].
CheckOutcome check_convexity(std::int64_t t, std::int64_t x_lo, std::int64_t x_hi);
/// f'_t(x) > 0 and f_t(x) > 0 at integers x in [t, x_max], hence h'_t(x) < 1.
CheckOutcome check_slope_below_one(std::int64_t t, std::int64_t x_max);
/// The integer sequence h_t(n) strictly decreases on [0, 2t-2], strictly increases
/// on [2t, n_max], so its minimum lies in [2t-2, 2t]. Comparisons are 2 f(n) vs f(n+1).
CheckOutcome check_local_minimum(std::int64_t t, std::int64_t n_max);
/// For a in [a0, a0+extra]: f_t(2ta) < 2^a implies dominance at `samples` spread lengths.
CheckOutcome check_shift_dominance(std::int64_t t, std::int64_t samples = 200, std::int64_t extra = 4);

/// Position of the minimum of the integer sequence h_t(n) over [max(0,2t-2), 2t].
std::int64_t hamming_sequence_minimum(std::int64_t t);

/// All checks for t in [t_min, t_max] with x_max as the integer range limit.
/// Outcomes are ordered by t, then by check.
AppendixReport verify_appendix(std::int64_t t_min, std::int64_t t_max, std::int64_t x_max);

}  // namespace degbound
