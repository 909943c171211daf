#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace degbound {

/// Arbitrary-precision integer. Quantities documented as unsigned (binomials,
/// sphere sums, powers of two) are simply never negative.
using BigInt = boost::multiprecision::cpp_int;
using BigUnsigned = BigInt;
/// Exact rational, always in lowest terms with a positive denominator.
using BigRational = boost::multiprecision::cpp_rational;

enum class Sign : int { Negative = -1, Zero = 0, Positive = 1 };

const char *sign_name(Sign s);

struct CertifiedSign {
    Sign sign;
    /// Bits of ln 2 consumed to resolve the sign (0 when no ln 2 was needed).
    int precision_bits;
};

/// Raised when a sign cannot be resolved below the configured precision ceiling.
class UnresolvedSign : public std::runtime_error {
   public:
    explicit UnresolvedSign(int ceiling_bits);
    int ceiling_bits() const noexcept {
        return ceiling_bits_;
    }

   private:
    int ceiling_bits_;
};

inline constexpr int kDefaultPrecisionCeiling = 4096;

/// C(n, i); zero when i > n.
BigUnsigned binom(std::int64_t n, std::int64_t i);

/// f_t(n) = sum_{i=0}^{t} 3^i C(n, i), the number of Pauli errors of weight at most t
/// on n qubits. Throws std::domain_error for negative n or t.
BigUnsigned sphere_sum(std::int64_t n, std::int64_t t);

/// Three-way comparison of lhs against 2^e. Decided from bit positions alone; 2^e is
/// never materialized. A negative e is accepted (2^e < 1 then).
std::strong_ordering cmp_pow2(const BigUnsigned &lhs, std::int64_t e);

/// Smallest c with x <= 2^c. Requires x >= 1.
std::int64_t ceil_log2(const BigUnsigned &x);

/// True iff x is an exact power of two.
bool is_pow2(const BigUnsigned &x);

/// 2^e as an integer (e >= 0).
BigUnsigned pow2(std::int64_t e);

/// A rational enclosure lower <= ln 2 <= upper whose denominators are 2^precision_bits.
struct Ln2Enclosure {
    BigRational lower;
    BigRational upper;
    int precision_bits;
};

/// Deterministic enclosure of ln 2 from the series 2*artanh(1/3), with every term
/// rounded down for the lower end and up for the upper end, plus one ulp for the
/// truncated tail. Results are memoized per precision.
Ln2Enclosure ln2_enclosure(int precision_bits);

/// Certified sign of q - r*ln 2. Precision starts at 64 bits and doubles until the
/// enclosure separates the value from zero. Since ln 2 is irrational the result is
/// never Zero unless r == 0.
CertifiedSign sign_of_q_minus_r_ln2(
    const BigRational &q, const BigRational &r, int precision_ceiling = kDefaultPrecisionCeiling);

/// Round a rational half-to-even at `places` decimal digits and render it, e.g. "-3.328".
std::string to_decimal_half_even(const BigRational &value, int places);

/// Nearest double, for display only.
double to_double(const BigRational &value);

}  // namespace degbound
