#include "degbound/exact_arith.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace degbound {

namespace mp = boost::multiprecision;

const char *sign_name(Sign s) {
    switch (s) {
        case Sign::Negative:
            return "negative";
        case Sign::Zero:
            return "zero";
        case Sign::Positive:
            return "positive";
    }
    return "?";
}

UnresolvedSign::UnresolvedSign(int ceiling_bits)
    : std::runtime_error(
          "sign of q - r*ln2 unresolved at the precision ceiling of " + std::to_string(ceiling_bits) +
          " bits"),
      ceiling_bits_(ceiling_bits) {
}

BigUnsigned binom(std::int64_t n, std::int64_t i) {
    if (n < 0 || i < 0) {
        throw std::domain_error("binom: arguments must be nonnegative");
    }
    if (i > n) {
        return 0;
    }
    i = std::min(i, n - i);
    BigUnsigned r = 1;
    for (std::int64_t j = 0; j < i; j++) {
        r *= n - j;
        r /= j + 1;
    }
    return r;
}

BigUnsigned sphere_sum(std::int64_t n, std::int64_t t) {
    if (n < 0) {
        throw std::domain_error("sphere_sum: n must be nonnegative (got " + std::to_string(n) + ")");
    }
    if (t < 0) {
        throw std::domain_error("sphere_sum: t must be nonnegative");
    }
    // Running term 3^i C(n,i), updated by the ratio 3(n-i)/(i+1).
    BigUnsigned term = 1;
    BigUnsigned total = 1;
    for (std::int64_t i = 0; i < std::min(t, n); i++) {
        term *= 3 * (n - i);
        term /= i + 1;
        total += term;
    }
    return total;
}

std::strong_ordering cmp_pow2(const BigUnsigned &lhs, std::int64_t e) {
    if (lhs.sign() < 0) {
        throw std::domain_error("cmp_pow2: lhs must be nonnegative");
    }
    if (lhs.is_zero()) {
        return std::strong_ordering::less;
    }
    if (e < 0) {
        return std::strong_ordering::greater;
    }
    auto top = static_cast<std::int64_t>(mp::msb(lhs));
    if (top < e) {
        return std::strong_ordering::less;
    }
    if (top > e) {
        return std::strong_ordering::greater;
    }
    return static_cast<std::int64_t>(mp::lsb(lhs)) == e ? std::strong_ordering::equal
                                                        : std::strong_ordering::greater;
}

bool is_pow2(const BigUnsigned &x) {
    return x.sign() > 0 && mp::msb(x) == mp::lsb(x);
}

std::int64_t ceil_log2(const BigUnsigned &x) {
    if (x.sign() <= 0) {
        throw std::domain_error("ceil_log2: argument must be positive");
    }
    auto top = static_cast<std::int64_t>(mp::msb(x));
    return is_pow2(x) ? top : top + 1;
}

BigUnsigned pow2(std::int64_t e) {
    if (e < 0) {
        throw std::domain_error("pow2: exponent must be nonnegative");
    }
    BigUnsigned r = 1;
    r <<= static_cast<unsigned>(e);
    return r;
}

namespace {

Ln2Enclosure compute_ln2(int bits) {
    // ln 2 = sum_{k>=0} 2 / ((2k+1) 3^(2k+1)), scaled by 2^bits.
    const BigUnsigned numerator = pow2(bits + 1);
    const BigUnsigned scale = pow2(bits);
    BigUnsigned lower = 0;
    BigUnsigned upper = 0;
    BigUnsigned three_pow = 3;
    for (std::int64_t k = 0;; k++) {
        // Stop once the remaining tail is at most one ulp: 9*2^bits <= 4(2k+1)3^(2k+1).
        if (k > 0 && 9 * scale <= 4 * (2 * k + 1) * three_pow) {
            break;
        }
        BigUnsigned denom = (2 * k + 1) * three_pow;
        BigUnsigned q = numerator / denom;
        lower += q;
        upper += (q * denom == numerator) ? q : q + 1;
        three_pow *= 9;
    }
    upper += 1;
    return Ln2Enclosure{BigRational(lower, scale), BigRational(upper, scale), bits};
}

}  // namespace

Ln2Enclosure ln2_enclosure(int precision_bits) {
    if (precision_bits < 1) {
        throw std::domain_error("ln2_enclosure: precision must be positive");
    }
    static std::mutex mu;
    static std::map<int, Ln2Enclosure> cache;
    {
        std::lock_guard lock(mu);
        auto it = cache.find(precision_bits);
        if (it != cache.end()) {
            return it->second;
        }
    }
    Ln2Enclosure e = compute_ln2(precision_bits);
    std::lock_guard lock(mu);
    return cache.emplace(precision_bits, std::move(e)).first->second;
}

CertifiedSign sign_of_q_minus_r_ln2(const BigRational &q, const BigRational &r, int precision_ceiling) {
    if (r.is_zero()) {
        return {static_cast<Sign>(q.sign()), 0};
    }
    if (precision_ceiling < 1) {
        throw std::domain_error("sign_of_q_minus_r_ln2: precision ceiling must be positive");
    }
    for (int bits = std::min(64, precision_ceiling);; bits = std::min(bits * 2, precision_ceiling)) {
        Ln2Enclosure ln2 = ln2_enclosure(bits);
        // q - r*ln2 is decreasing in ln2 when r > 0, increasing when r < 0.
        BigRational lo = r.sign() > 0 ? q - r * ln2.upper : q - r * ln2.lower;
        BigRational hi = r.sign() > 0 ? q - r * ln2.lower : q - r * ln2.upper;
        if (lo.sign() > 0) {
            return {Sign::Positive, bits};
        }
        if (hi.sign() < 0) {
            return {Sign::Negative, bits};
        }
        if (bits >= precision_ceiling) {
            throw UnresolvedSign(precision_ceiling);
        }
    }
}

std::string to_decimal_half_even(const BigRational &value, int places) {
    if (places < 0) {
        throw std::domain_error("to_decimal_half_even: places must be nonnegative");
    }
    BigInt ten_pow = 1;
    for (int i = 0; i < places; i++) {
        ten_pow *= 10;
    }
    BigRational scaled = mp::abs(value) * ten_pow;
    BigInt num = mp::numerator(scaled);
    BigInt den = mp::denominator(scaled);
    BigInt q = num / den;
    BigInt rem2 = 2 * (num - q * den);
    if (rem2 > den || (rem2 == den && (q & 1) != 0)) {
        q += 1;
    }
    std::string digits = q.str();
    if (static_cast<int>(digits.size()) <= places) {
        digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
    }
    std::string out;
    if (value.sign() < 0 && !q.is_zero()) {
        out += '-';
    }
    out += digits.substr(0, digits.size() - static_cast<std::size_t>(places));
    if (places > 0) {
        out += '.';
        out += digits.substr(digits.size() - static_cast<std::size_t>(places));
    }
    return out;
}

double to_double(const BigRational &value) {
    return value.convert_to<double>();
}

}  // namespace degbound
