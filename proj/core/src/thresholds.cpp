#include "degbound/thresholds.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace degbound {

namespace {

void require_positive_t(std::int64_t t) {
    if (t < 1) {
        throw std::invalid_argument("threshold computations need t >= 1 (got " + std::to_string(t) + ")");
    }
}

// f_t(0..horizon), shared by every a in one report.
class SphereTable {
   public:
    SphereTable(std::int64_t t, std::int64_t horizon) : t_(t) {
        values_.reserve(static_cast<std::size_t>(horizon) + 1);
        for (std::int64_t n = 0; n <= horizon; n++) {
            values_.push_back(sphere_sum(n, t));
        }
    }

    std::int64_t horizon() const {
        return static_cast<std::int64_t>(values_.size()) - 1;
    }

    bool dominance(std::int64_t a, std::int64_t n) const {
        const BigInt &fn = values_[static_cast<std::size_t>(n)];
        std::int64_t shift = 2 * t_ * a;
        if (n < shift) {
            return cmp_pow2(fn, a) != std::strong_ordering::greater;
        }
        BigInt rhs = values_[static_cast<std::size_t>(n - shift)];
        rhs <<= static_cast<unsigned>(a);
        return fn <= rhs;
    }

    CrossingPoint crossing(std::int64_t a) const {
        std::int64_t top = horizon();
        if (!dominance(a, top)) {
            throw HorizonTooSmall(
                "no n_a for a=" + std::to_string(a) + ", t=" + std::to_string(t_) +
                ": dominance fails at the horizon " + std::to_string(top) + "; raise the horizon");
        }
        std::int64_t n = top;
        while (n > 1 && dominance(a, n - 1)) {
            n--;
        }
        CrossingPoint cp{a, n, {}};
        for (std::int64_t m = 1; m < n; m++) {
            if (dominance(a, m)) {
                cp.early_dominance.push_back(m);
            }
        }
        return cp;
    }

   private:
    std::int64_t t_;
    std::vector<BigInt> values_;
};

BigInt factorial(std::int64_t t) {
    BigInt r = 1;
    for (std::int64_t i = 2; i <= t; i++) {
        r *= i;
    }
    return r;
}

constexpr std::array<ReferenceRow, 7> kReference{{
    {1, 5, 5, 12},
    {2, 11, 9, 60},
    {3, 17, 14, 150},
    {4, 23, 20, 288},
    {5, 29, 25, 470},
    {6, 35, 30, 696},
    {7, 41, 35, 980},
}};

}  // namespace

bool local_max_condition(std::int64_t a, std::int64_t t) {
    if (a < 1) {
        throw std::invalid_argument("local_max_condition: a must be positive");
    }
    require_positive_t(t);
    return cmp_pow2(sphere_sum(2 * t * a, t), a) == std::strong_ordering::less;
}

bool dominance(std::int64_t a, std::int64_t t, std::int64_t n) {
    if (a < 1 || n < 1) {
        throw std::invalid_argument("dominance: need a >= 1 and n >= 1");
    }
    require_positive_t(t);
    BigInt fn = sphere_sum(n, t);
    std::int64_t shift = 2 * t * a;
    if (n < shift) {
        return cmp_pow2(fn, a) != std::strong_ordering::greater;
    }
    return fn <= (sphere_sum(n - shift, t) << static_cast<unsigned>(a));
}

A0Result find_a0(std::int64_t t, const ThresholdConfig &config) {
    require_positive_t(t);
    const BigInt t_factorial = factorial(t);

    TailCertificate tail;
    bool certified = false;
    for (std::int64_t a = 1; a <= config.max_a; a++) {
        BigInt lhs = boost::multiprecision::pow(BigInt(6 * t * a), static_cast<unsigned>(t)) * (t + 1);
        BigInt rhs = pow2(a) * t_factorial;
        if (lhs >= rhs) {
            continue;
        }
        auto slope = sign_of_q_minus_r_ln2(BigRational(-t), BigRational(-a));
        if (slope.sign != Sign::Positive) {
            continue;
        }
        tail.envelope_start = a;
        tail.envelope_lhs = std::move(lhs);
        tail.envelope_rhs = std::move(rhs);
        tail.slope_sign = slope.sign;
        tail.slope_precision_bits = slope.precision_bits;
        certified = true;
        break;
    }
    if (!certified) {
        throw HorizonTooSmall(
            "find_a0: polynomial envelope not certified below a=" + std::to_string(config.max_a) +
            " for t=" + std::to_string(t));
    }

    std::int64_t a0 = 1;
    for (std::int64_t a = tail.envelope_start; a >= 1; a--) {
        if (!local_max_condition(a, t)) {
            a0 = a + 1;
            break;
        }
    }
    tail.window_start = a0;
    tail.window_end = std::max(tail.envelope_start, a0 + config.window_extra);
    for (std::int64_t a = a0; a <= tail.window_end; a++) {
        if (!local_max_condition(a, t)) {
            throw std::logic_error(
                "find_a0: local maximum condition fails at a=" + std::to_string(a) + " inside the certified window");
        }
    }
    return {a0, std::move(tail)};
}

CrossingPoint find_n_a(std::int64_t a, std::int64_t t, std::int64_t horizon) {
    require_positive_t(t);
    if (a < 1) {
        throw std::invalid_argument("find_n_a: a must be positive");
    }
    if (horizon < 1) {
        throw HorizonTooSmall("find_n_a: horizon must be positive");
    }
    return SphereTable(t, horizon).crossing(a);
}

std::int64_t default_horizon(std::int64_t t, std::int64_t a0) {
    return std::max<std::int64_t>(500, 8 * t * a0);
}

ThresholdReport threshold_report(std::int64_t t, std::optional<std::int64_t> horizon, const ThresholdConfig &config) {
    require_positive_t(t);
    A0Result a0 = find_a0(t, config);

    ThresholdReport report;
    report.t = t;
    report.a0 = a0.a0;
    report.tail = std::move(a0.tail);
    report.scan_horizon = horizon.value_or(default_horizon(t, report.a0));
    if (report.scan_horizon < 2 * t * report.a0) {
        throw HorizonTooSmall(
            "horizon " + std::to_string(report.scan_horizon) + " is below 2t*a0 = " +
            std::to_string(2 * t * report.a0) + " for t=" + std::to_string(t) + "; raise the horizon");
    }

    SphereTable table(t, report.scan_horizon);
    report.N0 = 2 * t * report.a0;
    for (std::int64_t a = 1; a < report.a0; a++) {
        report.crossing_points.push_back(table.crossing(a));
        report.N0 = std::max(report.N0, report.crossing_points.back().n_a);
    }
    report.conjecture_holds = report.N0 == 2 * t * report.a0;
    return report;
}

std::int64_t compute_N(std::int64_t t, std::int64_t ell, std::optional<std::int64_t> horizon) {
    if (ell < 0) {
        throw std::invalid_argument("compute_N: ell must be nonnegative");
    }
    return threshold_report(t, horizon).N(ell);
}

std::span<const ReferenceRow> reference_table() {
    return kReference;
}

const ReferenceRow &reference_row(std::int64_t t) {
    if (t < 1 || t > static_cast<std::int64_t>(kReference.size())) {
        throw std::out_of_range("reference_row: table covers t = 1..7");
    }
    return kReference[static_cast<std::size_t>(t - 1)];
}

}  // namespace degbound
