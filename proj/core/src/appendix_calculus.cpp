#include "degbound/appendix_calculus.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "degbound/thresholds.hpp"

namespace degbound {

RationalPolynomial::RationalPolynomial(std::vector<BigRational> coefficients) : coefficients_(std::move(coefficients)) {
    while (coefficients_.size() > 1 && coefficients_.back().is_zero()) {
        coefficients_.pop_back();
    }
}

BigRational RationalPolynomial::operator()(const BigRational &x) const {
    BigRational acc = 0;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

RationalPolynomial RationalPolynomial::derivative() const {
    if (coefficients_.size() <= 1) {
        return RationalPolynomial({BigRational(0)});
    }
    std::vector<BigRational> out(coefficients_.size() - 1);
    for (std::size_t p = 1; p < coefficients_.size(); p++) {
        out[p - 1] = coefficients_[p] * static_cast<long long>(p);
    }
    return RationalPolynomial(std::move(out));
}

RationalPolynomial sphere_polynomial(std::int64_t t) {
    if (t < 0) {
        throw std::invalid_argument("sphere_polynomial: t must be nonnegative");
    }
    std::vector<BigRational> total{BigRational(1)};
    // falling = x(x-1)...(x-i+1), coefficients lowest degree first.
    std::vector<BigRational> falling{BigRational(1)};
    BigRational weight = 1;  // 3^i / i!
    for (std::int64_t i = 1; i <= t; i++) {
        std::vector<BigRational> next(falling.size() + 1, BigRational(0));
        for (std::size_t p = 0; p < falling.size(); p++) {
            next[p + 1] += falling[p];
            next[p] -= falling[p] * (i - 1);
        }
        falling = std::move(next);
        weight = weight * 3 / i;
        total.resize(falling.size(), BigRational(0));
        for (std::size_t p = 0; p < falling.size(); p++) {
            total[p] += weight * falling[p];
        }
    }
    return RationalPolynomial(std::move(total));
}

namespace {

// Cached polynomial and its two derivatives for one t.
struct SpherePolys {
    RationalPolynomial f, f1, f2;

    explicit SpherePolys(std::int64_t t) : f(sphere_polynomial(t)), f1(f.derivative()), f2(f1.derivative()) {
    }
    DerivativeTriple at(const BigRational &x) const {
        return {f(x), f1(x), f2(x)};
    }
};

}  // namespace

DerivativeTriple derivative_triple(std::int64_t t, const BigRational &x) {
    return SpherePolys(t).at(x);
}

std::int64_t HValue::floor() const {
    if (kind == Kind::Integer) {
        return value;
    }
    return n - ceil_log2(f);
}

HValue h_value_floor(std::int64_t t, std::int64_t n) {
    if (t < 0) {
        throw std::invalid_argument("h_value_floor: t must be nonnegative");
    }
    HValue h;
    h.n = n;
    if (n < 0) {
        h.value = n;
    } else if (n <= t) {
        h.value = -n;
    } else {
        h.kind = HValue::Kind::Logarithmic;
        h.f = sphere_sum(n, t);
    }
    return h;
}

CertifiedSign hprime_sign(std::int64_t t, const BigRational &x, int precision_ceiling) {
    DerivativeTriple d = derivative_triple(t, x);
    if (d.f.sign() <= 0) {
        throw std::domain_error("hprime_sign: f_t(x) must be positive at the evaluation point");
    }
    // sign(h') = sign(ln2 * f - f') = sign(q - r ln2) with q = -f', r = -f.
    return sign_of_q_minus_r_ln2(-d.f1, -d.f, precision_ceiling);
}

std::string hprime_approx(std::int64_t t, const BigRational &x) {
    DerivativeTriple d = derivative_triple(t, x);
    if (d.f.sign() <= 0) {
        throw std::domain_error("hprime_approx: f_t(x) must be positive at the evaluation point");
    }
    Ln2Enclosure ln2 = ln2_enclosure(128);
    BigRational ln2_mid = (ln2.lower + ln2.upper) / 2;
    return to_decimal_half_even(1 - d.f1 / (ln2_mid * d.f), 3);
}

Sign hsecond_sign(std::int64_t t, const BigRational &x) {
    DerivativeTriple d = derivative_triple(t, x);
    BigRational v = d.f1 * d.f1 - d.f * d.f2;
    return static_cast<Sign>(v.sign());
}

bool AppendixReport::all_passed() const {
    return std::all_of(outcomes.begin(), outcomes.end(), [](const CheckOutcome &o) { return o.passed; });
}

std::int64_t AppendixReport::failures() const {
    return std::count_if(outcomes.begin(), outcomes.end(), [](const CheckOutcome &o) { return !o.passed; });
}

namespace {

CheckOutcome start(const char *name, std::int64_t t) {
    if (t < 1) {
        throw std::invalid_argument(std::string(name) + ": t must be at least 1");
    }
    CheckOutcome o;
    o.check = name;
    o.t = t;
    return o;
}

void fail(CheckOutcome &o, const std::string &detail) {
    if (o.passed) {
        o.passed = false;
        o.detail = detail;
    }
}

void summarize(CheckOutcome &o, const std::string &detail) {
    if (o.passed) {
        o.detail = detail;
    }
}

std::string range_text(std::int64_t lo, std::int64_t hi) {
    return "[" + std::to_string(lo) + ", " + std::to_string(hi) + "]";
}

}  // namespace

CheckOutcome check_binomial_identity(std::int64_t t) {
    CheckOutcome o = start("binomial_identity", t);
    for (std::int64_t n = 0; n <= t; n++) {
        BigUnsigned f = sphere_sum(n, t);
        o.cases++;
        if (f != pow2(2 * n)) {
            fail(o, "f_t(" + std::to_string(n) + ") = " + f.str() + " != 4^" + std::to_string(n));
        }
    }
    summarize(o, "h_t(n) = -n on " + range_text(0, t));
    return o;
}

CheckOutcome check_positivity(std::int64_t t, std::int64_t n_max) {
    CheckOutcome o = start("positivity", t);
    SpherePolys polys(t);
    std::int64_t lo = std::max<std::int64_t>(0, t - 1);
    for (std::int64_t n = lo; n <= n_max; n++) {
        // Integer points and the midpoints after them, all inside x >= t-1.
        for (BigRational x : {BigRational(n), BigRational(2 * n + 1, 2)}) {
            o.cases++;
            BigRational f = polys.f(x);
            if (f.sign() <= 0) {
                fail(o, "f_t(" + x.str() + ") = " + f.str() + " <= 0");
            }
        }
    }
    summarize(o, "f_t > 0 at integers and half-integers in " + range_text(lo, n_max));
    return o;
}

CheckOutcome check_unit_shift(std::int64_t t, std::int64_t n_max) {
    CheckOutcome o = start("unit_shift", t);
    BigUnsigned prev = sphere_sum(0, t);
    for (std::int64_t n = 1; n <= n_max; n++) {
        BigUnsigned cur = sphere_sum(n, t);
        o.cases++;
        if (prev > cur) {
            fail(o, "f_t(" + std::to_string(n - 1) + ") = " + prev.str() + " > f_t(" + std::to_string(n) +
                        ") = " + cur.str());
        }
        prev = std::move(cur);
    }
    summarize(o, "h_t(n) <= h_t(n-1) + 1 on " + range_text(1, n_max));
    return o;
}

CheckOutcome check_derivative_signs(std::int64_t t) {
    CheckOutcome o = start("derivative_signs", t);
    auto below = hprime_sign(t, BigRational(2 * t - 2));
    auto above = hprime_sign(t, BigRational(2 * t));
    o.cases = 2;
    if (below.sign != Sign::Negative) {
        fail(o, "h'_t(2t-2) is " + std::string(sign_name(below.sign)));
    }
    if (above.sign != Sign::Positive) {
        fail(o, "h'_t(2t) is " + std::string(sign_name(above.sign)));
    }
    summarize(o, "h'(2t-2) < 0 (" + std::to_string(below.precision_bits) + " bits), h'(2t) > 0 (" +
                     std::to_string(above.precision_bits) + " bits)");
    return o;
}

CheckOutcome check_convexity(std::int64_t t, std::int64_t x_lo, std::int64_t x_hi) {
    CheckOutcome o = start("convexity", t);
    SpherePolys polys(t);
    for (std::int64_t x = x_lo; x <= x_hi; x++) {
        DerivativeTriple d = polys.at(BigRational(x));
        o.cases++;
        BigRational v = d.f1 * d.f1 - d.f * d.f2;
        if (v.sign() <= 0) {
            fail(o, "(f')^2 - f f'' = " + v.str() + " at x=" + std::to_string(x));
        }
    }
    summarize(o, "h''_t > 0 at integers in " + range_text(x_lo, x_hi));
    return o;
}

CheckOutcome check_slope_below_one(std::int64_t t, std::int64_t x_max) {
    CheckOutcome o = start("slope_below_one", t);
    SpherePolys polys(t);
    for (std::int64_t x = t; x <= x_max; x++) {
        BigRational xr(x);
        BigRational f = polys.f(xr);
        BigRational f1 = polys.f1(xr);
        o.cases++;
        if (f.sign() <= 0 || f1.sign() <= 0) {
            fail(o, "f=" + f.str() + ", f'=" + f1.str() + " at x=" + std::to_string(x));
        }
    }
    summarize(o, "h'_t < 1 at integers in " + range_text(t, x_max));
    return o;
}

std::int64_t hamming_sequence_minimum(std::int64_t t) {
    if (t < 1) {
        throw std::invalid_argument("hamming_sequence_minimum: t must be at least 1");
    }
    std::int64_t best = std::max<std::int64_t>(0, 2 * t - 2);
    BigUnsigned best_f = sphere_sum(best, t);
    for (std::int64_t n = best + 1; n <= 2 * t; n++) {
        BigUnsigned f = sphere_sum(n, t);
        // h(n) < h(best)  <=>  2^n f(best) < 2^best f(n)  <=>  2^(n-best) f(best) < f(n).
        if ((best_f << static_cast<unsigned>(n - best)) < f) {
            best = n;
            best_f = std::move(f);
        }
    }
    return best;
}

CheckOutcome check_local_minimum(std::int64_t t, std::int64_t n_max) {
    CheckOutcome o = start("local_minimum", t);
    n_max = std::max(n_max, 2 * t + 1);
    std::vector<BigUnsigned> f;
    for (std::int64_t n = 0; n <= n_max; n++) {
        f.push_back(sphere_sum(n, t));
    }
    auto at = [&](std::int64_t n) -> const BigUnsigned & { return f[static_cast<std::size_t>(n)]; };
    // h(n+1) < h(n)  <=>  2 f(n) < f(n+1).
    for (std::int64_t n = 0; n + 1 <= 2 * t - 2; n++) {
        o.cases++;
        if (!(2 * at(n) < at(n + 1))) {
            fail(o, "h_t not decreasing from n=" + std::to_string(n) + ": 2*" + at(n).str() + " >= " + at(n + 1).str());
        }
    }
    for (std::int64_t n = 2 * t; n < n_max; n++) {
        o.cases++;
        if (!(2 * at(n) > at(n + 1))) {
            fail(o, "h_t not increasing from n=" + std::to_string(n) + ": 2*" + at(n).str() + " <= " + at(n + 1).str());
        }
    }
    summarize(o, "minimum at n=" + std::to_string(hamming_sequence_minimum(t)) + " within " +
                     range_text(std::max<std::int64_t>(0, 2 * t - 2), 2 * t));
    return o;
}

CheckOutcome check_shift_dominance(std::int64_t t, std::int64_t samples, std::int64_t extra) {
    CheckOutcome o = start("shift_dominance", t);
    if (samples < 2) {
        throw std::invalid_argument("check_shift_dominance: need at least two samples");
    }
    std::int64_t a0 = find_a0(t).a0;
    for (std::int64_t a = a0; a <= a0 + extra; a++) {
        if (!local_max_condition(a, t)) {
            continue;
        }
        std::int64_t span = 8 * t * a + 200;
        for (std::int64_t i = 0; i < samples; i++) {
            std::int64_t n = 1 + i * (span - 1) / (samples - 1);
            o.cases++;
            if (!dominance(a, t, n)) {
                fail(o, "dominance fails at a=" + std::to_string(a) + ", n=" + std::to_string(n));
            }
        }
    }
    summarize(o, "a in " + range_text(a0, a0 + extra) + ", " + std::to_string(samples) + " lengths each");
    return o;
}

AppendixReport verify_appendix(std::int64_t t_min, std::int64_t t_max, std::int64_t x_max) {
    AppendixReport report;
    if (t_min > t_max) {
        return report;
    }
    if (t_min < 1) {
        throw std::invalid_argument("verify_appendix: t range must start at 1 or above");
    }
    if (x_max < 0) {
        throw std::invalid_argument("verify_appendix: x_max must be nonnegative");
    }
    for (std::int64_t t = t_min; t <= t_max; t++) {
        report.outcomes.push_back(check_binomial_identity(t));
        report.outcomes.push_back(check_positivity(t, x_max));
        report.outcomes.push_back(check_unit_shift(t, x_max));
        report.outcomes.push_back(check_derivative_signs(t));
        report.outcomes.push_back(check_convexity(t, t, x_max));
        report.outcomes.push_back(check_slope_below_one(t, x_max));
        report.outcomes.push_back(check_local_minimum(t, x_max));
        report.outcomes.push_back(check_shift_dominance(t));
    }
    return report;
}

}  // namespace degbound
