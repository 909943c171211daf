#include "degbound/sphere_bounds.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace degbound {

void CodeParams::validate() const {
    if (n < 1) {
        throw std::invalid_argument("code length n must be positive (got " + std::to_string(n) + ")");
    }
    if (k < 0 || k > n) {
        throw std::invalid_argument("k must satisfy 0 <= k <= n (got k=" + std::to_string(k) + ")");
    }
    if (d < 1) {
        throw std::invalid_argument("distance d must be positive (got " + std::to_string(d) + ")");
    }
}

void DegeneracyProfile::validate(std::int64_t t) const {
    if (ell < 0 || sigma < ell || sigma > 2 * t * ell) {
        throw std::invalid_argument(
            "degeneracy profile must satisfy ell <= sigma <= 2t*ell (ell=" + std::to_string(ell) +
            ", sigma=" + std::to_string(sigma) + ", t=" + std::to_string(t) + ")");
    }
}

std::string_view bound_name(BoundId id) {
    switch (id) {
        case BoundId::QuantumHamming:
            return "quantum_hamming";
        case BoundId::ClassicalHamming:
            return "classical_hamming";
        case BoundId::Lemma1:
            return "lemma1";
        case BoundId::EllTBound:
            return "ell_t_bound";
        case BoundId::DegenerateBound:
            return "degenerate_bound";
        case BoundId::PriorDistance3:
            return "prior_distance3";
        case BoundId::QuantumSingleton:
            return "quantum_singleton";
    }
    return "unknown";
}

namespace {

void require_t(std::int64_t t) {
    if (t < 0) {
        throw std::invalid_argument("t must be nonnegative");
    }
}

// Largest k >= 0 with 2^k * f <= 2^budget.
std::optional<std::int64_t> max_k_under(const BigUnsigned &f, std::int64_t budget) {
    std::int64_t k = budget - ceil_log2(f);
    if (k < 0) {
        return std::nullopt;
    }
    // The bit-length answer must agree with the three-way comparison at k and k+1.
    if (cmp_pow2(f, budget - k) == std::strong_ordering::greater ||
        cmp_pow2(f, budget - k - 1) != std::strong_ordering::greater) {
        throw std::logic_error("max_k_under: inconsistent power-of-two comparison");
    }
    return k;
}

BoundVerdict make_verdict(
    BoundId id, std::int64_t k, const std::optional<std::int64_t> &max_k, BigInt lhs, BigInt rhs) {
    BoundVerdict v;
    v.bound = id;
    v.query = k;
    if (max_k) {
        v.max_admissible = BigInt(*max_k);
    }
    v.holds = lhs <= rhs;
    v.equality = lhs == rhs;
    v.saturated = max_k && *max_k == k;
    v.witness = {std::move(lhs), std::move(rhs)};
    if (v.holds != (max_k && k <= *max_k)) {
        throw std::logic_error("verdict for " + std::string(bound_name(id)) + " disagrees with its max k");
    }
    return v;
}

// 2^(k+ell) f_t(n - sigma) <= 2^n, or 2^(k+ell) <= 2^n past the sigma > n branch.
Witness shifted_witness(std::int64_t n, std::int64_t k, std::int64_t t, std::int64_t ell, std::int64_t sigma) {
    BigInt lhs = pow2(k + ell);
    if (sigma <= n) {
        lhs *= sphere_sum(n - sigma, t);
    }
    return {std::move(lhs), pow2(n)};
}

std::optional<std::int64_t> shifted_max_k(std::int64_t n, std::int64_t t, std::int64_t ell, std::int64_t sigma) {
    if (sigma <= n) {
        return max_k_under(sphere_sum(n - sigma, t), n - ell);
    }
    if (n - ell < 0) {
        return std::nullopt;
    }
    return n - ell;
}

}  // namespace

std::optional<std::int64_t> qhamming_max_k(std::int64_t n, std::int64_t t) {
    require_t(t);
    if (n < 0) {
        throw std::invalid_argument("qhamming_max_k: n must be nonnegative");
    }
    return max_k_under(sphere_sum(n, t), n);
}

std::int64_t hamming_floor(std::int64_t m, std::int64_t t) {
    require_t(t);
    if (m < 0) {
        return m;
    }
    return m - ceil_log2(sphere_sum(m, t));
}

BoundVerdict classical_hamming_holds(std::int64_t n, const BigInt &K, std::int64_t d, std::int64_t q) {
    if (q < 2) {
        throw std::invalid_argument("classical_hamming_holds: alphabet size q must be at least 2");
    }
    if (n < 1 || d < 1 || K < 1) {
        throw std::invalid_argument("classical_hamming_holds: need n >= 1, d >= 1, K >= 1");
    }
    std::int64_t t = (d - 1) / 2;
    BigInt volume = 0;
    BigInt q_minus_1_pow = 1;
    for (std::int64_t i = 0; i <= t; i++) {
        volume += q_minus_1_pow * binom(n, i);
        q_minus_1_pow *= q - 1;
    }
    BigInt space = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(n));
    BoundVerdict v;
    v.bound = BoundId::ClassicalHamming;
    v.query = K;
    v.max_admissible = space / volume;
    v.holds = K * volume <= space;
    v.saturated = K == *v.max_admissible;
    v.equality = K * volume == space;
    v.witness = {K * volume, space};
    return v;
}

std::optional<std::int64_t> lemma1_max_k(std::int64_t n, std::int64_t t, const DegeneracyProfile &profile) {
    require_t(t);
    profile.validate(t);
    return shifted_max_k(n, t, profile.ell, profile.sigma);
}

std::optional<std::int64_t> shifted_form_max_k(std::int64_t n, std::int64_t t, const DegeneracyProfile &profile) {
    require_t(t);
    profile.validate(t);
    // h_t already carries the x < 0 branch, so sigma > n needs no special case here.
    std::int64_t k = hamming_floor(n - profile.sigma, t) + profile.sigma - profile.ell;
    if (k < 0) {
        return std::nullopt;
    }
    return k;
}

std::optional<std::int64_t> ell_t_bound_max_k(std::int64_t n, std::int64_t t, std::int64_t ell) {
    require_t(t);
    if (ell < 0) {
        throw std::invalid_argument("ell_t_bound_max_k: ell must be nonnegative");
    }
    return shifted_max_k(n, t, ell, 2 * t * ell);
}

std::optional<std::int64_t> degenerate_bound_max_k(std::int64_t n, std::int64_t t) {
    require_t(t);
    if (n < 2 * t + 1) {
        throw std::invalid_argument(
            "degenerate_bound_max_k: requires n >= 2t+1 (n=" + std::to_string(n) + ", t=" + std::to_string(t) + ")");
    }
    return ell_t_bound_max_k(n, t, 1);
}

std::optional<std::int64_t> singleton_max_k(std::int64_t n, std::int64_t d) {
    if (d < 1) {
        throw std::invalid_argument("singleton_max_k: d must be positive");
    }
    if (n < 2 * d - 2) {
        return std::nullopt;
    }
    return n - 2 * d + 2;
}

std::optional<std::int64_t> prior_bound_max_k(std::int64_t n) {
    if (n < 1) {
        throw std::invalid_argument("prior_bound_max_k: n must be positive");
    }
    // 2^(n-k) - (4n-k+1) is nonincreasing in k on [0, n], so the admissible set is a prefix.
    for (std::int64_t k = n; k >= 0; k--) {
        if (cmp_pow2(BigInt(4 * n - k + 1), n - k) != std::strong_ordering::greater) {
            return k;
        }
    }
    return std::nullopt;
}

BoundVerdict qhamming_verdict(std::int64_t n, std::int64_t k, std::int64_t t) {
    auto max_k = qhamming_max_k(n, t);
    return make_verdict(BoundId::QuantumHamming, k, max_k, pow2(k) * sphere_sum(n, t), pow2(n));
}

BoundVerdict lemma1_verdict(std::int64_t n, std::int64_t k, std::int64_t t, const DegeneracyProfile &profile) {
    auto max_k = lemma1_max_k(n, t, profile);
    auto w = shifted_witness(n, k, t, profile.ell, profile.sigma);
    return make_verdict(BoundId::Lemma1, k, max_k, std::move(w.lhs), std::move(w.rhs));
}

BoundVerdict ell_t_verdict(std::int64_t n, std::int64_t k, std::int64_t t, std::int64_t ell) {
    auto max_k = ell_t_bound_max_k(n, t, ell);
    auto w = shifted_witness(n, k, t, ell, 2 * t * ell);
    return make_verdict(BoundId::EllTBound, k, max_k, std::move(w.lhs), std::move(w.rhs));
}

BoundVerdict degenerate_verdict(std::int64_t n, std::int64_t k, std::int64_t t) {
    auto max_k = degenerate_bound_max_k(n, t);
    auto w = shifted_witness(n, k, t, 1, 2 * t);
    return make_verdict(BoundId::DegenerateBound, k, max_k, std::move(w.lhs), std::move(w.rhs));
}

BoundVerdict singleton_verdict(std::int64_t n, std::int64_t k, std::int64_t d) {
    auto max_k = singleton_max_k(n, d);
    return make_verdict(BoundId::QuantumSingleton, k, max_k, BigInt(k), BigInt(n - 2 * d + 2));
}

BoundVerdict prior_bound_holds(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) {
        throw std::invalid_argument("prior_bound_holds: need 0 <= k <= n");
    }
    auto max_k = prior_bound_max_k(n);
    return make_verdict(BoundId::PriorDistance3, k, max_k, BigInt(4 * n - k + 1), pow2(n - k));
}

double lemma1_curve_approx(std::int64_t n, std::int64_t t, std::int64_t ell, std::int64_t sigma) {
    double base = static_cast<double>(n - ell);
    if (sigma > n) {
        return base;
    }
    return base - std::log2(sphere_sum(n - sigma, t).convert_to<double>());
}

}  // namespace degbound
