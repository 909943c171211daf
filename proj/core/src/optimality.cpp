#include "degbound/optimality.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

#include "degbound/sphere_bounds.hpp"

namespace degbound {

namespace {

constexpr std::array<OptimalKEntry, 21> kOptimalK{{
    {5, 1},   {6, 1},   {7, 1},   {8, 3},   {9, 3},   {10, 4},  {11, 5},
    {12, 6},  {13, 7},  {14, 8},  {15, 9},  {16, 10}, {17, 11}, {18, 11},
    {19, 12}, {20, 13}, {21, 15}, {22, 15}, {23, 16}, {24, 17}, {25, 18},
}};

}  // namespace

std::span<const OptimalKEntry> optimal_k_table() {
    return kOptimalK;
}

std::optional<std::int64_t> optimal_k_distance3(std::int64_t n) {
    auto it = std::find_if(kOptimalK.begin(), kOptimalK.end(), [n](const OptimalKEntry &e) { return e.n == n; });
    if (it == kOptimalK.end()) {
        return std::nullopt;
    }
    return it->k;
}

bool degenerate_allowed(std::int64_t n, std::optional<std::int64_t> optimal_k) {
    if (!optimal_k) {
        optimal_k = optimal_k_distance3(n);
        if (!optimal_k) {
            throw std::out_of_range(
                "degenerate_allowed: no optimal k known for n=" + std::to_string(n) + " (table covers 5..25)");
        }
    }
    auto max_k = degenerate_bound_max_k(n, 1);
    return max_k && *max_k >= *optimal_k;
}

std::int64_t perfect_length(std::int64_t m) {
    if (m < 0 || m > 30) {
        throw std::out_of_range("perfect_length: m must be in 0..30");
    }
    return ((std::int64_t{1} << (2 * m)) - 1) / 3;
}

LengthFamily length_family(std::int64_t m) {
    if (m < 1) {
        throw std::invalid_argument("length_family: m must be positive");
    }
    LengthFamily fam;
    fam.m = m;
    fam.f_m = perfect_length(m);
    for (std::int64_t off : {-1, 1, 2, 3, 4}) {
        fam.near_eight_f.push_back(8 * fam.f_m + off);
    }
    std::int64_t f_m2 = perfect_length(m + 2);
    for (std::int64_t off : {-1, 1, -2, 2, 3}) {
        fam.near_perfect.push_back(f_m2 - off);
    }
    return fam;
}

std::vector<std::int64_t> corollary_lengths(std::int64_t m_max) {
    std::vector<std::int64_t> out;
    for (std::int64_t m = 1; m <= m_max; m++) {
        LengthFamily fam = length_family(m);
        out.insert(out.end(), fam.near_eight_f.begin(), fam.near_eight_f.end());
        out.insert(out.end(), fam.near_perfect.begin(), fam.near_perfect.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

CrossCheckReport cross_check(std::int64_t m_max, std::int64_t n_lo, std::int64_t n_hi) {
    CrossCheckReport report;
    if (n_lo > n_hi) {
        return report;
    }
    if (!optimal_k_distance3(n_lo) || !optimal_k_distance3(n_hi)) {
        throw std::out_of_range("cross_check: length range must lie within 5..25");
    }
    auto families = corollary_lengths(m_max);
    for (std::int64_t n = n_lo; n <= n_hi; n++) {
        bool allowed = degenerate_allowed(n);
        bool listed = std::binary_search(families.begin(), families.end(), n);
        if (allowed && listed) {
            report.agreed_allowed.push_back(n);
        } else if (allowed != listed) {
            report.discrepancies.push_back({n, allowed, listed, degenerate_bound_max_k(n, 1), *optimal_k_distance3(n)});
        }
    }
    return report;
}

}  // namespace degbound
