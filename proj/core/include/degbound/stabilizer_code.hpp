#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "degbound/pauli.hpp"
#include "degbound/sphere_bounds.hpp"

namespace degbound {

/// Rejected stabilizer input. line() is 1-based (the later generator of an
/// anticommuting or dependent pair), or 0 when no line applies.
class CodeParseError : public std::runtime_error {
   public:
    CodeParseError(std::size_t line, const std::string &message);
    std::size_t line() const noexcept {
        return line_;
    }

   private:
    std::size_t line_;
};

/// An enumeration would exceed its configured size guard.
class SearchGuardExceeded : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Row-reduced span of symplectic vectors over GF(2). Each row remembers which
/// inserted vectors it is the sum of.
class Gf2Span {
   public:
    /// Adds v; returns false (leaving the span unchanged) when v is already in it.
    bool insert(const PauliOperator &v);
    bool contains(const PauliOperator &v) const;
    /// Indices (insertion order) of previously inserted vectors summing to v, when v is in the span.
    std::optional<std::uint64_t> combination(const PauliOperator &v) const;
    std::size_t rank() const {
        return rows_.size();
    }

   private:
    struct Row {
        std::uint64_t x, z, combo;
        int pivot;
    };
    std::vector<Row> rows_;  // pivots strictly decreasing
    std::size_t inserted_ = 0;
};

class StabilizerCode {
   public:
    /// Newline-separated generators over {I,X,Y,Z}; optional leading '+' or '-';
    /// blank lines and '#' comments ignored. Validates equal lengths, pairwise
    /// commutation and independence.
    static StabilizerCode parse(std::string_view text);
    static StabilizerCode from_generators(std::vector<PauliOperator> generators);

    std::size_t n() const {
        return n_;
    }
    std::size_t num_generators() const {
        return generators_.size();
    }
    std::int64_t k() const {
        return static_cast<std::int64_t>(n_) - static_cast<std::int64_t>(generators_.size());
    }
    const std::vector<PauliOperator> &generators() const {
        return generators_;
    }
    /// Membership in the stabilizer group (phases ignored).
    bool contains(const PauliOperator &p) const {
        return span_.contains(p);
    }

    /// The [[n+1, k]] code with an idle extra qubit stabilized by Z on it.
    StabilizerCode extended_with_z() const;

   private:
    static StabilizerCode build(std::vector<PauliOperator> generators, const std::vector<std::size_t> &lines);

    std::size_t n_ = 0;
    std::vector<PauliOperator> generators_;
    Gf2Span span_;
};

struct SearchLimits {
    /// Full group enumeration visits 2^m elements.
    std::size_t max_generators = 26;
    /// Weight-ordered normalizer search is limited to this many qubits.
    std::size_t max_distance_qubits = 14;
    /// Candidate budget for the low-weight Pauli search used when m is too large.
    std::uint64_t max_candidates = std::uint64_t{1} << 28;
    /// Worker threads for the distance search; 0 picks the hardware concurrency.
    unsigned threads = 0;
};

struct MinWeightResult {
    /// Empty when the group has no non-identity element (within the cap, if any).
    std::optional<int> weight;
    std::optional<PauliOperator> witness;
};

/// Minimum weight over non-identity stabilizer elements.
MinWeightResult group_min_weight(
    const StabilizerCode &code, std::optional<int> weight_cap = std::nullopt, const SearchLimits &limits = {});

/// All non-identity stabilizer elements of weight <= max_weight, ordered by weight
/// then by operator.
std::vector<PauliOperator> low_weight_elements(
    const StabilizerCode &code, int max_weight, const SearchLimits &limits = {});

struct DistanceResult {
    /// Empty when no logical operator of weight <= searched_weight exists ("d > cap").
    std::optional<int> distance;
    int searched_weight = 0;
    std::optional<PauliOperator> witness;
};

/// Minimum weight of an operator commuting with every generator but outside the
/// stabilizer group. For k = 0 codes this is the minimum stabilizer weight.
DistanceResult distance(
    const StabilizerCode &code, std::optional<int> cap = std::nullopt, const SearchLimits &limits = {});

struct ProfileResult {
    DegeneracyProfile profile;
    /// The independent low-weight elements picked, in selection order.
    std::vector<PauliOperator> chosen;
};

/// ell = rank of the elements of weight <= 2t; sigma = least total weight of an
/// independent subset of them with that rank (greedy by ascending weight).
ProfileResult degeneracy_profile(const StabilizerCode &code, std::int64_t t, const SearchLimits &limits = {});

struct CodeAnalysis {
    std::int64_t n = 0;
    std::int64_t k = 0;
    std::int64_t d = 0;
    std::int64_t t = 0;
    std::optional<int> min_stabilizer_weight;
    std::optional<PauliOperator> min_stabilizer_witness;
    std::optional<PauliOperator> logical_witness;
    bool degenerate = false;
    ProfileResult profile;
    std::vector<BoundVerdict> verdicts;

    bool all_hold() const;
};

/// Distance, degeneracy profile and every applicable bound for a parsed code.
CodeAnalysis analyze(const StabilizerCode &code, const SearchLimits &limits = {});

/// The bound verdicts of analyze().
std::vector<BoundVerdict> audit(const StabilizerCode &code, const SearchLimits &limits = {});

}  // namespace degbound
