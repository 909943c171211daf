#include "degbound/stabilizer_code.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <limits>
#include <thread>

#include "degbound/thresholds.hpp"

namespace degbound {

CodeParseError::CodeParseError(std::size_t line, const std::string &message)
    : std::runtime_error(line == 0 ? message : "line " + std::to_string(line) + ": " + message), line_(line) {
}

namespace {

int pivot_of(std::uint64_t x, std::uint64_t z) {
    if (z != 0) {
        return 64 + 63 - std::countl_zero(z);
    }
    if (x != 0) {
        return 63 - std::countl_zero(x);
    }
    return -1;
}

bool has_bit(std::uint64_t x, std::uint64_t z, int p) {
    return p >= 64 ? ((z >> (p - 64)) & 1) != 0 : ((x >> p) & 1) != 0;
}

std::string index_list(std::uint64_t combo) {
    std::string s;
    for (int i = 0; i < 64; i++) {
        if ((combo >> i) & 1) {
            if (!s.empty()) {
                s += ", ";
            }
            s += std::to_string(i + 1);
        }
    }
    return s;
}

}  // namespace

std::optional<std::uint64_t> Gf2Span::combination(const PauliOperator &v) const {
    std::uint64_t x = v.x_bits();
    std::uint64_t z = v.z_bits();
    std::uint64_t combo = 0;
    for (const Row &r : rows_) {
        if (has_bit(x, z, r.pivot)) {
            x ^= r.x;
            z ^= r.z;
            combo ^= r.combo;
        }
    }
    if ((x | z) != 0) {
        return std::nullopt;
    }
    return combo;
}

bool Gf2Span::contains(const PauliOperator &v) const {
    return combination(v).has_value();
}

bool Gf2Span::insert(const PauliOperator &v) {
    if (inserted_ >= 64) {
        throw std::length_error("Gf2Span tracks at most 64 inserted vectors");
    }
    std::uint64_t x = v.x_bits();
    std::uint64_t z = v.z_bits();
    std::uint64_t combo = std::uint64_t{1} << inserted_;
    for (const Row &r : rows_) {
        if (has_bit(x, z, r.pivot)) {
            x ^= r.x;
            z ^= r.z;
            combo ^= r.combo;
        }
    }
    int p = pivot_of(x, z);
    if (p < 0) {
        return false;
    }
    auto pos = std::find_if(rows_.begin(), rows_.end(), [p](const Row &r) { return r.pivot < p; });
    rows_.insert(pos, Row{x, z, combo, p});
    inserted_++;
    return true;
}

StabilizerCode StabilizerCode::parse(std::string_view text) {
    std::vector<PauliOperator> generators;
    std::vector<std::size_t> lines;
    std::size_t expected_length = 0;
    std::size_t line_no = 0;
    while (!text.empty()) {
        line_no++;
        std::size_t eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);

        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string_view::npos) {
            continue;
        }
        std::size_t column = first;
        line = line.substr(first, line.find_last_not_of(" \t\r") - first + 1);
        if (line.front() == '+' || line.front() == '-') {
            line.remove_prefix(1);
            column++;
        }
        if (line.empty()) {
            throw CodeParseError(line_no, "sign without a Pauli string");
        }
        if (line.size() > PauliOperator::kMaxQubits) {
            throw CodeParseError(
                line_no, "generator has " + std::to_string(line.size()) + " qubits; at most " +
                             std::to_string(PauliOperator::kMaxQubits) + " are supported");
        }
        for (std::size_t i = 0; i < line.size(); i++) {
            char c = line[i];
            if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
                throw CodeParseError(
                    line_no, std::string("invalid character '") + c + "' at column " + std::to_string(column + i + 1));
            }
        }
        if (generators.empty()) {
            expected_length = line.size();
        } else if (line.size() != expected_length) {
            throw CodeParseError(
                line_no, "generator has length " + std::to_string(line.size()) + ", expected " +
                             std::to_string(expected_length));
        }
        generators.push_back(PauliOperator::from_string(line));
        lines.push_back(line_no);
    }
    if (generators.empty()) {
        throw CodeParseError(0, "no generators found");
    }
    return build(std::move(generators), lines);
}

StabilizerCode StabilizerCode::from_generators(std::vector<PauliOperator> generators) {
    if (generators.empty()) {
        throw CodeParseError(0, "no generators given");
    }
    std::vector<std::size_t> lines(generators.size());
    for (std::size_t i = 0; i < lines.size(); i++) {
        lines[i] = i + 1;
        if (generators[i].size() != generators[0].size()) {
            throw CodeParseError(
                i + 1, "generator has length " + std::to_string(generators[i].size()) + ", expected " +
                           std::to_string(generators[0].size()));
        }
    }
    return build(std::move(generators), lines);
}

StabilizerCode StabilizerCode::build(std::vector<PauliOperator> generators, const std::vector<std::size_t> &lines) {
    for (std::size_t j = 0; j < generators.size(); j++) {
        for (std::size_t i = 0; i < j; i++) {
            if (!generators[i].commutes_with(generators[j])) {
                throw CodeParseError(
                    lines[j], "generators " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                  " anticommute (lines " + std::to_string(lines[i]) + " and " +
                                  std::to_string(lines[j]) + ")");
            }
        }
    }
    Gf2Span span;
    for (std::size_t j = 0; j < generators.size(); j++) {
        if (!span.insert(generators[j])) {
            std::uint64_t combo = *span.combination(generators[j]);
            throw CodeParseError(
                lines[j], combo == 0 ? "generator " + std::to_string(j + 1) + " is the identity"
                                     : "generator " + std::to_string(j + 1) +
                                           " is dependent: it equals the product of generators " + index_list(combo));
        }
    }
    StabilizerCode code;
    code.n_ = generators.front().size();
    code.generators_ = std::move(generators);
    code.span_ = std::move(span);
    return code;
}

StabilizerCode StabilizerCode::extended_with_z() const {
    std::vector<PauliOperator> gens;
    gens.reserve(generators_.size() + 1);
    for (const auto &g : generators_) {
        gens.push_back(g.padded(n_ + 1));
    }
    PauliOperator z_last(n_ + 1);
    z_last.set(n_, 'Z');
    gens.push_back(z_last);
    return from_generators(std::move(gens));
}

namespace {

// Visits every Pauli of weight w supported on qubits [start, n), ordered by support
// then letter (X, Y, Z). `syn` carries the syndrome of the fixed part. Stops early
// when visit returns true.
template <class Visit>
bool enumerate_weight(
    std::size_t n, std::size_t start, int w, std::uint64_t x, std::uint64_t z, std::uint64_t syn,
    const std::vector<std::array<std::uint64_t, 3>> &syndromes, Visit &visit) {
    if (w == 0) {
        return visit(x, z, syn);
    }
    for (std::size_t q = start; q + static_cast<std::size_t>(w) <= n; q++) {
        std::uint64_t b = std::uint64_t{1} << q;
        const auto &s = syndromes[q];
        if (enumerate_weight(n, q + 1, w - 1, x | b, z, syn ^ s[0], syndromes, visit) ||
            enumerate_weight(n, q + 1, w - 1, x | b, z | b, syn ^ s[1], syndromes, visit) ||
            enumerate_weight(n, q + 1, w - 1, x, z | b, syn ^ s[2], syndromes, visit)) {
            return true;
        }
    }
    return false;
}

// syndromes[q][letter]: bit j set when X_q / Y_q / Z_q anticommutes with generator j.
std::vector<std::array<std::uint64_t, 3>> single_qubit_syndromes(const StabilizerCode &code) {
    std::size_t n = code.n();
    std::vector<std::array<std::uint64_t, 3>> table(n, {0, 0, 0});
    for (std::size_t q = 0; q < n; q++) {
        std::uint64_t b = std::uint64_t{1} << q;
        std::array<PauliOperator, 3> letters{
            PauliOperator(n, b, 0), PauliOperator(n, b, b), PauliOperator(n, 0, b)};
        for (std::size_t j = 0; j < code.num_generators(); j++) {
            for (int l = 0; l < 3; l++) {
                if (!letters[l].commutes_with(code.generators()[j])) {
                    table[q][l] |= std::uint64_t{1} << j;
                }
            }
        }
    }
    return table;
}

double candidate_count(std::size_t n, int w) {
    double c = 1;
    for (int i = 0; i < w; i++) {
        c = c * static_cast<double>(n - i) / (i + 1) * 3;
    }
    return c;
}

void guard_candidates(const StabilizerCode &code, int max_weight, const SearchLimits &limits) {
    double total = 0;
    for (int w = 1; w <= max_weight; w++) {
        total += candidate_count(code.n(), w);
    }
    if (total > static_cast<double>(limits.max_candidates)) {
        throw SearchGuardExceeded(
            "low-weight search over " + std::to_string(code.n()) + " qubits up to weight " +
            std::to_string(max_weight) + " exceeds the candidate budget of " + std::to_string(limits.max_candidates));
    }
}

template <class Visit>
void for_each_group_element(const StabilizerCode &code, Visit &&visit) {
    const auto &g = code.generators();
    std::size_t m = g.size();
    PauliOperator cur(code.n());
    for (std::uint64_t i = 1; i < (std::uint64_t{1} << m); i++) {
        cur *= g[static_cast<std::size_t>(std::countr_zero(i))];
        visit(cur);
    }
}

// Non-identity stabilizer elements with weight <= max_weight found by scanning
// candidate Paulis rather than the group.
std::vector<PauliOperator> members_by_weight(const StabilizerCode &code, int max_weight, bool stop_at_first_weight) {
    std::vector<PauliOperator> found;
    auto syn = single_qubit_syndromes(code);
    for (int w = 1; w <= std::min<int>(max_weight, static_cast<int>(code.n())); w++) {
        auto visit = [&](std::uint64_t x, std::uint64_t z, std::uint64_t s) {
            if (s == 0) {
                PauliOperator p(code.n(), x, z);
                if (code.contains(p)) {
                    found.push_back(p);
                }
            }
            return false;
        };
        enumerate_weight(code.n(), 0, w, 0, 0, 0, syn, visit);
        if (stop_at_first_weight && !found.empty()) {
            break;
        }
    }
    return found;
}

bool weight_then_operator(const PauliOperator &a, const PauliOperator &b) {
    if (a.weight() != b.weight()) {
        return a.weight() < b.weight();
    }
    return a < b;
}

}  // namespace

MinWeightResult group_min_weight(const StabilizerCode &code, std::optional<int> weight_cap, const SearchLimits &limits) {
    MinWeightResult result;
    if (code.num_generators() <= limits.max_generators) {
        std::optional<PauliOperator> best;
        for_each_group_element(code, [&](const PauliOperator &p) {
            if (!best || weight_then_operator(p, *best)) {
                best = p;
            }
        });
        if (best && (!weight_cap || best->weight() <= *weight_cap)) {
            result.weight = best->weight();
            result.witness = best;
        }
        return result;
    }
    if (!weight_cap) {
        throw SearchGuardExceeded(
            "stabilizer group has " + std::to_string(code.num_generators()) + " generators (limit " +
            std::to_string(limits.max_generators) + "); supply a weight cap for the low-weight search");
    }
    guard_candidates(code, *weight_cap, limits);
    auto found = members_by_weight(code, *weight_cap, true);
    if (!found.empty()) {
        auto best = *std::min_element(found.begin(), found.end(), weight_then_operator);
        result.weight = best.weight();
        result.witness = best;
    }
    return result;
}

std::vector<PauliOperator> low_weight_elements(const StabilizerCode &code, int max_weight, const SearchLimits &limits) {
    std::vector<PauliOperator> out;
    if (max_weight < 1) {
        return out;
    }
    if (code.num_generators() <= limits.max_generators) {
        for_each_group_element(code, [&](const PauliOperator &p) {
            if (p.weight() <= max_weight) {
                out.push_back(p);
            }
        });
    } else {
        guard_candidates(code, max_weight, limits);
        out = members_by_weight(code, max_weight, false);
    }
    std::sort(out.begin(), out.end(), weight_then_operator);
    return out;
}

DistanceResult distance(const StabilizerCode &code, std::optional<int> cap, const SearchLimits &limits) {
    const std::size_t n = code.n();
    if (n > limits.max_distance_qubits) {
        throw SearchGuardExceeded(
            "distance search limited to " + std::to_string(limits.max_distance_qubits) + " qubits (code has " +
            std::to_string(n) + ")");
    }
    const int top = std::min<int>(cap.value_or(static_cast<int>(n)), static_cast<int>(n));
    const bool logical_wanted = code.k() > 0;
    const auto syn = single_qubit_syndromes(code);

    DistanceResult result;
    for (int w = 1; w <= top; w++) {
        result.searched_weight = w;
        // Tasks are indexed by the first support qubit; the lowest task with a hit wins,
        // which makes the witness independent of the thread count.
        const std::size_t tasks = n - static_cast<std::size_t>(w) + 1;
        std::vector<std::optional<PauliOperator>> hits(tasks);
        std::atomic<std::size_t> best_task{std::numeric_limits<std::size_t>::max()};

        auto run = [&](std::size_t worker, std::size_t stride) {
            for (std::size_t q = worker; q < tasks; q += stride) {
                if (q > best_task.load()) {
                    return;
                }
                auto visit = [&](std::uint64_t x, std::uint64_t z, std::uint64_t s) {
                    if (best_task.load() < q) {
                        return true;
                    }
                    if (s != 0) {
                        return false;
                    }
                    PauliOperator p(n, x, z);
                    if (code.contains(p) == logical_wanted) {
                        return false;
                    }
                    hits[q] = p;
                    std::size_t cur = best_task.load();
                    while (q < cur && !best_task.compare_exchange_weak(cur, q)) {
                    }
                    return true;
                };
                std::uint64_t b = std::uint64_t{1} << q;
                const auto &s = syn[q];
                enumerate_weight(n, q + 1, w - 1, b, 0, s[0], syn, visit) ||
                    enumerate_weight(n, q + 1, w - 1, b, b, s[1], syn, visit) ||
                    enumerate_weight(n, q + 1, w - 1, 0, b, s[2], syn, visit);
            }
        };

        unsigned threads = limits.threads != 0 ? limits.threads : std::max(1u, std::thread::hardware_concurrency());
        threads = static_cast<unsigned>(std::min<std::size_t>(threads, tasks));
        if (threads <= 1) {
            run(0, 1);
        } else {
            std::vector<std::jthread> pool;
            for (unsigned i = 0; i < threads; i++) {
                pool.emplace_back(run, i, threads);
            }
        }

        std::size_t best = best_task.load();
        if (best != std::numeric_limits<std::size_t>::max()) {
            result.distance = w;
            result.witness = hits[best];
            return result;
        }
    }
    return result;
}

ProfileResult degeneracy_profile(const StabilizerCode &code, std::int64_t t, const SearchLimits &limits) {
    if (t < 0) {
        throw std::invalid_argument("degeneracy_profile: t must be nonnegative");
    }
    ProfileResult result;
    Gf2Span span;
    for (const auto &p : low_weight_elements(code, static_cast<int>(2 * t), limits)) {
        if (span.insert(p)) {
            result.chosen.push_back(p);
            result.profile.ell++;
            result.profile.sigma += p.weight();
        }
    }
    return result;
}

bool CodeAnalysis::all_hold() const {
    return std::all_of(verdicts.begin(), verdicts.end(), [](const BoundVerdict &v) { return v.holds; });
}

CodeAnalysis analyze(const StabilizerCode &code, const SearchLimits &limits) {
    CodeAnalysis a;
    a.n = static_cast<std::int64_t>(code.n());
    a.k = code.k();

    DistanceResult dist = distance(code, std::nullopt, limits);
    if (!dist.distance) {
        throw std::logic_error("analyze: exhaustive distance search found no logical operator");
    }
    a.d = *dist.distance;
    a.logical_witness = dist.witness;
    a.t = (a.d - 1) / 2;

    std::optional<int> cap;
    if (code.num_generators() > limits.max_generators) {
        cap = static_cast<int>(a.d);
    }
    MinWeightResult mw = group_min_weight(code, cap, limits);
    a.min_stabilizer_weight = mw.weight;
    a.min_stabilizer_witness = mw.witness;
    a.degenerate = mw.weight && *mw.weight < a.d;
    a.profile = degeneracy_profile(code, a.t, limits);

    if (a.k < 1) {
        return a;
    }
    a.verdicts.push_back(qhamming_verdict(a.n, a.k, a.t));
    a.verdicts.push_back(singleton_verdict(a.n, a.k, a.d));
    const DegeneracyProfile &prof = a.profile.profile;
    if (prof.ell >= 1) {
        a.verdicts.push_back(lemma1_verdict(a.n, a.k, a.t, prof));
        a.verdicts.push_back(ell_t_verdict(a.n, a.k, a.t, prof.ell));
        if (a.t == 1) {
            a.verdicts.push_back(degenerate_verdict(a.n, a.k, a.t));
            a.verdicts.push_back(prior_bound_holds(a.n, a.k));
        } else if (a.t >= 2) {
            std::int64_t threshold = a.t <= 7 ? reference_row(a.t).N : compute_N(a.t, 1);
            if (a.n >= threshold) {
                a.verdicts.push_back(degenerate_verdict(a.n, a.k, a.t));
            }
        }
    }
    return a;
}

std::vector<BoundVerdict> audit(const StabilizerCode &code, const SearchLimits &limits) {
    return analyze(code, limits).verdicts;
}

}  // namespace degbound
