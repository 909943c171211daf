#include "documents.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "degbound/appendix_calculus.hpp"
#include "degbound/optimality.hpp"
#include "degbound/sphere_bounds.hpp"
#include "degbound/thresholds.hpp"

namespace degbound::cli {

namespace {

constexpr const char *kPrecisionNote =
    "curve columns are double-precision log2 renderings for display; max_k columns and labels come from exact "
    "integer comparisons";

Json opt_json(const std::optional<std::int64_t> &v) {
    return v ? Json(*v) : Json(nullptr);
}

Json verdict_json(const BoundVerdict &v) {
    Json j;
    j["bound"] = std::string(bound_name(v.bound));
    j["query"] = v.query.convert_to<std::int64_t>();
    j["max_admissible"] = v.max_admissible ? Json(v.max_admissible->convert_to<std::int64_t>()) : Json(nullptr);
    j["holds"] = v.holds;
    j["saturated"] = v.saturated;
    j["equality"] = v.equality;
    j["witness"] = {{"lhs", v.witness.lhs.str()}, {"rhs", v.witness.rhs.str()}};
    return j;
}

Table verdict_table(const std::vector<BoundVerdict> &vs) {
    Table t;
    t.columns = {"bound", "query", "max_admissible", "holds", "saturated", "equality", "witness_lhs", "witness_rhs"};
    for (const auto &v : vs) {
        t.rows.push_back({std::string(bound_name(v.bound)), v.query.str(), v.max_admissible ? v.max_admissible->str() : "",
                          cell(v.holds), cell(v.saturated), cell(v.equality), v.witness.lhs.str(), v.witness.rhs.str()});
    }
    return t;
}

bool all_hold(const std::vector<BoundVerdict> &vs) {
    for (const auto &v : vs) {
        if (!v.holds) {
            return false;
        }
    }
    return true;
}

Json profile_json(const DegeneracyProfile &p) {
    return {{"ell", p.ell}, {"sigma", p.sigma}};
}

// N(t) above which the degenerate bound is established for t >= 2.
std::int64_t degenerate_threshold(std::int64_t t) {
    return t <= 7 ? reference_row(t).N : compute_N(t, 1);
}

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

double round6(double v) {
    return std::round(v * 1e6) / 1e6;
}

}  // namespace

CommandResult cmd_bound(const BoundRequest &req) {
    CodeParams params{req.n, req.k, req.d};
    params.validate();
    const std::int64_t t = params.t();

    std::optional<DegeneracyProfile> profile;
    if (req.sigma && !req.ell) {
        throw std::invalid_argument("--sigma requires --ell");
    }
    if (req.ell) {
        profile = DegeneracyProfile{*req.ell, req.sigma.value_or(2 * t * *req.ell)};
        profile->validate(t);
    }

    std::vector<BoundVerdict> verdicts;
    Json skipped = Json::array();
    verdicts.push_back(qhamming_verdict(req.n, req.k, t));
    verdicts.push_back(singleton_verdict(req.n, req.k, req.d));
    if (profile) {
        verdicts.push_back(lemma1_verdict(req.n, req.k, t, *profile));
        verdicts.push_back(ell_t_verdict(req.n, req.k, t, profile->ell));
    }
    if (req.assume_degenerate || (profile && profile->ell >= 1)) {
        auto skip = [&](const char *bound, const std::string &reason) {
            skipped.push_back({{"bound", bound}, {"reason", reason}});
        };
        if (t < 1) {
            skip("degenerate_bound", "needs d >= 3");
        } else if (req.n < 2 * t + 1) {
            skip("degenerate_bound", "needs n >= 2t+1");
        } else if (t == 1) {
            verdicts.push_back(degenerate_verdict(req.n, req.k, t));
            verdicts.push_back(prior_bound_holds(req.n, req.k));
        } else if (std::int64_t N = degenerate_threshold(t); req.n >= N) {
            verdicts.push_back(degenerate_verdict(req.n, req.k, t));
        } else {
            skip("degenerate_bound", "established only for n >= N(t) = " + std::to_string(N));
        }
    }

    CommandResult r;
    Json &j = r.doc.json;
    j["command"] = "bound";
    j["n"] = req.n;
    j["k"] = req.k;
    j["d"] = req.d;
    j["t"] = t;
    j["profile"] = profile ? profile_json(*profile) : Json(nullptr);
    j["assume_degenerate"] = req.assume_degenerate;
    j["verdicts"] = Json::array();
    for (const auto &v : verdicts) {
        j["verdicts"].push_back(verdict_json(v));
    }
    j["skipped"] = skipped;
    j["all_hold"] = all_hold(verdicts);
    r.doc.table = verdict_table(verdicts);
    r.exit_code = all_hold(verdicts) ? 0 : 1;
    return r;
}

CommandResult cmd_maxk(const MaxkRequest &req) {
    if (req.t < 0) {
        throw std::invalid_argument("t must be nonnegative");
    }
    if (req.n_min < 1 || req.n_max < req.n_min) {
        throw std::invalid_argument("need 1 <= n-min <= n-max");
    }
    if (req.sigma && !req.ell) {
        throw std::invalid_argument("--sigma requires --ell");
    }
    std::optional<DegeneracyProfile> profile;
    if (req.ell) {
        profile = DegeneracyProfile{*req.ell, req.sigma.value_or(2 * req.t * *req.ell)};
        profile->validate(req.t);
    }

    CommandResult r;
    Json &j = r.doc.json;
    j["command"] = "maxk";
    j["t"] = req.t;
    j["profile"] = profile ? profile_json(*profile) : Json(nullptr);
    j["rows"] = Json::array();
    Table &tab = r.doc.table;
    tab.columns = {"n",     "quantum_hamming",  "lemma1",           "shifted_form",
                   "ell_t", "degenerate_bound", "quantum_singleton", "prior_distance3"};
    for (std::int64_t n = req.n_min; n <= req.n_max; n++) {
        std::optional<std::int64_t> lemma1, shifted, ell_t, degenerate, prior;
        if (profile) {
            lemma1 = lemma1_max_k(n, req.t, *profile);
            shifted = shifted_form_max_k(n, req.t, *profile);
            if (lemma1 != shifted) {
                throw std::logic_error("profile bound and shifted form disagree at n=" + std::to_string(n));
            }
            ell_t = ell_t_bound_max_k(n, req.t, profile->ell);
        }
        if (req.t >= 1 && n >= 2 * req.t + 1) {
            degenerate = degenerate_bound_max_k(n, req.t);
        }
        if (req.t == 1) {
            prior = prior_bound_max_k(n);
        }
        auto hamming = qhamming_max_k(n, req.t);
        auto singleton = singleton_max_k(n, 2 * req.t + 1);
        j["rows"].push_back({{"n", n},
                             {"quantum_hamming", opt_json(hamming)},
                             {"lemma1", opt_json(lemma1)},
                             {"shifted_form", opt_json(shifted)},
                             {"ell_t", opt_json(ell_t)},
                             {"degenerate_bound", opt_json(degenerate)},
                             {"quantum_singleton", opt_json(singleton)},
                             {"prior_distance3", opt_json(prior)}});
        tab.rows.push_back({cell(n), cell(hamming), cell(lemma1), cell(shifted), cell(ell_t), cell(degenerate),
                            cell(singleton), cell(prior)});
    }
    return r;
}

namespace {

Json tail_json(const TailCertificate &c) {
    return {{"window_start", c.window_start},
            {"window_end", c.window_end},
            {"envelope_start", c.envelope_start},
            {"envelope_lhs", c.envelope_lhs.str()},
            {"envelope_rhs", c.envelope_rhs.str()},
            {"slope_sign", sign_name(c.slope_sign)},
            {"slope_precision_bits", c.slope_precision_bits}};
}

}  // namespace

CommandResult cmd_thresholds(const ThresholdRequest &req) {
    if (req.ell < 0) {
        throw std::invalid_argument("ell must be nonnegative");
    }
    ThresholdReport rep = threshold_report(req.t, req.horizon);

    CommandResult r;
    Json &j = r.doc.json;
    j["command"] = "thresholds";
    j["t"] = rep.t;
    j["a0"] = rep.a0;
    j["crossing_points"] = Json::array();
    for (const auto &c : rep.crossing_points) {
        j["crossing_points"].push_back({{"a", c.a}, {"n_a", c.n_a}, {"early_dominance", c.early_dominance}});
    }
    j["N0"] = rep.N0;
    j["ell"] = req.ell;
    j["N_ell"] = rep.N(req.ell);
    j["N_t"] = rep.N(1);
    j["conjecture_holds"] = rep.conjecture_holds;
    j["scan_horizon"] = rep.scan_horizon;
    j["tail"] = tail_json(rep.tail);

    r.doc.table.columns = {"t", "a0", "N0", "ell", "N_ell", "N_t", "conjecture_holds", "scan_horizon"};
    r.doc.table.rows.push_back({cell(rep.t), cell(rep.a0), cell(rep.N0), cell(req.ell), cell(rep.N(req.ell)),
                                cell(rep.N(1)), cell(rep.conjecture_holds), cell(rep.scan_horizon)});
    return r;
}

CommandResult cmd_table1(std::optional<std::int64_t> horizon) {
    CommandResult r;
    Json &j = r.doc.json;
    j["command"] = "table1";
    j["rows"] = Json::array();
    Table &tab = r.doc.table;
    tab.columns = {"t", "linear_bound", "M", "N_reference", "N_computed", "a0", "N0", "conjecture_holds", "match"};
    bool all_match = true;
    for (const ReferenceRow &row : reference_table()) {
        ThresholdReport rep = threshold_report(row.t, horizon);
        bool match = rep.N(1) == row.N;
        all_match = all_match && match;
        j["rows"].push_back({{"t", row.t},
                             {"linear_bound", row.linear},
                             {"M", row.M},
                             {"N_reference", row.N},
                             {"N_computed", rep.N(1)},
                             {"a0", rep.a0},
                             {"N0", rep.N0},
                             {"conjecture_holds", rep.conjecture_holds},
                             {"match", match}});
        tab.rows.push_back({cell(row.t), cell(row.linear), cell(row.M), cell(row.N), cell(rep.N(1)), cell(rep.a0),
                            cell(rep.N0), cell(rep.conjecture_holds), cell(match)});
    }
    j["all_match"] = all_match;
    r.exit_code = all_match ? 0 : 1;
    return r;
}

CommandResult cmd_audit(const std::string &path, const std::string &text, const SearchLimits &limits) {
    StabilizerCode code = StabilizerCode::parse(text);
    CodeAnalysis a = analyze(code, limits);

    CommandResult r;
    Json &j = r.doc.json;
    j["command"] = "audit";
    j["file"] = path;
    j["n"] = a.n;
    j["k"] = a.k;
    j["d"] = a.d;
    j["t"] = a.t;
    j["generators"] = Json::array();
    for (const auto &g : code.generators()) {
        j["generators"].push_back(g.str());
    }
    j["min_stabilizer_weight"] =
        a.min_stabilizer_weight ? Json(*a.min_stabilizer_weight) : Json(nullptr);
    j["min_stabilizer_witness"] = a.min_stabilizer_witness ? Json(a.min_stabilizer_witness->str()) : Json(nullptr);
    j["logical_witness"] = a.logical_witness ? Json(a.logical_witness->str()) : Json(nullptr);
    j["degenerate"] = a.degenerate;
    Json prof = profile_json(a.profile.profile);
    prof["chosen"] = Json::array();
    for (const auto &p : a.profile.chosen) {
        prof["chosen"].push_back(p.str());
    }
    j["profile"] = prof;
    j["verdicts"] = Json::array();
    for (const auto &v : a.verdicts) {
        j["verdicts"].push_back(verdict_json(v));
    }
    j["all_hold"] = a.all_hold();
    r.doc.table = verdict_table(a.verdicts);
    r.doc.table.notes = {"file " + path, "[[" + std::to_string(a.n) + "," + std::to_string(a.k) + "," +
                                             std::to_string(a.d) + "]] degenerate=" + cell(a.degenerate) +
                                             " ell=" + std::to_string(a.profile.profile.ell) +
                                             " sigma=" + std::to_string(a.profile.profile.sigma)};
    r.exit_code = a.all_hold() ? 0 : 1;
    return r;
}

CommandResult cmd_classify(std::int64_t n_min, std::int64_t n_max) {
    if (!optimal_k_distance3(n_min) || !optimal_k_distance3(n_max) || n_max < n_min) {
        throw std::invalid_argument("classification range must lie within 5..25");
    }
    CommandResult r;
    Json &j = r.doc.json;
    j["command"] = "classify";
    j["points"] = Json::array();
    Json red = Json::array();
    Table &tab = r.doc.table;
    tab.columns = {"n", "k", "degenerate_max_k", "hamming_max_k", "allowed", "label", "saturated"};
    for (std::int64_t n = n_min; n <= n_max; n++) {
        std::int64_t k = *optimal_k_distance3(n);
        auto deg = degenerate_bound_max_k(n, 1);
        auto ham = qhamming_max_k(n, 1);
        bool allowed = degenerate_allowed(n);
        bool saturated = deg && *deg == k;
        const char *label = allowed ? "red" : "black";
        if (allowed) {
            red.push_back(n);
        }
        j["points"].push_back({{"n", n},
                               {"k", k},
                               {"degenerate_max_k", opt_json(deg)},
                               {"hamming_max_k", opt_json(ham)},
                               {"allowed", allowed},
                               {"label", label},
                               {"saturated", saturated}});
        tab.rows.push_back({cell(n), cell(k), cell(deg), cell(ham), cell(allowed), label, cell(saturated)});
    }
    j["red"] = red;
    return r;
}

CommandResult cmd_cross_check(std::int64_t m_max, std::int64_t n_min, std::int64_t n_max) {
    if (m_max < 0) {
        throw std::invalid_argument("m-max must be nonnegative");
    }
    CrossCheckReport rep = cross_check(m_max, n_min, n_max);
    std::vector<std::int64_t> lengths = corollary_lengths(m_max);

    CommandResult r;
    Json &j = r.doc.json;
    j["command"] = "cross_check";
    j["m_max"] = m_max;
    j["n_min"] = n_min;
    j["n_max"] = n_max;
    j["families"] = Json::array();
    for (std::int64_t m = 1; m <= m_max; m++) {
        LengthFamily f = length_family(m);
        j["families"].push_back(
            {{"m", f.m}, {"f_m", f.f_m}, {"near_eight_f", f.near_eight_f}, {"near_perfect", f.near_perfect}});
    }
    j["family_lengths"] = lengths;
    j["agreed_allowed"] = rep.agreed_allowed;
    j["discrepancies"] = Json::array();
    for (const auto &d : rep.discrepancies) {
        j["discrepancies"].push_back({{"n", d.n},
                                      {"allowed_by_bound", d.allowed_by_bound},
                                      {"in_families", d.in_families},
                                      {"bound_max_k", opt_json(d.bound_max_k)},
                                      {"optimal_k", d.optimal_k}});
    }

    Table &tab = r.doc.table;
    tab.columns = {"n", "allowed_by_bound", "in_families", "status"};
    for (std::int64_t n = n_min; n <= n_max; n++) {
        bool allowed = degenerate_allowed(n);
        bool listed = std::binary_search(lengths.begin(), lengths.end(), n);
        const char *status = allowed != listed ? "discrepancy" : (allowed ? "agree_allowed" : "agree_excluded");
        tab.rows.push_back({cell(n), cell(allowed), cell(listed), status});
    }
    return r;
}

namespace {

struct Curve {
    std::int64_t ell;
    std::int64_t sigma;
};

CommandResult curve_figure(int which, const std::vector<Curve> &curves, std::int64_t n_max) {
    CommandResult r;
    Json &j = r.doc.json;
    j["command"] = "figure";
    j["figure"] = which;
    j["t"] = 1;
    j["note"] = kPrecisionNote;
    j["series"] = Json::array();
    Table &tab = r.doc.table;
    tab.notes = {std::string("figure ") + std::to_string(which) + ", t = 1", kPrecisionNote};
    tab.columns = {"n"};
    for (const Curve &c : curves) {
        std::string tag = "l" + std::to_string(c.ell) + "_s" + std::to_string(c.sigma);
        tab.columns.push_back("curve_" + tag);
        tab.columns.push_back("maxk_" + tag);
    }
    for (std::int64_t n = 1; n <= n_max; n++) {
        tab.rows.push_back({cell(n)});
    }
    for (const Curve &c : curves) {
        Json points = Json::array();
        for (std::int64_t n = 1; n <= n_max; n++) {
            double curve = lemma1_curve_approx(n, 1, c.ell, c.sigma);
            auto k = lemma1_max_k(n, 1, {c.ell, c.sigma});
            points.push_back({{"n", n}, {"approx", round6(curve)}, {"max_k", opt_json(k)}});
            tab.rows[static_cast<std::size_t>(n - 1)].push_back(fixed6(curve));
            tab.rows[static_cast<std::size_t>(n - 1)].push_back(cell(k));
        }
        j["series"].push_back({{"ell", c.ell}, {"sigma", c.sigma}, {"points", points}});
    }
    return r;
}

}  // namespace

CommandResult cmd_figure(int which) {
    switch (which) {
        case 1:
            return curve_figure(1, {{0, 0}, {3, 6}, {8, 14}}, 26);
        case 2: {
            std::vector<Curve> curves;
            for (std::int64_t ell = 0; ell <= 6; ell++) {
                curves.push_back({ell, 2 * ell});
            }
            return curve_figure(2, curves, 40);
        }
        case 3: {
            CommandResult r = cmd_classify(5, 25);
            const char *note = "labels come from exact integer comparisons";
            r.doc.json = {{"command", "figure"}, {"figure", 3}, {"t", 1}, {"note", note}, {"points", r.doc.json["points"]}};
            r.doc.table.notes = {"figure 3, optimal distance-3 parameters; red = degenerate code allowed by the bound",
                                 note};
            return r;
        }
        default:
            throw std::invalid_argument("figure must be 1, 2 or 3");
    }
}

CommandResult cmd_verify_appendix(std::int64_t t_min, std::int64_t t_max, std::int64_t x_max) {
    if (t_min < 1 || t_max < t_min) {
        throw std::invalid_argument("need 1 <= t-min <= t-max");
    }
    if (x_max < 0) {
        throw std::invalid_argument("x-max must be nonnegative");
    }
    AppendixReport rep = verify_appendix(t_min, t_max, x_max);

    CommandResult r;
    Json &j = r.doc.json;
    j["command"] = "verify_appendix";
    j["t_min"] = t_min;
    j["t_max"] = t_max;
    j["x_max"] = x_max;
    Table &tab = r.doc.table;
    tab.columns = {"check", "t", "passed", "cases", "detail"};

    struct Spot {
        std::int64_t t;
        std::int64_t x;
    };
    bool spots_ok = true;
    j["spot_values"] = Json::array();
    for (Spot s : {Spot{1, 0}, Spot{2, 2}}) {
        CertifiedSign sign = hprime_sign(s.t, s.x);
        std::string approx = hprime_approx(s.t, s.x);
        bool ok = sign.sign == Sign::Negative;
        spots_ok = spots_ok && ok;
        j["spot_values"].push_back({{"t", s.t},
                                    {"x", s.x},
                                    {"sign", sign_name(sign.sign)},
                                    {"precision_bits", sign.precision_bits},
                                    {"approx", approx}});
        tab.rows.push_back({"hprime_spot", cell(s.t), cell(ok), "1",
                            "h'(" + std::to_string(s.x) + ") approx " + approx + ", sign " + sign_name(sign.sign)});
    }

    j["outcomes"] = Json::array();
    for (const auto &o : rep.outcomes) {
        j["outcomes"].push_back(
            {{"check", o.check}, {"t", o.t}, {"passed", o.passed}, {"cases", o.cases}, {"detail", o.detail}});
        tab.rows.push_back({o.check, cell(o.t), cell(o.passed), cell(o.cases), o.detail});
    }
    j["failures"] = rep.failures();
    j["all_passed"] = rep.all_passed() && spots_ok;
    r.exit_code = rep.all_passed() && spots_ok ? 0 : 1;
    return r;
}

}  // namespace degbound::cli
