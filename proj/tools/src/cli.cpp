#include "degbound/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "degbound/thresholds.hpp"
#include "documents.hpp"

namespace degbound::cli {

namespace {

constexpr const char *kHorizonEnv = "DEGBOUND_HORIZON";

std::optional<std::int64_t> env_horizon() {
    const char *raw = std::getenv(kHorizonEnv);
    if (raw == nullptr || *raw == '\0') {
        return std::nullopt;
    }
    std::string s(raw);
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used != s.size() || v < 1) {
        throw std::invalid_argument(std::string(kHorizonEnv) + " must be a positive integer (got '" + s + "')");
    }
    return v;
}

struct OutputOptions {
    std::string format = "json";
    std::string path;
};

void add_output_options(CLI::App *cmd, OutputOptions &o, const std::string &default_format = "json") {
    o.format = default_format;
    cmd->add_option("--format,-f", o.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "tsv"}))
        ->capture_default_str();
    cmd->add_option("--output,-o", o.path, "Write the document to this file instead of stdout");
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Exact Hamming-type bounds for degenerate stabilizer codes", "degbound"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for all subcommands");
    app.footer(std::string("Environment:\n  ") + kHorizonEnv +
               "  default scan horizon for threshold commands (otherwise max(500, 8 t a0))\n"
               "Exit codes: 0 all verdicts hold, 1 a verdict or check failed, 2 usage or input error.");

    OutputOptions output;
    std::function<CommandResult()> action;

    BoundRequest bound;
    auto *c_bound = app.add_subcommand("bound", "Check every applicable bound for [[n,k,d]]");
    c_bound->add_option("-n", bound.n, "Code length")->required();
    c_bound->add_option("-k", bound.k, "Logical qubits")->required();
    c_bound->add_option("-d", bound.d, "Distance")->required();
    c_bound->add_option("--ell", bound.ell, "Independent stabilizer generators of weight <= 2t");
    c_bound->add_option("--sigma", bound.sigma, "Total weight of those generators (default 2t*ell)");
    c_bound->add_flag("--assume-degenerate", bound.assume_degenerate, "Also apply the degenerate-code bounds");
    add_output_options(c_bound, output);
    c_bound->callback([&] { action = [&] { return cmd_bound(bound); }; });

    MaxkRequest maxk;
    std::optional<std::int64_t> maxk_n;
    auto *c_maxk = app.add_subcommand("maxk", "Largest admissible k under each bound, per length");
    c_maxk->add_option("-t", maxk.t, "Correctable errors")->required();
    auto *o_n = c_maxk->add_option("-n", maxk_n, "Single length");
    c_maxk->add_option("--n-min", maxk.n_min, "First length")->excludes(o_n);
    c_maxk->add_option("--n-max", maxk.n_max, "Last length")->excludes(o_n);
    c_maxk->add_option("--ell", maxk.ell, "Profile ell");
    c_maxk->add_option("--sigma", maxk.sigma, "Profile sigma (default 2t*ell)");
    add_output_options(c_maxk, output);
    c_maxk->callback([&] {
        if (maxk_n) {
            maxk.n_min = maxk.n_max = *maxk_n;
        }
        action = [&] { return cmd_maxk(maxk); };
    });

    ThresholdRequest thr;
    bool table1 = false;
    std::optional<std::int64_t> horizon;
    auto *c_thr = app.add_subcommand("thresholds", "Threshold constants a0, n_a, N(ell,t)");
    auto *o_t = c_thr->add_option("-t", thr.t, "Correctable errors");
    auto *o_table = c_thr->add_flag("--table1", table1, "Compare N(t) for t = 1..7 with the reference constants");
    o_t->excludes(o_table);
    c_thr->add_option("--horizon", horizon, std::string("Scan horizon (overrides ") + kHorizonEnv + ")")
        ->check(CLI::PositiveNumber);
    c_thr->add_option("--ell", thr.ell, "Report N(ell,t) for this ell")->capture_default_str();
    add_output_options(c_thr, output);
    c_thr->callback([&] {
        if (!horizon) {
            horizon = env_horizon();
        }
        thr.horizon = horizon;
        if (table1) {
            action = [&] { return cmd_table1(horizon); };
        } else {
            action = [&] { return cmd_thresholds(thr); };
        }
    });

    std::string audit_path;
    SearchLimits limits;
    auto *c_audit = app.add_subcommand("audit", "Analyze a stabilizer code file and audit it against every bound");
    c_audit->add_option("file", audit_path, "Generators, one Pauli string per line")->required();
    c_audit->add_option("--max-generators", limits.max_generators, "Largest group enumerated in full")
        ->capture_default_str();
    c_audit->add_option("--max-distance-qubits", limits.max_distance_qubits, "Largest n for the distance search")
        ->capture_default_str();
    c_audit->add_option("--threads", limits.threads, "Distance search workers (0 = hardware)")->capture_default_str();
    add_output_options(c_audit, output);
    c_audit->callback([&] {
        action = [&] {
            std::ifstream in(audit_path);
            if (!in) {
                throw std::invalid_argument("cannot read " + audit_path);
            }
            std::stringstream ss;
            ss << in.rdbuf();
            return cmd_audit(audit_path, ss.str(), limits);
        };
    });

    std::int64_t cls_min = 5, cls_max = 25;
    auto *c_cls = app.add_subcommand("classify", "Classify optimal distance-3 parameters by the degenerate bound");
    c_cls->add_option("--n-min", cls_min, "First length")->capture_default_str();
    c_cls->add_option("--n-max", cls_max, "Last length")->capture_default_str();
    add_output_options(c_cls, output);
    c_cls->callback([&] { action = [&] { return cmd_classify(cls_min, cls_max); }; });

    std::int64_t m_max = 2, cc_min = 5, cc_max = 25;
    auto *c_cc = app.add_subcommand("cross-check", "Compare the classification with the length families");
    c_cc->add_option("--m-max", m_max, "Largest family index m")->capture_default_str();
    c_cc->add_option("--n-min", cc_min, "First length")->capture_default_str();
    c_cc->add_option("--n-max", cc_max, "Last length")->capture_default_str();
    add_output_options(c_cc, output);
    c_cc->callback([&] { action = [&] { return cmd_cross_check(m_max, cc_min, cc_max); }; });

    int which = 0;
    std::string prefix;
    OutputOptions fig_output;
    auto *c_fig = app.add_subcommand("figure", "Plot data for figure 1, 2 or 3");
    c_fig->add_option("which", which, "Figure number")->required()->check(CLI::IsMember({1, 2, 3}));
    c_fig->add_option("--out", prefix, "Write PREFIX.tsv (or .csv/.json) instead of stdout");
    c_fig->add_option("--format,-f", fig_output.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "tsv"}))
        ->capture_default_str();
    fig_output.format = "tsv";
    c_fig->callback([&] {
        output = fig_output;
        if (!prefix.empty()) {
            output.path = prefix + "." + output.format;
        }
        action = [&] { return cmd_figure(which); };
    });

    std::int64_t t_min = 1, t_max = 7, x_max = 200;
    auto *c_app = app.add_subcommand("verify-appendix", "Certify the calculus facts about h_t over a range");
    c_app->add_option("--t-min", t_min, "First t")->capture_default_str();
    c_app->add_option("--t-max", t_max, "Last t")->capture_default_str();
    c_app->add_option("--x-max", x_max, "Integer range limit")->capture_default_str();
    add_output_options(c_app, output);
    c_app->callback([&] { action = [&] { return cmd_verify_appendix(t_min, t_max, x_max); }; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    CommandResult result;
    try {
        result = action();
    } catch (const CodeParseError &e) {
        err << audit_path << ": " << e.what() << '\n';
        return kExitUsage;
    } catch (const HorizonTooSmall &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const SearchGuardExceeded &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << '\n';
        return kExitUsage;
    }

    Format format = parse_format(output.format);
    if (output.path.empty()) {
        write_document(result.doc, format, out);
    } else {
        std::ofstream file(output.path);
        if (!file) {
            err << "error: cannot write " << output.path << '\n';
            return kExitUsage;
        }
        write_document(result.doc, format, file);
    }
    return result.exit_code;
}

}  // namespace degbound::cli
