#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "degbound/stabilizer_code.hpp"
#include "output.hpp"

namespace degbound::cli {

struct CommandResult {
    Document doc;
    int exit_code = 0;
};

struct BoundRequest {
    std::int64_t n = 0;
    std::int64_t k = 0;
    std::int64_t d = 1;
    std::optional<std::int64_t> ell;
    std::optional<std::int64_t> sigma;
    bool assume_degenerate = false;
};
CommandResult cmd_bound(const BoundRequest &req);

struct MaxkRequest {
    std::int64_t t = 1;
    std::int64_t n_min = 1;
    std::int64_t n_max = 1;
    std::optional<std::int64_t> ell;
    std::optional<std::int64_t> sigma;
};
CommandResult cmd_maxk(const MaxkRequest &req);

struct ThresholdRequest {
    std::int64_t t = 1;
    std::int64_t ell = 1;
    std::optional<std::int64_t> horizon;
};
CommandResult cmd_thresholds(const ThresholdRequest &req);
CommandResult cmd_table1(std::optional<std::int64_t> horizon);

CommandResult cmd_audit(const std::string &path, const std::string &text, const SearchLimits &limits);

CommandResult cmd_classify(std::int64_t n_min, std::int64_t n_max);

CommandResult cmd_cross_check(std::int64_t m_max, std::int64_t n_min, std::int64_t n_max);

/// Plot data for figures 1-3. Curves are double renderings for display.
CommandResult cmd_figure(int which);

CommandResult cmd_verify_appendix(std::int64_t t_min, std::int64_t t_max, std::int64_t x_max);

}  // namespace degbound::cli
