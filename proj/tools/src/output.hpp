#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace degbound::cli {

using Json = nlohmann::ordered_json;

enum class Format { Json, Csv, Tsv };

Format parse_format(const std::string &name);

/// Flat view of a document for the delimited formats.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    /// Emitted as leading '#' lines in TSV output.
    std::vector<std::string> notes;
};

struct Document {
    Json json;
    Table table;
};

void write_document(const Document &doc, Format format, std::ostream &out);

std::string cell(bool b);
std::string cell(std::int64_t v);
std::string cell(const std::optional<std::int64_t> &v);

}  // namespace degbound::cli
