#include "output.hpp"

#include <stdexcept>

namespace degbound::cli {

Format parse_format(const std::string &name) {
    if (name == "json") {
        return Format::Json;
    }
    if (name == "csv") {
        return Format::Csv;
    }
    if (name == "tsv") {
        return Format::Tsv;
    }
    throw std::invalid_argument("unknown format '" + name + "'");
}

namespace {

std::string csv_escape(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') {
            q += '"';
        }
        q += c;
    }
    return q + "\"";
}

void write_delimited(const Table &t, char sep, std::ostream &out) {
    auto row = [&](const std::vector<std::string> &cells) {
        for (std::size_t i = 0; i < cells.size(); i++) {
            if (i) {
                out << sep;
            }
            out << (sep == ',' ? csv_escape(cells[i]) : cells[i]);
        }
        out << '\n';
    };
    row(t.columns);
    for (const auto &r : t.rows) {
        row(r);
    }
}

}  // namespace

void write_document(const Document &doc, Format format, std::ostream &out) {
    switch (format) {
        case Format::Json:
            out << doc.json.dump(2) << '\n';
            break;
        case Format::Csv:
            write_delimited(doc.table, ',', out);
            break;
        case Format::Tsv:
            for (const auto &note : doc.table.notes) {
                out << "# " << note << '\n';
            }
            write_delimited(doc.table, '\t', out);
            break;
    }
}

std::string cell(bool b) {
    return b ? "true" : "false";
}

std::string cell(std::int64_t v) {
    return std::to_string(v);
}

std::string cell(const std::optional<std::int64_t> &v) {
    return v ? std::to_string(*v) : "";
}

}  // namespace degbound::cli
