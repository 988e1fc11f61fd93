#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace fuzzyforest {

// RFC 4180 CSV. Quoted fields may contain commas, doubled quotes and
// newlines; CRLF and LF line endings are both accepted.

struct CsvDocument {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    // leading lines starting with '#' before the header, without the marker
    std::vector<std::string> comment_lines;
};

namespace csv_detail {

inline bool next_record(std::istream& in, std::vector<std::string>& fields) {
    fields.clear();
    int c = in.get();
    if (c == EOF) return false;
    std::string field;
    bool in_quotes = false;
    bool saw_any = false;
    for (;;) {
        if (c == EOF) {
            fields.push_back(field);
            return true;
        }
        char ch = static_cast<char>(c);
        if (in_quotes) {
            if (ch == '"') {
                int peek = in.peek();
                if (peek == '"') {
                    field.push_back('"');
                    in.get();
                } else {
                    in_quotes = false;
                }
            } else {
                field.push_back(ch);
            }
        } else if (ch == '"' && field.empty() && !saw_any) {
            in_quotes = true;
        } else if (ch == ',') {
            fields.push_back(field);
            field.clear();
            saw_any = false;
            c = in.get();
            continue;
        } else if (ch == '\r') {
            if (in.peek() == '\n') in.get();
            fields.push_back(field);
            return true;
        } else if (ch == '\n') {
            fields.push_back(field);
            return true;
        } else {
            field.push_back(ch);
            saw_any = true;
        }
        if (ch == '"' && !in_quotes) saw_any = true;
        c = in.get();
    }
}

inline bool needs_quoting(const std::string& s) {
    for (char c : s) {
        if (c == ',' || c == '"' || c == '\n' || c == '\r') return true;
    }
    return false;
}

}  // namespace csv_detail

inline std::string csv_escape(const std::string& field) {
    if (!csv_detail::needs_quoting(field)) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out += "\"";
    return out;
}

inline std::string csv_join(const std::vector<std::string>& fields) {
    std::string line;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) line.push_back(',');
        line += csv_escape(fields[i]);
    }
    return line;
}

// Parses a CSV stream. First non-comment record is the header.
inline CsvDocument parse_csv(std::istream& in) {
    CsvDocument doc;
    std::vector<std::string> fields;

    // comment block: lines starting with '#' before the header
    while (in.peek() == '#') {
        std::string line;
        std::getline(in, line);
        if (!line.empty() && line.back() == '\r') line.pop_back();
        doc.comment_lines.push_back(line.substr(1));
    }

    if (!csv_detail::next_record(in, doc.header)) {
        throw std::runtime_error("csv: empty input, header row is mandatory");
    }
    while (csv_detail::next_record(in, fields)) {
        if (fields.size() == 1 && fields[0].empty() && in.peek() == EOF) break;  // trailing newline
        if (fields.size() != doc.header.size()) {
            throw std::runtime_error("csv: ragged row " + std::to_string(doc.rows.size() + 2) +
                                     ": expected " + std::to_string(doc.header.size()) +
                                     " fields, got " + std::to_string(fields.size()));
        }
        doc.rows.push_back(fields);
    }
    return doc;
}

inline CsvDocument read_csv_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("csv: cannot open file: " + path);
    return parse_csv(in);
}

inline void write_csv(std::ostream& out, const CsvDocument& doc) {
    for (const auto& c : doc.comment_lines) out << '#' << c << '\n';
    out << csv_join(doc.header) << '\n';
    for (const auto& row : doc.rows) out << csv_join(row) << '\n';
}

inline void write_csv_file(const std::string& path, const CsvDocument& doc) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("csv: cannot open file for writing: " + path);
    write_csv(out, doc);
}

}  // namespace fuzzyforest
