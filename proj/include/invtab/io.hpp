#pragma once

#include <cctype>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "core.hpp"
#include "errors.hpp"

namespace invtab {

// One row per line, entries separated by single spaces, LF endings.
inline std::string to_text(const tableau& t) {
    std::ostringstream os;
    for (const auto& row : t.rows()) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) os << ' ';
            os << row[c];
        }
        os << '\n';
    }
    return os.str();
}

inline std::string to_json(const tableau& t) {
    nlohmann::json j;
    j["rows"] = t.rows();
    return j.dump();
}

inline std::vector<int> parse_int_list(const std::string& text, char sep) {
    std::vector<int> out;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, sep)) {
        try {
            std::size_t used = 0;
            int v = std::stoi(item, &used);
            while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used])))
                ++used;
            if (used != item.size()) throw parse_error("trailing junk in integer list");
            out.push_back(v);
        } catch (const parse_error&) {
            throw;
        } catch (const std::exception&) {
            throw parse_error("expected integer, got '" + item + "'");
        }
    }
    return out;
}

inline shape parse_shape(const std::string& text) {
    return shape(parse_int_list(text, ','));
}

inline content parse_content(const std::string& text) {
    return content(parse_int_list(text, ','));
}

// Accepts either the plain-text format or the {"rows": [[...]]} JSON form,
// detected by the first non-whitespace character.
inline tableau parse_tableau(const std::string& text) {
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::vector<std::vector<int>> rows;
    if (i < text.size() && text[i] == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const std::exception& e) {
            throw parse_error(std::string("bad JSON: ") + e.what());
        }
        if (!j.is_object() || !j.contains("rows") || !j["rows"].is_array())
            throw parse_error("JSON form must be {\"rows\": [[...], ...]}");
        for (const auto& jr : j["rows"]) {
            if (!jr.is_array()) throw parse_error("each row must be an array");
            std::vector<int> row;
            for (const auto& jv : jr) {
                if (!jv.is_number_integer()) throw parse_error("entries must be integers");
                row.push_back(jv.get<int>());
            }
            rows.push_back(std::move(row));
        }
    } else {
        std::istringstream is(text);
        std::string line;
        while (std::getline(is, line)) {
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            std::istringstream ls(line);
            std::vector<int> row;
            int v;
            while (ls >> v) row.push_back(v);
            if (!ls.eof()) throw parse_error("non-integer token in row: " + line);
            rows.push_back(std::move(row));
        }
    }
    return validate(std::move(rows));
}

inline std::string shape_to_string(const shape& s) {
    std::ostringstream os;
    const auto& p = s.parts();
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) os << ',';
        os << p[i];
    }
    return os.str();
}

inline std::string pairs_to_string(const std::vector<inversion_pair>& ps) {
    std::ostringstream os;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (i) os << ' ';
        os << '(' << ps[i].smaller << ',' << ps[i].larger << ")^" << ps[i].column;
    }
    return os.str();
}

}  // namespace invtab
