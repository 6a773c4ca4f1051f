#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace tdc {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line, int column)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
          line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

namespace detail {
inline std::pair<int, int> line_col(const std::string& text, std::size_t offset) {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}
}  // namespace detail

/// Parses color classes from either a JSON array of arrays of labels, or
/// plain text with one class per line (labels separated by whitespace or
/// commas; blank lines and '#' comments ignored).
inline std::vector<std::vector<int>> parse_coloring(const std::string& text) {
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw ParseError("empty coloring", 1, 1);

    std::vector<std::vector<int>> classes;
    if (text[first] == '[') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            auto [l, c] = detail::line_col(text, e.byte == 0 ? 0 : e.byte - 1);
            throw ParseError("invalid JSON", l, c);
        }
        auto [l0, c0] = detail::line_col(text, first);
        if (!j.is_array()) throw ParseError("expected an array of classes", l0, c0);
        for (std::size_t i = 0; i < j.size(); ++i) {
            const auto& cls = j[i];
            if (!cls.is_array())
                throw ParseError("class " + std::to_string(i + 1) + " is not an array", l0, c0);
            std::vector<int> out;
            for (const auto& v : cls) {
                if (!v.is_number_integer())
                    throw ParseError("class " + std::to_string(i + 1) + " has a non-integer label", l0, c0);
                out.push_back(v.get<int>());
            }
            classes.push_back(std::move(out));
        }
        return classes;
    }

    int line = 1;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string::npos) end = text.size();
        std::string row = text.substr(pos, end - pos);
        if (auto hash = row.find('#'); hash != std::string::npos) row.resize(hash);

        std::vector<int> cls;
        std::size_t i = 0;
        while (i < row.size()) {
            char ch = row[i];
            if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
                ++i;
                continue;
            }
            if (!std::isdigit(static_cast<unsigned char>(ch)))
                throw ParseError(std::string("unexpected character '") + ch + "'", line, static_cast<int>(i) + 1);
            std::size_t j = i;
            while (j < row.size() && std::isdigit(static_cast<unsigned char>(row[j]))) ++j;
            if (j - i > 9) throw ParseError("label too large", line, static_cast<int>(i) + 1);
            cls.push_back(std::stoi(row.substr(i, j - i)));
            i = j;
        }
        if (!cls.empty()) classes.push_back(std::move(cls));
        ++line;
        pos = end + 1;
    }
    if (classes.empty()) throw ParseError("no classes found", 1, 1);
    return classes;
}

}  // namespace tdc
