#include "kneadlab/io.hpp"

#include <cctype>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace kneadlab {

std::string g17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string g17(std::size_t v) {
    return std::to_string(v);
}

Field num_field(const std::string& key, double v) {
    return Field{key, g17(v), true};
}

Field num_field(const std::string& key, std::size_t v) {
    return Field{key, g17(v), true};
}

Field text_field(const std::string& key, const std::string& v) {
    return Field{key, v, false};
}

Field bool_field(const std::string& key, bool v) {
    return Field{key, v ? "true" : "false", true};
}

namespace {

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string json_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    out += '"';
    return out;
}

}  // namespace

void emit_csv(std::ostream& out, const std::vector<Row>& rows) {
    if (rows.empty()) return;
    for (std::size_t i = 0; i < rows.front().size(); ++i)
        out << (i ? "," : "") << csv_quote(rows.front()[i].key);
    out << "\n";
    for (const Row& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? "," : "") << csv_quote(row[i].value);
        out << "\n";
    }
}

void emit_json(std::ostream& out, const std::string& command, const std::vector<Row>& rows) {
    out << "{\n  \"command\": " << json_quote(command) << ",\n  \"rows\": [";
    for (std::size_t r = 0; r < rows.size(); ++r) {
        out << (r ? ",\n    {" : "\n    {");
        for (std::size_t i = 0; i < rows[r].size(); ++i) {
            const Field& f = rows[r][i];
            out << (i ? ", " : "") << json_quote(f.key) << ": ";
            if (f.is_number)
                out << f.value;
            else
                out << json_quote(f.value);
        }
        out << "}";
    }
    out << (rows.empty() ? "]" : "\n  ]") << "\n}\n";
}

namespace {

std::string strip(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
    throw std::runtime_error("config line " + std::to_string(line) + ": " + msg);
}

}  // namespace

std::map<std::string, std::string> parse_toml_subset(const std::string& text) {
    std::map<std::string, std::string> kv;
    std::istringstream in(text);
    std::string raw;
    std::string section;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        // Strip comments, but not inside quoted strings.
        bool quoted = false;
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (line[i] == '"') quoted = !quoted;
            if (line[i] == '#' && !quoted) {
                line.resize(i);
                break;
            }
        }
        line = strip(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') fail(lineno, "unterminated section header");
            section = strip(line.substr(1, line.size() - 2));
            if (section.empty()) fail(lineno, "empty section name");
            continue;
        }
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) fail(lineno, "expected key = value");
        const std::string key = strip(line.substr(0, eq));
        std::string value = strip(line.substr(eq + 1));
        if (key.empty()) fail(lineno, "empty key");
        if (value.empty()) fail(lineno, "empty value");
        if (value.front() == '"') {
            if (value.size() < 2 || value.back() != '"')
                fail(lineno, "unterminated string value");
            value = value.substr(1, value.size() - 2);
        } else if (value != "true" && value != "false") {
            // Must look like a number.
            char* end = nullptr;
            std::strtod(value.c_str(), &end);
            if (end == value.c_str() || *end != '\0')
                fail(lineno, "value is not a string, number, or boolean: " + value);
        }
        const std::string full = section.empty() ? key : section + "." + key;
        kv[full] = value;
    }
    return kv;
}

}  // namespace kneadlab
