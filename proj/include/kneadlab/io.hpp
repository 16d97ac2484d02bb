#pragma once

#include <cstddef>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace kneadlab {

// Numbers are always printed through this so reruns stay byte-identical.
std::string g17(double v);
std::string g17(std::size_t v);

struct Field {
    std::string key;
    std::string value;
    bool is_number = false;  // controls JSON quoting only
};

using Row = std::vector<Field>;

Field num_field(const std::string& key, double v);
Field num_field(const std::string& key, std::size_t v);
Field text_field(const std::string& key, const std::string& v);
Field bool_field(const std::string& key, bool v);  // bare true/false in JSON

// All rows must share the header of the first one.
void emit_csv(std::ostream& out, const std::vector<Row>& rows);
void emit_json(std::ostream& out, const std::string& command, const std::vector<Row>& rows);

enum class OutputFormat { csv, json };

struct TomlError {
    std::size_t line;
    std::string message;
};

// Flat key/value subset of TOML: [section.subsection] headers, string,
// number and boolean values, # comments. Keys are returned fully dotted.
// Throws std::runtime_error with line info on anything it cannot parse.
std::map<std::string, std::string> parse_toml_subset(const std::string& text);

}  // namespace kneadlab
