#pragma once

#include <string>

#include "json.hpp"

namespace cookiedim {

// Parses the TOML subset used by the config files into a json tree:
// bare-key assignments, [table] and [[array-of-tables]] headers with dotted
// paths, basic strings, numbers, booleans, (multi-line) arrays, and inline
// tables.  Dates, dotted keys on the left of '=', and literal strings are
// out of scope and rejected.
nlohmann::json parse_toml(const std::string& text);

nlohmann::json parse_toml_file(const std::string& path);

}  // namespace cookiedim
