#pragma once

#include <filesystem>
#include <istream>
#include <map>
#include <string>

namespace bhspin {

/// Flat `key=value` configuration: one pair per line, `#` starts a comment,
/// blank lines are ignored, surrounding whitespace is trimmed. A repeated key
/// keeps its last value. Throws InvalidArgument (with the line number) on a
/// line without '=' or with an empty key.
[[nodiscard]] std::map<std::string, std::string> parse_config(std::istream& in);

/// Throws InvalidArgument if the file cannot be opened.
[[nodiscard]] std::map<std::string, std::string> load_config(const std::filesystem::path& path);

}  // namespace bhspin
