#pragma once

#include <map>
#include <string>
#include <vector>

namespace specgap {

// Flat key-value text with optional [section] headers; '#' and ';' start
// comments. Keys before any header land in section "".
using ConfigMap = std::map<std::string, std::map<std::string, std::string>>;

ConfigMap parse_config_text(const std::string& text);
ConfigMap parse_config_file(const std::string& path);

// "1,2, 3" or "1 2 3" -> {1,2,3}
std::vector<int> parse_int_list(const std::string& text);
// Whitespace-separated tokens (phi specs carry commas of their own).
std::vector<std::string> parse_token_list(const std::string& text);

}  // namespace specgap
