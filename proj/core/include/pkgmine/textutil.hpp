#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace pkgmine::text {

std::string to_lower(std::string_view s);
std::string_view trim(std::string_view s);
/// Trim, collapse internal whitespace runs to one space, ASCII-lowercase.
std::string fold_whitespace(std::string_view s, bool lowercase);
/// Lowercase and collapse every non-alphanumeric run to a single space.
/// Used for license-name matching ("BSD-3-Clause" == "BSD 3 Clause").
std::string fold_punct(std::string_view s);

std::vector<std::string> split(std::string_view s, char sep);
bool starts_with(std::string_view s, std::string_view prefix);
bool ends_with(std::string_view s, std::string_view suffix);

/// True when `word` occurs in `s` delimited by non-word characters.
/// Word characters are [A-Za-z0-9_].
bool contains_word(std::string_view s, std::string_view word, bool case_sensitive);

/// RFC 4180 field quoting: wraps in quotes when the field contains a
/// comma, quote, CR or LF; embedded quotes are doubled.
std::string csv_field(std::string_view field);

} // namespace pkgmine::text
