#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace parmine {

// Minimal UTF-8 and case handling for the Latin and Cyrillic ranges this
// pipeline works with. Invalid byte sequences decode to U+FFFD and never
// throw.

// Decodes the code point starting at byte offset `pos` and advances `pos`
// past it. `pos` must be < text.size().
char32_t next_codepoint(std::string_view text, std::size_t& pos);

void append_utf8(std::string& out, char32_t cp);

// Number of code points in a UTF-8 string.
std::size_t codepoint_count(std::string_view text);

bool is_letter(char32_t cp);
bool is_ascii_digit(char32_t cp);
bool is_space(char32_t cp);
bool is_uppercase_letter(char32_t cp);

char32_t to_lower(char32_t cp);
char32_t to_upper(char32_t cp);

// Lowercases every code point. Used for case-insensitive dictionary keys.
std::string fold_case(std::string_view text);

}  // namespace parmine
