#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace bnsum::utf8 {

/// A decoded code point together with its byte extent in the source.
struct CodePoint {
    char32_t value;
    std::size_t offset;
    std::size_t length;
};

/// Decodes the code point starting at `offset`. Returns nullopt on malformed
/// input (overlong forms, surrogates, truncated sequences, values > U+10FFFF).
std::optional<CodePoint> decode(std::string_view text, std::size_t offset) noexcept;

bool is_valid(std::string_view text) noexcept;

/// Throws InvalidEncoding naming the first bad byte offset.
void require_valid(std::string_view text, std::string_view what);

bool is_space(char32_t c) noexcept;

std::string encode(char32_t c);

/// Lowercases ASCII letters only; other scripts pass through unchanged.
std::string ascii_lower(std::string_view text);

}  // namespace bnsum::utf8
