#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace lvmap {

enum class Language { Java, C };

std::string_view to_string(Language lang) noexcept;
std::optional<Language> parse_language(std::string_view name) noexcept;

enum class TokenKind {
    Identifier,
    Keyword,
    Number,
    String,
    Char,
    Punct,
    Other,  // unknown single byte
};

struct Token {
    TokenKind kind;
    std::string_view text;
    std::uint32_t line;   // 1-based
    std::size_t offset;   // byte offset into the lexed buffer
};

/// Splits `src` into tokens. Whitespace and comments are dropped, and for C
/// whole preprocessor directives (with line continuations) are dropped too.
/// Total over arbitrary bytes: anything unrecognized becomes a one-byte
/// Other token. Tokens view into `src`, so it must outlive the result.
std::vector<Token> lex(std::string_view src, Language lang);

bool is_keyword(std::string_view word, Language lang) noexcept;

}  // namespace lvmap
