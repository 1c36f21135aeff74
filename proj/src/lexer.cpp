#include "lvmap/lexer.hpp"

#include <array>
#include <unordered_set>

namespace lvmap {

std::string_view to_string(Language lang) noexcept {
    return lang == Language::Java ? "java" : "c";
}

std::optional<Language> parse_language(std::string_view name) noexcept {
    if (name == "java") return Language::Java;
    if (name == "c") return Language::C;
    return std::nullopt;
}

namespace {

const std::unordered_set<std::string_view>& java_keywords() {
    static const std::unordered_set<std::string_view> words = {
        "abstract", "assert",     "boolean",   "break",     "byte",       "case",
        "catch",    "char",       "class",     "const",     "continue",   "default",
        "do",       "double",     "else",      "enum",      "extends",    "final",
        "finally",  "float",      "for",       "goto",      "if",         "implements",
        "import",   "instanceof", "int",       "interface", "long",       "native",
        "new",      "package",    "private",   "protected", "public",     "return",
        "short",    "static",     "strictfp",  "super",     "switch",     "synchronized",
        "this",     "throw",      "throws",    "transient", "try",        "void",
        "volatile", "while",      "true",      "false",     "null",
    };
    return words;
}

const std::unordered_set<std::string_view>& c_keywords() {
    static const std::unordered_set<std::string_view> words = {
        "auto",     "break",          "case",          "char",     "const",     "continue",
        "default",  "do",             "double",        "else",     "enum",      "extern",
        "float",    "for",            "goto",          "if",       "inline",    "int",
        "long",     "register",       "restrict",      "return",   "short",     "signed",
        "sizeof",   "static",         "struct",        "switch",   "typedef",   "union",
        "unsigned", "void",           "volatile",      "while",    "_Bool",     "_Complex",
        "_Imaginary", "_Alignas",     "_Alignof",      "_Atomic",  "_Generic",  "_Noreturn",
        "_Static_assert", "_Thread_local", "bool",     "true",     "false",
    };
    return words;
}

// Longest first within each leading character.
constexpr std::array<std::string_view, 25> kOperators = {
    ">>>=", "<<=", ">>=", ">>>", "...", "->", "++", "--", "<<", ">>",
    "<=",   ">=",  "==",  "!=",  "&&",  "||", "+=", "-=", "*=", "/=",
    "%=",   "&=",  "|=",  "^=",  "::",
};

constexpr bool is_ident_start(unsigned char c) noexcept {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' || c == '$' || c >= 0x80;
}

constexpr bool is_ident_char(unsigned char c) noexcept {
    return is_ident_start(c) || (c >= '0' && c <= '9');
}

constexpr bool is_digit(unsigned char c) noexcept { return c >= '0' && c <= '9'; }

constexpr bool is_space(unsigned char c) noexcept {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

class Lexer {
public:
    Lexer(std::string_view src, Language lang) : src_(src), lang_(lang) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        out.reserve(src_.size() / 4);
        while (pos_ < src_.size()) {
            const unsigned char c = peek();
            if (c == '\n') {
                ++line_;
                ++pos_;
                at_line_start_ = true;
                continue;
            }
            if (is_space(c)) {
                ++pos_;
                continue;
            }
            if (c == '/' && peek(1) == '/') {
                skip_line_comment();
                continue;
            }
            if (c == '/' && peek(1) == '*') {
                skip_block_comment();
                continue;
            }
            if (c == '#' && lang_ == Language::C && at_line_start_) {
                skip_directive();
                continue;
            }
            at_line_start_ = false;
            out.push_back(next_token());
        }
        return out;
    }

private:
    unsigned char peek(std::size_t ahead = 0) const noexcept {
        const std::size_t p = pos_ + ahead;
        return p < src_.size() ? static_cast<unsigned char>(src_[p]) : '\0';
    }

    void advance() noexcept {
        if (src_[pos_] == '\n') ++line_;
        ++pos_;
    }

    void skip_line_comment() noexcept {
        while (pos_ < src_.size() && src_[pos_] != '\n') {
            // C allows a backslash-continued // comment
            if (lang_ == Language::C && src_[pos_] == '\\' && peek(1) == '\n') advance();
            ++pos_;
        }
    }

    void skip_block_comment() noexcept {
        pos_ += 2;
        while (pos_ < src_.size() && !(src_[pos_] == '*' && peek(1) == '/')) advance();
        pos_ = pos_ < src_.size() ? pos_ + 2 : pos_;
    }

    void skip_directive() noexcept {
        while (pos_ < src_.size() && src_[pos_] != '\n') {
            if (src_[pos_] == '\\' && (peek(1) == '\n' || (peek(1) == '\r' && peek(2) == '\n'))) {
                while (src_[pos_] != '\n') ++pos_;
                advance();
                continue;
            }
            if (src_[pos_] == '/' && peek(1) == '*') {
                skip_block_comment();
                continue;
            }
            if (src_[pos_] == '/' && peek(1) == '/') {
                skip_line_comment();
                continue;
            }
            ++pos_;
        }
    }

    Token make(TokenKind kind, std::size_t start, std::uint32_t line) const {
        return Token{kind, src_.substr(start, pos_ - start), line, start};
    }

    void skip_quoted(char quote) noexcept {
        ++pos_;
        while (pos_ < src_.size()) {
            const char c = src_[pos_];
            if (c == '\\' && pos_ + 1 < src_.size()) {
                advance();
                advance();
                continue;
            }
            if (c == quote) {
                ++pos_;
                return;
            }
            // unterminated literal ends at end of line
            if (c == '\n') return;
            ++pos_;
        }
    }

    Token next_token() {
        const std::size_t start = pos_;
        const std::uint32_t line = line_;
        const unsigned char c = peek();

        if (is_ident_start(c)) {
            while (pos_ < src_.size() && is_ident_char(peek())) ++pos_;
            const std::string_view word = src_.substr(start, pos_ - start);
            // C wide/UTF string and char prefixes
            if (lang_ == Language::C && (peek() == '"' || peek() == '\'') &&
                (word == "L" || word == "u" || word == "U" || word == "u8")) {
                const char q = static_cast<char>(peek());
                skip_quoted(q);
                return make(q == '"' ? TokenKind::String : TokenKind::Char, start, line);
            }
            return make(is_keyword(word, lang_) ? TokenKind::Keyword : TokenKind::Identifier, start, line);
        }

        if (is_digit(c) || (c == '.' && is_digit(peek(1)))) {
            while (pos_ < src_.size()) {
                const unsigned char d = peek();
                if ((d == '+' || d == '-') && pos_ > start) {
                    const unsigned char prev = static_cast<unsigned char>(src_[pos_ - 1]);
                    const bool hex = src_.size() > start + 1 && (src_[start + 1] == 'x' || src_[start + 1] == 'X');
                    const bool exp = hex ? (prev == 'p' || prev == 'P') : (prev == 'e' || prev == 'E');
                    if (!exp) break;
                    ++pos_;
                    continue;
                }
                if (!is_ident_char(d) && d != '.') break;
                ++pos_;
            }
            return make(TokenKind::Number, start, line);
        }

        if (c == '"') {
            if (lang_ == Language::Java && peek(1) == '"' && peek(2) == '"') {
                pos_ += 3;
                while (pos_ < src_.size() && !(peek() == '"' && peek(1) == '"' && peek(2) == '"')) {
                    if (peek() == '\\' && pos_ + 1 < src_.size()) advance();
                    advance();
                }
                pos_ = pos_ < src_.size() ? pos_ + 3 : pos_;
                return make(TokenKind::String, start, line);
            }
            skip_quoted('"');
            return make(TokenKind::String, start, line);
        }
        if (c == '\'') {
            skip_quoted('\'');
            return make(TokenKind::Char, start, line);
        }

        const std::string_view rest = src_.substr(pos_);
        for (const std::string_view op : kOperators) {
            if (rest.starts_with(op)) {
                pos_ += op.size();
                return make(TokenKind::Punct, start, line);
            }
        }
        ++pos_;
        constexpr std::string_view kPunct = "{}()[];,.<>=+-*/%&|^!~?:@#\\";
        return make(kPunct.find(static_cast<char>(c)) != std::string_view::npos ? TokenKind::Punct
                                                                                : TokenKind::Other,
                    start, line);
    }

    std::string_view src_;
    Language lang_;
    std::size_t pos_ = 0;
    std::uint32_t line_ = 1;
    bool at_line_start_ = true;
};

}  // namespace

bool is_keyword(std::string_view word, Language lang) noexcept {
    const auto& set = lang == Language::Java ? java_keywords() : c_keywords();
    return set.contains(word);
}

std::vector<Token> lex(std::string_view src, Language lang) {
    return Lexer(src, lang).run();
}

}  // namespace lvmap
