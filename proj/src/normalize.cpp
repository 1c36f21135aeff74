#include "lvmap/normalize.hpp"

#include <algorithm>

#include "lvmap/hash.hpp"

namespace lvmap {

namespace {

std::string_view normalized_text(const Token& tok, const NormalizeOptions& opts) {
    switch (tok.kind) {
        case TokenKind::Identifier:
            return "id";
        case TokenKind::Number:
            return opts.abstract_literals ? std::string_view("0") : tok.text;
        case TokenKind::String:
            return opts.abstract_literals ? std::string_view("\"\"") : tok.text;
        case TokenKind::Char:
            return opts.abstract_literals ? std::string_view("''") : tok.text;
        default:
            return tok.text;
    }
}

bool ends_line(const Token& tok) {
    return tok.kind == TokenKind::Punct && tok.text.size() == 1 &&
           (tok.text[0] == ';' || tok.text[0] == '{' || tok.text[0] == '}');
}

// Calls emit(tokens_of_line) for each pretty-printed line.
template <typename Emit>
void for_each_line(std::span<const Token> tokens, const NormalizeOptions& opts, Emit&& emit) {
    std::vector<std::string_view> line;
    for (const Token& tok : tokens) {
        line.push_back(normalized_text(tok, opts));
        if (ends_line(tok)) {
            emit(std::span<const std::string_view>(line));
            line.clear();
        }
    }
    if (!line.empty()) emit(std::span<const std::string_view>(line));
}

std::vector<NormalizedLine> build_lines(std::span<const Token> tokens, const NormalizeOptions& opts) {
    std::vector<NormalizedLine> lines;
    for_each_line(tokens, opts, [&](std::span<const std::string_view> parts) {
        NormalizedLine nl;
        for (const auto part : parts) nl.text += part;
        nl.hash = hash64(nl.text);
        lines.push_back(std::move(nl));
    });
    return lines;
}

bool is_punct(const Token& tok, std::string_view text) {
    return tok.kind == TokenKind::Punct && tok.text == text;
}

bool is_trailing_qualifier(const Token& tok) {
    if (tok.kind == TokenKind::Identifier) return true;
    if (tok.kind == TokenKind::Keyword) {
        return tok.text == "throws" || tok.text == "const" || tok.text == "volatile";
    }
    return is_punct(tok, ",") || is_punct(tok, ".");
}

// Index of the `(` matching the `)` at `close`, or npos.
std::size_t matching_open_paren(std::span<const Token> tokens, std::size_t close) {
    int depth = 0;
    for (std::size_t i = close + 1; i-- > 0;) {
        if (is_punct(tokens[i], ")")) {
            ++depth;
        } else if (is_punct(tokens[i], "(")) {
            if (--depth == 0) return i;
        } else if (is_punct(tokens[i], ";") || is_punct(tokens[i], "{") || is_punct(tokens[i], "}")) {
            return std::string_view::npos;
        }
    }
    return std::string_view::npos;
}

constexpr std::size_t kMaxQualifierTokens = 24;

// If the `{` at `brace` opens a function body, returns the index of the
// function name token; npos otherwise.
std::size_t function_name_before(std::span<const Token> tokens, std::size_t brace) {
    std::size_t j = brace;
    std::size_t skipped = 0;
    while (j > 0 && skipped <= kMaxQualifierTokens) {
        const Token& t = tokens[j - 1];
        if (is_punct(t, ")")) break;
        if (!is_trailing_qualifier(t)) return std::string_view::npos;
        --j;
        ++skipped;
    }
    if (j == 0 || !is_punct(tokens[j - 1], ")")) return std::string_view::npos;
    const std::size_t open = matching_open_paren(tokens, j - 1);
    if (open == std::string_view::npos || open == 0) return std::string_view::npos;
    const std::size_t name = open - 1;
    if (tokens[name].kind != TokenKind::Identifier) return std::string_view::npos;
    if (name > 0) {
        const Token& prev = tokens[name - 1];
        const bool type_like = prev.kind == TokenKind::Identifier ||
                               (prev.kind == TokenKind::Keyword && prev.text != "new" && prev.text != "return") ||
                               is_punct(prev, ">") || is_punct(prev, ">>") || is_punct(prev, ">>>") ||
                               is_punct(prev, "]") || is_punct(prev, "*") || is_punct(prev, ")") ||
                               is_punct(prev, ";") || is_punct(prev, "{") || is_punct(prev, "}");
        if (!type_like) return std::string_view::npos;
    }
    return name;
}

// Skips Java annotations (`@Name`, `@a.b.Name(...)`) starting at `i`.
std::size_t skip_annotations(std::span<const Token> tokens, std::size_t i, std::size_t limit) {
    while (i + 1 < limit && is_punct(tokens[i], "@") && tokens[i + 1].kind == TokenKind::Identifier) {
        i += 2;
        while (i + 1 < limit && is_punct(tokens[i], ".") && tokens[i + 1].kind == TokenKind::Identifier) i += 2;
        if (i < limit && is_punct(tokens[i], "(")) {
            int depth = 0;
            for (; i < limit; ++i) {
                if (is_punct(tokens[i], "(")) ++depth;
                if (is_punct(tokens[i], ")") && --depth == 0) {
                    ++i;
                    break;
                }
            }
        }
    }
    return i;
}

// First token of the declaration that ends with the name at `name`.
std::size_t declaration_start(std::span<const Token> tokens, std::size_t name) {
    std::size_t i = name;
    while (i > 0) {
        const Token& t = tokens[i - 1];
        if (is_punct(t, ";") || is_punct(t, "{") || is_punct(t, "}")) break;
        --i;
    }
    return skip_annotations(tokens, i, name);
}

}  // namespace

std::vector<NormalizedLine> tokenize_block(std::string_view block_text, Language lang,
                                           const NormalizeOptions& opts) {
    const auto tokens = lex(block_text, lang);
    return build_lines(tokens, opts);
}

std::string pretty_print(std::string_view block_text, Language lang, const NormalizeOptions& opts) {
    const auto tokens = lex(block_text, lang);
    std::string out;
    for_each_line(std::span<const Token>(tokens), opts, [&](std::span<const std::string_view> parts) {
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i > 0) out += ' ';
            out += parts[i];
        }
        out += '\n';
    });
    return out;
}

ExtractResult extract_blocks(const SourceFile& file, const NormalizeOptions& opts) {
    ExtractResult result;
    const auto tokens = lex(file.text, file.language);

    struct Frame {
        bool function = false;
        std::size_t start = 0;  // first token of the declaration
    };
    std::vector<Frame> stack;
    std::size_t open_functions = 0;

    for (std::size_t i = 0; i < tokens.size(); ++i) {
        const Token& tok = tokens[i];
        if (is_punct(tok, "{")) {
            Frame frame;
            if (open_functions == 0) {
                const std::size_t name = function_name_before(tokens, i);
                if (name != std::string_view::npos) {
                    frame.function = true;
                    frame.start = declaration_start(tokens, name);
                    ++open_functions;
                }
            }
            stack.push_back(frame);
        } else if (is_punct(tok, "}")) {
            if (stack.empty()) {
                result.warnings.push_back(file.path + ":" + std::to_string(tok.line) + ": unmatched '}'");
                continue;
            }
            const Frame frame = stack.back();
            stack.pop_back();
            if (!frame.function) continue;
            --open_functions;
            const auto body = std::span<const Token>(tokens).subspan(frame.start, i - frame.start + 1);
            CodeBlock block;
            block.file = file.path;
            block.span = {tokens[frame.start].line, tok.line};
            block.lines = build_lines(body, opts);
            block.token_count = body.size();
            result.blocks.push_back(std::move(block));
        }
    }
    if (open_functions > 0) {
        const auto it = std::find_if(stack.begin(), stack.end(), [](const Frame& f) { return f.function; });
        result.warnings.push_back(file.path + ":" + std::to_string(tokens[it->start].line) +
                                  ": unterminated function body discarded");
    }
    return result;
}

std::string sanitize_utf8(std::string_view bytes) {
    static constexpr std::string_view kReplacement = "\xEF\xBF\xBD";
    std::string out;
    out.reserve(bytes.size());
    std::size_t i = 0;
    while (i < bytes.size()) {
        const auto c = static_cast<unsigned char>(bytes[i]);
        std::size_t len = 0;
        std::uint32_t min_cp = 0;
        if (c < 0x80) {
            out += static_cast<char>(c);
            ++i;
            continue;
        } else if ((c & 0xE0) == 0xC0) {
            len = 2;
            min_cp = 0x80;
        } else if ((c & 0xF0) == 0xE0) {
            len = 3;
            min_cp = 0x800;
        } else if ((c & 0xF8) == 0xF0) {
            len = 4;
            min_cp = 0x10000;
        }
        bool ok = len > 0 && i + len <= bytes.size();
        std::uint32_t cp = len > 0 ? (c & (0x7F >> len)) : 0;
        for (std::size_t k = 1; ok && k < len; ++k) {
            const auto cc = static_cast<unsigned char>(bytes[i + k]);
            if ((cc & 0xC0) != 0x80) ok = false;
            cp = (cp << 6) | (cc & 0x3F);
        }
        if (ok && cp >= min_cp && cp <= 0x10FFFF && !(cp >= 0xD800 && cp <= 0xDFFF)) {
            out.append(bytes.substr(i, len));
            i += len;
        } else {
            out += kReplacement;
            ++i;
        }
    }
    return out;
}

}  // namespace lvmap
