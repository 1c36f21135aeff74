#include "lvmap/normalize.hpp"

#include <map>
#include <string>

#include <gtest/gtest.h>

#include "gen.hpp"
#include "lvmap/corpus.hpp"
#include "lvmap/lexer.hpp"

namespace lvmap {
namespace {

using testing::Rng;

std::vector<std::string> texts(const std::vector<NormalizedLine>& lines) {
    std::vector<std::string> out;
    for (const auto& l : lines) out.push_back(l.text);
    return out;
}

// Re-emits the tokens of `src` with every identifier renamed through `names`.
std::string rename_identifiers(std::string_view src, Language lang, std::map<std::string, std::string>& names,
                               Rng& rng) {
    std::string out;
    std::size_t pos = 0;
    for (const Token& t : lex(src, lang)) {
        out.append(src.substr(pos, t.offset - pos));
        if (t.kind == TokenKind::Identifier) {
            auto [it, fresh] = names.try_emplace(std::string(t.text));
            if (fresh) it->second = "r" + testing::random_identifier(rng);
            out += it->second;
        } else {
            out += t.text;
        }
        pos = t.offset + t.text.size();
    }
    out.append(src.substr(pos));
    return out;
}

// Re-emits the tokens of `src` with random whitespace and comments between them.
std::string reformat(std::string_view src, Language lang, Rng& rng) {
    static constexpr const char* kSeparators[] = {" ", "\n", "\t", "  \n\n   ", " /* note */ ", " // trailing\n",
                                                  " /* multi\n line */ "};
    std::string out;
    for (const Token& t : lex(src, lang)) {
        out += kSeparators[testing::uniform(rng, 0, std::size(kSeparators) - 1)];
        out += t.text;
    }
    out += '\n';
    return out;
}

TEST(TokenizeBlock, KeywordsStayIdentifiersBecomeId) {
    const auto lines = tokenize_block("int total = count + 1;", Language::Java);
    ASSERT_EQ(lines.size(), 1u);
    EXPECT_EQ(lines[0].text, "intid=id+1;");
}

TEST(TokenizeBlock, CommentsContributeNothing) {
    const auto lines = tokenize_block("x = x; /*c*/\ny = y;", Language::Java);
    ASSERT_EQ(lines.size(), 2u);
    EXPECT_EQ(lines[0].text, "id=id;");
    EXPECT_EQ(lines[1].text, "id=id;");
    EXPECT_EQ(lines[0].hash, lines[1].hash);
}

TEST(TokenizeBlock, BreaksAfterSemicolonAndBraces) {
    const auto lines = tokenize_block("void f(int a) { if (a) { g(); } else h(a); }", Language::C);
    EXPECT_EQ(texts(lines), (std::vector<std::string>{"voidid(intid){", "if(id){", "id();", "}", "elseid(id);", "}"}));
}

TEST(TokenizeBlock, LiteralsKeptUnlessAbstracted) {
    const std::string src = "s = \"a  b\" + 'x' + 42;";
    EXPECT_EQ(tokenize_block(src, Language::Java)[0].text, "id=\"a  b\"+'x'+42;");
    NormalizeOptions opts;
    opts.abstract_literals = true;
    EXPECT_EQ(tokenize_block(src, Language::Java, opts)[0].text, "id=\"\"+''+0;");
}

TEST(TokenizeBlock, PreprocessorLinesDroppedInC) {
    const auto lines = tokenize_block("#define X \\\n  1\nint a = X;\n#include <x.h>\n", Language::C);
    EXPECT_EQ(texts(lines), (std::vector<std::string>{"intid=id;"}));
}

TEST(TokenizeBlock, TotalOverArbitraryBytes) {
    std::string junk;
    for (int c = 0; c < 256; ++c) junk += static_cast<char>(c);
    EXPECT_NO_THROW(tokenize_block(junk, Language::C));
    EXPECT_NO_THROW(tokenize_block("\"unterminated\n/* open comment", Language::Java));
}

// Line text with string and char literal contents removed.
std::string outside_literals(const std::string& text) {
    std::string out;
    char quote = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (quote != 0) {
            if (c == '\\') ++i;
            else if (c == quote) quote = 0;
            continue;
        }
        if (c == '"' || c == '\'') quote = c;
        out += c;
    }
    return out;
}

// Whitespace inside a kept literal is content, not layout.
TEST(TokenizeBlock, NoWhitespaceOutsideLiterals) {
    Rng rng(7);
    for (int i = 0; i < 50; ++i) {
        const auto lang = i % 2 ? Language::C : Language::Java;
        const auto src = testing::render_function(lang, "f", testing::random_body(rng, lang, 12));
        for (const auto& line : tokenize_block(src, lang)) {
            EXPECT_EQ(outside_literals(line.text).find_first_of(" \t\n\r"), std::string::npos) << line.text;
        }
    }
}

TEST(TokenizeBlockProperty, RenameInvariance) {
    Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        const auto lang = i % 2 ? Language::C : Language::Java;
        const auto src = testing::render_function(lang, "f" + std::to_string(i),
                                                  testing::random_body(rng, lang, testing::uniform(rng, 1, 25)));
        std::map<std::string, std::string> names;
        const auto renamed = rename_identifiers(src, lang, names, rng);
        ASSERT_NE(renamed, src);
        EXPECT_EQ(tokenize_block(renamed, lang), tokenize_block(src, lang)) << src << "\n---\n" << renamed;
    }
}

TEST(TokenizeBlockProperty, WhitespaceAndCommentInvariance) {
    Rng rng(13);
    for (int i = 0; i < 200; ++i) {
        const auto lang = i % 2 ? Language::C : Language::Java;
        const auto src = testing::render_function(lang, "g", testing::random_body(rng, lang, testing::uniform(rng, 1, 25)));
        const auto noisy = reformat(src, lang, rng);
        EXPECT_EQ(tokenize_block(noisy, lang), tokenize_block(src, lang)) << noisy;
    }
}

TEST(TokenizeBlockProperty, PrettyPrintIsIdempotent) {
    Rng rng(17);
    for (int i = 0; i < 200; ++i) {
        const auto lang = i % 2 ? Language::C : Language::Java;
        const auto src = testing::render_function(lang, "h", testing::random_body(rng, lang, testing::uniform(rng, 1, 25)));
        const auto once = pretty_print(src, lang);
        EXPECT_EQ(tokenize_block(once, lang), tokenize_block(src, lang));
        EXPECT_EQ(pretty_print(once, lang), once);
    }
}

TEST(ExtractBlocks, EmptyFile) {
    const auto r = extract_blocks({"a/Empty.java", Language::Java, ""});
    EXPECT_TRUE(r.blocks.empty());
    EXPECT_TRUE(r.warnings.empty());
}

TEST(ExtractBlocks, JavaMethodsOfEightAndThreeLines) {
    const std::string src =
        "public class A {\n"            // 1
        "    int f(int x) {\n"          // 2
        "        int y = x + 1;\n"      // 3
        "        y = y * 2;\n"          // 4
        "        y = y - x;\n"          // 5
        "        g(y);\n"               // 6
        "        h(y, x);\n"            // 7
        "        return y;\n"           // 8
        "    }\n"                       // 9
        "    void g(int v) {\n"         // 10
        "        v++;\n"                // 11
        "    }\n"                       // 12
        "}\n";
    const auto r = extract_blocks({"A.java", Language::Java, src});
    ASSERT_EQ(r.blocks.size(), 2u);
    EXPECT_EQ(r.blocks[0].lines.size(), 8u);
    EXPECT_EQ(r.blocks[0].span, (SourceSpan{2, 9}));
    EXPECT_EQ(r.blocks[0].lines.front().text, "intid(intid){");
    EXPECT_EQ(r.blocks[1].lines.size(), 3u);
    EXPECT_EQ(r.blocks[1].span, (SourceSpan{10, 12}));
    EXPECT_FALSE(is_eligible(r.blocks[1], 6, 0));
    EXPECT_TRUE(is_eligible(r.blocks[0], 6, 0));
}

TEST(ExtractBlocks, CFunctionsWithBraceOnNextLine) {
    const std::string src =
        "#include <stdio.h>\n"
        "static const char *name(struct s *p)\n"
        "{\n"
        "    if (p) { return p->n; }\n"
        "    return \"{\";\n"
        "}\n"
        "struct s table[] = { {1}, {2} };\n"
        "int main(void) {\n"
        "    for (;;) { break; }\n"
        "    return 0;\n"
        "}\n";
    const auto r = extract_blocks({"x.c", Language::C, src});
    ASSERT_EQ(r.blocks.size(), 2u);
    EXPECT_EQ(r.blocks[0].span, (SourceSpan{2, 6}));
    EXPECT_EQ(r.blocks[1].span, (SourceSpan{8, 11}));
    EXPECT_TRUE(r.warnings.empty());
}

TEST(ExtractBlocks, AnnotationsAndNestedClassesInJava) {
    const std::string src =
        "class A {\n"
        "  @Override\n"
        "  public String toString() {\n"
        "    Runnable r = new Runnable() { public void run() { go(); } };\n"
        "    return \"A\";\n"
        "  }\n"
        "  interface I { void m(); }\n"
        "  static class B { B() { super(); } }\n"
        "}\n";
    const auto r = extract_blocks({"A.java", Language::Java, src});
    ASSERT_EQ(r.blocks.size(), 2u);
    EXPECT_EQ(r.blocks[0].span, (SourceSpan{3, 6}));
    EXPECT_EQ(r.blocks[1].span, (SourceSpan{8, 8}));
}

TEST(ExtractBlocks, ControlStatementsAreNotFunctions) {
    const auto r = extract_blocks({"k.c", Language::C, "void f(int a) {\n while (a) {\n a--; }\n}\n"});
    ASSERT_EQ(r.blocks.size(), 1u);
    EXPECT_EQ(r.blocks[0].span, (SourceSpan{1, 4}));
}

TEST(ExtractBlocks, UnterminatedBodyIsDiscardedWithWarning) {
    const auto r = extract_blocks({"u.c", Language::C, "int ok(void) { return 1; }\nint bad(void) {\n  if (1) {\n"});
    ASSERT_EQ(r.blocks.size(), 1u);
    EXPECT_EQ(r.blocks[0].span, (SourceSpan{1, 1}));
    ASSERT_EQ(r.warnings.size(), 1u);
    EXPECT_NE(r.warnings[0].find("u.c:2"), std::string::npos);
}

TEST(ExtractBlocks, StrayClosingBraceWarns) {
    const auto r = extract_blocks({"s.c", Language::C, "}\nint f(void) { return 1; }\n"});
    EXPECT_EQ(r.blocks.size(), 1u);
    EXPECT_EQ(r.warnings.size(), 1u);
}

TEST(ExtractBlocks, TokenCountCoversSignatureThroughBrace) {
    const auto r = extract_blocks({"t.c", Language::C, "int f(int a) { return a + 1; }"});
    ASSERT_EQ(r.blocks.size(), 1u);
    // int f ( int a ) { return a + 1 ; }
    EXPECT_EQ(r.blocks[0].token_count, 13u);
}

TEST(ExtractBlocks, GeneratedFilesYieldEveryFunction) {
    Rng rng(23);
    for (int i = 0; i < 40; ++i) {
        const auto lang = i % 2 ? Language::C : Language::Java;
        std::vector<std::string> fns;
        const std::size_t n = testing::uniform(rng, 1, 6);
        for (std::size_t j = 0; j < n; ++j) {
            fns.push_back(testing::render_function(lang, "fn" + std::to_string(j), testing::random_body(rng, lang, 8)));
        }
        const auto r = extract_blocks({"g", lang, testing::render_file(lang, "U", fns)});
        EXPECT_EQ(r.blocks.size(), n);
        EXPECT_TRUE(r.warnings.empty());
        for (const auto& b : r.blocks) {
            EXPECT_FALSE(b.lines.empty());
            EXPECT_LE(b.span.start_line, b.span.end_line);
        }
    }
}

TEST(SanitizeUtf8, ReplacesInvalidSequences) {
    EXPECT_EQ(sanitize_utf8("plain"), "plain");
    EXPECT_EQ(sanitize_utf8("caf\xC3\xA9"), "caf\xC3\xA9");
    EXPECT_EQ(sanitize_utf8("a\xFF" "b"), "a\xEF\xBF\xBD" "b");
    EXPECT_EQ(sanitize_utf8("\xC3"), "\xEF\xBF\xBD");
    EXPECT_EQ(sanitize_utf8("\xC0\xAF"), "\xEF\xBF\xBD\xEF\xBF\xBD");  // overlong
}

}  // namespace
}  // namespace lvmap
