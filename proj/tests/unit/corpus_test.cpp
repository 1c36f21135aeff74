#include "lvmap/corpus.hpp"

#include <gtest/gtest.h>

#include "gen.hpp"

namespace lvmap {
namespace {

namespace fs = std::filesystem;
using testing::TempDir;

TEST(LanguageForPath, ByExtension) {
    EXPECT_EQ(language_for_path("a/B.java"), Language::Java);
    EXPECT_EQ(language_for_path("x.c"), Language::C);
    EXPECT_EQ(language_for_path("x.h"), Language::C);
    EXPECT_EQ(language_for_path("x.cpp"), std::nullopt);
    EXPECT_EQ(language_for_path("Makefile"), std::nullopt);
}

TEST(ReadSources, DirectoryPathsAreRelativeToRootName) {
    TempDir tmp;
    testing::write_files(tmp.path(), {{"proj/src/A.java", Language::Java, "class A {}"},
                                      {"proj/lib/b.c", Language::C, "int b;"},
                                      {"proj/notes.txt", Language::C, "text"}});
    const auto files = read_sources({tmp.path() / "proj"}, {});
    ASSERT_EQ(files.size(), 2u);
    EXPECT_EQ(files[0].path, "proj/lib/b.c");
    EXPECT_EQ(files[0].language, Language::C);
    EXPECT_EQ(files[1].path, "proj/src/A.java");
    EXPECT_EQ(files[1].language, Language::Java);
}

TEST(ReadSources, LanguageOverrideAppliesToEveryFile) {
    TempDir tmp;
    testing::write_files(tmp.path(), {{"d/a.c", Language::C, "int a;"}, {"d/x.txt", Language::C, "int x;"}});
    LoadOptions opts;
    opts.language = Language::Java;
    const auto files = read_sources({tmp.path() / "d" / "a.c", tmp.path() / "d" / "x.txt"}, opts);
    ASSERT_EQ(files.size(), 2u);
    for (const auto& f : files) EXPECT_EQ(f.language, Language::Java);
}

TEST(ReadSources, UnsupportedExplicitFileIsSkipped) {
    TempDir tmp;
    testing::write_files(tmp.path(), {{"x.txt", Language::C, "int x;"}});
    EXPECT_TRUE(read_sources({tmp.path() / "x.txt"}, {}).empty());
}

TEST(ReadSources, MissingInputThrows) {
    TempDir tmp;
    EXPECT_THROW(read_sources({tmp.path() / "nope"}, {}), std::runtime_error);
}

TEST(ReadSources, InvalidUtf8IsReplaced) {
    TempDir tmp;
    testing::write_files(tmp.path(), {{"bad.c", Language::C, "int a = 1; /* \xFF */"}});
    const auto files = read_sources({tmp.path() / "bad.c"}, {});
    ASSERT_EQ(files.size(), 1u);
    EXPECT_NE(files[0].text.find("\xEF\xBF\xBD"), std::string::npos);
}

TEST(BuildCorpus, IdsFollowPathThenLine) {
    const std::string two = "int f(void) { return 1; }\nint g(void) { return 2; }\n";
    const auto corpus = build_corpus({{"b.c", Language::C, two}, {"a.c", Language::C, two}}, {});
    ASSERT_EQ(corpus.blocks.size(), 4u);
    const std::vector<std::pair<std::string, std::uint32_t>> expected = {{"a.c", 1}, {"a.c", 2}, {"b.c", 1}, {"b.c", 2}};
    for (std::uint32_t i = 0; i < 4; ++i) {
        EXPECT_EQ(corpus.blocks[i].block_id, i);
        EXPECT_EQ(corpus.blocks[i].file, expected[i].first);
        EXPECT_EQ(corpus.blocks[i].span.start_line, expected[i].second);
    }
}

TEST(BuildCorpus, DeterministicAcrossLoadsAndThreads) {
    TempDir tmp;
    testing::CorpusShape shape;
    shape.files = 30;
    testing::write_files(tmp.path(), testing::random_corpus(5, shape));
    LoadOptions one;
    LoadOptions many;
    many.threads = 8;
    const auto a = load_corpus({tmp.path() / "proj"}, one);
    const auto b = load_corpus({tmp.path() / "proj"}, many);
    ASSERT_EQ(a.blocks.size(), b.blocks.size());
    ASSERT_GT(a.blocks.size(), 200u);
    for (std::size_t i = 0; i < a.blocks.size(); ++i) {
        EXPECT_EQ(a.blocks[i].file, b.blocks[i].file);
        EXPECT_EQ(a.blocks[i].span, b.blocks[i].span);
        EXPECT_EQ(a.blocks[i].lines, b.blocks[i].lines);
    }
}

TEST(IsEligible, BothLimitsApply) {
    const auto block = testing::block_from_texts(0, {"a;", "b;", "c;", "d;", "e;", "f;"}, 50);
    EXPECT_TRUE(is_eligible(block, 6, 50));
    EXPECT_FALSE(is_eligible(block, 7, 50));
    EXPECT_FALSE(is_eligible(block, 6, 51));
}

}  // namespace
}  // namespace lvmap
