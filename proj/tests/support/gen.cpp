#include "gen.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>

#include "lvmap/hash.hpp"

namespace lvmap::testing {

namespace {

constexpr const char* kSyllables[] = {"ka", "lo", "mi", "ren", "tor", "vex", "qua", "zel", "pim", "sul", "bax", "nor"};
constexpr const char* kJavaTypes[] = {"int", "long", "double", "boolean", "char", "float"};
constexpr const char* kCTypes[] = {"int", "long", "double", "char", "unsigned", "short"};
constexpr const char* kWords[] = {"ok", "fail", "retry", "done", "open", "closed"};

// V: identifier, N: number, T: type keyword, S: short word
constexpr const char* kJavaTemplates[] = {
    "T V = V + N;",
    "V = V * N - V;",
    "V.V(V, N);",
    "V += V;",
    "T V = V.V();",
    "if (V > N) V = V;",
    "V[N] = V;",
    "V V = \"S\" + V;",
    "V = V(V) ? N : V;",
    "V.V(\"S\");",
    "V++;",
    "T[] V = new T[N];",
    "V = V != null ? V : V;",
    "V.V.V(V);",
    "V = V.V(V, N);",
    "while (V < N) V += N;",
    "V = V(V, N) + V.V(V) * (V - N) / V(N, V);",
};
constexpr const char* kCTemplates[] = {
    "T V = V + N;",
    "V = V * N - V;",
    "V(V, N);",
    "V->V = V;",
    "V[N] = V;",
    "V += sizeof(T);",
    "if (V > N) V = V;",
    "V(\"S %d\\n\", V);",
    "T *V = V(N);",
    "V++;",
    "V = V ? N : V;",
    "V(V, 0, N);",
    "V.V = V & N;",
    "V = V << N;",
    "while (V < N) V += N;",
    "V = (T)V;",
    "V = V(V, N) + V->V(V) * (V - N) / V(N, V);",
};

template <typename T, std::size_t N>
const T& pick(Rng& rng, const T (&arr)[N]) {
    return arr[uniform(rng, 0, N - 1)];
}

struct Function {
    Language lang;
    std::vector<std::string> body;
};

bool is_structural(const std::string& line) {
    return line.find('{') != std::string::npos || line.find('}') != std::string::npos;
}

void edit_body(Rng& rng, Language lang, std::vector<std::string>& body) {
    const std::size_t edits = uniform(rng, 1, std::max<std::size_t>(1, body.size() / 3));
    for (std::size_t e = 0; e < edits; ++e) {
        const std::size_t op = uniform(rng, 0, 2);
        if (op == 0 || body.empty()) {
            body.insert(body.begin() + static_cast<std::ptrdiff_t>(uniform(rng, 0, body.size())),
                        random_statement(rng, lang));
            continue;
        }
        const std::size_t at = uniform(rng, 0, body.size() - 1);
        if (is_structural(body[at])) continue;
        if (op == 1) {
            body[at] = random_statement(rng, lang);
        } else if (body.size() > 2) {
            body.erase(body.begin() + static_cast<std::ptrdiff_t>(at));
        }
    }
}

}  // namespace

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

std::string random_identifier(Rng& rng) {
    std::string out = pick(rng, kSyllables);
    out += pick(rng, kSyllables);
    if (uniform(rng, 0, 3) == 0) out += std::to_string(uniform(rng, 0, 9));
    return out;
}

std::string random_statement(Rng& rng, Language lang) {
    const std::string_view tpl = lang == Language::Java ? pick(rng, kJavaTemplates) : pick(rng, kCTemplates);
    std::string out;
    for (const char c : tpl) {
        switch (c) {
            case 'V':
                out += random_identifier(rng);
                break;
            case 'N':
                out += std::to_string(uniform(rng, 0, 99));
                break;
            case 'T':
                out += lang == Language::Java ? pick(rng, kJavaTypes) : pick(rng, kCTypes);
                break;
            case 'S':
                out += pick(rng, kWords);
                break;
            default:
                out += c;
        }
    }
    return out;
}

std::vector<std::string> random_body(Rng& rng, Language lang, std::size_t statements) {
    std::vector<std::string> body;
    int depth = 0;
    for (std::size_t i = 0; i < statements; ++i) {
        if (depth < 2 && uniform(rng, 0, 9) == 0) {
            const std::string v = random_identifier(rng);
            body.push_back(fmt::format("for (int {0} = 0; {0} < {1}; {0}++) {{", v, uniform(rng, 1, 64)));
            ++depth;
        }
        body.push_back(random_statement(rng, lang));
        if (depth > 0 && uniform(rng, 0, 4) == 0) {
            body.push_back("}");
            --depth;
        }
    }
    for (; depth > 0; --depth) body.push_back("}");
    return body;
}

std::string render_function(Language lang, const std::string& name, const std::vector<std::string>& body) {
    std::string out;
    std::size_t depth = 2;
    if (lang == Language::Java) {
        out += fmt::format("    public static int {}(int a, int b) {{\n", name);
    } else {
        out += fmt::format("int {}(int a, int b)\n{{\n", name);
        depth = 1;
    }
    const std::size_t base = depth;
    for (const auto& line : body) {
        if (line == "}") --depth;
        out += std::string(depth * 4, ' ') + line + '\n';
        if (line.ends_with('{')) ++depth;
    }
    out += std::string(base * 4, ' ') + "return a;\n";
    out += lang == Language::Java ? "    }\n" : "}\n";
    return out;
}

std::string render_file(Language lang, const std::string& unit_name, const std::vector<std::string>& functions) {
    std::string out;
    if (lang == Language::Java) {
        out += fmt::format("package gen;\n\npublic class {} {{\n", unit_name);
    } else {
        out += "#include <stdio.h>\n#include <string.h>\n";
    }
    for (const auto& fn : functions) {
        out += '\n';
        out += fn;
    }
    if (lang == Language::Java) out += "}\n";
    return out;
}

std::vector<SourceFile> random_corpus(std::uint64_t seed, const CorpusShape& shape) {
    Rng rng(seed);
    std::vector<Function> pool;
    std::vector<SourceFile> files;
    std::size_t counter = 0;
    for (std::size_t f = 0; f < shape.files; ++f) {
        const Language lang = shape.mixed && f % 2 == 1 ? Language::C : Language::Java;
        std::vector<std::string> rendered;
        for (std::size_t j = 0; j < shape.functions_per_file; ++j) {
            std::vector<std::size_t> same;
            for (std::size_t p = 0; p < pool.size(); ++p) {
                if (pool[p].lang == lang) same.push_back(p);
            }
            Function fn{lang, {}};
            if (!same.empty() && std::bernoulli_distribution(shape.clone_rate)(rng)) {
                fn.body = pool[same[uniform(rng, 0, same.size() - 1)]].body;
                edit_body(rng, lang, fn.body);
            } else {
                fn.body = random_body(rng, lang, uniform(rng, shape.min_statements, shape.max_statements));
            }
            rendered.push_back(render_function(lang, random_identifier(rng) + std::to_string(counter++), fn.body));
            pool.push_back(std::move(fn));
        }
        const std::string path = lang == Language::Java ? fmt::format("proj/java/p{}/Unit{}.java", f % 7, f)
                                                         : fmt::format("proj/c/m{}/unit{}.c", f % 5, f);
        files.push_back({path, lang, render_file(lang, fmt::format("Unit{}", f), rendered)});
    }
    return files;
}

std::size_t count_lines(const std::vector<SourceFile>& files) {
    std::size_t n = 0;
    for (const auto& f : files) n += static_cast<std::size_t>(std::count(f.text.begin(), f.text.end(), '\n'));
    return n;
}

CodeBlock block_from_texts(std::uint32_t id, const std::vector<std::string>& texts, std::size_t tokens) {
    CodeBlock block;
    block.block_id = id;
    block.file = fmt::format("mem/block{}", id);
    block.span = {1, static_cast<std::uint32_t>(std::max<std::size_t>(1, texts.size()))};
    for (const auto& t : texts) block.lines.push_back({t, hash64(t)});
    block.token_count = tokens;
    return block;
}

CodeBlock random_block(Rng& rng, std::uint32_t id, std::size_t lines, std::size_t alphabet) {
    std::vector<std::string> texts;
    for (std::size_t i = 0; i < lines; ++i) texts.push_back(fmt::format("l{};", uniform(rng, 0, alphabet - 1)));
    return block_from_texts(id, texts);
}

std::vector<std::uint64_t> random_hashes(Rng& rng, std::size_t lines, std::size_t alphabet) {
    std::vector<std::uint64_t> out;
    for (std::size_t i = 0; i < lines; ++i) out.push_back(uniform(rng, 0, alphabet - 1));
    return out;
}

TempDir::TempDir() {
    std::random_device rd;
    const auto base = std::filesystem::temp_directory_path();
    for (int attempt = 0; attempt < 16; ++attempt) {
        auto candidate = base / fmt::format("lvmap-test-{:016x}", (std::uint64_t{rd()} << 32) | rd());
        if (std::filesystem::create_directory(candidate)) {
            path_ = std::move(candidate);
            return;
        }
    }
    throw std::runtime_error("cannot create temp dir");
}

TempDir::~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
}

void write_files(const std::filesystem::path& root, const std::vector<SourceFile>& files) {
    for (const auto& f : files) {
        const auto target = root / f.path;
        std::filesystem::create_directories(target.parent_path());
        std::ofstream out(target, std::ios::binary);
        out << f.text;
    }
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace lvmap::testing
