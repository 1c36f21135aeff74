#include "lvmap/synth.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <unordered_map>

#include <fmt/format.h>
#include <spdlog/spdlog.h>

#include "lvmap/parallel.hpp"
#include "lvmap/seed_index.hpp"

namespace lvmap {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        const std::size_t nl = text.find('\n', start);
        if (nl == std::string_view::npos) {
            lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    return lines;
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\f\v");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\f\v");
    return s.substr(first, last - first + 1);
}

std::string_view indentation(std::string_view line) {
    const auto first = line.find_first_not_of(" \t");
    return first == std::string_view::npos ? line : line.substr(0, first);
}

bool is_single_statement(std::string_view line, Language lang) {
    if (line.empty() || line.find("//") != std::string_view::npos || line.find("/*") != std::string_view::npos ||
        line.find("*/") != std::string_view::npos) {
        return false;
    }
    const auto tokens = lex(line, lang);
    if (tokens.size() < 2) return false;
    const Token& first = tokens.front();
    if (first.kind != TokenKind::Identifier && first.kind != TokenKind::Keyword) return false;
    static constexpr std::string_view kControl[] = {"return", "break",  "continue", "throw", "case",
                                                    "default", "goto",  "if",       "else",  "for",
                                                    "while",  "do",    "switch",   "try",   "catch",
                                                    "finally", "class", "interface", "enum", "typedef"};
    if (first.kind == TokenKind::Keyword &&
        std::find(std::begin(kControl), std::end(kControl), first.text) != std::end(kControl)) {
        return false;
    }
    int parens = 0;
    std::size_t semis = 0;
    for (const Token& t : tokens) {
        if (t.kind == TokenKind::String || t.kind == TokenKind::Char) {
            // unterminated literal
            if (t.text.size() < 2 || t.text.back() != t.text.front()) return false;
        }
        if (t.kind != TokenKind::Punct) continue;
        if (t.text == "{" || t.text == "}") return false;
        if (t.text == "(") ++parens;
        if (t.text == ")" && --parens < 0) return false;
        if (t.text == ";") ++semis;
    }
    return parens == 0 && semis == 1 && tokens.back().text == ";";
}

std::string_view extension_for(Language lang) { return lang == Language::Java ? ".java" : ".c"; }

std::uint64_t case_seed(std::uint64_t seed, std::size_t n, std::size_t c) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(c)};
    std::array<std::uint32_t, 2> words{};
    seq.generate(words.begin(), words.end());
    return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

struct Original {
    std::uint32_t block_id;
    Language language;
    std::string text;
};

// Detection over (original, mutant) pairs given as consecutive file pairs.
// Returns, per pair, whether the detector reported it.
std::vector<bool> detect_pairs(const std::vector<std::pair<SourceFile, SourceFile>>& pairs, const ExperimentConfig& cfg,
                               unsigned threads, std::vector<bool>& valid) {
    std::vector<SourceFile> files;
    files.reserve(pairs.size() * 2);
    for (const auto& [orig, mut] : pairs) {
        files.push_back(orig);
        files.push_back(mut);
    }
    LoadOptions load;
    load.normalize = cfg.normalize;
    load.threads = threads;
    Corpus corpus = build_corpus(std::move(files), load);

    // block ids of each file's single block
    std::unordered_map<std::string, std::vector<std::uint32_t>> by_file;
    for (const auto& b : corpus.blocks) by_file[b.file].push_back(b.block_id);

    const SeedIndex index =
        SeedIndex::build(corpus.blocks, cfg.thresholds.k, cfg.thresholds.min_lines, cfg.thresholds.min_tokens, threads);
    DetectOptions det = cfg.detect;
    det.threads = threads;
    const auto found = detect_all(corpus.blocks, index, cfg.thresholds, det);

    std::vector<bool> detected(pairs.size(), false);
    valid.assign(pairs.size(), false);
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::size_t> wanted;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& a = by_file[pairs[i].first.path];
        const auto& b = by_file[pairs[i].second.path];
        if (a.size() != 1 || b.size() != 1) continue;
        if (!is_eligible(corpus.blocks[a[0]], cfg.thresholds.min_lines, cfg.thresholds.min_tokens) ||
            !is_eligible(corpus.blocks[b[0]], cfg.thresholds.min_lines, cfg.thresholds.min_tokens)) {
            continue;
        }
        valid[i] = true;
        wanted[{std::min(a[0], b[0]), std::max(a[0], b[0])}] = i;
    }
    for (const auto& p : found) {
        const auto it = wanted.find({p.block_a, p.block_b});
        if (it != wanted.end()) detected[it->second] = true;
    }
    return detected;
}

}  // namespace

std::string block_source(const SourceFile& file, const CodeBlock& block) {
    const auto lines = split_lines(file.text);
    std::string out;
    for (std::size_t i = block.span.start_line; i <= block.span.end_line && i <= lines.size(); ++i) {
        std::string_view line = lines[i - 1];
        if (i == block.span.start_line) {
            // The declaration may share its first line with the end of the
            // previous statement; blank out everything up to the last
            // separator before the parameter list.
            const auto tokens = lex(line, file.language);
            std::size_t cut = 0;
            for (const Token& t : tokens) {
                if (t.kind != TokenKind::Punct) continue;
                if (t.text == "(") break;
                if (t.text == ";" || t.text == "{" || t.text == "}") cut = t.offset + 1;
            }
            out.append(cut, ' ');
            line.remove_prefix(cut);
        }
        out += line;
        out += '\n';
    }
    return out;
}

std::vector<DonorLine> collect_donor_lines(const Corpus& corpus) {
    std::unordered_map<std::string_view, const SourceFile*> files;
    for (const auto& f : corpus.files) files.emplace(f.path, &f);

    std::vector<DonorLine> donors;
    std::string_view current_path;
    std::vector<std::string_view> lines;
    for (const auto& block : corpus.blocks) {
        const auto it = files.find(block.file);
        if (it == files.end()) continue;
        if (block.file != current_path) {
            current_path = block.file;
            lines = split_lines(it->second->text);
        }
        for (std::uint32_t ln = block.span.start_line + 1; ln < block.span.end_line && ln <= lines.size(); ++ln) {
            const std::string_view text = trim(lines[ln - 1]);
            if (is_single_statement(text, it->second->language)) {
                donors.push_back({std::string(text), block.block_id});
            }
        }
    }
    return donors;
}

std::vector<std::size_t> insertion_gaps(std::string_view block_text, Language lang) {
    const auto lines = split_lines(block_text);
    const auto tokens = lex(block_text, lang);
    const auto open = std::find_if(tokens.begin(), tokens.end(),
                                   [](const Token& t) { return t.kind == TokenKind::Punct && t.text == "{"; });
    if (open == tokens.end() || lines.size() < 2) return {};

    // last token on each 1-based line
    std::vector<const Token*> last(lines.size() + 2, nullptr);
    for (const Token& t : tokens) {
        if (t.line < last.size()) last[t.line] = &t;
    }
    std::vector<std::size_t> gaps;
    for (std::size_t line = open->line; line < lines.size(); ++line) {
        const Token* t = last[line];
        if (t == nullptr || t->kind != TokenKind::Punct) continue;
        if (t->text != ";" && t->text != "{" && t->text != "}") continue;
        // token spans to a later line, or a block comment stays open past the end of the line
        if (t->text.find('\n') != std::string_view::npos) continue;
        const std::size_t line_end = block_text.find('\n', t->offset);
        const std::string_view tail = block_text.substr(t->offset + 1, line_end - t->offset - 1);
        const auto open_comment = tail.rfind("/*");
        if (open_comment != std::string_view::npos) {
            const auto close_comment = tail.rfind("*/");
            if (close_comment == std::string_view::npos || close_comment < open_comment) continue;
        }
        gaps.push_back(line - 1);
    }
    return gaps;
}

std::optional<std::string> make_clone(std::string_view block_text, Language lang, std::span<const DonorLine> donors,
                                      std::size_t n_insert, std::uint32_t exclude_block, std::mt19937_64& rng) {
    if (n_insert == 0) return std::string(block_text);
    const auto gaps = insertion_gaps(block_text, lang);
    if (gaps.empty()) return std::nullopt;

    std::vector<std::size_t> usable;
    for (std::size_t i = 0; i < donors.size(); ++i) {
        if (donors[i].block_id != exclude_block) usable.push_back(i);
    }
    if (usable.empty()) return std::nullopt;

    // n distinct slots among (gaps + n - 1): slot c_i (sorted) lands in gap c_i - i.
    std::vector<std::size_t> slots(gaps.size() + n_insert - 1);
    for (std::size_t i = 0; i < slots.size(); ++i) slots[i] = i;
    std::vector<std::size_t> chosen;
    chosen.reserve(n_insert);
    std::sample(slots.begin(), slots.end(), std::back_inserter(chosen), n_insert, rng);
    std::sort(chosen.begin(), chosen.end());

    std::vector<std::vector<std::size_t>> per_line;  // line index -> donor indices
    const auto lines = split_lines(block_text);
    per_line.resize(lines.size());
    std::uniform_int_distribution<std::size_t> pick(0, usable.size() - 1);
    for (std::size_t i = 0; i < chosen.size(); ++i) {
        per_line[gaps[chosen[i] - i]].push_back(usable[pick(rng)]);
    }

    std::string out;
    out.reserve(block_text.size() + n_insert * 48);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        out += lines[i];
        out += '\n';
        if (per_line[i].empty()) continue;
        const std::string_view indent = i + 1 < lines.size() ? indentation(lines[i + 1]) : indentation(lines[i]);
        for (const std::size_t d : per_line[i]) {
            out += indent;
            out += donors[d].text;
            out += '\n';
        }
    }
    return out;
}

std::vector<std::uint32_t> select_originals(const Corpus& corpus, const ExperimentConfig& cfg) {
    const std::size_t nb = cfg.buckets.size();
    std::vector<std::vector<std::uint32_t>> buckets(nb);
    for (const auto& block : corpus.blocks) {
        if (!is_eligible(block, cfg.thresholds.min_lines, cfg.thresholds.min_tokens)) continue;
        const std::size_t len = block.lines.size();
        for (std::size_t i = 0; i < nb; ++i) {
            const auto& b = cfg.buckets[i];
            const bool last = i + 1 == nb;
            if (len >= b.min_lines && (len < b.max_lines || (last && len == b.max_lines))) {
                buckets[i].push_back(block.block_id);
                break;
            }
        }
    }
    std::mt19937_64 rng(cfg.seed);
    for (auto& b : buckets) std::shuffle(b.begin(), b.end(), rng);

    // Equal quotas; a short bucket's shortfall goes to the others in order.
    std::vector<std::size_t> take(nb, 0);
    std::size_t remaining = cfg.originals;
    for (bool progress = true; remaining > 0 && progress;) {
        progress = false;
        for (std::size_t i = 0; i < nb && remaining > 0; ++i) {
            if (take[i] < buckets[i].size()) {
                ++take[i];
                --remaining;
                progress = true;
            }
        }
    }
    std::vector<std::uint32_t> out;
    for (std::size_t i = 0; i < nb; ++i) out.insert(out.end(), buckets[i].begin(), buckets[i].begin() + take[i]);
    if (out.size() < cfg.originals) {
        spdlog::warn("only {} eligible originals in the size buckets (wanted {})", out.size(), cfg.originals);
    }
    return out;
}

std::vector<TrialResult> run_recall_experiment(const Corpus& corpus, const ExperimentConfig& cfg) {
    std::vector<TrialResult> results;
    if (cfg.n_max < cfg.n_min) return results;

    const auto donors = collect_donor_lines(corpus);
    const auto ids = select_originals(corpus, cfg);
    if (ids.empty() || cfg.cases_per_point == 0) {
        spdlog::warn("no cases to run");
        for (std::size_t n = cfg.n_min; n <= cfg.n_max; ++n) results.push_back({n, 0, 0, 0.0});
        return results;
    }

    std::unordered_map<std::string_view, const SourceFile*> files;
    for (const auto& f : corpus.files) files.emplace(f.path, &f);
    std::vector<Original> originals;
    originals.reserve(ids.size());
    for (const auto id : ids) {
        const CodeBlock& block = corpus.blocks[id];
        const SourceFile& file = *files.at(block.file);
        originals.push_back({id, file.language, block_source(file, block)});
    }

    const std::size_t points = cfg.n_max - cfg.n_min + 1;
    const std::size_t cases = cfg.cases_per_point;
    // -1: skipped, 0: missed, 1: detected
    std::vector<int> outcome(points * cases, -1);

    auto make_pair_files = [&](std::size_t n, std::size_t c) -> std::optional<std::pair<SourceFile, SourceFile>> {
        const Original& orig = originals[c % originals.size()];
        std::mt19937_64 rng(case_seed(cfg.seed, n, c));
        auto mutant = make_clone(orig.text, orig.language, donors, n, orig.block_id, rng);
        if (!mutant) return std::nullopt;
        bool original_first = cfg.order != PairOrder::MutantFirst;
        if (cfg.order == PairOrder::Random) original_first = (rng() & 1) == 0;
        // blocks are numbered in path order
        const std::string dir = fmt::format("n{:02}/case{:04}/", n, c);
        const std::string ext(extension_for(orig.language));
        const std::string orig_name = original_first ? "a_original" : "b_original";
        const std::string mut_name = original_first ? "b_mutant" : "a_mutant";
        return std::make_pair(SourceFile{dir + orig_name + ext, orig.language, orig.text},
                              SourceFile{dir + mut_name + ext, orig.language, std::move(*mutant)});
    };

    if (!cfg.pooled) {
        parallel_for(
            points * cases, cfg.detect.threads,
            [&](std::size_t task, unsigned) {
                const std::size_t n = cfg.n_min + task / cases;
                const std::size_t c = task % cases;
                auto files_pair = make_pair_files(n, c);
                if (!files_pair) return;
                std::vector<bool> valid;
                const auto detected = detect_pairs({std::move(*files_pair)}, cfg, 1, valid);
                if (valid[0]) outcome[task] = detected[0] ? 1 : 0;
            },
            1);
    } else {
        for (std::size_t p = 0; p < points; ++p) {
            const std::size_t n = cfg.n_min + p;
            std::vector<std::optional<std::pair<SourceFile, SourceFile>>> made(cases);
            parallel_for(cases, cfg.detect.threads, [&](std::size_t c, unsigned) { made[c] = make_pair_files(n, c); });
            std::vector<std::pair<SourceFile, SourceFile>> pairs;
            std::vector<std::size_t> case_of;
            for (std::size_t c = 0; c < cases; ++c) {
                if (!made[c]) continue;
                pairs.push_back(std::move(*made[c]));
                case_of.push_back(c);
            }
            std::vector<bool> valid;
            const auto detected = detect_pairs(pairs, cfg, cfg.detect.threads, valid);
            for (std::size_t i = 0; i < pairs.size(); ++i) {
                if (valid[i]) outcome[p * cases + case_of[i]] = detected[i] ? 1 : 0;
            }
        }
    }

    for (std::size_t p = 0; p < points; ++p) {
        TrialResult r;
        r.n_insert = cfg.n_min + p;
        for (std::size_t c = 0; c < cases; ++c) {
            const int o = outcome[p * cases + c];
            if (o < 0) continue;
            ++r.n_cases;
            if (o == 1) ++r.n_detected;
        }
        r.recall = r.n_cases == 0 ? 0.0 : static_cast<double>(r.n_detected) / static_cast<double>(r.n_cases);
        if (r.n_cases < cases) spdlog::info("n_insert={}: {} of {} cases skipped", r.n_insert, cases - r.n_cases, cases);
        results.push_back(r);
    }
    return results;
}

std::string format_recall_tsv(std::span<const TrialResult> results, std::uint64_t seed) {
    std::string out = fmt::format("# seed={}\nn_insert\tn_cases\tn_detected\trecall\n", seed);
    for (const auto& r : results) {
        out += fmt::format("{}\t{}\t{}\t{:.4f}\n", r.n_insert, r.n_cases, r.n_detected, r.recall);
    }
    return out;
}

}  // namespace lvmap
