#include "lvmap/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

#include "lvmap/corpus.hpp"
#include "lvmap/report.hpp"
#include "lvmap/seed_index.hpp"
#include "lvmap/synth.hpp"

namespace lvmap::cli {

namespace {

void write_output(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content << std::flush;
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
    if (!out) throw std::runtime_error("error writing " + path);
}

std::string default_out(OutputFormat format) {
    switch (format) {
        case OutputFormat::Summary:
            return "summary.tsv";
        case OutputFormat::BlocksTsv:
            return "blocks.tsv";
        default:
            return "clones.csv";
    }
}

LoadOptions load_options(const Config& config) {
    LoadOptions load;
    load.language = config.language;
    load.normalize = config.normalize;
    load.threads = config.threads;
    return load;
}

std::string gnuplot_script(const std::string& tsv_path) {
    return fmt::format(
        "set terminal pngcairo size 800,500\n"
        "set output 'recall_curve.png'\n"
        "set xlabel 'inserted lines'\n"
        "set ylabel 'recall'\n"
        "set yrange [0:1.05]\n"
        "set grid\n"
        "plot '{}' using 1:4 every ::1 with linespoints title 'recall'\n",
        tsv_path);
}

}  // namespace

void init_logging() {
    static const bool once = [] {
        auto logger = spdlog::stderr_logger_mt("lvmap");
        logger->set_pattern("[%l] %v");
        spdlog::set_default_logger(logger);
        return true;
    }();
    (void)once;

    static const std::map<std::string, spdlog::level::level_enum> levels = {
        {"error", spdlog::level::err},
        {"warn", spdlog::level::warn},
        {"info", spdlog::level::info},
        {"debug", spdlog::level::debug},
    };
    spdlog::level::level_enum level = spdlog::level::info;
    if (const char* env = std::getenv("LVMAP_LOG")) {
        const auto it = levels.find(env);
        if (it != levels.end()) level = it->second;
    }
    spdlog::set_level(level);
}

int cmd_detect(const Config& config) {
    Corpus corpus;
    try {
        corpus = load_corpus(config.inputs, load_options(config));
    } catch (const std::exception& e) {
        spdlog::error("{}", e.what());
        return kExitUsage;
    }
    const Thresholds& t = config.thresholds;
    std::size_t eligible = 0;
    for (const auto& b : corpus.blocks) eligible += is_eligible(b, t.min_lines, t.min_tokens) ? 1 : 0;
    spdlog::info("{} files, {} blocks, {} eligible", corpus.files.size(), corpus.blocks.size(), eligible);
    if (corpus.files.empty()) spdlog::warn("no supported source files found");

    std::vector<ClonePair> scored;
    if (config.format != OutputFormat::BlocksTsv) {
        if (eligible == 0) spdlog::warn("no eligible blocks; report is empty");
        const SeedIndex index = SeedIndex::build(corpus.blocks, t.k, t.min_lines, t.min_tokens, config.threads);
        const auto stats = index.stats();
        spdlog::info("index: {} distinct seeds, {} postings, longest posting list {}", stats.distinct_seeds,
                     stats.total_postings, stats.max_posting);
        DetectOptions opts;
        opts.threads = config.threads;
        const auto verified = detect_all(corpus.blocks, index, t, opts);
        scored.reserve(verified.size());
        for (const auto& v : verified) scored.push_back(score_pair(v, corpus.blocks, config.shared_lines));
    }

    const Summary summary = summarize(scored);
    spdlog::info("pairs: {} (type-1&2 {}, type-3 {}, large-variance {} = {:.1f}%)", summary.all, summary.type12,
                 summary.type3, summary.large_variance, 100.0 * summary.lv_ratio());

    std::string content;
    switch (config.format) {
        case OutputFormat::Pairs:
            content = format_pairs_csv(scored, corpus.blocks);
            break;
        case OutputFormat::PairsExt:
            content = format_pairs_ext_csv(scored, corpus.blocks);
            break;
        case OutputFormat::Summary:
            content = format_summary_tsv(summary);
            break;
        case OutputFormat::BlocksTsv:
            content = format_blocks_tsv(corpus.blocks);
            break;
    }
    try {
        write_output(config.out.empty() ? default_out(config.format) : config.out, content);
        if (!config.summary_out.empty()) write_output(config.summary_out, format_summary_tsv(summary));
    } catch (const std::exception& e) {
        spdlog::error("{}", e.what());
        return kExitUsage;
    }
    return kExitOk;
}

int cmd_synth(const Config& config) {
    Corpus corpus;
    try {
        corpus = load_corpus(config.inputs, load_options(config));
    } catch (const std::exception& e) {
        spdlog::error("{}", e.what());
        return kExitUsage;
    }
    ExperimentConfig exp;
    exp.n_min = config.insert_min;
    exp.n_max = config.insert_max;
    exp.cases_per_point = config.cases;
    exp.originals = config.originals;
    exp.seed = config.seed;
    exp.thresholds = config.thresholds;
    exp.normalize = config.normalize;
    exp.detect.threads = config.threads;
    exp.pooled = config.pooled;
    exp.order = config.pair_order;

    const auto results = run_recall_experiment(corpus, exp);
    for (const auto& r : results) {
        spdlog::info("n_insert={:2} recall={:.3f} ({}/{})", r.n_insert, r.recall, r.n_detected, r.n_cases);
    }
    const std::string out = config.out.empty() ? "recall_curve.tsv" : config.out;
    try {
        write_output(out, format_recall_tsv(results, config.seed));
        if (!config.plot_script.empty()) write_output(config.plot_script, gnuplot_script(out));
    } catch (const std::exception& e) {
        spdlog::error("{}", e.what());
        return kExitUsage;
    }
    return kExitOk;
}

int run(int argc, char** argv) {
    init_logging();

    CLI::App app{"Large-variance code clone detector for Java and C"};
    app.require_subcommand(1);

    Config config;
    config.threads = std::max(1u, std::thread::hardware_concurrency());
    std::string lang = "auto";
    std::string format = "pairs";
    std::string shared = "ordered";
    std::string insert_range = "1..20";
    std::string pair_order = "random";

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("inputs", config.inputs, "Source files or directories")->required();
        cmd->add_option("--lang", lang, "Source language")->check(CLI::IsMember({"auto", "java", "c"}));
        cmd->add_option("--k", config.thresholds.k, "Seed window size in lines")->check(CLI::Range(2, 64));
        cmd->add_option("--min-lines", config.thresholds.min_lines, "Minimum block size in pretty-printed lines")
            ->check(CLI::Range(6, 1 << 30));
        cmd->add_option("--min-tokens", config.thresholds.min_tokens, "Minimum block size in tokens");
        cmd->add_option("--theta-cap", config.thresholds.theta_cap, "Filter threshold for blocks over 10 lines")
            ->check(CLI::Range(0.0, 1.0));
        cmd->add_option("--delta-floor", config.thresholds.delta_floor, "Verify threshold for blocks over 20 lines")
            ->check(CLI::Range(0.0, 1.0));
        cmd->add_flag("--abstract-literals", config.normalize.abstract_literals, "Abstract literal values too");
        cmd->add_option("--threads", config.threads, "Worker threads")->check(CLI::Range(1, 1024));
        cmd->add_option("--seed", config.seed, "Random seed");
        cmd->add_option("--out", config.out, "Output path ('-' for stdout)");
    };

    CLI::App* detect = app.add_subcommand("detect", "Detect clone pairs");
    add_common(detect);
    detect->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"pairs", "pairs-ext", "summary", "blocks-tsv"}));
    detect->add_option("--summary", config.summary_out, "Also write the summary TSV here");
    detect->add_option("--shared-lines", shared, "Shared-line measure for similarity scores")
        ->check(CLI::IsMember({"ordered", "unordered"}));

    CLI::App* synth = app.add_subcommand("synth", "Run the scattered-insertion recall experiment");
    add_common(synth);
    synth->add_option("--insert-range", insert_range, "Insert counts, as MIN..MAX");
    synth->add_option("--cases", config.cases, "Cases per insert count")->check(CLI::Range(1, 1 << 20));
    synth->add_option("--originals", config.originals, "Original functions to sample")->check(CLI::Range(1, 1 << 20));
    synth->add_flag("--pooled", config.pooled, "Detect all pairs of one insert count in one corpus");
    synth->add_option("--pair-order", pair_order, "Which block of each pair is numbered first")
        ->check(CLI::IsMember({"random", "original-first", "mutant-first"}));
    synth->add_option("--plot-script", config.plot_script, "Write a gnuplot script for the TSV here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (lang != "auto") config.language = parse_language(lang);
    if (format == "pairs-ext") config.format = OutputFormat::PairsExt;
    if (format == "summary") config.format = OutputFormat::Summary;
    if (format == "blocks-tsv") config.format = OutputFormat::BlocksTsv;
    if (pair_order == "original-first") config.pair_order = PairOrder::OriginalFirst;
    if (pair_order == "mutant-first") config.pair_order = PairOrder::MutantFirst;
    config.shared_lines = shared == "unordered" ? SharedLines::Unordered : SharedLines::Ordered;
    if (config.thresholds.k > config.thresholds.min_lines) {
        spdlog::error("--k must not exceed --min-lines");
        return kExitUsage;
    }

    if (*synth) {
        const auto sep = insert_range.find("..");
        try {
            if (sep == std::string::npos) throw std::invalid_argument(insert_range);
            config.insert_min = std::stoul(insert_range.substr(0, sep));
            config.insert_max = std::stoul(insert_range.substr(sep + 2));
        } catch (const std::exception&) {
            spdlog::error("--insert-range expects MIN..MAX, got '{}'", insert_range);
            return kExitUsage;
        }
        if (config.insert_min < 1 || config.insert_max < config.insert_min) {
            spdlog::error("--insert-range must satisfy 1 <= MIN <= MAX");
            return kExitUsage;
        }
        spdlog::info("seed {}", config.seed);
        return cmd_synth(config);
    }
    return cmd_detect(config);
}

}  // namespace lvmap::cli
