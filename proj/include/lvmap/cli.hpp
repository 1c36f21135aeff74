#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "lvmap/detect.hpp"
#include "lvmap/lexer.hpp"
#include "lvmap/metrics.hpp"
#include "lvmap/normalize.hpp"
#include "lvmap/synth.hpp"

namespace lvmap::cli {

enum class OutputFormat { Pairs, PairsExt, Summary, BlocksTsv };

struct Config {
    std::vector<std::filesystem::path> inputs;
    std::optional<Language> language;  // nullopt: by extension
    Thresholds thresholds;
    NormalizeOptions normalize;
    SharedLines shared_lines = SharedLines::Ordered;
    OutputFormat format = OutputFormat::Pairs;
    std::string out;          // empty: default name for the command/format; "-": stdout
    std::string summary_out;  // optional extra summary file for detect
    unsigned threads = 1;
    std::uint64_t seed = 0;

    // synth
    std::size_t insert_min = 1;
    std::size_t insert_max = 20;
    std::size_t cases = 200;
    std::size_t originals = 200;
    bool pooled = false;
    PairOrder pair_order = PairOrder::Random;
    std::string plot_script;  // optional gnuplot script path
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;

/// Sets the stderr log level from LVMAP_LOG (error, warn, info, debug).
void init_logging();

int cmd_detect(const Config& config);
int cmd_synth(const Config& config);

/// Parses `lvmap <detect|synth> ...` and dispatches.
int run(int argc, char** argv);

}  // namespace lvmap::cli
