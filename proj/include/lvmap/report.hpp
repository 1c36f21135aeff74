#pragma once

#include <span>
#include <string>

#include "lvmap/metrics.hpp"
#include "lvmap/normalize.hpp"

namespace lvmap {

/// Benchmark-evaluator pair format, one clone per line:
/// `dir,file,start,end,dir,file,start,end` with 1-based inclusive spans.
std::string format_pairs_csv(std::span<const ClonePair> pairs, std::span<const CodeBlock> blocks);

/// Same columns plus comm_lines, os, sim_harmonic and a `+`-joined flag list.
std::string format_pairs_ext_csv(std::span<const ClonePair> pairs, std::span<const CodeBlock> blocks);

/// Two-line TSV: header and the counts (Type-1&2, Type-3, All, LV, LV/All, large-gap).
std::string format_summary_tsv(const Summary& summary);

/// blocks.tsv debug dump with a header row.
std::string format_blocks_tsv(std::span<const CodeBlock> blocks);

/// Splits a display path into (dir, file) for the pair CSV; dir is "." for a
/// bare file name. Commas are replaced with '_'.
std::pair<std::string, std::string> split_csv_path(const std::string& path);

}  // namespace lvmap
