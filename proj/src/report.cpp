#include "lvmap/report.hpp"

#include <algorithm>

#include <fmt/format.h>

namespace lvmap {

namespace {

std::string span_columns(const CodeBlock& block) {
    const auto [dir, file] = split_csv_path(block.file);
    return fmt::format("{},{},{},{}", dir, file, block.span.start_line, block.span.end_line);
}

std::string flag_list(const CloneFlags& f) {
    std::string out;
    auto add = [&](bool on, std::string_view name) {
        if (!on) return;
        if (!out.empty()) out += '+';
        out += name;
    };
    add(f.type12, "type12");
    add(f.type3, "type3");
    add(f.large_variance, "lv");
    add(f.large_gap, "gap");
    return out.empty() ? "none" : out;
}

}  // namespace

std::pair<std::string, std::string> split_csv_path(const std::string& path) {
    std::string clean = path;
    std::replace(clean.begin(), clean.end(), ',', '_');
    const auto slash = clean.rfind('/');
    if (slash == std::string::npos) return {".", clean};
    return {slash == 0 ? "/" : clean.substr(0, slash), clean.substr(slash + 1)};
}

std::string format_pairs_csv(std::span<const ClonePair> pairs, std::span<const CodeBlock> blocks) {
    std::string out;
    for (const auto& p : pairs) {
        out += span_columns(blocks[p.block_a]);
        out += ',';
        out += span_columns(blocks[p.block_b]);
        out += '\n';
    }
    return out;
}

std::string format_pairs_ext_csv(std::span<const ClonePair> pairs, std::span<const CodeBlock> blocks) {
    std::string out;
    for (const auto& p : pairs) {
        out += fmt::format("{},{},{},{:.4f},{:.4f},{}\n", span_columns(blocks[p.block_a]), span_columns(blocks[p.block_b]),
                           p.shared_lines, p.ordered_similarity, p.sim_harmonic, flag_list(p.flags));
    }
    return out;
}

std::string format_summary_tsv(const Summary& s) {
    return fmt::format("type12\ttype3\tall\tlv\tlv_ratio\tlarge_gap\n{}\t{}\t{}\t{}\t{:.4f}\t{}\n", s.type12, s.type3,
                       s.all, s.large_variance, s.lv_ratio(), s.large_gap);
}

std::string format_blocks_tsv(std::span<const CodeBlock> blocks) {
    std::string out = "block_id\tpath\tstart_line\tend_line\tn_lines\tn_tokens\n";
    for (const auto& b : blocks) {
        out += fmt::format("{}\t{}\t{}\t{}\t{}\t{}\n", b.block_id, b.file, b.span.start_line, b.span.end_line,
                           b.lines.size(), b.token_count);
    }
    return out;
}

}  // namespace lvmap
