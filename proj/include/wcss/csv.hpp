#pragma once

#include <charconv>
#include <filesystem>
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

#include "wcss/heatmap.hpp"
#include "wcss/mc_engine.hpp"

namespace wcss {

// Shortest decimal form that parses back to the identical double ('.' decimal
// separator by construction, locale-independent).
inline std::string csv_number(double v) {
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
}

inline std::string roc_csv(const RocCurve& curve) {
    std::string out = "tau,pf,pf_ci,pd,pd_ci\n";
    for (const RocPoint& p : curve.points) {
        out += csv_number(p.tau) + "," + csv_number(p.pf) + "," + csv_number(p.pf_ci) +
               "," + csv_number(p.pd) + "," + csv_number(p.pd_ci) + "\n";
    }
    return out;
}

// key=value sidecar describing how a data file was produced.
inline std::string meta_text(const RocMeta& meta) {
    std::string out;
    out += "detector=" + meta.detector + "\n";
    out += "weights=" + meta.weights + "\n";
    out += "source=" + meta.source + "\n";
    out += "seed=" + std::to_string(meta.seed) + "\n";
    out += "trials=" + std::to_string(meta.trials) + "\n";
    out += "digest=" + meta.digest + "\n";
    return out;
}

// Grid CSV: header row carries the x coordinates (corner cell empty), each
// body row starts with its y coordinate followed by the dB values.
inline std::string heatmap_csv(const Heatmap& hm) {
    std::string out;
    for (double x : hm.xs) out += "," + csv_number(x);
    out += "\n";
    for (std::size_t j = 0; j < hm.ys.size(); ++j) {
        out += csv_number(hm.ys[j]);
        for (std::size_t i = 0; i < hm.xs.size(); ++i)
            out += "," + csv_number(hm.at(j, i));
        out += "\n";
    }
    return out;
}

namespace csvdetail {

inline std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t p = s.find(sep, start);
        if (p == std::string_view::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, p - start));
        start = p + 1;
    }
}

inline double lint_field(std::string_view v, std::size_t line, bool allow_nan) {
    double out;
    const auto r = std::from_chars(v.data(), v.data() + v.size(), out);
    if (r.ec != std::errc{} || r.ptr != v.data() + v.size())
        throw parse_error("csv lint: line " + std::to_string(line) +
                          ": field '" + std::string(v) + "' is not a number");
    if (!allow_nan && !std::isfinite(out))
        throw parse_error("csv lint: line " + std::to_string(line) +
                          ": non-finite value '" + std::string(v) + "'");
    return out;
}

} // namespace csvdetail

// Structural validation of an operating-curve CSV: exact header, five numeric
// fields per row, probabilities inside [0,1], nonnegative radii and
// thresholds, rates nondecreasing down the file, trailing newline.
inline void lint_roc_csv(const std::string& text) {
    using namespace csvdetail;
    if (text.empty() || text.back() != '\n')
        throw parse_error("csv lint: missing trailing newline");
    const std::vector<std::string_view> lines = split(std::string_view(text), '\n');
    // split() yields one empty trailer after the final newline.
    if (lines.size() < 2 || lines[0] != "tau,pf,pf_ci,pd,pd_ci")
        throw parse_error("csv lint: bad or missing header row");
    double prev_pf = -1.0, prev_pd = -1.0;
    for (std::size_t i = 1; i + 1 < lines.size(); ++i) {
        const std::vector<std::string_view> f = split(lines[i], ',');
        if (f.size() != 5)
            throw parse_error("csv lint: line " + std::to_string(i + 1) +
                              ": expected 5 fields, got " + std::to_string(f.size()));
        const double tau = lint_field(f[0], i + 1, false);
        const double pf = lint_field(f[1], i + 1, false);
        const double pf_ci = lint_field(f[2], i + 1, false);
        const double pd = lint_field(f[3], i + 1, false);
        const double pd_ci = lint_field(f[4], i + 1, false);
        if (!(tau >= 0.0) || !(pf_ci >= 0.0) || !(pd_ci >= 0.0))
            throw parse_error("csv lint: line " + std::to_string(i + 1) +
                              ": negative threshold or radius");
        if (pf < 0.0 || pf > 1.0 || pd < 0.0 || pd > 1.0)
            throw parse_error("csv lint: line " + std::to_string(i + 1) +
                              ": probability outside [0, 1]");
        if (pf < prev_pf || pd < prev_pd)
            throw parse_error("csv lint: line " + std::to_string(i + 1) +
                              ": rates must be nondecreasing");
        prev_pf = pf;
        prev_pd = pd;
    }
}

// Structural validation of a grid CSV: empty corner, strictly increasing
// axes, full rows, numeric body (NaN allowed for singular cells).
inline void lint_heatmap_csv(const std::string& text) {
    using namespace csvdetail;
    if (text.empty() || text.back() != '\n')
        throw parse_error("csv lint: missing trailing newline");
    const std::vector<std::string_view> lines = split(std::string_view(text), '\n');
    if (lines.size() < 3)
        throw parse_error("csv lint: grid needs a header and at least one row");
    const std::vector<std::string_view> head = split(lines[0], ',');
    if (head.size() < 3 || !head[0].empty())
        throw parse_error("csv lint: grid header must start with an empty corner cell");
    double prev = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < head.size(); ++i) {
        const double x = lint_field(head[i], 1, false);
        if (!(x > prev))
            throw parse_error("csv lint: x coordinates must be strictly increasing");
        prev = x;
    }
    double prev_y = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i + 1 < lines.size(); ++i) {
        const std::vector<std::string_view> f = split(lines[i], ',');
        if (f.size() != head.size())
            throw parse_error("csv lint: line " + std::to_string(i + 1) +
                              ": expected " + std::to_string(head.size()) +
                              " fields, got " + std::to_string(f.size()));
        const double y = lint_field(f[0], i + 1, false);
        if (!(y > prev_y))
            throw parse_error("csv lint: y coordinates must be strictly increasing");
        prev_y = y;
        for (std::size_t j = 1; j < f.size(); ++j) lint_field(f[j], i + 1, true);
    }
}

inline void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open for writing: " + path.string());
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    out.flush();
    if (!out)
        throw std::runtime_error("write failed: " + path.string());
}

// Lints, then writes the curve plus its `.meta` sidecar.
inline void write_roc_files(const std::filesystem::path& csv_path, const RocCurve& curve) {
    const std::string body = roc_csv(curve);
    lint_roc_csv(body);
    write_text_file(csv_path, body);
    write_text_file(csv_path.string() + ".meta", meta_text(curve.meta));
}

inline void write_heatmap_files(const std::filesystem::path& csv_path, const Heatmap& hm,
                                const RocMeta& meta) {
    const std::string body = heatmap_csv(hm);
    lint_heatmap_csv(body);
    write_text_file(csv_path, body);
    write_text_file(csv_path.string() + ".meta", meta_text(meta));
}

} // namespace wcss
