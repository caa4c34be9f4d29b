#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "wcss/mc_engine.hpp"
#include "wcss/scenario.hpp"

namespace wcss {

// A licensed transmitter location; the array steers one beam at each.
struct PrimarySource {
    Point3 pos;
    double a = 1.0; // per-beam excitation weight
    bool operator==(const PrimarySource&) const = default;
};

// Ground-plane window for signal-strength maps.
struct HeatmapWindow {
    double x0 = -500.0, x1 = 500.0;
    double y0 = -500.0, y1 = 500.0;
    double z = 0.0;
    int nx = 201, ny = 201;
    bool operator==(const HeatmapWindow&) const = default;
};

// Complete experiment description.  `scenario.beams` is derived from `pus`;
// use refresh_beams() after editing positions, origin or boresight.
struct ExperimentConfig {
    Scenario scenario;
    std::vector<PrimarySource> pus;
    bool weights_use_fading = true;
    HeatmapWindow heatmap;
    MobilityPlan mobility;
    bool operator==(const ExperimentConfig&) const = default;
};

inline void refresh_beams(ExperimentConfig& cfg) {
    const ArrayFrame frame = ArrayFrame::from_boresight(cfg.scenario.boresight);
    cfg.scenario.beams.clear();
    for (const PrimarySource& pu : cfg.pus) {
        const Direction d = angles_in_frame(frame, cfg.scenario.array_origin, pu.pos);
        cfg.scenario.beams.push_back({d.theta, d.phi, pu.a});
    }
}

// Default world: 8x8 half-wave array 60 m up looking straight down, five
// transmitter beams, and ten vehicle-mounted sensors on two straight roads.
// Eight form a sensitivity ladder driving away on one road; on the other,
// one closes in on the covered area while the best-placed one leaves it, so
// weight staleness has a visible cost.
inline ExperimentConfig default_experiment_config() {
    ExperimentConfig cfg;
    Scenario& sc = cfg.scenario;
    const double half_wave = 0.028826197884615386; // c / (2 * 5.2 GHz)
    sc.geometry = {8, 8, half_wave, half_wave, {}};
    sc.radio.p = 0.4988844874600122; // 26.98 dBm
    sc.radio.g = 3.1622776601683795; // 5 dB
    sc.radio.fc = 5.2e9;
    sc.radio.sigma_n2 = 1e-9; // -60 dBm
    sc.radio.sigma_s2 = 1.0;
    sc.radio.k = 100;
    cfg.pus = {{{90.0, 150.0, 0.0}, 1.0},
               {{-160.0, 80.0, 0.0}, 1.0},
               {{-70.0, -180.0, 0.0}, 1.0},
               {{140.0, -90.0, 0.0}, 1.0},
               {{220.0, 60.0, 0.0}, 1.0}};
    sc.sus = {
        {{{3216.3555822313451, 2777.1672201452438, 0.0},
          {3752.5866924146299, 3227.1185469258216, 0.0}}, 10.0},
        {{{3067.7429602662633, 2652.4664238660553, 0.0},
          {3603.974070449548, 3102.4177506466331, 0.0}}, 10.0},
        {{{2929.8549605048474, 2536.7646541224785, 0.0},
          {3466.0860706881322, 2986.7159809030559, 0.0}}, 10.0},
        {{{2803.4576273902162, 2430.7046985241996, 0.0},
          {3339.6887375735005, 2880.6560253047769, 0.0}}, 10.0},
        {{{2687.7849164792506, 2333.643769461532, 0.0},
          {3224.0160266625348, 2783.5950962421093, 0.0}}, 10.0},
        {{{2574.4103388976414, 2238.5112032279239, 0.0},
          {3110.6414490809261, 2688.4625300085017, 0.0}}, 10.0},
        {{{2465.6320279747465, 2147.2353626524355, 0.0},
          {3001.8631381580312, 2597.1866894330133, 0.0}}, 10.0},
        {{{2363.7481170399228, 2061.7446105641257, 0.0},
          {2899.9792272232071, 2511.6959373447035, 0.0}}, 10.0},
        {{{-1071.8516916468557, 1184.0396746366964, 0.0},
          {-621.90036486627787, 647.80856445341192, 0.0}}, 10.0},
        {{{-738.88770982922813, 787.2286531010659, 0.0},
          {-1188.8390366098058, 1323.4597632843504, 0.0}}, 10.0},
    };
    refresh_beams(cfg);
    return cfg;
}

namespace cfgdetail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

[[noreturn]] inline void fail(int line, const std::string& key, const std::string& msg) {
    std::string where = line > 0 ? "config line " + std::to_string(line) : "config";
    throw parse_error(where + ": key '" + key + "': " + msg);
}

inline double to_double(std::string_view v, int line, const std::string& key) {
    double out;
    const char* end = v.data() + v.size();
    const auto r = std::from_chars(v.data(), end, out);
    if (r.ec != std::errc{} || r.ptr != end || !std::isfinite(out))
        fail(line, key, "expected a finite number, got '" + std::string(v) + "'");
    return out;
}

inline long long to_int(std::string_view v, int line, const std::string& key) {
    long long out;
    const char* end = v.data() + v.size();
    const auto r = std::from_chars(v.data(), end, out);
    if (r.ec != std::errc{} || r.ptr != end)
        fail(line, key, "expected an integer, got '" + std::string(v) + "'");
    return out;
}

inline std::uint64_t to_u64(std::string_view v, int line, const std::string& key) {
    std::uint64_t out;
    const char* end = v.data() + v.size();
    const auto r = std::from_chars(v.data(), end, out);
    if (r.ec != std::errc{} || r.ptr != end)
        fail(line, key, "expected an unsigned integer, got '" + std::string(v) + "'");
    return out;
}

inline bool to_bool(std::string_view v, int line, const std::string& key) {
    if (v == "true") return true;
    if (v == "false") return false;
    fail(line, key, "expected 'true' or 'false', got '" + std::string(v) + "'");
}

inline std::vector<double> to_doubles(std::string_view v, int line, const std::string& key) {
    std::vector<double> out;
    std::size_t i = 0;
    while (i < v.size()) {
        while (i < v.size() && (v[i] == ' ' || v[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < v.size() && v[j] != ' ' && v[j] != '\t') ++j;
        if (j > i) out.push_back(to_double(v.substr(i, j - i), line, key));
        i = j;
    }
    return out;
}

inline Point3 to_point(std::string_view v, int line, const std::string& key) {
    const std::vector<double> c = to_doubles(v, line, key);
    if (c.size() != 3)
        fail(line, key, "expected three coordinates 'x y z'");
    return {c[0], c[1], c[2]};
}

inline std::vector<Point3> to_points(std::string_view v, int line, const std::string& key) {
    std::vector<Point3> out;
    std::size_t start = 0;
    while (start <= v.size()) {
        const std::size_t semi = v.find(';', start);
        const std::string_view part =
            trim(v.substr(start, semi == std::string_view::npos ? v.size() - start
                                                                : semi - start));
        if (part.empty())
            fail(line, key, "empty waypoint in list");
        out.push_back(to_point(part, line, key));
        if (semi == std::string_view::npos) break;
        start = semi + 1;
    }
    return out;
}

// Most-square even-by-even factorization of a total element count.
inline void expand_total_elements(long long l, int line, const std::string& key,
                                  int& lx, int& ly) {
    if (l < 4)
        fail(line, key, "total element count must be at least 4");
    for (long long b = static_cast<long long>(std::sqrt(static_cast<double>(l))); b >= 2;
         --b) {
        if (l % b == 0 && b % 2 == 0 && (l / b) % 2 == 0) {
            lx = static_cast<int>(l / b);
            ly = static_cast<int>(b);
            return;
        }
    }
    fail(line, key, "no even-by-even factorization of " + std::to_string(l));
}

inline double dbm_to_watt(double dbm) { return std::pow(10.0, dbm / 10.0) * 1e-3; }
inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

// Shortest decimal form that parses back to the identical double.
inline std::string num(double v) {
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
}

inline std::string num(Point3 p) { return num(p.x) + " " + num(p.y) + " " + num(p.z); }

struct SlotTracker {
    std::map<std::string, int> seen; // canonical slot -> first line

    void claim(const std::string& slot, const std::string& key, int line) {
        const auto [it, fresh] = seen.emplace(slot, line);
        if (!fresh)
            fail(line, key,
                 "already set at line " + std::to_string(it->second));
    }
};

} // namespace cfgdetail

namespace cfgdetail {

// Core of the parser: folds `key = value` lines into an existing config.
// With `reject_duplicates` unset, later assignments win (override mode).
inline void apply_config_text(ExperimentConfig& cfg, const std::string& text,
                              bool reject_duplicates) {
    Scenario& sc = cfg.scenario;

    struct PuDraft {
        Point3 pos;
        double a = 1.0;
        bool has_pos = false;
        int line = 0;
    };
    struct SuDraft {
        std::vector<Point3> waypoints;
        double speed = 0.0;
        bool has_speed = false;
        int line = 0;
    };
    std::map<long long, PuDraft> pu_draft;
    std::map<long long, SuDraft> su_draft;
    bool saw_pu = false, saw_su = false;
    SlotTracker slots;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line(text.data() + pos,
                              (eol == std::string::npos ? text.size() : eol) - pos);
        pos = (eol == std::string::npos) ? text.size() + 1 : eol + 1;
        ++line_no;

        const std::size_t hash = line.find('#');
        if (hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos)
            throw parse_error("config line " + std::to_string(line_no) +
                              ": expected 'key = value'");
        std::string key(trim(line.substr(0, eq)));
        for (char& c : key)
            if (c >= 'A' && c <= 'Z') c += 'a' - 'A';
        const std::string_view value = trim(line.substr(eq + 1));
        if (key.empty())
            throw parse_error("config line " + std::to_string(line_no) + ": empty key");
        if (value.empty())
            fail(line_no, key, "empty value");

        const int n = line_no;
        auto claim = [&](const std::string& slot) {
            if (reject_duplicates) slots.claim(slot, key, n);
        };

        if (key == "seed") {
            claim(key);
            sc.seed = to_u64(value, n, key);
        } else if (key == "array.origin") {
            claim(key);
            sc.array_origin = to_point(value, n, key);
        } else if (key == "array.boresight") {
            claim(key);
            sc.boresight = to_point(value, n, key);
            if (!(norm(sc.boresight) > 0.0))
                fail(n, key, "boresight must be a nonzero vector");
        } else if (key == "array.l") {
            claim("array.lx");
            claim("array.ly");
            expand_total_elements(to_int(value, n, key), n, key, sc.geometry.lx,
                                  sc.geometry.ly);
        } else if (key == "array.lx") {
            claim(key);
            sc.geometry.lx = static_cast<int>(to_int(value, n, key));
        } else if (key == "array.ly") {
            claim(key);
            sc.geometry.ly = static_cast<int>(to_int(value, n, key));
        } else if (key == "array.dx") {
            claim(key);
            sc.geometry.dx = to_double(value, n, key);
        } else if (key == "array.dy") {
            claim(key);
            sc.geometry.dy = to_double(value, n, key);
        } else if (key == "array.excitation") {
            claim(key);
            sc.geometry.excitation = to_doubles(value, n, key);
        } else if (key == "radio.p_w") {
            claim("radio.p");
            sc.radio.p = to_double(value, n, key);
        } else if (key == "radio.p_dbm") {
            claim("radio.p");
            sc.radio.p = dbm_to_watt(to_double(value, n, key));
        } else if (key == "radio.g_lin") {
            claim("radio.g");
            sc.radio.g = to_double(value, n, key);
        } else if (key == "radio.g_db") {
            claim("radio.g");
            sc.radio.g = db_to_linear(to_double(value, n, key));
        } else if (key == "radio.fc_hz") {
            claim(key);
            sc.radio.fc = to_double(value, n, key);
        } else if (key == "radio.noise_w") {
            claim("radio.noise");
            sc.radio.sigma_n2 = to_double(value, n, key);
        } else if (key == "radio.noise_dbm") {
            claim("radio.noise");
            sc.radio.sigma_n2 = dbm_to_watt(to_double(value, n, key));
        } else if (key == "radio.sigma_s2") {
            claim(key);
            sc.radio.sigma_s2 = to_double(value, n, key);
        } else if (key == "radio.k") {
            claim(key);
            const long long k = to_int(value, n, key);
            if (k < 1)
                fail(n, key, "samples per window must be >= 1");
            sc.radio.k = static_cast<int>(k);
        } else if (key == "fading.model") {
            claim(key);
            if (value == "deterministic")
                sc.fading.model = FadingModel::deterministic;
            else if (value == "rician")
                sc.fading.model = FadingModel::rician;
            else
                fail(n, key, "expected 'deterministic' or 'rician'");
        } else if (key == "fading.rician_k") {
            claim(key);
            sc.fading.rician_k = to_double(value, n, key);
            if (sc.fading.rician_k < 0.0)
                fail(n, key, "factor must be >= 0");
        } else if (key == "weights.use_fading") {
            claim(key);
            cfg.weights_use_fading = to_bool(value, n, key);
        } else if (key == "heatmap.x0") {
            claim(key);
            cfg.heatmap.x0 = to_double(value, n, key);
        } else if (key == "heatmap.x1") {
            claim(key);
            cfg.heatmap.x1 = to_double(value, n, key);
        } else if (key == "heatmap.y0") {
            claim(key);
            cfg.heatmap.y0 = to_double(value, n, key);
        } else if (key == "heatmap.y1") {
            claim(key);
            cfg.heatmap.y1 = to_double(value, n, key);
        } else if (key == "heatmap.z") {
            claim(key);
            cfg.heatmap.z = to_double(value, n, key);
        } else if (key == "heatmap.nx") {
            claim(key);
            cfg.heatmap.nx = static_cast<int>(to_int(value, n, key));
        } else if (key == "heatmap.ny") {
            claim(key);
            cfg.heatmap.ny = static_cast<int>(to_int(value, n, key));
        } else if (key == "mobility.mu") {
            claim(key);
            cfg.mobility.mu = to_double(value, n, key);
            if (!(cfg.mobility.mu > 0.0))
                fail(n, key, "refresh interval must be positive");
        } else if (key == "mobility.horizon") {
            claim(key);
            cfg.mobility.horizon = to_double(value, n, key);
        } else if (key == "mobility.detect_every") {
            claim(key);
            cfg.mobility.detect_every = to_double(value, n, key);
            if (!(cfg.mobility.detect_every > 0.0))
                fail(n, key, "sensing cadence must be positive");
        } else if (key == "mobility.average") {
            claim(key);
            cfg.mobility.average = to_bool(value, n, key);
        } else if (key == "mobility.instant") {
            claim(key);
            const long long i = to_int(value, n, key);
            if (i < 0)
                fail(n, key, "instant index must be >= 0");
            cfg.mobility.instant = static_cast<int>(i);
        } else if (key.rfind("pu.", 0) == 0 || key.rfind("su.", 0) == 0) {
            const bool is_pu = key[0] == 'p';
            const std::size_t dot = key.find('.', 3);
            if (dot == std::string::npos)
                fail(n, key, "expected '" + key.substr(0, 2) + ".<index>.<field>'");
            long long idx = 0;
            {
                const std::string_view is(key.data() + 3, dot - 3);
                const auto r = std::from_chars(is.data(), is.data() + is.size(), idx);
                if (r.ec != std::errc{} || r.ptr != is.data() + is.size() || idx < 1)
                    fail(n, key, "index must be a positive integer");
            }
            const std::string field = key.substr(dot + 1);
            claim(key);
            if (is_pu) {
                saw_pu = true;
                PuDraft& d = pu_draft[idx];
                d.line = d.line ? d.line : n;
                if (field == "pos") {
                    d.pos = to_point(value, n, key);
                    d.has_pos = true;
                } else if (field == "a") {
                    d.a = to_double(value, n, key);
                } else {
                    fail(n, key, "unknown field '" + field + "' (want pos or a)");
                }
            } else {
                saw_su = true;
                SuDraft& d = su_draft[idx];
                d.line = d.line ? d.line : n;
                if (field == "waypoints") {
                    d.waypoints = to_points(value, n, key);
                } else if (field == "speed") {
                    d.speed = to_double(value, n, key);
                    d.has_speed = true;
                } else {
                    fail(n, key, "unknown field '" + field + "' (want waypoints or speed)");
                }
            }
        } else {
            throw parse_error("config line " + std::to_string(line_no) +
                              ": unknown key '" + key + "'");
        }
    }

    // Structural checks with key context, then the scenario-level validator.
    const ArrayGeometry& g = sc.geometry;
    if (g.lx <= 0 || g.lx % 2 != 0)
        fail(0, "array.lx", "element count must be positive and even");
    if (g.ly <= 0 || g.ly % 2 != 0)
        fail(0, "array.ly", "element count must be positive and even");
    if (!g.excitation.empty() &&
        g.excitation.size() != static_cast<std::size_t>(g.lx / 2) * (g.ly / 2))
        fail(0, "array.excitation",
             "need exactly (lx/2)*(ly/2) = " +
                 std::to_string(static_cast<long long>(g.lx / 2) * (g.ly / 2)) +
                 " values, got " + std::to_string(g.excitation.size()));

    if (saw_pu) {
        cfg.pus.clear();
        long long expect = 1;
        for (const auto& [idx, d] : pu_draft) {
            if (idx != expect)
                fail(d.line, "pu." + std::to_string(idx) + ".pos",
                     "transmitter indices must be contiguous from 1");
            if (!d.has_pos)
                fail(d.line, "pu." + std::to_string(idx) + ".pos", "missing position");
            cfg.pus.push_back({d.pos, d.a});
            ++expect;
        }
    }
    if (saw_su) {
        sc.sus.clear();
        long long expect = 1;
        for (const auto& [idx, d] : su_draft) {
            const std::string base = "su." + std::to_string(idx);
            if (idx != expect)
                fail(d.line, base + ".waypoints", "sensor indices must be contiguous from 1");
            if (d.waypoints.empty())
                fail(d.line, base + ".waypoints", "missing waypoints");
            if (d.waypoints.size() > 1 && !(d.speed > 0.0))
                fail(d.line, base + ".speed",
                     "positive speed required for a multi-waypoint path");
            sc.sus.push_back({d.waypoints, d.has_speed ? d.speed : 0.0});
            ++expect;
        }
    }
    if (cfg.pus.empty())
        fail(0, "pu.1.pos", "need at least one transmitter");

    if (!(cfg.heatmap.x1 > cfg.heatmap.x0))
        fail(0, "heatmap.x1", "range must satisfy x1 > x0");
    if (!(cfg.heatmap.y1 > cfg.heatmap.y0))
        fail(0, "heatmap.y1", "range must satisfy y1 > y0");
    if (cfg.heatmap.nx < 2)
        fail(0, "heatmap.nx", "grid needs at least 2 columns");
    if (cfg.heatmap.ny < 2)
        fail(0, "heatmap.ny", "grid needs at least 2 rows");
    if (!(cfg.mobility.horizon >= cfg.mobility.detect_every))
        fail(0, "mobility.horizon", "must be >= mobility.detect_every");

    try {
        refresh_beams(cfg);
        validate(cfg.scenario);
    } catch (const domain_error& e) {
        throw parse_error(std::string("config: ") + e.what());
    }
}

} // namespace cfgdetail

// Parses the flat `key = value` experiment format.  Unknown keys, malformed
// values, duplicate settings and invariant violations all raise parse_error
// naming the key and line.  Absent keys keep the documented defaults; the
// first `pu.*` / `su.*` key replaces the entire default transmitter / sensor
// set.
inline ExperimentConfig parse_config(const std::string& text) {
    ExperimentConfig cfg = default_experiment_config();
    cfgdetail::apply_config_text(cfg, text, true);
    return cfg;
}

// Re-assigns schema keys on top of an existing config (experiment variants:
// a different aperture, a different refresh interval, ...).
inline ExperimentConfig apply_overrides(
    const ExperimentConfig& base,
    const std::vector<std::pair<std::string, std::string>>& overrides) {
    ExperimentConfig cfg = base;
    std::string text;
    for (const auto& [key, value] : overrides) text += key + " = " + value + "\n";
    cfgdetail::apply_config_text(cfg, text, false);
    return cfg;
}

// Canonical text form: every setting explicit, linear SI units, shortest
// round-trip numbers.  parse_config(emit_config(c)) == c.
inline std::string emit_config(const ExperimentConfig& cfg) {
    using cfgdetail::num;
    const Scenario& sc = cfg.scenario;
    std::string out;
    out += "seed = " + std::to_string(sc.seed) + "\n";
    out += "array.origin = " + num(sc.array_origin) + "\n";
    out += "array.boresight = " + num(sc.boresight) + "\n";
    out += "array.lx = " + std::to_string(sc.geometry.lx) + "\n";
    out += "array.ly = " + std::to_string(sc.geometry.ly) + "\n";
    out += "array.dx = " + num(sc.geometry.dx) + "\n";
    out += "array.dy = " + num(sc.geometry.dy) + "\n";
    if (!sc.geometry.excitation.empty()) {
        out += "array.excitation =";
        for (double v : sc.geometry.excitation) out += " " + num(v);
        out += "\n";
    }
    out += "radio.p_w = " + num(sc.radio.p) + "\n";
    out += "radio.g_lin = " + num(sc.radio.g) + "\n";
    out += "radio.fc_hz = " + num(sc.radio.fc) + "\n";
    out += "radio.noise_w = " + num(sc.radio.sigma_n2) + "\n";
    out += "radio.sigma_s2 = " + num(sc.radio.sigma_s2) + "\n";
    out += "radio.k = " + std::to_string(sc.radio.k) + "\n";
    out += std::string("fading.model = ") +
           (sc.fading.model == FadingModel::rician ? "rician" : "deterministic") + "\n";
    out += "fading.rician_k = " + num(sc.fading.rician_k) + "\n";
    out += std::string("weights.use_fading = ") +
           (cfg.weights_use_fading ? "true" : "false") + "\n";
    for (std::size_t i = 0; i < cfg.pus.size(); ++i) {
        const std::string base = "pu." + std::to_string(i + 1);
        out += base + ".pos = " + num(cfg.pus[i].pos) + "\n";
        out += base + ".a = " + num(cfg.pus[i].a) + "\n";
    }
    for (std::size_t i = 0; i < sc.sus.size(); ++i) {
        const std::string base = "su." + std::to_string(i + 1);
        out += base + ".waypoints =";
        for (std::size_t j = 0; j < sc.sus[i].waypoints.size(); ++j) {
            if (j) out += " ;";
            out += " " + num(sc.sus[i].waypoints[j]);
        }
        out += "\n";
        if (sc.sus[i].waypoints.size() > 1 || sc.sus[i].speed != 0.0)
            out += base + ".speed = " + num(sc.sus[i].speed) + "\n";
    }
    out += "heatmap.x0 = " + num(cfg.heatmap.x0) + "\n";
    out += "heatmap.x1 = " + num(cfg.heatmap.x1) + "\n";
    out += "heatmap.y0 = " + num(cfg.heatmap.y0) + "\n";
    out += "heatmap.y1 = " + num(cfg.heatmap.y1) + "\n";
    out += "heatmap.z = " + num(cfg.heatmap.z) + "\n";
    out += "heatmap.nx = " + std::to_string(cfg.heatmap.nx) + "\n";
    out += "heatmap.ny = " + std::to_string(cfg.heatmap.ny) + "\n";
    out += "mobility.mu = " + num(cfg.mobility.mu) + "\n";
    out += "mobility.horizon = " + num(cfg.mobility.horizon) + "\n";
    out += "mobility.detect_every = " + num(cfg.mobility.detect_every) + "\n";
    out += std::string("mobility.average = ") + (cfg.mobility.average ? "true" : "false") +
           "\n";
    out += "mobility.instant = " + std::to_string(cfg.mobility.instant) + "\n";
    return out;
}

// 64-bit FNV-1a fingerprint of the canonical text; ties emitted data files to
// the exact experiment description that produced them.
inline std::string config_digest(const ExperimentConfig& cfg) {
    const std::string text = emit_config(cfg);
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    for (int i = 15; i >= 0; --i) {
        buf[i] = "0123456789abcdef"[h & 0xf];
        h >>= 4;
    }
    buf[16] = 0;
    return std::string(buf, 16);
}

} // namespace wcss
