#pragma once
// Configuration and persistence: an INI-style config reader ([model],
// [quantum], [solver], [output] sections), locale-independent numeric
// parsing, CSV input for published tables, and deterministic CSV/JSON
// emission (12 significant digits, '\n' endings).

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "core.hpp"
#include "oracle.hpp"
#include "spectra.hpp"

namespace scarf {

struct CsvError : Error {
    using Error::Error;
};
struct IoError : Error {
    using Error::Error;
};

// ---------------------------------------------------------------------------
// Formatting (the frozen float format: %.12g, '.' radix, '\n' endings)
// ---------------------------------------------------------------------------

inline std::string fmt_g(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::string(buf);
}

inline std::string fmt_g_or_empty(double v) { return std::isnan(v) ? std::string() : fmt_g(v); }

/// JSON numeric value rounded through the frozen 12-digit format so JSON and
/// CSV carry the same precision; NaN/inf become null.
inline nlohmann::ordered_json jnum(double v) {
    if (!std::isfinite(v)) return nullptr;
    return std::strtod(fmt_g(v).c_str(), nullptr);
}

// ---------------------------------------------------------------------------
// Locale-independent scalar parsing
// ---------------------------------------------------------------------------

namespace detail {

inline std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace detail

inline double parse_double(const std::string& raw) {
    const std::string s = detail::trim(raw);
    double v = 0.0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [p, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || p != last) throw ConfigError("not a number: '" + raw + "'");
    return v;
}

inline int parse_int(const std::string& raw) {
    const std::string s = detail::trim(raw);
    int v = 0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [p, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || p != last) throw ConfigError("not an integer: '" + raw + "'");
    return v;
}

inline bool parse_bool(const std::string& raw) {
    const std::string s = detail::trim(raw);
    if (s == "true" || s == "1") return true;
    if (s == "false" || s == "0") return false;
    throw ConfigError("not a boolean: '" + raw + "'");
}

inline std::vector<std::string> split_list(const std::string& s, char sep = ',') {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(detail::trim(cur));
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    out.push_back(detail::trim(cur));
    return out;
}

/// Comma-separated integers; a:b tokens expand to the inclusive range.
inline std::vector<int> parse_int_list(const std::string& raw) {
    std::vector<int> out;
    for (const std::string& tok : split_list(raw)) {
        if (tok.empty()) throw ConfigError("empty item in integer list: '" + raw + "'");
        const size_t colon = tok.find(':');
        if (colon == std::string::npos) {
            out.push_back(parse_int(tok));
        } else {
            const int a = parse_int(tok.substr(0, colon));
            const int b = parse_int(tok.substr(colon + 1));
            if (b < a) throw ConfigError("descending range: '" + tok + "'");
            if (b - a > 100000) throw ConfigError("range too large: '" + tok + "'");
            for (int v = a; v <= b; ++v) out.push_back(v);
        }
    }
    return out;
}

inline std::vector<double> parse_double_list(const std::string& raw) {
    std::vector<double> out;
    for (const std::string& tok : split_list(raw)) {
        if (tok.empty()) throw ConfigError("empty item in list: '" + raw + "'");
        out.push_back(parse_double(tok));
    }
    return out;
}

// ---------------------------------------------------------------------------
// INI-style config file
// ---------------------------------------------------------------------------

/// section -> ordered (key, value) pairs. '#' / ';' lines are comments.
using IniSections = std::map<std::string, std::vector<std::pair<std::string, std::string>>>;

inline IniSections parse_ini_text(const std::string& text) {
    IniSections out;
    std::string section;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = detail::trim(line);
        if (t.empty() || t[0] == '#' || t[0] == ';') continue;
        if (t.front() == '[') {
            if (t.back() != ']')
                throw ConfigError("config line " + std::to_string(lineno) + ": unterminated section");
            section = detail::trim(t.substr(1, t.size() - 2));
            if (section.empty())
                throw ConfigError("config line " + std::to_string(lineno) + ": empty section name");
            out[section];
            continue;
        }
        const size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = detail::trim(t.substr(0, eq));
        const std::string value = detail::trim(t.substr(eq + 1));
        if (key.empty())
            throw ConfigError("config line " + std::to_string(lineno) + ": empty key");
        if (section.empty())
            throw ConfigError("config line " + std::to_string(lineno) + ": key outside any section");
        out[section].emplace_back(key, value);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Run configuration
// ---------------------------------------------------------------------------

enum class OutputFormat { Csv, Json };

inline std::string to_string(OutputFormat f) {
    return f == OutputFormat::Csv ? "csv" : "json";
}

inline OutputFormat format_from_string(const std::string& s) {
    if (s == "csv") return OutputFormat::Csv;
    if (s == "json") return OutputFormat::Json;
    throw ConfigError("unknown format: " + s + " (expected csv|json)");
}

struct RunConfig {
    // [model]
    double M = 1.0;
    double C = 0.0;
    double V0 = 1.0;
    double S0 = 1.0;
    double q = 1.0;
    std::vector<double> alpha_list = {0.01};
    Variant variant = Variant::SpinTrig;
    ComplexDepths depths{};
    bool has_depths = false;

    // [quantum]
    std::vector<int> D_list = {3};
    std::vector<int> n_list = {1};
    int n_r = 0;
    int l = 0;
    bool aligned = true;

    // [solver]
    double scan_lo = std::numeric_limits<double>::quiet_NaN();
    double scan_hi = std::numeric_limits<double>::quiet_NaN();
    int scan_points = 10000;
    double tol = -1.0;
    double seed_re = std::numeric_limits<double>::quiet_NaN();
    double seed_im = 0.0;
    int grid_points = 20000;
    bool richardson = true;
    double boundary_offset = 1e-6;
    CentrifugalMode centrifugal = CentrifugalMode::PaperCos;
    double bracket_lo = std::numeric_limits<double>::quiet_NaN();
    double bracket_hi = std::numeric_limits<double>::quiet_NaN();
    int grids = 3;
    int samples = 2000;
    double tol_table = 1e-3;

    // [output]
    OutputFormat format = OutputFormat::Csv;
    std::string out;    // empty = stdout (no sidecar)
    std::string table;  // audit input path (CLI --table)

    ModelParams model_params(double alpha) const {
        ModelParams p;
        p.M = M;
        p.C = C;
        p.V0 = V0;
        p.S0 = S0;
        p.alpha = alpha;
        p.q = q;
        p.symmetry = is_spin_variant(variant) ? Symmetry::Spin : Symmetry::Pseudospin;
        return p;
    }

    void validate() const {
        if (alpha_list.empty() || D_list.empty() || n_list.empty())
            throw ConfigError("empty sweep: alpha, D and n lists must be non-empty");
        for (double a : alpha_list)
            if (!(a > 0.0)) throw ConfigError("alpha values must be positive");
        for (int d : D_list)
            if (d < 2) throw ConfigError("D values must be >= 2");
        for (int n : n_list)
            if (n < 1) throw ConfigError("n values must be >= 1");
        if (n_r < 0 || l < 0) throw ConfigError("n_r and l must be non-negative");
        if (tol_table <= 0.0) throw ConfigError("tol_table must be positive");
        if (scan_points < 2) throw ConfigError("scan_points must be >= 2");
        if (samples < 1) throw ConfigError("samples must be >= 1");
        if (grids < 1) throw ConfigError("grids must be >= 1");
        if (grid_points < 100) throw ConfigError("grid_points must be >= 100");
        if (is_nonpt_variant(variant) && !has_depths)
            throw ConfigError("NonPT variants need V1/V2/S1/S2 depths in [model]");
    }
};

namespace detail {

inline void apply_model_key(RunConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "M") cfg.M = parse_double(value);
    else if (key == "C") cfg.C = parse_double(value);
    else if (key == "V0") cfg.V0 = parse_double(value);
    else if (key == "S0") cfg.S0 = parse_double(value);
    else if (key == "q") cfg.q = parse_double(value);
    else if (key == "alpha") cfg.alpha_list = parse_double_list(value);
    else if (key == "variant") cfg.variant = variant_from_string(value);
    else if (key == "V1") { cfg.depths.V1 = parse_double(value); cfg.has_depths = true; }
    else if (key == "V2") { cfg.depths.V2 = parse_double(value); cfg.has_depths = true; }
    else if (key == "S1") { cfg.depths.S1 = parse_double(value); cfg.has_depths = true; }
    else if (key == "S2") { cfg.depths.S2 = parse_double(value); cfg.has_depths = true; }
    else throw ConfigError("unknown [model] key: " + key);
}

inline void apply_quantum_key(RunConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "D") cfg.D_list = parse_int_list(value);
    else if (key == "n") cfg.n_list = parse_int_list(value);
    else if (key == "n_r") cfg.n_r = parse_int(value);
    else if (key == "l") cfg.l = parse_int(value);
    else if (key == "aligned") cfg.aligned = parse_bool(value);
    else throw ConfigError("unknown [quantum] key: " + key);
}

inline void apply_solver_key(RunConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "scan_lo") cfg.scan_lo = parse_double(value);
    else if (key == "scan_hi") cfg.scan_hi = parse_double(value);
    else if (key == "scan_points") cfg.scan_points = parse_int(value);
    else if (key == "tol") cfg.tol = parse_double(value);
    else if (key == "seed_re") cfg.seed_re = parse_double(value);
    else if (key == "seed_im") cfg.seed_im = parse_double(value);
    else if (key == "grid_points") cfg.grid_points = parse_int(value);
    else if (key == "richardson") cfg.richardson = parse_bool(value);
    else if (key == "boundary_offset") cfg.boundary_offset = parse_double(value);
    else if (key == "centrifugal") cfg.centrifugal = centrifugal_from_string(value);
    else if (key == "bracket_lo") cfg.bracket_lo = parse_double(value);
    else if (key == "bracket_hi") cfg.bracket_hi = parse_double(value);
    else if (key == "grids") cfg.grids = parse_int(value);
    else if (key == "samples") cfg.samples = parse_int(value);
    else if (key == "tol_table") cfg.tol_table = parse_double(value);
    else throw ConfigError("unknown [solver] key: " + key);
}

inline void apply_output_key(RunConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "format") cfg.format = format_from_string(value);
    else if (key == "out") cfg.out = value;
    else throw ConfigError("unknown [output] key: " + key);
}

}  // namespace detail

inline void apply_config_text(RunConfig& cfg, const std::string& text) {
    const IniSections sections = parse_ini_text(text);
    for (const auto& [section, entries] : sections) {
        for (const auto& [key, value] : entries) {
            if (section == "model") detail::apply_model_key(cfg, key, value);
            else if (section == "quantum") detail::apply_quantum_key(cfg, key, value);
            else if (section == "solver") detail::apply_solver_key(cfg, key, value);
            else if (section == "output") detail::apply_output_key(cfg, key, value);
            else throw ConfigError("unknown config section: [" + section + "]");
        }
    }
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open for reading: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("read failure: " + path);
    return buf.str();
}

inline void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open for writing: " + path);
    out.write(content.data(), std::streamsize(content.size()));
    out.flush();
    if (!out.good()) throw IoError("write failure: " + path);
}

inline RunConfig load_config_file(const std::string& path, RunConfig base = {}) {
    std::string text;
    try {
        text = read_text_file(path);
    } catch (const IoError& e) {
        throw ConfigError(std::string(e.what()));  // unreadable config is a usage error
    }
    apply_config_text(base, text);
    return base;
}

// ---------------------------------------------------------------------------
// Published-table CSV input (header: D,n,alpha,E)
// ---------------------------------------------------------------------------

inline std::vector<TableRow> parse_table_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw CsvError("table CSV: empty file");
    if (detail::trim(line) != "D,n,alpha,E")
        throw CsvError("table CSV: header must be exactly 'D,n,alpha,E'");
    std::vector<TableRow> rows;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = detail::trim(line);
        if (t.empty()) continue;
        const std::vector<std::string> f = split_list(t);
        if (f.size() != 4)
            throw CsvError("table CSV line " + std::to_string(lineno) + ": expected 4 fields");
        TableRow row;
        try {
            row.D = parse_int(f[0]);
            row.n = parse_int(f[1]);
            row.alpha = parse_double(f[2]);
            row.E_published = parse_double(f[3]);
        } catch (const ConfigError& e) {
            throw CsvError("table CSV line " + std::to_string(lineno) + ": " + e.what());
        }
        rows.push_back(row);
    }
    if (rows.empty()) throw CsvError("table CSV: no data rows");
    return rows;
}

inline std::vector<TableRow> read_table_csv(const std::string& path) {
    return parse_table_csv(read_text_file(path));
}

// ---------------------------------------------------------------------------
// Resolved-configuration sidecar
// ---------------------------------------------------------------------------

inline nlohmann::ordered_json resolved_config_json(const RunConfig& cfg,
                                                   const std::string& command) {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["command"] = command;
    nlohmann::ordered_json model;
    model["M"] = jnum(cfg.M);
    model["C"] = jnum(cfg.C);
    model["V0"] = jnum(cfg.V0);
    model["S0"] = jnum(cfg.S0);
    model["q"] = jnum(cfg.q);
    model["alpha"] = nlohmann::ordered_json::array();
    for (double a : cfg.alpha_list) model["alpha"].push_back(jnum(a));
    model["variant"] = to_string(cfg.variant);
    if (cfg.has_depths) {
        model["V1"] = jnum(cfg.depths.V1);
        model["V2"] = jnum(cfg.depths.V2);
        model["S1"] = jnum(cfg.depths.S1);
        model["S2"] = jnum(cfg.depths.S2);
    }
    j["model"] = model;
    nlohmann::ordered_json quantum;
    quantum["D"] = cfg.D_list;
    quantum["n"] = cfg.n_list;
    quantum["n_r"] = cfg.n_r;
    quantum["l"] = cfg.l;
    quantum["aligned"] = cfg.aligned;
    j["quantum"] = quantum;
    nlohmann::ordered_json solver;
    solver["scan_lo"] = jnum(cfg.scan_lo);
    solver["scan_hi"] = jnum(cfg.scan_hi);
    solver["scan_points"] = cfg.scan_points;
    solver["tol"] = jnum(cfg.tol);
    solver["seed_re"] = jnum(cfg.seed_re);
    solver["seed_im"] = jnum(cfg.seed_im);
    solver["grid_points"] = cfg.grid_points;
    solver["richardson"] = cfg.richardson;
    solver["boundary_offset"] = jnum(cfg.boundary_offset);
    solver["centrifugal"] = to_string(cfg.centrifugal);
    solver["bracket_lo"] = jnum(cfg.bracket_lo);
    solver["bracket_hi"] = jnum(cfg.bracket_hi);
    solver["grids"] = cfg.grids;
    solver["samples"] = cfg.samples;
    solver["tol_table"] = jnum(cfg.tol_table);
    j["solver"] = solver;
    nlohmann::ordered_json output;
    output["format"] = to_string(cfg.format);
    output["out"] = cfg.out;
    if (!cfg.table.empty()) output["table"] = cfg.table;
    j["output"] = output;
    return j;
}

/// Writes the payload to cfg.out (or stdout when empty) and, for file
/// outputs, the resolved-config sidecar next to it.
inline void emit_output(const RunConfig& cfg, const std::string& command,
                        const std::string& payload) {
    if (cfg.out.empty()) {
        std::fwrite(payload.data(), 1, payload.size(), stdout);
        std::fflush(stdout);
        return;
    }
    write_text_file(cfg.out, payload);
    write_text_file(cfg.out + ".config.json", resolved_config_json(cfg, command).dump(2) + "\n");
}

}  // namespace scarf
