#pragma once

// Text formats: flat key=value config files, CSV emitters for spectra,
// sweeps, matrices and phase-space grids, ASCII graymaps, and re-runnable
// manifests.  All numeric output goes through one 17-significant-digit
// formatter so repeated runs are byte-identical.

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hexamer/clustering.hpp"
#include "hexamer/eigen.hpp"
#include "hexamer/ensemble.hpp"
#include "hexamer/locus.hpp"
#include "hexamer/matrix.hpp"
#include "hexamer/wigner.hpp"

namespace hexamer {

// Shortest round-trippable decimal form of a double.
inline std::string format_g17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

// Complex CSV cell: "re+imi", e.g. "1.5-0.25i".
inline std::string format_complex_cell(Complex z) {
    char buf[80];
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
    return buf;
}

namespace detail {

inline std::string trim(const std::string& s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

inline double parse_double(const std::string& s, const std::string& what) {
    const std::string t = trim(s);
    if (t.empty()) throw std::invalid_argument(what + ": empty numeric field");
    size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(t, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument(what + ": cannot parse '" + t + "' as a number");
    }
    if (used != t.size())
        throw std::invalid_argument(what + ": trailing garbage in '" + t + "'");
    return v;
}

inline std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace detail

// Flat key=value configuration ('#' starts a comment, blank lines ignored).
struct Config {
    std::map<std::string, double> values;

    bool has(const std::string& key) const { return values.count(key) != 0; }

    double get(const std::string& key) const {
        auto it = values.find(key);
        if (it == values.end())
            throw std::invalid_argument("config: missing key '" + key + "'");
        return it->second;
    }

    double get_or(const std::string& key, double fallback) const {
        auto it = values.find(key);
        return it == values.end() ? fallback : it->second;
    }
};

inline Config parse_config_text(const std::string& text) {
    Config cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = detail::trim(line);
        if (line.empty()) continue;
        const size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected key=value, got '" + line + "'");
        const std::string key = detail::trim(line.substr(0, eq));
        if (key.empty())
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": empty key");
        cfg.values[key] =
            detail::parse_double(line.substr(eq + 1), "config line " + std::to_string(lineno));
    }
    return cfg;
}

inline std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open '" + path + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline Config read_config(const std::string& path) { return parse_config_text(read_text(path)); }

inline void write_text(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

// index,eigenvalue,class_id,multiplicity
inline std::string spectrum_csv(const Spectrum& s, const DegeneracyClasses& classes) {
    std::string out = "index,eigenvalue,class_id,multiplicity\n";
    for (size_t i = 0; i < s.eigenvalues.size(); ++i) {
        const int cls = classes.class_of(static_cast<int>(i));
        out += std::to_string(i) + "," + format_g17(s.eigenvalues[i]) + "," +
               std::to_string(cls) + "," +
               std::to_string(classes.classes[cls].multiplicity) + "\n";
    }
    return out;
}

// Square matrix as a grid of re+imi cells, no header.
inline std::string matrix_csv(const Matrix& m) {
    std::string out;
    for (int i = 0; i < m.dim(); ++i) {
        for (int j = 0; j < m.dim(); ++j) {
            if (j) out += ",";
            out += format_complex_cell(m(i, j));
        }
        out += "\n";
    }
    return out;
}

// <param>,E1..E6,pattern
inline std::string sweep_csv(const SweepTable& table) {
    std::string out = table.parameter;
    for (int k = 1; k <= 6; ++k) out += ",E" + std::to_string(k);
    out += ",pattern\n";
    for (const auto& row : table.rows) {
        out += format_g17(row.param);
        for (double e : row.energies) out += "," + format_g17(e);
        out += "," + row.pattern + "\n";
    }
    return out;
}

// Labeled real-valued grid; every label is quoted (labels contain commas).
inline std::string grid_csv(const WignerGrid& grid) {
    auto quoted = [](const std::string& s) { return "\"" + s + "\""; };
    std::string out = quoted("row");
    for (const auto& l : grid.col_labels) out += "," + quoted(l);
    out += "\n";
    for (int r = 0; r < grid.rows; ++r) {
        out += quoted(grid.row_labels[r]);
        for (int c = 0; c < grid.cols; ++c) out += "," + format_g17(grid.at(r, c));
        out += "\n";
    }
    return out;
}

// Plain (ASCII) PGM of |value| scaled so the largest magnitude maps to 255.
inline std::string grid_pgm(const WignerGrid& grid) {
    const double peak = grid.max_abs();
    std::string out = "P2\n" + std::to_string(grid.cols) + " " + std::to_string(grid.rows) +
                      "\n255\n";
    for (int r = 0; r < grid.rows; ++r) {
        for (int c = 0; c < grid.cols; ++c) {
            const int level =
                peak == 0.0
                    ? 0
                    : static_cast<int>(std::lround(255.0 * std::abs(grid.at(r, c)) / peak));
            if (c) out += " ";
            out += std::to_string(level);
        }
        out += "\n";
    }
    return out;
}

// Re-runnable manifest: '#' comment lines carry results, key=value lines
// carry the inputs, so the file parses with read_config.
inline std::string build_manifest(const std::string& title,
                                  const std::vector<std::pair<std::string, double>>& params,
                                  const std::vector<std::string>& result_comments) {
    std::string out = "# " + title + "\n";
    for (const auto& [key, value] : params) out += key + "=" + format_g17(value) + "\n";
    for (const auto& line : result_comments) out += "# " + line + "\n";
    return out;
}

// Loop CSV: header "e0,dd,dh,ds,phi", one coupling set per row.
inline ParameterLoop parse_loop_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line))
        throw std::invalid_argument("loop csv: empty input");
    {
        auto fields = detail::split(line, ',');
        const std::vector<std::string> want = {"e0", "dd", "dh", "ds", "phi"};
        if (fields.size() != want.size())
            throw std::invalid_argument("loop csv: header must be e0,dd,dh,ds,phi");
        for (size_t i = 0; i < want.size(); ++i)
            if (detail::trim(fields[i]) != want[i])
                throw std::invalid_argument("loop csv: header must be e0,dd,dh,ds,phi");
    }
    ParameterLoop loop;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (detail::trim(line).empty()) continue;
        auto fields = detail::split(line, ',');
        if (fields.size() != 5)
            throw std::invalid_argument("loop csv line " + std::to_string(lineno) +
                                        ": expected 5 fields");
        const std::string what = "loop csv line " + std::to_string(lineno);
        CouplingSet c;
        c.e0 = detail::parse_double(fields[0], what);
        c.dd = detail::parse_double(fields[1], what);
        c.dh = detail::parse_double(fields[2], what);
        c.ds = detail::parse_double(fields[3], what);
        c.phi = detail::parse_double(fields[4], what);
        loop.points.push_back(c);
    }
    loop.validate();
    return loop;
}

}  // namespace hexamer
