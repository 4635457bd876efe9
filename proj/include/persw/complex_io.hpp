#pragma once

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "persw/filtered_complex.hpp"
#include "persw/point_cloud.hpp"

namespace persw {

inline std::string format_scale(Scale s) {
    // shortest representation that round-trips the double exactly
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), s);
    return std::string(buf, res.ptr);
}

/// Filtered-complex text format, one cell per line:
///   <scale> <v0> <v1> ... <vk>
/// whitespace-separated, lines ascending by scale, `#` starts a comment.
/// This is both the import format for externally built alpha filtrations and
/// the export format of the Cech builder.
inline void save_complex(const FilteredComplex& fc, std::ostream& out) {
    out << "# filtered complex: " << fc.size() << " cells, dimension "
        << fc.dimension() << "\n";
    for (const Cell& c : fc.cells()) {
        out << format_scale(c.scale);
        for (VertexId v : c.simplex.vertices()) out << ' ' << v;
        out << '\n';
    }
}

inline void save_complex(const FilteredComplex& fc, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    save_complex(fc, out);
}

inline FilteredComplex load_complex(std::istream& in, const std::string& name = "<stream>") {
    std::vector<Cell> cells;
    std::vector<std::size_t> lines;  // source line of each cell, for diagnostics
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        Scale scale;
        if (!(ls >> scale)) {
            std::string word;
            std::istringstream probe(line);
            if (!(probe >> word)) continue;  // blank line
            throw std::runtime_error(name + ":" + std::to_string(lineno) +
                                     ": expected a scale, got '" + word + "'");
        }
        std::vector<VertexId> verts;
        VertexId v;
        while (ls >> v) verts.push_back(v);
        if (!ls.eof())
            throw std::runtime_error(name + ":" + std::to_string(lineno) +
                                     ": malformed vertex id");
        if (verts.empty())
            throw std::runtime_error(name + ":" + std::to_string(lineno) +
                                     ": cell has no vertices");
        try {
            cells.push_back(Cell{Simplex(std::move(verts)), scale});
        } catch (const std::invalid_argument& e) {
            throw std::runtime_error(name + ":" + std::to_string(lineno) + ": " + e.what());
        }
        lines.push_back(lineno);
    }

    // validate here first, so face-closure and monotonicity failures carry
    // the offending line number
    std::unordered_map<Simplex, std::size_t, SimplexHash> seen;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        auto [it, fresh] = seen.emplace(cells[i].simplex, i);
        if (!fresh)
            throw std::runtime_error(name + ":" + std::to_string(lines[i]) +
                                     ": duplicate cell " + cells[i].simplex.str());
    }
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const Cell& c = cells[i];
        if (c.simplex.dim() == 0) continue;
        for (std::size_t k = 0; k < c.simplex.size(); ++k) {
            Simplex f = c.simplex.facet(k);
            auto it = seen.find(f);
            if (it == seen.end())
                throw std::runtime_error(name + ":" + std::to_string(lines[i]) +
                                         ": facet " + f.str() + " of " + c.simplex.str() +
                                         " is missing");
            if (cells[it->second].scale > c.scale)
                throw std::runtime_error(
                    name + ":" + std::to_string(lines[i]) + ": facet " + f.str() +
                    " enters at " + format_scale(cells[it->second].scale) + ", after " +
                    c.simplex.str() + " at " + format_scale(c.scale));
        }
    }
    return FilteredComplex(std::move(cells));
}

inline FilteredComplex load_complex(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return load_complex(in, path);
}

/// Point-cloud text input: one point per line, D coordinates separated by
/// whitespace or commas; `#` starts a comment.
inline PointCloud load_points(std::istream& in, const std::string& name = "<stream>") {
    PointCloud pc;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        for (char& ch : line)
            if (ch == ',' || ch == ';' || ch == '\t') ch = ' ';
        std::istringstream ls(line);
        std::vector<double> coords;
        double x;
        while (ls >> x) coords.push_back(x);
        if (!ls.eof()) {
            std::string word;
            ls.clear();
            ls >> word;
            throw std::runtime_error(name + ":" + std::to_string(lineno) +
                                     ": malformed coordinate '" + word + "'");
        }
        if (coords.empty()) continue;
        if (!pc.points.empty() && coords.size() != pc.points.front().size())
            throw std::runtime_error(name + ":" + std::to_string(lineno) +
                                     ": inconsistent point dimension");
        pc.points.push_back(std::move(coords));
    }
    pc.validate();
    return pc;
}

inline PointCloud load_points(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return load_points(in, path);
}

inline void save_points(const PointCloud& pc, std::ostream& out) {
    for (const auto& p : pc.points) {
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (i) out << ' ';
            out << format_scale(p[i]);
        }
        out << '\n';
    }
}

inline void save_points(const PointCloud& pc, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    save_points(pc, out);
}

}  // namespace persw
