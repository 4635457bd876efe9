#pragma once

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "persw/complex_io.hpp"
#include "persw/persistence.hpp"
#include "persw/wu.hpp"

namespace persw {

namespace detail {

inline std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return buf;
}

}  // namespace detail

/// Barcode plot: one lane of bars per degree over the filtration axis. Bars
/// whose classes sum to a nontrivial Stiefel-Whitney class are drawn in the
/// highlight color; the checked interval, when present, is shaded. A
/// machine-readable sidecar with the same content is written to
/// `path + ".json"`. Output is byte-deterministic.
inline void emit_barcode_plot(const std::vector<PersistentClass>& classes,
                              const SWReport* report, const std::string& path) {
    // which bars constitute some nontrivial sw class, and which k they serve
    std::vector<std::vector<int>> bar_ks(classes.size());
    if (report)
        for (std::size_t k1 = 0; k1 < report->sw_bars.size(); ++k1)
            for (std::size_t id : report->sw_bars[k1])
                bar_ks[id].push_back(static_cast<int>(k1) + 1);

    Scale axis_max = 1.0;
    int max_deg = 0;
    for (const PersistentClass& c : classes) {
        max_deg = std::max(max_deg, c.degree);
        axis_max = std::max(axis_max, c.birth);
        if (!c.essential()) axis_max = std::max(axis_max, c.death);
    }
    if (report) axis_max = std::max(axis_max, report->window_end);
    axis_max *= 1.05;

    const double width = 860, left = 60, right = 30, lane_gap = 14;
    const double bar_h = 6, bar_pad = 4;
    std::vector<std::vector<std::size_t>> lanes(static_cast<std::size_t>(max_deg + 1));
    for (std::size_t i = 0; i < classes.size(); ++i)
        lanes[static_cast<std::size_t>(classes[i].degree)].push_back(i);

    double height = 40;
    std::vector<double> lane_top(lanes.size());
    for (std::size_t d = 0; d < lanes.size(); ++d) {
        lane_top[d] = height;
        height += lane_gap + static_cast<double>(lanes[d].size()) * (bar_h + bar_pad) + 10;
    }
    height += 30;

    auto xpos = [&](Scale s) {
        return left + (width - left - right) * (axis_max > 0 ? s / axis_max : 0.0);
    };

    std::ofstream svg(path);
    if (!svg) throw std::runtime_error("cannot open " + path + " for writing");
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << detail::fmt(width)
        << "\" height=\"" << detail::fmt(height) << "\" viewBox=\"0 0 "
        << detail::fmt(width) << " " << detail::fmt(height) << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    if (report) {
        svg << "<rect x=\"" << detail::fmt(xpos(report->window_start)) << "\" y=\"20\" width=\""
            << detail::fmt(xpos(report->window_end) - xpos(report->window_start))
            << "\" height=\"" << detail::fmt(height - 50)
            << "\" fill=\"#f4e8b0\" opacity=\"0.6\"/>\n";
    }

    // axis
    svg << "<line x1=\"" << detail::fmt(left) << "\" y1=\"" << detail::fmt(height - 28)
        << "\" x2=\"" << detail::fmt(width - right) << "\" y2=\""
        << detail::fmt(height - 28) << "\" stroke=\"black\"/>\n";
    for (int t = 0; t <= 5; ++t) {
        const Scale s = axis_max * t / 5.0;
        svg << "<line x1=\"" << detail::fmt(xpos(s)) << "\" y1=\"" << detail::fmt(height - 28)
            << "\" x2=\"" << detail::fmt(xpos(s)) << "\" y2=\"" << detail::fmt(height - 24)
            << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << detail::fmt(xpos(s)) << "\" y=\"" << detail::fmt(height - 12)
            << "\" font-size=\"11\" text-anchor=\"middle\">" << detail::fmt(s)
            << "</text>\n";
    }

    for (std::size_t d = 0; d < lanes.size(); ++d) {
        svg << "<text x=\"8\" y=\"" << detail::fmt(lane_top[d] + 10)
            << "\" font-size=\"12\">H" << d << "</text>\n";
        for (std::size_t j = 0; j < lanes[d].size(); ++j) {
            const PersistentClass& c = classes[lanes[d][j]];
            const double y = lane_top[d] + static_cast<double>(j) * (bar_h + bar_pad);
            const Scale end = c.essential() ? axis_max : c.death;
            const bool hl = !bar_ks[lanes[d][j]].empty();
            svg << "<rect x=\"" << detail::fmt(xpos(c.birth)) << "\" y=\"" << detail::fmt(y)
                << "\" width=\"" << detail::fmt(std::max(xpos(end) - xpos(c.birth), 1.0))
                << "\" height=\"" << detail::fmt(bar_h) << "\" fill=\""
                << (hl ? "#c62828" : "#4878a8") << "\"/>\n";
            if (c.essential())
                svg << "<text x=\"" << detail::fmt(width - right + 4) << "\" y=\""
                    << detail::fmt(y + bar_h) << "\" font-size=\"10\">&#8734;</text>\n";
        }
    }
    svg << "</svg>\n";
    svg.close();

    std::ofstream side(path + ".json");
    if (!side) throw std::runtime_error("cannot open " + path + ".json for writing");
    side << "{\n  \"schema\": \"persw.plot/1\",\n";
    if (report)
        side << "  \"interval\": [" << format_scale(report->window_start) << ", "
             << format_scale(report->window_end) << "],\n";
    else
        side << "  \"interval\": null,\n";
    side << "  \"bars\": [";
    for (std::size_t i = 0; i < classes.size(); ++i) {
        const PersistentClass& c = classes[i];
        side << (i ? ",\n    " : "\n    ");
        side << "{\"id\": " << i << ", \"degree\": " << c.degree << ", \"birth\": "
             << format_scale(c.birth) << ", \"death\": ";
        if (c.essential())
            side << "\"inf\"";
        else
            side << format_scale(c.death);
        side << ", \"highlighted\": " << (bar_ks[i].empty() ? "false" : "true")
             << ", \"sw_k\": [";
        for (std::size_t j = 0; j < bar_ks[i].size(); ++j)
            side << (j ? ", " : "") << bar_ks[i][j];
        side << "]}";
    }
    side << "\n  ]\n}\n";
}

}  // namespace persw
