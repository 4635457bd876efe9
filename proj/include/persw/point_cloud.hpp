#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace persw {

/// A finite set of points in R^D.
struct PointCloud {
    std::vector<std::vector<double>> points;

    std::size_t size() const { return points.size(); }
    bool empty() const { return points.empty(); }

    int ambient_dim() const {
        return points.empty() ? 0 : static_cast<int>(points.front().size());
    }

    void validate() const {
        if (points.empty()) return;
        const std::size_t d = points.front().size();
        if (d == 0) throw std::invalid_argument("points must have dimension >= 1");
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (points[i].size() != d)
                throw std::invalid_argument("point " + std::to_string(i) +
                                            " has inconsistent dimension");
            for (double x : points[i])
                if (!std::isfinite(x))
                    throw std::invalid_argument("point " + std::to_string(i) +
                                                " has a non-finite coordinate");
        }
    }
};

inline double squared_distance(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

}  // namespace persw
