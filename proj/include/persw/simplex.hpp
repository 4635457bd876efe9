#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace persw {

using VertexId = int;

/// An abstract simplex: a strictly increasing tuple of non-negative vertex
/// ids. The global vertex order is plain integer order, so every simplex has
/// one canonical representation.
class Simplex {
public:
    Simplex() = default;
    Simplex(std::initializer_list<VertexId> vs) : verts_(vs) { validate(); }
    explicit Simplex(std::vector<VertexId> vs) : verts_(std::move(vs)) { validate(); }

    int dim() const { return static_cast<int>(verts_.size()) - 1; }
    std::size_t size() const { return verts_.size(); }
    bool empty() const { return verts_.empty(); }

    const std::vector<VertexId>& vertices() const { return verts_; }
    VertexId operator[](std::size_t i) const { return verts_[i]; }
    VertexId front() const { return verts_.front(); }
    VertexId back() const { return verts_.back(); }

    /// The facet obtained by deleting the vertex at position `i`.
    Simplex facet(std::size_t i) const {
        std::vector<VertexId> f;
        f.reserve(verts_.size() - 1);
        for (std::size_t j = 0; j < verts_.size(); ++j)
            if (j != i) f.push_back(verts_[j]);
        Simplex s;
        s.verts_ = std::move(f);
        return s;
    }

    bool operator==(const Simplex&) const = default;
    auto operator<=>(const Simplex&) const = default;

    std::string str() const {
        std::string out = "[";
        for (std::size_t i = 0; i < verts_.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(verts_[i]);
        }
        out += "]";
        return out;
    }

private:
    void validate() const {
        if (verts_.empty())
            throw std::invalid_argument("simplex must have at least one vertex");
        if (verts_.front() < 0)
            throw std::invalid_argument("negative vertex id in simplex " + str());
        for (std::size_t i = 0; i + 1 < verts_.size(); ++i)
            if (verts_[i] >= verts_[i + 1])
                throw std::invalid_argument(
                    "simplex vertices must be strictly increasing: " + str());
    }

    std::vector<VertexId> verts_;
};

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const {
        std::uint64_t h = 1469598103934665603ull;
        for (VertexId v : s.vertices()) {
            h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(v));
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

}  // namespace persw
