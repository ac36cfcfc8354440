#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace igraphs {

// Subset of the vertices of a seed graph. Seed graphs are capped at 64
// vertices so a subset fits in one machine word; members are reported as a
// strictly increasing index list.
class VertexSet {
public:
    static constexpr int max_vertices = 64;

    VertexSet() = default;

    static VertexSet from_mask(std::uint64_t mask) {
        VertexSet s;
        s.bits_ = mask;
        return s;
    }
    static VertexSet from_members(std::span<const int> members);
    static VertexSet from_members(std::initializer_list<int> members);

    bool contains(int v) const { return v >= 0 && v < max_vertices && ((bits_ >> v) & 1u); }
    void add(int v);
    void remove(int v);

    std::size_t size() const;
    bool empty() const { return bits_ == 0; }
    std::uint64_t mask() const { return bits_; }
    std::vector<int> members() const;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    // Lexicographic order of the sorted member lists.
    bool lex_less(const VertexSet& other) const;

private:
    std::uint64_t bits_ = 0;
};

// Undirected simple graph with optional per-vertex display labels.
// Adjacency lists are kept sorted; parallel edges are silently ignored and
// self-loops rejected.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t order);

    std::size_t order() const { return adjacency_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    void add_edge(int u, int v);
    bool adjacent(int u, int v) const;
    const std::vector<int>& neighbors(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size()); }
    std::vector<int> degrees() const;

    // Edges as (u, v) pairs with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    bool has_labels() const { return !labels_.empty(); }
    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> labels);
    std::string label_or_index(int v) const;

    // Neighborhood bit masks; only valid for graphs on <= 64 vertices.
    std::uint64_t neighborhood_mask(int v) const { return nbr_mask_[static_cast<std::size_t>(v)]; }
    std::uint64_t closed_neighborhood_mask(int v) const {
        return nbr_mask_[static_cast<std::size_t>(v)] | (std::uint64_t{1} << v);
    }
    std::uint64_t full_mask() const;

    bool is_connected() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<int>> adjacency_;
    std::vector<std::uint64_t> nbr_mask_;  // maintained while order <= 64
    std::vector<std::string> labels_;      // empty when unlabeled
    std::size_t edge_count_ = 0;
};

// Standard generators. Path vertices carry the 1-based labels v_1..v_n,
// cycle vertices the 0-based labels v_0..v_{n-1}.
Graph path(std::size_t n);
Graph cycle(std::size_t n);
Graph from_edge_list(std::size_t n, std::span<const std::pair<int, int>> edges);

bool is_independent(const Graph& g, const VertexSet& s);
bool is_dominating(const Graph& g, const VertexSet& s);

// JSON document: {"n": <int>, "edges": [[u,v],...], "labels": [...] optional}.
std::string to_json(const Graph& g);
Graph from_json(std::string_view text);

// Undirected DOT document; one node statement per vertex, one edge per line.
std::string to_dot(const Graph& g);

}  // namespace igraphs
