#pragma once

#include <optional>
#include <string>
#include <vector>

#include "igraphs/graph.hpp"

namespace igraphs {

// A token slide: the token leaves seed vertex `from` and enters `to` along
// a seed edge.
struct SlideStep {
    int from = -1;
    int to = -1;
    friend bool operator==(const SlideStep&, const SlideStep&) = default;
};

struct IGraphEdge {
    int a = 0;
    int b = 0;
    SlideStep slide;  // maps isets[a] to isets[b]
    friend bool operator==(const IGraphEdge&, const IGraphEdge&) = default;
};

// The i-graph of a seed graph: one vertex per i-set, edges between i-sets
// related by a single token slide, each edge carrying its slide witness.
struct IGraph {
    Graph seed;
    Graph graph;                   // vertex v corresponds to isets[v]
    std::vector<VertexSet> isets;  // canonical enumeration order
    std::vector<IGraphEdge> edges; // sorted by (a, b)

    int vertex_of(const VertexSet& s) const;  // -1 when absent
};

// The slide witness when s1 and s2 differ by one token moved along a seed
// edge; empty otherwise. Both arguments must be i-sets of g.
std::optional<SlideStep> token_slide_adjacent(const Graph& g, const VertexSet& s1, const VertexSet& s2);

IGraph build_igraph(const Graph& seed);

// Members of s with no legal slide.
VertexSet frozen_tokens(const Graph& g, const VertexSet& s);

// Number of i-sets adjacent to s under the token slide relation.
std::size_t degree_in_igraph(const Graph& g, const VertexSet& s);

// JSON export: seed document, i-sets, vertex labels, edges with slide
// witnesses.
std::string to_json(const IGraph& ig);

}  // namespace igraphs
