#include "igraphs/reconfig.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "igraphs/domination.hpp"
#include "igraphs/errors.hpp"

namespace igraphs {

namespace {

void require_iset(const Graph& g, const VertexSet& s, const char* op) {
    if (!is_iset(g, s))
        throw std::invalid_argument(std::string(op) + ": vertex set is not an i-set of the graph");
}

// Slide witness between two known i-sets; skips revalidation.
std::optional<SlideStep> slide_between(const Graph& g, std::uint64_t a, std::uint64_t b) {
    const std::uint64_t diff = a ^ b;
    if (std::popcount(diff) != 2) return std::nullopt;
    const std::uint64_t xa = diff & a;
    const std::uint64_t yb = diff & b;
    if (std::popcount(xa) != 1 || std::popcount(yb) != 1) return std::nullopt;
    const int x = std::countr_zero(xa);
    const int y = std::countr_zero(yb);
    if (!g.adjacent(x, y)) return std::nullopt;
    return SlideStep{x, y};
}

std::string iset_label(const Graph& seed, const VertexSet& s) {
    std::string out = "{";
    bool first = true;
    for (int v : s.members()) {
        if (!first) out += ",";
        out += seed.label_or_index(v);
        first = false;
    }
    out += "}";
    return out;
}

}  // namespace

int IGraph::vertex_of(const VertexSet& s) const {
    for (std::size_t v = 0; v < isets.size(); ++v)
        if (isets[v] == s) return static_cast<int>(v);
    return -1;
}

std::optional<SlideStep> token_slide_adjacent(const Graph& g, const VertexSet& s1, const VertexSet& s2) {
    require_iset(g, s1, "token_slide_adjacent");
    require_iset(g, s2, "token_slide_adjacent");
    return slide_between(g, s1.mask(), s2.mask());
}

IGraph build_igraph(const Graph& seed) {
    IGraph ig;
    ig.seed = seed;
    ig.isets = enumerate_isets(seed);
    const auto m = ig.isets.size();
    ig.graph = Graph(m);
    std::vector<std::string> labels(m);
    for (std::size_t v = 0; v < m; ++v) labels[v] = iset_label(seed, ig.isets[v]);
    ig.graph.set_labels(std::move(labels));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b)
            if (auto slide = slide_between(seed, ig.isets[a].mask(), ig.isets[b].mask())) {
                ig.graph.add_edge(static_cast<int>(a), static_cast<int>(b));
                ig.edges.push_back({static_cast<int>(a), static_cast<int>(b), *slide});
            }
    return ig;
}

VertexSet frozen_tokens(const Graph& g, const VertexSet& s) {
    require_iset(g, s, "frozen_tokens");
    VertexSet frozen;
    for (int x : s.members()) {
        bool mobile = false;
        for (int y : g.neighbors(x)) {
            if (s.contains(y)) continue;
            std::uint64_t moved = (s.mask() & ~(std::uint64_t{1} << x)) | (std::uint64_t{1} << y);
            const auto t = VertexSet::from_mask(moved);
            if (is_independent(g, t) && is_dominating(g, t)) {
                mobile = true;
                break;
            }
        }
        if (!mobile) frozen.add(x);
    }
    return frozen;
}

std::size_t degree_in_igraph(const Graph& g, const VertexSet& s) {
    require_iset(g, s, "degree_in_igraph");
    std::set<std::uint64_t> neighbors;
    for (int x : s.members())
        for (int y : g.neighbors(x)) {
            if (s.contains(y)) continue;
            std::uint64_t moved = (s.mask() & ~(std::uint64_t{1} << x)) | (std::uint64_t{1} << y);
            const auto t = VertexSet::from_mask(moved);
            if (is_independent(g, t) && is_dominating(g, t)) neighbors.insert(moved);
        }
    return neighbors.size();
}

std::string to_json(const IGraph& ig) {
    nlohmann::ordered_json doc;
    doc["seed"] = nlohmann::ordered_json::parse(to_json(ig.seed));
    doc["n"] = ig.isets.size();
    auto isets = nlohmann::ordered_json::array();
    for (const auto& s : ig.isets) isets.push_back(s.members());
    doc["isets"] = std::move(isets);
    if (ig.graph.has_labels()) doc["labels"] = ig.graph.labels();
    auto edges = nlohmann::ordered_json::array();
    for (const auto& e : ig.edges) {
        nlohmann::ordered_json rec;
        rec["a"] = e.a;
        rec["b"] = e.b;
        rec["slide"] = {e.slide.from, e.slide.to};
        edges.push_back(std::move(rec));
    }
    doc["edges"] = std::move(edges);
    return doc.dump();
}

}  // namespace igraphs
