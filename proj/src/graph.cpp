#include "igraphs/graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "igraphs/errors.hpp"

namespace igraphs {

VertexSet VertexSet::from_members(std::span<const int> members) {
    VertexSet s;
    for (int v : members) s.add(v);
    return s;
}

VertexSet VertexSet::from_members(std::initializer_list<int> members) {
    return from_members(std::span<const int>(members.begin(), members.size()));
}

void VertexSet::add(int v) {
    if (v < 0 || v >= max_vertices)
        throw std::invalid_argument("VertexSet: vertex index " + std::to_string(v) + " out of range");
    bits_ |= std::uint64_t{1} << v;
}

void VertexSet::remove(int v) {
    if (v >= 0 && v < max_vertices) bits_ &= ~(std::uint64_t{1} << v);
}

std::size_t VertexSet::size() const { return static_cast<std::size_t>(std::popcount(bits_)); }

std::vector<int> VertexSet::members() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::uint64_t m = bits_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
}

bool VertexSet::lex_less(const VertexSet& other) const {
    if (bits_ == other.bits_) return false;
    // The set containing the lowest differing vertex compares smaller.
    int d = std::countr_zero(bits_ ^ other.bits_);
    return (bits_ >> d) & 1u;
}

Graph::Graph(std::size_t order) : adjacency_(order) {
    if (order <= VertexSet::max_vertices) nbr_mask_.assign(order, 0);
}

void Graph::add_edge(int u, int v) {
    const auto n = static_cast<int>(order());
    if (u < 0 || v < 0 || u >= n || v >= n)
        throw std::invalid_argument("add_edge: endpoint out of range");
    if (u == v) throw std::invalid_argument("add_edge: self-loops are not allowed");
    auto& au = adjacency_[static_cast<std::size_t>(u)];
    auto pos = std::lower_bound(au.begin(), au.end(), v);
    if (pos != au.end() && *pos == v) return;  // duplicate, ignore
    au.insert(pos, v);
    auto& av = adjacency_[static_cast<std::size_t>(v)];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    if (!nbr_mask_.empty()) {
        nbr_mask_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        nbr_mask_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }
    ++edge_count_;
}

bool Graph::adjacent(int u, int v) const {
    if (!nbr_mask_.empty())
        return (nbr_mask_[static_cast<std::size_t>(u)] >> v) & 1u;
    const auto& au = adjacency_[static_cast<std::size_t>(u)];
    return std::binary_search(au.begin(), au.end(), v);
}

std::vector<int> Graph::degrees() const {
    std::vector<int> d(order());
    for (std::size_t v = 0; v < order(); ++v) d[v] = static_cast<int>(adjacency_[v].size());
    return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (std::size_t u = 0; u < order(); ++u)
        for (int v : adjacency_[u])
            if (static_cast<int>(u) < v) out.emplace_back(static_cast<int>(u), v);
    return out;
}

void Graph::set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && labels.size() != order())
        throw std::invalid_argument("set_labels: label count must equal graph order");
    labels_ = std::move(labels);
}

std::string Graph::label_or_index(int v) const {
    if (has_labels()) return labels_[static_cast<std::size_t>(v)];
    return std::to_string(v);
}

std::uint64_t Graph::full_mask() const {
    if (order() > VertexSet::max_vertices)
        throw too_large_error("graph exceeds " + std::to_string(VertexSet::max_vertices) + " vertices");
    if (order() == VertexSet::max_vertices) return ~std::uint64_t{0};
    return (std::uint64_t{1} << order()) - 1;
}

bool Graph::is_connected() const {
    if (order() == 0) return true;
    std::vector<char> seen(order(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    std::size_t visited = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adjacency_[static_cast<std::size_t>(v)])
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++visited;
                stack.push_back(w);
            }
    }
    return visited == order();
}

Graph path(std::size_t n) {
    if (n == 0) throw std::invalid_argument("path: n must be >= 1");
    Graph g(n);
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = "v_" + std::to_string(i + 1);
    for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(static_cast<int>(i), static_cast<int>(i + 1));
    g.set_labels(std::move(labels));
    return g;
}

Graph cycle(std::size_t n) {
    if (n < 3) throw std::invalid_argument("cycle: n must be >= 3");
    Graph g(n);
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = "v_" + std::to_string(i);
    for (std::size_t i = 0; i < n; ++i)
        g.add_edge(static_cast<int>(i), static_cast<int>((i + 1) % n));
    g.set_labels(std::move(labels));
    return g;
}

Graph from_edge_list(std::size_t n, std::span<const std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= static_cast<int>(n) || v >= static_cast<int>(n))
            throw std::invalid_argument("from_edge_list: invalid edge (" + std::to_string(u) + "," +
                                        std::to_string(v) + "): endpoint out of range");
        if (u == v)
            throw std::invalid_argument("from_edge_list: invalid edge (" + std::to_string(u) + "," +
                                        std::to_string(v) + "): self-loop");
        g.add_edge(u, v);
    }
    return g;
}

namespace {

void check_set_fits(const Graph& g, const VertexSet& s, const char* op) {
    if ((s.mask() & ~g.full_mask()) != 0)
        throw std::invalid_argument(std::string(op) + ": vertex set contains indices beyond graph order");
}

}  // namespace

bool is_independent(const Graph& g, const VertexSet& s) {
    check_set_fits(g, s, "is_independent");
    for (std::uint64_t m = s.mask(); m != 0; m &= m - 1) {
        int v = std::countr_zero(m);
        if (g.neighborhood_mask(v) & s.mask()) return false;
    }
    return true;
}

bool is_dominating(const Graph& g, const VertexSet& s) {
    check_set_fits(g, s, "is_dominating");
    std::uint64_t covered = 0;
    for (std::uint64_t m = s.mask(); m != 0; m &= m - 1) {
        int v = std::countr_zero(m);
        covered |= g.closed_neighborhood_mask(v);
    }
    return covered == g.full_mask();
}

std::string to_json(const Graph& g) {
    nlohmann::ordered_json doc;
    doc["n"] = g.order();
    auto edges = nlohmann::ordered_json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    doc["edges"] = std::move(edges);
    if (g.has_labels()) doc["labels"] = g.labels();
    return doc.dump();
}

Graph from_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(e.what(), e.byte);
    }
    if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_unsigned())
        throw parse_error("graph document requires a non-negative integer field \"n\"");
    const auto n = doc["n"].get<std::size_t>();
    Graph g(n);
    if (doc.contains("edges")) {
        if (!doc["edges"].is_array()) throw parse_error("\"edges\" must be an array of [u,v] pairs");
        for (const auto& e : doc["edges"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
                throw parse_error("\"edges\" entries must be [u,v] integer pairs");
            const auto u = e[0].get<long long>();
            const auto v = e[1].get<long long>();
            if (u < 0 || v < 0 || u >= static_cast<long long>(n) || v >= static_cast<long long>(n))
                throw parse_error("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") has an endpoint outside 0.." + std::to_string(n ? n - 1 : 0));
            if (u == v)
                throw parse_error("edge (" + std::to_string(u) + "," + std::to_string(v) + ") is a self-loop");
            g.add_edge(static_cast<int>(u), static_cast<int>(v));
        }
    }
    if (doc.contains("labels")) {
        if (!doc["labels"].is_array()) throw parse_error("\"labels\" must be an array of strings");
        std::vector<std::string> labels;
        labels.reserve(doc["labels"].size());
        for (const auto& l : doc["labels"]) {
            if (!l.is_string()) throw parse_error("\"labels\" must be an array of strings");
            labels.push_back(l.get<std::string>());
        }
        if (labels.size() != n) throw parse_error("\"labels\" must list exactly n strings");
        g.set_labels(std::move(labels));
    }
    return g;
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

}  // namespace

std::string to_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (std::size_t v = 0; v < g.order(); ++v) {
        out << "  " << v;
        if (g.has_labels()) out << " [label=\"" << dot_escape(g.labels()[v]) << "\"]";
        out << ";\n";
    }
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace igraphs
