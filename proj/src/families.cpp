#include "igraphs/families.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "igraphs/domination.hpp"
#include "igraphs/errors.hpp"

namespace igraphs {

namespace {

int mod(long long x, std::size_t n) {
    const auto m = static_cast<long long>(n);
    return static_cast<int>(((x % m) + m) % m);
}

void require_cycle_residue(std::size_t n, const char* op) {
    if (n < 4 || n % 3 != 1)
        throw std::invalid_argument(std::string(op) + ": n must be congruent to 1 modulo 3 and at least 4");
}

// Checked 64-bit addition; the generating-function oracle must stay exact.
std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out = 0;
    if (__builtin_add_overflow(a, b, &out))
        throw std::overflow_error("gf_cycle_coefficient: coefficient exceeds 64 bits");
    return out;
}

using Poly = std::vector<std::uint64_t>;  // coefficient of x^i at index i

Poly mul_one_plus_x(const Poly& p) {
    Poly out(p.size() + 1, 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
        out[i] = checked_add(out[i], p[i]);
        out[i + 1] = checked_add(out[i + 1], p[i]);
    }
    return out;
}

Poly one_plus_x_power(std::size_t m) {
    Poly p{1};
    for (std::size_t i = 0; i < m; ++i) p = mul_one_plus_x(p);
    return p;
}

}  // namespace

CycleLabel make_cycle_label(std::size_t n, long long x, long long y) {
    int a = mod(x, n);
    int b = mod(y, n);
    if (a > b) std::swap(a, b);
    return CycleLabel{a, b};
}

bool is_valid_cycle_label(std::size_t n, CycleLabel label) {
    if (n < 4 || n % 3 != 1) return false;
    if (label.a < 0 || label.b >= static_cast<int>(n) || label.a >= label.b) return false;
    return (label.b - label.a) % 3 == 2;
}

std::vector<CycleLabel> all_cycle_labels(std::size_t n) {
    require_cycle_residue(n, "all_cycle_labels");
    std::vector<CycleLabel> labels;
    for (int a = 0; a < static_cast<int>(n); ++a)
        for (int b = a + 2; b < static_cast<int>(n); b += 3) labels.push_back(CycleLabel{a, b});
    std::sort(labels.begin(), labels.end());
    return labels;
}

std::vector<CycleLabel> cycle_label_neighbors(std::size_t n, CycleLabel label) {
    require_cycle_residue(n, "cycle_label_neighbors");
    if (!is_valid_cycle_label(n, label))
        throw std::invalid_argument("cycle_label_neighbors: invalid label");
    const int d = label.b - label.a;
    std::vector<CycleLabel> out;
    if (d == 2 || d == static_cast<int>(n) - 2) {
        // Orient so that l = j + 2 (mod n); the pair slides as a block.
        const int j = d == 2 ? label.a : label.b;
        const int l = d == 2 ? label.b : label.a;
        out.push_back(make_cycle_label(n, j, l + 3));
        out.push_back(make_cycle_label(n, j - 3, l));
    } else {
        out.push_back(make_cycle_label(n, label.a, label.b + 3));
        out.push_back(make_cycle_label(n, label.a, label.b - 3));
        out.push_back(make_cycle_label(n, label.a + 3, label.b));
        out.push_back(make_cycle_label(n, label.a - 3, label.b));
    }
    std::erase_if(out, [n](CycleLabel l) { return !is_valid_cycle_label(n, l); });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string cycle_label_text(CycleLabel label) {
    return "{" + std::to_string(label.a) + "," + std::to_string(label.b) + "}";
}

std::uint64_t count_path_isets(std::size_t n) {
    if (n == 0) throw std::invalid_argument("count_path_isets: n must be >= 1");
    const std::uint64_t k = n / 3;
    switch (n % 3) {
        case 0: return 1;
        case 1: return (k + 2) * (k + 1) / 2;
        default: return k + 2;
    }
}

std::uint64_t count_cycle_isets(std::size_t n) {
    if (n < 3) throw std::invalid_argument("count_cycle_isets: n must be >= 3");
    const std::uint64_t k = n / 3;
    switch (n % 3) {
        case 0: return 3;
        case 1: return k * (3 * k + 1) / 2;
        default: return n;
    }
}

std::uint64_t gf_cycle_coefficient(std::size_t t, std::size_t r) {
    if (t < 2) throw std::invalid_argument("gf_cycle_coefficient: t must be >= 2");
    // 2x^{t-1}(1+x)^{t-1} + x^t(1+x)^{t-2}
    const Poly p1 = one_plus_x_power(t - 1);
    const Poly p2 = one_plus_x_power(t - 2);
    std::uint64_t coeff = 0;
    if (r >= t - 1 && r - (t - 1) < p1.size())
        coeff = checked_add(coeff, checked_add(p1[r - (t - 1)], p1[r - (t - 1)]));
    if (r >= t && r - t < p2.size()) coeff = checked_add(coeff, p2[r - t]);
    return coeff;
}

Graph worn_lattice(std::size_t k) {
    if (k == 0) throw std::invalid_argument("worn_lattice: k must be >= 1");
    const int side = static_cast<int>(k) + 2;
    std::vector<std::pair<int, int>> verts;
    for (int i = 1; i <= side; ++i)
        for (int j = i + 1; j <= side; ++j) verts.emplace_back(i, j);
    std::map<std::pair<int, int>, int> index;
    for (std::size_t v = 0; v < verts.size(); ++v) index[verts[v]] = static_cast<int>(v);
    Graph g(verts.size());
    std::vector<std::string> labels;
    labels.reserve(verts.size());
    for (auto [i, j] : verts)
        labels.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
    g.set_labels(std::move(labels));
    // Grid adjacency: one coordinate differs by exactly 1, the other is equal.
    for (auto [i, j] : verts) {
        const int v = index[{i, j}];
        for (auto [di, dj] : {std::pair{1, 0}, std::pair{0, 1}}) {
            auto it = index.find({i + di, j + dj});
            if (it != index.end()) g.add_edge(v, it->second);
        }
    }
    return g;
}

Graph bracelet(std::size_t k) {
    if (k == 0) throw std::invalid_argument("bracelet: k must be >= 1");
    const std::size_t n = 3 * k + 1;
    const auto labels = all_cycle_labels(n);
    std::map<CycleLabel, int> index;
    for (std::size_t v = 0; v < labels.size(); ++v) index[labels[v]] = static_cast<int>(v);
    Graph g(labels.size());
    std::vector<std::string> texts;
    texts.reserve(labels.size());
    for (auto l : labels) texts.push_back(cycle_label_text(l));
    g.set_labels(std::move(texts));
    for (auto l : labels)
        for (auto nb : cycle_label_neighbors(n, l))
            if (index[l] < index[nb]) g.add_edge(index[l], index[nb]);
    return g;
}

Graph predicted_path_igraph(std::size_t n) {
    if (n == 0) throw std::invalid_argument("predicted_path_igraph: n must be >= 1");
    const std::size_t k = n / 3;
    switch (n % 3) {
        case 0: return Graph(1);
        case 1: {
            if (k == 0) {
                Graph g(1);
                g.set_labels({"(1,2)"});
                return g;
            }
            return worn_lattice(k);
        }
        default: {
            Graph g(k + 2);
            for (std::size_t i = 0; i + 1 < k + 2; ++i)
                g.add_edge(static_cast<int>(i), static_cast<int>(i + 1));
            return g;
        }
    }
}

Graph predicted_cycle_igraph(std::size_t n) {
    if (n < 3) throw std::invalid_argument("predicted_cycle_igraph: n must be >= 3");
    const std::size_t k = n / 3;
    switch (n % 3) {
        case 0: {
            if (n == 3) {
                Graph g(3);
                g.add_edge(0, 1);
                g.add_edge(1, 2);
                g.add_edge(0, 2);
                return g;
            }
            return Graph(3);
        }
        case 1: return bracelet(k);
        default: {
            Graph g(n);
            for (std::size_t i = 0; i < n; ++i)
                g.add_edge(static_cast<int>(i), static_cast<int>((i + 1) % n));
            return g;
        }
    }
}

CycleLabel cycle_iset_label(std::size_t n, const VertexSet& s) {
    require_cycle_residue(n, "cycle_iset_label");
    const Graph g = cycle(n);
    if (!is_iset(g, s)) throw std::invalid_argument("cycle_iset_label: vertex set is not an i-set");
    std::vector<int> doubly;
    for (int v = 0; v < static_cast<int>(n); ++v) {
        if (s.contains(v)) continue;
        if (s.contains(mod(v - 1, n)) && s.contains(mod(v + 1, n))) doubly.push_back(v);
    }
    if (doubly.size() != 2)
        throw std::logic_error("cycle_iset_label: expected exactly two doubly dominated vertices");
    return make_cycle_label(n, doubly[0], doubly[1]);
}

VertexSet label_to_iset(std::size_t n, CycleLabel label) {
    require_cycle_residue(n, "label_to_iset");
    if (!is_valid_cycle_label(n, label)) throw std::invalid_argument("label_to_iset: invalid label");
    VertexSet s;
    // Walk clockwise from each doubly dominated vertex in steps of three.
    const int d_ab = label.b - label.a;
    for (int x = 1; x < d_ab; x += 3) s.add(mod(label.a + x, n));
    const int d_ba = static_cast<int>(n) - d_ab;
    for (int x = 1; x < d_ba; x += 3) s.add(mod(label.b + x, n));
    return s;
}

ISetType iset_type(std::size_t n, CycleLabel label) {
    require_cycle_residue(n, "iset_type");
    if (!is_valid_cycle_label(n, label)) throw std::invalid_argument("iset_type: invalid label");
    const int d = label.b - label.a;
    const int m = static_cast<int>(n);
    if (d == 2 || d == m - 2) return ISetType::type1;
    if (d == 5 || d == m - 5) return ISetType::type2a;
    return ISetType::type2b;
}

}  // namespace igraphs
