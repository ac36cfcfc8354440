#pragma once

#include <cstdint>
#include <vector>

#include "igraphs/graph.hpp"

namespace igraphs {

// Identifier of an i-set of C_{3k+1}: the unordered pair of doubly
// dominated vertices, stored canonically with a < b.
struct CycleLabel {
    int a = 0;
    int b = 0;
    friend bool operator==(const CycleLabel&, const CycleLabel&) = default;
    friend auto operator<=>(const CycleLabel&, const CycleLabel&) = default;
};

enum class ISetType { type1, type2a, type2b };

// Canonicalize an unordered residue pair modulo n.
CycleLabel make_cycle_label(std::size_t n, long long x, long long y);

// A pair {a,b} is a valid label iff (b - a) mod n lies in {2, 5, ..., 3k-1}.
bool is_valid_cycle_label(std::size_t n, CycleLabel label);

// All valid labels for C_n (n = 3k+1), sorted; this is the bracelet vertex
// order.
std::vector<CycleLabel> all_cycle_labels(std::size_t n);

// The label-arithmetic neighbor formula: two targets for pairs at offset
// +-2, four otherwise, filtered to valid labels.
std::vector<CycleLabel> cycle_label_neighbors(std::size_t n, CycleLabel label);

std::string cycle_label_text(CycleLabel label);

// Closed-form i-set counts.
std::uint64_t count_path_isets(std::size_t n);
std::uint64_t count_cycle_isets(std::size_t n);

// Coefficient of x^r in 2x^{t-1}(1+x)^{t-1} + x^t(1+x)^{t-2}, by exact
// integer polynomial expansion. Counting oracle for count_cycle_isets.
std::uint64_t gf_cycle_coefficient(std::size_t t, std::size_t r);

// Induced subgraph of the integer lattice on pairs (i,j), 1 <= i < j <= k+2:
// the i-graph of P_{3k+1}.
Graph worn_lattice(std::size_t k);

// Bracelet graph on all valid labels modulo 3k+1: the i-graph of C_{3k+1}.
Graph bracelet(std::size_t k);

Graph predicted_path_igraph(std::size_t n);
Graph predicted_cycle_igraph(std::size_t n);

// The two doubly dominated vertices of C_n - s (n = 3k+1).
CycleLabel cycle_iset_label(std::size_t n, const VertexSet& s);

// Inverse of cycle_iset_label.
VertexSet label_to_iset(std::size_t n, CycleLabel label);

// type1 iff offset +-2, type2a iff +-5, type2b otherwise (mod n).
ISetType iset_type(std::size_t n, CycleLabel label);

}  // namespace igraphs
