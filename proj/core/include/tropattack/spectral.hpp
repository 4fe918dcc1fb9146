#pragma once

#include <set>
#include <utility>
#include <vector>

#include "tropattack/matrix.hpp"

namespace tropattack {

// A cycle of the weighted digraph of a matrix: distinct node indices in walk
// order, arcs nodes[i] -> nodes[i+1] and nodes.back() -> nodes.front().
// Node indices are 0-based throughout the library.
struct CriticalCycle {
    std::vector<int> nodes;

    int length() const { return static_cast<int>(nodes.size()); }
};

struct SpectralSummary {
    TropScalar lambda;
    std::set<std::pair<int, int>> critical_arcs;
    bool irreducible = false;
};

// Maximum cycle mean of the digraph of F (arcs are the finite entries),
// computed exactly by Karp's algorithm per strongly connected component.
// Returns -inf when the digraph is acyclic.
TropScalar max_cycle_mean(const TropMatrix& f);

// Arcs lying on some cycle whose mean equals lambda, where lambda must be
// the maximum cycle mean of f. An arc (i,j) qualifies exactly when
// g_ij + (g+)_ji = 0 for the normalized matrix g = (-lambda) + f.
std::set<std::pair<int, int>> critical_arcs(const TropMatrix& f, const TropScalar& lambda);

// Deterministic cycle extraction: start from the lowest-indexed critical
// node, repeatedly follow the lowest-indexed outgoing critical arc until a
// node repeats, and return the repeated segment.
CriticalCycle find_critical_cycle(const TropMatrix& f);

// True when nodes form a cycle of f (distinct nodes, all arcs finite) whose
// mean weight equals lambda exactly.
bool is_critical_cycle(const TropMatrix& f, const std::vector<int>& nodes,
                       const TropScalar& lambda);

// Node set of the strongly connected component of the critical graph that
// contains the cycle z. Sorted ascending.
std::vector<int> critical_component(const TropMatrix& f, const CriticalCycle& z);

// f+ = f oplus f^2 oplus ... oplus f^d, the all-pairs maximum walk weights.
// Requires max cycle mean <= 0; otherwise the series diverges and
// SpectrumError is thrown.
TropMatrix metric_matrix(const TropMatrix& f);

// f* = I oplus f+.
TropMatrix kleene_star(const TropMatrix& f);

// True when the digraph of f is strongly connected.
bool is_irreducible(const TropMatrix& f);

SpectralSummary analyze_spectrum(const TropMatrix& f);

// Strongly connected components of a digraph given as adjacency lists.
// Components are returned with their node lists sorted ascending.
std::vector<std::vector<int>> scc_components(const std::vector<std::vector<int>>& adjacency);

}  // namespace tropattack
