#pragma once

#include <functional>
#include <string>
#include <vector>

#include "shiftlab/symbolic/word.hpp"

namespace shiftlab {

/*
 * Directed labeled multigraph presenting a sofic shift: points of the
 * shift are the label sequences of infinite walks. There is no initial
 * state; walks may start at any vertex.
 */
struct LabeledGraph {
    struct Edge {
        int from = 0;
        int to = 0;
        Symbol label = 0;
        auto operator<=>(const Edge&) const = default;
    };

    Alphabet alphabet;
    int vertex_count = 0;
    std::vector<std::string> vertex_names;  // optional, for dot output
    std::vector<Edge> edges;

    LabeledGraph() = default;
    LabeledGraph(Alphabet a, int n) : alphabet(a), vertex_count(n) {}

    void add_edge(int from, int to, Symbol label);
    std::vector<Edge> out_edges(int v) const;

    /// Every vertex must be able to continue an infinite walk.
    bool every_vertex_extends() const;

    bool right_resolving() const;
    bool strongly_connected() const;
    std::vector<std::vector<int>> scc_components() const;  // Tarjan order

    /// Successor set of S under one labeled step.
    std::vector<int> step(const std::vector<int>& states, Symbol a) const;

    std::string to_dot(const std::string& name = "cover") const;

    std::string vertex_name(int v) const;
};

/// Subset construction from the all-vertices state; right-resolving,
/// same label language. Vertex names record the subsets.
LabeledGraph determinize(const LabeledGraph& g);

/// Merges vertices with equal follower sets (Moore refinement over the
/// partial deterministic transition structure). Input must be
/// right-resolving.
LabeledGraph follower_merge(const LabeledGraph& g);

/// Minimal right-resolving presentation of the irreducible sofic shift
/// presented by g: determinize, merge followers, restrict to the unique
/// terminal irreducible component. Throws when no unique component
/// exists or its language deviates from the input (reducible shift).
LabeledGraph fischer_cover(const LabeledGraph& g, size_t language_check_horizon = 8);

/// Label language restricted to length n (all start vertices).
std::vector<Word> graph_language(const LabeledGraph& g, size_t n);

/// Canonical golden-mean and even-shift covers used across tests.
LabeledGraph golden_mean_cover();
LabeledGraph even_shift_cover();

}  // namespace shiftlab
