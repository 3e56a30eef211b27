#pragma once

#include "palcomb/manacher.hpp"
#include "palcomb/text.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace palcomb {

/// Connected components of the equality graph: positions forced equal by
/// some palindrome. Class ids are assigned in order of each class's
/// smallest position, so class 0 always contains position 1.
struct EqualityClasses {
    int n = 0;
    std::vector<int> class_of;               // class_of[i - 1] for position i
    std::vector<std::vector<int>> classes;   // sorted 1-based positions

    int of(int position) const { return class_of[static_cast<std::size_t>(position - 1)]; }
};

EqualityClasses equality_classes(const PalindromicFingerprint& f);

/// Vertices are equality classes; an edge joins the classes of i and j
/// whenever (i+1, j-1) is a maximal palindrome with both flanks in range.
class RestrictionGraph {
public:
    RestrictionGraph() = default;

    /// Throws Unrealizable if a maximality constraint relates a class to
    /// itself, MalformedInput on a malformed fingerprint.
    static RestrictionGraph build(const PalindromicFingerprint& f);

    int n() const { return classes_.n; }
    std::size_t vertex_count() const { return classes_.classes.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    const EqualityClasses& classes() const { return classes_; }
    const std::vector<int>& positions(int vertex) const { return classes_.classes[static_cast<std::size_t>(vertex)]; }
    int vertex_of(int position) const { return classes_.of(position); }

    /// Sorted pairs (a, b) with a < b.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int vertex) const { return adjacency_[static_cast<std::size_t>(vertex)]; }
    bool adjacent(int a, int b) const;

private:
    EqualityClasses classes_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adjacency_;
};

inline RestrictionGraph build_restriction_graph(const PalindromicFingerprint& f) { return RestrictionGraph::build(f); }

/// color_of[v] is the symbol of vertex v.
struct Coloring {
    std::vector<Symbol> color_of;

    std::size_t color_count() const;

    friend bool operator==(const Coloring&, const Coloring&) = default;
};

bool is_proper(const RestrictionGraph& g, const Coloring& psi);

/// T[i] = psi(class of i). Throws MalformedInput unless psi is total and proper.
Text coloring_to_text(const RestrictionGraph& g, const Coloring& psi);

/// psi(A) = t[min A]. Throws Unrealizable if t is not a reconstruction of
/// the graph's fingerprint (not constant on a class, or equal across an edge).
Coloring text_to_coloring(const RestrictionGraph& g, std::span<const Symbol> t);

/// Visits vertices by smallest position and gives each the least symbol
/// unused by its already-colored neighbors.
Coloring greedy_min_coloring(const RestrictionGraph& g);

/// Raises psi to exactly k colors: while short, the highest-numbered vertex
/// whose color is shared receives the next fresh symbol. Throws Impossible
/// when k is below psi's color count or above the vertex count.
Coloring expand_coloring(const RestrictionGraph& g, const Coloring& psi, std::size_t k);

/// Graphviz rendering; vertex labels are comma-joined positions.
std::string to_dot(const RestrictionGraph& g, const std::optional<Coloring>& psi = std::nullopt);

} // namespace palcomb
