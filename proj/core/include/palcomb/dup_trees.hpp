#pragma once

#include "palcomb/compact_codec.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace palcomb {

using BigInt = boost::multiprecision::cpp_int;

/// Duplicate genes[start .. start+len-1] (1-based) in tandem.
struct DuplicationEvent {
    int start = 1;
    int len = 1;

    int last() const { return start + len - 1; }

    friend bool operator==(const DuplicationEvent&, const DuplicationEvent&) = default;
};

/// Events in application order. A history is valid when every event fits
/// the array it is applied to and consecutive events never have the later
/// block entirely left of the earlier one (last of next >= start of previous).
struct DuplicationHistory {
    std::vector<DuplicationEvent> events;

    int leaf_count() const;

    friend bool operator==(const DuplicationHistory&, const DuplicationHistory&) = default;
};

bool is_valid_history(const DuplicationHistory& h);

/// Rooted binary tree grown from one ancestral gene. Nodes live in an arena;
/// node 0 is the root. Every internal node has two children.
class DupTree {
public:
    struct Node {
        int left = -1;
        int right = -1;
        int parent = -1;

        bool is_leaf() const { return left < 0; }
    };

    DupTree();

    /// Builds a tree from explicit nodes and the left-to-right leaf order.
    /// Throws MalformedInput unless the structure is a full binary tree
    /// rooted at node 0 whose leaf set is exactly `leaf_order`.
    DupTree(std::vector<Node> nodes, std::vector<int> leaf_order);

    const std::vector<Node>& nodes() const { return nodes_; }
    const Node& node(int id) const { return nodes_[static_cast<std::size_t>(id)]; }
    int root() const { return 0; }

    /// Node ids of the leaves in final gene-array order.
    const std::vector<int>& leaves() const { return leaf_order_; }
    std::size_t leaf_count() const { return leaf_order_.size(); }

    /// 1-based leaf position of every leaf node; 0 for internal nodes.
    std::vector<int> leaf_positions() const;

    /// Applies one event to the current leaf array. Throws MalformedInput if
    /// the block is out of range.
    void apply(const DuplicationEvent& e);

    /// Indented outline: one node per line, leaves show their position.
    std::string to_text() const;
    std::string to_dot() const;

private:
    friend std::vector<int> apply_event(const std::vector<int>& genes, const DuplicationEvent& e, DupTree& tree);

    int add_node(int parent);

    std::vector<Node> nodes_;
    std::vector<int> leaf_order_;
};

/// Replaces the block of `genes` (node ids) with its left copies followed by
/// its right copies, adding the new nodes to `tree`.
std::vector<int> apply_event(const std::vector<int>& genes, const DuplicationEvent& e, DupTree& tree);

/// Throws MalformedInput for an invalid history.
DupTree replay(const DuplicationHistory& h);

/// The unique ordered event list that regrows the tree, found by repeatedly
/// peeling off the last event. Throws MalformedInput if the tree is not a
/// duplication tree.
DuplicationHistory decompose(const DupTree& t);

/// Concatenates (last, ..., start) for every event. Throws MalformedInput if
/// the history is invalid.
CounterArray encode_events(const DuplicationHistory& h);

/// Starts a new event wherever the next entry fails to drop by exactly one.
DuplicationHistory decode_counter(const CounterArray& c);

/// Number of rooted duplication trees with n leaves.
BigInt r_count(int n);

/// Number of counter arrays of length n.
BigInt sigma_count(int n);

/// Uniform sampler over counter arrays of one length, driven by a table of
/// completion counts that is built once and then only read.
class CounterSampler {
public:
    explicit CounterSampler(int n);

    int length() const { return n_; }
    const BigInt& total() const { return total_; }

    CounterArray sample(std::mt19937_64& rng) const;

private:
    // completions_[i][v]: number of valid suffixes after a[i+1] = v.
    int n_;
    std::vector<std::vector<BigInt>> completions_;
    BigInt total_;
};

/// Every counter array of length n in lexicographic order.
std::vector<CounterArray> all_counter_arrays(int n);

} // namespace palcomb
