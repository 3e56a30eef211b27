#include "palcomb/dup_trees.hpp"

#include "palcomb/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace palcomb {

int DuplicationHistory::leaf_count() const
{
    int leaves = 1;
    for (const auto& e : events)
        leaves += e.len;
    return leaves;
}

bool is_valid_history(const DuplicationHistory& h)
{
    int size = 1;
    for (std::size_t i = 0; i < h.events.size(); ++i) {
        const auto& e = h.events[i];
        if (e.start < 1 || e.len < 1 || e.last() > size)
            return false;
        if (i > 0 && e.last() < h.events[i - 1].start)
            return false;
        size += e.len;
    }
    return true;
}

DupTree::DupTree() : nodes_(1), leaf_order_{0} {}

DupTree::DupTree(std::vector<Node> nodes, std::vector<int> leaf_order)
    : nodes_(std::move(nodes)), leaf_order_(std::move(leaf_order))
{
    const auto count = nodes_.size();
    if (count == 0)
        throw MalformedInput("tree has no nodes");
    if (nodes_[0].parent != -1)
        throw MalformedInput("node 0 must be the root");
    auto valid_id = [count](int id) { return id >= 0 && static_cast<std::size_t>(id) < count; };

    std::vector<bool> seen(count, false);
    std::vector<int> stack{0};
    std::size_t leaves = 0;
    while (!stack.empty()) {
        const int id = stack.back();
        stack.pop_back();
        if (seen[static_cast<std::size_t>(id)])
            throw MalformedInput("tree contains a cycle or shared node");
        seen[static_cast<std::size_t>(id)] = true;
        const Node& nd = nodes_[static_cast<std::size_t>(id)];
        if ((nd.left < 0) != (nd.right < 0))
            throw MalformedInput("internal nodes need exactly two children");
        if (nd.is_leaf()) {
            ++leaves;
            continue;
        }
        for (int child : {nd.left, nd.right}) {
            if (!valid_id(child) || nodes_[static_cast<std::size_t>(child)].parent != id)
                throw MalformedInput("inconsistent parent/child links");
            stack.push_back(child);
        }
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end())
        throw MalformedInput("tree has unreachable nodes");
    if (leaf_order_.size() != leaves)
        throw MalformedInput("leaf order does not list every leaf exactly once");
    std::vector<bool> listed(count, false);
    for (int id : leaf_order_) {
        if (!valid_id(id) || !nodes_[static_cast<std::size_t>(id)].is_leaf() || listed[static_cast<std::size_t>(id)])
            throw MalformedInput("leaf order does not list every leaf exactly once");
        listed[static_cast<std::size_t>(id)] = true;
    }
}

int DupTree::add_node(int parent)
{
    nodes_.push_back(Node{-1, -1, parent});
    return static_cast<int>(nodes_.size() - 1);
}

std::vector<int> DupTree::leaf_positions() const
{
    std::vector<int> pos(nodes_.size(), 0);
    for (std::size_t i = 0; i < leaf_order_.size(); ++i)
        pos[static_cast<std::size_t>(leaf_order_[i])] = static_cast<int>(i + 1);
    return pos;
}

std::vector<int> apply_event(const std::vector<int>& genes, const DuplicationEvent& e, DupTree& tree)
{
    if (e.start < 1 || e.len < 1 || static_cast<std::size_t>(e.last()) > genes.size())
        throw MalformedInput("duplication block [" + std::to_string(e.start) + ", " + std::to_string(e.last())
                             + "] outside a gene array of length " + std::to_string(genes.size()));
    const auto first = genes.begin() + (e.start - 1);
    std::vector<int> out(genes.begin(), first);
    std::vector<int> right;
    for (auto it = first; it != first + e.len; ++it) {
        const int g = *it;
        const int lc = tree.add_node(g);
        const int rc = tree.add_node(g);
        tree.nodes_[static_cast<std::size_t>(g)].left = lc;
        tree.nodes_[static_cast<std::size_t>(g)].right = rc;
        out.push_back(lc);
        right.push_back(rc);
    }
    out.insert(out.end(), right.begin(), right.end());
    out.insert(out.end(), first + e.len, genes.end());
    return out;
}

void DupTree::apply(const DuplicationEvent& e) { leaf_order_ = apply_event(leaf_order_, e, *this); }

namespace {

void outline(const DupTree& t, int id, int depth, const std::vector<int>& pos, std::ostringstream& os)
{
    os << std::string(static_cast<std::size_t>(2 * depth), ' ');
    const auto& nd = t.node(id);
    if (nd.is_leaf()) {
        os << "leaf " << pos[static_cast<std::size_t>(id)] << '\n';
        return;
    }
    os << "node\n";
    outline(t, nd.left, depth + 1, pos, os);
    outline(t, nd.right, depth + 1, pos, os);
}

} // namespace

std::string DupTree::to_text() const
{
    std::ostringstream os;
    outline(*this, root(), 0, leaf_positions(), os);
    return os.str();
}

std::string DupTree::to_dot() const
{
    const auto pos = leaf_positions();
    std::ostringstream os;
    os << "digraph duplication_tree {\n";
    for (std::size_t id = 0; id < nodes_.size(); ++id) {
        if (nodes_[id].is_leaf())
            os << "  n" << id << " [shape=plaintext, label=\"" << pos[id] << "\"];\n";
        else
            os << "  n" << id << " [shape=circle, label=\"\"];\n";
    }
    for (std::size_t id = 0; id < nodes_.size(); ++id) {
        if (!nodes_[id].is_leaf()) {
            os << "  n" << id << " -> n" << nodes_[id].left << " [label=\"l\"];\n";
            os << "  n" << id << " -> n" << nodes_[id].right << " [label=\"r\"];\n";
        }
    }
    os << "}\n";
    return os.str();
}

DupTree replay(const DuplicationHistory& h)
{
    if (!is_valid_history(h))
        throw MalformedInput("duplication history is out of range or not ordered");
    DupTree t;
    for (const auto& e : h.events)
        t.apply(e);
    return t;
}

namespace {

struct LowNode {
    int id;
    int lc_pos;
    int rc_pos;
};

int find_root(std::vector<int>& parent, int x)
{
    while (parent[static_cast<std::size_t>(x)] != x)
        x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
}

} // namespace

DuplicationHistory decompose(const DupTree& t)
{
    std::vector<DupTree::Node> nodes = t.nodes();
    std::vector<int> leaves = t.leaves();
    std::vector<DuplicationEvent> reversed;

    while (leaves.size() > 1) {
        std::vector<int> pos(nodes.size(), 0);
        for (std::size_t i = 0; i < leaves.size(); ++i)
            pos[static_cast<std::size_t>(leaves[i])] = static_cast<int>(i + 1);

        std::vector<LowNode> low;
        for (std::size_t id = 0; id < nodes.size(); ++id) {
            const auto& nd = nodes[id];
            if (nd.is_leaf() || !nodes[static_cast<std::size_t>(nd.left)].is_leaf()
                || !nodes[static_cast<std::size_t>(nd.right)].is_leaf())
                continue;
            low.push_back({static_cast<int>(id), pos[static_cast<std::size_t>(nd.left)],
                           pos[static_cast<std::size_t>(nd.right)]});
        }
        if (low.empty())
            throw MalformedInput("tree has leaves but no low node");

        // Low nodes created by one event have interleaved children.
        std::vector<int> block_of(low.size());
        std::iota(block_of.begin(), block_of.end(), 0);
        for (std::size_t u = 0; u < low.size(); ++u) {
            for (std::size_t v = u + 1; v < low.size(); ++v) {
                const auto& a = low[u];
                const auto& b = low[v];
                const bool interleaved = (a.lc_pos < b.lc_pos && b.lc_pos < a.rc_pos && a.rc_pos < b.rc_pos)
                                         || (b.lc_pos < a.lc_pos && a.lc_pos < b.rc_pos && b.rc_pos < a.rc_pos);
                if (interleaved)
                    block_of[static_cast<std::size_t>(find_root(block_of, static_cast<int>(u)))]
                        = find_root(block_of, static_cast<int>(v));
            }
        }
        std::vector<std::vector<LowNode>> blocks(low.size());
        for (std::size_t u = 0; u < low.size(); ++u)
            blocks[static_cast<std::size_t>(find_root(block_of, static_cast<int>(u)))].push_back(low[u]);

        // A block can be the last event only if its leaves read
        // lc_1..lc_l rc_1..rc_l over one contiguous interval.
        const std::vector<LowNode>* best = nullptr;
        int best_lc = 0;
        for (auto& block : blocks) {
            if (block.empty())
                continue;
            std::sort(block.begin(), block.end(), [](const LowNode& a, const LowNode& b) { return a.lc_pos < b.lc_pos; });
            const int start = block.front().lc_pos;
            const int len = static_cast<int>(block.size());
            bool shaped = true;
            for (int k = 0; k < len && shaped; ++k) {
                shaped = block[static_cast<std::size_t>(k)].lc_pos == start + k
                         && block[static_cast<std::size_t>(k)].rc_pos == start + len + k;
            }
            if (shaped && block.back().lc_pos > best_lc) {
                best = &block;
                best_lc = block.back().lc_pos;
            }
        }
        if (best == nullptr)
            throw MalformedInput("tree is not a tandem duplication tree: no candidate last event");

        const int start = best->front().lc_pos;
        const int len = static_cast<int>(best->size());
        reversed.push_back({start, len});
        for (int k = 0; k < len; ++k) {
            const int id = (*best)[static_cast<std::size_t>(k)].id;
            leaves[static_cast<std::size_t>(start - 1 + k)] = id;
            nodes[static_cast<std::size_t>(id)].left = -1;
            nodes[static_cast<std::size_t>(id)].right = -1;
        }
        leaves.erase(leaves.begin() + (start - 1 + len), leaves.begin() + (start - 1 + 2 * len));
    }
    if (leaves.front() != t.root())
        throw MalformedInput("tree is not a tandem duplication tree");

    DuplicationHistory h;
    h.events.assign(reversed.rbegin(), reversed.rend());
    return h;
}

CounterArray encode_events(const DuplicationHistory& h)
{
    if (!is_valid_history(h))
        throw MalformedInput("duplication history is out of range or not ordered");
    CounterArray c;
    for (const auto& e : h.events) {
        for (int v = e.last(); v >= e.start; --v)
            c.a.push_back(v);
    }
    if (!is_counter_array(c.a))
        throw MalformedInput("history encodes to an invalid counter array");
    return c;
}

DuplicationHistory decode_counter(const CounterArray& c)
{
    if (!is_counter_array(c.a))
        throw MalformedInput("not a counter array");
    DuplicationHistory h;
    for (std::size_t i = 0; i < c.a.size(); ++i) {
        if (i > 0 && c.a[i] == c.a[i - 1] - 1) {
            auto& e = h.events.back();
            --e.start;
            ++e.len;
        } else {
            h.events.push_back({c.a[i], 1});
        }
    }
    return h;
}

namespace {

BigInt binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    BigInt out = 1;
    for (int i = 1; i <= k; ++i) {
        out *= n - k + i;
        out /= i;
    }
    return out;
}

} // namespace

BigInt r_count(int n)
{
    if (n < 1)
        throw MalformedInput("r_count requires n >= 1");
    std::vector<BigInt> r(static_cast<std::size_t>(std::max(n, 2) + 1));
    r[1] = 1;
    r[2] = 1;
    for (int m = 3; m <= n; ++m) {
        BigInt sum = 0;
        for (int k = 1; k <= (m + 1) / 3; ++k) {
            const BigInt term = binomial(m + 1 - 2 * k, k) * r[static_cast<std::size_t>(m - k)];
            if (k % 2 == 1)
                sum += term;
            else
                sum -= term;
        }
        r[static_cast<std::size_t>(m)] = sum;
    }
    return r[static_cast<std::size_t>(n)];
}

BigInt sigma_count(int n)
{
    if (n < 0)
        throw MalformedInput("sigma_count requires n >= 0");
    if (n == 0)
        return 1;
    // ways[v]: arrays of the current length whose last entry is v.
    std::vector<BigInt> ways{0, 1};
    for (int len = 1; len < n; ++len) {
        std::vector<BigInt> next(static_cast<std::size_t>(len + 2), 0);
        for (int v = 1; v <= len; ++v) {
            for (int w = std::max(1, v - 1); w <= len + 1; ++w)
                next[static_cast<std::size_t>(w)] += ways[static_cast<std::size_t>(v)];
        }
        ways = std::move(next);
    }
    BigInt total = 0;
    for (const auto& w : ways)
        total += w;
    return total;
}

CounterSampler::CounterSampler(int n) : n_(n)
{
    if (n < 0)
        throw MalformedInput("CounterSampler requires n >= 0");
    if (n == 0) {
        total_ = 1;
        return;
    }
    completions_.resize(static_cast<std::size_t>(n + 1));
    completions_[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n + 1), 1);
    for (int i = n - 1; i >= 1; --i) {
        auto& row = completions_[static_cast<std::size_t>(i)];
        const auto& below = completions_[static_cast<std::size_t>(i + 1)];
        row.assign(static_cast<std::size_t>(i + 1), 0);
        for (int v = 1; v <= i; ++v) {
            for (int w = std::max(1, v - 1); w <= i + 1; ++w)
                row[static_cast<std::size_t>(v)] += below[static_cast<std::size_t>(w)];
        }
    }
    total_ = completions_[1][1];
}

namespace {

BigInt uniform_below(const BigInt& bound, std::mt19937_64& rng)
{
    const auto bits = boost::multiprecision::msb(bound) + 1;
    for (;;) {
        BigInt x = 0;
        for (std::size_t have = 0; have < bits; have += 64) {
            x <<= 64;
            x |= rng();
        }
        x >>= static_cast<unsigned>((bits + 63) / 64 * 64 - bits);
        if (x < bound)
            return x;
    }
}

} // namespace

CounterArray CounterSampler::sample(std::mt19937_64& rng) const
{
    CounterArray c;
    if (n_ == 0)
        return c;
    c.a.push_back(1);
    for (int i = 2; i <= n_; ++i) {
        const int prev = c.a.back();
        const auto& row = completions_[static_cast<std::size_t>(i)];
        BigInt weight = 0;
        for (int w = std::max(1, prev - 1); w <= i; ++w)
            weight += row[static_cast<std::size_t>(w)];
        BigInt pick = uniform_below(weight, rng);
        int w = std::max(1, prev - 1);
        for (;; ++w) {
            const auto& count = row[static_cast<std::size_t>(w)];
            if (pick < count)
                break;
            pick -= count;
        }
        c.a.push_back(w);
    }
    return c;
}

namespace {

void extend(int n, CounterArray& cur, std::vector<CounterArray>& out)
{
    const int i = static_cast<int>(cur.a.size());
    if (i == n) {
        out.push_back(cur);
        return;
    }
    const int lo = i == 0 ? 1 : std::max(1, cur.a.back() - 1);
    for (int v = lo; v <= i + 1; ++v) {
        cur.a.push_back(v);
        extend(n, cur, out);
        cur.a.pop_back();
    }
}

} // namespace

std::vector<CounterArray> all_counter_arrays(int n)
{
    if (n < 0)
        throw MalformedInput("all_counter_arrays requires n >= 0");
    std::vector<CounterArray> out;
    CounterArray cur;
    extend(n, cur, out);
    return out;
}

} // namespace palcomb
