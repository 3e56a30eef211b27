#include "palcomb/restriction_graph.hpp"

#include "palcomb/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

namespace palcomb {

namespace {

class DisjointSet {
public:
    explicit DisjointSet(std::size_t size) : parent_(size), rank_(size, 0)
    {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x)
    {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return;
        if (rank_[a] < rank_[b])
            std::swap(a, b);
        parent_[b] = a;
        if (rank_[a] == rank_[b])
            ++rank_[a];
    }

private:
    std::vector<std::size_t> parent_;
    std::vector<unsigned> rank_;
};

void check_fingerprint(const PalindromicFingerprint& f)
{
    // Round-tripping through the array form validates centers and ranges.
    (void)fingerprint_to_array(f);
}

} // namespace

EqualityClasses equality_classes(const PalindromicFingerprint& f)
{
    check_fingerprint(f);
    const auto n = static_cast<std::size_t>(f.n);
    DisjointSet dsu(n + 1);
    for (const Palindrome& p : f.palindromes) {
        const int d = p.doubled_center();
        for (int m = d / 2 + 1; m <= p.last; ++m)
            dsu.unite(static_cast<std::size_t>(m), static_cast<std::size_t>(d - m));
    }

    EqualityClasses out;
    out.n = f.n;
    out.class_of.assign(n, -1);
    std::vector<int> id_of_root(n + 1, -1);
    for (std::size_t i = 1; i <= n; ++i) {
        const auto root = dsu.find(i);
        if (id_of_root[root] < 0) {
            id_of_root[root] = static_cast<int>(out.classes.size());
            out.classes.emplace_back();
        }
        const int id = id_of_root[root];
        out.class_of[i - 1] = id;
        out.classes[static_cast<std::size_t>(id)].push_back(static_cast<int>(i));
    }
    return out;
}

RestrictionGraph RestrictionGraph::build(const PalindromicFingerprint& f)
{
    RestrictionGraph g;
    g.classes_ = equality_classes(f);
    std::set<std::pair<int, int>> edges;
    for (const Palindrome& p : f.palindromes) {
        const int left = p.first - 1;
        const int right = p.last + 1;
        if (left < 1 || right > f.n)
            continue;
        const int a = g.classes_.of(left);
        const int b = g.classes_.of(right);
        if (a == b)
            throw Unrealizable("maximal palindrome (" + std::to_string(p.first) + "," + std::to_string(p.last)
                               + ") requires positions " + std::to_string(left) + " and " + std::to_string(right)
                               + " to differ, but they are forced equal");
        edges.emplace(std::min(a, b), std::max(a, b));
    }
    g.edges_.assign(edges.begin(), edges.end());
    g.adjacency_.assign(g.classes_.classes.size(), {});
    for (auto [a, b] : g.edges_) {
        g.adjacency_[static_cast<std::size_t>(a)].push_back(b);
        g.adjacency_[static_cast<std::size_t>(b)].push_back(a);
    }
    for (auto& list : g.adjacency_)
        std::sort(list.begin(), list.end());
    return g;
}

bool RestrictionGraph::adjacent(int a, int b) const
{
    const auto& list = neighbors(a);
    return std::binary_search(list.begin(), list.end(), b);
}

std::size_t Coloring::color_count() const
{
    return std::unordered_set<Symbol>(color_of.begin(), color_of.end()).size();
}

bool is_proper(const RestrictionGraph& g, const Coloring& psi)
{
    if (psi.color_of.size() != g.vertex_count())
        return false;
    if (std::find(psi.color_of.begin(), psi.color_of.end(), Symbol{0}) != psi.color_of.end())
        return false;
    return std::all_of(g.edges().begin(), g.edges().end(), [&](auto e) {
        return psi.color_of[static_cast<std::size_t>(e.first)] != psi.color_of[static_cast<std::size_t>(e.second)];
    });
}

Text coloring_to_text(const RestrictionGraph& g, const Coloring& psi)
{
    if (psi.color_of.size() != g.vertex_count())
        throw MalformedInput("coloring does not cover every vertex");
    if (std::find(psi.color_of.begin(), psi.color_of.end(), Symbol{0}) != psi.color_of.end())
        throw MalformedInput("coloring leaves a vertex uncolored");
    if (!is_proper(g, psi))
        throw MalformedInput("coloring is not proper");
    Text t(static_cast<std::size_t>(g.n()));
    for (int i = 1; i <= g.n(); ++i)
        t[static_cast<std::size_t>(i - 1)] = psi.color_of[static_cast<std::size_t>(g.vertex_of(i))];
    return t;
}

Coloring text_to_coloring(const RestrictionGraph& g, std::span<const Symbol> t)
{
    if (t.size() != static_cast<std::size_t>(g.n()))
        throw Unrealizable("text length differs from the fingerprint length");
    Coloring psi;
    psi.color_of.reserve(g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        const auto& pos = g.positions(static_cast<int>(v));
        const Symbol c = t[static_cast<std::size_t>(pos.front() - 1)];
        for (int i : pos) {
            if (t[static_cast<std::size_t>(i - 1)] != c)
                throw Unrealizable("text is not constant on the equality class of position "
                                   + std::to_string(pos.front()));
        }
        psi.color_of.push_back(c);
    }
    for (auto [a, b] : g.edges()) {
        if (psi.color_of[static_cast<std::size_t>(a)] == psi.color_of[static_cast<std::size_t>(b)])
            throw Unrealizable("text repeats a symbol across a restriction edge");
    }
    return psi;
}

Coloring greedy_min_coloring(const RestrictionGraph& g)
{
    Coloring psi;
    psi.color_of.assign(g.vertex_count(), 0);
    std::vector<bool> taken;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        taken.assign(taken.size(), false);
        for (int u : g.neighbors(static_cast<int>(v))) {
            const Symbol c = psi.color_of[static_cast<std::size_t>(u)];
            if (c == 0)
                continue;
            if (taken.size() <= c)
                taken.resize(c + 1, false);
            taken[c] = true;
        }
        Symbol c = 1;
        while (c < taken.size() && taken[c])
            ++c;
        psi.color_of[v] = c;
    }
    return psi;
}

Coloring expand_coloring(const RestrictionGraph& g, const Coloring& psi, std::size_t k)
{
    if (!is_proper(g, psi))
        throw MalformedInput("expand_coloring: input coloring is not proper");
    const std::size_t have = psi.color_count();
    if (k < have)
        throw Impossible("cannot use " + std::to_string(k) + " symbols: at least " + std::to_string(have)
                         + " are required");
    if (k > g.vertex_count())
        throw Impossible("cannot use " + std::to_string(k) + " symbols: only " + std::to_string(g.vertex_count())
                         + " equality classes exist");

    Coloring out = psi;
    Symbol fresh = *std::max_element(out.color_of.begin(), out.color_of.end()) + 1;
    for (std::size_t added = have; added < k; ++added) {
        std::vector<int> uses(fresh + 1, 0);
        for (Symbol c : out.color_of)
            ++uses[c];
        auto v = out.color_of.size();
        while (v-- > 0) {
            if (uses[out.color_of[v]] > 1)
                break;
        }
        out.color_of[v] = fresh++;
    }
    return out;
}

std::string to_dot(const RestrictionGraph& g, const std::optional<Coloring>& psi)
{
    std::ostringstream os;
    os << "graph restriction {\n";
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        os << "  v" << v << " [label=\"";
        const auto& pos = g.positions(static_cast<int>(v));
        for (std::size_t i = 0; i < pos.size(); ++i)
            os << (i ? "," : "") << pos[i];
        os << '"';
        if (psi && v < psi->color_of.size())
            os << ", color_index=" << psi->color_of[v];
        os << "];\n";
    }
    for (auto [a, b] : g.edges())
        os << "  v" << a << " -- v" << b << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace palcomb
