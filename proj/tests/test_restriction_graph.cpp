#include "oracles.hpp"
#include "dot_checker.hpp"

#include "palcomb/error.hpp"
#include "palcomb/manacher.hpp"
#include "palcomb/reconstruct.hpp"
#include "palcomb/restriction_graph.hpp"

#include <doctest.h>

#include <numeric>

using namespace palcomb;

namespace {

RestrictionGraph graph_of(const std::string& s) { return RestrictionGraph::build(array_to_fingerprint(compute_manacher(parse_text(s)))); }

std::vector<std::vector<int>> class_lists(const RestrictionGraph& g)
{
    std::vector<std::vector<int>> out;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        out.push_back(g.positions(static_cast<int>(v)));
    return out;
}

// Equality classes by transitive closure of "equal in every realization"
// computed straight from the maximal palindromes; slow on purpose.
std::vector<int> oracle_class_of(const Text& s)
{
    const int n = static_cast<int>(s.size());
    std::vector<int> rep(static_cast<std::size_t>(n));
    std::iota(rep.begin(), rep.end(), 0);
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto [i, j] : oracle::maximal_palindromes(s)) {
            for (int a = i, b = j; a < b; ++a, --b) {
                auto& ra = rep[static_cast<std::size_t>(a - 1)];
                auto& rb = rep[static_cast<std::size_t>(b - 1)];
                if (ra != rb) {
                    const int lo = std::min(ra, rb), hi = std::max(ra, rb);
                    for (auto& r : rep)
                        if (r == hi)
                            r = lo;
                    changed = true;
                }
            }
        }
    }
    return rep;
}

// Edges from the definition: flanks of each maximal palindrome, as pairs of
// smallest class positions.
std::set<std::pair<int, int>> oracle_edges(const Text& s)
{
    const int n = static_cast<int>(s.size());
    const auto rep = oracle_class_of(s);
    std::set<std::pair<int, int>> out;
    for (auto [i, j] : oracle::maximal_palindromes(s)) {
        if (i - 1 < 1 || j + 1 > n)
            continue;
        const int a = rep[static_cast<std::size_t>(i - 2)], b = rep[static_cast<std::size_t>(j)];
        out.emplace(std::min(a, b) + 1, std::max(a, b) + 1);
    }
    return out;
}

void for_each_proper_rgs(const RestrictionGraph& g, const std::function<void(const Coloring&)>& fn)
{
    Coloring psi;
    psi.color_of.assign(g.vertex_count(), 0);
    std::function<void(std::size_t, Symbol)> rec = [&](std::size_t v, Symbol top) {
        if (v == g.vertex_count()) {
            fn(psi);
            return;
        }
        for (Symbol c = 1; c <= top + 1; ++c) {
            bool ok = true;
            for (int u : g.neighbors(static_cast<int>(v)))
                if (static_cast<std::size_t>(u) < v && psi.color_of[static_cast<std::size_t>(u)] == c)
                    ok = false;
            if (!ok)
                continue;
            psi.color_of[v] = c;
            rec(v + 1, std::max(top, c));
        }
        psi.color_of[v] = 0;
    };
    rec(0, 0);
}

} // namespace

TEST_CASE("equality classes of the worked example")
{
    const auto g = graph_of("41213121566757");
    const std::vector<std::vector<int>> expected{{1}, {2, 4, 6, 8}, {3, 7}, {5}, {9}, {10, 11}, {12, 14}, {13}};
    CHECK(class_lists(g) == expected);
    CHECK(g.vertex_count() == 8);

    CHECK(class_lists(graph_of("123")) == std::vector<std::vector<int>>{{1}, {2}, {3}});
    CHECK(class_lists(graph_of("111")) == std::vector<std::vector<int>>{{1, 2, 3}});
}

TEST_CASE("restriction graph of the worked example")
{
    const auto s = parse_text("41213121566757");
    const auto g = graph_of("41213121566757");
    const std::vector<int> clique{0, 1, 2, 3, 4}; // {1},{2,4,6,8},{3,7},{5},{9}
    for (int a : clique)
        for (int b : clique)
            if (a != b)
                CHECK(g.adjacent(a, b));

    // The definition also yields {9}-{12,14} from the maximal palindrome "66"
    // at (10,11): 16 edges in total.
    const auto expected = oracle_edges(s);
    CHECK(expected.size() == 16);
    std::set<std::pair<int, int>> got;
    for (auto [a, b] : g.edges())
        got.emplace(g.positions(a).front(), g.positions(b).front());
    CHECK(got == expected);
    CHECK(g.edge_count() == 16);
    CHECK(g.adjacent(g.vertex_of(9), g.vertex_of(12)));
}

TEST_CASE("small graphs")
{
    const auto g = graph_of("123");
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});
    const auto one = graph_of("11");
    CHECK(one.vertex_count() == 1);
    CHECK(one.edge_count() == 0);
    const auto empty = RestrictionGraph::build(PalindromicFingerprint{});
    CHECK(empty.vertex_count() == 0);
}

TEST_CASE("a self-loop is reported as unrealizable")
{
    // s1 = s2 = s3, yet the zero radius at position 2 demands s1 != s3.
    const ManacherArray a{3, {0, 1, 0, 1, 0}};
    CHECK_THROWS_AS(RestrictionGraph::build(array_to_fingerprint(a)), Unrealizable);
    CHECK_THROWS_AS(reconstruct_minimal(a), Unrealizable);
}

TEST_CASE("class and edge soundness against all realizations, n <= 8")
{
    for (int n = 1; n <= 8; ++n) {
        for (const auto& [radii, texts] : oracle::realizations(n)) {
            const ManacherArray a{n, radii};
            const auto g = RestrictionGraph::build(array_to_fingerprint(a));
            for (int i = 1; i <= n; ++i) {
                for (int j = i + 1; j <= n; ++j) {
                    bool always_equal = true, always_differ = true;
                    for (const auto& t : texts) {
                        const bool eq = t[static_cast<std::size_t>(i - 1)] == t[static_cast<std::size_t>(j - 1)];
                        always_equal = always_equal && eq;
                        always_differ = always_differ && !eq;
                    }
                    const int ci = g.vertex_of(i), cj = g.vertex_of(j);
                    REQUIRE((ci == cj) == always_equal);
                    if (ci != cj)
                        REQUIRE(g.adjacent(ci, cj) == always_differ);
                }
            }
        }
    }
}

TEST_CASE("proper colorings and reconstructions are in bijection, n <= 9")
{
    for (int n = 1; n <= 9; ++n) {
        for (const auto& [radii, texts] : oracle::realizations(n)) {
            const ManacherArray a{n, radii};
            const auto g = RestrictionGraph::build(array_to_fingerprint(a));
            std::set<Text> from_colorings;
            for_each_proper_rgs(g, [&](const Coloring& psi) {
                REQUIRE(is_proper(g, psi));
                const auto t = coloring_to_text(g, psi);
                REQUIRE(compute_manacher(t) == a);
                REQUIRE(text_to_coloring(g, t) == psi);
                from_colorings.insert(t);
            });
            REQUIRE(from_colorings == std::set<Text>(texts.begin(), texts.end()));
            for (const auto& t : texts)
                REQUIRE(coloring_to_text(g, text_to_coloring(g, t)) == t);
        }
    }
}

TEST_CASE("greedy coloring is minimal and lexicographically least, n <= 10")
{
    for (int n = 1; n <= 10; ++n) {
        for (const auto& [radii, texts] : oracle::realizations(n)) {
            const ManacherArray a{n, radii};
            const auto g = RestrictionGraph::build(array_to_fingerprint(a));
            const auto psi = greedy_min_coloring(g);
            const auto t = coloring_to_text(g, psi);
            std::size_t best = n;
            for (const auto& u : texts)
                best = std::min(best, oracle::distinct(u));
            REQUIRE(psi.color_count() == best);
            REQUIRE(t == *std::min_element(texts.begin(), texts.end()));
        }
    }
}

TEST_CASE("colorings of the worked example")
{
    const auto g = graph_of("41213121566757");
    const auto optimal = text_to_coloring(g, parse_text("45253525133212"));
    CHECK(optimal.color_count() == 5);
    CHECK(render_text(coloring_to_text(g, optimal)) == "45253525133212");

    const auto seven = text_to_coloring(g, parse_text("41213121566757"));
    CHECK(seven.color_count() == 7);
    CHECK(is_proper(g, seven));

    CHECK(greedy_min_coloring(g).color_count() == 5);
    CHECK(greedy_min_coloring(graph_of("111")).color_count() == 1);
    CHECK(greedy_min_coloring(graph_of("412131215")).color_count() == 5);

    const auto greedy = greedy_min_coloring(g);
    const auto eight = expand_coloring(g, greedy, 8);
    CHECK(eight.color_count() == 8);
    CHECK(is_proper(g, eight));
    CHECK(compute_manacher(coloring_to_text(g, eight)) == compute_manacher(parse_text("41213121566787")));
    CHECK_THROWS_AS(expand_coloring(g, greedy, 4), Impossible);
    CHECK_THROWS_AS(expand_coloring(g, greedy, 9), Impossible);
    CHECK(expand_coloring(g, greedy, 5) == greedy);
    for (std::size_t k = 5; k <= 8; ++k) {
        const auto psi = expand_coloring(g, greedy, k);
        CHECK(psi.color_count() == k);
        CHECK(is_proper(g, psi));
    }
}

TEST_CASE("coloring errors")
{
    const auto g = graph_of("123");
    CHECK_THROWS_AS(coloring_to_text(g, Coloring{{1, 1, 2}}), MalformedInput);
    CHECK_THROWS_AS(coloring_to_text(g, Coloring{{1, 2}}), MalformedInput);
    CHECK_THROWS_AS(coloring_to_text(g, Coloring{{1, 2, 0}}), MalformedInput);
    CHECK_THROWS_AS(text_to_coloring(g, parse_text("121")), Unrealizable);
    CHECK_THROWS_AS(text_to_coloring(graph_of("111"), parse_text("112")), Unrealizable);
    CHECK_THROWS_AS(text_to_coloring(g, parse_text("12")), Unrealizable);
    CHECK(coloring_to_text(graph_of("11"), Coloring{{7}}) == Text{7, 7});
    CHECK(text_to_coloring(graph_of("11"), parse_text("11")) == Coloring{{1}});
}

TEST_CASE("expand_coloring over every realizable array, n <= 8")
{
    for (int n = 1; n <= 8; ++n) {
        for (const auto& [radii, texts] : oracle::realizations(n)) {
            const ManacherArray a{n, radii};
            const auto g = RestrictionGraph::build(array_to_fingerprint(a));
            const auto psi = greedy_min_coloring(g);
            for (std::size_t k = psi.color_count(); k <= g.vertex_count(); ++k) {
                const auto e = expand_coloring(g, psi, k);
                REQUIRE(e.color_count() == k);
                REQUIRE(compute_manacher(coloring_to_text(g, e)) == a);
            }
            REQUIRE_THROWS_AS(expand_coloring(g, psi, g.vertex_count() + 1), Impossible);
        }
    }
}

TEST_CASE("DOT output is well formed")
{
    const auto one = to_dot(graph_of("1"));
    CHECK(dot::accepts(one));
    CHECK(dot::node_count(one) == 1);
    CHECK(dot::edge_count(one) == 0);

    const auto tri = to_dot(graph_of("123"));
    CHECK(dot::accepts(tri));
    CHECK(dot::node_count(tri) == 3);
    CHECK(dot::edge_count(tri) == 3);

    const auto g = graph_of("41213121566757");
    const auto colored = to_dot(g, greedy_min_coloring(g));
    CHECK(dot::accepts(colored));
    CHECK(dot::node_count(colored) == 8);
    CHECK(dot::edge_count(colored) == 16);
    CHECK(colored.find("label=\"2,4,6,8\"") != std::string::npos);
    CHECK(colored.find("color_index") != std::string::npos);
    CHECK(to_dot(g).find("color_index") == std::string::npos);

    CHECK_FALSE(dot::accepts("graph { a -- }"));
    CHECK_FALSE(dot::accepts("graph g { a [label=\"x] }"));
}
