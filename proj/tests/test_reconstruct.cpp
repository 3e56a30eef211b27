#include "oracles.hpp"

#include "palcomb/error.hpp"
#include "palcomb/manacher.hpp"
#include "palcomb/reconstruct.hpp"
#include "palcomb/restriction_graph.hpp"

#include <doctest.h>

#include <map>
#include <optional>

using namespace palcomb;

namespace {

ManacherArray array_of(const std::string& s) { return compute_manacher(parse_text(s)); }

// Every way s decomposes as a palindromic Zimin word of degree k, as the list
// of inner palindromes chosen (base first). Exhaustive and slow.
std::vector<std::vector<Text>> zimin_decompositions(const Text& s, int k)
{
    std::vector<std::vector<Text>> out;
    if (s.empty() || !oracle::palindrome(s, 1, static_cast<int>(s.size())))
        return out;
    if (k == 1) {
        out.push_back({s});
        return out;
    }
    const std::size_t n = s.size();
    for (std::size_t l = 1; 2 * l < n; ++l) {
        const Text t(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(l));
        if (!std::equal(t.begin(), t.end(), s.end() - static_cast<std::ptrdiff_t>(l)))
            continue;
        const Text p(s.begin() + static_cast<std::ptrdiff_t>(l), s.end() - static_cast<std::ptrdiff_t>(l));
        if (!oracle::palindrome(p, 1, static_cast<int>(p.size())))
            continue;
        for (auto inner : zimin_decompositions(t, k - 1)) {
            if (std::find(inner.begin(), inner.end(), p) != inner.end())
                continue;
            inner.push_back(p);
            out.push_back(std::move(inner));
        }
    }
    return out;
}

bool oracle_zimin(const Text& s, int k) { return !zimin_decompositions(s, k).empty(); }

bool oracle_zimin_suffix(const Text& s, int k)
{
    for (std::size_t start = 0; start < s.size(); ++start)
        if (oracle_zimin(Text(s.begin() + static_cast<std::ptrdiff_t>(start), s.end()), k))
            return true;
    return false;
}

// Shortest palindrome p with s[..m] ending in sigma_j p s[m] (m is 1-based).
std::optional<int> shortest_flanked(const Text& s, int m, Symbol sigma_j)
{
    for (int len = 0; len <= m - 2; ++len) {
        const int first = m - len; // p = s[first..m-1]
        if (s[static_cast<std::size_t>(first - 2)] == sigma_j && oracle::palindrome(s, first, m - 1))
            return len;
    }
    return std::nullopt;
}

} // namespace

TEST_CASE("reconstruct_minimal examples")
{
    auto r = reconstruct_minimal(array_of("121"));
    CHECK(render_text(r.text) == "121");
    CHECK(r.alphabet_size == 2);
    CHECK(r.first_occurrence == std::vector<int>{1, 2});

    r = reconstruct_minimal(ManacherArray{3, {0, 0, 0, 0, 0}});
    CHECK(render_text(r.text) == "123");
    CHECK(r.alphabet_size == 3);
    CHECK(r.first_occurrence == std::vector<int>{1, 2, 3});

    r = reconstruct_minimal(array_of("412131215"));
    CHECK(r.alphabet_size == 5);
    CHECK(compute_manacher(r.text) == array_of("412131215"));

    r = reconstruct_minimal(array_of("41213121566757"));
    CHECK(render_text(r.text) == "12324232511232");
    CHECK(r.alphabet_size == 5);

    r = reconstruct_minimal(ManacherArray{0, {}});
    CHECK(r.text.empty());
    CHECK(r.alphabet_size == 0);
}

TEST_CASE("reconstruct_minimal errors")
{
    CHECK_THROWS_AS(reconstruct_minimal(ManacherArray{2, {0, 2, 0}}), MalformedInput);
    CHECK_THROWS_AS(reconstruct_minimal(ManacherArray{2, {0, 0}}), MalformedInput);
    CHECK_THROWS_AS(reconstruct_minimal(ManacherArray{3, {0, 1, 0, 1, 0}}), Unrealizable);
    CHECK_THROWS_AS(min_alphabet_size(ManacherArray{3, {0, 1, 0, 1, 0}}), Unrealizable);
}

TEST_CASE("reconstruct_with_k on the worked example")
{
    const auto a = array_of("41213121566757");
    CHECK(min_alphabet_size(a) == 5);
    for (std::size_t k = 5; k <= 8; ++k) {
        const auto t = reconstruct_with_k(a, k);
        CHECK(alphabet_size(t) == k);
        CHECK(compute_manacher(t) == a);
    }
    CHECK_THROWS_AS(reconstruct_with_k(a, 4), Impossible);
    CHECK_THROWS_AS(reconstruct_with_k(a, 9), Impossible);
    CHECK(compute_manacher(parse_text("45253525133212")) == a);
    CHECK(compute_manacher(parse_text("41213121566787")) == a);
}

TEST_CASE("min_alphabet_size laws")
{
    for (int n = 1; n <= 20; ++n)
        CHECK(min_alphabet_size(compute_manacher(Text(static_cast<std::size_t>(n), 1))) == 1);
    for (int k = 2; k <= 12; ++k) {
        const auto s = tight_example(k);
        CHECK(static_cast<long long>(s.size()) == alpha(k));
        CHECK(is_canonical(s));
        CHECK(min_alphabet_size(compute_manacher(s)) == static_cast<std::size_t>(k));
    }
}

TEST_CASE("Zimin words and alpha")
{
    CHECK(render_text(pal_zimin_word(1)) == "1");
    CHECK(render_text(pal_zimin_word(2)) == "121");
    CHECK(render_text(pal_zimin_word(3)) == "1213121");
    CHECK(pal_zimin_word(10).size() == 1023);
    CHECK(render_text(tight_example(5)) == "123242325");
    CHECK(tight_example(2).size() == 2);
    CHECK(alphabet_size(tight_example(2)) == 2);
    CHECK(alpha(1) == 1);
    CHECK(alpha(2) == 2);
    CHECK(alpha(5) == 9);
    CHECK(alpha(20) == (1LL << 18) + 1);
}

TEST_CASE("palindromic Zimin matching examples")
{
    CHECK(matches_pal_zimin(parse_text("1213121"), 3));
    CHECK(has_pal_zimin_suffix(parse_text("1213121"), 3));
    CHECK_FALSE(has_pal_zimin_suffix(parse_text("12"), 2));
    CHECK(has_pal_zimin_suffix(parse_text("11"), 1));
    CHECK_FALSE(has_pal_zimin_suffix(Text{}, 1));
    // "111" = 1.1.1 would reuse "1" as the inner palindrome.
    CHECK_FALSE(matches_pal_zimin(parse_text("111"), 2));
    CHECK(matches_pal_zimin(parse_text("11211"), 2));
    CHECK(pal_zimin_degree(parse_text("1213121")) == 3);
    CHECK(pal_zimin_degree(parse_text("12")) == 0);
    CHECK(pal_zimin_suffix_degree(parse_text("41213121")) == 3);
    CHECK(pal_zimin_suffix_degree(Text{}) == 0);
    for (int k = 1; k <= 8; ++k)
        CHECK(pal_zimin_degree(pal_zimin_word(k)) == k);
}

TEST_CASE("Zimin matching agrees with the decomposition oracle, n <= 9")
{
    for (int n = 1; n <= 9; ++n) {
        oracle::for_each_canonical(n, 3, [&](const Text& s) {
            for (int k = 1; k <= 4; ++k) {
                REQUIRE(matches_pal_zimin(s, k) == oracle_zimin(s, k));
                REQUIRE(has_pal_zimin_suffix(s, k) == oracle_zimin_suffix(s, k));
            }
        });
    }
}

TEST_CASE("roundtrip, global minimality and the log bound, n <= 10")
{
    for (int n = 1; n <= 10; ++n) {
        std::map<std::vector<int>, std::size_t> best;
        oracle::for_each_canonical(n, n, [&](const Text& s) {
            auto radii = compute_manacher(s).radii;
            auto [it, fresh] = best.emplace(std::move(radii), oracle::distinct(s));
            if (!fresh)
                it->second = std::min(it->second, oracle::distinct(s));
        });
        for (const auto& [radii, fewest] : best) {
            const ManacherArray a{n, radii};
            const auto r = reconstruct_minimal(a);
            REQUIRE(compute_manacher(r.text) == a);
            REQUIRE(r.alphabet_size == fewest);
            REQUIRE(validate_array(a));
            if (n >= 2)
                REQUIRE(static_cast<int>(r.alphabet_size) <= oracle::floor_log2(n - 1) + 2);
        }
    }
}

TEST_CASE("alpha is exact for k <= 5")
{
    for (int k = 2; k <= 5; ++k) {
        const int shorter = static_cast<int>(alpha(k)) - 1;
        std::size_t most = 0;
        oracle::for_each_canonical(shorter, shorter, [&](const Text& s) {
            most = std::max(most, min_alphabet_size(compute_manacher(s)));
        });
        CHECK(most < static_cast<std::size_t>(k));
        CHECK(min_alphabet_size(compute_manacher(tight_example(k))) == static_cast<std::size_t>(k));
    }
}

TEST_CASE("Zimin structure and geometric growth in minimal reconstructions, n <= 11")
{
    for (int n = 3; n <= 11; ++n) {
        std::set<std::vector<int>> arrays;
        oracle::for_each_canonical(n, std::min(n, oracle::floor_log2(n - 1) + 2),
                                   [&](const Text& s) { arrays.insert(compute_manacher(s).radii); });
        for (const auto& radii : arrays) {
            const ManacherArray a{n, radii};
            const auto s = reconstruct_minimal(a).text;
            const auto g = RestrictionGraph::build(array_to_fingerprint(a));
            for (int m = 2; m <= n; ++m) {
                const Symbol sigma = s[static_cast<std::size_t>(m - 1)];
                const bool independent = g.positions(g.vertex_of(m)).front() == m;
                if (!independent)
                    continue;
                const Text prefix(s.begin(), s.begin() + (m - 1));
                if (sigma >= 3)
                    REQUIRE(has_pal_zimin_suffix(prefix, static_cast<int>(sigma) - 2));
                std::vector<int> lens;
                for (Symbol j = 1; j < sigma; ++j) {
                    const auto len = shortest_flanked(s, m, j);
                    REQUIRE(len.has_value());
                    lens.push_back(*len);
                }
                std::sort(lens.begin(), lens.end());
                for (std::size_t x = 1; x < lens.size(); ++x)
                    REQUIRE(2 * lens[x - 1] < lens[x]);
            }
        }
    }
}
