#include "palcomb/reconstruct.hpp"

#include "palcomb/error.hpp"
#include "palcomb/restriction_graph.hpp"

#include <algorithm>
#include <string>

namespace palcomb {

namespace {

struct Prepared {
    RestrictionGraph graph;
    Coloring minimal;
};

Prepared prepare(const ManacherArray& a)
{
    check_radius_bounds(a);
    Prepared p{RestrictionGraph::build(array_to_fingerprint(a)), {}};
    p.minimal = greedy_min_coloring(p.graph);
    return p;
}

void verify(const ManacherArray& a, std::span<const Symbol> t)
{
    if (compute_manacher(t) != a)
        throw Unrealizable("no string has this Manacher array (reconstruction does not reproduce it)");
}

} // namespace

ReconstructionResult reconstruct_minimal(const ManacherArray& a)
{
    const Prepared p = prepare(a);
    ReconstructionResult out;
    out.text = coloring_to_text(p.graph, p.minimal);
    verify(a, out.text);
    out.alphabet_size = p.minimal.color_count();
    out.first_occurrence.assign(out.alphabet_size, 0);
    for (std::size_t i = 0; i < out.text.size(); ++i) {
        auto& slot = out.first_occurrence[out.text[i] - 1];
        if (slot == 0)
            slot = static_cast<int>(i + 1);
    }
    return out;
}

Text reconstruct_with_k(const ManacherArray& a, std::size_t k)
{
    const Prepared p = prepare(a);
    verify(a, coloring_to_text(p.graph, p.minimal));
    const Coloring expanded = expand_coloring(p.graph, p.minimal, k);
    Text t = coloring_to_text(p.graph, expanded);
    verify(a, t);
    return t;
}

std::size_t min_alphabet_size(const ManacherArray& a) { return reconstruct_minimal(a).alphabet_size; }

bool validate_array(const ManacherArray& a)
{
    if (!radius_bounds_ok(a))
        return false;
    try {
        (void)reconstruct_minimal(a);
        return true;
    } catch (const Error&) {
        return false;
    }
}

Text pal_zimin_word(int k)
{
    if (k < 1)
        throw MalformedInput("palindromic Zimin degree must be at least 1");
    Text w{1};
    for (int level = 2; level <= k; ++level) {
        Text next = w;
        next.push_back(static_cast<Symbol>(level));
        next.insert(next.end(), w.begin(), w.end());
        w = std::move(next);
    }
    return w;
}

Text tight_example(int k)
{
    if (k < 2)
        throw MalformedInput("tight_example requires k >= 2");
    Text s{static_cast<Symbol>(k - 1)};
    if (k >= 3) {
        const Text inner = pal_zimin_word(k - 2);
        s.insert(s.end(), inner.begin(), inner.end());
    }
    s.push_back(static_cast<Symbol>(k));
    return canonicalize(s);
}

long long alpha(int k)
{
    if (k < 1)
        throw MalformedInput("alpha requires k >= 1");
    if (k == 1)
        return 1;
    if (k - 2 >= 62)
        throw MalformedInput("alpha(k) overflows for k = " + std::to_string(k));
    return (1LL << (k - 2)) + 1;
}

namespace {

using Span = std::span<const Symbol>;

bool contains(const std::vector<Span>& used, Span p)
{
    return std::any_of(used.begin(), used.end(),
                       [&](Span q) { return q.size() == p.size() && std::equal(q.begin(), q.end(), p.begin()); });
}

// s is assumed to be a palindrome.
bool match_palindrome(Span s, int k, std::vector<Span>& used)
{
    if (s.empty())
        return false;
    if (k == 1)
        return !contains(used, s);
    // s = t p t with |t| = len, |p| >= 1.
    for (std::size_t len = 1; 2 * len < s.size(); ++len) {
        const Span t = s.first(len);
        if (!is_palindrome(t))
            continue;
        const Span middle = s.subspan(len, s.size() - 2 * len);
        if (contains(used, middle))
            continue;
        used.push_back(middle);
        const bool ok = match_palindrome(t, k - 1, used);
        used.pop_back();
        if (ok)
            return true;
    }
    return false;
}

} // namespace

bool matches_pal_zimin(std::span<const Symbol> s, int k)
{
    if (k < 1)
        throw MalformedInput("palindromic Zimin degree must be at least 1");
    if (s.empty() || !is_palindrome(s))
        return false;
    std::vector<Span> used;
    return match_palindrome(s, k, used);
}

bool has_pal_zimin_suffix(std::span<const Symbol> s, int k)
{
    if (k < 1)
        throw MalformedInput("palindromic Zimin degree must be at least 1");
    // Degree k needs at least 2^k - 1 symbols.
    const std::size_t min_len = k >= 63 ? s.size() + 1 : (std::size_t{1} << k) - 1;
    for (std::size_t len = min_len; len <= s.size(); ++len) {
        if (matches_pal_zimin(s.last(len), k))
            return true;
    }
    return false;
}

int pal_zimin_degree(std::span<const Symbol> s)
{
    int k = 0;
    while (matches_pal_zimin(s, k + 1))
        ++k;
    return k;
}

int pal_zimin_suffix_degree(std::span<const Symbol> s)
{
    int k = 0;
    while (has_pal_zimin_suffix(s, k + 1))
        ++k;
    return k;
}

} // namespace palcomb
