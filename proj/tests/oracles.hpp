#pragma once

// Brute-force reference implementations used only by the tests. Nothing here
// calls into the library's algorithms beyond plain data types.

#include "palcomb/manacher.hpp"
#include "palcomb/text.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using palcomb::Symbol;
using palcomb::Text;

inline bool palindrome(const Text& s, int first, int last) // 1-based inclusive, empty allowed
{
    for (int i = first, j = last; i < j; ++i, --j) {
        if (s[static_cast<std::size_t>(i - 1)] != s[static_cast<std::size_t>(j - 1)])
            return false;
    }
    return true;
}

/// Radius per doubled center straight from the definition: the largest r
/// whose window is in range and palindromic.
inline std::vector<int> radii(const Text& s)
{
    const int n = static_cast<int>(s.size());
    std::vector<int> out;
    for (int d = 2; d <= 2 * n; ++d) {
        const int k = d / 2;
        int best = 0;
        for (int r = 0; r <= n; ++r) {
            const int first = d % 2 == 0 ? k - r : k - r + 1;
            const int last = k + r;
            if (first < 1 || last > n)
                break;
            if (palindrome(s, first, last))
                best = r;
        }
        out.push_back(best);
    }
    return out;
}

/// Maximal palindromes (i, j) by definition, as a sorted set.
inline std::set<std::pair<int, int>> maximal_palindromes(const Text& s)
{
    const int n = static_cast<int>(s.size());
    std::set<std::pair<int, int>> out;
    for (int i = 1; i <= n + 1; ++i) {
        for (int j = i - 1; j <= n; ++j) {
            if (!palindrome(s, i, j))
                continue;
            const bool extendable = i > 1 && j < n && s[static_cast<std::size_t>(i - 2)] == s[static_cast<std::size_t>(j)];
            // Empty palindromes only between characters (i, i-1) with 2 <= i <= n.
            if (j == i - 1 && (i < 2 || i > n))
                continue;
            if (!extendable)
                out.emplace(i, j);
        }
    }
    return out;
}

/// All restricted-growth strings of length n over at most `alphabet` symbols.
inline void for_each_canonical(int n, int alphabet, const std::function<void(const Text&)>& fn)
{
    Text cur;
    std::function<void(Symbol)> rec = [&](Symbol top) {
        if (cur.size() == static_cast<std::size_t>(n)) {
            fn(cur);
            return;
        }
        for (Symbol s = 1; s <= std::min<Symbol>(top + 1, static_cast<Symbol>(alphabet)); ++s) {
            cur.push_back(s);
            rec(std::max(top, s));
            cur.pop_back();
        }
    };
    rec(0);
}

/// Every array realized by a length-n canonical string, with all its
/// realizations (alphabet unrestricted).
inline std::map<std::vector<int>, std::vector<Text>> realizations(int n)
{
    std::map<std::vector<int>, std::vector<Text>> out;
    for_each_canonical(n, n, [&](const Text& s) { out[radii(s)].push_back(s); });
    return out;
}

inline std::size_t distinct(const Text& s) { return std::set<Symbol>(s.begin(), s.end()).size(); }

/// Doubled center of the longest palindromic suffix of each prefix.
inline std::vector<int> suffix_centers(const Text& s)
{
    std::vector<int> out;
    for (int i = 1; i <= static_cast<int>(s.size()); ++i) {
        for (int first = 1; first <= i; ++first) {
            if (palindrome(s, first, i)) {
                out.push_back(first + i);
                break;
            }
        }
    }
    return out;
}

inline bool has_period(const Text& s, std::size_t q)
{
    for (std::size_t i = 0; i + q < s.size(); ++i) {
        if (s[i] != s[i + q])
            return false;
    }
    return true;
}

inline int floor_log2(int x)
{
    int k = -1;
    while (x > 0) {
        x >>= 1;
        ++k;
    }
    return k;
}

} // namespace oracle
