#pragma once

#include "palcomb/manacher.hpp"
#include "palcomb/text.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace palcomb {

struct ReconstructionResult {
    Text text;                       // canonical
    std::size_t alphabet_size = 0;
    std::vector<int> first_occurrence; // first_occurrence[s - 1]: 1-based position of symbol s
};

/// Lexicographically least string with Manacher array a; its alphabet is
/// the smallest possible. Throws MalformedInput on a structurally invalid
/// array and Unrealizable when no string has this array.
ReconstructionResult reconstruct_minimal(const ManacherArray& a);

/// A string with Manacher array a and exactly k distinct symbols. Throws
/// Impossible when k lies outside [min alphabet, number of equality classes].
Text reconstruct_with_k(const ManacherArray& a, std::size_t k);

std::size_t min_alphabet_size(const ManacherArray& a);

/// P_1 = 1, P_k = P_{k-1} k P_{k-1}; the shortest palindromic Zimin word of
/// degree k, of length 2^k - 1.
Text pal_zimin_word(int k);

/// Canonical form of (k-1) P_{k-2} k: the shortest string whose Manacher
/// array needs k symbols. Length alpha(k).
Text tight_example(int k);

/// Minimal string length whose Manacher array forces k distinct symbols.
long long alpha(int k);

/// True iff s itself matches the palindromic Zimin pattern of degree k:
/// degree 1 is any non-empty palindrome, degree k is t p t with t of degree
/// k-1 and p a non-empty palindrome, where the inner palindromes chosen at
/// all levels (the level-1 base included) are pairwise distinct.
bool matches_pal_zimin(std::span<const Symbol> s, int k);

/// True iff some suffix of s matches the degree-k pattern.
bool has_pal_zimin_suffix(std::span<const Symbol> s, int k);

/// Largest k with matches_pal_zimin(s, k); 0 when s is not a non-empty palindrome.
int pal_zimin_degree(std::span<const Symbol> s);

/// Largest k with has_pal_zimin_suffix(s, k); 0 for the empty string.
int pal_zimin_suffix_degree(std::span<const Symbol> s);

} // namespace palcomb
