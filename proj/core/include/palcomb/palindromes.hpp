#pragma once

#include "palcomb/text.hpp"

#include <optional>
#include <span>
#include <vector>

namespace palcomb {

/// Lengths l (ascending, including 0) such that the last l symbols of the
/// palindrome p form a palindrome. Throws MalformedInput if p is not a
/// palindrome.
std::vector<int> palindromic_suffixes(std::span<const Symbol> p);

/// Smallest q >= 1 with t[i] = t[i+q] for all valid i (|t| when aperiodic).
int minimal_period(std::span<const Symbol> t);

/// p = (q0 q1)^reps q0 with q0, q1 palindromes and reps >= 2.
struct PalindromicDecomposition {
    Text q0;
    Text q1;
    int reps = 0;

    Text assemble() const;

    friend bool operator==(const PalindromicDecomposition&, const PalindromicDecomposition&) = default;
};

/// Splits a periodic palindrome along its minimal period. Throws
/// MalformedInput unless p is a palindrome whose minimal period is at most
/// |p|/2.
PalindromicDecomposition periodic_palindrome_decomposition(std::span<const Symbol> p);

} // namespace palcomb
