#pragma once

#include "palcomb/text.hpp"

#include <span>
#include <vector>

namespace palcomb {

/// Radius of the maximal palindrome at every one of the 2n-1 centers.
///
/// Centers are addressed by their doubled value d = 2c, an integer in
/// [2, 2n]: even d is the character k = d/2, odd d sits between characters
/// (d-1)/2 and (d+1)/2. radii[d - 2] holds the radius at d, so the layout
/// alternates odd-center/even-center entries starting at character 1.
struct ManacherArray {
    int n = 0;
    std::vector<int> radii;

    int radius_at(int doubled_center) const { return radii[static_cast<std::size_t>(doubled_center - 2)]; }

    friend bool operator==(const ManacherArray&, const ManacherArray&) = default;
};

/// Largest radius a center admits inside a string of length n.
inline int max_radius(int n, int doubled_center)
{
    const int k = doubled_center / 2;
    return doubled_center % 2 == 0 ? std::min(k - 1, n - k) : std::min(k, n - k);
}

/// Last position covered by the palindrome of the given radius.
inline int palindrome_end(int doubled_center, int radius) { return doubled_center / 2 + radius; }

/// True when the array has 2n-1 entries and each radius lies within the
/// index range of its center. Realizability is a separate question.
bool radius_bounds_ok(const ManacherArray& a);

/// Throws MalformedInput unless radius_bounds_ok.
void check_radius_bounds(const ManacherArray& a);

/// Linear-time Manacher scan.
ManacherArray compute_manacher(std::span<const Symbol> s);

/// Quadratic expansion around every center; reference for differential tests.
ManacherArray naive_manacher(std::span<const Symbol> s);

/// A substring s[first..last], 1-based inclusive. Empty palindromes are
/// stored as (i, i-1).
struct Palindrome {
    int first = 1;
    int last = 0;

    int doubled_center() const { return first + last; }
    int length() const { return last - first + 1; }

    friend bool operator==(const Palindrome&, const Palindrome&) = default;
    friend auto operator<=>(const Palindrome&, const Palindrome&) = default;
};

/// The 2n-1 maximal palindromes of a string, ordered by center.
struct PalindromicFingerprint {
    int n = 0;
    std::vector<Palindrome> palindromes;

    friend bool operator==(const PalindromicFingerprint&, const PalindromicFingerprint&) = default;
};

PalindromicFingerprint array_to_fingerprint(const ManacherArray& a);

/// Accepts the palindromes in any order; throws MalformedInput on a missing
/// or duplicated center or an out-of-range pair.
ManacherArray fingerprint_to_array(const PalindromicFingerprint& f);

/// Doubled center of the longest palindromic suffix of every prefix
/// s[1..i]; the sequence is non-decreasing.
std::vector<int> suffix_palindrome_centers(std::span<const Symbol> s);

/// Same, read off a Manacher array instead of a string.
std::vector<int> suffix_palindrome_centers(const ManacherArray& a);

/// True iff some string has this Manacher array. Decided by minimal
/// reconstruction followed by recomputation.
bool validate_array(const ManacherArray& a);

} // namespace palcomb
