#include "palcomb/manacher.hpp"

#include "palcomb/error.hpp"

#include <algorithm>
#include <string>

namespace palcomb {

bool radius_bounds_ok(const ManacherArray& a)
{
    if (a.n < 0)
        return false;
    const std::size_t expected = a.n == 0 ? 0 : static_cast<std::size_t>(2 * a.n - 1);
    if (a.radii.size() != expected)
        return false;
    for (int d = 2; d <= 2 * a.n; ++d) {
        const int r = a.radius_at(d);
        if (r < 0 || r > max_radius(a.n, d))
            return false;
    }
    return true;
}

void check_radius_bounds(const ManacherArray& a)
{
    if (a.n < 0)
        throw MalformedInput("negative string length");
    const std::size_t expected = a.n == 0 ? 0 : static_cast<std::size_t>(2 * a.n - 1);
    if (a.radii.size() != expected)
        throw MalformedInput("Manacher array for n=" + std::to_string(a.n) + " needs " + std::to_string(expected)
                             + " radii, got " + std::to_string(a.radii.size()));
    for (int d = 2; d <= 2 * a.n; ++d) {
        const int r = a.radius_at(d);
        if (r < 0 || r > max_radius(a.n, d))
            throw MalformedInput("radius " + std::to_string(r) + " at array index " + std::to_string(d - 1)
                                 + " exceeds the string bounds");
    }
}

ManacherArray compute_manacher(std::span<const Symbol> s)
{
    const int n = static_cast<int>(s.size());
    ManacherArray out;
    out.n = n;
    if (n == 0)
        return out;
    out.radii.assign(static_cast<std::size_t>(2 * n - 1), 0);

    std::vector<int> odd(static_cast<std::size_t>(n)), even(static_cast<std::size_t>(n));
    for (int i = 0, l = 0, r = -1; i < n; ++i) {
        int k = i > r ? 1 : std::min(odd[static_cast<std::size_t>(l + r - i)], r - i + 1);
        while (i - k >= 0 && i + k < n && s[static_cast<std::size_t>(i - k)] == s[static_cast<std::size_t>(i + k)])
            ++k;
        odd[static_cast<std::size_t>(i)] = k--;
        if (i + k > r) {
            l = i - k;
            r = i + k;
        }
    }
    // even[i]: radius of the even palindrome centered between i-1 and i.
    for (int i = 0, l = 0, r = -1; i < n; ++i) {
        int k = i > r ? 0 : std::min(even[static_cast<std::size_t>(l + r - i + 1)], r - i + 1);
        while (i - k - 1 >= 0 && i + k < n
               && s[static_cast<std::size_t>(i - k - 1)] == s[static_cast<std::size_t>(i + k)])
            ++k;
        even[static_cast<std::size_t>(i)] = k--;
        if (i + k > r) {
            l = i - k - 1;
            r = i + k;
        }
    }
    for (int i = 0; i < n; ++i) {
        out.radii[static_cast<std::size_t>(2 * i)] = odd[static_cast<std::size_t>(i)] - 1;
        if (i > 0)
            out.radii[static_cast<std::size_t>(2 * i - 1)] = even[static_cast<std::size_t>(i)];
    }
    return out;
}

ManacherArray naive_manacher(std::span<const Symbol> s)
{
    const int n = static_cast<int>(s.size());
    ManacherArray out;
    out.n = n;
    if (n == 0)
        return out;
    out.radii.assign(static_cast<std::size_t>(2 * n - 1), 0);
    for (int d = 2; d <= 2 * n; ++d) {
        // 0-based indices of the innermost pair around the center.
        int left = (d - 1) / 2 - 1;
        int right = d / 2;
        if (d % 2 == 0) {
            left = d / 2 - 2;
            right = d / 2;
        }
        int r = 0;
        while (left >= 0 && right < n && s[static_cast<std::size_t>(left)] == s[static_cast<std::size_t>(right)]) {
            ++r;
            --left;
            ++right;
        }
        out.radii[static_cast<std::size_t>(d - 2)] = r;
    }
    return out;
}

PalindromicFingerprint array_to_fingerprint(const ManacherArray& a)
{
    check_radius_bounds(a);
    PalindromicFingerprint f;
    f.n = a.n;
    f.palindromes.reserve(a.radii.size());
    for (int d = 2; d <= 2 * a.n; ++d) {
        const int k = d / 2;
        const int r = a.radius_at(d);
        if (d % 2 == 0)
            f.palindromes.push_back({k - r, k + r});
        else
            f.palindromes.push_back({k - r + 1, k + r});
    }
    return f;
}

ManacherArray fingerprint_to_array(const PalindromicFingerprint& f)
{
    if (f.n < 0)
        throw MalformedInput("negative fingerprint length");
    const std::size_t centers = f.n == 0 ? 0 : static_cast<std::size_t>(2 * f.n - 1);
    if (f.palindromes.size() != centers)
        throw MalformedInput("fingerprint of length " + std::to_string(f.n) + " needs " + std::to_string(centers)
                             + " palindromes, got " + std::to_string(f.palindromes.size()));
    ManacherArray a;
    a.n = f.n;
    a.radii.assign(centers, -1);
    for (const Palindrome& p : f.palindromes) {
        if (p.first < 1 || p.first > f.n + 1 || p.last < 0 || p.last > f.n || p.last < p.first - 1)
            throw MalformedInput("palindrome (" + std::to_string(p.first) + "," + std::to_string(p.last)
                                 + ") out of range");
        const int d = p.doubled_center();
        if (d < 2 || d > 2 * f.n)
            throw MalformedInput("palindrome (" + std::to_string(p.first) + "," + std::to_string(p.last)
                                 + ") has no valid center");
        auto& slot = a.radii[static_cast<std::size_t>(d - 2)];
        if (slot != -1)
            throw MalformedInput("duplicate palindrome for one center");
        slot = (p.last - p.first + 1) / 2;
    }
    check_radius_bounds(a);
    return a;
}

std::vector<int> suffix_palindrome_centers(const ManacherArray& a)
{
    check_radius_bounds(a);
    std::vector<int> centers;
    centers.reserve(static_cast<std::size_t>(a.n));
    int d = 2;
    for (int i = 1; i <= a.n; ++i) {
        d = std::max(d, i + 1);
        while (palindrome_end(d, a.radius_at(d)) < i)
            ++d;
        centers.push_back(d);
    }
    return centers;
}

std::vector<int> suffix_palindrome_centers(std::span<const Symbol> s)
{
    return suffix_palindrome_centers(compute_manacher(s));
}

} // namespace palcomb
