#include "palcomb/palindromes.hpp"

#include "palcomb/error.hpp"

namespace palcomb {

std::vector<int> palindromic_suffixes(std::span<const Symbol> p)
{
    if (!is_palindrome(p))
        throw MalformedInput("palindromic_suffixes: input is not a palindrome");
    std::vector<int> out;
    for (std::size_t len = 0; len <= p.size(); ++len) {
        if (is_palindrome(p.last(len)))
            out.push_back(static_cast<int>(len));
    }
    return out;
}

int minimal_period(std::span<const Symbol> t)
{
    const std::size_t n = t.size();
    for (std::size_t q = 1; q < n; ++q) {
        bool ok = true;
        for (std::size_t i = 0; i + q < n && ok; ++i)
            ok = t[i] == t[i + q];
        if (ok)
            return static_cast<int>(q);
    }
    return static_cast<int>(n);
}

Text PalindromicDecomposition::assemble() const
{
    Text out;
    for (int i = 0; i < reps; ++i) {
        out.insert(out.end(), q0.begin(), q0.end());
        out.insert(out.end(), q1.begin(), q1.end());
    }
    out.insert(out.end(), q0.begin(), q0.end());
    return out;
}

PalindromicDecomposition periodic_palindrome_decomposition(std::span<const Symbol> p)
{
    if (!is_palindrome(p))
        throw MalformedInput("periodic_palindrome_decomposition: input is not a palindrome");
    const auto n = p.size();
    const auto period = static_cast<std::size_t>(minimal_period(p));
    if (n == 0 || 2 * period > n)
        throw MalformedInput("periodic_palindrome_decomposition: input is not periodic");

    const std::size_t tail = n % period;
    PalindromicDecomposition out;
    out.reps = static_cast<int>(n / period);
    out.q0.assign(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(tail));
    out.q1.assign(p.begin() + static_cast<std::ptrdiff_t>(tail), p.begin() + static_cast<std::ptrdiff_t>(period));
    return out;
}

} // namespace palcomb
