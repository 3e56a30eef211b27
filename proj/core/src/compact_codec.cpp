#include "palcomb/compact_codec.hpp"

#include "palcomb/error.hpp"

#include <string>

namespace palcomb {

bool is_counter_array(std::span<const int> a)
{
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < 1 || a[i] > static_cast<int>(i + 1))
            return false;
        if (i > 0 && a[i] < a[i - 1] - 1)
            return false;
    }
    return true;
}

void check_delta_array(const DeltaArray& d)
{
    if (d.n < 1 || d.b.size() != static_cast<std::size_t>(d.n))
        throw MalformedInput("delta array must hold n >= 1 entries");
    int sum = 0;
    for (int i = 1; i <= d.n; ++i) {
        const int b = d.b[static_cast<std::size_t>(i - 1)];
        if (b < 0)
            throw MalformedInput("negative delta at position " + std::to_string(i));
        sum += b;
        if (sum < i + 1 || sum > 2 * i)
            throw MalformedInput("delta prefix sum " + std::to_string(sum) + " at position " + std::to_string(i)
                                 + " outside [" + std::to_string(i + 1) + ", " + std::to_string(2 * i) + "]");
    }
}

DeltaArray delta_array(const ManacherArray& a)
{
    if (a.n < 1)
        throw MalformedInput("delta array needs n >= 1");
    const auto centers = suffix_palindrome_centers(a);
    DeltaArray d;
    d.n = a.n;
    d.b.reserve(centers.size());
    d.b.push_back(centers.front());
    for (std::size_t i = 1; i < centers.size(); ++i)
        d.b.push_back(centers[i] - centers[i - 1]);
    return d;
}

DeltaArray delta_array(std::span<const Symbol> s) { return delta_array(compute_manacher(s)); }

CompactBits encode_bits(const DeltaArray& d)
{
    check_delta_array(d);
    CompactBits out;
    auto push = [&out](bool one) {
        if (out.bit_len % 8 == 0)
            out.bytes.push_back(0);
        if (one)
            out.bytes.back() |= static_cast<std::uint8_t>(0x80U >> (out.bit_len % 8));
        ++out.bit_len;
    };
    for (std::size_t i = 0; i < d.b.size(); ++i) {
        if (i > 0)
            push(false);
        for (int k = 0; k < d.b[i]; ++k)
            push(true);
    }
    return out;
}

DeltaArray decode_bits(const CompactBits& bits, int n)
{
    if (n < 1)
        throw MalformedInput("compact stream needs n >= 1");
    if (bits.bytes.size() * 8 < bits.bit_len || bits.bytes.size() > (bits.bit_len + 7) / 8)
        throw MalformedInput("bit length does not match the packed byte count");
    DeltaArray d;
    d.n = n;
    d.b.push_back(0);
    for (std::size_t i = 0; i < bits.bit_len; ++i) {
        if (bits.bit(i))
            ++d.b.back();
        else
            d.b.push_back(0);
    }
    if (d.b.size() != static_cast<std::size_t>(n))
        throw MalformedInput("compact stream holds " + std::to_string(d.b.size() - 1) + " separators, expected "
                             + std::to_string(n - 1));
    check_delta_array(d);
    return d;
}

ManacherArray decode_compact(const DeltaArray& d)
{
    check_delta_array(d);
    ManacherArray a;
    a.n = d.n;
    a.radii.assign(static_cast<std::size_t>(2 * d.n - 1), 0);
    auto radius = [&a](int center) -> int& { return a.radii[static_cast<std::size_t>(center - 2)]; };
    // Radius at doubled center c of a palindrome ending at position m.
    auto reach = [](int center, int m) { return (2 * m - center + 1) / 2; };

    int suffix_center = 0;
    for (int m = 1; m <= d.n; ++m) {
        suffix_center += d.b[static_cast<std::size_t>(m - 1)];
        radius(suffix_center) = reach(suffix_center, m);
        for (int c = suffix_center + 1; c <= 2 * m; ++c) {
            const int mirror = 2 * suffix_center - c;
            if (mirror < 2)
                throw Unrealizable("compact representation references a center before the string start");
            radius(c) = std::min(reach(c, m), radius(mirror));
        }
    }
    return a;
}

ManacherArray compact_to_manacher(const DeltaArray& d)
{
    ManacherArray a = decode_compact(d);
    if (!validate_array(a) || delta_array(a) != d)
        throw Unrealizable("compact representation does not describe any string");
    return a;
}

CounterArray compact_to_counter(const DeltaArray& d)
{
    check_delta_array(d);
    CounterArray c;
    c.a.reserve(d.b.size());
    int sum = 0;
    for (std::size_t i = 0; i < d.b.size(); ++i) {
        sum += d.b[i];
        c.a.push_back(sum - static_cast<int>(i + 1));
    }
    if (!is_counter_array(c.a))
        throw MalformedInput("delta array does not map to a counter array");
    return c;
}

DeltaArray counter_to_compact(const CounterArray& c)
{
    if (c.a.empty() || !is_counter_array(c.a))
        throw MalformedInput("not a non-empty counter array");
    DeltaArray d;
    d.n = static_cast<int>(c.a.size());
    d.b.reserve(c.a.size());
    d.b.push_back(c.a[0] + 1);
    for (std::size_t i = 1; i < c.a.size(); ++i)
        d.b.push_back(c.a[i] - c.a[i - 1] + 1);
    return d;
}

bool is_realizable_counter(const CounterArray& c)
{
    try {
        (void)compact_to_manacher(counter_to_compact(c));
        return true;
    } catch (const Unrealizable&) {
        return false;
    }
}

} // namespace palcomb
