#pragma once

#include "palcomb/manacher.hpp"
#include "palcomb/text.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace palcomb {

/// Doubled-center deltas of the longest palindromic suffixes:
/// b[0] = 2 and b[i] = 2(c_{i+1} - c_i), so the prefix sum through index i
/// is twice the suffix center of s[1..i+1].
struct DeltaArray {
    int n = 0;
    std::vector<int> b;

    friend bool operator==(const DeltaArray&, const DeltaArray&) = default;
};

/// Unary code of a DeltaArray, packed most-significant-bit first.
struct CompactBits {
    std::size_t bit_len = 0;
    std::vector<std::uint8_t> bytes;

    bool bit(std::size_t i) const { return (bytes[i / 8] >> (7 - i % 8)) & 1U; }

    friend bool operator==(const CompactBits&, const CompactBits&) = default;
};

/// 1 <= a[i] <= i and a[i+1] >= a[i] - 1 (1-based).
struct CounterArray {
    std::vector<int> a;

    std::size_t size() const { return a.size(); }

    friend bool operator==(const CounterArray&, const CounterArray&) = default;
    friend auto operator<=>(const CounterArray&, const CounterArray&) = default;
};

bool is_counter_array(std::span<const int> a);

/// Throws MalformedInput unless b[0] = 2, every b[i] >= 0 and every prefix
/// sum through 1-based i lies in [i+1, 2i].
void check_delta_array(const DeltaArray& d);

DeltaArray delta_array(std::span<const Symbol> s);

/// Same deltas, read off a Manacher array.
DeltaArray delta_array(const ManacherArray& a);

/// b[0] ones, a zero, b[1] ones, a zero, ..., b[n-1] ones.
CompactBits encode_bits(const DeltaArray& d);

/// Throws MalformedInput when the stream does not hold exactly n-1 zeros or
/// the decoded deltas break the prefix-sum invariant.
DeltaArray decode_bits(const CompactBits& bits, int n);

/// Incremental mirror decoder. Produces the Manacher array the deltas
/// describe without checking that a string realizes it.
ManacherArray decode_compact(const DeltaArray& d);

/// decode_compact followed by a realizability check: the result must be a
/// valid Manacher array whose own deltas are d. Throws Unrealizable.
ManacherArray compact_to_manacher(const DeltaArray& d);

CounterArray compact_to_counter(const DeltaArray& d);
DeltaArray counter_to_compact(const CounterArray& c);

bool is_realizable_counter(const CounterArray& c);

} // namespace palcomb
