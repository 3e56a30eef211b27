#pragma once

#include "palcomb/compact_codec.hpp"
#include "palcomb/manacher.hpp"

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace palcomb {

/// Largest n the census accepts unless the caller raises the limit.
inline constexpr int default_exhaustive_limit = 12;
/// Hard ceiling imposed by the packed 4-bit-per-entry keys.
inline constexpr int max_exhaustive_limit = 15;

/// Enumeration alphabet that provably reaches every Manacher array of
/// length n: min(n, floor(log2(n-1)) + 2), and 1 for n = 1.
int census_alphabet(int n);

struct CensusOptions {
    int exhaustive_limit = default_exhaustive_limit;
    /// 0 = hardware concurrency (capped by PALCOMB_WORKERS if set).
    unsigned workers = 0;
    /// Symbols beyond census_alphabet(n) to enumerate.
    int extra_symbols = 0;
    /// Run the codec checks on every string.
    bool check_codec = true;
};

/// Smallest realization seen for one distinct Manacher array.
struct Realization {
    std::uint64_t text = 0;          // packed, 4 bits per symbol, first symbol highest
    std::uint8_t alphabet = 0;       // fewest symbols among realizations
};

/// Outcome of one exhaustive pass over the canonical strings of length n.
struct ArrayCensus {
    int n = 0;
    int alphabet = 0;
    std::uint64_t strings = 0;
    std::uint64_t ternary_strings = 0;
    std::uint64_t ternary_distinct = 0;
    /// Keyed by the packed counter array of each distinct Manacher array.
    std::unordered_map<std::uint64_t, Realization> arrays;

    std::uint64_t codec_mismatches = 0;  // decode(deltas) != Manacher array, or bit roundtrip failed
    std::uint64_t bit_bound_violations = 0; // bit_len > 3n - 1
    std::uint64_t counter_mismatches = 0; // counter/compact not mutually inverse or not a counter array

    std::uint64_t rho() const { return arrays.size(); }
};

/// Throws MalformedInput when n is out of [1, exhaustive limit].
ArrayCensus enumerate_rho(int n, const CensusOptions& options = {});

/// Every distinct Manacher array of length n.
std::vector<ManacherArray> distinct_arrays(const ArrayCensus& census);

std::uint64_t pack_symbols(std::span<const Symbol> t);
Text unpack_symbols(std::uint64_t packed, int n);
std::uint64_t pack_counter(const CounterArray& c);
CounterArray unpack_counter(std::uint64_t packed, int n);

struct CensusRow {
    int n = 0;
    std::uint64_t rho = 0;
    std::uint64_t sigma = 0;
    std::uint64_t r_next = 0;
    std::uint64_t ternary_lower = 0;

    /// ternary_lower <= rho <= sigma = r_next.
    bool sandwich_holds() const { return ternary_lower <= rho && rho <= sigma && sigma == r_next; }

    friend bool operator==(const CensusRow&, const CensusRow&) = default;
};

CensusRow census_row(const ArrayCensus& census);

/// Rows for n = 1..max_n.
std::vector<CensusRow> census_table(int max_n, const CensusOptions& options = {});

/// Counter arrays of length n that no string realizes, in lexicographic order.
std::vector<CounterArray> unrealizable_counters(int n, const CensusOptions& options = {});

/// Number of workers actually used for the given request.
unsigned resolve_workers(unsigned requested);

} // namespace palcomb
