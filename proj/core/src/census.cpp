#include "palcomb/census.hpp"

#include "palcomb/dup_trees.hpp"
#include "palcomb/error.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <string>
#include <thread>

namespace palcomb {

int census_alphabet(int n)
{
    if (n <= 1)
        return 1;
    const int log_bound = static_cast<int>(std::bit_width(static_cast<unsigned>(n - 1))) - 1 + 2;
    return std::min(n, log_bound);
}

unsigned resolve_workers(unsigned requested)
{
    unsigned workers = requested != 0 ? requested : std::max(1U, std::thread::hardware_concurrency());
    if (const char* cap = std::getenv("PALCOMB_WORKERS")) {
        const long value = std::strtol(cap, nullptr, 10);
        if (value > 0)
            workers = std::min(workers, static_cast<unsigned>(value));
    }
    return workers;
}

std::uint64_t pack_symbols(std::span<const Symbol> t)
{
    std::uint64_t packed = 0;
    for (Symbol s : t)
        packed = (packed << 4) | (s & 0xFU);
    return packed;
}

Text unpack_symbols(std::uint64_t packed, int n)
{
    Text t(static_cast<std::size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        t[static_cast<std::size_t>(i)] = static_cast<Symbol>(packed & 0xFU);
        packed >>= 4;
    }
    return t;
}

std::uint64_t pack_counter(const CounterArray& c)
{
    std::uint64_t packed = 0;
    for (int v : c.a)
        packed = (packed << 4) | (static_cast<std::uint64_t>(v) & 0xFU);
    return packed;
}

CounterArray unpack_counter(std::uint64_t packed, int n)
{
    CounterArray c;
    c.a.resize(static_cast<std::size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        c.a[static_cast<std::size_t>(i)] = static_cast<int>(packed & 0xFU);
        packed >>= 4;
    }
    return c;
}

namespace {

void check_n(int n, const CensusOptions& options)
{
    if (options.exhaustive_limit > max_exhaustive_limit)
        throw MalformedInput("exhaustive limit cannot exceed " + std::to_string(max_exhaustive_limit));
    if (n < 1 || n > options.exhaustive_limit)
        throw MalformedInput("census length " + std::to_string(n) + " outside [1, "
                             + std::to_string(options.exhaustive_limit) + "]");
}

class Worker {
public:
    Worker(int n, int alphabet, bool check_codec) : n_(n), alphabet_(alphabet), check_codec_(check_codec)
    {
        census_.n = n;
        census_.alphabet = alphabet;
        text_.reserve(static_cast<std::size_t>(n));
    }

    void run(const Text& prefix)
    {
        text_ = prefix;
        const Symbol top = prefix.empty() ? 0 : *std::max_element(prefix.begin(), prefix.end());
        extend(top);
    }

    ArrayCensus& result() { return census_; }

private:
    void extend(Symbol top)
    {
        if (text_.size() == static_cast<std::size_t>(n_)) {
            visit(top);
            return;
        }
        const Symbol limit = std::min<Symbol>(top + 1, static_cast<Symbol>(alphabet_));
        for (Symbol s = 1; s <= limit; ++s) {
            text_.push_back(s);
            extend(std::max(top, s));
            text_.pop_back();
        }
    }

    void visit(Symbol top)
    {
        ++census_.strings;
        if (top <= 3)
            ++census_.ternary_strings;

        const ManacherArray array = compute_manacher(text_);
        const DeltaArray deltas = delta_array(array);
        const CounterArray counter = compact_to_counter(deltas);
        if (check_codec_) {
            const CompactBits bits = encode_bits(deltas);
            if (bits.bit_len > static_cast<std::size_t>(3 * n_ - 1))
                ++census_.bit_bound_violations;
            if (decode_bits(bits, n_) != deltas || decode_compact(deltas) != array)
                ++census_.codec_mismatches;
            if (!is_counter_array(counter.a) || counter_to_compact(counter) != deltas)
                ++census_.counter_mismatches;
        }

        const std::uint64_t packed = pack_symbols(text_);
        auto [it, inserted] = census_.arrays.try_emplace(pack_counter(counter), Realization{packed,
                                                                                           static_cast<std::uint8_t>(top)});
        if (!inserted) {
            it->second.text = std::min(it->second.text, packed);
            it->second.alphabet = std::min(it->second.alphabet, static_cast<std::uint8_t>(top));
        }
    }

    int n_;
    int alphabet_;
    bool check_codec_;
    Text text_;
    ArrayCensus census_;
};

void prefixes(int length, int alphabet, Text& cur, Symbol top, std::vector<Text>& out)
{
    if (cur.size() == static_cast<std::size_t>(length)) {
        out.push_back(cur);
        return;
    }
    const Symbol limit = std::min<Symbol>(top + 1, static_cast<Symbol>(alphabet));
    for (Symbol s = 1; s <= limit; ++s) {
        cur.push_back(s);
        prefixes(length, alphabet, cur, std::max(top, s), out);
        cur.pop_back();
    }
}

void merge_into(ArrayCensus& into, ArrayCensus& from)
{
    into.strings += from.strings;
    into.ternary_strings += from.ternary_strings;
    into.codec_mismatches += from.codec_mismatches;
    into.bit_bound_violations += from.bit_bound_violations;
    into.counter_mismatches += from.counter_mismatches;
    for (const auto& [key, r] : from.arrays) {
        auto [it, inserted] = into.arrays.try_emplace(key, r);
        if (!inserted) {
            it->second.text = std::min(it->second.text, r.text);
            it->second.alphabet = std::min(it->second.alphabet, r.alphabet);
        }
    }
}

} // namespace

ArrayCensus enumerate_rho(int n, const CensusOptions& options)
{
    check_n(n, options);
    const int alphabet = std::min(n, census_alphabet(n) + std::max(0, options.extra_symbols));

    std::vector<Text> shards;
    Text cur;
    prefixes(std::min(n, 6), alphabet, cur, 0, shards);

    const unsigned workers = std::min<unsigned>(resolve_workers(options.workers), static_cast<unsigned>(shards.size()));
    std::vector<Worker> locals;
    locals.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
        locals.emplace_back(n, alphabet, options.check_codec);

    std::atomic<std::size_t> next{0};
    auto drain = [&](Worker& worker) {
        for (std::size_t i = next++; i < shards.size(); i = next++)
            worker.run(shards[i]);
    };
    if (workers == 1) {
        drain(locals.front());
    } else {
        std::vector<std::jthread> threads;
        threads.reserve(workers);
        for (auto& worker : locals)
            threads.emplace_back([&drain, &worker] { drain(worker); });
    }

    ArrayCensus out = std::move(locals.front().result());
    for (std::size_t w = 1; w < locals.size(); ++w)
        merge_into(out, locals[w].result());
    out.ternary_distinct = static_cast<std::uint64_t>(
        std::count_if(out.arrays.begin(), out.arrays.end(), [](const auto& kv) { return kv.second.alphabet <= 3; }));
    return out;
}

std::vector<ManacherArray> distinct_arrays(const ArrayCensus& census)
{
    std::vector<std::uint64_t> keys;
    keys.reserve(census.arrays.size());
    for (const auto& kv : census.arrays)
        keys.push_back(kv.first);
    std::sort(keys.begin(), keys.end());
    std::vector<ManacherArray> out;
    out.reserve(keys.size());
    for (auto key : keys)
        out.push_back(decode_compact(counter_to_compact(unpack_counter(key, census.n))));
    return out;
}

CensusRow census_row(const ArrayCensus& census)
{
    CensusRow row;
    row.n = census.n;
    row.rho = census.rho();
    row.sigma = sigma_count(census.n).convert_to<std::uint64_t>();
    row.r_next = r_count(census.n + 1).convert_to<std::uint64_t>();
    row.ternary_lower = census.ternary_strings;
    return row;
}

std::vector<CensusRow> census_table(int max_n, const CensusOptions& options)
{
    check_n(max_n, options);
    std::vector<CensusRow> rows;
    for (int n = 1; n <= max_n; ++n)
        rows.push_back(census_row(enumerate_rho(n, options)));
    return rows;
}

std::vector<CounterArray> unrealizable_counters(int n, const CensusOptions& options)
{
    check_n(n, options);
    const auto all = all_counter_arrays(n);
    const unsigned workers = resolve_workers(options.workers);
    std::vector<char> bad(all.size(), 0);
    std::atomic<std::size_t> next{0};
    constexpr std::size_t chunk = 1024;
    auto drain = [&] {
        for (std::size_t base = next.fetch_add(chunk); base < all.size(); base = next.fetch_add(chunk)) {
            for (std::size_t i = base; i < std::min(all.size(), base + chunk); ++i)
                bad[i] = is_realizable_counter(all[i]) ? 0 : 1;
        }
    };
    if (workers <= 1) {
        drain();
    } else {
        std::vector<std::jthread> threads;
        for (unsigned w = 0; w < workers; ++w)
            threads.emplace_back(drain);
    }
    std::vector<CounterArray> out;
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (bad[i])
            out.push_back(all[i]);
    }
    return out;
}

} // namespace palcomb
