#pragma once

#include "palcomb/census.hpp"
#include "palcomb/compact_codec.hpp"
#include "palcomb/dup_trees.hpp"
#include "palcomb/manacher.hpp"
#include "palcomb/restriction_graph.hpp"
#include "palcomb/text.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>

// JSON forms of the library types. Parsers throw palcomb::MalformedInput.
namespace palcomb::io {

using Json = nlohmann::ordered_json;

Json to_json(const ManacherArray& a);
ManacherArray array_from_json(const Json& j);

Json to_json(const PalindromicFingerprint& f);
PalindromicFingerprint fingerprint_from_json(const Json& j);

/// {"symbols": [...]}.
Json text_to_json(const Text& t);
/// Accepts {"symbols": [...]} or a digit string.
Text text_from_json(const Json& j);
/// A bare argument: JSON object when it starts with '{', textual form otherwise.
Text text_from_argument(std::string_view arg);

/// {"classes": [[positions]...], "edges": [[a, b]...]}; edge endpoints index
/// into "classes". "coloring" is added when psi is given.
Json to_json(const RestrictionGraph& g, const std::optional<Coloring>& psi = std::nullopt);

/// {"n", "bit_len", "bits"} with bits base64-encoded MSB-first bytes.
Json envelope_to_json(int n, const CompactBits& bits);
struct Envelope {
    int n = 0;
    CompactBits bits;
};
Envelope envelope_from_json(const Json& j);

Json to_json(const CounterArray& c);

/// {"events": [[start, len]...]}.
Json to_json(const DuplicationHistory& h);
DuplicationHistory history_from_json(const Json& j);

/// Nested form: a leaf is its 1-based position in the gene array, an
/// internal node is [left, right].
Json to_json(const DupTree& t);
DupTree tree_from_json(const Json& j);

Json to_json(const CensusRow& row);
std::string census_csv_header();
std::string to_csv(const CensusRow& row);

/// Parses JSON text, mapping syntax errors to MalformedInput.
Json parse(std::string_view text);

} // namespace palcomb::io
