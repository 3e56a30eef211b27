#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace palcomb {

/// Alphabet symbol. Ids start at 1 and their numeric order is the
/// lexicographic order of the alphabet.
using Symbol = std::uint32_t;

using Text = std::vector<Symbol>;

/// Parses the textual form: digits '1'..'9' stand for themselves, larger ids
/// are written in brackets ("[12]"). Throws MalformedInput.
Text parse_text(std::string_view s);

/// Inverse of parse_text.
std::string render_text(std::span<const Symbol> t);

/// Relabels symbols by order of first occurrence (restricted-growth form).
Text canonicalize(std::span<const Symbol> t);

bool is_canonical(std::span<const Symbol> t);

bool is_palindrome(std::span<const Symbol> t);

/// Number of distinct symbols.
std::size_t alphabet_size(std::span<const Symbol> t);

} // namespace palcomb
