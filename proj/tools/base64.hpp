#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace palcomb::io {

std::string base64_encode(const std::vector<std::uint8_t>& bytes);

/// Standard alphabet with padding. Throws MalformedInput on bad input.
std::vector<std::uint8_t> base64_decode(std::string_view text);

} // namespace palcomb::io
