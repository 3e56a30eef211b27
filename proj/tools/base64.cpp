#include "base64.hpp"

#include "palcomb/error.hpp"

#include <array>

namespace palcomb::io {

namespace {

constexpr std::string_view alphabet = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";

int sextet(char c)
{
    const auto pos = alphabet.find(c);
    return pos == std::string_view::npos ? -1 : static_cast<int>(pos);
}

} // namespace

std::string base64_encode(const std::vector<std::uint8_t>& bytes)
{
    std::string out;
    out.reserve((bytes.size() + 2) / 3 * 4);
    for (std::size_t i = 0; i < bytes.size(); i += 3) {
        const std::uint32_t chunk = (std::uint32_t{bytes[i]} << 16)
                                    | (i + 1 < bytes.size() ? std::uint32_t{bytes[i + 1]} << 8 : 0U)
                                    | (i + 2 < bytes.size() ? std::uint32_t{bytes[i + 2]} : 0U);
        out.push_back(alphabet[(chunk >> 18) & 0x3F]);
        out.push_back(alphabet[(chunk >> 12) & 0x3F]);
        out.push_back(i + 1 < bytes.size() ? alphabet[(chunk >> 6) & 0x3F] : '=');
        out.push_back(i + 2 < bytes.size() ? alphabet[chunk & 0x3F] : '=');
    }
    return out;
}

std::vector<std::uint8_t> base64_decode(std::string_view text)
{
    if (text.size() % 4 != 0)
        throw MalformedInput("base64 length is not a multiple of 4");
    std::vector<std::uint8_t> out;
    out.reserve(text.size() / 4 * 3);
    for (std::size_t i = 0; i < text.size(); i += 4) {
        std::array<int, 4> v{};
        int padding = 0;
        for (std::size_t k = 0; k < 4; ++k) {
            const char c = text[i + k];
            if (c == '=' && i + 4 == text.size() && k >= 2) {
                v[k] = 0;
                ++padding;
                continue;
            }
            if (padding > 0 || (v[k] = sextet(c)) < 0)
                throw MalformedInput("invalid base64 character");
        }
        const std::uint32_t chunk = (static_cast<std::uint32_t>(v[0]) << 18) | (static_cast<std::uint32_t>(v[1]) << 12)
                                    | (static_cast<std::uint32_t>(v[2]) << 6) | static_cast<std::uint32_t>(v[3]);
        out.push_back(static_cast<std::uint8_t>(chunk >> 16));
        if (padding < 2)
            out.push_back(static_cast<std::uint8_t>((chunk >> 8) & 0xFF));
        if (padding < 1)
            out.push_back(static_cast<std::uint8_t>(chunk & 0xFF));
    }
    return out;
}

} // namespace palcomb::io
