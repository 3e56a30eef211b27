#include "palcomb/text.hpp"

#include "palcomb/error.hpp"

#include <algorithm>
#include <charconv>
#include <unordered_map>
#include <unordered_set>

namespace palcomb {

Text parse_text(std::string_view s)
{
    Text out;
    out.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        const char ch = s[i];
        if (ch >= '1' && ch <= '9') {
            out.push_back(static_cast<Symbol>(ch - '0'));
            continue;
        }
        if (ch != '[')
            throw MalformedInput("invalid symbol character '" + std::string(1, ch) + "' in text");
        const auto close = s.find(']', i + 1);
        if (close == std::string_view::npos)
            throw MalformedInput("unterminated bracketed symbol in text");
        const auto body = s.substr(i + 1, close - i - 1);
        Symbol value = 0;
        auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), value);
        if (ec != std::errc{} || ptr != body.data() + body.size() || body.empty() || value == 0)
            throw MalformedInput("invalid bracketed symbol '[" + std::string(body) + "]'");
        out.push_back(value);
        i = close;
    }
    return out;
}

std::string render_text(std::span<const Symbol> t)
{
    std::string out;
    out.reserve(t.size());
    for (Symbol s : t) {
        if (s >= 1 && s <= 9)
            out.push_back(static_cast<char>('0' + s));
        else
            out += "[" + std::to_string(s) + "]";
    }
    return out;
}

Text canonicalize(std::span<const Symbol> t)
{
    std::unordered_map<Symbol, Symbol> relabel;
    Text out;
    out.reserve(t.size());
    for (Symbol s : t) {
        auto [it, inserted] = relabel.try_emplace(s, static_cast<Symbol>(relabel.size() + 1));
        out.push_back(it->second);
    }
    return out;
}

bool is_canonical(std::span<const Symbol> t)
{
    Symbol max_seen = 0;
    for (Symbol s : t) {
        if (s == 0 || s > max_seen + 1)
            return false;
        max_seen = std::max(max_seen, s);
    }
    return true;
}

bool is_palindrome(std::span<const Symbol> t)
{
    return std::equal(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(t.size() / 2), t.rbegin());
}

std::size_t alphabet_size(std::span<const Symbol> t)
{
    return std::unordered_set<Symbol>(t.begin(), t.end()).size();
}

} // namespace palcomb
