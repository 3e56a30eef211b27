#include "json_io.hpp"

#include "base64.hpp"

#include "palcomb/error.hpp"

#include <algorithm>
#include <sstream>

namespace palcomb::io {

namespace {

const Json& field(const Json& j, const char* name)
{
    if (!j.is_object() || !j.contains(name))
        throw MalformedInput(std::string("JSON object lacks field \"") + name + "\"");
    return j.at(name);
}

int as_int(const Json& j, const char* what)
{
    if (!j.is_number_integer())
        throw MalformedInput(std::string(what) + " must be an integer");
    return j.get<int>();
}

std::vector<int> as_int_array(const Json& j, const char* what)
{
    if (!j.is_array())
        throw MalformedInput(std::string(what) + " must be an array");
    std::vector<int> out;
    out.reserve(j.size());
    for (const auto& v : j)
        out.push_back(as_int(v, what));
    return out;
}

} // namespace

Json parse(std::string_view text)
{
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        throw MalformedInput(std::string("invalid JSON: ") + e.what());
    }
}

Json to_json(const ManacherArray& a) { return Json{{"n", a.n}, {"radii", a.radii}}; }

ManacherArray array_from_json(const Json& j)
{
    ManacherArray a;
    a.n = as_int(field(j, "n"), "\"n\"");
    a.radii = as_int_array(field(j, "radii"), "\"radii\"");
    if (a.n < 0)
        throw MalformedInput("\"n\" must be non-negative");
    const std::size_t expected = a.n == 0 ? 0 : static_cast<std::size_t>(2 * a.n - 1);
    if (a.radii.size() != expected)
        throw MalformedInput("\"radii\" must hold 2n-1 entries");
    return a;
}

Json to_json(const PalindromicFingerprint& f)
{
    Json list = Json::array();
    for (const auto& p : f.palindromes)
        list.push_back({p.first, p.last});
    return Json{{"n", f.n}, {"palindromes", list}};
}

PalindromicFingerprint fingerprint_from_json(const Json& j)
{
    PalindromicFingerprint f;
    f.n = as_int(field(j, "n"), "\"n\"");
    const auto& list = field(j, "palindromes");
    if (!list.is_array())
        throw MalformedInput("\"palindromes\" must be an array");
    for (const auto& pair : list) {
        const auto v = as_int_array(pair, "palindrome");
        if (v.size() != 2)
            throw MalformedInput("each palindrome must be a pair [i, j]");
        f.palindromes.push_back({v[0], v[1]});
    }
    std::sort(f.palindromes.begin(), f.palindromes.end(),
              [](const Palindrome& a, const Palindrome& b) { return a.doubled_center() < b.doubled_center(); });
    return f;
}

Json text_to_json(const Text& t) { return Json{{"symbols", t}}; }

Text text_from_json(const Json& j)
{
    if (j.is_string())
        return parse_text(j.get<std::string>());
    Text t;
    for (int v : as_int_array(field(j, "symbols"), "\"symbols\"")) {
        if (v < 1)
            throw MalformedInput("symbols must be positive");
        t.push_back(static_cast<Symbol>(v));
    }
    return t;
}

Text text_from_argument(std::string_view arg)
{
    if (!arg.empty() && arg.front() == '{')
        return text_from_json(parse(arg));
    return parse_text(arg);
}

Json to_json(const RestrictionGraph& g, const std::optional<Coloring>& psi)
{
    Json classes = Json::array();
    for (const auto& c : g.classes().classes)
        classes.push_back(c);
    Json edges = Json::array();
    for (auto [a, b] : g.edges())
        edges.push_back({a, b});
    Json out{{"classes", classes}, {"edges", edges}};
    if (psi)
        out["coloring"] = psi->color_of;
    return out;
}

Json envelope_to_json(int n, const CompactBits& bits)
{
    return Json{{"n", n}, {"bit_len", bits.bit_len}, {"bits", base64_encode(bits.bytes)}};
}

Envelope envelope_from_json(const Json& j)
{
    Envelope e;
    e.n = as_int(field(j, "n"), "\"n\"");
    const int len = as_int(field(j, "bit_len"), "\"bit_len\"");
    if (len < 0)
        throw MalformedInput("\"bit_len\" must be non-negative");
    e.bits.bit_len = static_cast<std::size_t>(len);
    const auto& bits = field(j, "bits");
    if (!bits.is_string())
        throw MalformedInput("\"bits\" must be a base64 string");
    e.bits.bytes = base64_decode(bits.get<std::string>());
    return e;
}

Json to_json(const CounterArray& c) { return Json{{"n", c.a.size()}, {"counter", c.a}}; }

Json to_json(const DuplicationHistory& h)
{
    Json events = Json::array();
    for (const auto& e : h.events)
        events.push_back({e.start, e.len});
    return Json{{"events", events}};
}

DuplicationHistory history_from_json(const Json& j)
{
    const auto& events = field(j, "events");
    if (!events.is_array())
        throw MalformedInput("\"events\" must be an array");
    DuplicationHistory h;
    for (const auto& e : events) {
        const auto v = as_int_array(e, "event");
        if (v.size() != 2)
            throw MalformedInput("each event must be a pair [start, len]");
        h.events.push_back({v[0], v[1]});
    }
    return h;
}

namespace {

Json subtree(const DupTree& t, int id, const std::vector<int>& pos)
{
    const auto& nd = t.node(id);
    if (nd.is_leaf())
        return pos[static_cast<std::size_t>(id)];
    return Json::array({subtree(t, nd.left, pos), subtree(t, nd.right, pos)});
}

int build(const Json& j, int parent, std::vector<DupTree::Node>& nodes, std::vector<std::pair<int, int>>& labels)
{
    const int id = static_cast<int>(nodes.size());
    nodes.push_back({-1, -1, parent});
    if (j.is_number_integer()) {
        labels.emplace_back(j.get<int>(), id);
        return id;
    }
    if (!j.is_array() || j.size() != 2)
        throw MalformedInput("tree nodes must be a leaf position or a pair [left, right]");
    const int left = build(j[0], id, nodes, labels);
    const int right = build(j[1], id, nodes, labels);
    nodes[static_cast<std::size_t>(id)].left = left;
    nodes[static_cast<std::size_t>(id)].right = right;
    return id;
}

} // namespace

Json to_json(const DupTree& t) { return subtree(t, t.root(), t.leaf_positions()); }

DupTree tree_from_json(const Json& j)
{
    std::vector<DupTree::Node> nodes;
    std::vector<std::pair<int, int>> labels;
    build(j, -1, nodes, labels);
    std::sort(labels.begin(), labels.end());
    std::vector<int> order;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i].first != static_cast<int>(i + 1))
            throw MalformedInput("leaf positions must be a permutation of 1..leaves");
        order.push_back(labels[i].second);
    }
    return DupTree(std::move(nodes), std::move(order));
}

Json to_json(const CensusRow& row)
{
    return Json{{"n", row.n},
                {"rho", row.rho},
                {"sigma", row.sigma},
                {"r_next", row.r_next},
                {"ternary_lower", row.ternary_lower}};
}

std::string census_csv_header() { return "n,rho,sigma,r_next,ternary_lower"; }

std::string to_csv(const CensusRow& row)
{
    std::ostringstream os;
    os << row.n << ',' << row.rho << ',' << row.sigma << ',' << row.r_next << ',' << row.ternary_lower;
    return os.str();
}

} // namespace palcomb::io
