#include "cli.hpp"

#include "json_io.hpp"

#include "palcomb/census.hpp"
#include "palcomb/compact_codec.hpp"
#include "palcomb/dup_trees.hpp"
#include "palcomb/error.hpp"
#include "palcomb/manacher.hpp"
#include "palcomb/reconstruct.hpp"
#include "palcomb/restriction_graph.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace palcomb::cli {

namespace {

std::string read_source(const std::string& path, std::istream& in)
{
    if (path.empty() || path == "-")
        return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    std::ifstream file(path, std::ios::binary);
    if (!file)
        throw MalformedInput("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

ManacherArray read_array(const std::string& path, std::istream& in)
{
    return io::array_from_json(io::parse(read_source(path, in)));
}

std::string render_plain_or_json(const Text& t, bool json)
{
    if (json)
        return io::Json{{"text", render_text(t)}, {"symbols", t}, {"alphabet_size", alphabet_size(t)}}.dump();
    return render_text(t);
}

} // namespace

int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Manacher arrays: compute, reconstruct, encode, count."};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Expand all help");

    std::string text_arg;
    std::string file_arg;
    bool dot = false;
    bool color = false;
    bool json = false;
    std::size_t k = 0;
    int number = 0;

    auto* manacher = app.add_subcommand("manacher", "Manacher array of a text");
    manacher->add_option("text", text_arg, "digit string, [12]-style symbols, or {\"symbols\":[...]}")->required();

    auto* fingerprint = app.add_subcommand("fingerprint", "Maximal palindromes of a text");
    fingerprint->add_option("text", text_arg)->required();

    auto* graph = app.add_subcommand("graph", "Restriction graph of a text or Manacher array");
    graph->add_option("text", text_arg);
    graph->add_option("--array", file_arg, "Manacher array JSON file ('-' or omitted: stdin)");
    graph->add_flag("--dot", dot, "Graphviz output");
    graph->add_flag("--color", color, "Include the greedy minimal coloring");

    auto* reconstruct = app.add_subcommand("reconstruct", "String with a given Manacher array");
    reconstruct->add_option("--array", file_arg, "Manacher array JSON file ('-' or omitted: stdin)");
    auto* k_option = reconstruct->add_option("--k", k, "Exact number of distinct symbols");
    reconstruct->add_flag("--json", json, "Structured output");

    auto* encode = app.add_subcommand("encode", "Compact bit representation of a text's Manacher array");
    encode->add_option("text", text_arg)->required();

    auto* decode = app.add_subcommand("decode", "Manacher array from a compact envelope");
    decode->add_option("file", file_arg, "envelope JSON file ('-' or omitted: stdin)");

    auto* counter = app.add_subcommand("counter", "Counter array of a text or compact envelope");
    counter->add_option("text", text_arg);
    counter->add_option("--compact", file_arg, "envelope JSON file ('-': stdin)");

    auto* trees = app.add_subcommand("trees", "Rooted tandem duplication trees");
    trees->require_subcommand(1);
    auto* t_decompose = trees->add_subcommand("decompose", "Tree JSON -> ordered event history");
    t_decompose->add_option("file", file_arg);
    auto* t_replay = trees->add_subcommand("replay", "Event history JSON -> tree");
    t_replay->add_option("file", file_arg);
    std::string tree_format = "json";
    t_replay->add_option("--format", tree_format, "json | text | dot")
        ->check(CLI::IsMember({"json", "text", "dot"}));
    auto* t_encode = trees->add_subcommand("encode", "Event history JSON -> counter array");
    t_encode->add_option("file", file_arg);
    auto* t_count = trees->add_subcommand("count", "Number of rooted duplication trees with N leaves");
    t_count->add_option("N", number)->required();
    bool sigma = false;
    t_count->add_flag("--sigma", sigma, "Count counter arrays of length N instead");

    auto* zimin = app.add_subcommand("zimin", "Shortest palindromic Zimin word");
    zimin->add_option("--degree", number)->required();

    auto* zimin_degree = app.add_subcommand("zimin-degree", "Palindromic Zimin degree of a text and of its suffixes");
    zimin_degree->add_option("text", text_arg)->required();

    auto* alpha_cmd = app.add_subcommand("alpha", "Minimal length forcing K symbols");
    alpha_cmd->add_option("K", number)->required();

    auto* tight = app.add_subcommand("tight-example", "Shortest string whose array needs K symbols");
    tight->add_option("K", number)->required();

    auto* census = app.add_subcommand("census", "Exhaustive count of distinct Manacher arrays");
    int max_n = 0;
    int limit = default_exhaustive_limit;
    unsigned workers = 0;
    bool csv = false;
    bool witnesses = false;
    census->add_option("--max-n", max_n)->required();
    census->add_flag("--csv", csv, "CSV output (default)");
    census->add_flag("--json", json, "JSON output");
    census->add_flag("--witnesses", witnesses, "Also list unrealizable counter arrays");
    census->add_option("--limit", limit, "Exhaustive length limit")->check(CLI::Range(1, max_exhaustive_limit));
    census->add_option("--workers", workers, "Worker threads (0: all cores; PALCOMB_WORKERS caps)");

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    }

    try {
        if (manacher->parsed()) {
            out << io::to_json(compute_manacher(io::text_from_argument(text_arg))).dump() << '\n';
        } else if (fingerprint->parsed()) {
            const Text t = io::text_from_argument(text_arg);
            out << io::to_json(array_to_fingerprint(compute_manacher(t))).dump() << '\n';
        } else if (graph->parsed()) {
            const ManacherArray a
                = text_arg.empty() ? read_array(file_arg, in) : compute_manacher(io::text_from_argument(text_arg));
            check_radius_bounds(a);
            const RestrictionGraph g = build_restriction_graph(array_to_fingerprint(a));
            std::optional<Coloring> psi;
            if (color)
                psi = greedy_min_coloring(g);
            if (dot)
                out << to_dot(g, psi);
            else
                out << io::to_json(g, psi).dump() << '\n';
        } else if (reconstruct->parsed()) {
            const ManacherArray a = read_array(file_arg, in);
            if (k_option->count() > 0)
                out << render_plain_or_json(reconstruct_with_k(a, k), json) << '\n';
            else
                out << render_plain_or_json(reconstruct_minimal(a).text, json) << '\n';
        } else if (encode->parsed()) {
            const Text t = io::text_from_argument(text_arg);
            out << io::envelope_to_json(static_cast<int>(t.size()), encode_bits(delta_array(t))).dump() << '\n';
        } else if (decode->parsed()) {
            const auto envelope = io::envelope_from_json(io::parse(read_source(file_arg, in)));
            out << io::to_json(compact_to_manacher(decode_bits(envelope.bits, envelope.n))).dump() << '\n';
        } else if (counter->parsed()) {
            CounterArray c;
            bool realizable = true;
            if (!text_arg.empty()) {
                c = compact_to_counter(delta_array(io::text_from_argument(text_arg)));
            } else {
                const auto envelope = io::envelope_from_json(io::parse(read_source(file_arg, in)));
                c = compact_to_counter(decode_bits(envelope.bits, envelope.n));
                realizable = is_realizable_counter(c);
            }
            auto j = io::to_json(c);
            j["realizable"] = realizable;
            out << j.dump() << '\n';
        } else if (t_decompose->parsed()) {
            out << io::to_json(decompose(io::tree_from_json(io::parse(read_source(file_arg, in))))).dump() << '\n';
        } else if (t_replay->parsed()) {
            const DupTree t = replay(io::history_from_json(io::parse(read_source(file_arg, in))));
            if (tree_format == "text")
                out << t.to_text();
            else if (tree_format == "dot")
                out << t.to_dot();
            else
                out << io::to_json(t).dump() << '\n';
        } else if (t_encode->parsed()) {
            out << io::to_json(encode_events(io::history_from_json(io::parse(read_source(file_arg, in))))).dump()
                << '\n';
        } else if (t_count->parsed()) {
            out << (sigma ? sigma_count(number) : r_count(number)) << '\n';
        } else if (zimin->parsed()) {
            out << render_text(pal_zimin_word(number)) << '\n';
        } else if (zimin_degree->parsed()) {
            const Text t = io::text_from_argument(text_arg);
            out << io::Json{{"degree", pal_zimin_degree(t)}, {"suffix_degree", pal_zimin_suffix_degree(t)}}.dump()
                << '\n';
        } else if (alpha_cmd->parsed()) {
            out << alpha(number) << '\n';
        } else if (tight->parsed()) {
            out << render_text(tight_example(number)) << '\n';
        } else if (census->parsed()) {
            if (csv && json)
                throw MalformedInput("--csv and --json are mutually exclusive");
            CensusOptions options;
            options.exhaustive_limit = limit;
            options.workers = workers;
            const auto rows = census_table(max_n, options);
            std::vector<std::vector<CounterArray>> gaps;
            if (witnesses) {
                for (int n = 1; n <= max_n; ++n)
                    gaps.push_back(unrealizable_counters(n, options));
            }
            if (json) {
                io::Json j{{"rows", io::Json::array()}};
                for (const auto& row : rows)
                    j["rows"].push_back(io::to_json(row));
                if (witnesses) {
                    io::Json w = io::Json::object();
                    for (std::size_t i = 0; i < gaps.size(); ++i) {
                        io::Json list = io::Json::array();
                        for (const auto& c : gaps[i])
                            list.push_back(c.a);
                        w[std::to_string(i + 1)] = list;
                    }
                    j["witnesses"] = w;
                }
                out << j.dump() << '\n';
            } else {
                out << io::census_csv_header() << '\n';
                for (const auto& row : rows)
                    out << io::to_csv(row) << '\n';
                if (witnesses) {
                    out << "\nn,witness\n";
                    for (std::size_t i = 0; i < gaps.size(); ++i) {
                        for (const auto& c : gaps[i]) {
                            out << i + 1 << ',';
                            for (std::size_t v = 0; v < c.a.size(); ++v)
                                out << (v ? " " : "") << c.a[v];
                            out << '\n';
                        }
                    }
                }
            }
        }
    } catch (const Unrealizable& e) {
        err << "unrealizable: " << e.what() << '\n';
        return unrealizable;
    } catch (const Impossible& e) {
        err << "out of range: " << e.what() << '\n';
        return out_of_range;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    }
    return ok;
}

} // namespace palcomb::cli
