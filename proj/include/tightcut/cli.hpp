#pragma once

// Command-line surface. run() is a library function so the whole surface is
// testable in-process; tools/tightcut.cpp is a thin main().
//
// Exit codes: 0 success, 1 domain error or failed verification, 2 usage
// error, 3 internal invariant violation.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "tightcut/json_io.hpp"

namespace tightcut::cli {

namespace detail {

inline std::string read_input(const std::string& path, std::istream& in) {
    if (path == "-") {
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
    std::ifstream file(path);
    if (!file) throw domain_error("cannot open input: " + path);
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
}

inline std::string fnv1a_digest(const std::string& text) {
    unsigned long long h = 1469598103934665603ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char out[17];
    std::snprintf(out, sizeof(out), "%016llx", h);
    return out;
}

inline VertexSet parse_shore(const std::string& text) {
    std::vector<int> ids;
    std::istringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        if (token.empty()) continue;
        try {
            ids.push_back(std::stoi(token));
        } catch (const std::exception&) {
            throw domain_error("bad shore list: " + text);
        }
    }
    if (ids.empty()) throw domain_error("empty shore list");
    return VertexSet(std::move(ids));
}

// One input may hold a single edge-list graph or one graph6 line per row.
inline std::vector<std::pair<std::string, Multigraph>> parse_graphs(const std::string& label,
                                                                    const std::string& text) {
    std::vector<std::pair<std::string, Multigraph>> out;
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        if (c == 'p' || c == '#') {
            out.push_back({label, parse_edge_list(text)});
            return out;
        }
        break;
    }
    std::istringstream in(text);
    std::string line;
    int index = 0;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        out.push_back({label + ":" + std::to_string(index++), parse_graph6(line)});
    }
    if (out.empty()) throw parse_error("no graphs in input " + label);
    return out;
}

inline void text_render(const json& j, std::ostream& out, int indent) {
    std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (it.value().is_object() || it.value().is_array()) {
                out << pad << it.key() << ":\n";
                text_render(it.value(), out, indent + 1);
            } else {
                out << pad << it.key() << ": " << it.value().dump() << '\n';
            }
        }
    } else if (j.is_array()) {
        for (const auto& item : j) {
            if (item.is_object() || item.is_array()) {
                out << pad << "-\n";
                text_render(item, out, indent + 1);
            } else {
                out << pad << "- " << item.dump() << '\n';
            }
        }
    } else {
        out << pad << j.dump() << '\n';
    }
}

inline void emit(const json& report, const std::string& format, std::ostream& out) {
    if (format == "text")
        text_render(report, out, 0);
    else
        out << report.dump() << '\n';
}

inline json wrap_report(const std::vector<std::string>& args, const std::string& digest,
                        json result, double elapsed_ms) {
    std::string command;
    for (const std::string& a : args) {
        if (!command.empty()) command += ' ';
        command += a;
    }
    return json{{"command", command},
                {"elapsed_ms", elapsed_ms},
                {"input_digest", digest},
                {"result", std::move(result)}};
}

// All connected graphs on n <= 6 vertices up to isomorphism, as graph6.
inline std::vector<std::string> generate_connected(int n) {
    if (n < 1 || n > 6) throw domain_error("gen-connected supports 1 <= n <= 6");
    std::vector<std::pair<int, int>> slots;
    for (int j = 2; j <= n; ++j)
        for (int i = 1; i < j; ++i) slots.push_back({i, j});
    std::vector<std::string> seen;
    std::vector<std::pair<std::pair<int, std::string>, std::string>> keyed;
    for (unsigned long mask = 0; mask < (1UL << slots.size()); ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (std::size_t i = 0; i < slots.size(); ++i)
            if (mask >> i & 1) edges.push_back(slots[i]);
        Multigraph g(n, edges);
        if (!is_connected(g)) continue;
        std::string canon = canonical_simple_form(g);
        bool dup = false;
        for (const std::string& s : seen)
            if (s == canon) dup = true;
        if (dup) continue;
        seen.push_back(canon);
        keyed.push_back({{g.edge_count(), canon}, format_graph6(g)});
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<std::string> out;
    for (auto& k : keyed) out.push_back(k.second);
    return out;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::istream& in = std::cin,
               std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"matching covered graph toolchain: tight cuts, brick/brace "
                 "decomposition, ELP structures, laminar results"};
    app.require_subcommand(1);
    std::string format = "json";
    app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

    std::string input;
    std::string shore_text;
    std::string strategy_text = "a";
    std::vector<std::string> inputs;
    int max_n = 14;
    bool filter_mode = false;
    int gen_n = 0;

    CLI::App* check = app.add_subcommand("check", "matching-covered test and basic facts");
    check->add_option("input", input, "graph file or -")->required();

    CLI::App* tight = app.add_subcommand("tight", "tight-cut test for a shore");
    tight->add_option("input", input)->required();
    tight->add_option("--shore", shore_text, "comma separated vertex ids")->required();

    CLI::App* dec = app.add_subcommand("decompose", "tight cut decomposition");
    dec->add_option("input", input)->required();
    dec->add_option("--strategy", strategy_text, "a, b or c")
        ->check(CLI::IsMember({"a", "b", "c"}));

    CLI::App* elp = app.add_subcommand("elp", "find a nontrivial ELP cut");
    elp->add_option("input", input)->required();

    CLI::App* lam = app.add_subcommand("laminar", "sheltered barrier or laminar separation cut");
    lam->add_option("input", input)->required();
    lam->add_option("--shore", shore_text, "comma separated vertex ids")->required();

    CLI::App* ver = app.add_subcommand("verify", "run the oracle checks, one JSON line per graph");
    ver->add_option("inputs", inputs, "graph files")->required();
    ver->add_option("--max-n", max_n, "oracle size bound");

    CLI::App* corpus = app.add_subcommand("corpus", "corpus utilities");
    corpus->add_flag("--filter", filter_mode, "keep matching covered graphs from the inputs");
    corpus->add_option("--gen-connected", gen_n, "emit all connected graphs on n <= 6 vertices");
    corpus->add_option("inputs", inputs, "graph files for --filter");

    std::vector<const char*> argv;
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }

    auto started = std::chrono::steady_clock::now();
    auto elapsed_ms = [&] {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         started)
            .count();
    };

    try {
        if (*check) {
            std::string text = detail::read_input(input, in);
            Multigraph g = parse_graph_auto(text);
            json result{{"connected", is_connected(g)},
                        {"edges", g.edge_count()},
                        {"matching_covered", is_matching_covered(g)},
                        {"vertices", g.vertex_count()}};
            detail::emit(detail::wrap_report(args, detail::fnv1a_digest(text), result, elapsed_ms()),
                         format, out);
            return 0;
        }
        if (*tight) {
            std::string text = detail::read_input(input, in);
            Multigraph g = parse_graph_auto(text);
            Cut c = boundary(g, detail::parse_shore(shore_text));
            auto witness = tightness_violation(g, c);
            json result{{"cut", to_json(g, c)}, {"tight", !witness.has_value()}};
            if (witness) result["violating_matching"] = to_json(*witness, g);
            detail::emit(detail::wrap_report(args, detail::fnv1a_digest(text), result, elapsed_ms()),
                         format, out);
            return 0;
        }
        if (*dec) {
            std::string text = detail::read_input(input, in);
            Multigraph g = parse_graph_auto(text);
            CutStrategy strategy = strategy_text == "b"   ? CutStrategy::max_min_shore
                                   : strategy_text == "c" ? CutStrategy::reversed_order
                                                          : CutStrategy::lex_first;
            DecompositionTree tree = decompose(g, strategy);
            detail::emit(detail::wrap_report(args, detail::fnv1a_digest(text), to_json(tree),
                                             elapsed_ms()),
                         format, out);
            return 0;
        }
        if (*elp) {
            std::string text = detail::read_input(input, in);
            Multigraph g = parse_graph_auto(text);
            auto cut = find_nontrivial_elp_cut(g);
            json result = cut ? to_json(g, *cut) : json(nullptr);
            detail::emit(detail::wrap_report(args, detail::fnv1a_digest(text), result, elapsed_ms()),
                         format, out);
            return 0;
        }
        if (*lam) {
            std::string text = detail::read_input(input, in);
            Multigraph g = parse_graph_auto(text);
            Cut c = boundary(g, detail::parse_shore(shore_text));
            if (c.trivial()) throw domain_error("the cut must be nontrivial");
            if (auto witness = tightness_violation(g, c)) {
                json result{{"error", "cut is not tight"},
                            {"violating_matching", to_json(*witness, g)}};
                detail::emit(detail::wrap_report(args, detail::fnv1a_digest(text), result,
                                                 elapsed_ms()),
                             format, err);
                return 1;
            }
            LaminarResult r = find_laminar_elp(g, c);
            detail::emit(detail::wrap_report(args, detail::fnv1a_digest(text), to_json(g, r),
                                             elapsed_ms()),
                         format, out);
            return 0;
        }
        if (*ver) {
            if (const char* env = std::getenv("TIGHTCUT_MAX_N")) max_n = std::atoi(env);
            OracleOptions opt;
            opt.max_n = max_n;
            bool all_pass = true;
            for (const std::string& path : inputs) {
                std::string text = detail::read_input(path, in);
                for (auto& [label, g] : detail::parse_graphs(path, text)) {
                    VerificationReport report = verify_graph(g, label, opt);
                    detail::emit(to_json(report), format, out);
                    all_pass = all_pass && report.all_pass();
                }
            }
            return all_pass ? 0 : 1;
        }
        if (*corpus) {
            if (gen_n > 0) {
                for (const std::string& line : detail::generate_connected(gen_n)) out << line << '\n';
                return 0;
            }
            if (!filter_mode) throw domain_error("corpus needs --filter or --gen-connected");
            int kept = 0, total = 0;
            for (const std::string& path : inputs) {
                std::string text = detail::read_input(path, in);
                for (auto& [label, g] : detail::parse_graphs(path, text)) {
                    ++total;
                    if (!is_matching_covered(g)) continue;
                    ++kept;
                    bool simple = true;
                    try {
                        out << format_graph6(g) << '\n';
                    } catch (const domain_error&) {
                        simple = false;
                    }
                    if (!simple) out << format_edge_list(g);
                }
            }
            err << "kept " << kept << " of " << total << " graphs\n";
            return 0;
        }
    } catch (const internal_invariant_error& e) {
        err << "internal invariant violated: " << e.what() << '\n';
        return 3;
    } catch (const parse_error& e) {
        err << "parse error: " << e.what() << '\n';
        return 1;
    } catch (const domain_error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

}  // namespace tightcut::cli
