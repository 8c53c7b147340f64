#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "wedge/census.hpp"
#include "wedge/edge_domination.hpp"
#include "wedge/edgelist.hpp"
#include "wedge/families.hpp"
#include "wedge/graph.hpp"
#include "wedge/graph6.hpp"
#include "wedge/canonical.hpp"
#include "wedge/matching.hpp"
#include "wedge/verify.hpp"

namespace {

using namespace wedge;

const char* bool_str(bool b) { return b ? "true" : "false"; }

std::string girth_str(int g) {
    return g == kGirthInfinite ? "infinite" : std::to_string(g);
}

int effective_jobs(int jobs) {
    if (jobs > 0) return jobs;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

std::string read_all(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string strip_eol(std::string s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    return s;
}

// graph6 iff a single line whose first byte is in 63..126 and which contains
// no space; anything else is treated as an edge-list document.
bool looks_like_graph6(const std::string& text) {
    std::string line = strip_eol(text);
    if (line.empty()) return false;
    if (line.find('\n') != std::string::npos ||
        line.find('\r') != std::string::npos)
        return false;
    unsigned char first = static_cast<unsigned char>(line[0]);
    if (first < 63 || first > 126) return false;
    return line.find(' ') == std::string::npos;
}

std::string code_line(const Graph& g) {
    return g.order <= kCanonicalMaxOrder ? canonical_code(g) : graph6_encode(g);
}

int with_output(const std::string& path,
                const std::function<int(std::ostream&)>& fn) {
    if (path.empty()) return fn(std::cout);
    std::ofstream out(path);
    if (!out) {
        std::cerr << "error: cannot open output file: " << path << "\n";
        return 2;
    }
    return fn(out);
}

void print_report(std::ostream& out, const InvariantReport& r) {
    out << "order=" << r.order << "\n"
        << "size=" << r.size << "\n"
        << "girth=" << girth_str(r.girth_value) << "\n"
        << "bipartite=" << bool_str(r.bipartite) << "\n"
        << "split=" << bool_str(r.split) << "\n"
        << "alpha_prime=" << r.alpha_prime << "\n"
        << "i_prime=" << r.i_prime << "\n"
        << "gamma_prime=" << r.gamma_prime << "\n"
        << "Gamma_prime=" << r.Gamma_prime << "\n"
        << "equimatchable=" << bool_str(r.equimatchable) << "\n"
        << "randomly_matchable=" << bool_str(r.randomly_matchable) << "\n"
        << "wed=" << bool_str(r.wed) << "\n"
        << "canonical=" << r.canonical << "\n";
}

int run_analyze(const std::string& path, const std::string& format,
                std::ostream& out) {
    std::string text;
    if (path.empty() || path == "-") {
        text = read_all(std::cin);
    } else {
        std::ifstream file(path);
        if (!file) {
            std::cerr << "error: cannot open input file: " << path << "\n";
            return 2;
        }
        text = read_all(file);
    }
    Graph g;
    bool as_graph6 =
        format == "graph6" || (format.empty() && looks_like_graph6(text));
    if (as_graph6)
        g = graph6_decode(strip_eol(text));
    else
        g = parse_edge_list_text(text);
    print_report(out, invariant_report(g));
    return 0;
}

int run_gen(const std::string& family,
            const std::vector<std::string>& assignments, std::ostream& out) {
    std::optional<FamilyId> id = family_from_name(family);
    if (!id) {
        std::cerr << "error: unknown family: " << family << "\n";
        return 2;
    }
    FamilySpec spec{*id, {}};
    for (const std::string& kv : assignments) {
        std::size_t eq = kv.find('=');
        if (eq == std::string::npos || eq == 0) {
            std::cerr << "error: expected key=value, got: " << kv << "\n";
            return 2;
        }
        std::string key = kv.substr(0, eq);
        std::string rest = kv.substr(eq + 1);
        int value = 0;
        std::size_t used = 0;
        try {
            value = std::stoi(rest, &used);
        } catch (const std::exception&) {
            used = std::string::npos;
        }
        if (used != rest.size()) {
            std::cerr << "error: bad integer in: " << kv << "\n";
            return 2;
        }
        if (!spec.params.emplace(key, value).second) {
            std::cerr << "error: duplicate parameter: " << key << "\n";
            return 2;
        }
    }
    out << emit_edge_list(build(spec));
    return 0;
}

int run_verify(const std::string& name, int max_n, int factor_max, int jobs,
               std::ostream& out) {
    std::optional<TheoremId> id = theorem_from_name(name);
    if (!id) {
        std::cerr << "error: unknown theorem: " << name << "\n";
        return 2;
    }
    bool factor_bounded =
        *id == TheoremId::CARTESIAN || *id == TheoremId::FACTORS;
    TheoremVerdict v =
        verify(*id, factor_bounded ? factor_max : max_n, effective_jobs(jobs));
    for (const std::string& w : v.witnesses) out << "witness=" << w << "\n";
    for (const std::string& c : v.counterexamples)
        out << "counterexample=" << c << "\n";
    out << "theorem=" << theorem_name(v.theorem_id) << "\n"
        << "max_order=" << v.max_order << "\n"
        << "graphs_checked=" << v.graphs_checked << "\n"
        << "witnesses=" << v.witnesses.size() << "\n"
        << "counterexamples=" << v.counterexamples.size() << "\n"
        << "holds=" << bool_str(v.holds) << "\n";
    return v.holds ? 0 : 1;
}

struct CensusOptions {
    int max_n = 6;
    bool connected = false;
    bool triangle_free = false;
    bool nonbipartite = false;
    bool bipartite = false;
    bool split = false;
    int girth_min = 0;
    std::string predicate;
    bool from_stdin = false;
    int jobs = 0;
};

bool girth_at_least(const Graph& g, int k) {
    int gi = girth(g);
    return gi == kGirthInfinite || gi >= k;
}

bool census_selects(const CensusOptions& opt, const Graph& g) {
    if (opt.connected && !is_connected(g)) return false;
    if (opt.triangle_free && !girth_at_least(g, 4)) return false;
    if (opt.nonbipartite && is_bipartite(g).has_value()) return false;
    if (opt.bipartite && !is_bipartite(g).has_value()) return false;
    if (opt.girth_min > 0 && !girth_at_least(g, opt.girth_min)) return false;
    if (opt.split && !is_split(g)) return false;
    if (opt.predicate == "wed") return is_wed(g);
    if (opt.predicate == "equimatchable") return is_equimatchable(g);
    if (opt.predicate == "randomly-matchable") return is_randomly_matchable(g);
    return true;
}

int run_census(const CensusOptions& opt, std::ostream& out) {
    std::vector<std::string> codes;
    if (opt.from_stdin) {
        std::string line;
        int lineno = 0;
        while (std::getline(std::cin, line)) {
            ++lineno;
            line = strip_eol(line);
            if (line.empty()) continue;
            Graph g;
            try {
                g = graph6_decode(line);
            } catch (const std::exception& e) {
                std::cerr << "error: stdin line " << lineno << ": " << e.what()
                          << "\n";
                return 2;
            }
            if (census_selects(opt, g)) codes.push_back(code_line(g));
        }
    } else {
        CensusFilter filter;
        filter.connected = opt.connected;
        filter.triangle_free = opt.triangle_free;
        filter.nonbipartite = opt.nonbipartite;
        if (opt.girth_min > 0) filter.min_girth = opt.girth_min;
        filter.split_only = opt.split;
        filter.max_order = opt.max_n;
        enumerate_connected(
            filter,
            [&](const Graph& g) {
                if (opt.bipartite && !is_bipartite(g).has_value()) return;
                if (opt.predicate == "wed" && !is_wed(g)) return;
                if (opt.predicate == "equimatchable" && !is_equimatchable(g))
                    return;
                if (opt.predicate == "randomly-matchable" &&
                    !is_randomly_matchable(g))
                    return;
                codes.push_back(canonical_code(g));
            },
            effective_jobs(opt.jobs));
    }
    std::sort(codes.begin(), codes.end());
    for (const std::string& code : codes) out << code << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "exact edge-domination and matching invariants of small graphs"};
    app.require_subcommand(1);

    auto* analyze = app.add_subcommand(
        "analyze", "compute the invariant report of one graph");
    std::string analyze_path;
    std::string analyze_format;
    std::string analyze_output;
    analyze->add_option("path", analyze_path,
                        "edge-list or graph6 file ('-' or absent: stdin)");
    analyze->add_option("--format", analyze_format,
                        "input format (default: auto-detect)")
        ->check(CLI::IsMember({"edgelist", "graph6"}));
    analyze->add_option("--output", analyze_output, "write report to a file");

    auto* gen =
        app.add_subcommand("gen", "emit a named family member as an edge list");
    std::string gen_family;
    std::vector<std::string> gen_params;
    std::string gen_output;
    gen->add_option("family", gen_family, "family name, e.g. cycle or f11")
        ->required();
    gen->add_option("params", gen_params, "parameters as key=value, e.g. n=5");
    gen->add_option("--output", gen_output, "write edge list to a file");

    auto* verify_cmd = app.add_subcommand(
        "verify", "exhaustively check one characterization up to a bound");
    std::string verify_name;
    std::string verify_output;
    int verify_max_n = 7;
    int verify_factor_max = 3;
    int verify_jobs = 0;
    verify_cmd
        ->add_option("theorem", verify_name,
                     "one of: kn, krs, randomly-matchable, triangle-free, "
                     "split, cartesian, girth5, match-removal, "
                     "gamma-equals-i, factors")
        ->required();
    verify_cmd->add_option("--max-n", verify_max_n, "order bound");
    verify_cmd->add_option("--factor-max", verify_factor_max,
                           "factor order bound (cartesian, factors)");
    verify_cmd->add_option("--jobs", verify_jobs, "worker count (0 = cores)");
    verify_cmd->add_option("--output", verify_output,
                           "write verdict to a file");

    auto* census = app.add_subcommand(
        "census", "list isomorphism classes passing the filters, one graph6 "
                  "line each, sorted");
    CensusOptions census_opt;
    std::string census_output;
    census->add_option("--max-n", census_opt.max_n, "largest order generated");
    census->add_flag("--connected", census_opt.connected,
                     "keep connected graphs only");
    census->add_flag("--triangle-free", census_opt.triangle_free,
                     "keep triangle-free graphs only");
    census->add_flag("--nonbipartite", census_opt.nonbipartite,
                     "keep nonbipartite graphs only");
    census->add_flag("--bipartite", census_opt.bipartite,
                     "keep bipartite graphs only");
    census->add_option("--girth-min", census_opt.girth_min,
                       "keep graphs of at least this girth (forests pass)");
    census->add_flag("--split", census_opt.split, "keep split graphs only");
    census->add_option("--predicate", census_opt.predicate,
                       "keep graphs satisfying a computed predicate")
        ->check(
            CLI::IsMember({"wed", "equimatchable", "randomly-matchable"}));
    census->add_flag("--stdin", census_opt.from_stdin,
                     "filter graph6 lines from stdin instead of generating");
    census->add_option("--jobs", census_opt.jobs, "worker count (0 = cores)");
    census->add_option("--output", census_output, "write lines to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*analyze)
            return with_output(analyze_output, [&](std::ostream& out) {
                return run_analyze(analyze_path, analyze_format, out);
            });
        if (*gen)
            return with_output(gen_output, [&](std::ostream& out) {
                return run_gen(gen_family, gen_params, out);
            });
        if (*verify_cmd)
            return with_output(verify_output, [&](std::ostream& out) {
                return run_verify(verify_name, verify_max_n, verify_factor_max,
                                  verify_jobs, out);
            });
        if (*census)
            return with_output(census_output, [&](std::ostream& out) {
                return run_census(census_opt, out);
            });
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
