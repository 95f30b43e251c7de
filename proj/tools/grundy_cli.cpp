#include "grundy/atoms.hpp"
#include "grundy/coloring.hpp"
#include "grundy/constructions.hpp"
#include "grundy/graph.hpp"
#include "grundy/io.hpp"
#include "grundy/reproduce.hpp"
#include "grundy/solver.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace grundy;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitBudget = 2;

// ---- option bundles ------------------------------------------------------

struct GraphArgs {
    std::string family;
    int n = 0;
    int m = 0;
    std::string input;
    std::string format = "dimacs";
};

struct BudgetArgs {
    long long nodes = -1;
    double seconds = -1;
    int threads = 0;
};

void add_graph_options(CLI::App* sub, GraphArgs& args, const std::string& suffix = "") {
    sub->add_option("--family" + suffix, args.family,
                    "generated family: stable|complete|path|cycle|complete_bipartite|binomial_tree");
    sub->add_option("--n" + suffix, args.n, "family size parameter");
    sub->add_option("--m" + suffix, args.m, "second size parameter (complete_bipartite)");
    sub->add_option("--input" + suffix, args.input, "read the graph from a file, - for stdin");
}

void add_format_option(CLI::App* sub, std::string& fmt, const std::vector<std::string>& allowed) {
    sub->add_option("--format", fmt, "document format")->check(CLI::IsMember(allowed));
}

void add_budget_options(CLI::App* sub, BudgetArgs& b) {
    sub->add_option("--budget-nodes", b.nodes, "search node limit");
    sub->add_option("--budget-seconds", b.seconds, "search time limit");
    sub->add_option("--threads", b.threads, "parallelism hint (GRUNDY_THREADS fallback)");
}

SearchBudget make_budget(const BudgetArgs& args) {
    SearchBudget b;
    if (args.nodes > 0) b.max_nodes = args.nodes;
    if (args.seconds > 0) b.max_time = args.seconds;
    if (args.threads > 0) {
        b.threads = args.threads;
    } else if (const char* env = std::getenv("GRUNDY_THREADS")) {
        int t = std::atoi(env);
        if (t > 0) b.threads = t;
    }
    return b;
}

std::string read_all(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open input file: " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

GraphFormat format_of(const std::string& name) {
    return name == "edge-list" ? GraphFormat::edge_list : GraphFormat::dimacs;
}

Graph resolve_graph(const GraphArgs& args) {
    if (!args.family.empty() && !args.input.empty())
        throw std::runtime_error("give either a family or an input file, not both");
    if (!args.family.empty()) {
        std::vector<int> params{args.n};
        if (args.m > 0) params.push_back(args.m);
        return make_family(args.family, params);
    }
    if (!args.input.empty()) return parse_graph(read_all(args.input), format_of(args.format));
    throw std::runtime_error("no graph given; use --family or --input");
}

void write_out(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::fputs(text.c_str(), stdout);
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + path);
    f << text;
}

std::string coloring_line(const Coloring& c) {
    std::ostringstream o;
    for (int v = 0; v < c.n(); ++v) {
        if (v) o << ' ';
        o << c[v];
    }
    return o.str();
}

std::vector<int> parse_order(const std::string& text) {
    std::vector<int> out;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) out.push_back(std::stoi(tok));
    return out;
}

// ---- subcommand handlers -------------------------------------------------

int run_exact(const GraphArgs& gs, const BudgetArgs& bs, const std::string& output) {
    Graph g = resolve_graph(gs);
    GrundyResult r = grundy_exact(g, make_budget(bs));
    std::printf("gamma = %d\n", r.value);
    std::printf("exact = %s\n", r.exact ? "true" : "false");
    std::printf("witness = %s\n", coloring_line(r.witness).c_str());
    std::printf("nodes = %llu\n", static_cast<unsigned long long>(r.stats.nodes));
    if (!output.empty()) write_out(output, emit_coloring(r.witness));
    return r.exact ? kExitOk : kExitBudget;
}

int run_witness(const GraphArgs& gs, const BudgetArgs& bs, int target, const std::string& output) {
    Graph g = resolve_graph(gs);
    WitnessResult r = grundy_witness(g, target, make_budget(bs));
    switch (r.status) {
        case WitnessStatus::found:
            std::printf("status = found\n");
            std::printf("coloring = %s\n", coloring_line(r.coloring).c_str());
            if (!output.empty()) write_out(output, emit_coloring(r.coloring));
            return kExitOk;
        case WitnessStatus::absent:
            std::printf("status = absent\n");
            return kExitOk;
        case WitnessStatus::budget_exhausted:
            std::printf("status = budget-exhausted\n");
            return kExitBudget;
    }
    return kExitFail;
}

int run_greedy(const GraphArgs& gs, const std::string& order_text, const std::string& output) {
    Graph g = resolve_graph(gs);
    std::vector<int> order;
    if (order_text.empty()) {
        order.resize(static_cast<size_t>(g.n()));
        for (int v = 0; v < g.n(); ++v) order[static_cast<size_t>(v)] = v;
    } else {
        order = parse_order(order_text);
    }
    Coloring c = greedy_color(g, order);
    std::printf("colors = %d\n", c.num_colors());
    std::printf("coloring = %s\n", coloring_line(c).c_str());
    if (!output.empty()) write_out(output, emit_coloring(c));
    return kExitOk;
}

int run_verify(const GraphArgs& gs, const std::string& coloring_path, const std::string& require) {
    Graph g = resolve_graph(gs);
    Coloring c = parse_coloring(read_all(coloring_path));
    VerificationReport rep = is_grundy(g, c);
    std::printf("proper = %s\n", rep.proper ? "true" : "false");
    std::printf("grundy = %s\n", rep.grundy ? "true" : "false");
    for (const auto& v : rep.violations) {
        if (v.kind == VerificationReport::Kind::conflict)
            std::printf("violation: vertices %d and %d share color %d\n", v.vertex, v.other,
                        v.color);
        else
            std::printf("violation: vertex %d sees no neighbor of color %d\n", v.vertex, v.color);
    }
    bool ok = require == "proper" ? rep.proper : rep.grundy;
    return ok ? kExitOk : kExitFail;
}

int run_product(const GraphArgs& a, const GraphArgs& b, const std::string& fmt,
                const std::string& output) {
    Graph g = resolve_graph(a);
    Graph h = resolve_graph(b);
    auto [prod, coords] = cartesian_product(g, h);
    std::string doc = fmt == "dot" ? emit_dot(prod) : emit_graph(prod, format_of(fmt));
    write_out(output, doc);
    if (!output.empty())
        std::printf("product: n = %d, edges = %ld\n", prod.n(), prod.edge_count());
    return kExitOk;
}

int run_bounds(const GraphArgs& gs) {
    Graph g = resolve_graph(gs);
    BoundsReport b = upper_bounds(g);
    std::printf("delta_plus_one = %d\n", b.delta_plus_one);
    if (b.stability_bound)
        std::printf("stability_bound = %d\n", *b.stability_bound);
    else
        std::printf("stability_bound = (not computed)\n");
    std::printf("best = %d\n", b.best());
    return kExitOk;
}

int report_outcome(const ConstructionOutcome& o, const std::string& output,
                   const std::string& dot_path) {
    std::printf("product: n = %d, edges = %ld\n", o.product.n(), o.product.edge_count());
    std::printf("colors_used = %d\n", o.colors_used);
    std::printf("claimed_lower_bound = %d\n", o.claimed_lower_bound);
    std::printf("upper_bound = %d\n", o.upper_bound);
    std::printf("verified = %s\n", o.verified ? "true" : "false");
    std::printf("exact = %s\n", o.exact ? "true" : "false");
    if (o.inconclusive) std::printf("inconclusive = true\n");
    if (!o.note.empty()) std::printf("note = %s\n", o.note.c_str());
    if (o.coloring.n() > 0) std::printf("coloring = %s\n", coloring_line(o.coloring).c_str());
    if (!output.empty()) write_out(output, emit_coloring(o.coloring));
    if (!dot_path.empty()) write_out(dot_path, emit_dot(o.product, &o.coloring));
    if (o.verified) return kExitOk;
    return o.inconclusive ? kExitBudget : kExitFail;
}

int run_construct(const std::string& rule, const GraphArgs& gs, const std::string& second_kind,
                  int second_len, int p, const std::vector<int>& dims, const BudgetArgs& bs,
                  const std::string& output, const std::string& dot_path) {
    SearchBudget budget = make_budget(bs);
    if (rule == "mesh") return report_outcome(mesh_coloring(dims), output, dot_path);
    if (rule == "even-torus")
        return report_outcome(even_torus_coloring(dims, budget), output, dot_path);
    if (rule == "odd-torus")
        return report_outcome(odd_torus_value(dims, budget), output, dot_path);
    if (rule == "ng") {
        if (dims.size() != 3) throw std::runtime_error("ng needs --dims n1,n2,n3");
        NgCounterexample ce = ng_counterexample(dims[0], dims[1], dims[2]);
        std::printf("n = %d\n", ce.graph.n());
        std::printf("sum = %d\n", ce.sum);
        std::printf("coloring = %s\n", coloring_line(ce.coloring).c_str());
        std::printf("complement_coloring = %s\n", coloring_line(ce.complement_coloring).c_str());
        if (!output.empty()) {
            nlohmann::json doc;
            doc["n"] = ce.graph.n();
            doc["sum"] = ce.sum;
            doc["coloring"] = ce.coloring.colors;
            doc["complement_coloring"] = ce.complement_coloring.colors;
            write_out(output, doc.dump() + "\n");
        }
        if (!dot_path.empty()) write_out(dot_path, emit_dot(ce.graph, &ce.coloring));
        return kExitOk;
    }

    Graph g = resolve_graph(gs);
    Coloring witness = grundy_exact(g, budget).witness;
    if (rule == "prop3" || rule == "thm2") {
        auto bip = bipartition(g);
        if (!bip) throw std::runtime_error("this rule needs a bipartite first factor");
        if (rule == "prop3") {
            PathOrCycle s{second_kind == "cycle", second_len};
            return report_outcome(bipartite_times_path_or_cycle(g, *bip, witness, s), output,
                                  dot_path);
        }
        return report_outcome(complete_times_bipartite(p, g, *bip, witness), output, dot_path);
    }
    if (rule == "prop4") {
        PathOrCycle s{second_kind == "cycle", second_len};
        return report_outcome(nonbipartite_times_path_or_cycle(g, witness, s), output, dot_path);
    }
    if (rule == "thm3")
        return report_outcome(complete_times_any(p, g, witness, budget), output, dot_path);
    throw std::runtime_error("unknown construction rule: " + rule);
}

int run_atoms(int k, bool critical, const BudgetArgs& bs, const std::string& output) {
    AtomSet set = generate_atoms(k, make_budget(bs), critical);
    std::printf("k = %d\n", set.k);
    std::printf("members = %zu\n", set.members.size());
    for (size_t i = 0; i < set.members.size(); ++i) {
        const AtomMember& m = set.members[i];
        std::printf("member %zu: n = %d, edges = %ld, critical = %s\n", i, m.graph.n(),
                    m.graph.edge_count(), m.edge_critical ? "true" : "false");
        std::ostringstream edges;
        for (auto [u, v] : m.graph.edges()) edges << " (" << u << ',' << v << ')';
        std::printf("  edges:%s\n", edges.str().c_str());
        std::printf("  witness: %s\n", coloring_line(m.witness).c_str());
    }
    if (!set.complete) std::printf("warning: budget exhausted, set may be partial\n");
    if (!output.empty()) {
        nlohmann::json doc;
        doc["k"] = set.k;
        doc["complete"] = set.complete;
        doc["members"] = nlohmann::json::array();
        for (const AtomMember& m : set.members) {
            nlohmann::json entry;
            entry["n"] = m.graph.n();
            entry["edges"] = m.graph.edges();
            entry["witness"] = m.witness.colors;
            entry["critical"] = m.edge_critical;
            entry["label"] = m.label;
            doc["members"].push_back(entry);
        }
        write_out(output, doc.dump(2) + "\n");
    }
    return set.complete ? kExitOk : kExitBudget;
}

int run_reproduce(const std::vector<std::string>& only, const BudgetArgs& bs, std::uint64_t seed,
                  const std::string& fmt, const std::string& output) {
    ReproReport rep = run_reproduction(only, make_budget(bs), seed);
    write_out(output, fmt == "csv" ? to_csv(rep) : to_markdown(rep));
    return rep.all_pass ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Grundy (greedy) coloring toolkit: exact values, witnesses, certified product "
                 "constructions, and reproduction tables"};
    app.require_subcommand(1);

    GraphArgs gs, gs2;
    BudgetArgs bs;
    std::string output, dot_path, fmt = "dimacs";
    std::string order_text, coloring_path, require = "grundy";
    std::string rule, second_kind = "path";
    int target = 0, second_len = 0, p = 0, k = 0;
    bool critical = false;
    std::vector<int> dims;
    std::vector<std::string> only;
    std::uint64_t seed = 20240529;

    CLI::App* exact = app.add_subcommand("exact", "exact Grundy number with witness");
    add_graph_options(exact, gs);
    add_budget_options(exact, bs);
    add_format_option(exact, gs.format, {"dimacs", "edge-list"});
    exact->add_option("--output", output, "write the witness coloring document here");

    CLI::App* witness = app.add_subcommand("witness", "search for a Grundy coloring with a target color count");
    add_graph_options(witness, gs);
    add_budget_options(witness, bs);
    add_format_option(witness, gs.format, {"dimacs", "edge-list"});
    witness->add_option("--target", target, "color count to certify")->required();
    witness->add_option("--output", output, "write the coloring document here");

    CLI::App* greedy = app.add_subcommand("greedy", "first-fit coloring along a vertex order");
    add_graph_options(greedy, gs);
    add_format_option(greedy, gs.format, {"dimacs", "edge-list"});
    greedy->add_option("--order", order_text, "comma-separated vertex order (default 0,1,...)");
    greedy->add_option("--output", output, "write the coloring document here");

    CLI::App* verify = app.add_subcommand("verify", "check a coloring document against a graph");
    add_graph_options(verify, gs);
    add_format_option(verify, gs.format, {"dimacs", "edge-list"});
    verify->add_option("--coloring", coloring_path, "coloring document file")->required();
    verify->add_option("--require", require, "predicate deciding the exit status")
        ->check(CLI::IsMember({"proper", "grundy"}));

    CLI::App* product = app.add_subcommand("product", "emit the Cartesian product of two graphs");
    add_graph_options(product, gs);
    add_graph_options(product, gs2, "2");
    add_format_option(product, fmt, {"dimacs", "edge-list", "dot"});
    product->add_option("--output", output, "write the product document here");

    CLI::App* bounds = app.add_subcommand("bounds", "upper bounds on the Grundy number");
    add_graph_options(bounds, gs);
    add_format_option(bounds, gs.format, {"dimacs", "edge-list"});

    CLI::App* construct = app.add_subcommand("construct", "run a certified coloring construction");
    construct->add_option("--rule", rule,
                          "prop3|prop4|thm2|thm3|mesh|even-torus|odd-torus|ng")
        ->required()
        ->check(CLI::IsMember({"prop3", "prop4", "thm2", "thm3", "mesh", "even-torus",
                               "odd-torus", "ng"}));
    add_graph_options(construct, gs);
    add_budget_options(construct, bs);
    construct->add_option("--second", second_kind, "second factor kind: path|cycle")
        ->check(CLI::IsMember({"path", "cycle"}));
    construct->add_option("--len", second_len, "second factor length");
    construct->add_option("--p", p, "complete factor order (thm2, thm3)");
    construct->add_option("--dims", dims, "dimension list, e.g. 3,3,4")->delimiter(',');
    construct->add_option("--output", output, "write the coloring document here");
    construct->add_option("--dot", dot_path, "write a DOT rendering here");

    CLI::App* atoms = app.add_subcommand("atoms", "generate edge-minimal graphs with a given Grundy number");
    atoms->add_option("--k", k, "target Grundy number")->required();
    atoms->add_flag("--critical", critical, "keep only edge-critical members");
    add_budget_options(atoms, bs);
    atoms->add_option("--output", output, "write the member list as JSON here");

    CLI::App* reproduce = app.add_subcommand("reproduce", "recompute the full results table");
    reproduce->add_flag("--all", "run every row (default)");
    reproduce->add_option("--only", only, "comma-separated row ids")->delimiter(',');
    add_budget_options(reproduce, bs);
    reproduce->add_option("--seed", seed, "seed for the sampled corpora");
    add_format_option(reproduce, fmt, {"markdown", "csv"});
    reproduce->add_option("--output", output, "write the table here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (app.got_subcommand(exact)) return run_exact(gs, bs, output);
        if (app.got_subcommand(witness)) return run_witness(gs, bs, target, output);
        if (app.got_subcommand(greedy)) return run_greedy(gs, order_text, output);
        if (app.got_subcommand(verify)) return run_verify(gs, coloring_path, require);
        if (app.got_subcommand(product)) return run_product(gs, gs2, fmt, output);
        if (app.got_subcommand(bounds)) return run_bounds(gs);
        if (app.got_subcommand(construct))
            return run_construct(rule, gs, second_kind, second_len, p, dims, bs, output, dot_path);
        if (app.got_subcommand(atoms)) return run_atoms(k, critical, bs, output);
        if (app.got_subcommand(reproduce))
            return run_reproduce(only, bs, seed, fmt == "dimacs" ? "markdown" : fmt, output);
    } catch (const BudgetExhausted& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitBudget;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitFail;
    }
    return kExitFail;
}
