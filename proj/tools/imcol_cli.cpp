#include <exception>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "imcol/algorithms.hpp"
#include "imcol/coloring.hpp"
#include "imcol/errors.hpp"
#include "imcol/gadgets.hpp"
#include "imcol/graph.hpp"
#include "imcol/oracle.hpp"
#include "imcol/preassignment.hpp"

namespace {

using namespace imcol;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spew(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write file: " + path);
    out << content;
    if (!out) throw InputError("write failed: " + path);
}

ParsedGraph load_graph(const std::string& path) { return parse_graph(slurp(path)); }

const Bipartition& need_bipartition(const ParsedGraph& pg, const std::string& path) {
    if (!pg.bipartition.has_value()) {
        throw InputError("graph file " + path + " has no `b` line; this command needs one");
    }
    return *pg.bipartition;
}

// --part values: all, part1, part2, or list:<comma-separated vertex ids>.
VertexSet resolve_part(const std::string& spec, const ParsedGraph& pg,
                       const std::string& graph_path) {
    if (spec == "all") return VertexSet::all(pg.graph);
    if (spec == "part1") return VertexSet::part(need_bipartition(pg, graph_path), 1);
    if (spec == "part2") return VertexSet::part(need_bipartition(pg, graph_path), 2);
    if (spec.rfind("list:", 0) == 0) {
        std::vector<VertexId> ids;
        std::string token;
        std::istringstream items(spec.substr(5));
        while (std::getline(items, token, ',')) {
            size_t used = 0;
            int id = 0;
            try {
                id = std::stoi(token, &used);
            } catch (const std::exception&) {
                throw InputError("--part list has a non-numeric entry: " + token);
            }
            if (used != token.size()) {
                throw InputError("--part list has a malformed entry: " + token);
            }
            ids.push_back(id);
        }
        if (ids.empty()) throw InputError("--part list is empty");
        VertexSet r{std::move(ids)};
        r.check_against(pg.graph);
        return r;
    }
    throw InputError("--part must be all, part1, part2, or list:<ids>");
}

struct OracleFlags {
    std::string graph;
    std::string compute;
    std::string part;
    int t = 0;
    bool has_t = false;
    long long cap = 0;
    bool has_cap = false;
    int jobs = 1;
};

int run_oracle(const OracleFlags& flags) {
    const ParsedGraph pg = load_graph(flags.graph);
    oracle::SearchLimits limits;
    if (flags.has_cap) limits.node_cap = flags.cap;
    limits.jobs = flags.jobs;

    if (flags.compute == "chi" || flags.compute == "member") {
        if (flags.part != "all") {
            throw InputError("--compute " + flags.compute +
                             " is defined over all vertices; use --part all");
        }
    }

    if (flags.compute == "chi") {
        const oracle::ChromaticIndexResult r = oracle::chromatic_index(pg.graph, limits);
        if (r.capped) {
            std::cout << "capped\n";
            return 3;
        }
        std::cout << "exists t=" << *r.value << "\n";
        return 0;
    }
    if (flags.compute == "member") {
        const oracle::MembershipResult r = oracle::interval_membership(pg.graph, limits);
        if (r.capped) {
            std::cout << "capped\n";
            return 3;
        }
        if (!r.member) {
            std::cout << "not-exists\n";
            return 1;
        }
        std::cout << "exists t=" << *r.t << "\n";
        return 0;
    }

    const VertexSet r = resolve_part(flags.part, pg, flags.graph);
    if (flags.compute == "exists") {
        if (!flags.has_t) throw InputError("--compute exists needs --t");
        const oracle::OracleResult res = oracle::solve_interval_on(pg.graph, r, flags.t, limits);
        if (res.capped) {
            std::cout << "capped\n";
            return 3;
        }
        if (!res.exists) {
            std::cout << "not-exists\n";
            return 1;
        }
        std::cout << "exists t=" << flags.t << "\n";
        return 0;
    }

    const oracle::IntervalStats stats = oracle::interval_stats(pg.graph, r, limits);
    if (stats.capped) {
        std::cout << "capped\n";
        return 3;
    }
    const std::optional<int>& value = flags.compute == "w" ? stats.w : stats.W;
    if (!value.has_value()) {
        std::cout << "not-exists\n";
        return 1;
    }
    std::cout << "exists t=" << *value << "\n";
    return 0;
}

// Emitted graphs put part 1 first so the `b <k>` prefix form applies. Edge
// order is preserved, so edge ids in the output match the built graph.
struct Renumbering {
    std::vector<VertexId> to_new; // indexed by old id, entry 0 unused
    int part1_count = 0;
};

Renumbering part1_first(const Multigraph& g, const Bipartition& bip) {
    Renumbering ren;
    ren.to_new.assign(static_cast<size_t>(g.vertex_count()) + 1, 0);
    VertexId next = 0;
    for (VertexId v = 1; v <= g.vertex_count(); ++v) {
        if (bip.part(v) == 1) ren.to_new[v] = ++next;
    }
    ren.part1_count = next;
    for (VertexId v = 1; v <= g.vertex_count(); ++v) {
        if (bip.part(v) == 2) ren.to_new[v] = ++next;
    }
    return ren;
}

int run_gadget(const std::string& graph_path, const std::string& pre_path,
               const std::string& out_path, const std::string& trace_path) {
    const ParsedGraph pg = load_graph(graph_path);
    const Bipartition& bip_h = need_bipartition(pg, graph_path);
    const Preassignment pre = parse_preassignment(slurp(pre_path));
    const ReductionOutput red = build_reduction(pg.graph, bip_h, pre);

    const Renumbering ren = part1_first(red.g, red.bip);
    std::vector<Edge> edges;
    edges.reserve(red.g.edges().size());
    for (const Edge& e : red.g.edges()) edges.push_back({ren.to_new[e.u], ren.to_new[e.v]});
    const Multigraph emitted(red.g.vertex_count(), std::move(edges));
    spew(out_path, serialize_graph(emitted,
                                   Bipartition::prefix(red.g.vertex_count(), ren.part1_count)));

    if (!trace_path.empty()) {
        // Trace lines name emitted vertex ids; pendant attachments are
        // remapped with them, while h:/h': refer to the input file's ids.
        std::vector<TraceOrigin> remapped(red.trace.size());
        for (VertexId old = 1; old < static_cast<VertexId>(red.trace.size()); ++old) {
            TraceOrigin origin = red.trace[old];
            if (origin.kind == TraceOrigin::Kind::PendantFirst ||
                origin.kind == TraceOrigin::Kind::PendantSecond) {
                origin.ref = ren.to_new[origin.ref];
            }
            remapped[ren.to_new[old]] = origin;
        }
        spew(trace_path, serialize_trace(remapped));
    }
    std::cout << "ok\n";
    return 0;
}

int run_enumerate(int max_n1, int max_n2, int max_m, const std::string& dir) {
    std::filesystem::create_directories(dir);
    int count = 0;
    oracle::enumerate_bipartite_multigraphs(
        max_n1, max_n2, max_m, [&](const Multigraph& g, const Bipartition& bip) {
            ++count;
            std::ostringstream name;
            name << "g" << std::setw(6) << std::setfill('0') << count << ".imcg";
            spew((std::filesystem::path(dir) / name.str()).string(),
                 serialize_graph(g, bip));
        });
    std::cout << "ok count=" << count << "\n";
    return 0;
}

int run(int argc, char** argv) {
    CLI::App app{"interval and continuous edge colorings of bipartite multigraphs"};
    app.require_subcommand(1);

    std::string graph_path;
    std::string coloring_path;
    std::string pre_path;
    std::string out_path;
    std::string trace_path;
    std::string mode;
    std::string part;
    std::string alg;
    OracleFlags of;
    int t = 0;
    int max_n1 = 0;
    int max_n2 = 0;
    int max_m = 0;

    CLI::App* validate = app.add_subcommand("validate", "check a coloring against a mode");
    validate->add_option("--graph", graph_path)->required();
    validate->add_option("--coloring", coloring_path)->required();
    validate->add_option("--mode", mode)
        ->required()
        ->check(CLI::IsMember({"proper", "interval", "continuous"}));
    validate->add_option("--part", part)->required();
    CLI::Option* topt = validate->add_option("--t", t);

    CLI::App* color = app.add_subcommand("color", "construct a coloring");
    color->add_option("--alg", alg)->required()->check(CLI::IsMember({"theorem4", "sequential"}));
    color->add_option("--graph", graph_path)->required();
    color->add_option("-o", out_path)->required();

    CLI::App* spectrumc = app.add_subcommand("spectrum", "interval coloring with a chosen t");
    spectrumc->add_option("--graph", graph_path)->required();
    spectrumc->add_option("--t", t)->required();
    spectrumc->add_option("-o", out_path)->required();

    CLI::App* oraclec = app.add_subcommand("oracle", "exhaustive search queries");
    oraclec->add_option("--graph", of.graph)->required();
    oraclec->add_option("--compute", of.compute)
        ->required()
        ->check(CLI::IsMember({"w", "W", "chi", "member", "exists"}));
    oraclec->add_option("--part", of.part)->required();
    CLI::Option* ot = oraclec->add_option("--t", of.t);
    CLI::Option* ocap = oraclec->add_option("--cap", of.cap);
    oraclec->add_option("--jobs", of.jobs);

    CLI::App* gadget = app.add_subcommand("gadget", "build the pendant reduction");
    gadget->add_option("--graph", graph_path)->required();
    gadget->add_option("--pre", pre_path)->required();
    gadget->add_option("-o", out_path)->required();
    gadget->add_option("--trace", trace_path);

    CLI::App* compress = app.add_subcommand("compress", "fold colors onto 1..max_degree");
    compress->add_option("--graph", graph_path)->required();
    compress->add_option("--coloring", coloring_path)->required();
    compress->add_option("-o", out_path)->required();

    CLI::App* downshift = app.add_subcommand("downshift", "drop a regular coloring by one color");
    downshift->add_option("--graph", graph_path)->required();
    downshift->add_option("--coloring", coloring_path)->required();
    downshift->add_option("-o", out_path)->required();

    CLI::App* enumerate = app.add_subcommand("enumerate", "write a bipartite corpus");
    enumerate->add_option("--max-n1", max_n1)->required();
    enumerate->add_option("--max-n2", max_n2)->required();
    enumerate->add_option("--max-m", max_m)->required();
    enumerate->add_option("-o", out_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    if (app.got_subcommand(validate)) {
        const ParsedGraph pg = load_graph(graph_path);
        const ParsedColoring pc = parse_coloring(slurp(coloring_path));
        const VertexSet r = resolve_part(part, pg, graph_path);
        bool good = false;
        if (mode == "proper") {
            good = is_proper(pg.graph, pc.coloring);
        } else {
            if (topt->count() == 0) {
                throw InputError("--t is required for mode " + mode);
            }
            good = mode == "interval" ? is_interval_on(pg.graph, pc.coloring, r, t)
                                      : is_continuous_on(pg.graph, pc.coloring, r, t);
        }
        std::cout << (good ? "ok" : "invalid") << "\n";
        return good ? 0 : 1;
    }

    if (app.got_subcommand(color)) {
        const ParsedGraph pg = load_graph(graph_path);
        const Bipartition& bip = need_bipartition(pg, graph_path);
        EdgeColoring c;
        int palette = 0;
        if (alg == "theorem4") {
            c = continuous_on_part(pg.graph, bip);
            palette = pg.graph.max_degree();
        } else {
            c = sequential_max_coloring(pg.graph, bip);
            palette = pg.graph.edge_count();
        }
        spew(out_path, serialize_coloring(c, palette));
        std::cout << "ok\n";
        return 0;
    }

    if (app.got_subcommand(spectrumc)) {
        const ParsedGraph pg = load_graph(graph_path);
        const Bipartition& bip = need_bipartition(pg, graph_path);
        const RealizeOutcome out = realize_spectrum(pg.graph, bip, t);
        if (out.capped) {
            std::cout << "capped\n";
            return 3;
        }
        if (out.oracle_fallbacks > 0) {
            std::cerr << "warning: " << out.oracle_fallbacks
                      << " raise step(s) fell back to searched witnesses\n";
        }
        spew(out_path, serialize_coloring(*out.coloring, t));
        std::cout << "ok\n";
        return 0;
    }

    if (app.got_subcommand(oraclec)) {
        of.has_t = ot->count() > 0;
        of.has_cap = ocap->count() > 0;
        return run_oracle(of);
    }

    if (app.got_subcommand(gadget)) {
        return run_gadget(graph_path, pre_path, out_path, trace_path);
    }

    if (app.got_subcommand(compress)) {
        const ParsedGraph pg = load_graph(graph_path);
        const ParsedColoring pc = parse_coloring(slurp(coloring_path));
        const EdgeColoring folded = compress_to_delta(pg.graph, pc.coloring);
        spew(out_path, serialize_coloring(folded, pg.graph.max_degree()));
        std::cout << "ok\n";
        return 0;
    }

    if (app.got_subcommand(downshift)) {
        const ParsedGraph pg = load_graph(graph_path);
        const ParsedColoring pc = parse_coloring(slurp(coloring_path));
        const EdgeColoring down = regular_step_down(pg.graph, pc.coloring, pc.t);
        spew(out_path, serialize_coloring(down, pc.t - 1));
        std::cout << "ok\n";
        return 0;
    }

    if (app.got_subcommand(enumerate)) {
        return run_enumerate(max_n1, max_n2, max_m, out_path);
    }

    throw InternalError("no subcommand dispatched");
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}
