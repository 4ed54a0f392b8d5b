#include "cli.hpp"

#include <fstream>
#include <istream>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include <CLI11.hpp>

#include "modec/digraph.hpp"
#include "modec/errors.hpp"
#include "modec/io.hpp"
#include "modec/mdtree.hpp"
#include "modec/oracle.hpp"
#include "modec/orient.hpp"
#include "modec/permrep.hpp"
#include "modec/reduce.hpp"

namespace modec::cli {

namespace {

std::string slurp(const std::string& path, std::istream& in) {
    if (path == "-") {
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error("cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void emit(const std::string& path, std::ostream& out, const std::string& text) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot open output file '" + path + "'");
    f << text;
}

struct CommonOpts {
    std::string input = "-";
    std::string output = "-";
    bool undirected = false;
};

void add_io(CLI::App* cmd, CommonOpts& o, bool with_undirected = true) {
    cmd->add_option("input", o.input, "edge list file, - for stdin");
    cmd->add_option("-o,--output", o.output, "output file, - for stdout");
    if (with_undirected)
        cmd->add_flag("--undirected", o.undirected, "symmetrize the edge list at ingest");
}

Digraph load(const CommonOpts& o, std::istream& in) {
    Digraph g = parse_edge_list(slurp(o.input, in));
    return o.undirected ? undirected_closure(g) : g;
}

std::string join_labels(const Digraph& g, const std::vector<VertexId>& vs) {
    std::string s;
    for (VertexId v : vs) {
        if (!s.empty()) s += ' ';
        s += g.label(v);
    }
    return s;
}

std::string render_orientation(const Digraph& g, const EdgeOrientation& o,
                               OrientationSource source) {
    std::ostringstream text;
    for (const Edge& e : o.edges) text << g.label(e.src) << ' ' << g.label(e.dst) << '\n';
    text << "source: " << to_string(source) << '\n';
    return text.str();
}

void register_decompose(CLI::App& app, std::istream& in, std::ostream& out) {
    auto opts = std::make_shared<CommonOpts>();
    auto format = std::make_shared<std::string>("text");
    auto* cmd = app.add_subcommand("decompose", "modular decomposition tree of the input");
    add_io(cmd, *opts);
    cmd->add_option("--format", *format, "text, structured, or dot")
        ->check(CLI::IsMember({"text", "structured", "dot"}));
    cmd->callback([opts, format, &in, &out] {
        Digraph g = load(*opts, in);
        MDTree t = opts->undirected ? decompose_undirected(g) : decompose_digraph(g);
        std::string text = *format == "text"         ? to_text(t) + "\n"
                           : *format == "structured" ? to_structured(t)
                                                     : to_dot(t);
        emit(opts->output, out, text);
    });
}

void register_reduce(CLI::App& app, std::istream& in, std::ostream& out) {
    auto opts = std::make_shared<CommonOpts>();
    auto trace = std::make_shared<bool>(false);
    auto* cmd = app.add_subcommand("reduce", "flow-rule kernel and fragment forest");
    add_io(cmd, *opts);
    cmd->add_flag("--trace", *trace, "emit one line per merge");
    cmd->callback([opts, trace, &in, &out] {
        Digraph g = load(*opts, in);
        Kernel k = reduce(g);
        std::ostringstream text;
        if (*trace) {
            std::size_t step = 0;
            for (const MergeStep& m : k.merge_log)
                text << "trace " << ++step << ' ' << to_string(m.rule) << ' ' << m.a << '{'
                     << join_labels(g, m.a_vertices) << "} " << m.b << '{'
                     << join_labels(g, m.b_vertices) << "} -> " << m.merged << '\n';
        }
        text << "kernel\n" << serialize_edge_list(k.graph);
        for (std::size_t v = 0; v < k.fragments.size(); ++v)
            text << "fragment " << v << ' ' << k.graph.label(static_cast<VertexId>(v)) << '\n'
                 << to_structured(k.fragments[v]);
        emit(opts->output, out, text.str());
    });
}

void register_orient(CLI::App& app, std::istream& in, std::ostream& out) {
    auto opts = std::make_shared<CommonOpts>();
    auto target = std::make_shared<std::string>("complement-of-closure");
    auto* cmd = app.add_subcommand("orient", "transitive orientation with forcing witnesses");
    add_io(cmd, *opts);
    cmd->add_option("--target", *target, "graph to orient")
        ->check(CLI::IsMember({"complement-of-closure", "complement-of-input", "input"}));
    cmd->callback([opts, target, &in, &out] {
        Digraph g = load(*opts, in);
        if (*target == "complement-of-closure") {
            ComplementOrientationResult r = orient_complement(g);
            if (!r.ok())
                throw Error("not transitively orientable: " + describe(*r.failure, g));
            emit(opts->output, out, render_orientation(g, *r.orientation, r.source));
            return;
        }
        Digraph t = *target == "input" ? g : undirected_complement(g);
        OrientationResult r = transitive_orientation(t);
        if (!r.ok()) throw Error("not transitively orientable: " + describe(*r.failure, t));
        emit(opts->output, out,
             render_orientation(t, *r.orientation, OrientationSource::Direct));
    });
}

struct PermrepBuildOpts : CommonOpts {
    bool contract_sccs = false;
};

void register_permrep_build(CLI::App& app, const std::string& name, std::istream& in,
                            std::ostream& out) {
    auto opts = std::make_shared<PermrepBuildOpts>();
    auto* cmd = app.add_subcommand(name, "two linear orders encoding closure reachability");
    add_io(cmd, *opts, false);
    cmd->add_flag("--contract-sccs", opts->contract_sccs,
                  "contract strongly connected components before building");
    cmd->callback([opts, &in, &out] {
        Digraph g = parse_edge_list(slurp(opts->input, in));
        if (opts->contract_sccs) g = scc_contract(g).first;
        PermRep pr = build_permrep(g);
        std::ostringstream text;
        Digraph carrier(pr.labels.size(), {}, pr.labels);
        text << join_labels(carrier, pr.l1.sequence) << '\n'
             << join_labels(carrier, pr.l2.sequence) << '\n';
        emit(opts->output, out, text.str());
    });
}

struct PermrepQueryOpts {
    std::string file;
    std::string u, v;
};

std::vector<std::vector<std::string>> order_file_lines(const std::string& text) {
    std::vector<std::vector<std::string>> lines;
    std::istringstream stream(text);
    std::string line;
    int lineno = 0;
    while (std::getline(stream, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::vector<std::string> tokens;
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
        if (tokens.empty()) continue;
        if (lines.size() == 2) throw ParseError(lineno, "order file has more than two lines");
        lines.push_back(std::move(tokens));
    }
    if (lines.size() != 2) throw ParseError(0, "order file must hold two lines of labels");
    return lines;
}

PermRep permrep_from_orders(const std::vector<std::string>& first,
                            const std::vector<std::string>& second) {
    if (first.size() != second.size())
        throw ParseError(2, "order lines list different vertex counts");
    std::unordered_map<std::string, VertexId> index;
    std::vector<VertexId> seq1, seq2;
    for (const std::string& label : first) {
        auto [it, inserted] = index.emplace(label, static_cast<VertexId>(seq1.size()));
        if (!inserted) throw ParseError(1, "duplicate label '" + label + "'");
        seq1.push_back(it->second);
    }
    for (const std::string& label : second) {
        auto it = index.find(label);
        if (it == index.end())
            throw ParseError(2, "label '" + label + "' missing from the first line");
        seq2.push_back(it->second);
    }
    PermRep pr;
    pr.l1 = LinearOrder::of(std::move(seq1));
    pr.l2 = LinearOrder::of(std::move(seq2));  // throws on repeated labels
    pr.labels = first;
    return pr;
}

void register_permrep_query(CLI::App& app, const std::string& name, std::istream& in,
                            std::ostream& out) {
    auto opts = std::make_shared<PermrepQueryOpts>();
    auto* cmd = app.add_subcommand(name, "answer one reachability query from an order file");
    cmd->add_option("file", opts->file, "order file from permrep-build, - for stdin")
        ->required();
    cmd->add_option("u", opts->u, "source vertex label")->required();
    cmd->add_option("v", opts->v, "destination vertex label")->required();
    cmd->callback([opts, &in, &out] {
        auto lines = order_file_lines(slurp(opts->file, in));
        PermRep pr = permrep_from_orders(lines[0], lines[1]);
        std::unordered_map<std::string, VertexId> index;
        for (std::size_t i = 0; i < pr.labels.size(); ++i)
            index.emplace(pr.labels[i], static_cast<VertexId>(i));
        auto lookup = [&](const std::string& label) {
            auto it = index.find(label);
            if (it == index.end()) throw UnknownVertexError("unknown vertex '" + label + "'");
            return it->second;
        };
        out << (reachable(pr, lookup(opts->u), lookup(opts->v)) ? "true\n" : "false\n");
    });
}

void register_oracle(CLI::App& app, std::istream& in, std::ostream& out) {
    auto opts = std::make_shared<CommonOpts>();
    auto all = std::make_shared<bool>(false);
    auto* cmd = app.add_subcommand("oracle", "brute-force module listing for small graphs");
    add_io(cmd, *opts);
    cmd->add_flag("--all", *all, "list every module instead of only strong ones");
    cmd->callback([opts, all, &in, &out] {
        Digraph g = load(*opts, in);
        std::ostringstream text;
        for (const ModuleSet& m : *all ? all_modules(g) : strong_modules(g))
            text << join_labels(g, m) << '\n';
        emit(opts->output, out, text.str());
    });
}

void register_closure(CLI::App& app, std::istream& in, std::ostream& out) {
    auto opts = std::make_shared<CommonOpts>();
    auto kind = std::make_shared<std::string>("transitive");
    auto* cmd = app.add_subcommand("closure", "transitive or undirected closure");
    add_io(cmd, *opts, false);
    cmd->add_option("--kind", *kind, "transitive or undirected")
        ->check(CLI::IsMember({"transitive", "undirected"}));
    cmd->callback([opts, kind, &in, &out] {
        Digraph g = parse_edge_list(slurp(opts->input, in));
        Digraph c = *kind == "transitive" ? transitive_closure(g) : undirected_closure(g);
        emit(opts->output, out, serialize_edge_list(c));
    });
}

void register_complement(CLI::App& app, std::istream& in, std::ostream& out) {
    auto opts = std::make_shared<CommonOpts>();
    auto* cmd = app.add_subcommand("complement", "edge complement");
    cmd->add_option("input", opts->input, "edge list file, - for stdin");
    cmd->add_option("-o,--output", opts->output, "output file, - for stdout");
    cmd->add_flag("--undirected", opts->undirected,
                  "complement over unordered pairs of the symmetrized input");
    cmd->callback([opts, &in, &out] {
        Digraph g = parse_edge_list(slurp(opts->input, in));
        Digraph c = opts->undirected ? undirected_complement(g) : complement(g);
        emit(opts->output, out, serialize_edge_list(c));
    });
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"modular decomposition of digraphs via transitive closures"};
    app.require_subcommand(1);

    register_decompose(app, in, out);
    register_reduce(app, in, out);
    register_orient(app, in, out);
    register_permrep_build(app, "permrep-build", in, out);
    register_permrep_query(app, "permrep-query", in, out);
    auto* group = app.add_subcommand("permrep", "two-order reachability index");
    group->require_subcommand(1);
    register_permrep_build(*group, "build", in, out);
    register_permrep_query(*group, "query", in, out);
    register_oracle(app, in, out);
    register_closure(app, in, out);
    register_complement(app, in, out);

    try {
        app.parse(argc, argv);
        return 0;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const modec::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const modec::Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace modec::cli
