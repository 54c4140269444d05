#include "rootline/cli.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "rootline/catalog.hpp"
#include "rootline/embedding.hpp"
#include "rootline/graph_io.hpp"
#include "rootline/mutation.hpp"
#include "rootline/oracle.hpp"
#include "rootline/recognition.hpp"

namespace rootline::cli {

namespace {

using nlohmann::json;

enum class Format { Json, Graph6, Dot, Text };

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string input = "-";
    std::string input_format = "graph6";
    std::string format;
    bool verify = false;
    bool oracle = false;
    int jobs = 1;
    std::string list;
    std::optional<std::size_t> max_classes;
};

struct Outcome {
    std::string text;
    int status = 0;
};

Format resolve_format(const Options& o, bool terminal, std::initializer_list<Format> allowed, const std::string& cmd) {
    Format f = terminal ? Format::Text : Format::Json;
    if (o.format == "json") f = Format::Json;
    if (o.format == "graph6") f = Format::Graph6;
    if (o.format == "dot") f = Format::Dot;
    if (o.format == "text") f = Format::Text;
    if (std::find(allowed.begin(), allowed.end(), f) == allowed.end()) {
        throw UsageError("--format " + (o.format.empty() ? std::string("json") : o.format) + " is not available for " + cmd);
    }
    return f;
}

std::vector<SimpleGraph> read_graphs(const Options& o, std::istream& in) {
    std::string text;
    if (o.input == "-") {
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    } else {
        std::ifstream file(o.input, std::ios::binary);
        if (!file) throw UsageError("cannot read " + o.input);
        text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
    }
    if (o.input_format == "edgelist") return {parse_simple_edgelist(text)};
    std::istringstream ss(text);
    return parse_graph6_stream(ss);
}

// Runs f over every input graph on up to `jobs` threads; output order is input order.
template <class F>
std::vector<Outcome> map_graphs(std::size_t count, int jobs, F&& f) {
    std::vector<Outcome> results(count);
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < count;) {
            try {
                results[i] = f(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const auto threads = std::min<std::size_t>(static_cast<std::size_t>(std::max(1, jobs)), count);
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return results;
}

void require_connected(const SimpleGraph& g, std::size_t idx, const std::string& cmd) {
    if (g.order() == 0 || !is_connected(g)) throw UsageError(cmd + ": graph " + std::to_string(idx) + " is not connected");
}

Certificate relabel(Certificate c, const std::vector<int>& comp) {
    if (auto* r = std::get_if<RootCertificate>(&c)) {
        for (int& v : r->edge_to_vertex) v = comp[static_cast<std::size_t>(v)];
    } else {
        auto& w = std::get<WitnessCertificate>(c);
        for (int& v : w.vertices) v = comp[static_cast<std::size_t>(v)];
        std::sort(w.vertices.begin(), w.vertices.end());
    }
    return c;
}

Certificate decision_certificate(const ListDecision& d) {
    if (d.member) return *d.root;
    return *d.witness;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

Outcome classify_one(const SimpleGraph& g, std::size_t idx, const Options& o, Format f) {
    auto components = connected_components(g);
    for (auto& c : components) std::sort(c.begin(), c.end());
    std::sort(components.begin(), components.end());
    json comps = json::array();
    std::ostringstream text;
    text << "graph " << idx << ": " << g.order() << " vertices, " << components.size() << " component(s)\n";
    Outcome out;
    bool all = true;
    bool checks = true;
    for (const auto& comp : components) {
        const auto sub = induced_subgraph(g, comp);
        const auto cert = recognize_multigraph_line_graph(sub);
        const auto ord = is_ordinary_line_graph(sub);
        const auto gen = is_generalized_line_graph(sub);
        const bool multi = std::holds_alternative<RootCertificate>(cert);
        all = all && multi;
        json jc;
        jc["vertices"] = comp;
        jc["multigraph_line_graph"] = multi;
        jc["certificate"] = json::parse(certificate_to_json(relabel(cert, comp)));
        jc["ordinary_line_graph"] = ord.member;
        jc["ordinary_certificate"] = json::parse(certificate_to_json(relabel(decision_certificate(ord), comp)));
        jc["generalized_line_graph"] = gen.member;
        jc["generalized_certificate"] = json::parse(certificate_to_json(relabel(decision_certificate(gen), comp)));
        if (o.verify) {
            const bool ok = verify_certificate(sub, cert) && verify_certificate(sub, decision_certificate(ord)) &&
                            verify_certificate(sub, decision_certificate(gen));
            jc["verified"] = ok;
            checks = checks && ok;
        }
        if (o.oracle) {
            if (sub.order() <= 6) {
                const bool om = oracle_line_graph_root(sub, OracleKind::Multigraph).has_value();
                const bool oo = oracle_line_graph_root(sub, OracleKind::Ordinary).has_value();
                const bool og = oracle_line_graph_root(sub, OracleKind::Generalized).has_value();
                const bool agrees = om == multi && oo == ord.member && og == gen.member;
                jc["oracle"] = {{"multigraph_line_graph", om}, {"ordinary_line_graph", oo}, {"generalized_line_graph", og}, {"agrees", agrees}};
                checks = checks && agrees;
            } else {
                jc["oracle"] = nullptr;
            }
        }
        text << "  component {";
        for (std::size_t i = 0; i < comp.size(); ++i) text << (i ? "," : "") << comp[i];
        text << "}: multigraph " << yes_no(multi) << ", ordinary " << yes_no(ord.member) << ", generalized " << yes_no(gen.member);
        if (o.verify) text << ", verified " << yes_no(jc["verified"].get<bool>());
        if (o.oracle) text << ", oracle " << (jc["oracle"].is_null() ? std::string("skipped") : yes_no(jc["oracle"]["agrees"].get<bool>()) + " agreement");
        text << "\n    certificate " << jc["certificate"].dump() << "\n";
        comps.push_back(jc);
    }
    out.status = !checks ? 3 : (all ? 0 : 1);
    if (f == Format::Json) {
        out.text = json{{"graph", idx}, {"order", g.order()}, {"components", comps}}.dump() + "\n";
    } else {
        out.text = text.str();
    }
    return out;
}

std::string type_name(const std::optional<FormType>& t) { return t ? to_string(*t) : "none"; }

Outcome embed_one(const SimpleGraph& g, std::size_t idx, const Options& o, Format f) {
    if (g.order() == 0) throw UsageError("embed: graph " + std::to_string(idx) + " is empty");
    const auto u = universal_embedding(g);
    const auto s = summarize(u.space());
    const auto classes = twin_classes(g);
    const auto m = minimal_embedding(g);
    const int mdim = m.embedded.space().dim();
    json j{{"graph", idx},
           {"order", g.order()},
           {"dim", s.dim},
           {"f_radical_dim", s.f_radical_dim},
           {"isotropic_radical_dim", s.isotropic_radical_dim},
           {"type", s.type ? json(to_string(*s.type)) : json(nullptr)},
           {"minimal_dim", mdim},
           {"twin_classes", classes}};
    j["closure_size"] = mdim <= kMaxClosureDim ? json(cotriangular_closure(m.embedded).size()) : json(nullptr);
    Outcome out;
    if (o.verify) {
        const bool ok = u.graph() == g && m.embedded.graph() == twin_quotient(g).graph;
        j["verified"] = ok;
        if (!ok) out.status = 3;
    }
    if (f == Format::Json) {
        out.text = j.dump() + "\n";
    } else {
        std::ostringstream t;
        t << "graph " << idx << ": " << g.order() << " vertices\n"
          << "  dim " << s.dim << ", f-radical " << s.f_radical_dim << ", isotropic radical " << s.isotropic_radical_dim
          << ", type " << type_name(s.type) << "\n"
          << "  minimal dim " << mdim << ", twin classes " << classes.size() << ", closure "
          << (j["closure_size"].is_null() ? std::string("skipped") : std::to_string(j["closure_size"].get<std::size_t>())) << "\n";
        out.text = t.str();
    }
    return out;
}

Outcome reduce_one(const SimpleGraph& g, std::size_t idx, const Options& o, Format f) {
    require_connected(g, idx, "reduce");
    const auto red = reduce_to_tree(g);
    const bool an = tree_is_An_reducible(red.tree);
    Outcome out;
    std::optional<bool> ok;
    if (o.verify) {
        ok = replay(g, red.log) == red.tree && replay(universal_embedding(g), red.log).graph() == red.tree;
        if (!*ok) out.status = 3;
    }
    switch (f) {
        case Format::Json: {
            json j{{"graph", idx}, {"tree", emit_graph6(red.tree)}, {"tree_edges", red.tree.edges()},
                   {"log", json::parse(red.log.to_json())}, {"an_reducible", an}};
            if (ok) j["verified"] = *ok;
            out.text = j.dump() + "\n";
            break;
        }
        case Format::Graph6: out.text = emit_graph6(red.tree) + "\n"; break;
        case Format::Dot: out.text = emit_dot(red.tree, "T" + std::to_string(idx)); break;
        case Format::Text: {
            std::ostringstream t;
            t << "graph " << idx << ": tree " << emit_graph6(red.tree) << " after " << red.log.steps.size()
              << " step(s), A_n-reducible " << yes_no(an);
            if (ok) t << ", verified " << yes_no(*ok);
            t << "\n  log " << red.log.to_json() << "\n";
            out.text = t.str();
            break;
        }
    }
    return out;
}

bool same_invariants(const SpaceSummary& a, const SpaceSummary& b) {
    return a.dim == b.dim && a.f_radical_dim == b.f_radical_dim && a.isotropic_radical_dim == b.isotropic_radical_dim && a.type == b.type;
}

Outcome class_one(const SimpleGraph& g, std::size_t idx, const Options& o, Format f) {
    require_connected(g, idx, "class");
    const std::size_t bound = o.max_classes ? *o.max_classes : max_classes_from_env();
    std::vector<CanonicalForm> members;
    bool complete = true;
    try {
        members = equivalence_class(g, bound);
    } catch (const ClassBoundExceeded& e) {
        members = e.partial();
        complete = false;
    }
    Outcome out;
    out.status = complete ? 0 : 1;
    std::optional<bool> ok;
    if (o.verify) {
        const auto base = summarize(universal_embedding(g).space());
        ok = std::all_of(members.begin(), members.end(), [&](const CanonicalForm& m) {
            return same_invariants(summarize(universal_embedding(m.graph()).space()), base);
        });
        if (!*ok) out.status = 3;
    }
    switch (f) {
        case Format::Json: {
            json list = json::array();
            for (const auto& m : members) list.push_back(m.graph6());
            json j{{"graph", idx}, {"count", members.size()}, {"complete", complete}, {"members", list}};
            if (!complete) j["bound"] = bound;
            if (ok) j["verified"] = *ok;
            out.text = j.dump() + "\n";
            break;
        }
        case Format::Graph6:
            for (const auto& m : members) out.text += m.graph6() + "\n";
            break;
        case Format::Dot:
            for (std::size_t i = 0; i < members.size(); ++i) out.text += emit_dot(members[i].graph(), "C" + std::to_string(idx) + "_" + std::to_string(i));
            break;
        case Format::Text: {
            std::ostringstream t;
            t << "graph " << idx << ": " << members.size() << " member(s)"
              << (complete ? std::string() : ", stopped at bound " + std::to_string(bound));
            if (ok) t << ", verified " << yes_no(*ok);
            t << "\n";
            for (const auto& m : members) t << "  " << m.graph6() << "\n";
            out.text = t.str();
            break;
        }
    }
    return out;
}

int emit_catalog(const Options& o, Format f, std::ostream& out) {
    const auto list = forbidden_list_from_string(o.list);
    if (!list) throw UsageError("unknown list '" + o.list + "' (expected e6, h, g, beineke or glg)");
    const auto& members = catalog().list(*list);
    const std::string header = o.list + ": " + std::to_string(members.size()) + " graphs";
    switch (f) {
        case Format::Json: {
            json graphs = json::array();
            for (const auto& m : members) graphs.push_back(m.graph6());
            out << json{{"list", o.list}, {"count", members.size()}, {"graphs", graphs}}.dump() << "\n";
            break;
        }
        case Format::Graph6: out << "# " << header << "\n" << snapshot_text(*list); break;
        case Format::Dot:
            out << "// " << header << "\n";
            for (std::size_t i = 0; i < members.size(); ++i) out << emit_dot(members[i].graph(), o.list + "_" + std::to_string(i));
            break;
        case Format::Text:
            out << "# " << header << "\n";
            for (std::size_t i = 0; i < members.size(); ++i) {
                const auto g = members[i].graph();
                out << i << "\t" << members[i].graph6() << "\t" << g.order() << " vertices\t" << g.size() << " edges\n";
            }
            break;
    }
    return 0;
}

}  // namespace

int run(int argc, const char* const* argv, Streams io) {
    CLI::App app{"Line graphs of multigraphs through GF(2) quadratic spaces"};
    app.require_subcommand(1, 1);
    Options o;
    std::size_t max_classes = 0;

    auto add_common = [&](CLI::App* sub, bool with_input) {
        sub->add_option("--format", o.format, "json, graph6, dot or text")->check(CLI::IsMember({"json", "graph6", "dot", "text"}));
        sub->add_flag("--verify", o.verify, "re-check every certificate or log from scratch");
        sub->add_flag("--oracle", o.oracle, "compare with brute force on components of at most 6 vertices");
        sub->add_option("--jobs", o.jobs, "graphs processed in parallel")->check(CLI::PositiveNumber);
        if (with_input) {
            sub->add_option("input", o.input, "input file, or - for standard input");
            sub->add_option("--input-format", o.input_format, "graph6 (one graph per line) or edgelist")
                ->check(CLI::IsMember({"graph6", "edgelist"}));
        }
    };
    auto* classify = app.add_subcommand("classify", "decide the three line-graph classes with certificates");
    add_common(classify, true);
    auto* cat = app.add_subcommand("catalog", "emit a forbidden-subgraph list");
    add_common(cat, false);
    cat->add_option("list", o.list, "e6, h, g, beineke or glg")->required();
    auto* embed = app.add_subcommand("embed", "report the universal and minimal embeddings");
    add_common(embed, true);
    auto* reduce = app.add_subcommand("reduce", "mutate to a tree and print the replayable log");
    add_common(reduce, true);
    auto* cls = app.add_subcommand("class", "enumerate the mutation class");
    add_common(cls, true);
    auto* bound_opt = cls->add_option("--max-classes", max_classes, "stop after this many classes (default ROOTLINE_MAX_CLASSES or 10000)")
                          ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, io.out, io.err) == 0 ? 0 : 2;
    }
    if (bound_opt->count()) o.max_classes = max_classes;

    try {
        if (cat->parsed()) {
            return emit_catalog(o, resolve_format(o, io.out_is_terminal, {Format::Json, Format::Graph6, Format::Dot, Format::Text}, "catalog"), io.out);
        }
        std::function<Outcome(const SimpleGraph&, std::size_t, const Options&, Format)> one;
        Format f;
        if (classify->parsed()) {
            f = resolve_format(o, io.out_is_terminal, {Format::Json, Format::Text}, "classify");
            one = classify_one;
        } else if (embed->parsed()) {
            f = resolve_format(o, io.out_is_terminal, {Format::Json, Format::Text}, "embed");
            one = embed_one;
        } else if (reduce->parsed()) {
            f = resolve_format(o, io.out_is_terminal, {Format::Json, Format::Graph6, Format::Dot, Format::Text}, "reduce");
            one = reduce_one;
        } else {
            f = resolve_format(o, io.out_is_terminal, {Format::Json, Format::Graph6, Format::Dot, Format::Text}, "class");
            one = class_one;
        }
        const auto graphs = read_graphs(o, io.in);
        const auto results = map_graphs(graphs.size(), o.jobs, [&](std::size_t i) {
            try {
                return one(graphs[i], i, o, f);
            } catch (const DisconnectedInput& e) {
                throw UsageError("graph " + std::to_string(i) + ": " + e.what());
            } catch (const std::invalid_argument& e) {
                throw UsageError("graph " + std::to_string(i) + ": " + e.what());
            }
        });
        int status = 0;
        for (const auto& r : results) {
            io.out << r.text;
            status = std::max(status, r.status);
        }
        if (status == 3) io.err << "rootline: a certificate, log or oracle comparison failed re-checking\n";
        return status;
    } catch (const ParseError& e) {
        io.err << "rootline: " << (o.input == "-" ? std::string("<stdin>") : o.input) << ": " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        io.err << "rootline: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace rootline::cli
