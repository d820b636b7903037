// Command-line surface: classification, Lie identification, spin
// verification, element arithmetic, and table regeneration.
//
// Exit codes: 0 ok, 2 input error, 3 connectivity precondition,
// 4 spin precondition.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qclifford/algebra.hpp"
#include "qclifford/classify.hpp"
#include "qclifford/errors.hpp"
#include "qclifford/graph.hpp"
#include "qclifford/lie.hpp"
#include "qclifford/quadspace.hpp"
#include "qclifford/spin.hpp"
#include "qclifford/tables.hpp"

namespace {

using nlohmann::json;

struct GraphInput {
    std::string family;
    std::vector<std::string> positionals;
};

// Resolve the graph source: exactly one of --family SPEC or a FILE
// positional. Returns the graph and the leftover positionals (mul's word).
qcl::ColoredGraph resolve_graph(GraphInput& in, std::vector<std::string>& leftover) {
    leftover.clear();
    if (!in.family.empty()) {
        leftover = in.positionals;
        return qcl::family_graph(in.family);
    }
    if (in.positionals.empty())
        throw qcl::input_error("no graph given: pass --family SPEC or a graph file");
    leftover.assign(in.positionals.begin() + 1, in.positionals.end());
    return qcl::parse_graph_file(in.positionals.front());
}

void require_no_leftover(const std::vector<std::string>& leftover) {
    if (!leftover.empty())
        throw qcl::input_error("unexpected argument: '" + leftover.front() + "'");
}

// 2^log2 as a JSON value; symbolic string past the integer range.
json pow2_json(int log2) {
    if (log2 <= 62) return json(1ull << log2);
    return json("2^" + std::to_string(log2));
}

json algebra_dim_json(const qcl::IsoType& t) {
    const int log2 = qcl::algebra_dim_log2(t);
    if (log2 <= 62) return json(qcl::algebra_dim(t));
    return json("2^" + std::to_string(log2));
}

std::string lie_base_str(qcl::TailFactor base) {
    switch (base) {
        case qcl::TailFactor::NONE: return "F";
        case qcl::TailFactor::GAUSS: return "F[i]";
        default: return "H";
    }
}

json lie_type_json(const qcl::LieIsoType& t) {
    return json{{"family", qcl::lie_family_str(t.family)},
                {"size", t.size},
                {"base", lie_base_str(t.base)},
                {"copies", pow2_json(t.copies_log2)}};
}

void emit(const std::string& text) { std::cout << text; }

int cmd_classify(GraphInput& in, const std::string& field_text, const std::string& output) {
    std::vector<std::string> leftover;
    const qcl::ColoredGraph g = resolve_graph(in, leftover);
    require_no_leftover(leftover);
    const qcl::FieldType field = qcl::parse_field(field_text);

    const qcl::QuadClass c = qcl::classify_quadratic(qcl::build_space(g));
    const qcl::IsoType iso = qcl::algebra_iso(c, field);

    if (output == "json") {
        json j{{"n", c.n_bar},
               {"r", c.r},
               {"type", std::string(1, qcl::qtype_char(c.type))},
               {"field", qcl::field_str(field)},
               {"factors", json{{"m2", iso.m2}, {"tail", qcl::tail_str(iso.tail)}}},
               {"copies", pow2_json(iso.copies_log2)},
               {"dim", algebra_dim_json(iso)}};
        emit(j.dump(2) + "\n");
        return 0;
    }
    std::ostringstream os;
    os << "class: n=" << c.n_bar << " r=" << c.r << " type=" << qcl::qtype_char(c.type) << "\n";
    os << "field: " << qcl::field_str(field) << "\n";
    os << "algebra: " << qcl::format_algebra(iso) << "\n";
    const int log2 = qcl::algebra_dim_log2(iso);
    if (log2 <= 62)
        os << "dim: " << qcl::algebra_dim(iso) << "\n";
    else
        os << "dim: 2^" << log2 << "\n";
    emit(os.str());
    return 0;
}

int cmd_lie(GraphInput& in, const std::string& field_text, const std::string& output) {
    std::vector<std::string> leftover;
    const qcl::ColoredGraph g = resolve_graph(in, leftover);
    require_no_leftover(leftover);
    const qcl::FieldType field = qcl::parse_field(field_text);

    const qcl::KReport rep = qcl::identify_K(g, field);

    if (output == "json") {
        json j{{"closure_dim", rep.closure_dim ? json(*rep.closure_dim) : json(nullptr)},
               {"is_line_graph", rep.reduced_is_line_graph},
               {"root_size", rep.root_size ? json(*rep.root_size) : json(nullptr)},
               {"quotient", lie_type_json(rep.quotient)},
               {"quotient_dim", rep.quotient_dim},
               {"compact", lie_type_json(rep.compact)},
               {"compact_dim", rep.compact_dim}};
        emit(j.dump(2) + "\n");
        return 0;
    }
    std::ostringstream os;
    if (rep.closure_dim)
        os << "closure: " << *rep.closure_dim << "\n";
    else
        os << "closure: skipped (graph above the closure cap)\n";
    if (rep.reduced_is_line_graph)
        os << "reduction: line graph, root size " << *rep.root_size << "\n";
    else
        os << "reduction: not a line graph\n";
    os << "quotient: " << qcl::format_lie(rep.quotient) << "\n";
    os << "quotient_dim: " << rep.quotient_dim << "\n";
    os << "compact: " << qcl::format_lie(rep.compact) << "\n";
    os << "compact_dim: " << rep.compact_dim << "\n";
    emit(os.str());
    return 0;
}

int cmd_spin(GraphInput& in, const std::string& output) {
    std::vector<std::string> leftover;
    const qcl::ColoredGraph g = resolve_graph(in, leftover);
    require_no_leftover(leftover);

    const std::vector<qcl::SignedXorOp> ops = qcl::left_regular_rep(g);
    const qcl::SpinReport rep = qcl::verify_spin(g, ops);

    if (output == "json") {
        json j{{"squares_ok", rep.squares_ok},
               {"edge_anticommute_ok", rep.edge_anticommute_ok},
               {"nonedge_commute_ok", rep.nonedge_commute_ok},
               {"berman_ok", rep.berman_ok},
               {"lie_span_dim", rep.lie_span_dim}};
        emit(j.dump(2) + "\n");
        return 0;
    }
    std::ostringstream os;
    auto yn = [](bool b) { return b ? "true" : "false"; };
    os << "squares_ok: " << yn(rep.squares_ok) << "\n";
    os << "edge_anticommute_ok: " << yn(rep.edge_anticommute_ok) << "\n";
    os << "nonedge_commute_ok: " << yn(rep.nonedge_commute_ok) << "\n";
    os << "berman_ok: " << yn(rep.berman_ok) << "\n";
    os << "lie_span_dim: " << rep.lie_span_dim << "\n";
    emit(os.str());
    return 0;
}

int cmd_mul(GraphInput& in, const std::string& output) {
    std::vector<std::string> leftover;
    const qcl::ColoredGraph g = resolve_graph(in, leftover);

    // The word: every leftover positional, further split on whitespace so a
    // single quoted "v1 v2" argument also works.
    std::vector<std::string> word;
    for (const std::string& chunk : leftover) {
        std::istringstream is(chunk);
        std::string tok;
        while (is >> tok) word.push_back(tok);
    }

    const qcl::AlgebraContext ctx = qcl::make_context(g);
    qcl::AlgebraElement acc = qcl::unit_element(ctx);
    for (const std::string& name : word) {
        const int idx = g.index_of(name);
        if (idx < 0) throw qcl::input_error("unknown vertex: '" + name + "'");
        acc = qcl::multiply(ctx, acc, qcl::generator_element(ctx, idx));
    }

    if (output == "json") {
        json terms = json::array();
        for (const auto& [mono, coef] : acc.terms) {
            json names = json::array();
            for (int i : mono.bits()) names.push_back(ctx.names[i]);
            terms.push_back(json{{"coef", qcl::rational_str(coef)}, {"monomial", names}});
        }
        json j{{"element", qcl::format_element(ctx, acc)}, {"terms", terms}};
        emit(j.dump(2) + "\n");
        return 0;
    }
    emit(qcl::format_element(ctx, acc) + "\n");
    return 0;
}

int cmd_tables(int which, const std::string& output) {
    const qcl::TableDoc doc = qcl::build_table(which);
    emit(output == "json" ? qcl::render_table_json(doc) : qcl::render_table_text(doc));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quasi-Clifford algebras of colored labeled graphs: exact "
                 "classification, Lie identification, and spin verification"};
    app.require_subcommand(1);

    std::string output = "text";
    std::string field_text = "III";

    GraphInput cin_classify, cin_lie, cin_spin, cin_mul;
    int table_number = 0;

    auto add_graph_opts = [&](CLI::App* sub, GraphInput& in, const char* pos_desc) {
        sub->add_option("--family", in.family,
                        "Built-in family spec: A:n, D:n, E:n, K:n, or Cl:p,q");
        sub->add_option("input", in.positionals, pos_desc);
        sub->add_option("--output", output, "Output format: text or json")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* sc = app.add_subcommand("classify", "Classify the quadratic space and algebra");
    add_graph_opts(sc, cin_classify, "Graph file");
    sc->add_option("--field", field_text, "Ground field kind: I, II, or III");

    CLI::App* sl = app.add_subcommand("lie", "Identify the Lie algebra the vertices generate");
    add_graph_opts(sl, cin_lie, "Graph file");
    sl->add_option("--field", field_text, "Ground field kind: I, II, or III");

    CLI::App* ss = app.add_subcommand("spin", "Build and verify the left-regular spin operators");
    add_graph_opts(ss, cin_spin, "Graph file");

    CLI::App* sm = app.add_subcommand("mul", "Multiply a word of generators");
    add_graph_opts(sm, cin_mul, "Graph file (unless --family), then the word");

    CLI::App* st = app.add_subcommand("tables", "Regenerate one of the six summary tables");
    st->add_option("number", table_number, "Table number 1..6")->required();
    st->add_option("--output", output, "Output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (sc->parsed()) return cmd_classify(cin_classify, field_text, output);
        if (sl->parsed()) return cmd_lie(cin_lie, field_text, output);
        if (ss->parsed()) return cmd_spin(cin_spin, output);
        if (sm->parsed()) return cmd_mul(cin_mul, output);
        return cmd_tables(table_number, output);
    } catch (const qcl::spin_precondition_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const qcl::connectivity_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const qcl::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
