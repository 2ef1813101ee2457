#include "sr/acceptance.hpp"
#include "sr/builders.hpp"
#include "sr/cocycle.hpp"
#include "sr/coloring.hpp"
#include "sr/error.hpp"
#include "sr/moves.hpp"
#include "sr/presentation.hpp"
#include "sr/specs.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>

#ifndef SR_CORPUS_DIR
#define SR_CORPUS_DIR "corpus"
#endif

using json = nlohmann::json;
using namespace sr;

namespace {

struct Config {
    std::string diagram;
    std::string heap;
    std::string coeff;
    std::string cocycles;
    std::vector<std::string> cocycle;
    std::string output = "human";
    std::string presentation;
    std::string check;
    std::string corpus = SR_CORPUS_DIR;
    std::string out_file;
    std::uint64_t seed = 1;
    int steps = 100;
    int max_edges = 200;
    bool simplify = false;
    bool abelianize = false;
    bool count = false;
    bool list = false;
    bool run_all = false;
    int criterion = 0;
};

bool json_mode(const Config &c) { return c.output == "json"; }

// cyclic:n and dihedral:n default to cyclic:n coefficients.
CoeffPtr coeffs_for(const Config &c) {
    if (!c.coeff.empty())
        return parse_coeff_spec(c.coeff);
    auto colon = c.heap.find(':');
    if (colon != std::string::npos && (c.heap.rfind("cyclic:", 0) == 0 || c.heap.rfind("dihedral:", 0) == 0))
        return parse_coeff_spec("cyclic:" + c.heap.substr(colon + 1));
    return nullptr;
}

HeapPtr heap_for(const Config &c) {
    if (c.heap.empty())
        throw Error("--heap is required");
    return parse_heap_spec(c.heap);
}

std::vector<Cochain2> cocycles_for(const Config &c, const HeapPtr &heap, const CoeffPtr &coeffs) {
    std::vector<std::string> specs = c.cocycle;
    if (!c.cocycles.empty())
        for (auto &s : split_cocycle_list(c.cocycles))
            specs.push_back(s);
    if (specs.empty())
        throw Error("no cocycles given");
    std::vector<Cochain2> out;
    for (const auto &s : specs) {
        Cochain2 p = parse_cocycle_spec(s, heap, coeffs);
        if (heap && p.heap().op().table != heap->op().table)
            throw Error("cocycle '" + s + "' is not on the heap " + c.heap);
        if (coeffs && !(p.coeffs() == *coeffs))
            throw Error("cocycle '" + s + "' does not take values in " + c.coeff);
        out.push_back(std::move(p));
    }
    return out;
}

json check_json(const Check &k) {
    json j = k.ok;
    if (!k.ok)
        return json{{"ok", false}, {"witness", k.witness}};
    return j;
}

std::string check_text(const Check &k) {
    std::string s = k.ok ? "true" : "false";
    if (!k.ok && !k.witness.empty()) {
        s += " (witness";
        for (int w : k.witness)
            s += " " + std::to_string(w);
        s += ")";
    }
    return s;
}

int cmd_validate(const Config &c) {
    RibbonDiagram d = load_diagram(c.diagram);
    TopologySummary s = validate(d);
    bool planar = is_planar(d);
    if (json_mode(c)) {
        for (std::size_t i = 0; i < s.components.size(); ++i) {
            const auto &k = s.components[i];
            std::cout << json{{"component", "S" + std::to_string(i + 1)},
                              {"euler", k.euler},
                              {"boundaries", k.boundaries},
                              {"genus", k.genus}}
                             .dump()
                      << "\n";
        }
        std::cout << json{{"planar", planar}, {"crossings", d.crossing_count()}, {"vertices", d.vertex_count()}}.dump()
                  << "\n";
    } else {
        std::cout << s << "\n"
                  << "vertices " << d.vertex_count() << ", crossings " << d.crossing_count() << ", planar "
                  << (planar ? "yes" : "no") << "\n";
    }
    return 0;
}

int cmd_boundary(const Config &c) {
    RibbonDiagram d = load_diagram(c.diagram);
    BoundaryStructure bs = boundary(d);
    for (std::size_t b = 0; b < bs.components.size(); ++b) {
        const auto &k = bs.components[b];
        if (json_mode(c)) {
            json ev = json::array();
            for (const auto &e : k.events)
                ev.push_back({{"crossing", d.nodes[e.crossing].id},
                              {"direction", e.along_under ? "ui->uo" : "uo->ui"},
                              {"before", e.arc_before},
                              {"after", e.arc_after}});
            std::cout << json{{"boundary", b + 1}, {"surface", "S" + std::to_string(k.surface + 1)}, {"arcs", k.arcs},
                              {"events", ev}}
                             .dump()
                      << "\n";
            continue;
        }
        std::cout << "b" << b + 1 << " on S" << k.surface + 1 << ": arcs";
        for (int a : k.arcs)
            std::cout << " " << default_generator_name(a);
        std::cout << "\n";
        for (const auto &e : k.events)
            std::cout << "  under " << d.nodes[e.crossing].id << (e.along_under ? " ui->uo " : " uo->ui ")
                      << default_generator_name(e.arc_before) << " -> " << default_generator_name(e.arc_after)
                      << "\n";
    }
    if (!json_mode(c))
        std::cout << bs.arc_count << " arcs, " << bs.surfaces << " surfaces\n";
    return 0;
}

int cmd_presentation(const Config &c) {
    GroupPresentation p = fundamental_presentation(load_diagram(c.diagram));
    if (c.simplify)
        p = tietze_simplify(p);
    if (c.abelianize) {
        AbelianInvariants a = abelianization(p);
        if (json_mode(c))
            std::cout << json{{"free_rank", a.free_rank}, {"torsion", a.torsion}}.dump() << "\n";
        else
            std::cout << a.to_string() << "\n";
        return 0;
    }
    if (json_mode(c)) {
        json rels = json::array();
        for (const auto &w : p.relators)
            rels.push_back(p.word_string(w));
        std::cout << json{{"generators", p.generators}, {"relators", rels}}.dump() << "\n";
    } else {
        std::cout << p.to_text();
    }
    return 0;
}

int cmd_colorings(const Config &c) {
    RibbonDiagram d = load_diagram(c.diagram);
    HeapPtr x = heap_for(c);
    BoundaryStructure bs = boundary(d);
    if (!c.list) {
        std::uint64_t n = count_colorings(bs, *x);
        if (json_mode(c))
            std::cout << json{{"colorings", n}}.dump() << "\n";
        else
            std::cout << n << "\n";
        return 0;
    }
    for_each_coloring(bs, *x, [&](const Coloring &col) {
        if (json_mode(c)) {
            json j = json::object();
            for (std::size_t a = 0; a < col.size(); ++a)
                j[default_generator_name(static_cast<int>(a))] = x->name(col[a]);
            std::cout << j.dump() << "\n";
        } else {
            for (std::size_t a = 0; a < col.size(); ++a)
                std::cout << (a ? " " : "") << default_generator_name(static_cast<int>(a)) << "=" << x->name(col[a]);
            std::cout << "\n";
        }
        return true;
    });
    return 0;
}

int cmd_invariant(const Config &c) {
    RibbonDiagram d = load_diagram(c.diagram);
    HeapPtr x = heap_for(c);
    CoeffPtr a = coeffs_for(c);
    Decoration dec(cocycles_for(c, x, a));
    InvariantValue v = cocycle_invariant(d, dec);
    if (json_mode(c))
        std::cout << v.to_json_lines(dec.coeffs());
    else
        std::cout << v.to_string(dec.coeffs()) << "total " << v.total() << " colorings\n";
    return 0;
}

int cmd_cocycle_check(const Config &c) {
    HeapPtr x = c.heap.empty() ? nullptr : parse_heap_spec(c.heap);
    CoeffPtr a = c.heap.empty() ? nullptr : coeffs_for(c);
    auto cs = cocycles_for(c, x, a);
    for (std::size_t i = 0; i < cs.size(); ++i) {
        CocycleReport r = check_cocycle_conditions(cs[i]);
        if (json_mode(c)) {
            std::cout << json{{"cocycle", i + 1},
                              {"is_cocycle", check_json(r.cocycle)},
                              {"nondegenerate", check_json(r.nondegenerate)},
                              {"reversible", check_json(r.reversible)},
                              {"additive", check_json(r.additive)},
                              {"separable", check_json(r.separable)}}
                             .dump()
                      << "\n";
        } else {
            if (cs.size() > 1)
                std::cout << "cocycle " << i + 1 << "\n";
            std::cout << "cocycle=" << check_text(r.cocycle) << "\n"
                      << "nondegenerate=" << check_text(r.nondegenerate) << "\n"
                      << "reversible=" << check_text(r.reversible) << "\n"
                      << "additive=" << check_text(r.additive) << "\n"
                      << "separable=" << check_text(r.separable) << "\n";
        }
    }
    return 0;
}

int cmd_mutdist_check(const Config &c) {
    HeapPtr x = c.heap.empty() ? nullptr : parse_heap_spec(c.heap);
    CoeffPtr a = c.heap.empty() ? nullptr : coeffs_for(c);
    auto cs = cocycles_for(c, x, a);
    if (cs.size() != 2)
        throw Error("mutdist-check needs exactly two cocycles");
    Check k = mutual_distributivity_check(cs[0], cs[1]);
    if (json_mode(c))
        std::cout << json{{"mutually_distributive", check_json(k)}}.dump() << "\n";
    else
        std::cout << "mutually_distributive=" << check_text(k) << "\n";
    return 0;
}

int cmd_fuzz(const Config &c) {
    RibbonDiagram d = load_diagram(c.diagram);
    FuzzOptions opt;
    opt.max_edges = c.max_edges;
    FuzzResult r = fuzz(d, c.seed, c.steps, opt);
    for (const auto &line : r.trace)
        std::cout << (json_mode(c) ? json{{"move", line}}.dump() : line) << "\n";
    bool same_summary = validate(d) == validate(r.diagram);
    bool ok = same_summary;
    json report{{"summary_preserved", same_summary}, {"planar", is_planar(r.diagram)}};
    std::string text = std::string("summary ") + (same_summary ? "preserved" : "CHANGED");
    if (c.check == "colorings") {
        HeapPtr x = heap_for(c);
        std::uint64_t before = count_colorings(d, *x), after = count_colorings(r.diagram, *x);
        ok = ok && before == after;
        report["colorings"] = {before, after};
        text += ", colorings " + std::to_string(before) + " -> " + std::to_string(after);
    } else if (c.check == "invariant") {
        HeapPtr x = heap_for(c);
        CoeffPtr a = coeffs_for(c);
        Decoration dec(cocycles_for(c, x, a));
        bool same = cocycle_invariant(d, dec) == cocycle_invariant(r.diagram, dec);
        ok = ok && same;
        report["invariant_preserved"] = same;
        text += std::string(", invariant ") + (same ? "preserved" : "CHANGED");
    } else if (!c.check.empty()) {
        throw Error("--check takes colorings or invariant");
    }
    if (json_mode(c))
        std::cout << report.dump() << "\n";
    else
        std::cout << text << "\n";
    if (!c.out_file.empty())
        std::ofstream(c.out_file) << write_srd(r.diagram);
    if (!ok) {
        std::cerr << "error: move sequence changed an invariant\n";
        return 1;
    }
    return 0;
}

int cmd_realize(const Config &c) {
    GroupPresentation p = read_presentation(c.presentation);
    Realization r = realize_group(p);
    std::string srd = write_srd(r.diagram);
    if (c.out_file.empty())
        std::cout << srd;
    else
        std::ofstream(c.out_file) << srd;
    std::cerr << "free factors k=" << r.k << "\n";
    return 0;
}

int cmd_build(const Config &c) {
    std::string srd = write_srd(build_from_spec(c.diagram));
    if (c.out_file.empty())
        std::cout << srd;
    else
        std::ofstream(c.out_file) << srd;
    return 0;
}

int cmd_corpus(const Config &c) {
    if (!c.run_all && c.criterion == 0) {
        for (const auto &[name, d] : load_corpus(c.corpus)) {
            TopologySummary s = validate(d);
            std::cout << name << ": nu=" << s.nu() << " g=" << s.total_genus() << " b=" << s.total_boundaries()
                      << " crossings=" << d.crossing_count() << "\n";
        }
        return 0;
    }
    std::vector<CriterionResult> rows;
    if (c.criterion)
        rows.push_back(run_criterion(c.criterion, c.corpus));
    else
        rows = run_acceptance(c.corpus);
    int failed = 0;
    for (const auto &r : rows) {
        failed += !r.pass;
        if (json_mode(c))
            std::cout << json{{"criterion", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}}.dump()
                      << "\n";
        else
            std::cout << format_row(r) << "\n";
    }
    if (!json_mode(c))
        std::cout << rows.size() - failed << "/" << rows.size() << " criteria pass\n";
    return failed ? 1 : 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"surface ribbon diagrams: colorings, cocycle invariants, moves"};
    app.require_subcommand(1);
    Config c;

    auto diagram_arg = [&](CLI::App *s) {
        s->add_option("diagram", c.diagram, ".srd file or builder spec (annulus, bands:m,n, loops:m1,..;k, torus:k, ...)")
            ->required();
    };
    auto output_opt = [&](CLI::App *s) {
        s->add_option("--output", c.output, "human or json")->check(CLI::IsMember({"human", "json"}));
    };
    auto algebra_opts = [&](CLI::App *s) {
        s->add_option("--heap", c.heap, "cyclic:n, dihedral:n or group table file");
        s->add_option("--coeff", c.coeff, "cyclic:n or abelian:n1,n2,... (defaults to cyclic:n)");
        s->add_option("--cocycles", c.cocycles, "comma-separated cocycle specs, one per surface component");
        s->add_option("--cocycle", c.cocycle, "one cocycle spec; repeatable");
    };

    auto *validate_cmd = app.add_subcommand("validate", "topological summary per component");
    diagram_arg(validate_cmd);
    output_opt(validate_cmd);

    auto *boundary_cmd = app.add_subcommand("boundary", "boundary components, arcs and under-passages");
    diagram_arg(boundary_cmd);
    output_opt(boundary_cmd);

    auto *pres_cmd = app.add_subcommand("presentation", "fundamental heap presentation");
    diagram_arg(pres_cmd);
    output_opt(pres_cmd);
    pres_cmd->add_flag("--simplify", c.simplify, "Tietze simplification");
    pres_cmd->add_flag("--abelianize", c.abelianize, "abelian invariants");

    auto *col_cmd = app.add_subcommand("colorings", "heap colorings");
    diagram_arg(col_cmd);
    output_opt(col_cmd);
    algebra_opts(col_cmd);
    auto *count_flag = col_cmd->add_flag("--count", c.count, "print the number of colorings (default)");
    col_cmd->add_flag("--list", c.list, "print every coloring")->excludes(count_flag);

    auto *inv_cmd = app.add_subcommand("invariant", "cocycle invariant");
    diagram_arg(inv_cmd);
    output_opt(inv_cmd);
    algebra_opts(inv_cmd);

    auto *cc_cmd = app.add_subcommand("cocycle-check", "cocycle, nondegenerate, reversible, additive, separable");
    output_opt(cc_cmd);
    algebra_opts(cc_cmd);

    auto *md_cmd = app.add_subcommand("mutdist-check", "mutual distributivity of two cocycles");
    output_opt(md_cmd);
    algebra_opts(md_cmd);

    auto *fuzz_cmd = app.add_subcommand("fuzz", "random move sequence");
    diagram_arg(fuzz_cmd);
    output_opt(fuzz_cmd);
    algebra_opts(fuzz_cmd);
    fuzz_cmd->add_option("--steps", c.steps, "number of moves")->check(CLI::NonNegativeNumber);
    fuzz_cmd->add_option("--seed", c.seed, "RNG seed");
    fuzz_cmd->add_option("--max-edges", c.max_edges, "growth cap")->check(CLI::PositiveNumber);
    fuzz_cmd->add_option("--check", c.check, "colorings or invariant")
        ->check(CLI::IsMember({"colorings", "invariant"}));
    fuzz_cmd->add_option("-o,--out", c.out_file, "write the final diagram here");

    auto *real_cmd = app.add_subcommand("realize", "diagram whose fundamental heap realizes a group");
    real_cmd->add_option("--presentation", c.presentation, "presentation file (gens:/rel: lines)")->required();
    real_cmd->add_option("-o,--out", c.out_file, "write the diagram here instead of stdout");

    auto *build_cmd = app.add_subcommand("build", "write a builder spec as .srd");
    diagram_arg(build_cmd);
    build_cmd->add_option("-o,--out", c.out_file, "output file");

    auto *corpus_cmd = app.add_subcommand("corpus", "fixture corpus and acceptance table");
    output_opt(corpus_cmd);
    corpus_cmd->add_flag("--run-all", c.run_all, "run every acceptance criterion");
    corpus_cmd->add_option("--criterion", c.criterion, "run one criterion")->check(CLI::Range(1, 10));
    corpus_cmd->add_option("--dir", c.corpus, "corpus directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*validate_cmd)
            return cmd_validate(c);
        if (*boundary_cmd)
            return cmd_boundary(c);
        if (*pres_cmd)
            return cmd_presentation(c);
        if (*col_cmd)
            return cmd_colorings(c);
        if (*inv_cmd)
            return cmd_invariant(c);
        if (*cc_cmd)
            return cmd_cocycle_check(c);
        if (*md_cmd)
            return cmd_mutdist_check(c);
        if (*fuzz_cmd)
            return cmd_fuzz(c);
        if (*real_cmd)
            return cmd_realize(c);
        if (*build_cmd)
            return cmd_build(c);
        if (*corpus_cmd)
            return cmd_corpus(c);
    } catch (const ParseError &e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
