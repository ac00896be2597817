#include "symflex/cli.hpp"

#include "symflex/closure.hpp"
#include "symflex/fixtures.hpp"
#include "symflex/flex_io.hpp"
#include "symflex/flexes.hpp"
#include "symflex/frameworks.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace symflex {

using nlohmann::json;

namespace {

    struct Globals {
        std::uint64_t seed = 0;
        std::size_t cap_cycles = default_path_cap;
        std::uint64_t budget = default_budget;
        double tol = default_geometric_tolerance;
        bool json_output = false;
    };

    struct Result {
        int status = exit_true;
        json summary;
        std::string text;
    };

    std::string read_stream(std::istream& in)
    {
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }

    std::string read_input(const std::string& path, std::istream& in)
    {
        if (path == "-") {
            return read_stream(in);
        }
        std::ifstream file(path, std::ios::binary);
        if (!file) {
            throw Error(ErrorCode::Io, "cannot read '" + path + "'", path);
        }
        return read_stream(file);
    }

    GraphDocument load_document(const std::string& path, std::istream& in)
    {
        if (path != "-" && !std::filesystem::exists(path)) {
            const std::string stem = std::filesystem::path(path).stem().string();
            const std::vector<std::string> names = fixture_names();
            if (std::find(names.begin(), names.end(), stem) != names.end()) {
                return fixture(stem);
            }
        }
        return parse_document(read_input(path, in));
    }

    void write_output(const std::string& path, const std::string& text, std::ostream& out)
    {
        if (path.empty() || path == "-") {
            out << text;
            return;
        }
        std::ofstream file(path, std::ios::binary);
        if (!file || !(file << text)) {
            throw Error(ErrorCode::Io, "cannot write '" + path + "'", path);
        }
    }

    EnumerateOptions enumerate_options(const Globals& g)
    {
        EnumerateOptions o;
        o.prune = true;
        o.budget = g.budget;
        o.cycle_cap = g.cap_cycles;
        return o;
    }

    json colouring_json(const Graph& g, const std::vector<Colour>& colour)
    {
        json j = json::object();
        for (std::size_t e = 0; e < g.edge_count(); ++e) {
            j[g.edge_key(static_cast<EdgeIndex>(e))] = std::string(to_string(colour[e]));
        }
        return j;
    }

    std::map<std::string, Colour> colouring_map(const Graph& g, const ThreeColouring& delta)
    {
        std::map<std::string, Colour> m;
        for (std::size_t e = 0; e < g.edge_count(); ++e) {
            m[g.edge_key(static_cast<EdgeIndex>(e))] = delta.colour[e];
        }
        return m;
    }

    json vertex_list(const Graph& g, const std::vector<VertexIndex>& vs)
    {
        json j = json::array();
        for (const VertexIndex v : vs) {
            j.push_back(g.name(v));
        }
        return j;
    }

    std::string join_names(const Graph& g, const std::vector<VertexIndex>& vs)
    {
        std::string s;
        for (const VertexIndex v : vs) {
            s += (s.empty() ? "" : " ") + g.name(v);
        }
        return s;
    }

    json report_json(const FlexReport& r)
    {
        return {
            { "samples", r.samples },
            { "length_variation", r.length_variation },
            { "symmetry_residual", r.symmetry_residual },
            { "min_edge_gap", r.min_edge_gap },
            { "nontriviality", r.nontriviality },
            { "lengths_ok", r.lengths_ok() },
            { "symmetric", r.symmetric() },
            { "gaps_ok", r.gaps_ok() },
            { "nontrivial", r.nontrivial() },
            { "passed", r.passed() },
        };
    }

    std::string report_text(const FlexReport& r)
    {
        std::ostringstream s;
        const auto line = [&](const char* name, double value, const char* op, double bound, bool ok) {
            s << name << ' ' << format_coordinate(value) << ' ' << op << ' ' << format_coordinate(bound) << ' '
              << (ok ? "ok" : "FAIL") << '\n';
        };
        s << "samples " << r.samples << '\n';
        line("length_variation", r.length_variation, "<=", r.tolerances.length, r.lengths_ok());
        line("symmetry_residual", r.symmetry_residual, "<=", r.tolerances.symmetry, r.symmetric());
        line("min_edge_gap", r.min_edge_gap, ">=", r.tolerances.min_gap, r.gaps_ok());
        line("nontriviality", r.nontriviality, ">=", r.tolerances.angle, r.nontrivial());
        s << (r.passed() ? "passed" : "failed") << '\n';
        return s.str();
    }

    // ------------------------------------------------------------ check

    Result check(const Globals& gl, const std::string& what, const GraphDocument& doc, const std::string& name,
        const std::vector<std::string>& certificates)
    {
        const SymmetricGraph sg = build_graph(doc);
        const Graph& g = sg.graph();
        const ThreeColouring delta = build_colouring(doc, g, name);
        Result r;
        r.summary = { { "check", what }, { "colouring", name } };
        bool ok = false;
        std::string detail;
        if (what == "nac") {
            const NacResult n = is_nac(g, TwoColouring { delta.colour });
            ok = n.ok;
            r.summary["failure"] = n.failure == NacFailure::None ? "None"
                : n.failure == NacFailure::NotSurjective       ? "NotSurjective"
                : n.failure == NacFailure::Cycle               ? "Cycle"
                                                               : "NotTwoColouring";
            detail = r.summary["failure"].get<std::string>();
            if (n.witness) {
                r.summary["witness"] = vertex_list(g, n.witness->vertices);
                detail += " " + join_names(g, n.witness->vertices);
            }
        } else if (what == "pseudo-rs") {
            const PseudoRsResult p = is_pseudo_rs(sg, delta);
            ok = p.ok;
            r.summary["failure"] = std::string(to_string(p.failure));
            detail = std::string(to_string(p.failure));
            if (p.witness_edge) {
                r.summary["witness"] = g.edge_key(*p.witness_edge);
                detail += " " + g.edge_key(*p.witness_edge);
            }
        } else if (what == "rs") {
            std::vector<ThreeColouring> pool;
            for (const std::string& c : certificates) {
                pool.push_back(build_colouring(doc, g, c));
            }
            ClassifyOptions o;
            o.cycle_cap = gl.cap_cycles;
            o.budget = gl.budget;
            const RsVerdict v = classify_rs(sg, delta, certificates.empty() ? nullptr : &pool, o);
            ok = v.is_rs();
            r.summary["status"] = std::string(to_string(v.status));
            detail = std::string(to_string(v.status));
            if (v.status == RsStatus::NotPseudoRs) {
                r.summary["failure"] = std::string(to_string(v.pseudo_failure));
            }
            if (v.witness) {
                r.summary["witness"] = vertex_list(g, v.witness->vertices);
                detail += " " + join_names(g, v.witness->vertices);
            }
            json certified = json::array();
            for (const Certification& c : v.certified) {
                certified.push_back({ { "cycle", vertex_list(g, c.cycle.vertices) },
                    { "separated", { g.edge_key(c.e1), g.edge_key(c.e2) } },
                    { "certificate", colouring_json(g, c.certificate.colour) } });
            }
            r.summary["certified"] = certified;
            if (v.status == RsStatus::UnknownTruncated) {
                r.status = exit_unknown;
            }
        } else if (what == "cartesian") {
            const CartesianResult c = is_cartesian(sg, delta);
            ok = c.ok;
            if (c.witness) {
                r.summary["witness"] = { g.name(c.witness->first), g.name(c.witness->second) };
                detail = "forced together: " + g.name(c.witness->first) + " " + g.name(c.witness->second);
            }
        } else {
            throw Error(ErrorCode::InvalidArgument, "unknown check '" + what + "'", what);
        }
        r.summary["ok"] = ok;
        if (r.status != exit_unknown) {
            r.status = ok ? exit_true : exit_false;
        }
        r.text = what + " " + (ok ? "true" : "false") + (detail.empty() ? "" : " (" + detail + ")") + "\n";
        return r;
    }

    // ------------------------------------------------------------ enumerate

    Result enumerate(const Globals& gl, const std::string& what, const GraphDocument& doc, bool up_to_conjugation)
    {
        const SymmetricGraph sg = build_graph(doc);
        const Graph& g = sg.graph();
        std::vector<std::vector<Colour>> found;
        bool truncated = false;
        std::uint64_t candidates = 0;
        if (what == "nac") {
            NacOptions o;
            o.quotient_swap = up_to_conjugation;
            o.budget = gl.budget;
            for (const TwoColouring& c : enumerate_nac(g, o)) {
                found.push_back(c.colour);
            }
        } else if (what == "pseudo-rs" || what == "rs") {
            EnumerateOptions o = enumerate_options(gl);
            o.quotient_conjugation = up_to_conjugation;
            o.rs_only = what == "rs";
            const Enumeration e = enumerate_pseudo_rs(sg, o);
            for (const ThreeColouring& c : e.colourings) {
                found.push_back(c.colour);
            }
            truncated = e.truncated;
            candidates = e.candidates;
        } else {
            throw Error(ErrorCode::InvalidArgument, "unknown enumeration '" + what + "'", what);
        }
        Result r;
        r.summary = { { "enumerate", what }, { "up_to_conjugation", up_to_conjugation }, { "count", found.size() },
            { "truncated", truncated } };
        if (what != "nac") {
            r.summary["candidates"] = candidates;
        }
        json list = json::array();
        std::ostringstream text;
        text << "count " << found.size() << (truncated ? " (truncated)" : "") << '\n';
        for (std::size_t i = 0; i < found.size(); ++i) {
            list.push_back(colouring_json(g, found[i]));
            text << "# " << i << '\n' << format_colouring(g, found[i]);
        }
        r.summary["colourings"] = list;
        r.text = text.str();
        r.status = truncated ? exit_unknown : exit_true;
        return r;
    }

    // ------------------------------------------------------------ closure and verdicts

    json trace_json(const ClosureTrace& trace)
    {
        json stages = json::array();
        for (const ClosureStage& s : trace.stages) {
            json added = json::array();
            for (const auto& [u, v] : s.added) {
                added.push_back({ u, v });
            }
            stages.push_back({ { "edges", s.graph.edge_count() }, { "added", added }, { "vacuous", s.vacuous } });
        }
        return { { "stages", stages }, { "vacuous", trace.vacuous } };
    }

    Result closure(const Globals& gl, const GraphDocument& doc, std::ostream& err)
    {
        const SymmetricGraph sg = build_graph(doc);
        const ClosureTrace trace = gold_closure(sg, enumerate_options(gl));
        if (trace.vacuous) {
            err << "warning: a closure stage has no RS-colouring; its gold core is vacuous\n";
        }
        Result r;
        r.summary = trace_json(trace);
        r.summary["final"] = json::parse(emit_document(make_document(trace.final_graph(), doc.provenance)));
        r.text = r.summary.dump(2) + "\n";
        return r;
    }

    Result verdict(const Globals& gl, const GraphDocument& doc)
    {
        const SymmetricGraph sg = build_graph(doc);
        const NecessityVerdict v = necessity_verdict(sg, enumerate_options(gl));
        Result r;
        r.summary = { { "verdict", std::string(to_string(v.verdict)) }, { "rs_count", v.rs_colourings.size() } };
        r.summary["sample"] = v.sample ? colouring_json(sg.graph(), v.sample->colour) : json(nullptr);
        r.summary["restriction_of_closure"] = v.restriction_of_closure;
        r.summary["closure"] = trace_json(v.trace);
        std::ostringstream text;
        text << "verdict " << to_string(v.verdict) << '\n' << "rs-colourings " << v.rs_colourings.size() << '\n';
        if (v.verdict == Necessity::NoRs) {
            text << "no RS-colouring: no reflection-symmetric flexible realisation\n";
        } else if (v.verdict == Necessity::ClosureNoRs) {
            text << "the gold closure has no RS-colouring: no reflection-symmetric flexible realisation\n";
        }
        if (v.trace.vacuous) {
            text << "warning: vacuous closure stage\n";
        }
        r.text = text.str();
        r.status = v.verdict == Necessity::HasRs ? exit_true : exit_false;
        return r;
    }

    Result tp_verdict(const Globals& gl, const GraphDocument& doc)
    {
        const Framework fw = build_framework(doc);
        const TpDecision d = decide_tp_flexibility(fw, gl.tol);
        Result r;
        r.summary = { { "tp", std::string(to_string(d.verdict)) }, { "reason", d.reason } };
        if (d.colouring) {
            r.summary["colouring"] = colouring_json(fw.graph().graph(), d.colouring->colour);
        }
        if (d.report) {
            r.summary["report"] = report_json(*d.report);
        }
        r.text = "tp " + std::string(to_string(d.verdict)) + (d.reason.empty() ? "" : " (" + d.reason + ")") + "\n";
        r.status = d.verdict == TpVerdict::Flexible ? exit_true
            : d.verdict == TpVerdict::Rigid         ? exit_false
                                                    : exit_unknown;
        return r;
    }

    // ------------------------------------------------------------ flexes

    struct FlexArgs {
        std::string kind;
        std::string input;
        std::string colouring;
        std::string second;
        std::string w;
        std::string pivot;
        bool mirrored = false;
        bool force = false;
        std::string output;
    };

    FlexDocument make_flex(const Globals& gl, const FlexArgs& a, std::istream& in)
    {
        const GraphDocument doc = load_document(a.input, in);
        const SymmetricGraph sg = build_graph(doc);
        const Graph& g = sg.graph();
        const auto require = [](const std::string& value, const char* flag) {
            if (value.empty()) {
                throw Error(ErrorCode::InvalidArgument, std::string(flag) + " is required", flag);
            }
        };
        FlexDocument out;
        out.graph = doc;
        if (a.kind == "grid") {
            require(a.colouring, "--colouring");
            const ThreeColouring d = build_colouring(doc, g, a.colouring);
            out.flex = grid_flex(sg, d, gl.seed);
            out.colouring = colouring_map(g, d);
        } else if (a.kind == "double") {
            require(a.colouring, "--colouring");
            require(a.second, "--second");
            require(a.w, "--w");
            const ThreeColouring d1 = build_colouring(doc, g, a.colouring);
            const ThreeColouring d2 = build_colouring(doc, g, a.second);
            DoubleOptions o;
            o.seed = gl.seed;
            o.mirrored_branch = a.mirrored;
            o.force = a.force;
            o.cap = gl.cap_cycles;
            out.flex = double_flex(sg, d1, d2, g.vertex_index(a.w), o);
            out.colouring = colouring_map(g, d1);
        } else if (a.kind == "walkindep") {
            const Framework fw = build_framework(doc);
            ThreeColouring d;
            if (a.colouring.empty()) {
                const ApcPartition apc = angle_preserving_classes(sg);
                const auto c = noninvariant_apc(apc);
                if (!c) {
                    throw Error(ErrorCode::ClassInvariant, "every angle-preserving class is invariant");
                }
                d = cartesian_from_apc(sg, apc, *c);
            } else {
                d = build_colouring(doc, g, a.colouring);
            }
            const std::optional<VertexIndex> pivot = a.pivot.empty() ? std::nullopt : std::optional(g.vertex_index(a.pivot));
            out.flex = walkindep_flex(fw, d, pivot, gl.tol);
            out.colouring = colouring_map(g, d);
        } else {
            throw Error(ErrorCode::InvalidArgument, "unknown construction '" + a.kind + "'", a.kind);
        }
        return out;
    }

    Result verify(const Globals& gl, const FlexDocument& doc, std::size_t samples)
    {
        const SymmetricGraph sg = build_graph(doc.graph);
        Tolerances tol;
        tol.length = gl.tol;
        const FlexReport rep = verify_flex(sg, doc.flex, samples, tol);
        Result r;
        r.summary = report_json(rep);
        r.summary["kind"] = doc.flex.kind;
        r.text = report_text(rep);
        r.status = rep.passed() ? exit_true : exit_false;
        return r;
    }

    std::string samples_json(const FlexDocument& doc, const std::vector<FlexSample>& samples)
    {
        const SymmetricGraph sg = build_graph(doc.graph);
        const Graph& g = sg.graph();
        json list = json::array();
        for (const FlexSample& s : samples) {
            json p = json::object();
            for (std::size_t v = 0; v < s.p.size(); ++v) {
                p[g.name(static_cast<VertexIndex>(v))] = { format_coordinate(s.p[v].x), format_coordinate(s.p[v].y) };
            }
            json entry = { { "t", format_coordinate(s.t) }, { "p", p } };
            if (s.s) {
                entry["s"] = format_coordinate(*s.s);
            }
            list.push_back(entry);
        }
        return json { { "kind", doc.flex.kind }, { "samples", list } }.dump(2) + "\n";
    }

    // ------------------------------------------------------------ fixtures

    struct FixtureArgs {
        std::string name;
        std::string variant;
        int k = 3;
        int m = 1;
        int n = 2;
        bool brace = false;
        bool triangles = false;
        std::string output;
        std::string all;
    };

    GraphDocument make_fixture(const Globals& gl, const FixtureArgs& a)
    {
        if (a.name == "gk") {
            return gk_fixture(a.k);
        }
        if (a.name == "strip") {
            StripOptions o;
            o.rows = a.m;
            o.columns = a.n;
            o.brace = a.brace;
            o.triangles = a.triangles;
            o.seed = gl.seed;
            return strip_fixture(o);
        }
        if (a.name == "gadget" && !a.variant.empty()) {
            return gadget_fixture(a.variant);
        }
        return fixture(a.name);
    }

    void print(const Globals& gl, const Result& r, std::ostream& out)
    {
        if (gl.json_output) {
            out << r.summary.dump(2) << '\n';
        } else {
            out << r.text;
        }
    }

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    Globals gl;
    CLI::App app { "Reflection-symmetric flexibility of bar-joint frameworks via RS-colourings", "symflex" };
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--seed", gl.seed, "Seed for base point draws and generated fixtures");
    app.add_option("--cap-cycles", gl.cap_cycles, "Cap on enumerated cycles and paths");
    std::optional<std::uint64_t> budget;
    app.add_option("--budget", budget, "Enumeration budget (default: SYMFLEX_BUDGET or 3^24)");
    app.add_option("--tol", gl.tol, "Geometric tolerance and relative length tolerance");
    app.add_flag("--json", gl.json_output, "Machine-readable output");

    std::string what;
    std::string input = "-";
    std::string colouring;
    std::vector<std::string> certificates;
    bool up_to_conjugation = false;
    bool tp = false;
    std::size_t samples = 200;
    std::size_t n_samples = 0;
    std::string output;
    std::string csv;
    std::string svg;
    int frames = 24;
    FlexArgs flex_args;
    FixtureArgs fixture_args;

    CLI::App* check_cmd = app.add_subcommand("check", "Test one colouring of a graph document");
    check_cmd->add_option("what", what, "nac | pseudo-rs | rs | cartesian")
        ->required()
        ->check(CLI::IsMember({ "nac", "pseudo-rs", "rs", "cartesian" }));
    check_cmd->add_option("document", input, "Graph document, - for stdin")->required();
    check_cmd->add_option("--colouring", colouring, "Name of a colouring in the document")->required();
    check_cmd->add_option("--certificate", certificates, "Restrict rs certificates to these colourings");

    CLI::App* enumerate_cmd = app.add_subcommand("enumerate", "List colourings of a graph document");
    enumerate_cmd->add_option("what", what, "nac | pseudo-rs | rs")
        ->required()
        ->check(CLI::IsMember({ "nac", "pseudo-rs", "rs" }));
    enumerate_cmd->add_option("document", input, "Graph document, - for stdin")->required();
    enumerate_cmd->add_flag("--up-to-conjugation", up_to_conjugation, "One representative per conjugate pair");

    CLI::App* closure_cmd = app.add_subcommand("closure", "Gold closure trace as JSON");
    closure_cmd->add_option("document", input, "Graph document, - for stdin")->required();

    CLI::App* verdict_cmd = app.add_subcommand("verdict", "Necessary-condition verdict");
    verdict_cmd->add_option("document", input, "Graph document, - for stdin")->required();
    verdict_cmd->add_flag("--tp", tp, "Decide a walk-independent framework from its realisation");

    CLI::App* flex_cmd = app.add_subcommand("flex", "Construct a parametric flex");
    flex_cmd->add_option("kind", flex_args.kind, "grid | double | walkindep")
        ->required()
        ->check(CLI::IsMember({ "grid", "double", "walkindep" }));
    flex_cmd->add_option("document", flex_args.input, "Graph document, - for stdin")->required();
    flex_cmd->add_option("--colouring", flex_args.colouring, "Colouring name (first colouring for double)");
    flex_cmd->add_option("--second", flex_args.second, "Second colouring for double");
    flex_cmd->add_option("--w", flex_args.w, "Invariant vertex for double");
    flex_cmd->add_option("--pivot", flex_args.pivot, "Base vertex for walkindep");
    flex_cmd->add_flag("--mirrored", flex_args.mirrored, "Other branch of s(t) for double");
    flex_cmd->add_flag("--force", flex_args.force, "Build a double flex even if its conditions fail");
    flex_cmd->add_option("-o,--output", flex_args.output, "Output file (default stdout)");

    CLI::App* verify_cmd = app.add_subcommand("verify", "Numerically verify a flex document");
    verify_cmd->add_option("flex", input, "Flex document, - for stdin");
    verify_cmd->add_option("--samples", samples, "Number of samples")->check(CLI::Range(std::size_t { 2 }, std::size_t { 10'000'000 }));

    CLI::App* sample_cmd = app.add_subcommand("sample", "Realisations of a flex at uniform parameters");
    sample_cmd->add_option("flex", input, "Flex document, - for stdin");
    sample_cmd->add_option("--n", n_samples, "Number of samples")->required();
    sample_cmd->add_option("-o,--output", output, "Output file (default stdout)");

    CLI::App* export_cmd = app.add_subcommand("export", "Export frames of a flex as CSV or SVG");
    export_cmd->add_option("flex", input, "Flex document, - for stdin");
    export_cmd->add_option("--csv", csv, "CSV file, - for stdout");
    export_cmd->add_option("--svg", svg, "Directory for one SVG file per frame");
    export_cmd->add_option("--frames", frames, "Number of frames");

    CLI::App* fixtures_cmd = app.add_subcommand("fixtures", "Emit a catalog fixture, or list them");
    fixtures_cmd->add_option("name", fixture_args.name, "Fixture name");
    fixtures_cmd->add_option("variant", fixture_args.variant, "Gadget name for `gadget`");
    fixtures_cmd->add_option("--k", fixture_args.k, "Parameter of gk")->check(CLI::PositiveNumber);
    fixtures_cmd->add_option("--m", fixture_args.m, "Rows of strip")->check(CLI::PositiveNumber);
    fixtures_cmd->add_option("--n", fixture_args.n, "Columns of strip")->check(CLI::PositiveNumber);
    fixtures_cmd->add_flag("--brace", fixture_args.brace, "Brace strip cells");
    fixtures_cmd->add_flag("--triangles", fixture_args.triangles, "Attach triangles to the strip");
    fixtures_cmd->add_option("-o,--output", fixture_args.output, "Output file (default stdout)");
    fixtures_cmd->add_option("--all", fixture_args.all, "Write every catalog fixture into this directory");

    std::vector<const char*> argv { "symflex" };
    for (const std::string& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_error;
    }

    try {
        gl.budget = budget ? *budget : budget_from_environment();
        if (check_cmd->parsed()) {
            const Result r = check(gl, what, load_document(input, in), colouring, certificates);
            print(gl, r, out);
            return r.status;
        }
        if (enumerate_cmd->parsed()) {
            const Result r = enumerate(gl, what, load_document(input, in), up_to_conjugation);
            print(gl, r, out);
            return r.status;
        }
        if (closure_cmd->parsed()) {
            const Result r = closure(gl, load_document(input, in), err);
            out << r.summary.dump(2) << '\n';
            return r.status;
        }
        if (verdict_cmd->parsed()) {
            const GraphDocument doc = load_document(input, in);
            const Result r = tp ? tp_verdict(gl, doc) : verdict(gl, doc);
            print(gl, r, out);
            return r.status;
        }
        if (flex_cmd->parsed()) {
            write_output(flex_args.output, emit_flex(make_flex(gl, flex_args, in)), out);
            return exit_true;
        }
        if (verify_cmd->parsed()) {
            const Result r = verify(gl, parse_flex(read_input(input, in)), samples);
            print(gl, r, out);
            return r.status;
        }
        if (sample_cmd->parsed()) {
            const FlexDocument doc = parse_flex(read_input(input, in));
            write_output(output, samples_json(doc, sample_flex(doc.flex, n_samples)), out);
            return exit_true;
        }
        if (export_cmd->parsed()) {
            if (frames < 1) {
                throw Error(ErrorCode::InvalidArgument, "--frames must be at least 1", std::to_string(frames));
            }
            if (csv.empty() && svg.empty()) {
                throw Error(ErrorCode::InvalidArgument, "give --csv, --svg or both");
            }
            const FlexDocument doc = parse_flex(read_input(input, in));
            const SymmetricGraph sg = build_graph(doc.graph);
            const std::vector<FlexSample> s = sample_flex(doc.flex, static_cast<std::size_t>(frames));
            if (!csv.empty()) {
                write_output(csv, samples_csv(sg.graph(), s), out);
            }
            if (!svg.empty()) {
                std::error_code ec;
                std::filesystem::create_directories(svg, ec);
                if (ec) {
                    throw Error(ErrorCode::Io, "cannot create '" + svg + "'", svg);
                }
                const std::vector<std::string> pages = samples_svg(sg.graph(), doc.colouring, s);
                for (std::size_t i = 0; i < pages.size(); ++i) {
                    char name[32];
                    std::snprintf(name, sizeof name, "frame_%04zu.svg", i);
                    write_output((std::filesystem::path(svg) / name).string(), pages[i], out);
                }
            }
            return exit_true;
        }
        if (fixtures_cmd->parsed()) {
            if (!fixture_args.all.empty()) {
                std::error_code ec;
                std::filesystem::create_directories(fixture_args.all, ec);
                if (ec) {
                    throw Error(ErrorCode::Io, "cannot create '" + fixture_args.all + "'", fixture_args.all);
                }
                for (const std::string& name : fixture_names()) {
                    write_output((std::filesystem::path(fixture_args.all) / (name + ".json")).string(),
                        emit_document(fixture(name)), out);
                }
                return exit_true;
            }
            if (fixture_args.name.empty()) {
                if (gl.json_output) {
                    out << json(fixture_names()).dump(2) << '\n';
                } else {
                    for (const std::string& name : fixture_names()) {
                        out << name << '\n';
                    }
                }
                return exit_true;
            }
            write_output(fixture_args.output, emit_document(make_fixture(gl, fixture_args)), out);
            return exit_true;
        }
    } catch (const Error& e) {
        const bool unknown = e.code() == ErrorCode::Truncated || e.code() == ErrorCode::BudgetExceeded;
        if (gl.json_output) {
            out << json { { "error", { { "code", std::string(to_string(e.code())) }, { "message", e.what() },
                                         { "witness", e.witness() } } } }
                       .dump(2)
                << '\n';
        } else {
            err << "error: " << e.what() << (e.witness().empty() ? "" : " [" + e.witness() + "]") << '\n';
        }
        return unknown ? exit_unknown : exit_error;
    }
    return exit_error;
}

} // namespace symflex
