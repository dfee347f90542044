#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chainloop/divisor.hpp"
#include "chainloop/document.hpp"
#include "chainloop/errors.hpp"
#include "chainloop/graph.hpp"
#include "chainloop/lattice_path.hpp"
#include "chainloop/render.hpp"
#include "chainloop/tableau.hpp"
#include "chainloop/verify.hpp"

namespace {

using namespace chainloop;

std::string read_input(const std::string& path) {
    if (path.empty()) {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open input file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot open output file '" + path + "'");
    out << text;
}

Document load_document(const std::string& path) {
    return parse_document(read_input(path));
}

ChainOfLoops graph_for(const std::string& graph_path, int genus,
                       const char* what) {
    if (graph_path.empty()) return default_graph(genus);
    const Document doc = parse_document(read_input(graph_path));
    const ChainOfLoops& graph = doc.graph();
    if (graph.genus() != genus) {
        throw ShapeError(std::string(what) + " needs a genus " +
                         std::to_string(genus) + " graph, got genus " +
                         std::to_string(graph.genus()));
    }
    return graph;
}

// Checks that a divisor document lies in the image of the tableau map and
// returns it with canonical unit distances.
UnderlineSeq canonical_phi_image(const DivisorPayload& payload) {
    const DivisorSeq& raw = payload.raw;
    const ChainOfLoops& graph = raw.graph();
    const int g = graph.genus();
    const int r = raw.chips_at_v0();
    const int d = degree(raw);
    const long long rows = static_cast<long long>(g) - d + r;
    if (r < 0 || rows < 1 || rows * (r + 1) != g) {
        throw ShapeError("divisor head " + std::to_string(r) + " and degree " +
                         std::to_string(d) + " do not fit genus " +
                         std::to_string(g));
    }
    if (r == 0) {
        return UnderlineSeq(graph, 0,
                            std::vector<int>(static_cast<size_t>(g), 0));
    }
    const LatticePath path = rho(raw, r);
    if (!is_non_lingering(path)) {
        throw ValidationError("divisor is not an image of the tableau map");
    }
    UnderlineSeq units = alpha(path, graph);
    if (!(underline_to_raw(units) == raw)) {
        throw ValidationError("divisor is not an image of the tableau map");
    }
    return units;
}

int run_convert(const std::string& input, const std::string& target,
                const std::string& graph_path, const std::string& out) {
    const Document doc = load_document(input);

    if (doc.kind == DocKind::tableau && target == "path") {
        write_output(out, dump_document(make_document(tableau_to_path(doc.tableau()))));
        return 0;
    }
    if (doc.kind == DocKind::tableau && target == "divisor") {
        const RectTableau& t = doc.tableau();
        const ChainOfLoops graph = graph_for(graph_path, t.size(), "tableau");
        write_output(out, dump_document(make_document(phi(t, graph))));
        return 0;
    }
    if (doc.kind == DocKind::path && target == "tableau") {
        write_output(out, dump_document(make_document(path_to_tableau(doc.path()))));
        return 0;
    }
    if (doc.kind == DocKind::path && target == "divisor") {
        const LatticePath& path = doc.path();
        const ChainOfLoops graph =
            graph_for(graph_path, path.step_count(), "path");
        write_output(out, dump_document(make_document(alpha(path, graph))));
        return 0;
    }
    if (doc.kind == DocKind::divisor && target == "path") {
        const DivisorPayload& divisor = doc.divisor();
        const int r = divisor.raw.chips_at_v0();
        write_output(out, dump_document(make_document(rho(divisor.raw, r))));
        return 0;
    }
    throw ValidationError("unsupported conversion to '" + target + "'");
}

int run_rank(const std::string& input, const std::string& out) {
    const Document doc = load_document(input);
    const DivisorPayload& divisor = doc.divisor();
    const int r = rank(divisor.raw);
    std::ostringstream text;
    text << "rank: " << r << "\n";
    if (r >= 1 && degree(divisor.raw) <= 2 * divisor.raw.graph().genus() - 2) {
        text << dump_document(make_document(rho(divisor.raw, r)));
    }
    write_output(out, text.str());
    return 0;
}

int run_tableau_op(const std::string& input, const std::string& out,
                   bool do_evacuate) {
    const Document doc = load_document(input);
    const RectTableau& t = doc.tableau();
    write_output(out, dump_document(make_document(
                          do_evacuate ? evacuate(t) : transpose(t))));
    return 0;
}

int run_reflect(const std::string& input, const std::string& out) {
    const Document doc = load_document(input);
    const UnderlineSeq units = canonical_phi_image(doc.divisor());
    const Reflection reflection = reflect_divisor(units);
    Document result = make_document(reflection.divisor);
    result.meta = nlohmann::json{{"chip_trace", reflection.chip_trace}};
    write_output(out, dump_document(result));
    return 0;
}

int run_dual(const std::string& input, const std::string& out) {
    const Document doc = load_document(input);
    const UnderlineSeq units = canonical_phi_image(doc.divisor());
    write_output(out, dump_document(make_document(dual_reduce(units))));
    return 0;
}

int run_verify(int ceiling, int max_ceiling,
               const std::vector<std::string>& lengths) {
    VerifyOptions options;
    options.ceiling = ceiling;
    options.max_ceiling = max_ceiling;
    if (!lengths.empty()) {
        options.lengths = Loop{Rational::from_string(lengths[0]),
                               Rational::from_string(lengths[1])};
        if (!options.lengths->ell.is_positive() ||
            !options.lengths->m.is_positive()) {
            throw ValidationError("length template must be positive");
        }
    }
    const VerifyReport report = chainloop::run_verify(options);
    std::cout << format_report(report);
    return report.total_failures == 0 ? 0 : 4;
}

int run_enumerate(const std::vector<int>& shape, int ceiling,
                  const std::string& out) {
    const std::vector<RectTableau> all =
        enumerate_tableaux(shape[0], shape[1], ceiling);
    std::ostringstream text;
    for (const RectTableau& t : all) {
        text << to_json(make_document(t)).dump() << "\n";
    }
    write_output(out, text.str());
    return 0;
}

int run_render(const std::string& input, const std::string& style,
               const std::string& out) {
    const Document doc = load_document(input);
    const RenderStyle parsed = style == "chip-config"
                                   ? RenderStyle::chip_config
                                   : RenderStyle::lattice_path;
    write_output(out, render_svg(doc, parsed));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "chainloop: tableaux, lattice paths and reduced divisors on chains "
        "of loops"};
    app.require_subcommand(1);

    std::string input;
    std::string out;
    std::string graph_path;
    std::string target;
    std::string style;
    std::vector<std::string> lengths;
    std::vector<int> shape;
    int ceiling = 10;
    int max_ceiling = 12;
    int enum_ceiling = kDefaultEnumerationCeiling;

    auto* convert = app.add_subcommand("convert", "convert between kinds");
    convert->add_option("input", input, "input document (stdin if absent)");
    convert->add_option("--to", target, "target kind")
        ->required()
        ->check(CLI::IsMember({"tableau", "path", "divisor"}));
    convert->add_option("--graph", graph_path, "graph document to attach");
    convert->add_option("--out", out, "output file (stdout if absent)");

    auto* rank_cmd = app.add_subcommand("rank", "rank of a divisor");
    rank_cmd->add_option("input", input, "divisor document");
    rank_cmd->add_option("--out", out, "output file");

    auto* evacuate_cmd = app.add_subcommand("evacuate", "evacuate a tableau");
    evacuate_cmd->add_option("input", input, "tableau document");
    evacuate_cmd->add_option("--out", out, "output file");

    auto* transpose_cmd =
        app.add_subcommand("transpose", "transpose a tableau");
    transpose_cmd->add_option("input", input, "tableau document");
    transpose_cmd->add_option("--out", out, "output file");

    auto* reflect_cmd =
        app.add_subcommand("reflect", "reflect a divisor across the chain");
    reflect_cmd->add_option("input", input, "divisor document");
    reflect_cmd->add_option("--out", out, "output file");

    auto* dual_cmd =
        app.add_subcommand("dual", "canonical-minus-divisor, v0-reduced");
    dual_cmd->add_option("input", input, "divisor document");
    dual_cmd->add_option("--out", out, "output file");

    auto* verify_cmd =
        app.add_subcommand("verify", "sweep all tableaux and check every identity");
    verify_cmd->add_option("--ceiling", ceiling, "largest genus to sweep");
    verify_cmd->add_option("--max-ceiling", max_ceiling,
                           "upper bound for --ceiling");
    verify_cmd
        ->add_option("--lengths", lengths,
                     "fixed ell and m for every loop (default: 2g and 1)")
        ->expected(2);

    auto* enumerate_cmd =
        app.add_subcommand("enumerate", "list all tableaux of a shape");
    enumerate_cmd->add_option("--shape", shape, "rows and columns")
        ->required()
        ->expected(2);
    enumerate_cmd->add_option("--ceiling", enum_ceiling,
                              "largest allowed cell count");
    enumerate_cmd->add_option("--out", out, "output file");

    auto* render_cmd = app.add_subcommand("render", "render a document as SVG");
    render_cmd->add_option("input", input, "input document");
    render_cmd->add_option("--style", style, "rendering style")
        ->required()
        ->check(CLI::IsMember({"chip-config", "lattice-path"}));
    render_cmd->add_option("--out", out, "output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }

    try {
        if (convert->parsed()) return run_convert(input, target, graph_path, out);
        if (rank_cmd->parsed()) return run_rank(input, out);
        if (evacuate_cmd->parsed()) return run_tableau_op(input, out, true);
        if (transpose_cmd->parsed()) return run_tableau_op(input, out, false);
        if (reflect_cmd->parsed()) return run_reflect(input, out);
        if (dual_cmd->parsed()) return run_dual(input, out);
        if (verify_cmd->parsed()) return run_verify(ceiling, max_ceiling, lengths);
        if (enumerate_cmd->parsed()) return run_enumerate(shape, enum_ceiling, out);
        if (render_cmd->parsed()) return run_render(input, style, out);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
