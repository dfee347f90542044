#include "chainloop/verify.hpp"

#include <sstream>

#include "chainloop/divisor.hpp"
#include "chainloop/errors.hpp"
#include "chainloop/lattice_path.hpp"
#include "chainloop/tableau.hpp"

namespace chainloop {

namespace {

constexpr size_t kMaxMessages = 20;

void record_failure(VerifyReport& report, const ShapeReport& shape,
                    const RectTableau& t, const std::string& what) {
    if (report.messages.size() >= kMaxMessages) return;
    std::ostringstream out;
    out << "shape " << shape.rows << "x" << shape.cols << " tableau [";
    for (size_t i = 0; i < t.entries().size(); ++i) {
        if (i > 0) out << ' ';
        out << t.entries()[i];
    }
    out << "]: " << what;
    report.messages.push_back(out.str());
}

}  // namespace

ChainOfLoops default_graph(int genus) {
    std::vector<Loop> loops(static_cast<size_t>(genus),
                            Loop{Rational(2L * genus), Rational(1)});
    return ChainOfLoops(std::move(loops));
}

ChainOfLoops template_graph(int genus, const std::optional<Loop>& lengths) {
    if (!lengths) return default_graph(genus);
    std::vector<Loop> loops(static_cast<size_t>(genus), *lengths);
    return ChainOfLoops(std::move(loops));
}

VerifyReport run_verify(const VerifyOptions& options) {
    if (options.ceiling < 1 || options.ceiling > options.max_ceiling) {
        throw ValidationError("verification ceiling must be in 1.." +
                              std::to_string(options.max_ceiling));
    }
    for (int g = 1; g <= options.ceiling; ++g) {
        if (!is_generic(template_graph(g, options.lengths))) {
            throw NonGenericError("length template is not generic at genus " +
                                  std::to_string(g));
        }
    }

    VerifyReport report;
    for (int g = 1; g <= options.ceiling; ++g) {
        const ChainOfLoops graph = template_graph(g, options.lengths);
        const ChainOfLoops mirrored = reflect_graph(graph);
        for (int rows = 1; rows <= g; ++rows) {
            if (g % rows != 0) continue;
            const int cols = g / rows;
            ShapeReport shape;
            shape.rows = rows;
            shape.cols = cols;

            const std::vector<RectTableau> all =
                enumerate_tableaux(rows, cols, options.max_ceiling);
            shape.tableaux = static_cast<long>(all.size());
            if (mpz_class(shape.tableaux) != hook_count(rows, cols)) {
                ++shape.failures;
                report.messages.push_back(
                    "shape " + std::to_string(rows) + "x" +
                    std::to_string(cols) +
                    ": enumeration disagrees with the hook count");
            }
            ++shape.checks;

            for (const RectTableau& t : all) {
                auto check = [&](bool ok, const char* what) {
                    ++shape.checks;
                    if (!ok) {
                        ++shape.failures;
                        record_failure(report, shape, t, what);
                    }
                };
                try {
                    const int r = cols - 1;
                    const LatticePath path = tableau_to_path(t);
                    check(is_non_lingering(path), "path is not non-lingering");
                    check(path_to_tableau(path) == t,
                          "tableau -> path -> tableau is not the identity");

                    const UnderlineSeq from_path = alpha(path, graph);
                    const UnderlineSeq from_tableau = phi(t, graph);
                    check(from_path == from_tableau,
                          "alpha(beta(T)) differs from the direct formula");
                    if (r >= 1) {
                        check(rho(underline_to_raw(from_path), r) == path,
                              "rho does not invert alpha");
                    }

                    const Reflection mirror = reflect_divisor(from_tableau);
                    check(mirror.divisor == phi_prime_ev(t, graph),
                          "reflection differs from the evacuation shortcut");
                    check(mirror.divisor == phi(evacuate(t), mirrored),
                          "reflection differs from phi of the evacuation");
                    check(sigma_formula(from_tableau, path) == mirror.divisor,
                          "closed-form reflection differs from simulation");

                    bool trace_ok = true;
                    for (int i = 0; i <= g; ++i) {
                        const int expected =
                            r >= 1 ? path.point(i)[0] : 0;
                        if (mirror.chip_trace[static_cast<size_t>(i)] !=
                            expected) {
                            trace_ok = false;
                        }
                    }
                    check(trace_ok,
                          "chip trace differs from the path's top coordinate");

                    const UnderlineSeq dual = dual_reduce(from_tableau);
                    check(dual == phi(transpose(t), graph),
                          "dual reduction differs from phi of the transpose");
                    check(dual == dual_via_tableau(t, graph),
                          "dual reduction differs from the z-sequence form");

                    const int d = degree(from_tableau);
                    check(degree(dual) == 2 * g - 2 - d,
                          "dual degree is not 2g-2-d");
                    const int rank_c = rank(from_tableau);
                    const int rank_dual = rank(dual);
                    check(rank_c == cols - 1, "rank differs from n-1");
                    check(rank_dual == rows - 1, "dual rank differs from m-1");
                    check(rank_c - rank_dual == d + 1 - g,
                          "rank difference differs from deg+1-g");
                } catch (const Error& e) {
                    ++shape.checks;
                    ++shape.failures;
                    record_failure(report, shape, t, e.what());
                }
            }

            report.total_tableaux += shape.tableaux;
            report.total_checks += shape.checks;
            report.total_failures += shape.failures;
            report.shapes.push_back(shape);
        }
    }
    return report;
}

std::string format_report(const VerifyReport& report) {
    std::ostringstream out;
    for (const ShapeReport& shape : report.shapes) {
        out << "shape " << shape.rows << "x" << shape.cols << ": tableaux "
            << shape.tableaux << ", checks " << shape.checks << ", failures "
            << shape.failures << "\n";
    }
    out << "total: tableaux " << report.total_tableaux << ", checks "
        << report.total_checks << ", failures " << report.total_failures
        << "\n";
    for (const std::string& message : report.messages) {
        out << "failure: " << message << "\n";
    }
    out << (report.total_failures == 0 ? "PASS" : "FAIL") << "\n";
    return out.str();
}

}  // namespace chainloop
