// Acceptance suite: exercises the end-to-end contracts at full scale and
// prints one PASS/FAIL line per criterion. Exits nonzero if any fail.
//
// argv[1] (or the CHAINLOOP_CLI environment variable) must point at the
// command-line binary for the exit-code checks.

#include <sys/wait.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "chainloop/divisor.hpp"
#include "chainloop/errors.hpp"
#include "chainloop/graph.hpp"
#include "chainloop/lattice_path.hpp"
#include "chainloop/tableau.hpp"
#include "chainloop/verify.hpp"

using namespace chainloop;

namespace {

int failures = 0;

void report(int id, const std::string& label, bool ok,
            const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << label;
    if (!ok && !detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n";
    if (!ok) ++failures;
}

double seconds_since(
    const std::chrono::steady_clock::time_point& start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
}

std::vector<std::pair<int, int>> shapes_of_genus(int genus) {
    std::vector<std::pair<int, int>> shapes;
    for (int m = 1; m <= genus; ++m) {
        if (genus % m == 0) shapes.emplace_back(m, genus / m);
    }
    return shapes;
}

// ---- criterion 1: the worked end-to-end example, exact and fast ----------

void criterion_1() {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
        const ChainOfLoops gamma6 = make_chain(
            std::vector<std::pair<Rational, Rational>>(6, {10, 1}));
        const RectTableau t({{1, 3, 4}, {2, 5, 6}});

        const UnderlineSeq c = phi(t, gamma6);
        ok &= c.head() == 2 &&
              c.units() == std::vector<int>{2, 3, 1, 0, 1, 0};

        const DivisorSeq raw = underline_to_raw(c);
        std::vector<Rational> expected_raw{3, 4, 2, 0, 2, 0};
        ok &= raw.distances() == expected_raw;

        const LatticePath path = rho(raw, 2);
        std::vector<int> top;
        for (int i = 0; i <= 6; ++i) top.push_back(path.point(i)[0]);
        ok &= top == std::vector<int>{2, 3, 4, 4, 3, 3, 2};

        const Reflection mirror = reflect_divisor(c);
        ok &= mirror.divisor.head() == 2 &&
              mirror.divisor.units() == std::vector<int>{2, 1, 3, 2, 0, 0};

        const UnderlineSeq dual = dual_reduce(c);
        ok &= dual.head() == 1 &&
              dual.units() == std::vector<int>{1, 0, 1, 2, 0, 0};

        if (!ok) detail = "a value differs from the worked example";
        const double elapsed = seconds_since(start);
        if (elapsed >= 1.0) {
            ok = false;
            detail = "took " + std::to_string(elapsed) + "s, limit 1s";
        }
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    report(1, "running example: phi, rho trace, reflection, dual", ok, detail);
}

// ---- criteria 2,3,4,5,8: full sweep over mn = g <= 10 ---------------------

struct SweepCounters {
    long reflection_failures = 0;   // criterion 2
    long dual_failures = 0;         // criterion 3
    long round_trip_failures = 0;   // criterion 4
    long rank_failures = 0;         // criterion 5
    long oracle_failures = 0;       // criterion 8
    long tableaux_2x5 = 0;
    long tableaux_5x2 = 0;
    bool counts_match_hooks = true;
    double elapsed = 0;
    std::string error;
};

SweepCounters run_sweep() {
    SweepCounters counters;
    const auto start = std::chrono::steady_clock::now();
    try {
        for (int g = 1; g <= 10; ++g) {
            const ChainOfLoops graph = default_graph(g);
            const ChainOfLoops mirrored = reflect_graph(graph);
            for (const auto& [m, n] : shapes_of_genus(g)) {
                const std::vector<RectTableau> all = enumerate_tableaux(m, n);
                if (mpz_class(static_cast<long>(all.size())) !=
                    hook_count(m, n)) {
                    counters.counts_match_hooks = false;
                }
                if (m == 2 && n == 5) {
                    counters.tableaux_2x5 = static_cast<long>(all.size());
                }
                if (m == 5 && n == 2) {
                    counters.tableaux_5x2 = static_cast<long>(all.size());
                }

                for (const RectTableau& t : all) {
                    const int r = n - 1;
                    const LatticePath path = tableau_to_path(t);
                    const UnderlineSeq c = phi(t, graph);

                    // criterion 2: evacuation corresponds to reflection.
                    const Reflection mirror = reflect_divisor(c);
                    if (!(mirror.divisor == phi_prime_ev(t, graph)) ||
                        !(mirror.divisor == phi(evacuate(t), mirrored))) {
                        ++counters.reflection_failures;
                    }

                    // criterion 3: conjugation corresponds to the dual.
                    const UnderlineSeq dual = dual_reduce(c);
                    if (!(dual == phi(transpose(t), graph)) ||
                        !(dual == dual_via_tableau(t, graph))) {
                        ++counters.dual_failures;
                    }

                    // criterion 4: both round trips are identities.
                    bool round = path_to_tableau(path) == t &&
                                 same_tuple(alpha(path, graph), c);
                    if (r >= 1) {
                        round = round &&
                                rho(underline_to_raw(alpha(path, graph)), r) ==
                                    path;
                    }
                    if (!round) ++counters.round_trip_failures;

                    // criterion 5: ranks and the degree balance.
                    const int d = degree(c);
                    const int rank_c = rank(c);
                    const int rank_dual = rank(dual);
                    if (rank_c != n - 1 || rank_dual != m - 1 ||
                        rank_c - rank_dual != d + 1 - g) {
                        ++counters.rank_failures;
                    }

                    // criterion 8: closed form vs simulation, and the trace.
                    bool oracle = sigma_formula(c, path) == mirror.divisor;
                    for (int i = 0; i <= g; ++i) {
                        const int lead = r >= 1 ? path.point(i)[0] : 0;
                        oracle = oracle &&
                                 mirror.chip_trace[static_cast<size_t>(i)] ==
                                     lead;
                    }
                    if (!oracle) ++counters.oracle_failures;
                }
            }
        }
    } catch (const std::exception& e) {
        counters.error = e.what();
    }
    counters.elapsed = seconds_since(start);
    return counters;
}

// ---- criterion 6: enumeration vs the hook length oracle -------------------

void criterion_6() {
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    try {
        for (int m = 1; m <= 12 && ok; ++m) {
            for (int n = 1; m * n <= 12 && ok; ++n) {
                const std::vector<RectTableau> all = enumerate_tableaux(m, n);
                if (mpz_class(static_cast<long>(all.size())) !=
                    hook_count(m, n)) {
                    ok = false;
                    detail = "count mismatch at " + std::to_string(m) + "x" +
                             std::to_string(n);
                }
            }
        }
        if (ok && enumerate_tableaux(2, 3).size() != 5) {
            ok = false;
            detail = "2x3 should have 5 tableaux";
        }
        if (ok && enumerate_tableaux(3, 4).size() != 462) {
            ok = false;
            detail = "3x4 should have 462 tableaux";
        }
        const double elapsed = seconds_since(start);
        if (elapsed >= 60.0) {
            ok = false;
            detail = "took " + std::to_string(elapsed) + "s, limit 60s";
        }
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    report(6, "enumeration counts equal the hook length formula (mn <= 12)",
           ok, detail);
}

// ---- criterion 7: CLI genericity gate --------------------------------------

int run_cli(const std::string& cli, const std::string& args,
            const std::filesystem::path& stdout_file) {
    const std::string command =
        "'" + cli + "' " + args + " > '" + stdout_file.string() + "' 2>/dev/null";
    const int status = std::system(command.c_str());
    if (status == -1) return -1;
    if (WIFEXITED(status)) return WEXITSTATUS(status);
    return -1;
}

void criterion_7(const std::string& cli) {
    bool ok = true;
    std::string detail;
    if (cli.empty()) {
        report(7, "CLI accepts the generic graph and rejects the non-generic",
               false, "no CLI binary path given (argv[1] or CHAINLOOP_CLI)");
        return;
    }
    try {
        const auto dir = std::filesystem::temp_directory_path();
        const auto generic_doc = dir / "chainloop_acceptance_generic.json";
        const auto skewed_doc = dir / "chainloop_acceptance_nongeneric.json";
        const auto out = dir / "chainloop_acceptance_out.txt";

        std::ofstream(generic_doc) << R"({"kind":"divisor","head":2,
            "graph":{"kind":"graph","loops":[["10","1"],["10","1"],["10","1"],
                                             ["10","1"],["10","1"],["10","1"]]},
            "underline":[2,3,1,0,1,0]})";
        std::ofstream(skewed_doc) << R"({"kind":"divisor","head":2,
            "graph":{"kind":"graph","loops":[["10","1"],["10","1"],["3","2"],
                                             ["10","1"],["10","1"],["10","1"]]},
            "underline":[2,3,1,0,1,0]})";

        const int accepted =
            run_cli(cli, "rank '" + generic_doc.string() + "'", out);
        if (accepted != 0) {
            ok = false;
            detail = "generic graph exited " + std::to_string(accepted);
        } else {
            std::ifstream result(out);
            std::string first_line;
            std::getline(result, first_line);
            if (first_line != "rank: 2") {
                ok = false;
                detail = "expected 'rank: 2', got '" + first_line + "'";
            }
        }

        const int rejected =
            run_cli(cli, "rank '" + skewed_doc.string() + "'", out);
        if (ok && rejected != 3) {
            ok = false;
            detail = "non-generic graph exited " + std::to_string(rejected) +
                     ", wanted 3";
        }

        std::filesystem::remove(generic_doc);
        std::filesystem::remove(skewed_doc);
        std::filesystem::remove(out);
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    report(7, "CLI accepts the generic graph and rejects the non-generic", ok,
           detail);
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli;
    if (argc > 1) cli = argv[1];
    if (cli.empty()) {
        if (const char* env = std::getenv("CHAINLOOP_CLI")) cli = env;
    }

    criterion_1();

    const SweepCounters sweep = run_sweep();
    const bool sweep_ran = sweep.error.empty();
    const std::string sweep_error =
        sweep_ran ? "" : "sweep aborted: " + sweep.error;

    bool c2 = sweep_ran && sweep.reflection_failures == 0 &&
              sweep.counts_match_hooks && sweep.tableaux_2x5 == 42 &&
              sweep.tableaux_5x2 == 42 && sweep.elapsed < 30.0;
    report(2, "evacuation equals reflection over every shape with g <= 10", c2,
           sweep_ran ? std::to_string(sweep.reflection_failures) +
                           " failures, 2x5 count " +
                           std::to_string(sweep.tableaux_2x5) + ", " +
                           std::to_string(sweep.elapsed) + "s"
                     : sweep_error);

    report(3, "conjugation equals the canonical dual over the same sweep",
           sweep_ran && sweep.dual_failures == 0,
           sweep_ran ? std::to_string(sweep.dual_failures) + " failures"
                     : sweep_error);

    report(4, "tableau/path and divisor/path round trips are identities",
           sweep_ran && sweep.round_trip_failures == 0,
           sweep_ran ? std::to_string(sweep.round_trip_failures) + " failures"
                     : sweep_error);

    report(5, "ranks are n-1 and m-1 and obey the degree balance",
           sweep_ran && sweep.rank_failures == 0,
           sweep_ran ? std::to_string(sweep.rank_failures) + " failures"
                     : sweep_error);

    criterion_6();
    criterion_7(cli);

    report(8, "closed-form reflection and pile trace match the simulation",
           sweep_ran && sweep.oracle_failures == 0,
           sweep_ran ? std::to_string(sweep.oracle_failures) + " failures"
                     : sweep_error);

    if (failures != 0) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
