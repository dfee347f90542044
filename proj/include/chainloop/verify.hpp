#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chainloop/graph.hpp"

namespace chainloop {

struct VerifyOptions {
    int ceiling = 10;      // sweep every rectangle with mn = g <= ceiling
    int max_ceiling = 12;  // refuse larger sweeps
    // Fixed (ell, m) used for every loop of every graph in the sweep;
    // when absent, genus g uses ell = 2g, m = 1.
    std::optional<Loop> lengths;
};

struct ShapeReport {
    int rows = 0;
    int cols = 0;
    long tableaux = 0;
    long checks = 0;
    long failures = 0;
};

struct VerifyReport {
    std::vector<ShapeReport> shapes;
    long total_tableaux = 0;
    long total_checks = 0;
    long total_failures = 0;
    std::vector<std::string> messages;  // first few failure descriptions
};

// ell = 2g, m = 1; generic for every g since 2g + 1 > 2g - 2.
ChainOfLoops default_graph(int genus);

ChainOfLoops template_graph(int genus, const std::optional<Loop>& lengths);

// Runs every identity of the toolkit over every tableau of every rectangular
// shape with mn <= ceiling: round trips, evacuation vs reflection,
// conjugation vs dual reduction, closed forms vs simulation, ranks and the
// degree/rank balance. Throws NonGenericError if the requested template is
// not generic at some genus in range.
VerifyReport run_verify(const VerifyOptions& options);

std::string format_report(const VerifyReport& report);

}  // namespace chainloop
