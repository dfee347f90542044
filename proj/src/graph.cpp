#include "chainloop/graph.hpp"

#include <algorithm>

#include "chainloop/errors.hpp"

namespace chainloop {

ChainOfLoops::ChainOfLoops(std::vector<Loop> loops) : loops_(std::move(loops)) {
    if (loops_.empty()) {
        throw ValidationError("a chain of loops needs at least one loop");
    }
    for (size_t i = 0; i < loops_.size(); ++i) {
        if (!loops_[i].ell.is_positive() || !loops_[i].m.is_positive()) {
            throw ValidationError("loop " + std::to_string(i + 1) +
                                  " has a nonpositive edge length");
        }
    }
}

const Loop& ChainOfLoops::loop(int i) const {
    if (i < 1 || i > genus()) {
        throw InvariantError("loop index " + std::to_string(i) +
                             " out of range 1.." + std::to_string(genus()));
    }
    return loops_[static_cast<size_t>(i) - 1];
}

ChainOfLoops make_chain(
    const std::vector<std::pair<Rational, Rational>>& lengths) {
    std::vector<Loop> loops;
    loops.reserve(lengths.size());
    for (const auto& [ell, m] : lengths) {
        loops.push_back(Loop{ell, m});
    }
    return ChainOfLoops(std::move(loops));
}

bool is_generic(const ChainOfLoops& graph) {
    const long bound = 2L * graph.genus() - 2;
    for (const Loop& loop : graph.loops()) {
        const Rational ratio = loop.ell / loop.m;
        // ratio is in lowest terms with both parts positive.
        const mpz_class sum = ratio.numerator() + ratio.denominator();
        if (cmp(sum, bound) <= 0) return false;
    }
    return true;
}

ChainOfLoops reflect_graph(const ChainOfLoops& graph) {
    std::vector<Loop> loops(graph.loops());
    std::reverse(loops.begin(), loops.end());
    return ChainOfLoops(std::move(loops));
}

std::map<int, int> canonical_divisor(const ChainOfLoops& graph) {
    std::map<int, int> chips;
    for (int v = 1; v <= graph.genus() - 1; ++v) {
        chips[v] = 2;
    }
    return chips;
}

}  // namespace chainloop
