#pragma once

#include <map>
#include <utility>
#include <vector>

#include "chainloop/rational.hpp"

namespace chainloop {

// One circle of the chain. Travelling counter-clockwise from the loop's left
// vertex, the short way to the right vertex has length m; continuing around,
// the remaining arc back has length ell. Circumference is ell + m.
struct Loop {
    Rational ell;
    Rational m;

    Rational circumference() const { return ell + m; }
    bool operator==(const Loop&) const = default;
};

// A chain of g circles concatenated at vertices 0..g; loop i (1-based) joins
// vertex i-1 to vertex i with arc lengths (ell_i, m_i). Immutable after
// construction. Edge lengths are exact rationals; irrational lengths are out
// of scope for this library.
class ChainOfLoops {
public:
    explicit ChainOfLoops(std::vector<Loop> loops);

    int genus() const { return static_cast<int>(loops_.size()); }
    const Loop& loop(int i) const;  // 1-based
    Rational circumference(int i) const { return loop(i).circumference(); }
    const std::vector<Loop>& loops() const { return loops_; }

    bool operator==(const ChainOfLoops&) const = default;

private:
    std::vector<Loop> loops_;
};

ChainOfLoops make_chain(const std::vector<std::pair<Rational, Rational>>& lengths);

// True iff no ell_i/m_i, written in lowest terms p/q, has p + q <= 2g - 2.
// This is what guarantees that recentering never drains a vertex completely.
bool is_generic(const ChainOfLoops& graph);

// Same metric graph read right to left: loop i of the result carries the
// lengths of loop g+1-i. Involution.
ChainOfLoops reflect_graph(const ChainOfLoops& graph);

// Two chips on each interior vertex 1..g-1 (map omits zero entries).
// Total degree 2g - 2.
std::map<int, int> canonical_divisor(const ChainOfLoops& graph);

}  // namespace chainloop
