#pragma once

#include <optional>
#include <vector>

#include "chainloop/graph.hpp"
#include "chainloop/lattice_path.hpp"
#include "chainloop/rational.hpp"
#include "chainloop/tableau.hpp"

namespace chainloop {

// A v0-reduced divisor in sequence form (d0; x_1..x_g): d0 chips on vertex 0
// (possibly negative) and, per loop, the counter-clockwise distance from
// vertex i-1 of the single chip on loop i minus its left vertex, normalized
// into [0, circumference). x_i = 0 means no chip there.
class DivisorSeq {
public:
    DivisorSeq(ChainOfLoops graph, int chips_at_v0,
               std::vector<Rational> distances);

    const ChainOfLoops& graph() const { return graph_; }
    int chips_at_v0() const { return chips_at_v0_; }
    const Rational& distance(int i) const;  // 1-based
    const std::vector<Rational>& distances() const { return distances_; }

    bool operator==(const DivisorSeq&) const = default;

private:
    ChainOfLoops graph_;
    int chips_at_v0_;
    std::vector<Rational> distances_;
};

// The same data in loop units: unit(i) * m_i is the counter-clockwise
// distance of the chip from vertex i (not i-1), unit(i) = 0 meaning no chip.
// Values are deliberately not reduced modulo the circumference; images of
// the tableau map keep representatives that may wrap around the loop.
class UnderlineSeq {
public:
    UnderlineSeq(ChainOfLoops graph, int head, std::vector<int> units);

    const ChainOfLoops& graph() const { return graph_; }
    int head() const { return head_; }
    int unit(int i) const;  // 1-based
    const std::vector<int>& units() const { return units_; }

    bool operator==(const UnderlineSeq&) const = default;

private:
    ChainOfLoops graph_;
    int head_;
    std::vector<int> units_;
};

// Equality of (head; units) ignoring which graph the sequences live on.
bool same_tuple(const UnderlineSeq& a, const UnderlineSeq& b);

int degree(const DivisorSeq& c);
int degree(const UnderlineSeq& c);

DivisorSeq underline_to_raw(const UnderlineSeq& u);

// Inverse of underline_to_raw on distances that are multiples of m_i;
// returns the least nonnegative representative per loop.
UnderlineSeq raw_to_underline(const DivisorSeq& c);

// The rank algorithm's path: start at the staircase (d0, ..., d0-r+1) and,
// per loop, step down on empty loops, up in direction j when the chip sits
// exactly one m_i-unit past coordinate j (both endpoints staying in the Weyl
// chamber), and linger otherwise. The returned path may exit the chamber;
// callers decide what that means. Ambiguous up-steps (possible only on
// non-generic graphs) fail loudly.
LatticePath rho(const DivisorSeq& c, int r);

// Largest r such that the divisor minus any effective divisor of degree r is
// still equivalent to effective; -1 if the divisor is not. Requires a
// generic graph; degree above 2g-2 short-circuits to degree - g.
int rank(const DivisorSeq& c);
int rank(const UnderlineSeq& c);

// Reads a divisor off a non-lingering path: unit i is 0 for a down step and
// p_{i-1}(j) for an up(j) step. Left inverse of rho.
UnderlineSeq alpha(const LatticePath& path, const ChainOfLoops& graph);

// Tableau to divisor, directly: unit i is r + row(i) - col(i) - L_last(i).
UnderlineSeq phi(const RectTableau& t, const ChainOfLoops& graph);

// Divisor of the evacuated tableau on the reflected graph, by the shortcut
// formula unit'(g+1-i) = col(i) - 1 + l_1 - l_{col(i)}.
UnderlineSeq phi_prime_ev(const RectTableau& t, const ChainOfLoops& graph);

// Result of recentering one loop: chips carried to the right vertex plus the
// position of the chip left behind, as a clockwise distance from the loop's
// left vertex normalized into [0, circumference).
struct RecenterStep {
    int chips;
    std::optional<Rational> chip_clockwise;

    bool operator==(const RecenterStep&) const = default;
};

// One step of the chip-shifting walk: move a pile of `chips` at the left
// vertex of a loop (chip on the loop at counter-clockwise distance x, 0 for
// none) to its right vertex.
RecenterStep recenter_step(int chips, const Rational& x, const Rational& ell,
                           const Rational& m);

// Snapshot of the walk used by reflect_divisor; total degree is conserved
// step by step.
struct ReductionState {
    int basepoint = 0;        // chips currently sit on this vertex
    int chips_at_basepoint = 0;
    std::vector<std::optional<Rational>> settled;  // per finished loop
};

struct Reflection {
    UnderlineSeq divisor;         // on the reflected graph
    std::vector<int> chip_trace;  // chips at each basepoint v_0..v_g
};

// Recenter across all loops left to right, then reread the settled chip
// positions on the reflected graph. Input must be in the image of phi on a
// generic graph; anything that breaks the reduced-state encoding fails
// loudly.
Reflection reflect_divisor(const UnderlineSeq& c);

// Closed form for the reflection: unit'(g+1-i) = max(p_{i-1}(1)-unit(i)-1, 0)
// where the path must be rho of the divisor. Cross-checks reflect_divisor.
UnderlineSeq sigma_formula(const UnderlineSeq& c, const LatticePath& path);

// z_i = 1 + number of entries greater than i in the last row or last column
// (the corner counted once), for i = 0..g-1.
std::vector<int> z_sequence(const RectTableau& t);

// Divisor of the transposed tableau via y_i = z_{i-1} - unit(i) - 2.
UnderlineSeq dual_via_tableau(const RectTableau& t, const ChainOfLoops& graph);

// v0-reduction of K - c computed by the right-to-left recurrence on the
// vertex piles: empty loop or chip at distance Z-1 grows the pile by one,
// otherwise the pile passes through and leaves a chip at Z - unit - 2.
// Inputs outside the image of phi fail loudly.
UnderlineSeq dual_reduce(const UnderlineSeq& c);

}  // namespace chainloop
