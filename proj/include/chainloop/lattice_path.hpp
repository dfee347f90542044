#pragma once

#include <span>
#include <vector>

#include "chainloop/tableau.hpp"

namespace chainloop {

enum class StepKind { up, down_all, linger };

// One step of a lattice path: up(j) adds the j-th standard basis vector,
// down_all subtracts 1 from every coordinate, linger stays put.
struct Step {
    StepKind kind;
    int column = 0;  // 1-based direction index, meaningful for up only

    bool operator==(const Step&) const = default;
};

// A sequence of g+1 points in Z^r whose consecutive differences are each a
// standard basis vector, the all-(-1) vector, or zero. r = 0 paths are
// sequences of empty points; every step of such a path counts as a linger.
class LatticePath {
public:
    LatticePath(int dimension, std::vector<std::vector<int>> points);

    int dimension() const { return dimension_; }
    int step_count() const { return static_cast<int>(points_.size()) - 1; }
    const std::vector<int>& point(int i) const;  // 0-based, i in 0..g
    const std::vector<std::vector<int>>& points() const { return points_; }

    bool operator==(const LatticePath&) const = default;

private:
    int dimension_;
    std::vector<std::vector<int>> points_;
};

std::vector<Step> classify_steps(const LatticePath& path);

// Strictly decreasing coordinates, last one positive; vacuous for r = 0.
bool is_in_weyl(std::span<const int> point);

// Every point in the Weyl chamber and p_0 a staircase (d0, d0-1, ...) for
// some positive d0.
bool is_lingering_path(const LatticePath& path);

// Lingering, no zero steps, as many all-(-1) steps as up(1) steps, and
// p_0 = (r, r-1, ..., 1). The r = 0 path qualifies by convention: it encodes
// the zero divisor and corresponds to the one-column tableau.
bool is_non_lingering(const LatticePath& path);

// Entry i goes to the topmost free cell of column j for an up(j) step, of
// column r+1 for a down step. Inverse of tableau_to_path.
RectTableau path_to_tableau(const LatticePath& path);

// Closed form: p_i(j) = (r+1-j) + l_j - l_{r+1} with l_s the number of cells
// in column s holding entries at most i.
LatticePath tableau_to_path(const RectTableau& t);

}  // namespace chainloop
