#include "chainloop/lattice_path.hpp"

#include <numeric>
#include <string>

#include "chainloop/errors.hpp"

namespace chainloop {

namespace {

// Classifies the difference b - a, or throws if it is none of the three
// allowed step vectors.
Step classify_difference(const std::vector<int>& a, const std::vector<int>& b,
                         int index) {
    const int r = static_cast<int>(a.size());
    int ups = 0;
    int downs = 0;
    int up_column = 0;
    for (int j = 0; j < r; ++j) {
        const int d = b[static_cast<size_t>(j)] - a[static_cast<size_t>(j)];
        if (d == 1) {
            ++ups;
            up_column = j + 1;
        } else if (d == -1) {
            ++downs;
        } else if (d != 0) {
            throw ValidationError("step " + std::to_string(index) +
                                  " is not a lattice path step");
        }
    }
    if (ups == 1 && downs == 0) return Step{StepKind::up, up_column};
    if (ups == 0 && downs == r && r > 0) return Step{StepKind::down_all, 0};
    if (ups == 0 && downs == 0) return Step{StepKind::linger, 0};
    throw ValidationError("step " + std::to_string(index) +
                          " is not a lattice path step");
}

}  // namespace

LatticePath::LatticePath(int dimension, std::vector<std::vector<int>> points)
    : dimension_(dimension), points_(std::move(points)) {
    if (dimension_ < 0) {
        throw ValidationError("path dimension must be nonnegative");
    }
    if (points_.empty()) {
        throw ValidationError("a lattice path needs at least one point");
    }
    for (const auto& p : points_) {
        if (static_cast<int>(p.size()) != dimension_) {
            throw ValidationError("path point has wrong dimension");
        }
    }
    for (size_t i = 1; i < points_.size(); ++i) {
        classify_difference(points_[i - 1], points_[i], static_cast<int>(i));
    }
}

const std::vector<int>& LatticePath::point(int i) const {
    if (i < 0 || i >= static_cast<int>(points_.size())) {
        throw InvariantError("path point index " + std::to_string(i) +
                             " out of range");
    }
    return points_[static_cast<size_t>(i)];
}

std::vector<Step> classify_steps(const LatticePath& path) {
    std::vector<Step> steps;
    steps.reserve(static_cast<size_t>(path.step_count()));
    for (int i = 1; i <= path.step_count(); ++i) {
        steps.push_back(
            classify_difference(path.point(i - 1), path.point(i), i));
    }
    return steps;
}

bool is_in_weyl(std::span<const int> point) {
    if (point.empty()) return true;
    for (size_t j = 0; j + 1 < point.size(); ++j) {
        if (point[j] <= point[j + 1]) return false;
    }
    return point.back() > 0;
}

bool is_lingering_path(const LatticePath& path) {
    for (const auto& p : path.points()) {
        if (!is_in_weyl(p)) return false;
    }
    if (path.dimension() == 0) return true;
    const std::vector<int>& start = path.point(0);
    const int d0 = start[0];
    if (d0 < 1) return false;
    for (int j = 0; j < path.dimension(); ++j) {
        if (start[static_cast<size_t>(j)] != d0 - j) return false;
    }
    return true;
}

bool is_non_lingering(const LatticePath& path) {
    if (!is_lingering_path(path)) return false;
    if (path.dimension() == 0) return true;
    if (path.point(0)[0] != path.dimension()) return false;
    int up_first = 0;
    int down = 0;
    for (const Step& step : classify_steps(path)) {
        switch (step.kind) {
            case StepKind::linger:
                return false;
            case StepKind::down_all:
                ++down;
                break;
            case StepKind::up:
                if (step.column == 1) ++up_first;
                break;
        }
    }
    return up_first == down;
}

RectTableau path_to_tableau(const LatticePath& path) {
    const int g = path.step_count();
    if (!is_non_lingering(path)) {
        throw ValidationError("path_to_tableau needs a non-lingering path");
    }
    if (path.dimension() == 0) {
        if (g < 1) {
            throw ShapeError("empty path has no tableau counterpart");
        }
        std::vector<int> column(static_cast<size_t>(g));
        std::iota(column.begin(), column.end(), 1);
        return RectTableau(g, 1, std::move(column));
    }

    const int cols = path.dimension() + 1;
    const std::vector<Step> steps = classify_steps(path);
    int down = 0;
    for (const Step& step : steps) {
        if (step.kind == StepKind::down_all) ++down;
    }
    const int rows = down;
    if (rows < 1 || rows * cols != g) {
        throw ShapeError("path of " + std::to_string(g) +
                         " steps does not fill a rectangle with " +
                         std::to_string(cols) + " columns");
    }

    std::vector<int> grid(static_cast<size_t>(g), 0);
    std::vector<int> height(static_cast<size_t>(cols), 0);
    for (int i = 1; i <= g; ++i) {
        const Step& step = steps[static_cast<size_t>(i - 1)];
        const int c = step.kind == StepKind::down_all ? cols : step.column;
        const int r = height[static_cast<size_t>(c - 1)]++;
        if (r >= rows) {
            throw InvariantError("column " + std::to_string(c) +
                                 " overflows while rebuilding the tableau");
        }
        grid[static_cast<size_t>(r) * cols + (c - 1)] = i;
    }
    RectTableau result(rows, cols, std::move(grid));
    if (!result.is_valid()) {
        throw InvariantError("path_to_tableau produced an invalid tableau");
    }
    return result;
}

LatticePath tableau_to_path(const RectTableau& t) {
    if (!t.is_valid()) {
        throw ValidationError("tableau_to_path needs a valid tableau");
    }
    const int r = t.cols() - 1;
    const int g = t.size();

    std::vector<std::vector<int>> points;
    points.reserve(static_cast<size_t>(g) + 1);
    std::vector<int> below(static_cast<size_t>(t.cols()), 0);  // l_s so far
    for (int i = 0; i <= g; ++i) {
        if (i > 0) {
            ++below[static_cast<size_t>(t.position_of(i).second) - 1];
        }
        std::vector<int> p(static_cast<size_t>(r));
        for (int j = 1; j <= r; ++j) {
            p[static_cast<size_t>(j) - 1] = (r + 1 - j) +
                                            below[static_cast<size_t>(j) - 1] -
                                            below[static_cast<size_t>(r)];
        }
        points.push_back(std::move(p));
    }
    return LatticePath(r, std::move(points));
}

}  // namespace chainloop
