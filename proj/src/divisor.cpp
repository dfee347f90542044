#include "chainloop/divisor.hpp"

#include <algorithm>
#include <string>

#include "chainloop/errors.hpp"

namespace chainloop {

namespace {

void require_loop_count(size_t have, int genus, const char* what) {
    if (have != static_cast<size_t>(genus)) {
        throw ShapeError(std::string(what) + " has " + std::to_string(have) +
                         " loop entries for a genus " + std::to_string(genus) +
                         " graph");
    }
}

// Shape identity (g - d + r)(r + 1) = g that characterizes images of phi.
void require_phi_image_shape(int g, int d, int r, const char* op) {
    const long long rows = static_cast<long long>(g) - d + r;
    if (r < 0 || rows < 1 || rows * (r + 1) != g) {
        throw ShapeError(std::string(op) + ": head " + std::to_string(r) +
                         " and degree " + std::to_string(d) +
                         " do not fit genus " + std::to_string(g));
    }
}

}  // namespace

DivisorSeq::DivisorSeq(ChainOfLoops graph, int chips_at_v0,
                       std::vector<Rational> distances)
    : graph_(std::move(graph)),
      chips_at_v0_(chips_at_v0),
      distances_(std::move(distances)) {
    require_loop_count(distances_.size(), graph_.genus(), "divisor");
    for (int i = 1; i <= graph_.genus(); ++i) {
        Rational& x = distances_[static_cast<size_t>(i) - 1];
        x = x.mod_floor(graph_.circumference(i));
    }
}

const Rational& DivisorSeq::distance(int i) const {
    if (i < 1 || i > graph_.genus()) {
        throw InvariantError("loop index " + std::to_string(i) +
                             " out of range");
    }
    return distances_[static_cast<size_t>(i) - 1];
}

UnderlineSeq::UnderlineSeq(ChainOfLoops graph, int head, std::vector<int> units)
    : graph_(std::move(graph)), head_(head), units_(std::move(units)) {
    require_loop_count(units_.size(), graph_.genus(), "divisor");
    for (size_t i = 0; i < units_.size(); ++i) {
        if (units_[i] < 0) {
            throw ValidationError("unit distance " + std::to_string(units_[i]) +
                                  " on loop " + std::to_string(i + 1) +
                                  " is negative");
        }
    }
}

int UnderlineSeq::unit(int i) const {
    if (i < 1 || i > graph_.genus()) {
        throw InvariantError("loop index " + std::to_string(i) +
                             " out of range");
    }
    return units_[static_cast<size_t>(i) - 1];
}

bool same_tuple(const UnderlineSeq& a, const UnderlineSeq& b) {
    return a.head() == b.head() && a.units() == b.units();
}

int degree(const DivisorSeq& c) {
    int chips = c.chips_at_v0();
    for (const Rational& x : c.distances()) {
        if (!x.is_zero()) ++chips;
    }
    return chips;
}

int degree(const UnderlineSeq& c) {
    int chips = c.head();
    for (int u : c.units()) {
        if (u != 0) ++chips;
    }
    return chips;
}

DivisorSeq underline_to_raw(const UnderlineSeq& u) {
    const ChainOfLoops& graph = u.graph();
    std::vector<Rational> distances;
    distances.reserve(u.units().size());
    for (int i = 1; i <= graph.genus(); ++i) {
        if (u.unit(i) == 0) {
            distances.emplace_back(0);
        } else {
            const Rational x = (Rational(u.unit(i) + 1) * graph.loop(i).m)
                                   .mod_floor(graph.circumference(i));
            if (x.is_zero()) {
                // The chip would sit on the loop's left vertex, which this
                // encoding cannot express.
                throw ValidationError(
                    "unit distance " + std::to_string(u.unit(i)) +
                    " on loop " + std::to_string(i) +
                    " wraps onto the left vertex");
            }
            distances.push_back(x);
        }
    }
    return DivisorSeq(graph, u.head(), std::move(distances));
}

UnderlineSeq raw_to_underline(const DivisorSeq& c) {
    const ChainOfLoops& graph = c.graph();
    std::vector<int> units;
    units.reserve(c.distances().size());
    for (int i = 1; i <= graph.genus(); ++i) {
        const Rational& x = c.distance(i);
        if (x.is_zero()) {
            units.push_back(0);
            continue;
        }
        const Rational steps = x / graph.loop(i).m;
        if (!steps.is_integer()) {
            throw ValidationError("distance " + x.str() + " on loop " +
                                  std::to_string(i) +
                                  " is not a multiple of m");
        }
        const long t = steps.to_long();
        if (t < 1) {
            throw InvariantError("normalized distance below m on loop " +
                                 std::to_string(i));
        }
        units.push_back(static_cast<int>(t - 1));
    }
    return UnderlineSeq(graph, c.chips_at_v0(), std::move(units));
}

LatticePath rho(const DivisorSeq& c, int r) {
    const ChainOfLoops& graph = c.graph();
    const int g = graph.genus();
    if (r < 1) {
        throw ValidationError("rho needs a positive dimension r");
    }
    if (degree(c) > 2 * g - 2) {
        throw ValidationError("rho is defined for degree at most 2g-2");
    }

    std::vector<int> p(static_cast<size_t>(r));
    for (int j = 0; j < r; ++j) {
        p[static_cast<size_t>(j)] = c.chips_at_v0() - j;
    }
    std::vector<std::vector<int>> points{p};

    for (int i = 1; i <= g; ++i) {
        const Rational& x = c.distance(i);
        if (x.is_zero()) {
            for (int& coordinate : p) --coordinate;
        } else {
            const bool base_ok = is_in_weyl(p);
            int chosen = 0;
            for (int j = 1; base_ok && j <= r; ++j) {
                std::vector<int> q = p;
                ++q[static_cast<size_t>(j) - 1];
                if (!is_in_weyl(q)) continue;
                const Rational target =
                    (Rational(p[static_cast<size_t>(j) - 1] + 1) *
                     graph.loop(i).m)
                        .mod_floor(graph.circumference(i));
                if (x == target) {
                    if (chosen != 0) {
                        throw InvariantError(
                            "loop " + std::to_string(i) +
                            ": chip matches two step directions; the graph "
                            "is not generic");
                    }
                    chosen = j;
                }
            }
            if (chosen != 0) ++p[static_cast<size_t>(chosen) - 1];
        }
        points.push_back(p);
    }
    return LatticePath(r, std::move(points));
}

int rank(const DivisorSeq& c) {
    const ChainOfLoops& graph = c.graph();
    if (!is_generic(graph)) {
        throw NonGenericError("rank is only defined on generic graphs");
    }
    const int d = degree(c);
    const int g = graph.genus();
    if (d > 2 * g - 2) return d - g;
    if (c.chips_at_v0() < 0) return -1;
    int best = 0;
    for (int r = 1; r <= c.chips_at_v0(); ++r) {
        if (is_lingering_path(rho(c, r))) best = r;
    }
    return best;
}

int rank(const UnderlineSeq& c) { return rank(underline_to_raw(c)); }

UnderlineSeq alpha(const LatticePath& path, const ChainOfLoops& graph) {
    require_loop_count(static_cast<size_t>(path.step_count()), graph.genus(),
                       "path");
    if (!is_non_lingering(path)) {
        throw ValidationError("alpha needs a non-lingering path");
    }
    std::vector<int> units;
    units.reserve(static_cast<size_t>(path.step_count()));
    const std::vector<Step> steps = classify_steps(path);
    for (int i = 1; i <= path.step_count(); ++i) {
        const Step& step = steps[static_cast<size_t>(i) - 1];
        if (step.kind == StepKind::up) {
            units.push_back(path.point(i - 1)[static_cast<size_t>(step.column) - 1]);
        } else {
            units.push_back(0);
        }
    }
    return UnderlineSeq(graph, path.dimension(), std::move(units));
}

UnderlineSeq phi(const RectTableau& t, const ChainOfLoops& graph) {
    if (!t.is_valid()) {
        throw ValidationError("phi needs a valid standard Young tableau");
    }
    const int g = graph.genus();
    if (t.size() != g) {
        throw ShapeError("tableau with " + std::to_string(t.size()) +
                         " cells does not match genus " + std::to_string(g));
    }
    const int r = t.cols() - 1;
    std::vector<int> units;
    units.reserve(static_cast<size_t>(g));
    for (int i = 1; i <= g; ++i) {
        const CellStats s = cell_stats(t, i);
        const int unit = r + s.row - s.col - s.less_in_last;
        if (unit < 0) {
            throw InvariantError("phi produced a negative distance at entry " +
                                 std::to_string(i));
        }
        units.push_back(unit);
    }
    return UnderlineSeq(graph, r, std::move(units));
}

UnderlineSeq phi_prime_ev(const RectTableau& t, const ChainOfLoops& graph) {
    if (!t.is_valid()) {
        throw ValidationError(
            "phi_prime_ev needs a valid standard Young tableau");
    }
    const int g = graph.genus();
    if (t.size() != g) {
        throw ShapeError("tableau with " + std::to_string(t.size()) +
                         " cells does not match genus " + std::to_string(g));
    }
    const int r = t.cols() - 1;
    std::vector<int> units(static_cast<size_t>(g), 0);
    for (int i = 1; i <= g; ++i) {
        const int j = t.position_of(i).second;
        const int l_first = count_at_most_in_col(t, i, 1);
        const int l_j = count_at_most_in_col(t, i, j);
        const int unit = j - 1 + l_first - l_j;
        if (unit < 0) {
            throw InvariantError(
                "phi_prime_ev produced a negative distance at entry " +
                std::to_string(i));
        }
        units[static_cast<size_t>(g - i)] = unit;
    }
    return UnderlineSeq(reflect_graph(graph), r, std::move(units));
}

RecenterStep recenter_step(int chips, const Rational& x, const Rational& ell,
                           const Rational& m) {
    if (chips < 0) {
        throw ValidationError("recenter_step needs a nonnegative pile");
    }
    if (!ell.is_positive() || !m.is_positive()) {
        throw ValidationError("recenter_step needs positive arc lengths");
    }
    const Rational circ = ell + m;
    if (x.is_negative() || x >= circ) {
        throw ValidationError("chip distance " + x.str() +
                              " outside [0, circumference)");
    }
    if (x.is_zero()) {
        if (chips == 0) return RecenterStep{0, std::nullopt};
        if ((Rational(chips) * m).mod_floor(circ).is_zero()) {
            // Firing would drain the whole pile across the loop.
            throw NonGenericError(
                "pile of " + std::to_string(chips) +
                " chips is a whole number of turns; graph is not generic");
        }
        return RecenterStep{chips - 1,
                            (Rational(chips - 1) * m).mod_floor(circ)};
    }
    if ((Rational(chips + 1) * m).mod_floor(circ) == x) {
        return RecenterStep{chips + 1, std::nullopt};
    }
    return RecenterStep{chips, (Rational(chips) * m - x).mod_floor(circ)};
}

Reflection reflect_divisor(const UnderlineSeq& c) {
    const ChainOfLoops& graph = c.graph();
    const int g = graph.genus();
    const DivisorSeq raw = underline_to_raw(c);
    if (raw.chips_at_v0() < 0) {
        throw ValidationError("reflect_divisor needs a nonnegative pile at v0");
    }

    ReductionState state;
    state.chips_at_basepoint = raw.chips_at_v0();
    state.settled.assign(static_cast<size_t>(g), std::nullopt);
    const int total = degree(raw);

    Reflection out{UnderlineSeq(reflect_graph(graph), 0,
                                std::vector<int>(static_cast<size_t>(g), 0)),
                   {}};
    out.chip_trace.reserve(static_cast<size_t>(g) + 1);
    out.chip_trace.push_back(state.chips_at_basepoint);

    std::vector<int> units(static_cast<size_t>(g), 0);
    for (int i = 1; i <= g; ++i) {
        const Loop& loop = graph.loop(i);
        const RecenterStep step = recenter_step(
            state.chips_at_basepoint, raw.distance(i), loop.ell, loop.m);

        const int before =
            state.chips_at_basepoint + (raw.distance(i).is_zero() ? 0 : 1);
        const int after = step.chips + (step.chip_clockwise ? 1 : 0);
        if (before != after || step.chips < 0) {
            throw InvariantError("recentering loop " + std::to_string(i) +
                                 " did not conserve degree");
        }

        state.basepoint = i;
        state.chips_at_basepoint = step.chips;
        state.settled[static_cast<size_t>(i) - 1] = step.chip_clockwise;
        out.chip_trace.push_back(step.chips);

        if (step.chip_clockwise) {
            // Clockwise from vertex i-1 here reads as counter-clockwise from
            // the same vertex on the reflected graph, in units of m_i.
            const Rational in_units = *step.chip_clockwise / loop.m;
            if (!in_units.is_integer() || in_units.is_zero()) {
                throw InvariantError(
                    "settled chip on loop " + std::to_string(i) +
                    " has no unit encoding; input is not an image of phi");
            }
            units[static_cast<size_t>(g - i)] =
                static_cast<int>(in_units.to_long());
        }
    }

    const int settled_chips =
        static_cast<int>(std::count_if(state.settled.begin(),
                                       state.settled.end(),
                                       [](const auto& s) { return bool(s); }));
    if (state.chips_at_basepoint + settled_chips != total) {
        throw InvariantError("reflection lost chips along the way");
    }
    if (state.chips_at_basepoint != c.head()) {
        throw InvariantError(
            "pile arriving at the far vertex differs from the head; input is "
            "not an image of phi");
    }

    out.divisor =
        UnderlineSeq(reflect_graph(graph), state.chips_at_basepoint,
                     std::move(units));
    return out;
}

UnderlineSeq sigma_formula(const UnderlineSeq& c, const LatticePath& path) {
    const ChainOfLoops& graph = c.graph();
    const int g = graph.genus();
    if (path.step_count() != g || path.dimension() != c.head()) {
        throw ShapeError("path does not have the divisor's genus and head");
    }
    if (!same_tuple(alpha(path, graph), c)) {
        throw ValidationError("path is not the path of this divisor");
    }
    std::vector<int> units(static_cast<size_t>(g), 0);
    if (path.dimension() > 0) {
        for (int i = 1; i <= g; ++i) {
            const int lead = path.point(i - 1)[0];
            units[static_cast<size_t>(g - i)] =
                std::max(lead - c.unit(i) - 1, 0);
        }
    }
    return UnderlineSeq(reflect_graph(graph), c.head(), std::move(units));
}

std::vector<int> z_sequence(const RectTableau& t) {
    if (!t.is_valid()) {
        throw ValidationError("z_sequence needs a valid tableau");
    }
    const int g = t.size();
    std::vector<int> border;  // entries in the last row or last column
    for (int c = 1; c <= t.cols(); ++c) border.push_back(t.at(t.rows(), c));
    for (int r = 1; r < t.rows(); ++r) border.push_back(t.at(r, t.cols()));

    std::vector<int> z(static_cast<size_t>(g));
    for (int i = 0; i < g; ++i) {
        int greater = 0;
        for (int e : border) {
            if (e > i) ++greater;
        }
        z[static_cast<size_t>(i)] = greater + 1;
    }
    return z;
}

UnderlineSeq dual_via_tableau(const RectTableau& t, const ChainOfLoops& graph) {
    const UnderlineSeq x = phi(t, graph);
    const std::vector<int> z = z_sequence(t);
    const int g = graph.genus();
    std::vector<int> y(static_cast<size_t>(g));
    for (int i = 1; i <= g; ++i) {
        const int value = z[static_cast<size_t>(i) - 1] - x.unit(i) - 2;
        if (value < 0) {
            throw InvariantError("dual distance negative at loop " +
                                 std::to_string(i));
        }
        y[static_cast<size_t>(i) - 1] = value;
    }
    return UnderlineSeq(graph, t.rows() - 1, std::move(y));
}

UnderlineSeq dual_reduce(const UnderlineSeq& c) {
    const ChainOfLoops& graph = c.graph();
    const int g = graph.genus();
    const int r = c.head();
    const int d = degree(c);
    require_phi_image_shape(g, d, r, "dual_reduce");

    if (c.unit(g) != 0) {
        throw InvariantError(
            "last loop of an image of phi carries no chip; got unit " +
            std::to_string(c.unit(g)));
    }

    std::vector<int> y(static_cast<size_t>(g), 0);
    int pile = 2;  // chips accumulated on the vertex left of the active loop
    for (int j = g - 1; j >= 1; --j) {
        const int x = c.unit(j);
        if (x == 0) {
            y[static_cast<size_t>(j) - 1] = pile - 1;
            ++pile;
        } else if (x == pile - 1) {
            y[static_cast<size_t>(j) - 1] = 0;
            ++pile;
        } else if (x > 0 && x < pile - 2) {
            y[static_cast<size_t>(j) - 1] = pile - x - 2;
        } else {
            throw InvariantError(
                "loop " + std::to_string(j) + ": distance " +
                std::to_string(x) + " against a pile of " +
                std::to_string(pile) +
                " is impossible for an image of phi");
        }
    }
    return UnderlineSeq(graph, g - d + r - 1, std::move(y));
}

}  // namespace chainloop
