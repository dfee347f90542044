#include "chainloop/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "chainloop/errors.hpp"

namespace chainloop {

namespace {

// Fixed layout constants (documented in the README; presentation only).
constexpr double kLoopRadius = 40.0;
constexpr double kMargin = 32.0;
constexpr double kChipRadius = 4.0;
constexpr double kGridScale = 48.0;

std::string fmt(double v) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.2f", v);
    return buffer;
}

std::string render_chip_config(const DivisorPayload& divisor) {
    const ChainOfLoops& graph = divisor.raw.graph();
    const int g = graph.genus();
    const double width = 2 * kMargin + 2 * kLoopRadius * g;
    const double height = 2 * kMargin + 2 * kLoopRadius;
    const double cy = kMargin + kLoopRadius;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
        << "width=\"" << fmt(width) << "\" height=\"" << fmt(height)
        << "\" viewBox=\"0 0 " << fmt(width) << " " << fmt(height) << "\">\n";

    // Loops and vertices; vertex i sits at the tangency of loops i and i+1.
    for (int i = 1; i <= g; ++i) {
        const double cx = kMargin + kLoopRadius * (2 * i - 1);
        svg << "  <circle cx=\"" << fmt(cx) << "\" cy=\"" << fmt(cy)
            << "\" r=\"" << fmt(kLoopRadius)
            << "\" fill=\"none\" stroke=\"black\"/>\n";
    }
    for (int v = 0; v <= g; ++v) {
        const double x = kMargin + 2 * kLoopRadius * v;
        svg << "  <circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(cy)
            << "\" r=\"2.50\" fill=\"black\"/>\n"
            << "  <text x=\"" << fmt(x) << "\" y=\""
            << fmt(cy + kLoopRadius + 16.0)
            << "\" font-size=\"10\" text-anchor=\"middle\">v" << v
            << "</text>\n";
    }

    // Chips at v0.
    svg << "  <text x=\"" << fmt(kMargin) << "\" y=\""
        << fmt(cy - kLoopRadius - 8.0)
        << "\" font-size=\"12\" text-anchor=\"middle\">"
        << divisor.raw.chips_at_v0() << "</text>\n";

    // One dot per occupied loop, placed by the fraction of the circumference
    // travelled counter-clockwise from the loop's left vertex.
    for (int i = 1; i <= g; ++i) {
        const Rational& x = divisor.raw.distance(i);
        if (x.is_zero()) continue;
        const double fraction =
            x.to_double() / graph.circumference(i).to_double();
        const double angle = M_PI - 2 * M_PI * fraction;
        const double cx = kMargin + kLoopRadius * (2 * i - 1);
        const double px = cx + kLoopRadius * std::cos(angle);
        const double py = cy - kLoopRadius * std::sin(angle);
        svg << "  <circle cx=\"" << fmt(px) << "\" cy=\"" << fmt(py)
            << "\" r=\"" << fmt(kChipRadius)
            << "\" fill=\"black\" data-loop=\"" << i << "\" data-distance=\""
            << x.str() << "\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

std::string render_lattice_path(const LatticePath& path) {
    const int g = path.step_count();
    const int r = path.dimension();
    int top = 1;
    for (const auto& point : path.points()) {
        for (int value : point) top = std::max(top, value);
    }

    const double width = 2 * kMargin + kGridScale * g;
    const double height = 2 * kMargin + kGridScale * top;
    auto sx = [&](int i) { return kMargin + kGridScale * i; };
    auto sy = [&](int v) { return kMargin + kGridScale * (top - v); };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
        << "width=\"" << fmt(width) << "\" height=\"" << fmt(height)
        << "\" viewBox=\"0 0 " << fmt(width) << " " << fmt(height) << "\">\n";

    for (int i = 0; i <= g; ++i) {
        svg << "  <line x1=\"" << fmt(sx(i)) << "\" y1=\"" << fmt(sy(0))
            << "\" x2=\"" << fmt(sx(i)) << "\" y2=\"" << fmt(sy(top))
            << "\" stroke=\"#dddddd\"/>\n";
    }
    for (int v = 0; v <= top; ++v) {
        svg << "  <line x1=\"" << fmt(sx(0)) << "\" y1=\"" << fmt(sy(v))
            << "\" x2=\"" << fmt(sx(g)) << "\" y2=\"" << fmt(sy(v))
            << "\" stroke=\"#dddddd\"/>\n";
    }

    // Chamber points keep the polylines non-crossing: path j stays strictly
    // above path j+1.
    for (int j = 1; j <= r; ++j) {
        std::ostringstream points;
        std::ostringstream cusps;
        for (int i = 0; i <= g; ++i) {
            const int v = path.point(i)[static_cast<size_t>(j) - 1];
            if (i > 0) {
                points << ' ';
                cusps << ' ';
            }
            points << fmt(sx(i)) << ',' << fmt(sy(v));
            cusps << '(' << i << ',' << v << ')';
        }
        svg << "  <polyline fill=\"none\" stroke=\"black\" data-path=\"" << j
            << "\" data-cusps=\"" << cusps.str() << "\" points=\""
            << points.str() << "\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace

std::string render_svg(const Document& doc, RenderStyle style) {
    if (style == RenderStyle::chip_config && doc.kind == DocKind::divisor) {
        return render_chip_config(doc.divisor());
    }
    if (style == RenderStyle::lattice_path && doc.kind == DocKind::path) {
        return render_lattice_path(doc.path());
    }
    throw ValidationError(
        "render: unsupported document kind for the requested style");
}

}  // namespace chainloop
