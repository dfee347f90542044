#include "chainloop/document.hpp"

#include <utility>

#include "chainloop/errors.hpp"

namespace chainloop {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& message) {
    throw ValidationError("document: " + message);
}

const json& field(const json& j, const char* name) {
    const auto it = j.find(name);
    if (it == j.end()) bad(std::string("missing field '") + name + "'");
    return *it;
}

int as_int(const json& j, const char* name) {
    if (!j.is_number_integer()) bad(std::string(name) + " must be an integer");
    return j.get<int>();
}

Rational as_rational(const json& j, const char* name) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return Rational::from_string(j.get<std::string>());
    bad(std::string(name) + " must be an integer or a 'num/den' string");
}

std::vector<int> as_int_vector(const json& j, const char* name) {
    if (!j.is_array()) bad(std::string(name) + " must be an array");
    std::vector<int> out;
    out.reserve(j.size());
    for (const auto& e : j) out.push_back(as_int(e, name));
    return out;
}

ChainOfLoops parse_graph_payload(const json& j) {
    const json& loops = field(j, "loops");
    if (!loops.is_array() || loops.empty()) bad("graph needs a loops array");
    std::vector<std::pair<Rational, Rational>> lengths;
    lengths.reserve(loops.size());
    for (const auto& pair : loops) {
        if (!pair.is_array() || pair.size() != 2) {
            bad("each loop must be a [ell, m] pair");
        }
        lengths.emplace_back(as_rational(pair[0], "ell"),
                             as_rational(pair[1], "m"));
    }
    return make_chain(lengths);
}

RectTableau parse_tableau_payload(const json& j) {
    const json& rows = field(j, "rows");
    if (!rows.is_array() || rows.empty()) bad("tableau needs a rows array");
    std::vector<std::vector<int>> grid;
    grid.reserve(rows.size());
    for (const auto& row : rows) {
        grid.push_back(as_int_vector(row, "tableau row"));
    }
    RectTableau t(grid);
    if (!t.is_valid()) bad("rows are not a standard Young tableau");
    return t;
}

LatticePath parse_path_payload(const json& j) {
    const int r = as_int(field(j, "r"), "r");
    const json& points = field(j, "points");
    if (!points.is_array() || points.empty()) {
        bad("path needs a nonempty points array");
    }
    std::vector<std::vector<int>> parsed;
    parsed.reserve(points.size());
    for (const auto& point : points) {
        parsed.push_back(as_int_vector(point, "path point"));
    }
    return LatticePath(r, std::move(parsed));
}

DivisorPayload parse_divisor_payload(const json& j) {
    ChainOfLoops graph = parse_graph_payload(field(j, "graph"));
    const int head = as_int(field(j, "head"), "head");

    const bool has_units = j.contains("underline");
    const bool has_raw = j.contains("raw");
    if (!has_units && !has_raw) {
        bad("divisor needs an 'underline' or a 'raw' sequence");
    }

    std::optional<DivisorSeq> raw;
    if (has_raw) {
        const json& xs = field(j, "raw");
        if (!xs.is_array()) bad("raw must be an array");
        std::vector<Rational> distances;
        distances.reserve(xs.size());
        for (const auto& x : xs) distances.push_back(as_rational(x, "raw"));
        raw.emplace(graph, head, std::move(distances));
    }

    if (has_units) {
        UnderlineSeq units(graph, head,
                           as_int_vector(field(j, "underline"), "underline"));
        DivisorSeq derived = underline_to_raw(units);
        if (raw && !(*raw == derived)) {
            bad("'underline' and 'raw' describe different divisors");
        }
        return DivisorPayload{std::move(derived), std::move(units)};
    }

    std::optional<UnderlineSeq> units;
    try {
        units = raw_to_underline(*raw);
    } catch (const ValidationError&) {
        // Distances off the m_i lattice: keep the raw form only.
    }
    return DivisorPayload{std::move(*raw), std::move(units)};
}

json graph_to_json(const ChainOfLoops& graph) {
    json loops = json::array();
    for (const Loop& loop : graph.loops()) {
        loops.push_back(json::array({loop.ell.str(), loop.m.str()}));
    }
    return json{{"kind", "graph"}, {"loops", std::move(loops)}};
}

}  // namespace

const RectTableau& Document::tableau() const {
    if (kind != DocKind::tableau) {
        throw ValidationError("expected a tableau document");
    }
    return std::get<RectTableau>(payload);
}

const LatticePath& Document::path() const {
    if (kind != DocKind::path) {
        throw ValidationError("expected a path document");
    }
    return std::get<LatticePath>(payload);
}

const DivisorPayload& Document::divisor() const {
    if (kind != DocKind::divisor) {
        throw ValidationError("expected a divisor document");
    }
    return std::get<DivisorPayload>(payload);
}

const ChainOfLoops& Document::graph() const {
    if (kind != DocKind::graph) {
        throw ValidationError("expected a graph document");
    }
    return std::get<ChainOfLoops>(payload);
}

Document make_document(RectTableau t) {
    return Document{DocKind::tableau, std::move(t), nullptr};
}

Document make_document(LatticePath p) {
    return Document{DocKind::path, std::move(p), nullptr};
}

Document make_document(ChainOfLoops g) {
    return Document{DocKind::graph, std::move(g), nullptr};
}

Document make_document(const UnderlineSeq& units) {
    return Document{DocKind::divisor,
                    DivisorPayload{underline_to_raw(units), units}, nullptr};
}

Document make_document(DivisorSeq raw) {
    std::optional<UnderlineSeq> units;
    try {
        units = raw_to_underline(raw);
    } catch (const ValidationError&) {
    }
    return Document{DocKind::divisor,
                    DivisorPayload{std::move(raw), std::move(units)}, nullptr};
}

Document document_from_json(const nlohmann::json& j) {
    if (!j.is_object()) bad("top level must be a JSON object");
    const json& kind = field(j, "kind");
    if (!kind.is_string()) bad("kind must be a string");
    const std::string k = kind.get<std::string>();

    Document doc{DocKind::graph, ChainOfLoops({Loop{1, 1}}), nullptr};
    if (k == "tableau") {
        doc = Document{DocKind::tableau, parse_tableau_payload(j), nullptr};
    } else if (k == "path") {
        doc = Document{DocKind::path, parse_path_payload(j), nullptr};
    } else if (k == "divisor") {
        doc = Document{DocKind::divisor, parse_divisor_payload(j), nullptr};
    } else if (k == "graph") {
        doc = Document{DocKind::graph, parse_graph_payload(j), nullptr};
    } else {
        bad("unknown kind '" + k + "'");
    }
    if (j.contains("meta")) doc.meta = j.at("meta");
    return doc;
}

Document parse_document(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("invalid JSON: ") + e.what());
    }
    return document_from_json(j);
}

nlohmann::json to_json(const Document& doc) {
    json j;
    switch (doc.kind) {
        case DocKind::tableau: {
            const RectTableau& t = doc.tableau();
            json rows = json::array();
            for (int r = 1; r <= t.rows(); ++r) {
                json row = json::array();
                for (int c = 1; c <= t.cols(); ++c) row.push_back(t.at(r, c));
                rows.push_back(std::move(row));
            }
            j = json{{"kind", "tableau"}, {"rows", std::move(rows)}};
            break;
        }
        case DocKind::path: {
            const LatticePath& p = doc.path();
            json points = json::array();
            for (const auto& point : p.points()) points.push_back(point);
            j = json{{"kind", "path"},
                     {"r", p.dimension()},
                     {"points", std::move(points)}};
            break;
        }
        case DocKind::divisor: {
            const DivisorPayload& d = doc.divisor();
            json raw = json::array();
            for (const Rational& x : d.raw.distances()) raw.push_back(x.str());
            j = json{{"kind", "divisor"},
                     {"graph", graph_to_json(d.raw.graph())},
                     {"head", d.raw.chips_at_v0()},
                     {"raw", std::move(raw)}};
            if (d.units) j["underline"] = d.units->units();
            break;
        }
        case DocKind::graph:
            j = graph_to_json(doc.graph());
            break;
    }
    if (!doc.meta.is_null()) j["meta"] = doc.meta;
    return j;
}

std::string dump_document(const Document& doc) {
    return to_json(doc).dump(2) + "\n";
}

}  // namespace chainloop
