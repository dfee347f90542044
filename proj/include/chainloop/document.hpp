#pragma once

#include <optional>
#include <string>
#include <variant>

#include <json.hpp>

#include "chainloop/divisor.hpp"
#include "chainloop/graph.hpp"
#include "chainloop/lattice_path.hpp"
#include "chainloop/tableau.hpp"

namespace chainloop {

enum class DocKind { tableau, path, divisor, graph };

// Divisor documents keep both encodings; the unit form is absent when the
// raw distances are not multiples of the m_i.
struct DivisorPayload {
    DivisorSeq raw;
    std::optional<UnderlineSeq> units;
};

// One interchange value: a tableau, a lattice path, a divisor or a graph,
// plus free-form annotations that survive a round trip.
struct Document {
    DocKind kind;
    std::variant<RectTableau, LatticePath, DivisorPayload, ChainOfLoops>
        payload;
    nlohmann::json meta;  // null when absent

    const RectTableau& tableau() const;
    const LatticePath& path() const;
    const DivisorPayload& divisor() const;
    const ChainOfLoops& graph() const;
};

Document make_document(RectTableau t);
Document make_document(LatticePath p);
Document make_document(ChainOfLoops g);
Document make_document(const UnderlineSeq& units);
Document make_document(DivisorSeq raw);

Document document_from_json(const nlohmann::json& j);
Document parse_document(const std::string& text);

nlohmann::json to_json(const Document& doc);
std::string dump_document(const Document& doc);

}  // namespace chainloop
