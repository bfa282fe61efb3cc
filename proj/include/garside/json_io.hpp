#pragma once

#include <string>

#include "json.hpp"

#include "garside/disk.hpp"
#include "garside/engine.hpp"
#include "garside/lattice.hpp"
#include "garside/presentation.hpp"

namespace garside {

// A disk object as JSON: the label list, the arc endpoint pairs, and one
// rotation list per boundary vertex holding "arc.end" tokens in
// counterclockwise order. Parsing accepts any admissible data and
// canonicalizes it; serializing always emits the canonical form.
nlohmann::json object_to_json(const DiskObject& x);
DiskObject object_from_json(const nlohmann::json& doc);

// Words and fractions, mirroring PositiveWord and GroupoidElement.
nlohmann::json word_to_json(const PositiveWord& w);
PositiveWord word_from_json(const nlohmann::json& doc);
nlohmann::json fraction_to_json(const GroupoidElement& g);
GroupoidElement fraction_from_json(const nlohmann::json& doc);

// Reads a whole file, or standard input when the path is "-".
std::string read_text(const std::string& path);

// Parses JSON text, reporting malformed input as UsageError.
nlohmann::json parse_json(const std::string& text);

// A characteristic graph as DOT or JSON, nodes labelled by object keys.
std::string render_chargraph(const CharacteristicGraph& graph,
                             HasseFormat format);

}  // namespace garside
