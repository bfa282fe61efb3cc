#include "garside/json_io.hpp"

#include <array>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "garside/errors.hpp"

namespace garside {

namespace {

int int_at(const nlohmann::json& value, const std::string& what) {
  if (!value.is_number_integer()) {
    throw UsageError(what + " must be an integer");
  }
  return value.get<int>();
}

const nlohmann::json& field(const nlohmann::json& doc, const char* name,
                            const std::string& what) {
  if (!doc.is_object() || !doc.contains(name)) {
    throw UsageError(what + " needs a \"" + name + "\" field");
  }
  return doc.at(name);
}

// Tokens look like "4.1": the arc id, a dot, then which end (0 or 1).
ArcEnd parse_token(const std::string& token) {
  auto dot = token.find('.');
  if (dot == std::string::npos || dot == 0 || dot + 1 >= token.size()) {
    throw UsageError("bad rotation token: " + token);
  }
  ArcEnd out;
  try {
    std::size_t used = 0;
    out.arc = std::stoi(token.substr(0, dot), &used);
    if (used != dot) throw UsageError("bad rotation token: " + token);
    std::string tail = token.substr(dot + 1);
    out.end = std::stoi(tail, &used);
    if (used != tail.size()) throw UsageError("bad rotation token: " + token);
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception&) {
    throw UsageError("bad rotation token: " + token);
  }
  if (out.end != 0 && out.end != 1) {
    throw UsageError("a rotation token end must be 0 or 1: " + token);
  }
  return out;
}

}  // namespace

nlohmann::json object_to_json(const DiskObject& x) {
  nlohmann::json doc;
  doc["labels"] = x.labels();
  doc["arcs"] = nlohmann::json::array();
  for (int arc = 0; arc < x.arc_count(); ++arc) {
    doc["arcs"].push_back({x.arc_ends(arc)[0], x.arc_ends(arc)[1]});
  }
  doc["rotation"] = nlohmann::json::object();
  for (int v = 0; v < x.m(); ++v) {
    nlohmann::json tokens = nlohmann::json::array();
    for (const ArcEnd& end : x.rotation(v)) {
      tokens.push_back(std::to_string(end.arc) + "." +
                       std::to_string(end.end));
    }
    doc["rotation"][std::to_string(v)] = std::move(tokens);
  }
  return doc;
}

DiskObject object_from_json(const nlohmann::json& doc) {
  const nlohmann::json& labels_doc = field(doc, "labels", "an object");
  if (!labels_doc.is_array()) {
    throw UsageError("object labels must be an array of integers");
  }
  std::vector<int> labels;
  for (const nlohmann::json& label : labels_doc) {
    labels.push_back(int_at(label, "a label"));
  }
  Labelling labelling = validate(labels);

  const nlohmann::json& arcs_doc = field(doc, "arcs", "an object");
  if (!arcs_doc.is_array()) {
    throw UsageError("object arcs must be an array of endpoint pairs");
  }
  std::vector<std::array<int, 2>> ends;
  for (const nlohmann::json& pair : arcs_doc) {
    if (!pair.is_array() || pair.size() != 2) {
      throw UsageError("each arc must be a pair of endpoint vertices");
    }
    ends.push_back({int_at(pair[0], "an arc endpoint"),
                    int_at(pair[1], "an arc endpoint")});
  }

  const nlohmann::json& rotation_doc = field(doc, "rotation", "an object");
  if (!rotation_doc.is_object()) {
    throw UsageError("object rotation must map vertices to token lists");
  }
  std::vector<std::vector<ArcEnd>> rot(labelling.m);
  for (auto it = rotation_doc.begin(); it != rotation_doc.end(); ++it) {
    int vertex = -1;
    try {
      std::size_t used = 0;
      vertex = std::stoi(it.key(), &used);
      if (used != it.key().size()) vertex = -1;
    } catch (const std::exception&) {
      vertex = -1;
    }
    if (vertex < 0 || vertex >= labelling.m) {
      throw UsageError("rotation vertex out of range: " + it.key());
    }
    if (!it.value().is_array()) {
      throw UsageError("a rotation list must be an array of tokens");
    }
    for (const nlohmann::json& token : it.value()) {
      if (!token.is_string()) {
        throw UsageError("rotation tokens must be strings like \"2.0\"");
      }
      rot[vertex].push_back(parse_token(token.get<std::string>()));
    }
  }
  return DiskObject::from_parts(std::move(labels), std::move(ends),
                                std::move(rot));
}

nlohmann::json word_to_json(const PositiveWord& w) {
  nlohmann::json doc;
  doc["source"] = w.source;
  doc["arcs"] = w.arcs;
  return doc;
}

PositiveWord word_from_json(const nlohmann::json& doc) {
  const nlohmann::json& source = field(doc, "source", "a word");
  if (!source.is_string()) {
    throw UsageError("a word source must be an object key string");
  }
  const nlohmann::json& arcs = field(doc, "arcs", "a word");
  if (!arcs.is_array()) {
    throw UsageError("word arcs must be an array of integers");
  }
  PositiveWord out{source.get<std::string>(), {}};
  for (const nlohmann::json& arc : arcs) {
    out.arcs.push_back(int_at(arc, "a word letter"));
  }
  return out;
}

nlohmann::json fraction_to_json(const GroupoidElement& g) {
  nlohmann::json doc;
  doc["denominator"] = word_to_json(g.denominator);
  doc["numerator"] = word_to_json(g.numerator);
  return doc;
}

GroupoidElement fraction_from_json(const nlohmann::json& doc) {
  GroupoidElement out;
  out.denominator = word_from_json(field(doc, "denominator", "a fraction"));
  out.numerator = word_from_json(field(doc, "numerator", "a fraction"));
  return out;
}

std::string read_text(const std::string& path) {
  std::ostringstream text;
  if (path == "-") {
    text << std::cin.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) {
      throw UsageError("cannot read file: " + path);
    }
    text << file.rdbuf();
  }
  return text.str();
}

nlohmann::json parse_json(const std::string& text) {
  nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
  if (doc.is_discarded()) {
    throw UsageError("malformed JSON input");
  }
  return doc;
}

std::string render_chargraph(const CharacteristicGraph& graph,
                             HasseFormat format) {
  if (format == HasseFormat::kDot) {
    std::ostringstream out;
    out << "digraph chargraph {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < graph.node_keys.size(); ++i) {
      out << "  n" << i << " [label=\"" << graph.node_keys[i] << "\"];\n";
    }
    for (const auto& [from, arc, to] : graph.edges) {
      out << "  n" << from << " -> n" << to << " [label=\"" << arc
          << "\"];\n";
    }
    out << "}\n";
    return out.str();
  }
  nlohmann::json doc;
  doc["nodes"] = graph.node_keys;
  doc["edges"] = nlohmann::json::array();
  for (const auto& [from, arc, to] : graph.edges) {
    doc["edges"].push_back({from, arc, to});
  }
  doc["base"] = graph.base;
  doc["rank"] = graph.rank;
  return doc.dump(2) + "\n";
}

}  // namespace garside
