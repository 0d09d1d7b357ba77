#pragma once

#include "momdp/mdp.hpp"

#include <string>
#include <vector>

namespace momdp {

/// A parsed ".momdp.json" document: model plus objective list.
struct ModelDocument {
    int format_version = 1;
    Mdp model;
    std::vector<ObjectiveSpec> objectives;
};

/// Decodes a UTF-8 model document. Throws ParseError (with line/column) on
/// syntax errors, SchemaError naming the offending field, ResolutionError for
/// unresolved objective targets, and ValidationError when validate_mdp fails.
ModelDocument parse_model_document(const std::string& text);

/// Canonical serialization: fixed key order, two-space indent, shortest
/// round-trip decimals. Byte-identical for structurally equal documents.
std::string serialize_model_document(const ModelDocument& doc);

} // namespace momdp
