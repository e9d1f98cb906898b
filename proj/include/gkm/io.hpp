// io.hpp
// ------
// JSON document formats for every object the CLI exchanges. Writers emit a
// fixed field order and sorted keys, so serialization is deterministic and
// golden files diff cleanly; parse(serialize(x)) == x for every kind.
// The exact schemas are documented in docs/formats.md.

#pragma once

#include "gkm/bundle.hpp"
#include "gkm/cohomology.hpp"

#include <json.hpp>

#include <string>

namespace gkm {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// --- polynomials and forms -------------------------------------------------

Json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(uint32_t rank, const Json& j);

Json form_to_json(const LinearForm& f);
LinearForm form_from_json(uint32_t rank, const Json& j);

// --- documents ---------------------------------------------------------------

Json labeled_graph_to_json(const LabeledGraph& lg);
LabeledGraph labeled_graph_from_json(const Json& j);

Json leg_bundle_to_json(const LegBundle& xi);
// a missing "transport" field switches on inference of the unique
// congruence-satisfying matching per edge
LegBundle leg_bundle_from_json(const Json& j);

Json projectivization_to_json(const Projectivization& proj);

Json class_to_json(const CohomologyClass& f);
// values are reattached to a carrier later; rank comes from the document
std::pair<uint32_t, std::map<std::string, Polynomial>> class_values_from_json(const Json& j);

Json decomposition_to_json(uint32_t rank, const std::vector<CohomologyClass>& q);
std::vector<std::pair<uint32_t, std::map<std::string, Polynomial>>> decomposition_values_from_json(
    const Json& j);

Json presentation_to_json(uint32_t rank, const PresentationElement& a);
std::vector<std::pair<uint32_t, std::map<std::string, Polynomial>>> presentation_values_from_json(
    const Json& j);

// --- files -------------------------------------------------------------------

std::string document_kind(const Json& j);
Json load_document(const std::string& path);      // ParseError with position on bad JSON
void write_document(const Json& j, const std::string& out_path); // "-" or "" = stdout
std::string dump_document(const Json& j);

} // namespace gkm
