#pragma once

#include <string>

#include "json.hpp"
#include "shtk/filtered.hpp"
#include "shtk/maps.hpp"
#include "shtk/moves.hpp"

namespace shtk {

using Json = nlohmann::json;

// All parse errors are Error("malformed-json") naming the JSON path.

Json to_json(const GroupSpec& spec);
GroupSpec group_spec_from_json(const Json& j, const std::string& path = "group");

Json to_json(const GroupElement& g, GroupKind kind);
GroupElement group_element_from_json(const Json& j, const std::string& path);

Json to_json(const RingElement& a, GroupKind kind);
RingElement ring_element_from_json(const Json& j, const std::string& path);

Json to_json(const BasedComplex& c);
BasedComplex complex_from_json(const Json& j, const std::string& path = "");

// Integer complexes use plain integers as matrix entries.
Json to_json(const ZComplex& c);
ZComplex zcomplex_from_json(const Json& j, const std::string& path = "");

Json to_json(const ChainMap& f);
ChainMap chain_map_from_json(const Json& j, const std::string& path = "");

Json to_json(const Levels& levels);
Levels levels_from_json(const Json& j, const std::string& path);
// Map document whose source and target carry "levels".
FilteredChainMap filtered_map_from_json(const Json& j);
Json to_json(const FilteredChainMap& f);

Json to_json(const Move& m, GroupKind kind);
Move move_from_json(const Json& j, const std::string& path);
Json to_json(const Certificate& cert, GroupKind kind);
Certificate certificate_from_json(const Json& j, const std::string& path = "");

// Compact serialization with sorted keys; the hashing input.
std::string canonical(const Json& j);
// Lowercase hex SHA-256 of canonical(to_json(c)).
std::string complex_hash(const BasedComplex& c);

Json read_json_file(const std::string& path);

}  // namespace shtk
