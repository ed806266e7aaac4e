#pragma once

#include "gbl/certify.hpp"
#include "gbl/diagram.hpp"
#include "gbl/milnor.hpp"
#include "gbl/s_moves.hpp"
#include "gbl/s_search.hpp"
#include "gbl/seifert.hpp"

#include <json.hpp>

#include <string>

namespace gbl {

/// Insertion-ordered JSON, so serialised output is byte-stable.
using Json = nlohmann::ordered_json;

/// All file formats number components, strands, crossings, block positions and
/// multi-index entries from 1. Integers that fit in 64 bits are JSON numbers,
/// larger ones decimal strings.

Json to_json(const Integer& v);
Integer integer_from_json(const Json& j);

/// {"m": 2, "block_sizes": [2, 2], "rows": [[...], ...]}
Json to_json(const SeifertMatrix& m);
SeifertMatrix matrix_from_json(const Json& j);

Json to_json(const SMove& move);
SMove move_from_json(const Json& j);
/// {"start": matrix, "moves": [...]}; a search result holding a sequence is
/// accepted on input as well.
Json to_json(const MoveSequence& seq);
MoveSequence moves_from_json(const Json& j);

Json to_json(const SearchResult& r);
Json to_json(const GoodBasisOrdering& g);
Json to_json(const ValidationReport& r);

/// {"kind": "string"|"closed", "strands": [[1, -2, ...], ...],
///  "crossings": [[over, under, sign], ...], "components": {"label": [strand], ...},
///  "bottom": [...]} where a positive passage is over, a negative one under.
/// "bottom" appears for string links only and defaults to the identity.
Json to_json(const LinkDiagram& d);
LinkDiagram diagram_from_json(const Json& j);

/// {"matrix": ..., "derived": [{"a": diagram, "b": diagram}, ...]}
Json to_json(const Bundle& b);
Bundle bundle_from_json(const Json& j);

Json to_json(const MuTable& t);
Json to_json(const HomotopyVerdict& v);
Json to_json(const HtPlusVerdict& v);
Json to_json(const CheckNode& n);
Json to_json(const Certificate& c);

/// Parses a whole document; trailing content or malformed JSON throws ParseError.
Json parse_json(const std::string& text);
/// Two-space indented with a trailing newline.
std::string dump(const Json& j);

/// Multi-index from "123", "1,2,3" or "1 2 3" (1-based) to 0-based entries.
MultiIndex parse_index(const std::string& text);

}  // namespace gbl
