#pragma once

#include <string>

#include <json.hpp>

#include "nsymkit/box_ops.hpp"
#include "nsymkit/classical.hpp"
#include "nsymkit/composition.hpp"
#include "nsymkit/element.hpp"
#include "nsymkit/skew_shape.hpp"
#include "nsymkit/tableau.hpp"

namespace nsymkit {

using Json = nlohmann::ordered_json;

// Schemas (all compact, keys in the order shown):
//   Composition  [2,1,3]            empty composition: []
//   Word         [2,4,1,2,3]        display order
//   SkewShape    {"outer":[..],"inner":[..],"boxes":[[r,c],..]}
//   Filling      {"shape":SkewShape,"entries":[[r,c,v],..]}
//   Element      {"basis":"S","terms":[{"comp":[..],"coeff":-1},..]}
//   Partition    [3,2,1]
//   coefficient maps  [{"comp":[..],"coeff":..},..]
// Coefficients are JSON integers when they fit in 64 bits and decimal strings
// otherwise. Parsers throw DomainError (or BasisError for a bad basis tag).

Json to_json(const Composition& alpha);
Json to_json(const Word& w);
Json to_json(const SkewShape& s);
Json to_json(const Filling& f);
Json to_json(const Element& e);
Json to_json(const Partition& p);
Json to_json(const PartitionCoefficients& coeffs);
Json coefficient_to_json(const Integer& c);

Composition composition_from_json(const Json& j);
Word word_from_json(const Json& j);
SkewShape skew_shape_from_json(const Json& j);
Filling filling_from_json(const Json& j);
Element element_from_json(const Json& j);
Partition partition_from_json(const Json& j);
Integer coefficient_from_json(const Json& j);

/// Parses text as an Element document. Throws DomainError on malformed JSON.
Element parse_element(const std::string& text);

}  // namespace nsymkit
