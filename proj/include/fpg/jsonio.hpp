#pragma once

#include <string>

#include "json.hpp"

#include "fpg/certificate.hpp"
#include "fpg/coset.hpp"
#include "fpg/homology.hpp"
#include "fpg/presentation.hpp"

namespace fpg {

// Canonical JSON forms; serialization is deterministic (ordered_json, canonical
// relator order) so byte-exact golden tests are possible.
using Json = nlohmann::ordered_json;

Json to_json(const Presentation& p);
Presentation presentation_from_json(const Json& j);

Json to_json(const MarkedSubgroup& m);

Json to_json(const IntegerMatrix& m);
IntegerMatrix matrix_from_json(const Json& j);

Json to_json(const InvariantFactors& f);

Json to_json(const CosetTable& t);
CosetTable coset_table_from_json(const Json& j);

Json to_json(const Certificate& c);

// Reads a presentation from `< ... >` text or from the JSON object form.
Presentation read_presentation_text(const std::string& content);

}  // namespace fpg
