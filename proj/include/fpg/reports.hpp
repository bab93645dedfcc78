#pragma once

#include "fpg/constructions.hpp"
#include "fpg/jsonio.hpp"
#include "fpg/rips.hpp"
#include "fpg/smallcancel.hpp"

namespace fpg {

Certificate certificate_from_json(const Json& j);

Json to_json(const CancellationReport& r);
CancellationReport cancellation_report_from_json(const Json& j);

// Embeds q, params, the marked subgroup, the sc report and the metadata trail;
// round-trips so a saved rips output can feed `fibre` and `ns`.
Json to_json(const RipsOutput& r);
RipsOutput rips_output_from_json(const Json& j);

Json to_json(const PairReport& r);
Json to_json(const FibreProduct& f);
Json to_json(const NikolovSegal& n);

}  // namespace fpg
