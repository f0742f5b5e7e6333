#ifndef GSYM_IO_HPP
#define GSYM_IO_HPP

#include <json.hpp>

#include "gsym/courant.hpp"

namespace gsym {

using Json = nlohmann::ordered_json;

// Polynomials travel as structured term lists, never as expression strings:
// {"terms": [{"coeff": "-1/2", "even": [..], "odd": [..]}, ...]} with the
// even exponents aligned with the chart's even-variable order and the odd
// entries strictly increasing positions into the odd class.
Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j, const ChartPtr& ctx);

Json mat_to_json(const Mat& m);
Mat mat_from_json(const Json& j, const std::string& field);

// {"kind": "darboux"|"point"|"standard"|"brst"|"odd", ...}
ChartPtr chart_from_json(const Json& j);

// {"anchor": [[poly,...],...], "phi": [{"indices": [a,b,c], "value": poly}]}
Json data_to_json(const CourantData& d);
CourantData data_from_json(const Json& j, const ChartPtr& ctx);

StructureConstants constants_from_json(const Json& j, const std::string& field);
Json constants_to_json(const StructureConstants& c);

TransitionMap transition_from_json(const Json& j, const ChartPtr& source, const ChartPtr& target);

// Canonical emission: ordered keys, rationals as strings, terms in MonoLess
// order; identical inputs give byte-identical output.
std::string emit(const Json& report);

} // namespace gsym

#endif
