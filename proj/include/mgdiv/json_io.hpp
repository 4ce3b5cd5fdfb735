#ifndef MGDIV_JSON_IO_HPP
#define MGDIV_JSON_IO_HPP

#include <json.hpp>

#include "mgdiv/engine.hpp"
#include "mgdiv/oracle.hpp"

namespace mgdiv {

using Json = nlohmann::ordered_json;

// Graph: {"vertices":["u","v"],"edges":[{"id":"e1","ends":["u","v"],"length":"1/1"},...]}
Json graph_to_json(const MetricGraph& g);
GraphPtr graph_from_json(const Json& j);

// Point: {"vertex":"u"} or {"edge":"e1","offset":"1/2"}; offsets 0 and length
// normalize to the vertex form on parse.
Json point_to_json(const PointRef& p);
PointRef point_from_json(const MetricGraph& g, const Json& j);

// Divisor: [{"vertex":"u","coeff":1},{"edge":"e1","offset":"1/2","coeff":2}]
Json divisor_to_json(const Divisor& D);
Divisor divisor_from_json(const MetricGraph& g, const Json& j);

// Set: {"model_points":[...], "I":[...], "J":["e1#0",...], "spset":[...]};
// entries of I are vertex-id strings or point objects for interior points.
Json set_to_json(const AdmissibleSet& S);
AdmissibleSet set_from_json(const GraphPtr& g, const Json& j);

// Certificate: [{"set": SetJSON, "eps": "1/2"}, ...]
Json certificate_to_json(const FiringCertificate& cert);
FiringCertificate certificate_from_json(const GraphPtr& g, const Json& j);

// {"max_error":1,"minmax":SetJSON|null,"is_break":false}
Json profile_to_json(const ErrorProfile& prof);

Json reduction_to_json(const ReductionResult& res, bool with_trace);

Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

} // namespace mgdiv

#endif
