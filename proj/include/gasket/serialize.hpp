#ifndef GASKET_SERIALIZE_HPP
#define GASKET_SERIALIZE_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "gasket/gasket_graph.hpp"
#include "gasket/measures.hpp"
#include "gasket/pressure.hpp"
#include "gasket/recursion.hpp"
#include "gasket/zero_cloud.hpp"

namespace gasket {

using Json = nlohmann::ordered_json;

// Fixed-format double printing (%.17g): round-trips exactly and keeps
// repeated invocations byte-identical.
std::string format_double(double v);

// Polynomial JSON: {"min_power": int, "coeffs": [decimal strings]} with
// coefficients lowest power first. Decimal strings because the integers
// leave 64-bit range almost immediately.
Json poly_to_json(const IntPolynomial& p);
Json poly_to_json(const LaurentPolynomial& p);
IntPolynomial int_poly_from_json(const Json& j);
LaurentPolynomial laurent_from_json(const Json& j);

Json graph_to_json(const GasketGraph& g);

Json uv_to_json(const UVPair& pair);
Json mn_to_json(const MnRecord& rec);
Json tn_to_json(const TnRecord& rec);

Json rational_to_json(const Rational& r);  // {"num": "...", "den": "..."}
Json measure_to_json(const AtomicMeasure& m);

// CSV: level,source,depth,multiplicity,re,im
std::string zero_cloud_to_csv(const ZeroCloud& cloud);

// CSV: depth,re,im
std::string orbit_to_csv(const std::vector<std::pair<std::complex<double>, unsigned>>& pts);

// CSV: y,level,p,asymptote,difference
std::string pressure_rows_to_csv(const std::vector<PressureRow>& rows);

}  // namespace gasket

#endif
