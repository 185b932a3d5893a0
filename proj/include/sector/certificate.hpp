#ifndef SECTOR_CERTIFICATE_HPP
#define SECTOR_CERTIFICATE_HPP

#include "sector/interlace.hpp"
#include "sector/ray.hpp"
#include "sector/roots.hpp"
#include "sector/sector.hpp"

#include <json.hpp>

#include <string_view>

namespace sector {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// Document with every top-level field present, in schema order.
Json certificate_skeleton(std::string_view command);

Json polynomial_json(const Polynomial& p);
// "mid ± bound" decimal string.
std::string decimal(const Interval& x);
std::string decimal_upper(const Rational& x);
Json root_json(const RootEnclosure& r);
Json margin_json(const RootMargin& m);
Json arg_variation_json(const ArgVariation& v);
Json trace_json(const QuadrantTrace& t);
Json zero_list_json(const ZeroList& z);
Json proof_steps_json(const ProofStepReport& r);

// Writes verdict, roots, proof_steps, precision_bits and events of cert into doc.
void fill_certificate(Json& doc, const SectorCertificate& cert);

} // namespace sector

#endif
