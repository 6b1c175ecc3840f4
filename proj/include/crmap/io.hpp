#pragma once

#include <string>

#include <json.hpp>

#include "crmap/autgroup.hpp"
#include "crmap/degeneracy.hpp"
#include "crmap/hypersurface.hpp"

namespace crmap {

using Json = nlohmann::ordered_json;

Json poly_to_json(const PolyS& p);
PolyS poly_from_json(const Json& j);

/// map file schema:
/// { "model": "heisenberg"|"sphere"|"mixed", "source_dim": 2, "target_dim": N,
///   "components": [Poly...], "denominator": Poly,
///   "base_point": [scalar, scalar]   (sphere-source only, optional),
///   "source_model"/"target_model"    (mixed only) }
Json map_to_json(const CRMapS& H);
CRMapS map_from_json(const Json& j);

CRMapS load_map(const std::string& path);
void save_map(const CRMapS& H, const std::string& path);

Json aut_to_json(const Aut& a);
Aut aut_from_json(const Json& j);

Json certificate_to_json(const NormalFormCertificate& cert);

Json degeneracy_report_to_json(const DegeneracyReport& rep);
Json tangential_report_to_json(const TangentialReport& rep);
Json locus_report_to_json(const LocusReport& rep);

}  // namespace crmap
