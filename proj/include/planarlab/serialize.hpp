#pragma once

// JSON forms of the library types. nlohmann::json keeps object keys sorted,
// so every document is canonical and reruns compare byte for byte.

#include <string>

#include <json.hpp>

#include "planarlab/bipoly.hpp"
#include "planarlab/curves.hpp"
#include "planarlab/difftest.hpp"
#include "planarlab/refuter.hpp"
#include "planarlab/transform.hpp"

namespace planarlab {

using Json = nlohmann::json;

/// "m=N" or "m=N,modulus=0x..". Throws SyntaxError plus the Field::make errors.
Field parse_field_spec(const std::string& spec);

Json to_json(const Field& field);

/// [[a, b, "0x.."], ...] sorted by (a, b).
Json to_json(const BiPoly& g);
BiPoly bipoly_from_json(const Field& field, const Json& j);

/// {"degree": n, "terms": [...]}
Json to_json(const HomogeneousForm& h);
HomogeneousForm cone_from_json(const Field& field, const Json& j);

Json to_json(const TransformStep& s);
TransformStep step_from_json(const Json& j);

Json to_json(const LinearFactor& lf);

/// Self-contained: carries field, f, d and q alongside the chain.
Json to_json(const Certificate& cert);
/// Throws SyntaxError on a malformed or inconsistent document.
Certificate certificate_from_json(const Json& j);

Json to_json(const CurveStats& s);
Json to_json(const PlanarityVerdict& v);
Json to_json(const PipelineReport& r);
Json to_json(const ApnRefutation& r);
Json to_json(const VerifyResult& v);
Json to_json(const CatalogReport& r);

}  // namespace planarlab
