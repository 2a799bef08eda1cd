#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "pentahole/pentagons.hpp"

namespace pentahole {

// JSON payloads carry every point as {"index", "x", "y"}: the index into the
// canonical point set and the literal coordinates, which must agree.
nlohmann::json point_ref(Point p, const PointSet& s);
nlohmann::json hole_to_json(const Hole& h, const PointSet& s);
nlohmann::json pair_to_json(const DisjointPair& pair, const PointSet& s);
nlohmann::json partition_to_json(const SeparablePartition& part, const PointSet& s);
nlohmann::json witness_to_json(const WitnessReport& rep, const PointSet& s);
nlohmann::json classification_to_json(const NinePointClassification& cls, const PointSet& s);
nlohmann::json hull_to_json(const ConvexPolygon& poly, const PointSet& s);
nlohmann::json layers_to_json(const ConvexLayers& layers, const PointSet& s);
nlohmann::json hole_list_to_json(const std::vector<Hole>& holes, int k, const PointSet& s);

// Full document: schema_version, command, optional seed, input digest,
// verified flag and payload.
nlohmann::json report_document(const std::string& command, std::optional<std::uint64_t> seed,
                               const PointSet& s, nlohmann::json payload, bool verified);

std::string dump_report(const nlohmann::json& doc);

// Construction-independent re-verification of a parsed report document
// against a point set. Malformed payload content (index/coordinate mismatch,
// foreign vertices, broken convexity) becomes a reason, not an exception.
VerifyResult verify_report_document(const nlohmann::json& doc, const PointSet& s);

} // namespace pentahole
