#pragma once

#include <json.hpp>

#include "dkm/hilb.hpp"
#include "dkm/report.hpp"

namespace dkm {

// Point documents: {"type": "SlicePoint" | "HilbPoint" | "SurfacePoint", ...}.
// Complex scalars are serialized as [re, im] pairs throughout.

nlohmann::json to_json(cx z);
cx cx_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Polynomial& p);
Polynomial poly_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SlicePoint& pt);
SlicePoint slice_point_from_json(const nlohmann::json& j);

// HilbPoints carry the model name ("d2", "d1", "d0", "c2_xy", "cstar",
// "double_cover") and, for the surface models, the parameters.
nlohmann::json to_json(const HilbPoint& pt, const std::string& model, cx mu1, cx mu2);

nlohmann::json to_json(const SurfacePoint& pt);
SurfacePoint surface_point_from_json(const nlohmann::json& j);

// Residual re-verification of a loaded point document.
RunReport verify_document(const nlohmann::json& doc);

}  // namespace dkm
