#pragma once

#include <filesystem>

#include <json.hpp>

#include "shakekit/complexity.hpp"
#include "shakekit/exactlinalg.hpp"
#include "shakekit/goeritz.hpp"
#include "shakekit/patterns.hpp"
#include "shakekit/seifert.hpp"

namespace shakekit::io {

using json = nlohmann::ordered_json;

/// Reads and parses a JSON file; InputError on I/O or syntax failure.
json load_json(const std::filesystem::path& path);

/// {"dim": n, "entries": [[...]]} with integer entries.
IntMatrix int_matrix_from_json(const json& j);
/// Same layout; entries may be integers or Laurent strings such as "t - 1".
LaurentMatrix laurent_matrix_from_json(const json& j);
json to_json(const IntMatrix& m);

SeifertMatrix seifert_from_json(const json& j);

/// Accepts either {"bands": [...], "crossings": [[...]]} or
/// {"G": [[...]], "nonorientable": [...]}.
GoeritzData goeritz_from_json(const json& j);
BandPresentation bands_from_json(const json& j);
json to_json(const GoeritzData& gd);

json to_json(const Inertia& in);

json to_json(const ComplexityCertificate& cert);
ComplexityCertificate certificate_from_json(const json& j);

/// {"atoms": {"P": {"values": {"1": 0, "2": 1}}, "R": {"family": "A_n",
///  "root": "1/3"}}, "wrapping_one": ["K"]}. The "A_n" family assigns
/// m -> sigma(A_m, root) / 2 for m >= 1.
struct AssignmentSpec {
  patterns::Assignment assignment;
  std::set<std::string> wrapping_one;
};
AssignmentSpec assignment_from_json(const json& j, double tol = kDefaultTolerance);

}  // namespace shakekit::io
