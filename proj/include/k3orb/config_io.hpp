#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "k3orb/lattice.hpp"
#include "k3orb/orbifold.hpp"
#include "k3orb/pi1.hpp"
#include "k3orb/surface.hpp"

namespace k3orb::io {

using Json = nlohmann::json;

/// Reads a whole file; Error(InvalidInput) if it cannot be opened.
std::string read_file(const std::filesystem::path& path);
Json parse_json(std::string_view text, std::string_view what);

/// Configuration file: exactly one of
///   {"singularities": ["A1", "D4", ...]}
///   {"fibration": {"fibers": [{"kodaira": "I*0", "n": 0?, "removed": [...]}]},
///    "monodromy": [...]?}
/// Errors name the offending field, e.g. "fibration.fibers[1].kodaira".
NormalK3Input parse_config(const Json& j);

/// List of 2x2 matrices, each either [[a,b],[c,d]] or
/// {"matrix": [[a,b],[c,d]], "declared": "II"}.
MonodromyRep parse_representation(const Json& j, std::string_view field = "monodromy");

/// Square integer matrix as a JSON array of rows, or whitespace-separated
/// text with one row per line.
Matrix<std::int64_t> parse_matrix(std::string_view text);

Json to_json(const Report& report);
Json to_json(const SweepReport& report, std::size_t max_report);
Json to_json(const AbelianGroup& g);
Json to_json(const MeyerReport& report);
Json to_json(const OrbifoldSignature& s);
Json to_json(const OrbifoldClass& c);
Json to_json(const FiberData& f);
template <typename Scalar>
Json matrix_to_json(const Matrix<Scalar>& m);

/// Sorted keys, two-space indent, trailing newline.
std::string canonical_dump(const Json& j);

}  // namespace k3orb::io
