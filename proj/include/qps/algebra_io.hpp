#pragma once

#include "qps/lie_cohomology.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace qps::lie {

/// Parses the structure-constants document
///   {"name", "dim", "basis": [...], "brackets": [{"i", "j", "coeffs": {"k": "p/q"}}]}.
/// JSON syntax errors throw IoError naming line and column; schema and index
/// errors throw InputError.
StructureConstants parse_algebra(const std::string& text);
StructureConstants load_algebra(const std::filesystem::path& path);

/// Resolves a catalog name ("h3", "so3", "galilei", "poincare", "abelianN")
/// or a path to a JSON file.
StructureConstants catalog_algebra(const std::string& name_or_path);

nlohmann::json to_json(const StructureConstants& c);
nlohmann::json to_json(const Cochain& c);
nlohmann::json to_json(const ValidationResult& v);
nlohmann::json to_json(const CohomologyReport& r);
nlohmann::json to_json(const KernelReport& r);

/// Reads a 2-cochain from comma-separated rationals in sorted-pair order.
Cochain parse_cochain(std::size_t dim, const std::string& csv);

}  // namespace qps::lie
