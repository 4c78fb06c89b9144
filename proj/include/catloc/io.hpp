#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "catloc/category.hpp"

namespace catloc {

/// Malformed or inconsistent category data.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kFormatVersion = 1;

nlohmann::json field_to_json(const Field& F);
Field field_from_json(const nlohmann::json& j);
/// "Q", "Fp:101" or "101".
Field parse_field(const std::string& text);

nlohmann::json to_json(const CategoryPresentation& P);
/// Strict mode rejects unknown keys. With validate, the result must pass validate_category.
CategoryPresentation from_json(const nlohmann::json& j, bool strict = true, bool validate = true);

void save_category(const CategoryPresentation& P, const std::filesystem::path& path);
CategoryPresentation load_category(const std::filesystem::path& path, bool strict = true, bool validate = true);

/// "P1+2*P2" or "P1 + P2"; names or aliases. Throws DataError.
Obj parse_object(const CategoryPresentation& P, const std::string& spec);
/// "P1,P2,S2" (commas or '+'); throws DataError.
IndexSet parse_index_set(const CategoryPresentation& P, const std::string& spec);

}  // namespace catloc
