#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "fstruct/fstructure.hpp"

namespace fstruct {

using StringMatrix = std::vector<std::vector<std::string>>;

/// On-disk description of an F-structure:
///
///   {"chart":{"vars":["x","y"],"nonvanishing":["y"]},
///    "F":[["-1","y"],["-1/y","2"]],"alpha":"1","beta":"-2","K":3,
///    "Fhat":[[...]]}                                  // Fhat optional
struct Manifest {
  std::vector<std::string> vars;
  std::vector<std::string> nonvanishing;
  StringMatrix F;
  std::string alpha = "0";
  std::string beta = "0";
  int K = 3;
  std::optional<StringMatrix> fhat;
};

/// Schema violation; `pointer()` is the JSON pointer of the offending value.
class SchemaError : public std::runtime_error {
 public:
  SchemaError(const std::string& pointer, const std::string& message)
      : std::runtime_error(pointer + ": " + message), pointer_(pointer) {}
  const std::string& pointer() const noexcept { return pointer_; }

 private:
  std::string pointer_;
};

/// Validates shape and types (square matrices matching the chart, K >= 3,
/// rational strings); does not parse expressions.
Manifest manifest_from_json(const nlohmann::json& j);
nlohmann::ordered_json to_json(const Manifest& m);

/// Throws std::runtime_error when the file cannot be read, SchemaError on
/// malformed JSON or schema violations.
Manifest read_manifest(const std::filesystem::path& path);

struct LoadedStructure {
  FStructure structure;
  std::optional<TensorField11> fhat;
};

/// Parses every expression (ParseError is rethrown as SchemaError with the
/// entry's pointer) and verifies the structure equation (StructureError).
LoadedStructure load(const Manifest& m);
LoadedStructure load_manifest(const std::filesystem::path& path);

/// Manifest with every expression re-printed from its canonical form.
Manifest canonical_manifest(const LoadedStructure& s);

/// The four worked examples, ids 1..4. Example 2 carries Fhat = [[0,1],[-1,0]],
/// the a = 0, b = 1 member of the square-root family [[a, b], [-(1+a^2)/b, -a]].
/// Throws std::out_of_range for other ids.
Manifest builtin_example(int id);

}  // namespace fstruct
