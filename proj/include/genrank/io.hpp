#pragma once

// JSON diagram files and the operations shared by the CLI and the Python module.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "genrank/metrics.hpp"
#include "genrank/setmod.hpp"
#include "genrank/vecmod.hpp"

namespace genrank {

using Json = nlohmann::ordered_json;

class LoadedDiagram {
 public:
  explicit LoadedDiagram(VecDiagram d) : d_(std::move(d)) {}
  explicit LoadedDiagram(SetDiagram d) : d_(std::move(d)) {}

  bool is_set() const noexcept { return std::holds_alternative<SetDiagram>(d_); }
  const VecDiagram& vec() const;  // throws Parse when the file holds a set diagram
  const SetDiagram& set() const;  // and vice versa
  const IndexShape& shape() const;

 private:
  std::variant<VecDiagram, SetDiagram> d_;
};

// Throws Error (Parse, ShapeMismatch, UnknownElement, ...) on malformed input.
LoadedDiagram parse_diagram(const Json& j);
LoadedDiagram load_diagram(const std::string& path);
Json read_json_file(const std::string& path);
Json diagram_to_json(const LoadedDiagram& d);

// Explicit interval, or every carrier: window intervals for zz/z, Con(P) up to cap for posets.
std::vector<Subposet> carriers(const LoadedDiagram& d, const std::optional<std::string>& interval, std::size_t cap);

std::int64_t rank_of(const LoadedDiagram& d, const Subposet& i);
std::int64_t diagram_of(const LoadedDiagram& d, const Subposet& i);
std::int64_t diagram_via_mobius_of(const LoadedDiagram& d, const Subposet& i);

// vec/zz: four-term rank sum. set/zz: level-set path. z windows: zero-padded inclusion-exclusion
// (merge-tree ranks for set files). Throws NotZigzag for general posets.
ZZBarcode barcode_of(const LoadedDiagram& d);
// What the bottleneck command compares: dgm_set for set files, the barcode otherwise.
ZZBarcode comparison_diagram(const LoadedDiagram& d);

Json barcode_to_json(const ZZBarcode& b);
// A JSON list of {"interval","mult"} or {"birth","death","decoration","mult"} entries, or a diagram object.
DiagramPoints points_from_json(const Json& j);

}  // namespace genrank
