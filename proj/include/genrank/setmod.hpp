#pragma once

// Diagrams of finite sets over zigzag and line windows: Reeb graphs and merge trees.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "genrank/shape.hpp"
#include "genrank/vecmod.hpp"

namespace genrank {

// (node, element index within the node)
using Element = std::pair<Index, std::size_t>;

class SetDiagram {
 public:
  // maps[c][x] is the image in node hi of element x of node lo, for cover c = (lo, hi).
  // Throws NotZigzag for general shapes, ShapeMismatch for malformed maps, DuplicateElement for
  // repeated labels within a node.
  SetDiagram(IndexShape shape, std::vector<std::vector<std::string>> elements,
             std::vector<std::vector<std::size_t>> maps);

  const IndexShape& shape() const noexcept { return shape_; }
  const Poset& poset() const noexcept { return shape_.poset(); }
  const std::vector<std::string>& elements(Index node) const { return elements_.at(node); }
  std::size_t cardinality(Index node) const { return elements_.at(node).size(); }
  const std::vector<std::vector<std::size_t>>& maps() const noexcept { return maps_; }
  const std::vector<std::size_t>& cover_map(Index lo, Index hi) const;
  bool empty() const;

 private:
  IndexShape shape_;
  std::vector<std::vector<std::string>> elements_;
  std::vector<std::vector<std::size_t>> maps_;
};

SetDiagram disjoint_union(const SetDiagram& a, const SetDiagram& b);

struct Component {
  std::vector<Element> members;  // sorted
  Subposet support;              // nodes met; may be a proper subset of I
};

struct ComponentTable {
  Subposet interval;
  std::vector<Component> classes;  // ordered by smallest member
  std::map<Element, std::size_t> class_of;
  std::size_t count() const noexcept { return classes.size(); }
};

// Classes of colim D|_I via union-find.
ComponentTable colimit_components(const SetDiagram& d, const Subposet& i);
std::size_t count_full(const SetDiagram& d, const Subposet& i);
bool has_section(const SetDiagram& d, const ComponentTable& table, std::size_t cls);
// Number of full classes that admit a section.
std::size_t set_lc_rank(const SetDiagram& d, const Subposet& i);

RankInvariant set_rank_invariant(const SetDiagram& d);
std::int64_t set_persistence_diagram_at(const SetDiagram& d, const Subposet& i);
PersistenceDiagram set_persistence_diagram(const SetDiagram& d);
// Full function over all window intervals.
RankInvariant full_function(const SetDiagram& d);

VecDiagram linearize(const SetDiagram& d, std::uint32_t modulus = 2);

// Four-term sum over the full function. Throws NotZigzag.
ZZBarcode levelset_barcode(const SetDiagram& d);

struct UntwistedReport {
  bool untwisted = true;
  std::optional<Subposet> witness;  // first interval where set rank < linearized rank
};

UntwistedReport is_untwisted(const SetDiagram& d);

// One summand per colimit class over the full window. Throws EmptyDiagram.
std::vector<SetDiagram> decompose(const SetDiagram& d);

// Image cardinality of composites a -> b on a line window. Throws NotLinear.
RankInvariant merge_tree_rank(const SetDiagram& d);

// Set version of L(F): line window [lo,hi] -> zigzag window [lo,hi+1]. Throws NotLinear.
SetDiagram lift_to_zigzag(const SetDiagram& d);

// Throws NotZigzag.
std::string reeb_dot(const SetDiagram& d);

}  // namespace genrank
