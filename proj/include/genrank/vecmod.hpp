#pragma once

// Poset-indexed diagrams of vector spaces over GF(p).

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "genrank/field.hpp"
#include "genrank/poset.hpp"
#include "genrank/shape.hpp"

namespace genrank {

using RankInvariant = std::map<Subposet, std::int64_t>;
using PersistenceDiagram = std::map<Subposet, std::int64_t>;
using ZZBarcode = std::map<ZZInterval, std::int64_t>;
using PosetBarcode = std::map<Subposet, std::int64_t>;

class VecDiagram {
 public:
  // One matrix per cover of shape.poset(), in covers() order, sized dims(hi) x dims(lo).
  // Throws ShapeMismatch on wrong sizes or moduli. Functoriality is checked separately.
  VecDiagram(IndexShape shape, std::uint32_t modulus, std::vector<std::size_t> dims, std::vector<Matrix> maps);

  // All cover maps zero.
  static VecDiagram zero(IndexShape shape, std::uint32_t modulus, std::vector<std::size_t> dims);

  const IndexShape& shape() const noexcept { return shape_; }
  const Poset& poset() const noexcept { return shape_.poset(); }
  std::uint32_t modulus() const noexcept { return modulus_; }
  const std::vector<std::size_t>& dims() const noexcept { return dims_; }
  std::size_t dim(Index i) const { return dims_.at(i); }
  const std::vector<Matrix>& maps() const noexcept { return maps_; }
  const Matrix& cover_map(Index lo, Index hi) const;
  void set_cover_map(Index lo, Index hi, Matrix m);

  // phi(s,t) for s <= t, composed along one cover path. Throws InvalidIndex if s is not <= t.
  Matrix transfer(Index s, Index t) const;

 private:
  IndexShape shape_;
  std::uint32_t modulus_;
  std::vector<std::size_t> dims_;
  std::vector<Matrix> maps_;
};

VecDiagram direct_sum(const VecDiagram& a, const VecDiagram& b);

struct FunctorialityReport {
  bool ok = true;
  std::optional<std::pair<Index, Index>> violation;  // (s,t) with two disagreeing cover paths
};

FunctorialityReport validate_functoriality(const VecDiagram& d);

struct ConeData {
  std::size_t dim = 0;
  std::vector<Index> members;  // elements of I, ascending
  std::vector<Matrix> legs;    // limit: dims(s) x dim; colimit: dim x dims(s)
  const Matrix& leg(Index s) const;
};

// Both throw NotConnected unless I is Hasse-connected.
ConeData limit(const VecDiagram& d, const Subposet& i);
ConeData colimit(const VecDiagram& d, const Subposet& i);
std::size_t lc_rank(const VecDiagram& d, const Subposet& i);
std::size_t lc_rank_at_anchor(const VecDiagram& d, const Subposet& i, Index anchor);

RankInvariant rank_invariant(const VecDiagram& d, const std::vector<Subposet>& carrier);
// Path shapes: every interval of the window. General posets: every interval of P.
RankInvariant rank_invariant(const VecDiagram& d);
RankInvariant rank_invariant_connected(const VecDiagram& d, std::size_t size_cap);

std::int64_t persistence_diagram_at(const VecDiagram& d, const Subposet& i);
std::int64_t persistence_diagram_via_mobius(const VecDiagram& d, const Subposet& i);
PersistenceDiagram persistence_diagram(const VecDiagram& d, const std::vector<Subposet>& carrier);

// Four-term inclusion-exclusion over the zigzag window. Throws NotZigzag.
ZZBarcode zigzag_barcode(const VecDiagram& d);

// Direct sums of interval modules. Throw InvalidInterval.
VecDiagram synthesize_zigzag(Window w, const ZZBarcode& bars, std::uint32_t modulus = 2);
VecDiagram synthesize(const IndexShape& shape, const PosetBarcode& bars, std::uint32_t modulus = 2);

struct ObstructionWitness {
  Subposet interval;
  std::int64_t value = 0;
  bool is_interval = true;
};

// First I in Con(P) (|I| <= cap) off Int(P) with nonzero dgm, or with negative dgm.
// nullopt does not certify decomposability.
std::optional<ObstructionWitness> decomposability_obstruction(const VecDiagram& d, std::size_t size_cap);

// Line windows only (NotLinear): (a,b) -> rank phi(a <= b), positions in Z.
std::map<std::pair<std::int64_t, std::int64_t>, std::size_t> standard_rank_invariant(const VecDiagram& d);

// rank phi(s <= t) over all comparable pairs, reflexive pairs included.
std::map<std::pair<Index, Index>, std::size_t> pairwise_image_rank(const VecDiagram& d);

// Constructible R-module with critical values s_1 < ... < s_n: F_i is the space on [s_i, s_{i+1}),
// maps[i] goes from F_i to F_{i+1}. Result lives on the line window [1,n].
VecDiagram reindex_R_to_Z(const std::vector<double>& critical_values, const std::vector<std::size_t>& dims,
                          const std::vector<Matrix>& maps, std::uint32_t modulus = 2);
// [s_i, s_j) -> [i, j-1]; s_j may be past the last value (j = n+1). Throws InvalidInterval.
ZZInterval reindex_bar_R_to_Z(std::size_t i, std::size_t j);

// L(F): line window [lo,hi] -> zigzag window [lo,hi+1] with an empty top vertex. Throws NotLinear.
VecDiagram reindex_Z_to_ZZ(const VecDiagram& d);
ZZInterval reindex_bar_Z_to_ZZ(const ZZInterval& line_bar);

}  // namespace genrank
