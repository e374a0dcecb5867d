#pragma once

// Finite posets, connected subposets, entourages and the Moebius function of Con^op(P).

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace genrank {

using Index = std::size_t;

class Poset {
 public:
  Poset() = default;

  // Covers are the transitive reduction of the reflexive-transitive closure of `relations`.
  // Reflexive pairs are ignored. Throws CycleDetected, UnknownElement, DuplicateElement.
  static Poset build(std::vector<std::string> elements,
                     const std::vector<std::pair<std::string, std::string>>& relations);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(Index i) const { return labels_.at(i); }
  std::optional<Index> find(std::string_view label) const;
  Index index_of(std::string_view label) const;  // throws UnknownElement

  // (q,p) with p covering q, sorted.
  const std::vector<std::pair<Index, Index>>& covers() const noexcept { return covers_; }
  std::optional<std::size_t> cover_id(Index lo, Index hi) const;
  const std::vector<Index>& upper_covers(Index i) const { return up_.at(i); }
  const std::vector<Index>& lower_covers(Index i) const { return down_.at(i); }
  const std::vector<Index>& hasse_neighbors(Index i) const { return adj_.at(i); }

  bool leq(Index a, Index b) const { return reach_[a * size() + b]; }
  bool less(Index a, Index b) const { return a != b && leq(a, b); }
  bool comparable(Index a, Index b) const { return leq(a, b) || leq(b, a); }
  // Linear extension used for dynamic programming over the order.
  const std::vector<Index>& topological_order() const noexcept { return topo_; }

 private:
  std::vector<std::string> labels_;
  std::vector<std::pair<Index, Index>> covers_;
  std::vector<std::vector<Index>> up_, down_, adj_;
  std::vector<char> reach_;
  std::vector<Index> topo_;
};

// A non-empty sorted set of element indices. Ordered lexicographically.
class Subposet {
 public:
  Subposet() = default;
  explicit Subposet(std::vector<Index> members);
  Subposet(std::initializer_list<Index> members) : Subposet(std::vector<Index>(members)) {}

  const std::vector<Index>& members() const noexcept { return m_; }
  std::size_t size() const noexcept { return m_.size(); }
  bool empty() const noexcept { return m_.empty(); }
  bool contains(Index i) const;
  bool includes(const Subposet& other) const;  // other is a subset of *this
  Subposet with(Index i) const;
  Subposet unite(const Subposet& other) const;

  auto operator<=>(const Subposet&) const = default;

 private:
  std::vector<Index> m_;
};

// Throws EmptySubset / InvalidIndex.
void check_subposet(const Poset& p, const Subposet& s);
Subposet subposet_of(const Poset& p, const std::vector<std::string>& labels);
Subposet whole(const Poset& p);

bool is_connected_subposet(const Poset& p, const Subposet& s);
bool is_interval(const Poset& p, const Subposet& s);

// Covers of the induced subposet: s<t in S with no r of S strictly between.
std::vector<std::pair<Index, Index>> induced_covers(const Poset& p, const Subposet& s);

// Throw NotConnected unless S is Hasse-connected.
std::vector<Index> neighborhood(const Poset& p, const Subposet& s);
std::size_t perimeter(const Poset& p, const Subposet& s);
std::vector<Subposet> entourage(const Poset& p, const Subposet& s, std::size_t n);

// size_cap bounds |S|; 0 means no bound.
std::vector<Subposet> enumerate_connected_subposets(const Poset& p, std::size_t size_cap);
std::vector<Subposet> enumerate_intervals(const Poset& p, std::size_t size_cap);
// Every J in Con(P) containing S, in lexicographic order.
std::vector<Subposet> connected_supersets(const Poset& p, const Subposet& s);

// Moebius function of Con^op(P), computed by the defining recursion with memoization.
class ConOpMobius {
 public:
  explicit ConOpMobius(const Poset& p) : p_(&p) {}
  // Throws NotNested unless I is a subset of J; NotConnected unless both are connected.
  std::int64_t operator()(const Subposet& j, const Subposet& i);

 private:
  std::int64_t eval(const Subposet& j, const Subposet& i);

  const Poset* p_;
  std::map<std::pair<Subposet, Subposet>, std::int64_t> memo_;
};

std::int64_t mobius_conop(const Poset& p, const Subposet& j, const Subposet& i);

using RankFn = std::function<std::int64_t(const Subposet&)>;

// rk(I) - sum rk(I^1) + sum rk(I^2) - ...
std::int64_t entourage_sum(const Poset& p, const Subposet& s, const RankFn& rk);
// sum over connected J containing I of rk(J) mu(J,I).
std::int64_t mobius_sum(const Poset& p, const Subposet& s, const RankFn& rk, ConOpMobius* mu = nullptr);

}  // namespace genrank
