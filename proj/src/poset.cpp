#include "genrank/poset.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_map>

#include "genrank/error.hpp"

namespace genrank {

Poset Poset::build(std::vector<std::string> elements,
                   const std::vector<std::pair<std::string, std::string>>& relations) {
  Poset p;
  p.labels_ = std::move(elements);
  const std::size_t n = p.labels_.size();
  std::unordered_map<std::string, Index> idx;
  for (Index i = 0; i < n; ++i)
    if (!idx.emplace(p.labels_[i], i).second) throw Error(Errc::DuplicateElement, "duplicate element '" + p.labels_[i] + "'");

  std::vector<std::vector<Index>> succ(n);
  for (const auto& [a, b] : relations) {
    auto ia = idx.find(a), ib = idx.find(b);
    if (ia == idx.end()) throw Error(Errc::UnknownElement, "relation mentions unknown element '" + a + "'");
    if (ib == idx.end()) throw Error(Errc::UnknownElement, "relation mentions unknown element '" + b + "'");
    if (ia->second != ib->second) succ[ia->second].push_back(ib->second);
  }

  p.reach_.assign(n * n, 0);
  for (Index s = 0; s < n; ++s) {
    std::vector<Index> stack{s};
    p.reach_[s * n + s] = 1;
    while (!stack.empty()) {
      Index u = stack.back();
      stack.pop_back();
      for (Index v : succ[u]) {
        if (v == s) throw Error(Errc::CycleDetected, "relations form a cycle through '" + p.labels_[s] + "'");
        if (!p.reach_[s * n + v]) {
          p.reach_[s * n + v] = 1;
          stack.push_back(v);
        }
      }
    }
  }

  p.up_.assign(n, {});
  p.down_.assign(n, {});
  p.adj_.assign(n, {});
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      if (!p.less(a, b)) continue;
      bool cover = true;
      for (Index c = 0; c < n && cover; ++c)
        if (p.less(a, c) && p.less(c, b)) cover = false;
      if (!cover) continue;
      p.covers_.emplace_back(a, b);
      p.up_[a].push_back(b);
      p.down_[b].push_back(a);
      p.adj_[a].push_back(b);
      p.adj_[b].push_back(a);
    }
  for (auto& v : p.adj_) std::sort(v.begin(), v.end());

  // Kahn's algorithm on covers, smallest index first.
  std::vector<std::size_t> indeg(n);
  for (Index i = 0; i < n; ++i) indeg[i] = p.down_[i].size();
  std::set<Index> ready;
  for (Index i = 0; i < n; ++i)
    if (!indeg[i]) ready.insert(i);
  while (!ready.empty()) {
    Index u = *ready.begin();
    ready.erase(ready.begin());
    p.topo_.push_back(u);
    for (Index v : p.up_[u])
      if (--indeg[v] == 0) ready.insert(v);
  }
  return p;
}

std::optional<Index> Poset::find(std::string_view label) const {
  for (Index i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

Index Poset::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw Error(Errc::UnknownElement, "unknown element '" + std::string(label) + "'");
}

std::optional<std::size_t> Poset::cover_id(Index lo, Index hi) const {
  auto it = std::lower_bound(covers_.begin(), covers_.end(), std::make_pair(lo, hi));
  if (it == covers_.end() || *it != std::make_pair(lo, hi)) return std::nullopt;
  return static_cast<std::size_t>(it - covers_.begin());
}

Subposet::Subposet(std::vector<Index> members) : m_(std::move(members)) {
  std::sort(m_.begin(), m_.end());
  m_.erase(std::unique(m_.begin(), m_.end()), m_.end());
}

bool Subposet::contains(Index i) const { return std::binary_search(m_.begin(), m_.end(), i); }

bool Subposet::includes(const Subposet& other) const {
  return std::includes(m_.begin(), m_.end(), other.m_.begin(), other.m_.end());
}

Subposet Subposet::with(Index i) const {
  auto v = m_;
  v.push_back(i);
  return Subposet(std::move(v));
}

Subposet Subposet::unite(const Subposet& other) const {
  auto v = m_;
  v.insert(v.end(), other.m_.begin(), other.m_.end());
  return Subposet(std::move(v));
}

void check_subposet(const Poset& p, const Subposet& s) {
  if (s.empty()) throw Error(Errc::EmptySubset, "subposet is empty");
  if (s.members().back() >= p.size()) throw Error(Errc::InvalidIndex, "subposet index out of range");
}

Subposet subposet_of(const Poset& p, const std::vector<std::string>& labels) {
  std::vector<Index> v;
  for (const auto& l : labels) v.push_back(p.index_of(l));
  return Subposet(std::move(v));
}

Subposet whole(const Poset& p) {
  std::vector<Index> v(p.size());
  for (Index i = 0; i < p.size(); ++i) v[i] = i;
  return Subposet(std::move(v));
}

namespace {

template <class Adjacent>
bool bfs_connected(const Subposet& s, Adjacent adjacent) {
  const auto& m = s.members();
  std::vector<char> seen(m.size(), 0);
  std::deque<std::size_t> q{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!q.empty()) {
    std::size_t u = q.front();
    q.pop_front();
    for (std::size_t v = 0; v < m.size(); ++v)
      if (!seen[v] && adjacent(m[u], m[v])) {
        seen[v] = 1;
        ++count;
        q.push_back(v);
      }
  }
  return count == m.size();
}

bool hasse_adjacent(const Poset& p, Index a, Index b) {
  const auto& n = p.hasse_neighbors(a);
  return std::binary_search(n.begin(), n.end(), b);
}

void require_connected(const Poset& p, const Subposet& s) {
  check_subposet(p, s);
  if (!is_connected_subposet(p, s)) throw Error(Errc::NotConnected, "subposet is not Hasse-connected");
}

// All connected sets obtained from `seed` by adding Hasse neighbours drawn from `allowed`.
std::set<Subposet> grow(const Poset& p, const Subposet& seed, const std::vector<char>& allowed, std::size_t cap) {
  std::set<Subposet> out{seed};
  std::vector<Subposet> frontier{seed};
  while (!frontier.empty()) {
    Subposet cur = std::move(frontier.back());
    frontier.pop_back();
    if (cur.size() >= cap) continue;
    for (Index u : cur.members())
      for (Index v : p.hasse_neighbors(u)) {
        if (!allowed[v] || cur.contains(v)) continue;
        Subposet next = cur.with(v);
        if (out.insert(next).second) frontier.push_back(std::move(next));
      }
  }
  return out;
}

}  // namespace

bool is_connected_subposet(const Poset& p, const Subposet& s) {
  check_subposet(p, s);
  return bfs_connected(s, [&](Index a, Index b) { return hasse_adjacent(p, a, b); });
}

bool is_interval(const Poset& p, const Subposet& s) {
  check_subposet(p, s);
  for (Index r : s.members())
    for (Index t : s.members()) {
      if (!p.less(r, t)) continue;
      for (Index x = 0; x < p.size(); ++x)
        if (p.less(r, x) && p.less(x, t) && !s.contains(x)) return false;
    }
  return bfs_connected(s, [&](Index a, Index b) { return p.comparable(a, b); });
}

std::vector<std::pair<Index, Index>> induced_covers(const Poset& p, const Subposet& s) {
  std::vector<std::pair<Index, Index>> out;
  for (Index a : s.members())
    for (Index b : s.members()) {
      if (!p.less(a, b)) continue;
      bool cover = true;
      for (Index c : s.members())
        if (p.less(a, c) && p.less(c, b)) {
          cover = false;
          break;
        }
      if (cover) out.emplace_back(a, b);
    }
  return out;
}

std::vector<Index> neighborhood(const Poset& p, const Subposet& s) {
  require_connected(p, s);
  std::set<Index> nbd;
  for (Index u : s.members())
    for (Index v : p.hasse_neighbors(u))
      if (!s.contains(v)) nbd.insert(v);
  return {nbd.begin(), nbd.end()};
}

std::size_t perimeter(const Poset& p, const Subposet& s) { return neighborhood(p, s).size(); }

std::vector<Subposet> entourage(const Poset& p, const Subposet& s, std::size_t n) {
  auto nbd = neighborhood(p, s);
  std::vector<Subposet> out;
  if (n == 0 || n > nbd.size()) return out;
  std::vector<char> pick(nbd.size(), 0);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(n), 1);
  do {
    auto v = s.members();
    for (std::size_t k = 0; k < nbd.size(); ++k)
      if (pick[k]) v.push_back(nbd[k]);
    out.emplace_back(std::move(v));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subposet> enumerate_connected_subposets(const Poset& p, std::size_t size_cap) {
  std::set<Subposet> all;
  std::vector<char> allowed(p.size(), 1);
  if (size_cap == 0) size_cap = p.size();
  for (Index i = 0; i < p.size(); ++i) all.merge(grow(p, Subposet{i}, allowed, size_cap));
  return {all.begin(), all.end()};
}

std::vector<Subposet> enumerate_intervals(const Poset& p, std::size_t size_cap) {
  std::vector<Subposet> out;
  for (auto& s : enumerate_connected_subposets(p, size_cap))
    if (is_interval(p, s)) out.push_back(s);
  return out;
}

std::vector<Subposet> connected_supersets(const Poset& p, const Subposet& s) {
  require_connected(p, s);
  std::vector<char> allowed(p.size(), 1);
  auto all = grow(p, s, allowed, p.size());
  return {all.begin(), all.end()};
}

std::int64_t ConOpMobius::operator()(const Subposet& j, const Subposet& i) {
  require_connected(*p_, i);
  require_connected(*p_, j);
  if (!j.includes(i)) throw Error(Errc::NotNested, "mobius(J,I) requires I to be a subset of J");
  return eval(j, i);
}

std::int64_t ConOpMobius::eval(const Subposet& j, const Subposet& i) {
  if (j == i) return 1;
  auto key = std::make_pair(j, i);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  // mu(J,I) = -sum over connected K with J >= K > I of mu(J,K).
  std::vector<char> allowed(p_->size(), 0);
  for (Index x : j.members()) allowed[x] = 1;
  std::int64_t sum = 0;
  for (const auto& k : grow(*p_, i, allowed, j.size()))
    if (k != i) sum += eval(j, k);
  memo_.emplace(std::move(key), -sum);
  return -sum;
}

std::int64_t mobius_conop(const Poset& p, const Subposet& j, const Subposet& i) {
  ConOpMobius mu(p);
  return mu(j, i);
}

std::int64_t entourage_sum(const Poset& p, const Subposet& s, const RankFn& rk) {
  auto nbd = neighborhood(p, s);
  std::int64_t total = rk(s);
  for (std::size_t n = 1; n <= nbd.size(); ++n) {
    std::int64_t sign = (n % 2) ? -1 : 1;
    for (const auto& j : entourage(p, s, n)) total += sign * rk(j);
  }
  return total;
}

std::int64_t mobius_sum(const Poset& p, const Subposet& s, const RankFn& rk, ConOpMobius* mu) {
  ConOpMobius local(p);
  ConOpMobius& m = mu ? *mu : local;
  std::int64_t total = 0;
  for (const auto& j : connected_supersets(p, s)) {
    std::int64_t coeff = m(j, s);
    if (coeff) total += coeff * rk(j);
  }
  return total;
}

}  // namespace genrank
